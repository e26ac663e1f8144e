//! The Pascal table `F(a, b)`, the number of degree-`b` monomials in `a`
//! variables, and the closed forms built from it.
//!
//! `F(a, b) = 0` for `b < 0` everywhere in this crate, which lets every
//! shifted Hilbert function be written without case analysis.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

/// An exact non-negative count (a Hilbert function value).
pub type Count = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PascalError {
    #[error(
        "inconsistent degrees: need max(d_u, d_v) <= d_lcm <= d_u + d_v, got d_u={d_u}, d_v={d_v}, d_lcm={d_lcm}"
    )]
    InconsistentDegrees { d_u: u64, d_v: u64, d_lcm: u64 },
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `F(a, b) = C(a - 1 + b, b)`, and 0 for negative `b`.
///
/// `a = 0` is the field itself: `F(0, 0) = 1` and `F(0, b) = 0` otherwise.
pub fn pascal_f(a: usize, b: i64) -> Count {
    if b < 0 {
        return Count::zero();
    }
    if a == 0 {
        return if b == 0 { Count::one() } else { Count::zero() };
    }
    let b = b as u64;
    binomial(a as u64 - 1 + b, b)
}

/// `F(a, 0..=b_max)` using `F(a, b) = F(a, b - 1) * (a - 1 + b) / b`.
pub fn pascal_row(a: usize, b_max: usize) -> Vec<Count> {
    let mut row = Vec::with_capacity(b_max + 1);
    if a == 0 {
        row.push(Count::one());
        row.resize(b_max + 1, Count::zero());
        return row;
    }
    let mut cur = Count::one();
    row.push(cur.clone());
    for b in 1..=b_max as u64 {
        cur = cur * (a as u64 - 1 + b) / b;
        row.push(cur.clone());
    }
    row
}

/// Indexes a sequence at `b - shift`, treating negative positions as 0.
pub(crate) fn shifted(values: &[Count], b: usize, shift: u64) -> Option<&Count> {
    let b = b as u64;
    if shift > b {
        None
    } else {
        values.get((b - shift) as usize)
    }
}

/// The Pascal table with rows `a = 1..=a_max` and columns `b = 0..=b_max`,
/// filled by `F(a, b) = F(a - 1, b) + F(a, b - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalTable {
    rows: Vec<Vec<Count>>,
}

impl PascalTable {
    pub fn new(a_max: usize, b_max: usize) -> Self {
        let mut rows: Vec<Vec<Count>> = Vec::with_capacity(a_max);
        for a in 1..=a_max {
            let mut row = Vec::with_capacity(b_max + 1);
            for b in 0..=b_max {
                let v = if a == 1 || b == 0 {
                    Count::one()
                } else {
                    &rows[a - 2][b] + &row[b - 1]
                };
                row.push(v);
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn a_max(&self) -> usize {
        self.rows.len()
    }

    /// Entry `F(a, b)`; `a` is 1-based.
    pub fn get(&self, a: usize, b: usize) -> Option<&Count> {
        self.rows.get(a.checked_sub(1)?)?.get(b)
    }

    /// Row `a` (1-based).
    pub fn row(&self, a: usize) -> Option<&[Count]> {
        self.rows.get(a.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn rows(&self) -> &[Vec<Count>] {
        &self.rows
    }
}

pub fn pascal_table(a_max: usize, b_max: usize) -> PascalTable {
    PascalTable::new(a_max, b_max)
}

/// Which ascending-factorial expansion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscendingForm {
    /// `sum_{i=0}^{a-1} [b]^i / i!`
    ByB,
    /// `sum_{j=0}^{b} [a-1]^j / j!`
    ByA,
}

/// Evaluates `sum_{i=0}^{n} [x]^i / i!` exactly. Each summand is the
/// binomial `C(x + i - 1, i)`, so the running term stays integral when it is
/// multiplied by `x + i - 1` and then divided by `i`.
fn ascending_sum(x: u64, n: u64) -> Count {
    let mut term = Count::one();
    let mut sum = Count::one();
    for i in 1..=n {
        term = term * (x + i - 1) / i;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    sum
}

/// `F(a, b)` through one of the two ascending-factorial sums.
pub fn pascal_f_ascending(a: usize, b: usize, form: AscendingForm) -> Count {
    assert!(a >= 1, "pascal_f_ascending needs a >= 1");
    match form {
        AscendingForm::ByB => ascending_sum(b as u64, a as u64 - 1),
        AscendingForm::ByA => ascending_sum(a as u64 - 1, b as u64),
    }
}

fn to_count(v: BigInt) -> Count {
    v.to_biguint()
        .expect("Hilbert function value must be non-negative")
}

/// `HF(k[x_1..x_a]/<p>, b) = F(a, b) - F(a, b - d)` with `d = deg p`.
pub fn hf_principal(a: usize, d: u64, b: i64) -> Count {
    let v = BigInt::from(pascal_f(a, b)) - BigInt::from(pascal_f(a, b - d as i64));
    to_count(v)
}

/// Hilbert function of `k[x_1..x_a]/<u, v>` from the degrees of `u`, `v` and
/// `lcm(u, v)`.
pub fn hf_two_generators(
    a: usize,
    d_u: u64,
    d_v: u64,
    d_lcm: u64,
    b: i64,
) -> Result<Count, PascalError> {
    if d_lcm < d_u.max(d_v) || d_lcm > d_u + d_v {
        return Err(PascalError::InconsistentDegrees { d_u, d_v, d_lcm });
    }
    let f = |d: u64| BigInt::from(pascal_f(a, b - d as i64));
    Ok(to_count(f(0) - f(d_u) - f(d_v) + f(d_lcm)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A signed copy of the free module `k[x_1..x_arity](-shift)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftedFreeTerm {
    pub arity: usize,
    pub shift: u64,
    pub sign: Sign,
}

impl ShiftedFreeTerm {
    pub fn new(arity: usize, shift: u64, sign: Sign) -> Self {
        Self { arity, shift, sign }
    }
}

/// `sum sign * F(arity, b - shift)` over the given terms.
pub fn eval_shifted_terms(terms: &[ShiftedFreeTerm], b: i64) -> BigInt {
    terms.iter().fold(BigInt::zero(), |acc, t| {
        let f = BigInt::from(pascal_f(t.arity, b - t.shift as i64));
        match t.sign {
            Sign::Plus => acc + f,
            Sign::Minus => acc - f,
        }
    })
}
