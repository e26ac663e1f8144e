//! Exact monomial and monomial-ideal arithmetic.
//!
//! A [`Monomial`] is an exponent vector over a ring of fixed arity. A
//! [`MonomialIdeal`] is an ordered list of generators; the order is kept
//! because the syzygy recursion and the table method both walk generators
//! in sequence, even though every Hilbert function is order independent.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Largest total degree accepted for a monomial built from user input.
pub const MAX_DEGREE: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge { degree: u64 },
    #[error("exponent overflow")]
    Overflow,
    #[error("stage {stage} out of range 1..={arity}")]
    StageOutOfRange { stage: usize, arity: usize },
    #[error("{0:?} is not a permutation of 0..{1}")]
    NotAPermutation(Vec<usize>, usize),
}

/// A monomial `x_0^e_0 * ... * x_{n-1}^e_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial, rejecting total degrees above [`MAX_DEGREE`].
    pub fn new(exponents: Vec<u32>) -> Result<Self, MonomialError> {
        let m = Self { exponents };
        let degree = m.degree();
        if degree > MAX_DEGREE {
            return Err(MonomialError::DegreeTooLarge { degree });
        }
        Ok(m)
    }

    /// The constant monomial `1` in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Self {
            exponents: vec![0; arity],
        }
    }

    /// The variable `x_index` in `arity` variables.
    pub fn var(index: usize, arity: usize) -> Self {
        let mut exponents = vec![0; arity];
        exponents[index] = 1;
        Self { exponents }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// True when every exponent is 0 or 1.
    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// One past the largest variable index in the support; 0 for the constant.
    pub fn stage(&self) -> usize {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |i| i + 1)
    }

    fn check_arity(&self, other: &Self) -> Result<(), MonomialError> {
        if self.arity() != other.arity() {
            return Err(MonomialError::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool, MonomialError> {
        self.check_arity(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self, MonomialError> {
        self.check_arity(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MonomialError> {
        self.check_arity(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(MonomialError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { exponents })
    }

    /// `lcm(self, other) / other`, the syzygy quotient `m_ij` with
    /// `self = p_i` and `other = p_j`.
    pub fn syzygy_quotient(&self, other: &Self) -> Result<Self, MonomialError> {
        self.check_arity(other)?;
        Ok(self.syzygy_quotient_unchecked(other))
    }

    pub(crate) fn syzygy_quotient_unchecked(&self, other: &Self) -> Self {
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Divides by `x_var` once. `None` when `x_var` does not divide `self`.
    pub fn divide_by_var(&self, var: usize) -> Option<Self> {
        let e = *self.exponents.get(var)?;
        if e == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[var] -= 1;
        Some(Self { exponents })
    }

    /// Keeps the first `arity` exponents.
    pub fn truncate(&self, arity: usize) -> Self {
        Self {
            exponents: self.exponents[..arity].to_vec(),
        }
    }

    /// Re-expresses the monomial in the coordinates of `order`: position `k`
    /// of the result holds the exponent of variable `order[k]`.
    pub fn permuted(&self, order: &VariableOrder) -> Self {
        Self {
            exponents: order
                .as_slice()
                .iter()
                .map(|&v| self.exponents[v])
                .collect(),
        }
    }

    /// Moves the exponent of variable `v` to position `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut exponents = vec![0; self.arity()];
        for (v, &e) in self.exponents.iter().enumerate() {
            exponents[perm[v]] = e;
        }
        Self { exponents }
    }
}

/// Generic `x0^a*x1^b` rendering; use the parser's renderer for named variables.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A permutation of `0..arity` giving the order in which variables are
/// introduced when building a Hilbert function table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableOrder(Vec<usize>);

impl VariableOrder {
    pub fn new(perm: Vec<usize>) -> Result<Self, MonomialError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(MonomialError::NotAPermutation(perm, n));
            }
            seen[v] = true;
        }
        Ok(Self(perm))
    }

    pub fn identity(arity: usize) -> Self {
        Self((0..arity).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// A monomial ideal `<p_1, ..., p_r>` in `arity` variables.
///
/// An empty generator list is the zero ideal. A constant generator makes
/// the ideal the unit ideal, whose quotient is the zero ring. Arity 0 is
/// allowed and stands for the field itself; it arises as the coefficient
/// ring of the first stage of a Hilbert function table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(arity: usize, generators: Vec<Monomial>) -> Result<Self, MonomialError> {
        if let Some(g) = generators.iter().find(|g| g.arity() != arity) {
            return Err(MonomialError::ArityMismatch {
                left: arity,
                right: g.arity(),
            });
        }
        Ok(Self { arity, generators })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(
        arity: usize,
        generators: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self, MonomialError> {
        let gens = generators
            .into_iter()
            .map(Monomial::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(arity, gens)
    }

    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            generators: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        Self {
            arity,
            generators: vec![Monomial::one(arity)],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when some generator is the constant monomial.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool, MonomialError> {
        if m.arity() != self.arity {
            return Err(MonomialError::ArityMismatch {
                left: self.arity,
                right: m.arity(),
            });
        }
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// Drops every generator divisible by another one, keeping the earliest
    /// copy of exact duplicates. Surviving generators keep their order.
    pub fn minimalize(&self) -> Self {
        let gens = &self.generators;
        let generators = gens
            .iter()
            .enumerate()
            .filter(|&(i, g)| {
                !gens
                    .iter()
                    .enumerate()
                    .any(|(j, h)| j != i && h.divides_unchecked(g) && (h != g || j < i))
            })
            .map(|(_, g)| g.clone())
            .collect();
        Self {
            arity: self.arity,
            generators,
        }
    }

    /// Minimal generators sorted lexicographically by exponent vector. Two
    /// ideals are equal iff their canonical forms are equal.
    pub fn canonical(&self) -> Self {
        let mut ideal = self.minimalize();
        ideal.generators.sort_unstable_by(|a, b| b.cmp(a));
        ideal
    }

    /// The generators supported on the first `stage` variables of `order`,
    /// presented in arity `stage` with variables in `order`'s sequence.
    pub fn restrict(&self, order: &VariableOrder, stage: usize) -> Result<Self, MonomialError> {
        self.check_order(order)?;
        if stage == 0 || stage > self.arity {
            return Err(MonomialError::StageOutOfRange {
                stage,
                arity: self.arity,
            });
        }
        Ok(self.permuted(order).restrict_prefix(stage))
    }

    /// Same as [`restrict`](Self::restrict) for the identity order, but also
    /// accepts `stage == 0`.
    pub(crate) fn restrict_prefix(&self, stage: usize) -> Self {
        let generators = self
            .generators
            .iter()
            .filter(|g| g.stage() <= stage)
            .map(|g| g.truncate(stage))
            .collect();
        Self {
            arity: stage,
            generators,
        }
    }

    /// Rewrites every generator in the coordinates of `order`.
    pub fn permuted(&self, order: &VariableOrder) -> Self {
        Self {
            arity: self.arity,
            generators: self.generators.iter().map(|g| g.permuted(order)).collect(),
        }
    }

    /// Applies a variable relabelling `v -> perm[v]` to every generator.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        Self {
            arity: self.arity,
            generators: self.generators.iter().map(|g| g.relabel(perm)).collect(),
        }
    }

    pub fn with_generators(&self, generators: Vec<Monomial>) -> Result<Self, MonomialError> {
        Self::new(self.arity, generators)
    }

    fn check_order(&self, order: &VariableOrder) -> Result<(), MonomialError> {
        if order.arity() != self.arity {
            return Err(MonomialError::ArityMismatch {
                left: self.arity,
                right: order.arity(),
            });
        }
        Ok(())
    }

    /// Stably re-orders generators so that they are grouped by the stage
    /// (in `order`) at which they first appear and, within one stage `a`,
    /// sorted by non-decreasing exponent of the stage variable `x_a`.
    ///
    /// With this ordering no syzygy quotient `m_ij` (`i < j`, both in `S_a`)
    /// involves `x_a`.
    pub fn reindex_for_table(&self, order: &VariableOrder) -> Result<Self, MonomialError> {
        self.check_order(order)?;
        let mut keyed: Vec<((usize, u32), &Monomial)> = self
            .generators
            .iter()
            .map(|g| (table_key(&g.permuted(order)), g))
            .collect();
        keyed.sort_by_key(|k| k.0);
        Ok(Self {
            arity: self.arity,
            generators: keyed.into_iter().map(|(_, g)| g.clone()).collect(),
        })
    }
}

/// (stage, exponent of the stage variable) for a generator already in order
/// coordinates.
pub(crate) fn table_key(g: &Monomial) -> (usize, u32) {
    let stage = g.stage();
    let e = if stage == 0 { 0 } else { g.exponent(stage - 1) };
    (stage, e)
}

/// Lexicographic comparison on exponent vectors.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponents.cmp(&b.exponents)
}
