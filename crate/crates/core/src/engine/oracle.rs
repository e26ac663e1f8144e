//! Brute-force Hilbert function: enumerate every monomial of degree `b` and
//! count the ones outside the ideal.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::HfError;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::pascal::{pascal_f, Count};

/// Iterator over the exponent vectors of all monomials of a fixed degree,
/// in lexicographically decreasing order (`x_0^b` first).
#[derive(Debug, Clone)]
pub struct MonomialsOfDegree {
    current: Option<Vec<u32>>,
}

impl MonomialsOfDegree {
    pub fn new(arity: usize, degree: u32) -> Self {
        let current = match arity {
            0 if degree > 0 => None,
            0 => Some(Vec::new()),
            _ => {
                let mut v = vec![0; arity];
                v[0] = degree;
                Some(v)
            }
        };
        Self { current }
    }
}

/// Steps to the lexicographic predecessor with the same degree.
fn advance(e: &mut [u32]) -> bool {
    let n = e.len();
    if n < 2 {
        return false;
    }
    // rightmost position i < n-1 with a positive exponent
    let Some(i) = (0..n - 1).rev().find(|&i| e[i] > 0) else {
        return false;
    };
    let tail = e[n - 1];
    e[n - 1] = 0;
    e[i] -= 1;
    e[i + 1] = tail + 1;
    true
}

impl Iterator for MonomialsOfDegree {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        self.current = advance(&mut next).then_some(next);
        Some(Monomial::new(out).expect("degree bounded by input"))
    }
}

fn in_ideal(gens: &[Monomial], exps: &[u32]) -> bool {
    gens.iter()
        .any(|g| g.exponents().iter().zip(exps).all(|(a, b)| a <= b))
}

/// (inside, outside) counts of the degree-`degree` monomials whose first
/// exponent is `lead`.
fn count_with_lead(gens: &[Monomial], arity: usize, degree: u32, lead: u32) -> (u64, u64) {
    let mut inside = 0u64;
    let mut outside = 0u64;
    let mut e = vec![0u32; arity];
    e[0] = lead;
    let rest = degree - lead;
    if arity == 1 {
        if rest != 0 {
            return (0, 0);
        }
    } else {
        e[1] = rest;
    }
    loop {
        if in_ideal(gens, &e) {
            inside += 1;
        } else {
            outside += 1;
        }
        if arity == 1 || !advance(&mut e[1..]) {
            break;
        }
    }
    (inside, outside)
}

/// (in ideal, outside ideal) counts at one degree, parallel over the
/// exponent of the first variable.
fn split_counts(ideal: &MonomialIdeal, degree: usize, cap: u64) -> Result<(u64, u64), HfError> {
    let total = pascal_f(ideal.arity(), degree as i64);
    if total > BigUint::from(cap) {
        return Err(HfError::EnumerationCap {
            required: total,
            cap,
        });
    }
    let arity = ideal.arity();
    let degree = u32::try_from(degree).expect("degree fits u32 under the cap");
    if arity == 0 {
        return Ok(if degree > 0 {
            (0, 0)
        } else if ideal.is_unit() {
            (1, 0)
        } else {
            (0, 1)
        });
    }
    let gens = ideal.generators();
    Ok((0..=degree)
        .into_par_iter()
        .map(|lead| count_with_lead(gens, arity, degree, lead))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1)))
}

/// Number of degree-`b` monomials not in `ideal`, by enumeration.
///
/// Refuses with [`HfError::EnumerationCap`] when there are more than `cap`
/// monomials to visit.
pub fn hf_oracle(ideal: &MonomialIdeal, b: usize, cap: u64) -> Result<Count, HfError> {
    Ok(Count::from(split_counts(ideal, b, cap)?.1))
}

/// Number of degree-`b` monomials in `ideal`, by enumeration.
pub fn count_in_ideal(ideal: &MonomialIdeal, b: usize, cap: u64) -> Result<Count, HfError> {
    Ok(Count::from(split_counts(ideal, b, cap)?.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(arity, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn enumeration_visits_every_monomial_once() {
        for arity in 0..5 {
            for degree in 0..7u32 {
                let all: Vec<_> = MonomialsOfDegree::new(arity, degree).collect();
                assert_eq!(
                    Count::from(all.len()),
                    pascal_f(arity, i64::from(degree)),
                    "arity {arity} degree {degree}"
                );
                assert!(all.iter().all(|m| m.degree() == u64::from(degree)));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len());
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert_eq!(hf_oracle(&i, 3, u64::MAX).unwrap(), Count::from(6u32));
        for b in 0..5 {
            assert_eq!(
                hf_oracle(&MonomialIdeal::unit(3), b, u64::MAX).unwrap(),
                Count::from(0u32)
            );
        }
    }

    #[test]
    fn oracle_degree_four_of_three_generator_ideal() {
        // x^2yz^3, x^3z, y^2z^2: of the 15 degree-4 monomials only x^3z and
        // y^2z^2 lie in the ideal, so HF = 13.
        let i = ideal(3, &[&[2, 1, 3], &[3, 0, 1], &[0, 2, 2]]);
        let members: Vec<_> = MonomialsOfDegree::new(3, 4)
            .filter(|m| i.contains(m).unwrap())
            .collect();
        assert_eq!(
            members,
            vec![
                Monomial::new(vec![3, 0, 1]).unwrap(),
                Monomial::new(vec![0, 2, 2]).unwrap()
            ]
        );
        assert_eq!(hf_oracle(&i, 4, u64::MAX).unwrap(), Count::from(13u32));
        assert_eq!(count_in_ideal(&i, 4, u64::MAX).unwrap(), Count::from(2u32));
    }

    #[test]
    fn cap_is_enforced() {
        let i = MonomialIdeal::zero(10);
        // F(10, 10) = 92378
        assert!(hf_oracle(&i, 10, 92_378).is_ok());
        assert!(matches!(
            hf_oracle(&i, 10, 92_377),
            Err(HfError::EnumerationCap { cap: 92_377, .. })
        ));
    }
}
