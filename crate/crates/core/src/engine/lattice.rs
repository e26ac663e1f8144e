//! The lcm lattice and inclusion-exclusion.
//!
//! Layer `r` holds `lcm(p_{j_1}, ..., p_{j_r})` for every `r`-subset of the
//! generators, so layer sizes are `C(n, 1), ..., C(n, n)`. Since
//! `<u> ∩ <v> = <lcm(u, v)>`,
//!
//! ```text
//! HF(k[x]/I, b) = F(a, b) - sum_r (-1)^(r-1) sum_{|S| = r} F(a, b - deg lcm(S))
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use super::HfError;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::pascal::{pascal_row, shifted, Count};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEntry {
    pub monomial: Monomial,
    pub degree: u64,
    /// Bit `i` set iff generator `i` is in the subset.
    pub subset: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    arity: usize,
    generators: usize,
    layers: Vec<Vec<LatticeEntry>>,
}

/// Depth-first walk over nonempty subsets in lexicographic order of their
/// index tuples; `visit(r, lcm, mask)` is called once per subset of size `r`.
fn walk_subsets<F>(gens: &[Monomial], mut visit: F)
where
    F: FnMut(usize, &Monomial, u32),
{
    fn go<F: FnMut(usize, &Monomial, u32)>(
        gens: &[Monomial],
        start: usize,
        acc: &Monomial,
        mask: u32,
        size: usize,
        visit: &mut F,
    ) {
        for i in start..gens.len() {
            let lcm = acc.lcm_unchecked(&gens[i]);
            let mask = mask | (1 << i);
            visit(size + 1, &lcm, mask);
            go(gens, i + 1, &lcm, mask, size + 1, visit);
        }
    }
    if let Some(first) = gens.first() {
        let one = Monomial::one(first.arity());
        go(gens, 0, &one, 0, 0, &mut visit);
    }
}

fn check_cap(ideal: &MonomialIdeal, cap: usize) -> Result<(), HfError> {
    // subset masks are u32
    let cap = cap.min(31);
    if ideal.len() > cap {
        return Err(HfError::LatticeCap {
            generators: ideal.len(),
            cap,
        });
    }
    Ok(())
}

/// Every nonempty-subset lcm of the generators, grouped by subset size.
pub fn build_lcm_lattice(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice, HfError> {
    check_cap(ideal, cap)?;
    let n = ideal.len();
    let mut layers: Vec<Vec<LatticeEntry>> = vec![Vec::new(); n];
    walk_subsets(ideal.generators(), |r, lcm, subset| {
        layers[r - 1].push(LatticeEntry {
            monomial: lcm.clone(),
            degree: lcm.degree(),
            subset,
        })
    });
    Ok(LcmLattice {
        arity: ideal.arity(),
        generators: n,
        layers,
    })
}

/// Net coefficient of `t^d` in `sum_{S nonempty} (-1)^(|S|-1) t^(deg lcm S)`.
pub(crate) fn signed_lcm_degrees(
    ideal: &MonomialIdeal,
    cap: usize,
) -> Result<BTreeMap<u64, i64>, HfError> {
    check_cap(ideal, cap)?;
    let mut acc = BTreeMap::new();
    walk_subsets(ideal.generators(), |r, lcm, _| {
        let sign = if r % 2 == 1 { 1 } else { -1 };
        *acc.entry(lcm.degree()).or_insert(0) += sign;
    });
    acc.retain(|_, c| *c != 0);
    Ok(acc)
}

/// A pair of equal-degree entries in adjacent layers, removed from the
/// alternating sum because their contributions cancel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancelledPair {
    /// 1-based index of the lower layer; the other entry sits in layer + 1.
    pub layer: usize,
    pub degree: u64,
    pub lower: Monomial,
    pub upper: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cancellation {
    pub pairs: Vec<CancelledPair>,
    /// Surviving entries, same layer indexing as the lattice.
    pub remaining: Vec<Vec<LatticeEntry>>,
}

impl LcmLattice {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    /// Layer `r` for `r = 1..=n`.
    pub fn layer(&self, r: usize) -> Option<&[LatticeEntry]> {
        self.layers.get(r.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn layers(&self) -> &[Vec<LatticeEntry>] {
        &self.layers
    }

    /// Total number of entries, `2^n - 1`.
    pub fn subset_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Removes equal-degree pairs between adjacent layers, working upward
    /// from layers (1, 2). Identical monomials are paired before merely
    /// equal-degree ones; within each pass entries are taken in layer order.
    pub fn cancel_adjacent(&self) -> Cancellation {
        let mut alive: Vec<Vec<bool>> = self.layers.iter().map(|l| vec![true; l.len()]).collect();
        let mut pairs = Vec::new();
        for r in 0..self.layers.len().saturating_sub(1) {
            let (lower, upper) = (&self.layers[r], &self.layers[r + 1]);
            for identical in [true, false] {
                for (i, lo) in lower.iter().enumerate() {
                    if !alive[r][i] {
                        continue;
                    }
                    let hit = upper.iter().enumerate().position(|(k, up)| {
                        alive[r + 1][k]
                            && if identical {
                                up.monomial == lo.monomial
                            } else {
                                up.degree == lo.degree
                            }
                    });
                    if let Some(k) = hit {
                        alive[r][i] = false;
                        alive[r + 1][k] = false;
                        pairs.push(CancelledPair {
                            layer: r + 1,
                            degree: lo.degree,
                            lower: lo.monomial.clone(),
                            upper: upper[k].monomial.clone(),
                        });
                    }
                }
            }
        }
        let remaining = self
            .layers
            .iter()
            .zip(&alive)
            .map(|(layer, keep)| {
                layer
                    .iter()
                    .zip(keep)
                    .filter(|(_, &k)| k)
                    .map(|(e, _)| e.clone())
                    .collect()
            })
            .collect();
        Cancellation { pairs, remaining }
    }
}

fn signed_degrees_of(layers: &[Vec<LatticeEntry>]) -> BTreeMap<u64, i64> {
    let mut acc = BTreeMap::new();
    for (r, layer) in layers.iter().enumerate() {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        for e in layer {
            *acc.entry(e.degree).or_insert(0) += sign;
        }
    }
    acc
}

/// `F(a, b) - sum_d c_d F(a, b - d)` for `b = 0..=b_max`.
pub(crate) fn evaluate_signed_degrees(
    arity: usize,
    coeffs: &BTreeMap<u64, i64>,
    b_max: usize,
) -> Vec<Count> {
    let row = pascal_row(arity, b_max);
    (0..=b_max)
        .into_par_iter()
        .map(|b| {
            let mut v = BigInt::from(row[b].clone());
            for (&d, &c) in coeffs {
                if let Some(f) = shifted(&row, b, d) {
                    v -= BigInt::from(c) * BigInt::from(f.clone());
                }
            }
            assert!(
                !v.is_negative(),
                "inclusion-exclusion went negative at b={b}"
            );
            v.to_biguint().expect("non-negative")
        })
        .collect()
}

/// Hilbert function by inclusion-exclusion over the lcm lattice. With
/// `cancel`, adjacent-layer equal-degree pairs are dropped first; the result
/// is the same either way.
pub fn hf_lcm_lattice(
    ideal: &MonomialIdeal,
    b_max: usize,
    cancel: bool,
    cap: usize,
) -> Result<Vec<Count>, HfError> {
    let coeffs = if cancel {
        let lattice = build_lcm_lattice(ideal, cap)?;
        signed_degrees_of(&lattice.cancel_adjacent().remaining)
    } else {
        signed_lcm_degrees(ideal, cap)?
    };
    Ok(evaluate_signed_degrees(ideal.arity(), &coeffs, b_max))
}
