#![allow(dead_code)]

use hilbert_core::{Count, Monomial, MonomialIdeal};
use proptest::prelude::*;

pub fn monomial(arity: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity).prop_map(|e| Monomial::new(e).unwrap())
}

/// Arity `1..=max_arity`, up to `max_gens` generators, exponents `0..=max_exp`.
pub fn ideal(
    max_arity: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_arity).prop_flat_map(move |a| ideal_of_arity(a, max_gens, max_exp))
}

pub fn ideal_of_arity(
    arity: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(arity, max_exp), 0..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(arity, gens).unwrap())
}

/// A permutation of `0..n`.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn seq(v: &[u64]) -> Vec<Count> {
    v.iter().map(|&x| Count::from(x)).collect()
}
