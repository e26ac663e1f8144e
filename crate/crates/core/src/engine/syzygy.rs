//! The syzygy recursion.
//!
//! For `I = <p_1, ..., p_r>` with `d_j = deg p_j` and
//! `m_ij = lcm(p_i, p_j) / p_j`:
//!
//! ```text
//! HF(k[x]/I, t) = F(a, t) - F(a, t - d_1)
//!               - sum_{j=2}^{r} HF(k[x]/<m_1j, ..., m_(j-1)j>, t - d_j)
//! ```
//!
//! Each sub-ideal has fewer generators than `I`, so the recursion ends at
//! principal ideals. Sub-ideals are canonicalized (minimal generators, sorted)
//! and memoized; the same syzygy ideals show up many times.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::monomial::MonomialIdeal;
use crate::pascal::{hf_principal, pascal_row, shifted, Count};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SyzygyStats {
    /// Sub-problems requested, including the top-level call.
    pub calls: u64,
    /// Requests answered from the memo.
    pub hits: u64,
    /// Largest number of memo entries held at once.
    pub peak_entries: usize,
}

impl SyzygyStats {
    pub fn hit_rate(&self) -> f64 {
        if self.calls == 0 {
            0.0
        } else {
            self.hits as f64 / self.calls as f64
        }
    }
}

#[derive(Debug, Default)]
pub struct SyzygySolver {
    memo: HashMap<MonomialIdeal, Vec<Count>>,
    stats: SyzygyStats,
}

impl SyzygySolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stats(&self) -> SyzygyStats {
        self.stats
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    /// `HF(k[x]/I, t)` for `t = 0..=b_max`.
    pub fn solve(&mut self, ideal: &MonomialIdeal, b_max: usize) -> Vec<Count> {
        self.stats.calls += 1;
        let key = ideal.canonical();
        if let Some(v) = self.memo.get(&key) {
            if v.len() > b_max {
                self.stats.hits += 1;
                return v[..=b_max].to_vec();
            }
        }
        let values = self.compute(&key, b_max);
        self.memo.insert(key, values.clone());
        self.stats.peak_entries = self.stats.peak_entries.max(self.memo.len());
        values
    }

    fn compute(&mut self, ideal: &MonomialIdeal, b_max: usize) -> Vec<Count> {
        let a = ideal.arity();
        let gens = ideal.generators();
        match gens {
            [] => return pascal_row(a, b_max),
            [p] => {
                return (0..=b_max as i64)
                    .map(|t| hf_principal(a, p.degree(), t))
                    .collect()
            }
            _ => {}
        }
        let row = pascal_row(a, b_max);
        let mut acc: Vec<BigInt> = row.iter().cloned().map(BigInt::from).collect();
        let d1 = gens[0].degree();
        for (t, v) in acc.iter_mut().enumerate() {
            if let Some(f) = shifted(&row, t, d1) {
                *v -= BigInt::from(f.clone());
            }
        }
        for (j, pj) in gens.iter().enumerate().skip(1) {
            let dj = pj.degree();
            if dj > b_max as u64 {
                continue;
            }
            let syzygies = gens[..j]
                .iter()
                .map(|pi| pi.syzygy_quotient_unchecked(pj))
                .collect();
            let sub = MonomialIdeal::new(a, syzygies).expect("same arity");
            let sub_values = self.solve(&sub, b_max - dj as usize);
            for (t, v) in acc.iter_mut().enumerate() {
                if let Some(h) = shifted(&sub_values, t, dj) {
                    *v -= BigInt::from(h.clone());
                }
            }
        }
        acc.into_iter()
            .map(|v| v.to_biguint().expect("syzygy recursion went negative"))
            .collect()
    }
}

/// Hilbert function by the syzygy recursion with a fresh memo.
pub fn hf_syzygy(ideal: &MonomialIdeal, b_max: usize) -> Vec<Count> {
    SyzygySolver::new().solve(ideal, b_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(arity, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn seq(v: &[u64]) -> Vec<Count> {
        v.iter().map(|&x| Count::from(x)).collect()
    }

    #[test]
    fn two_pure_powers() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert_eq!(hf_syzygy(&i, 7), seq(&[1, 3, 5, 6, 6, 6, 6, 6]));
    }

    #[test]
    fn four_generators_at_degree_ten() {
        let i = ideal(3, &[&[2, 0, 2], &[1, 0, 3], &[1, 4, 1], &[2, 3, 1]]);
        assert_eq!(hf_syzygy(&i, 10)[10], Count::from(24u32));
    }

    #[test]
    fn principal() {
        let i = ideal(3, &[&[5, 0, 0]]);
        assert_eq!(hf_syzygy(&i, 6)[6], Count::from(25u32));
    }

    #[test]
    fn memo_is_hit_on_repeated_syzygies() {
        let i = ideal(3, &[&[2, 3, 1], &[1, 0, 3], &[1, 4, 1], &[2, 0, 2]]);
        let mut s = SyzygySolver::new();
        let first = s.solve(&i, 12);
        let after_first = s.stats();
        assert!(after_first.peak_entries > 0);
        let second = s.solve(&i, 12);
        assert_eq!(first, second);
        assert_eq!(s.stats().hits, after_first.hits + 1);
        assert!(s.stats().hit_rate() > 0.0);
    }

    #[test]
    fn shorter_request_reuses_longer_entry() {
        let i = ideal(2, &[&[1, 1], &[3, 0]]);
        let mut s = SyzygySolver::new();
        let long = s.solve(&i, 10);
        let short = s.solve(&i, 4);
        assert_eq!(short, long[..=4].to_vec());
        assert_eq!(s.stats().hits, 1);
    }
}
