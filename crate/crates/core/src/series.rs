//! Hilbert series as a rational function `K(t) / (1 - t)^a`.
//!
//! The numerator comes straight from inclusion-exclusion over the lcm
//! lattice: `K(t) = sum_S (-1)^|S| t^(deg lcm S)` over all subsets `S` of the
//! generators, the empty subset contributing `1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::engine::lattice::signed_lcm_degrees;
use crate::engine::HfError;
use crate::monomial::MonomialIdeal;
use crate::pascal::{pascal_row, shifted, Count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series coefficient at degree {degree} is negative ({value})")]
    NegativeCoefficient { degree: usize, value: BigInt },
}

/// Numerator `K(t)` of the Hilbert series over the denominator `(1 - t)^arity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesNumerator {
    coefficients: BTreeMap<u64, BigInt>,
    arity: usize,
}

impl SeriesNumerator {
    /// Zero coefficients are dropped.
    pub fn new(arity: usize, coefficients: impl IntoIterator<Item = (u64, BigInt)>) -> Self {
        let mut map: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (d, c) in coefficients {
            *map.entry(d).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self {
            coefficients: map,
            arity,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Nonzero coefficients in ascending degree order.
    pub fn coefficients(&self) -> &BTreeMap<u64, BigInt> {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: u64) -> BigInt {
        self.coefficients.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `K(1)`.
    pub fn value_at_one(&self) -> BigInt {
        self.coefficients.values().sum()
    }

    pub fn degree(&self) -> Option<u64> {
        self.coefficients.keys().next_back().copied()
    }
}

/// Numerator of the Hilbert series of `k[x]/I`. Refuses above the lattice cap.
pub fn series_numerator(
    ideal: &MonomialIdeal,
    lattice_cap: usize,
) -> Result<SeriesNumerator, HfError> {
    let signed = signed_lcm_degrees(ideal, lattice_cap)?;
    let terms = std::iter::once((0u64, BigInt::one()))
        .chain(signed.into_iter().map(|(d, c)| (d, -BigInt::from(c))));
    Ok(SeriesNumerator::new(ideal.arity(), terms))
}

/// First `b_max + 1` coefficients of `K(t) / (1 - t)^a`, i.e.
/// `sum_d k_d F(a, b - d)`.
pub fn expand_series(num: &SeriesNumerator, b_max: usize) -> Result<Vec<Count>, SeriesError> {
    let row = pascal_row(num.arity, b_max);
    (0..=b_max)
        .map(|b| {
            let v: BigInt = num
                .coefficients
                .iter()
                .filter_map(|(&d, c)| shifted(&row, b, d).map(|f| c * BigInt::from(f.clone())))
                .sum();
            if v.is_negative() {
                return Err(SeriesError::NegativeCoefficient {
                    degree: b,
                    value: v,
                });
            }
            Ok(v.to_biguint().expect("checked non-negative"))
        })
        .collect()
}

/// Renders `(1 - t^2 - t^3 + t^5)/(1 - t)^3`: ascending degrees, explicit
/// signs, zero terms omitted. A single-term numerator drops its parentheses,
/// `(1 - t)^1` is written `(1 - t)`, and arity 0 has no denominator.
impl fmt::Display for SeriesNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut numerator = String::new();
        for (i, (&d, c)) in self.coefficients.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    numerator.push('-');
                }
            } else {
                numerator.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let power = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            match (magnitude.is_one(), power.is_empty()) {
                (true, true) => numerator.push('1'),
                (true, false) => numerator.push_str(&power),
                (false, true) => numerator.push_str(&magnitude.to_string()),
                (false, false) => numerator.push_str(&format!("{magnitude}*{power}")),
            }
        }
        if numerator.is_empty() {
            numerator.push('0');
        }
        if self.arity == 0 {
            return f.write_str(&numerator);
        }
        if self.coefficients.len() > 1 {
            write!(f, "({numerator})")?;
        } else {
            f.write_str(&numerator)?;
        }
        match self.arity {
            1 => f.write_str("/(1 - t)"),
            a => write!(f, "/(1 - t)^{a}"),
        }
    }
}
