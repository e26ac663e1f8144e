//! Hilbert function engines.
//!
//! Four independent methods compute `HF(k[x_1..x_a]/I, b)`:
//!
//! - [`oracle`]: direct enumeration of the degree-`b` monomials outside `I`.
//! - [`lattice`]: inclusion-exclusion over the lcm lattice of the generators.
//! - [`syzygy`]: the recursion `HF(M, t) = F(a, t) - F(a, t - d_1) -
//!   sum_j HF(k[x]/<m_1j, ..., m_(j-1)j>, t - d_j)`.
//! - [`table`]: row-by-row construction of a Hilbert function table from the
//!   short exact sequence for multiplication by the newest variable.
//!
//! [`Engine`] dispatches between them and owns the syzygy memo, so one engine
//! reused across calls shares sub-results.

pub mod lattice;
pub mod oracle;
pub mod syzygy;
pub mod table;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::monomial::{MonomialError, MonomialIdeal, VariableOrder};
use crate::pascal::{hf_principal, hf_two_generators, pascal_row, Count, PascalError};

pub use lattice::{
    build_lcm_lattice, hf_lcm_lattice, Cancellation, CancelledPair, LatticeEntry, LcmLattice,
};
pub use oracle::{count_in_ideal, hf_oracle, MonomialsOfDegree};
pub use syzygy::{hf_syzygy, SyzygySolver, SyzygyStats};
pub use table::{
    annihilator_decomposition, hf_table, AnnihilatorDecomposition, AnnihilatorTerm, HilbertTable,
    TableRow,
};

/// Default ceiling on `F(arity, b)` for the enumeration oracle.
pub const DEFAULT_ENUM_CAP: u64 = 100_000_000;
/// Default ceiling on the generator count for the lcm lattice (`2^n - 1` subsets).
pub const DEFAULT_LATTICE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfError {
    #[error("enumeration would visit {required} monomials, above the cap of {cap}")]
    EnumerationCap { required: BigUint, cap: u64 },
    #[error("{generators} generators exceed the lcm-lattice cap of {cap}")]
    LatticeCap { generators: usize, cap: usize },
    #[error(
        "generators are not re-indexed for the table method: generator {position} breaks the stage ordering"
    )]
    NotReindexed { position: usize },
    #[error("syzygy m_({i},{j}) involves the stage variable x_{stage}")]
    SyzygyInvolvesStageVariable { i: usize, j: usize, stage: usize },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Pascal(#[from] PascalError),
}

/// Which method the dispatcher should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodKind {
    Oracle,
    LcmLattice,
    Syzygy,
    Table,
    Auto,
}

impl MethodKind {
    pub const ALL: [MethodKind; 5] = [
        MethodKind::Oracle,
        MethodKind::LcmLattice,
        MethodKind::Syzygy,
        MethodKind::Table,
        MethodKind::Auto,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::Oracle => "oracle",
            MethodKind::LcmLattice => "lcm",
            MethodKind::Syzygy => "syzygy",
            MethodKind::Table => "table",
            MethodKind::Auto => "auto",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(MethodKind::Oracle),
            "lcm" | "lcm-lattice" | "lattice" => Ok(MethodKind::LcmLattice),
            "syzygy" => Ok(MethodKind::Syzygy),
            "table" => Ok(MethodKind::Table),
            "auto" => Ok(MethodKind::Auto),
            other => Err(format!(
                "unknown method `{other}` (expected oracle, lcm, syzygy, table or auto)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    pub enum_cap: u64,
    pub lattice_cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            enum_cap: DEFAULT_ENUM_CAP,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

/// Dispatcher plus the syzygy memo shared by every call made through it.
#[derive(Debug, Default)]
pub struct Engine {
    config: EngineConfig,
    syzygy: SyzygySolver,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Self {
            config,
            syzygy: SyzygySolver::new(),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn syzygy_stats(&self) -> SyzygyStats {
        self.syzygy.stats()
    }

    /// `HF(k[x]/I, b)` for `b = 0..=b_max` by the chosen method.
    pub fn hf(
        &mut self,
        ideal: &MonomialIdeal,
        b_max: usize,
        method: MethodKind,
    ) -> Result<Vec<Count>, HfError> {
        match method {
            MethodKind::Oracle => (0..=b_max)
                .map(|b| hf_oracle(ideal, b, self.config.enum_cap))
                .collect(),
            MethodKind::LcmLattice => hf_lcm_lattice(ideal, b_max, false, self.config.lattice_cap),
            MethodKind::Syzygy => Ok(self.syzygy.solve(ideal, b_max)),
            MethodKind::Table => {
                if ideal.arity() == 0 {
                    return self.hf(ideal, b_max, MethodKind::Auto);
                }
                let order = VariableOrder::identity(ideal.arity());
                let table = self.table(ideal, &order, ideal.arity(), b_max)?;
                Ok(table
                    .rows()
                    .last()
                    .map(|r| r.values.clone())
                    .expect("arity >= 1 gives at least one row"))
            }
            MethodKind::Auto => self.auto(ideal, b_max),
        }
    }

    fn auto(&mut self, ideal: &MonomialIdeal, b_max: usize) -> Result<Vec<Count>, HfError> {
        let minimal = ideal.minimalize();
        let a = minimal.arity();
        let gens = minimal.generators();
        match gens {
            [] => Ok(pascal_row(a, b_max)),
            [p] => Ok((0..=b_max as i64)
                .map(|b| hf_principal(a, p.degree(), b))
                .collect()),
            [u, v] => {
                let d_lcm = u.lcm_unchecked(v).degree();
                (0..=b_max as i64)
                    .map(|b| Ok(hf_two_generators(a, u.degree(), v.degree(), d_lcm, b)?))
                    .collect()
            }
            _ if gens.len() > self.config.lattice_cap => Ok(self.syzygy.solve(&minimal, b_max)),
            _ => hf_lcm_lattice(&minimal, b_max, false, self.config.lattice_cap),
        }
    }

    /// Builds the Hilbert function table of `ideal` for the variable order
    /// `order`, rows `1..=a_max`, columns `0..=b_max`.
    pub fn table(
        &mut self,
        ideal: &MonomialIdeal,
        order: &VariableOrder,
        a_max: usize,
        b_max: usize,
    ) -> Result<HilbertTable, HfError> {
        table::build_table(self, ideal, order, a_max, b_max)
    }
}

/// `HF(k[x]/I, b)` for `b = 0..=b_max` with the default configuration.
pub fn hf(ideal: &MonomialIdeal, b_max: usize, method: MethodKind) -> Result<Vec<Count>, HfError> {
    Engine::default().hf(ideal, b_max, method)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u64]) -> Vec<Count> {
        v.iter().map(|&x| Count::from(x)).collect()
    }

    fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(arity, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn dispatcher_examples() {
        let x5 = ideal(3, &[&[5, 0, 0]]);
        let two = ideal(3, &[&[2, 1, 0], &[1, 0, 2]]);
        let free = MonomialIdeal::zero(1);
        for method in MethodKind::ALL {
            assert_eq!(
                hf(&x5, 9, method).unwrap(),
                seq(&[1, 3, 6, 10, 15, 20, 25, 30, 35, 40]),
                "{method}"
            );
            assert_eq!(
                hf(&two, 6, method).unwrap(),
                seq(&[1, 3, 6, 8, 9, 10, 11]),
                "{method}"
            );
            assert_eq!(hf(&free, 5, method).unwrap(), seq(&[1; 6]), "{method}");
        }
    }

    #[test]
    fn unit_ideal_is_zero_everywhere() {
        let unit = MonomialIdeal::unit(2);
        for method in MethodKind::ALL {
            assert_eq!(hf(&unit, 4, method).unwrap(), seq(&[0; 5]), "{method}");
        }
    }

    #[test]
    fn field_arity_zero() {
        for method in MethodKind::ALL {
            assert_eq!(
                hf(&MonomialIdeal::zero(0), 3, method).unwrap(),
                seq(&[1, 0, 0, 0])
            );
            assert_eq!(
                hf(&MonomialIdeal::unit(0), 3, method).unwrap(),
                seq(&[0, 0, 0, 0])
            );
        }
    }

    #[test]
    fn auto_falls_back_to_syzygy_above_lattice_cap() {
        let gens: Vec<Vec<u32>> = (0..5).map(|i| vec![i, 4 - i]).collect();
        let i = MonomialIdeal::from_exponents(2, gens).unwrap();
        let mut engine = Engine::new(EngineConfig {
            lattice_cap: 3,
            ..EngineConfig::default()
        });
        let v = engine.hf(&i, 8, MethodKind::Auto).unwrap();
        assert!(engine.syzygy_stats().calls > 0);
        assert_eq!(v, hf(&i, 8, MethodKind::Oracle).unwrap());
        assert!(matches!(
            engine.hf(&i, 8, MethodKind::LcmLattice),
            Err(HfError::LatticeCap {
                generators: 5,
                cap: 3
            })
        ));
    }

    #[test]
    fn method_names_round_trip() {
        for method in MethodKind::ALL {
            assert_eq!(method.name().parse::<MethodKind>().unwrap(), method);
        }
        assert!("fast".parse::<MethodKind>().is_err());
    }
}
