//! Hilbert functions and Hilbert series of monomial quotient rings
//! `k[x_1, ..., x_a]/I`.
//!
//! The field `k` never materializes: every quantity is a count of monomials,
//! so all arithmetic is exact integer arithmetic on [`Count`] values.
//!
//! ```
//! use hilbert_core::{hf, MethodKind, MonomialIdeal};
//!
//! // <x^2, y^3> in k[x, y, z]
//! let ideal = MonomialIdeal::from_exponents(3, [vec![2, 0, 0], vec![0, 3, 0]]).unwrap();
//! let values = hf(&ideal, 5, MethodKind::Syzygy).unwrap();
//! let values: Vec<u64> = values.iter().map(|v| v.try_into().unwrap()).collect();
//! assert_eq!(values, [1, 3, 5, 6, 6, 6]);
//! ```

pub mod engine;
pub mod monomial;
pub mod parser;
pub mod pascal;
pub mod series;
pub mod stanley_reisner;

pub use engine::{
    annihilator_decomposition, build_lcm_lattice, hf, hf_lcm_lattice, hf_oracle, hf_syzygy,
    hf_table, Engine, EngineConfig, HfError, HilbertTable, LcmLattice, MethodKind,
};
pub use monomial::{Monomial, MonomialError, MonomialIdeal, VariableOrder};
pub use parser::{ParseError, ParseErrorKind, Ring, SourceSpan};
pub use pascal::{pascal_f, pascal_table, Count};
pub use series::{expand_series, series_numerator, SeriesError, SeriesNumerator};
pub use stanley_reisner::{
    minimal_nonfaces, stanley_reisner_ideal, validate_complex, ComplexError, SimplicialComplex,
};
