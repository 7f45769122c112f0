//! Exact cycle counting for small graphs, closed forms for complete
//! bipartite graphs, certified analytic bounds, isomorph-free enumeration of
//! triangle-free graphs and the checks built on top of them.
//!
//! Graphs have at most 64 vertices. Counts are arbitrary precision and all
//! comparisons against bounds are exact.

pub mod analytic;
pub mod canon;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod formula;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod scalar;
pub mod verify;

use num_bigint::BigUint;
use num_rational::BigRational;

pub type ExactCount = BigUint;
pub type ExactRational = BigRational;
pub type RationalBracket = scalar::Bracket<BigRational>;
pub type FloatBracket = scalar::Bracket<f64>;
pub type Float32Bracket = scalar::Bracket<f32>;

pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonicalKey};
pub use cycles::{
    count_cycles, count_cycles_avoiding, count_cycles_through_edge, count_cycles_through_vertex,
    count_hamiltonian_cycles, count_paths_between, CycleSpectrum,
};
pub use enumerate::{complete_to_maximal, enumerate, is_maximal_triangle_free, GraphClassSpec, Mode, TieBreak};
pub use error::{Error, Result};
pub use formula::{balanced_total, formula_spectrum, FormulaResult};
pub use graph::Graph;
pub use report::VerificationReport;
pub use scalar::{Bracket, Scalar};
