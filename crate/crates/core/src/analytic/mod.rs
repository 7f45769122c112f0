//! Exact and certified evaluation of the analytic ingredients: Bessel
//! partial sums, the normalized cycle-count sequences, factorial bounds and
//! the per-edge, Hamiltonian and avoiding-vertex cycle bounds.
//!
//! Decimal constants that appear in the bound expressions are kept as exact
//! rationals with their literal digits; `e`, `π` and `sqrt(2π)` only enter
//! through 30-digit enclosures.

pub mod bessel;
pub mod bounds;
pub mod constants;
pub mod sequences;

pub use bessel::{bessel_at_two, bessel_bracket, bessel_partial, BesselOrder, PartialSum};
pub use bounds::{
    edge_cycle_bound_even, edge_cycle_bound_odd, factorial, ham_bound, non_x_cycles_bound,
    robbins_bounds,
};
pub use constants::RationalBracket;
pub use sequences::{a_even, a_for_order, a_odd};
