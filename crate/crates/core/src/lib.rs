//! Quadratic affinizations of flag-variety coordinate rings: Lie data,
//! Gröbner bases over ℚ(√2), q-series, graded Hilbert series, fermionic
//! Hall-Littlewood polynomials and identity checks.

pub mod affine;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod hl;
pub mod lie;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
