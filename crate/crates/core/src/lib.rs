//! Butson-type complex Hadamard matrices of order 6 built from third roots of
//! unity (the Agaian matrix and its relatives).
//!
//! The crate provides exact arithmetic over cyclotomic integers, exact
//! characteristic polynomials, numeric spectra, the Haagerup invariant, the
//! defect (an isolation certificate), and decision procedures for standard
//! equivalence (`H1 = D1 P1 H2 P2 D2`) and unitary equivalence (equal spectra
//! of `H/√n`).
//!
//! Hot loops run on rayon when the `parallel` feature is enabled (default);
//! see [`Exec`].

pub mod catalog;
pub mod cli;
pub mod cyclo;
pub mod equivalence;
mod error;
mod exec;
pub mod invariants;
pub mod matrix;
pub mod perm;
pub mod report;

pub use cyclo::CycInt;
pub use error::{Error, Result};
pub use exec::Exec;
pub use matrix::{ButsonMatrix, ComplexMatrix, PhaseVector};

/// Largest matrix dimension accepted by the factorial-time procedures.
pub const MAX_DIM: usize = 8;

/// Formats a float with 15 significant digits and a lowercase exponent.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.14e}")
}
