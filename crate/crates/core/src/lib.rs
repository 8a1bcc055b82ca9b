//! Exact computation of harmonic spaces of deformed Steenrod operators.
//!
//! The crate builds differential operator families acting on polynomial
//! rings over `Q` or `Q(q)`, computes their graded spaces of common zeros
//! degree by degree with exact sparse elimination, and checks the surrounding
//! combinatorics: Hilbert series, Frobenius characteristics, closed-form
//! kernel lifts, regular sequences of weighted power sums and the diagonal
//! analogue.

pub mod error;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub mod linalg;
pub mod operator;
pub mod hilbert;
pub mod kernel;
pub mod closed_form;
pub mod symfunc;
pub mod regseq;
pub mod diagonal;
pub mod experiments;
