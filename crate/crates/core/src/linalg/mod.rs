//! Coefficient abstraction and sparse super-graded matrices.

mod coeff;
mod matrix;

pub use coeff::Coeff;
pub use matrix::{GradedMatrix, MatrixError};
