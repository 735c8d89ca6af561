//! Exact coefficient arithmetic: Laurent polynomials in `q`, `x_i`, `z_ij`
//! over the rationals and their fractions.

mod mgcd;
pub(crate) mod modp;
mod monomial;
mod poly;
mod qnum;
mod scalar;
mod text;
mod upoly;

pub use monomial::{Gen, GenKind, Monomial};
pub use poly::LaurentPoly;
pub use qnum::{qbracket, qfactorial_paren, qint, qpochhammer, Exponent};
pub use scalar::{Point, Scalar};
pub use text::{parse_poly, parse_scalar};


pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point; resample")]
    Resample,
    #[error("no value assigned for a generator")]
    MissingValue,
    #[error("exponent has a quadratic part")]
    NonAffine,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
