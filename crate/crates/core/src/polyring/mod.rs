//! Exact arithmetic for Laurent polynomials in `q` and their localization at
//! `(q - 1)` and `(q + 1)`.

mod bivariate;
mod laurent;
mod localized;
mod text;

pub use bivariate::BivariatePoly;
pub use laurent::LaurentPoly;
pub use localized::Localized;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not an integer")]
    NonIntegral,
    #[error("not invertible in the localized ring")]
    NotInvertible,
    #[error("value has a (q - 1)/(q + 1) denominator")]
    HasDenominator,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
