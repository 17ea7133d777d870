//! Exact K-theory Hodge classes of parabolic SL2(C) representation varieties
//! and character varieties.
//!
//! The polynomial and matrix layers are generic over an exact coefficient
//! ring ([`Coeff`]); the aliases below fix the rings used by the engine.

pub mod charvar;
pub mod engine;
pub mod ff_oracle;
pub mod generators;
pub mod matrix;
pub mod polyring;
pub mod scalar;
pub mod verify;

pub use charvar::CharVarQuery;
pub use engine::{PunctureClass, SurfaceSpec};
pub use generators::Generator;
pub use matrix::{Matrix, MatrixError, Vector};
pub use polyring::{BivariatePoly, LaurentPoly, Localized, PolyError};
pub use scalar::Coeff;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Integer Laurent polynomial in `q`.
pub type Poly = LaurentPoly<BigInt>;
/// Rational Laurent polynomial in `q`.
pub type QPoly = LaurentPoly<BigRational>;
/// Integer Laurent polynomial localized at `q - 1` and `q + 1`.
pub type LocalizedScalar = Localized<BigInt>;
/// Rational-coefficient variant of [`LocalizedScalar`].
pub type QLocalizedScalar = Localized<BigRational>;
/// Linear map on the 8-generator core submodule.
pub type CoreMatrix = Matrix<BigInt>;
/// Coordinates in the 8-generator core submodule.
pub type CoreVector = Vector<BigInt>;
/// Rational-coefficient matrix, used where transcribed entries carry `1/2`.
pub type QMatrix = Matrix<BigRational>;
