//! Exact computations for equivariant orientation theory over finite groups.

pub mod bredon;
pub mod burnside;
pub mod error;
pub mod group;
pub mod mackey;
pub mod matrix;
pub mod orientation;
pub mod reps;
pub mod scalar;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{FieldScalar, IntegerScalar, Scalar, F2};

/// Arbitrary-precision integers used for marks and Burnside coefficients.
pub type Int = num_bigint::BigInt;
/// Exact rationals used for representation matrices and characters.
pub type Rational = num_rational::BigRational;
pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rational>;
pub type F2Matrix = Matrix<F2>;
