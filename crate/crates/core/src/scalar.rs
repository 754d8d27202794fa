//! Scalar traits shared by the dense linear algebra.
//!
//! Every algorithm in this crate is exact. Matrices are generic over a ring
//! [`Scalar`]; elimination routines additionally need a [`FieldScalar`]
//! (exact division) or an [`IntegerScalar`] (Euclidean division).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};

/// A commutative ring element with exact arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A field: every nonzero element is invertible and division is exact.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl FieldScalar for Ratio<BigInt> {}
impl FieldScalar for Ratio<i64> {}
impl FieldScalar for Ratio<i128> {}
impl FieldScalar for F2 {}

/// A Euclidean ring of integers.
pub trait IntegerScalar: Scalar + Integer + Signed {}

impl<T: Scalar + Integer + Signed> IntegerScalar for T {}

/// The field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub fn new(bit: bool) -> Self {
        F2(bit)
    }

    /// Reduction of an integer mod 2.
    pub fn from_int(n: &BigInt) -> Self {
        F2(n.is_odd())
    }

    pub fn bit(self) -> bool {
        self.0
    }

    pub fn as_u8(self) -> u8 {
        self.0 as u8
    }
}

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for F2 {
    type Output = F2;
    fn sub(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl Div for F2 {
    type Output = F2;
    fn div(self, rhs: F2) -> F2 {
        assert!(rhs.0, "division by zero in F2");
        self
    }
}

impl Rem for F2 {
    type Output = F2;
    fn rem(self, rhs: F2) -> F2 {
        assert!(rhs.0, "division by zero in F2");
        F2::ZERO
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Zero for F2 {
    fn zero() -> Self {
        F2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for F2 {
    fn one() -> Self {
        F2::ONE
    }
}

impl Num for F2 {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let n = i64::from_str_radix(s, radix)?;
        Ok(F2(n.rem_euclid(2) == 1))
    }
}
