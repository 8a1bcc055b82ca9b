//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Ring`] (and [`Field`] where
//! division is needed). The concrete fields are [`Rational`] for the base
//! field and [`QScalar`] for rational functions in a deformation parameter
//! `q`. Multivariate polynomials over `Rational` are themselves a [`Ring`],
//! which is how parameter-symbolic computations (coefficients in
//! `Q[a_1, ..., a_n]`) are expressed.

mod qscalar;
mod rational;
mod unipoly;

use std::fmt;

pub use qscalar::QScalar;
pub use rational::Rational;
pub use unipoly::UniPoly;

/// A commutative ring with unit containing the rationals.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    /// Rough size measure used to pick cheap pivots during elimination.
    fn complexity(&self) -> usize {
        1
    }

    /// The value as a rational constant, when it is one.
    fn as_rational(&self) -> Option<Rational> {
        None
    }

    /// Exact quotient `self / rhs` when it exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(self, rhs);
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}
