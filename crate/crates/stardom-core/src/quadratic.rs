//! Exact arithmetic in real quadratic fields.
//!
//! An element of `Q(sqrt(d))` is stored as `a + b*sqrt(d)` with rational
//! `a`, `b` and a fixed square-free radicand `d > 1`. Since `sqrt(d)` is
//! irrational, the representation is unique and `a + b*sqrt(d) = 0` exactly
//! when both coordinates vanish — which is what makes Gaussian elimination
//! over these scalars exact.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::FieldScalar;
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticElement {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadraticElement {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> QuadraticElement {
        QuadraticElement { a, b, d }
    }

    pub fn from_rational(a: Rational, d: &BigInt) -> QuadraticElement {
        QuadraticElement { a, b: Rational::zero(), d: d.clone() }
    }

    pub fn from_integer(k: &BigInt, d: &BigInt) -> QuadraticElement {
        QuadraticElement::from_rational(Rational::from_integer(k.clone()), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: &BigInt) -> QuadraticElement {
        QuadraticElement {
            a: Rational::zero(),
            b: Rational::from_integer(1.into()),
            d: d.clone(),
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn mul(&self, other: &QuadraticElement) -> QuadraticElement {
        debug_assert_eq!(self.d, other.d, "mixed radicands");
        let d = Rational::from_integer(self.d.clone());
        QuadraticElement {
            a: &self.a * &other.a + &self.b * &other.b * &d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &QuadraticElement) -> QuadraticElement {
        debug_assert_eq!(self.d, other.d, "mixed radicands");
        QuadraticElement {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
    }

    /// Multiplicative inverse of a nonzero element, via the conjugate:
    /// `(a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d)`. The norm in
    /// the denominator is nonzero because `sqrt(d)` is irrational.
    pub fn inverse(&self) -> QuadraticElement {
        let d = Rational::from_integer(self.d.clone());
        let norm = &self.a * &self.a - &self.b * &self.b * &d;
        assert!(!norm.is_zero(), "inverse of zero quadratic element");
        QuadraticElement {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
            d: self.d.clone(),
        }
    }
}

impl FieldScalar for QuadraticElement {
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn sub_mul(&self, factor: &QuadraticElement, other: &QuadraticElement) -> QuadraticElement {
        self.sub(&factor.mul(other))
    }

    fn div(&self, other: &QuadraticElement) -> QuadraticElement {
        self.mul(&other.inverse())
    }
}
