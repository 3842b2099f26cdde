//! Exact real algebraic numbers.
//!
//! A value is represented by a square-free integer polynomial together with
//! a half-open isolating interval `(lo, hi]` containing exactly one of its
//! real roots. All comparisons are exact: equality goes through polynomial
//! gcds and Sturm counts, ordering through interval refinement. Nothing
//! here ever rounds.
//!
//! Values are immutable. Refinement returns a new value with a narrower
//! interval rather than mutating in place, so shared references stay valid.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{isolate_real_roots, poly_gcd, sturm_count, IntPolynomial, SturmChain};
use crate::{Error, Result};

pub use crate::poly::{Interval, Rational};

/// An exact real algebraic number.
#[derive(Debug, Clone)]
pub struct AlgebraicNumber {
    /// Square-free, primitive, positive-leading polynomial with exactly one
    /// root in `interval`. Not necessarily the minimal polynomial, except
    /// after integer normalization in degree 1.
    sf_poly: IntPolynomial,
    /// Half-open isolating interval `(lo, hi]`.
    interval: Interval,
}

/// Closed form of a low-degree algebraic number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    Integer(BigInt),
    /// Non-integer rational.
    Rational(Rational),
    /// `rational + surd * sqrt(radicand)` with `surd != 0` and a
    /// square-free radicand greater than 1.
    Quadratic { rational: Rational, surd: Rational, radicand: BigInt },
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// One sign-based bisection step on an isolating interval. Needs only the
/// isolation invariant; never needs the sign at `lo`, which may legally be
/// a root of other factors.
fn refine_once(p: &IntPolynomial, iv: &Interval) -> Interval {
    let mid = iv.midpoint();
    let s_hi = p.sign_at(&iv.hi);
    if s_hi == 0 {
        return Interval::new(mid, iv.hi.clone());
    }
    let s_mid = p.sign_at(&mid);
    if s_mid == 0 {
        let lo = (&iv.lo + &mid) * half();
        return Interval::new(lo, mid);
    }
    if s_mid == s_hi {
        Interval::new(iv.lo.clone(), mid)
    } else {
        Interval::new(mid, iv.hi.clone())
    }
}

impl AlgebraicNumber {
    /// Wrap a square-free polynomial and an isolating interval. Fails when
    /// the polynomial has repeated roots or the interval does not contain
    /// exactly one root. Integer roots are normalized to degree one.
    pub fn new(sf_poly: IntPolynomial, interval: Interval) -> Result<AlgebraicNumber> {
        let chain = SturmChain::build(&sf_poly)?;
        if chain.count_in(&interval) != 1 {
            return Err(Error::InvalidArgument("interval does not isolate exactly one root"));
        }
        let sf_poly = sf_poly.primitive_part();
        let mut value = AlgebraicNumber { sf_poly, interval };
        value.normalize_integer_root();
        Ok(value)
    }

    /// All real roots of a square-free polynomial, ascending.
    pub fn roots_of(p: &IntPolynomial) -> Result<Vec<AlgebraicNumber>> {
        isolate_real_roots(p)?
            .into_iter()
            .map(|iv| AlgebraicNumber::new(p.clone(), iv))
            .collect()
    }

    /// The algebraic number equal to an integer.
    pub fn from_integer(k: BigInt) -> AlgebraicNumber {
        let interval = Interval::new(Rational::from_integer(&k - BigInt::one()), Rational::from_integer(k.clone()));
        AlgebraicNumber { sf_poly: IntPolynomial::x_minus(&k), interval }
    }

    fn normalize_integer_root(&mut self) {
        if self.sf_poly.degree() == Some(1) {
            return;
        }
        let mut iv = self.interval.clone();
        while iv.width() >= Rational::one() {
            iv = refine_once(&self.sf_poly, &iv);
        }
        let k = iv.hi.floor().to_integer();
        let kq = Rational::from_integer(k.clone());
        if kq > iv.lo && kq <= iv.hi && self.sf_poly.eval_int(&k).is_zero() {
            *self = AlgebraicNumber::from_integer(k);
        } else {
            self.interval = iv;
        }
    }

    pub fn sf_poly(&self) -> &IntPolynomial {
        &self.sf_poly
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// One bisection step; the result is a new value with half the width.
    pub fn refine(&self) -> AlgebraicNumber {
        AlgebraicNumber {
            sf_poly: self.sf_poly.clone(),
            interval: refine_once(&self.sf_poly, &self.interval),
        }
    }

    pub fn refined_to_width(&self, target: &Rational) -> AlgebraicNumber {
        let mut cur = self.clone();
        while cur.interval.width() > *target {
            cur = cur.refine();
        }
        cur
    }

    /// Exact value as a rational, when the defining polynomial pins one
    /// down (degree one). Higher-degree representations of rational values
    /// other than integers do not occur for algebraic integers, which is
    /// all the spectral pipeline produces.
    pub fn rational_value(&self) -> Option<Rational> {
        if self.sf_poly.degree() == Some(1) {
            let c0 = self.sf_poly.coeff(0);
            let c1 = self.sf_poly.coeff(1);
            return Some(Rational::new(-c0, c1));
        }
        None
    }

    pub fn integer_value(&self) -> Option<BigInt> {
        let r = self.rational_value()?;
        r.is_integer().then(|| r.to_integer())
    }

    /// Does this number satisfy `p`? Exact: true iff the unique root in the
    /// interval is also a root of `p`.
    pub fn satisfies(&self, p: &IntPolynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let g = poly_gcd(p, &self.sf_poly);
        if g.degree().map_or(true, |d| d == 0) {
            return false;
        }
        sturm_count(&g, &self.interval).expect("gcd of square-free is square-free") >= 1
    }

    /// Exact equality of values, independent of representation.
    pub fn eq_value(&self, other: &AlgebraicNumber) -> bool {
        let Some(common) = self.interval.intersect(&other.interval) else {
            return false;
        };
        let g = poly_gcd(&self.sf_poly, &other.sf_poly);
        if g.degree().map_or(true, |d| d == 0) {
            return false;
        }
        sturm_count(&g, &common).expect("gcd of square-free is square-free") >= 1
    }

    /// Exact ordering of values.
    pub fn cmp_value(&self, other: &AlgebraicNumber) -> Ordering {
        if self.eq_value(other) {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.interval.hi <= b.interval.lo {
                return Ordering::Less;
            }
            if b.interval.hi <= a.interval.lo {
                return Ordering::Greater;
            }
            a = a.refine();
            b = b.refine();
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if self.sf_poly.sign_at(q) == 0 && self.interval.contains(q) {
            return Ordering::Equal;
        }
        let mut iv = self.interval.clone();
        loop {
            if *q <= iv.lo {
                return Ordering::Greater;
            }
            if *q > iv.hi {
                return Ordering::Less;
            }
            iv = refine_once(&self.sf_poly, &iv);
        }
    }

    pub fn is_integer(&self, k: i64) -> bool {
        self.integer_value().map_or(false, |v| v == BigInt::from(k))
    }

    /// The value `k - self`, exactly. Used to move between the adjacency
    /// and Laplacian spectra of a k-regular graph.
    pub fn reflect(&self, k: &BigInt) -> AlgebraicNumber {
        // q(x) = +- p(k - x), by Horner over polynomials.
        let kx = IntPolynomial::from_bigints([k.clone(), -BigInt::one()].into());
        let mut q = IntPolynomial::zero();
        for c in self.sf_poly.coeffs().iter().rev() {
            q = q.mul(&kx).add(&IntPolynomial::constant(c.clone()));
        }
        let q = q.primitive_part();
        let kq = Rational::from_integer(k.clone());
        let mut cur = self.clone();
        loop {
            // The reflected root lies in [k - hi, k - lo); widen the left
            // end so the half-open orientation still covers it, then shrink
            // until the window isolates.
            let w = cur.interval.width();
            let j = Interval::new(&kq - &cur.interval.hi - w, &kq - &cur.interval.lo);
            if sturm_count(&q, &j).expect("reflection preserves square-freeness") == 1 {
                return AlgebraicNumber::new(q, j).expect("reflected interval isolates");
            }
            cur = cur.refine();
        }
    }

    /// Approximate value, for display only. Exact for degree one.
    pub fn approx_f64(&self) -> f64 {
        if let Some(r) = self.rational_value() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        let target = Rational::new(BigInt::one(), BigInt::from(10_000_000_000_000i64));
        let cur = self.refined_to_width(&target);
        cur.interval.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Closed form in degree at most two, searching conjugate pairs among
    /// the roots of the defining polynomial. Fails with
    /// [`Error::UnsupportedDegree`] when the value needs degree three or
    /// more.
    pub fn closed_form(&self) -> Result<ClosedForm> {
        if let Some(r) = self.rational_value() {
            return Ok(if r.is_integer() {
                ClosedForm::Integer(r.to_integer())
            } else {
                ClosedForm::Rational(r)
            });
        }
        let deg = self.sf_poly.degree().unwrap_or(0);
        let roots = AlgebraicNumber::roots_of(&self.sf_poly)?;
        let me = roots
            .iter()
            .position(|r| r.eq_value(self))
            .expect("value is a root of its own polynomial");
        for (j, other) in roots.iter().enumerate() {
            if j == me {
                continue;
            }
            let Some(q) = self.quadratic_with(other) else {
                continue;
            };
            if !self.satisfies(&q) {
                continue;
            }
            return Ok(self.quadratic_closed_form(&q));
        }
        Err(Error::UnsupportedDegree(deg))
    }

    /// Candidate monic quadratic with self and `other` as roots, if their
    /// sum and product trap single integers.
    fn quadratic_with(&self, other: &AlgebraicNumber) -> Option<IntPolynomial> {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let sum_lo = &a.interval.lo + &b.interval.lo;
            let sum_hi = &a.interval.hi + &b.interval.hi;
            let corners = [
                &a.interval.lo * &b.interval.lo,
                &a.interval.lo * &b.interval.hi,
                &a.interval.hi * &b.interval.lo,
                &a.interval.hi * &b.interval.hi,
            ];
            let prod_lo = corners.iter().min().unwrap().clone();
            let prod_hi = corners.iter().max().unwrap().clone();
            if &sum_hi - &sum_lo < Rational::one() && &prod_hi - &prod_lo < Rational::one() {
                let s = trapped_integer(&sum_lo, &sum_hi)?;
                let p = trapped_integer(&prod_lo, &prod_hi)?;
                // (x - a)(x - b) = x^2 - s x + p
                return Some(IntPolynomial::from_bigints([p, -s, BigInt::one()].into()));
            }
            a = a.refine();
            b = b.refine();
        }
    }

    /// Extract `rational + surd*sqrt(radicand)` from a verified monic
    /// quadratic `x^2 + Bx + C` that this value satisfies.
    fn quadratic_closed_form(&self, q: &IntPolynomial) -> ClosedForm {
        let b = q.coeff(1);
        let c = q.coeff(0);
        let disc = &b * &b - BigInt::from(4) * &c;
        let (f, d) = extract_square_factor(&disc);
        let rational = Rational::new(-&b, BigInt::from(2));
        let magnitude = Rational::new(f, BigInt::from(2));
        let surd = match self.cmp_rational(&rational) {
            Ordering::Greater => magnitude,
            Ordering::Less => -magnitude,
            Ordering::Equal => unreachable!("irrational value equals a rational"),
        };
        ClosedForm::Quadratic { rational, surd, radicand: d }
    }
}

/// The unique integer in the closed hull `[lo, hi]`, which has width < 1.
fn trapped_integer(lo: &Rational, hi: &Rational) -> Option<BigInt> {
    let c = lo.ceil().to_integer();
    let f = hi.floor().to_integer();
    (c == f).then_some(c)
}

/// Write `m = f^2 * d` with `d` square-free; returns `(f, d)`. `m > 0`.
fn extract_square_factor(m: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(m.is_positive());
    let mut f = BigInt::one();
    let mut rem = m.clone();
    let mut k = BigInt::from(2);
    loop {
        let kk = &k * &k;
        if &kk > &rem {
            break;
        }
        while (&rem % &kk).is_zero() {
            rem /= &kk;
            f *= &k;
        }
        k += BigInt::one();
    }
    (f, rem)
}

impl core::fmt::Display for ClosedForm {
    fn fmt(&self, out: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ClosedForm::Integer(k) => write!(out, "{k}"),
            ClosedForm::Rational(r) => write!(out, "{}/{}", r.numer(), r.denom()),
            ClosedForm::Quadratic { rational, surd, radicand } => {
                let den = rational.denom().lcm(surd.denom());
                let p = (rational * Rational::from_integer(den.clone())).to_integer();
                let q = (surd * Rational::from_integer(den.clone())).to_integer();
                let inner = quadratic_numerator(&p, &q, radicand);
                if den.is_one() {
                    write!(out, "{inner}")
                } else if p.is_zero() {
                    write!(out, "{inner}/{den}")
                } else {
                    write!(out, "({inner})/{den}")
                }
            }
        }
    }
}

/// `p + q*sqrt(d)` as text, with unit coefficients and zero terms elided.
fn quadratic_numerator(p: &BigInt, q: &BigInt, d: &BigInt) -> String {
    let mag = q.abs();
    let surd = if mag.is_one() { format!("sqrt({d})") } else { format!("{mag}*sqrt({d})") };
    if p.is_zero() {
        if q.is_negative() {
            format!("-{surd}")
        } else {
            surd
        }
    } else if q.is_negative() {
        format!("{p} - {surd}")
    } else {
        format!("{p} + {surd}")
    }
}

impl core::fmt::Display for AlgebraicNumber {
    /// Exact closed form when the degree allows it, otherwise a `~`-marked
    /// decimal approximation.
    fn fmt(&self, out: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.closed_form() {
            Ok(cf) => write!(out, "{cf}"),
            Err(_) => write!(out, "~{:.6}", self.approx_f64()),
        }
    }
}
