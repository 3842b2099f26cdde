//! Integer polynomials and exact real-root machinery.
//!
//! Coefficients are arbitrary-precision integers stored lowest-degree first.
//! The module provides the pieces the spectral layer is built from:
//!
//! * gcd by a primitive pseudo-remainder sequence (contents are stripped at
//!   every step, which keeps coefficient growth polynomial);
//! * Yun's square-free decomposition, which is where eigenvalue
//!   multiplicities come from;
//! * Sturm chains with exact sign-variation counting at rational points, on
//!   half-open intervals `(lo, hi]`;
//! * real-root isolation by Sturm bisection inside a Cauchy bound.
//!
//! Sign variations are counted skipping zero entries. For a square-free
//! polynomial that convention makes `V(lo) - V(hi)` count roots in
//! `(lo, hi]` even when an endpoint is itself a root, so no endpoint
//! perturbation is ever needed.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used for interval endpoints and evaluations.
pub type Rational = num_rational::BigRational;

/// Half-open interval `(lo, hi]` with rational endpoints, `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Interval {
        assert!(lo < hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.lo < *q && *q <= self.hi
    }

    /// Intersection, `None` when the half-open intervals are disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        (lo < hi).then(|| Interval { lo, hi })
    }
}

/// Polynomial with integer coefficients, lowest degree first, trailing zeros
/// trimmed (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl core::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPolynomial {
        IntPolynomial::from_bigints(vec![c])
    }

    /// `x - c`.
    pub fn x_minus(c: &BigInt) -> IntPolynomial {
        IntPolynomial::from_bigints(vec![-c, BigInt::one()])
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> IntPolynomial {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_bigints(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_bigints(coeffs)
    }

    pub fn mul_scalar(&self, k: &BigInt) -> IntPolynomial {
        if k.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::from_bigints(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(q)` computed entirely in integers: Horner on the numerator
    /// scaled by the denominator power.
    pub fn sign_at(&self, q: &Rational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let num = q.numer();
        let den = q.denom();
        let d = self.coeffs.len() - 1;
        let mut acc = self.coeffs[d].clone();
        let mut dpow = BigInt::one();
        for i in (0..d).rev() {
            dpow *= den;
            acc = acc * num + &self.coeffs[i] * &dpow;
        }
        sign_of(&acc)
    }

    /// Content: gcd of the coefficients, nonnegative. Zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Content carrying the sign of the leading coefficient, so that
    /// `p = p.signed_content() * p.primitive_part()` with a positive-leading
    /// primitive part.
    pub fn signed_content(&self) -> BigInt {
        let c = self.content();
        if self.leading().map_or(false, |l| l.is_negative()) {
            -c
        } else {
            c
        }
    }

    /// Primitive part with positive leading coefficient. Zero stays zero.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let c = self.signed_content();
        IntPolynomial { coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    /// Exact quotient `self / g`. Panics if the division is not exact over
    /// the integers; callers only use it where that is an invariant.
    pub fn div_exact(&self, g: &IntPolynomial) -> IntPolynomial {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let dg = g.coeffs.len() - 1;
        let lg = g.leading().unwrap();
        let mut rem = self.coeffs.clone();
        assert!(rem.len() > dg, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); rem.len() - dg];
        for qi in (0..q.len()).rev() {
            let lead = core::mem::take(&mut rem[qi + dg]);
            if lead.is_zero() {
                continue;
            }
            let (qc, r) = lead.div_rem(lg);
            assert!(r.is_zero(), "inexact polynomial division");
            for (k, gc) in g.coeffs.iter().enumerate().take(dg) {
                rem[qi + k] -= gc * &qc;
            }
            q[qi] = qc;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        IntPolynomial::from_bigints(q)
    }

    /// Pseudo-remainder of `self` by `g`, scaled by a positive power of
    /// `g`'s leading coefficient so the result is a positive multiple of the
    /// true remainder. That sign discipline is what Sturm chains need.
    pub fn pseudo_rem(&self, g: &IntPolynomial) -> IntPolynomial {
        assert!(!g.is_zero(), "pseudo-remainder by zero polynomial");
        let dg = g.coeffs.len() - 1;
        if self.is_zero() || self.coeffs.len() - 1 < dg {
            return self.clone();
        }
        let l = g.leading().unwrap().clone();
        let full = self.coeffs.len() - dg; // deg f - deg g + 1
        let mut r = self.clone();
        let mut applied = 0usize;
        while !r.is_zero() && r.coeffs.len() - 1 >= dg {
            let k = r.coeffs.len() - 1 - dg;
            let s = r.leading().unwrap().clone();
            // r = l*r - s * x^k * g
            let mut coeffs = vec![BigInt::zero(); r.coeffs.len()];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &l;
            }
            for (i, c) in g.coeffs.iter().enumerate() {
                coeffs[k + i] -= c * &s;
            }
            r = IntPolynomial::from_bigints(coeffs);
            applied += 1;
        }
        // Normalize the total scale to l^full, then force it positive.
        let mut scale_exp = full - applied;
        if l.is_negative() && full % 2 == 1 {
            scale_exp += 1;
        }
        for _ in 0..scale_exp {
            r = r.mul_scalar(&l);
        }
        r
    }
}

impl From<&[i64]> for IntPolynomial {
    fn from(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }
}

impl core::fmt::Display for IntPolynomial {
    /// Ascending-degree text form with explicit `*` and `^`, e.g.
    /// `-2 - 3*x + x^3`. Deterministic and locale-independent.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Greatest common divisor, primitive with positive leading coefficient.
/// Computed by a pseudo-remainder sequence with primitive-part normalization
/// at every step.
pub fn poly_gcd(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_zero() {
            return a;
        }
        if b.degree() == Some(0) {
            return IntPolynomial::one();
        }
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
}

/// Yun square-free decomposition: `p = content * prod factor_i ^ exponent_i`
/// with primitive, pairwise-coprime, square-free factors and strictly
/// ascending exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: BigInt,
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl SquarefreeDecomposition {
    /// Multiply the decomposition back out (test and audit helper).
    pub fn expand(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::constant(self.content.clone());
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("square-free decomposition of the zero polynomial"));
    }
    let content = p.signed_content();
    let f = p.primitive_part();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { content, factors });
    }
    let fp = f.derivative();
    let g = poly_gcd(&f, &fp);
    if g.degree() == Some(0) {
        factors.push((f, 1));
        return Ok(SquarefreeDecomposition { content, factors });
    }
    let mut w = f.div_exact(&g);
    let mut y = fp.div_exact(&g);
    let mut i = 1u32;
    loop {
        let z = y.sub(&w.derivative());
        if z.is_zero() {
            factors.push((w, i));
            break;
        }
        let h = poly_gcd(&w, &z);
        if h.degree().map_or(false, |d| d > 0) {
            factors.push((h.clone(), i));
        }
        w = w.div_exact(&h);
        y = z.div_exact(&h);
        i += 1;
    }
    Ok(SquarefreeDecomposition { content, factors })
}

/// Sturm chain of a square-free polynomial.
pub struct SturmChain {
    elems: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Build the chain `p, p', -rem(...)`, reducing each element to its
    /// primitive part (positive scaling only, which preserves signs).
    /// Fails with [`Error::NotSquareFree`] when `p` has a repeated root.
    pub fn build(p: &IntPolynomial) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::InvalidArgument("Sturm chain of the zero polynomial"));
        }
        let mut elems = vec![p.clone()];
        if p.degree() == Some(0) {
            return Ok(SturmChain { elems });
        }
        elems.push(p.derivative());
        loop {
            let k = elems.len();
            let r = elems[k - 2].pseudo_rem(&elems[k - 1]);
            if r.is_zero() {
                break;
            }
            let next = positive_primitive(&r.neg());
            elems.push(next);
            if elems.last().unwrap().degree() == Some(0) {
                break;
            }
        }
        if elems.last().unwrap().degree() != Some(0) {
            // gcd(p, p') is nonconstant, so p has a repeated root.
            return Err(Error::NotSquareFree);
        }
        Ok(SturmChain { elems })
    }

    /// Sign variations of the chain at `q`, zeros skipped.
    pub fn variations_at(&self, q: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for e in &self.elems {
            let s = e.sign_at(q);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, interval: &Interval) -> usize {
        let vl = self.variations_at(&interval.lo);
        let vh = self.variations_at(&interval.hi);
        debug_assert!(vl >= vh);
        vl - vh
    }
}

/// Divide by the positive content only: keeps every sign, shrinks magnitude.
fn positive_primitive(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    let c = p.content();
    IntPolynomial::from_bigints(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Number of distinct real roots of square-free `p` in the half-open
/// interval. Endpoints that are themselves roots are handled exactly by the
/// half-open convention: a root at `hi` counts, a root at `lo` does not.
pub fn sturm_count(p: &IntPolynomial, interval: &Interval) -> Result<usize> {
    Ok(SturmChain::build(p)?.count_in(interval))
}

/// `1 + max |c_i| / |c_deg|`, rounded up to an integer. Every real root lies
/// strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lead = p.leading().expect("Cauchy bound of zero polynomial").abs();
    let mut worst = BigInt::zero();
    for c in p.coeffs().iter().take(p.coeffs().len() - 1) {
        let a = c.abs();
        if a > worst {
            worst = a;
        }
    }
    BigInt::one() + worst.div_ceil(&lead)
}

/// Isolating intervals for every real root of square-free `p`, ascending.
/// Each interval `(lo, hi]` contains exactly one root.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("cannot isolate roots of the zero polynomial"));
    }
    let chain = SturmChain::build(p)?;
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(p);
    let lo = Rational::from_integer(-&bound);
    let hi = Rational::from_integer(bound);
    let mut out = Vec::new();
    split(&chain, lo.clone(), hi.clone(), chain.variations_at(&lo), chain.variations_at(&hi), &mut out);
    Ok(out)
}

fn split(
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    vlo: usize,
    vhi: usize,
    out: &mut Vec<Interval>,
) {
    let count = vlo - vhi;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(Interval::new(lo, hi));
        return;
    }
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    let vmid = chain.variations_at(&mid);
    split(chain, lo, mid.clone(), vlo, vmid, out);
    split(chain, mid, hi, vmid, vhi, out);
}

/// Exact ordering helper used by tests and display code.
pub fn rational_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}
