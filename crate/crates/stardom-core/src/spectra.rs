//! Graph spectra with exact eigenvalues and multiplicities.
//!
//! The characteristic polynomial of the chosen matrix is factored into
//! square-free parts; the exponent of the part a root belongs to *is* its
//! multiplicity, so multiplicities are exact by construction rather than
//! counted from clustered approximations.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebraic::{AlgebraicNumber, ClosedForm};
use crate::graph::Graph;
use crate::matrix::{field_rank, FieldScalar, IntMatrix};
use crate::poly::{poly_gcd, squarefree_decomposition, IntPolynomial, Rational};
use crate::quadratic::QuadraticElement;
use crate::{bits, Result};

/// Which matrix of the graph to take the spectrum of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    /// Laplacian `L = D - A`.
    Laplacian,
}

impl core::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MatrixKind::Adjacency => write!(f, "adjacency"),
            MatrixKind::Laplacian => write!(f, "laplacian"),
        }
    }
}

pub fn matrix_of(g: &Graph, kind: MatrixKind) -> IntMatrix {
    IntMatrix::from_fn(g.n(), |i, j| BigInt::from(int_entry(g, kind, i, j)))
}

fn int_entry(g: &Graph, kind: MatrixKind, i: usize, j: usize) -> i64 {
    let a = g.has_edge(i, j) as i64;
    match kind {
        MatrixKind::Adjacency => a,
        MatrixKind::Laplacian => {
            if i == j {
                g.degree(i) as i64
            } else {
                -a
            }
        }
    }
}

pub fn charpoly_of(g: &Graph, kind: MatrixKind) -> IntPolynomial {
    matrix_of(g, kind).charpoly()
}

/// The full spectrum: distinct eigenvalues ascending, with exact
/// multiplicities summing to `n`.
#[derive(Debug, Clone)]
pub struct SpectrumSummary {
    pub kind: MatrixKind,
    pub charpoly: IntPolynomial,
    pub eigenvalues: Vec<(AlgebraicNumber, usize)>,
}

impl SpectrumSummary {
    /// Number of distinct eigenvalues.
    pub fn distinct_count(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn multiplicity_of(&self, lambda: &AlgebraicNumber) -> usize {
        self.eigenvalues
            .iter()
            .find(|(ev, _)| ev.eq_value(lambda))
            .map_or(0, |&(_, m)| m)
    }

    /// Multiplicity of the eigenvalue 0: the number of trailing zero
    /// coefficients of the characteristic polynomial.
    pub fn zero_multiplicity(&self) -> usize {
        trailing_zero_coeffs(&self.charpoly)
    }

    pub fn largest(&self) -> &AlgebraicNumber {
        &self.eigenvalues.last().expect("nonempty spectrum").0
    }
}

fn trailing_zero_coeffs(p: &IntPolynomial) -> usize {
    p.coeffs().iter().take_while(|c| c.is_zero()).count()
}

/// Compute the spectrum of the chosen matrix of `g`.
pub fn spectrum(g: &Graph, kind: MatrixKind) -> SpectrumSummary {
    let charpoly = charpoly_of(g, kind);
    let decomposition =
        squarefree_decomposition(&charpoly).expect("characteristic polynomial is nonzero");
    let mut eigenvalues: Vec<(AlgebraicNumber, usize)> = Vec::new();
    for (factor, exponent) in &decomposition.factors {
        let roots = AlgebraicNumber::roots_of(factor).expect("factors are square-free");
        for root in roots {
            eigenvalues.push((root, *exponent as usize));
        }
    }
    eigenvalues.sort_by(|a, b| a.0.cmp_value(&b.0));
    debug_assert_eq!(eigenvalues.iter().map(|&(_, m)| m).sum::<usize>(), g.n());
    SpectrumSummary { kind, charpoly, eigenvalues }
}

/// Multiplicity of `lambda` as an eigenvalue, zero if it is not one.
/// Iterated gcd-and-divide on the characteristic polynomial: each pass
/// removes exactly one power of the minimal polynomial of `lambda`.
pub fn multiplicity(g: &Graph, kind: MatrixKind, lambda: &AlgebraicNumber) -> usize {
    let mut poly = charpoly_of(g, kind);
    let mut m = 0;
    loop {
        let common = poly_gcd(&poly, lambda.sf_poly());
        if common.degree().map_or(true, |d| d == 0) || !lambda.satisfies(&common) {
            return m;
        }
        poly = poly.div_exact(&common);
        m += 1;
    }
}

pub fn is_eigenvalue_of(g: &Graph, kind: MatrixKind, lambda: &AlgebraicNumber) -> bool {
    lambda.satisfies(&charpoly_of(g, kind))
}

/// Rank of the adjacency matrix: `n` minus the multiplicity of 0.
pub fn rank_of_graph(g: &Graph) -> usize {
    g.n() - trailing_zero_coeffs(&charpoly_of(g, MatrixKind::Adjacency))
}

/// Is `set` a lambda-annihilator: does no nonzero lambda-eigenvector vanish
/// on all of `set`? Decided exactly by a rank computation over the field
/// generated by `lambda`; eigenvalues of degree three or more are reported
/// as [`crate::Error::UnsupportedDegree`].
pub fn is_lambda_annihilator(
    g: &Graph,
    kind: MatrixKind,
    lambda: &AlgebraicNumber,
    set: u64,
) -> Result<bool> {
    debug_assert_eq!(set & !g.vertex_mask(), 0);
    match lambda.closed_form()? {
        ClosedForm::Integer(k) => {
            Ok(annihilator_by_rank(g, kind, &Rational::from_integer(k), set, |v| {
                Rational::from_integer(BigInt::from(v))
            }))
        }
        ClosedForm::Rational(r) => {
            Ok(annihilator_by_rank(g, kind, &r, set, |v| Rational::from_integer(BigInt::from(v))))
        }
        ClosedForm::Quadratic { rational, surd, radicand } => {
            let lam = QuadraticElement::new(rational, surd, radicand.clone());
            Ok(annihilator_by_rank(g, kind, &lam, set, move |v| {
                QuadraticElement::from_integer(&BigInt::from(v), &radicand)
            }))
        }
    }
}

/// Stack `M - lambda*I` on top of an indicator row for every vertex of the
/// set; the kernel of that stack is the space of lambda-eigenvectors
/// vanishing on the set, so the set annihilates iff the rank is full.
fn annihilator_by_rank<F: FieldScalar>(
    g: &Graph,
    kind: MatrixKind,
    lambda: &F,
    set: u64,
    from_int: impl Fn(i64) -> F,
) -> bool {
    let n = g.n();
    let one = from_int(1);
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(n + set.count_ones() as usize);
    for i in 0..n {
        rows.push(
            (0..n)
                .map(|j| {
                    let e = from_int(int_entry(g, kind, i, j));
                    if i == j {
                        e.sub_mul(&one, lambda)
                    } else {
                        e
                    }
                })
                .collect(),
        );
    }
    for v in bits(set) {
        rows.push((0..n).map(|j| from_int((j == v) as i64)).collect());
    }
    field_rank(rows) == n
}
