//! Exact integer matrices: characteristic polynomials, determinants, ranks.
//!
//! The characteristic polynomial is computed by the Berkowitz algorithm,
//! which is division-free, so every intermediate value is an integer. The
//! determinant uses Bareiss fraction-free elimination. Rank over a field is
//! plain Gaussian elimination, generic over a small scalar trait so the
//! same code serves exact rationals and quadratic extensions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{IntPolynomial, Rational};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl core::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "IntMatrix {n}x{n} [", n = self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(n: usize) -> IntMatrix {
        IntMatrix { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> IntMatrix {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "ragged matrix literal");
        IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Characteristic polynomial `det(xI - A)`, monic of degree `n`,
    /// computed by the Berkowitz algorithm. Division-free: exact for any
    /// integer matrix.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        // Coefficients highest-degree first while iterating.
        let mut c: Vec<BigInt> = vec![BigInt::one()];
        for r in 1..=n {
            // Toeplitz column for the r-th leading principal submatrix:
            // t[0] = 1, t[1] = -A[r-1][r-1],
            // t[k] = -(R * M^(k-2) * S) for the bordering row R, column S
            // and the (r-1)-dimensional principal block M.
            let mut t = Vec::with_capacity(r + 1);
            t.push(BigInt::one());
            t.push(-self.get(r - 1, r - 1).clone());
            if r >= 2 {
                let mut v: Vec<BigInt> = (0..r - 1).map(|i| self.get(i, r - 1).clone()).collect();
                for step in 2..=r {
                    let dot: BigInt = (0..r - 1).map(|j| self.get(r - 1, j) * &v[j]).sum();
                    t.push(-dot);
                    if step < r {
                        v = (0..r - 1)
                            .map(|i| (0..r - 1).map(|j| self.get(i, j) * &v[j]).sum())
                            .collect();
                    }
                }
            }
            // One Toeplitz multiply: c_new[i] = sum_j t[i-j] * c_old[j],
            // truncated to indices 0..=r.
            let mut cnew = vec![BigInt::zero(); r + 1];
            for (j, cj) in c.iter().enumerate() {
                for (k, tk) in t.iter().enumerate() {
                    if j + k <= r {
                        cnew[j + k] += tk * cj;
                    }
                }
            }
            c = cnew;
        }
        c.reverse();
        IntPolynomial::from_bigints(c)
    }

    /// Determinant by Bareiss fraction-free elimination. Every division in
    /// the algorithm is exact.
    pub fn bareiss_det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| -> BigInt { m[i * n + j].clone() };
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !at(&m, i, k).is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                let head = at(&m, i, k);
                for j in k + 1..n {
                    let num = at(&m, i, j) * &pivot - &head * at(&m, k, j);
                    let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                    debug_assert!(r.is_zero());
                    m[i * n + j] = q;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let d = at(&m, n - 1, n - 1);
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Rank over the rationals.
    pub fn rational_rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| Rational::from_integer(self.get(i, j).clone())).collect())
            .collect();
        field_rank(rows)
    }
}

/// Minimal scalar interface for exact Gaussian elimination. Implemented for
/// the rationals here and for quadratic extensions elsewhere.
pub trait FieldScalar: Clone {
    /// Named to avoid colliding with `num_traits::Zero::is_zero` on types
    /// that implement both.
    fn vanishes(&self) -> bool;
    /// `self - factor * other`.
    fn sub_mul(&self, factor: &Self, other: &Self) -> Self;
    /// `self / other`, `other` nonzero.
    fn div(&self, other: &Self) -> Self;
}

impl FieldScalar for Rational {
    fn vanishes(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn sub_mul(&self, factor: &Rational, other: &Rational) -> Rational {
        self - factor * other
    }

    fn div(&self, other: &Rational) -> Rational {
        self / other
    }
}

/// Rank of a rectangular matrix given as rows, by Gaussian elimination.
pub fn field_rank<F: FieldScalar>(mut rows: Vec<Vec<F>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !rows[r][col].vanishes()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        for r in rank + 1..nrows {
            if rows[r][col].vanishes() {
                continue;
            }
            let factor = rows[r][col].div(&rows[rank][col]);
            for c in col..ncols {
                rows[r][c] = rows[r][c].sub_mul(&factor, &rows[rank][c]);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
