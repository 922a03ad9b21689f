//! Dense rational matrices and the exact point linear algebra used throughout.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// Dense row-major `rows x cols` matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RealMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must equal rows*cols");
        RealMatrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RealMatrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RealMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        RealMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// All-ones matrix `E`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        RealMatrix {
            rows,
            cols,
            data: vec![Rational::one(); rows * cols],
        }
    }

    pub fn diag(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Componentwise absolute value `|A|`.
    pub fn abs(&self) -> Self {
        self.map(|v| v.abs())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|v| v * c)
    }

    pub fn add(&self, other: &RealMatrix) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RealMatrix) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &RealMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &RealMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = RealMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, x.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), x))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|v| !v.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// True when all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (RealMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a[(r, c)].recip();
            for j in c..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = &a[(r, j)] * &f;
                    a[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Rational::zero();
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a[(k, k)].clone();
            det *= &pivot;
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &pivot;
                for j in k..n {
                    let v = &a[(k, j)] * &f;
                    a[(i, j)] -= v;
                }
            }
        }
        det
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    pub fn inverse(&self) -> Option<RealMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = RealMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(RealMatrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `A x = b` for square nonsingular `A`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        if !self.is_square() || b.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let aug = RealMatrix::from_fn(n, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some((0..n).map(|i| r[(i, n)].clone()).collect())
    }

    /// True when `A x = b` has some real solution.
    pub fn is_consistent(&self, b: &[Rational]) -> bool {
        let aug = RealMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (_, pivots) = aug.rref();
        pivots.last() != Some(&self.cols)
    }

    /// Moore-Penrose inverse through a full-rank factorization `A = B C`.
    pub fn pseudo_inverse(&self) -> RealMatrix {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        if rank == 0 {
            return RealMatrix::zeros(self.cols, self.rows);
        }
        let b = RealMatrix::from_fn(self.rows, rank, |i, k| self[(i, pivots[k])].clone());
        let c = RealMatrix::from_fn(rank, self.cols, |k, j| r[(k, j)].clone());
        let bt = b.transpose();
        let ct = c.transpose();
        let btb_inv = bt.mul(&b).inverse().expect("B has full column rank");
        let cct_inv = c.mul(&ct).inverse().expect("C has full row rank");
        ct.mul(&cct_inv).mul(&btb_inv).mul(&bt)
    }

    /// Pivots of the unpivoted `L D L^T` elimination of a symmetric matrix.
    /// Stops at the first nonpositive pivot, which is included.
    pub fn ldl_pivots(&self) -> Vec<Rational> {
        assert!(self.is_square(), "LDL of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let d = a[(k, k)].clone();
            pivots.push(d.clone());
            if !d.is_positive() {
                break;
            }
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &d;
                for j in k + 1..n {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        pivots
    }

    /// Exact positive definiteness of a symmetric matrix.
    pub fn is_positive_definite(&self) -> bool {
        let p = self.ldl_pivots();
        p.len() == self.rows && p.iter().all(Signed::is_positive)
    }

    /// Exact positive semidefiniteness of a symmetric matrix.
    ///
    /// A zero pivot is admissible only when its whole remaining row is zero.
    pub fn is_positive_semidefinite(&self) -> bool {
        assert!(self.is_square(), "PSD test of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        for k in 0..n {
            let d = a[(k, k)].clone();
            if d.is_negative() {
                return false;
            }
            if d.is_zero() {
                if (k + 1..n).any(|j| !a[(k, j)].is_zero() || !a[(j, k)].is_zero()) {
                    return false;
                }
                continue;
            }
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &d;
                for j in k + 1..n {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        true
    }

    /// Leading principal minors `det(A[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<Rational> {
        (1..=self.rows)
            .map(|k| RealMatrix::from_fn(k, k, |i, j| self[(i, j)].clone()).det())
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RealMatrix {
        RealMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn max_entry(&self) -> Option<&Rational> {
        self.data.iter().max()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn vec_abs(x: &[Rational]) -> Vec<Rational> {
    x.iter().map(Signed::abs).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Positive multiple of `x` with coprime integer entries; zero stays zero.
pub fn primitive_vector(x: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    let l = x.iter().fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<num_bigint::BigInt> = x.iter().map(|v| (v * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return x.to_vec();
    }
    ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect()
}

pub fn is_zero_vec(x: &[Rational]) -> bool {
    x.iter().all(Zero::is_zero)
}

/// True when `(t I - M)` is nonsingular with a nonnegative inverse, which for
/// `M >= 0` and `t > 0` is equivalent to `rho(M) < t`.
pub fn spectral_radius_below(m: &RealMatrix, t: &Rational) -> bool {
    assert!(m.is_square() && m.is_nonnegative(), "expects a square nonnegative matrix");
    if !t.is_positive() {
        return false;
    }
    let shifted = RealMatrix::identity(m.rows()).scale(t).sub(m);
    shifted.inverse().is_some_and(|inv| inv.is_nonnegative())
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// `[a b; c d]`.
impl fmt::Display for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        f.write_str("]")
    }
}

pub fn format_vector(x: &[Rational]) -> String {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
