//! Interval matrices and vectors, sign vectors, and vertex matrices.
//!
//! An [`IntervalMatrix`] stands for the set of real matrices between its
//! bound matrices. Midpoint `A_c` and radius `Δ` views are computed on
//! demand; storage is dense.

use std::fmt;
use std::ops::Index;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::matrix::{self, RealMatrix};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Interval>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalVector {
    data: Vec<Interval>,
}

/// A vector with entries in `{+1, -1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    entries: Vec<i8>,
}

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::ShapeError("sign vector entries must be +1 or -1".into()));
        }
        Ok(SignVector { entries })
    }

    /// The all-ones vector `e`.
    pub fn ones(n: usize) -> Self {
        SignVector {
            entries: vec![1; n],
        }
    }

    /// The `k`-th element of `Y_n` in lexicographic order (`+1` before `-1`,
    /// first coordinate most significant).
    pub fn nth(n: usize, k: u64) -> Self {
        let entries = (0..n)
            .map(|j| if (k >> (n - 1 - j)) & 1 == 1 { -1 } else { 1 })
            .collect();
        SignVector { entries }
    }

    /// Iterates over all of `Y_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        assert!(n < 63, "sign enumeration limited to n < 63");
        (0..(1u64 << n)).map(move |k| SignVector::nth(n, k))
    }

    /// Sign pattern of `x`, mapping zeros to `+1`.
    pub fn of(x: &[Rational]) -> Self {
        SignVector {
            entries: x.iter().map(|v| if v.is_negative() { -1 } else { 1 }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> i8 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn negated(&self) -> Self {
        SignVector {
            entries: self.entries.iter().map(|s| -s).collect(),
        }
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.entries.iter().map(|&s| rational::int(s as i64)).collect()
    }

    /// `D_s x`.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .zip(x)
            .map(|(&s, v)| if s < 0 { -v } else { v.clone() })
            .collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.entries.iter().map(|&s| if s > 0 { "+1" } else { "-1" }).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl IntervalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Interval>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntervalMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Interval) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntervalMatrix { rows, cols, data }
    }

    pub fn from_bounds(lower: &RealMatrix, upper: &RealMatrix) -> Result<Self> {
        if (lower.rows(), lower.cols()) != (upper.rows(), upper.cols()) {
            return Err(Error::DimensionMismatch("bound matrices differ in shape".into()));
        }
        let data = lower
            .entries()
            .iter()
            .zip(upper.entries())
            .map(|(l, u)| Interval::new(l.clone(), u.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntervalMatrix {
            rows: lower.rows(),
            cols: lower.cols(),
            data,
        })
    }

    /// `[A_c - Δ, A_c + Δ]`; fails when `Δ` has a negative entry.
    pub fn from_midpoint_radius(center: &RealMatrix, radius: &RealMatrix) -> Result<Self> {
        if !radius.is_nonnegative() {
            return Err(Error::PreconditionViolated("radius matrix must be nonnegative".into()));
        }
        Self::from_bounds(&center.sub(radius), &center.add(radius))
    }

    pub fn degenerate(m: &RealMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| Interval::point(m[(i, j)].clone()))
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

    pub fn entries(&self) -> &[Interval] {
        &self.data
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn lower(&self) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].lo().clone())
    }

    pub fn upper(&self) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].hi().clone())
    }

    pub fn midpoint(&self) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].midpoint())
    }

    pub fn radius(&self) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].radius())
    }

    /// `(A_c, Δ)`.
    pub fn midpoint_radius(&self) -> (RealMatrix, RealMatrix) {
        (self.midpoint(), self.radius())
    }

    /// Componentwise magnitude `max |a|`.
    pub fn mag(&self) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mag())
    }

    pub fn is_degenerate(&self) -> bool {
        self.data.iter().all(Interval::is_degenerate)
    }

    /// `A_yz = A_c - D_y Δ D_z`: entry `(i,j)` is the lower bound when
    /// `y_i z_j = +1` and the upper bound otherwise.
    pub fn vertex_matrix(&self, y: &SignVector, z: &SignVector) -> Result<RealMatrix> {
        if y.len() != self.rows || z.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "sign vectors of length {}/{} for a {}x{} matrix",
                y.len(),
                z.len(),
                self.rows,
                self.cols
            )));
        }
        Ok(RealMatrix::from_fn(self.rows, self.cols, |i, j| {
            let e = &self[(i, j)];
            if y.get(i) * z.get(j) > 0 {
                e.lo().clone()
            } else {
                e.hi().clone()
            }
        }))
    }

    pub fn contains(&self, m: &RealMatrix) -> Result<bool> {
        if (m.rows(), m.cols()) != (self.rows, self.cols) {
            return Err(Error::DimensionMismatch("member shape differs".into()));
        }
        Ok(self.data.iter().zip(m.entries()).all(|(e, v)| e.contains(v)))
    }

    /// Exact range `{A x : A in self}`, componentwise `[A_c x - Δ|x|, A_c x + Δ|x|]`.
    pub fn matvec(&self, x: &[Rational]) -> Result<IntervalVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        let (center, radius) = self.midpoint_radius();
        let cx = center.matvec(x);
        let rx = radius.matvec(&matrix::vec_abs(x));
        Ok(IntervalVector {
            data: cx
                .iter()
                .zip(&rx)
                .map(|(c, r)| Interval::new(c - r, c + r).expect("radius is nonnegative"))
                .collect(),
        })
    }

    /// Interval-arithmetic product with an interval vector.
    pub fn mul_vector(&self, x: &IntervalVector) -> IntervalVector {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        IntervalVector {
            data: (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(Interval::zero(), |acc, j| &acc + &(&self[(i, j)] * &x[j]))
                })
                .collect(),
        }
    }

    /// Interval-arithmetic product `self * other`.
    pub fn mul(&self, other: &IntervalMatrix) -> IntervalMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        IntervalMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Interval::zero(), |acc, k| &acc + &(&self[(i, k)] * &other[(k, j)]))
        })
    }

    /// `C * A` for a real `C`; each entry of `A` occurs once per result entry,
    /// so this is the exact range.
    pub fn left_mul_real(&self, c: &RealMatrix) -> IntervalMatrix {
        assert_eq!(c.cols(), self.rows, "inner dimension mismatch");
        IntervalMatrix::from_fn(c.rows(), self.cols, |i, j| {
            (0..self.rows).fold(Interval::zero(), |acc, k| &acc + &self[(k, j)].scale(&c[(i, k)]))
        })
    }

    pub fn transpose(&self) -> IntervalMatrix {
        IntervalMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> IntervalMatrix {
        IntervalMatrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    /// `A - λ I`.
    pub fn shift_diagonal(&self, lambda: &Rational) -> IntervalMatrix {
        let shift = Interval::point(lambda.clone());
        IntervalMatrix::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                &self[(i, j)] - &shift
            } else {
                self[(i, j)].clone()
            }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntervalMatrix {
        IntervalMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Both bound matrices symmetric (equivalently `A_c` and `Δ` symmetric).
    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn is_zero_entry(&self, i: usize, j: usize) -> bool {
        self[(i, j)].is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.is_zero_entry(i, j)))
    }

    pub fn is_lower_bidiagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| i == j || i == j + 1 || self.is_zero_entry(i, j))
            })
    }

    pub fn is_upper_bidiagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| i == j || j == i + 1 || self.is_zero_entry(i, j))
            })
    }

    /// `w`-band: `a_ij = 0` whenever `|i - j| >= w`.
    pub fn is_band(&self, w: usize) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i.abs_diff(j) < w || self.is_zero_entry(i, j)))
    }

    /// At most `d` nonzero entries per row.
    pub fn is_sparse(&self, d: usize) -> bool {
        (0..self.rows).all(|i| (0..self.cols).filter(|&j| !self.is_zero_entry(i, j)).count() <= d)
    }

    /// Every member is a nonsingular M-matrix: off-diagonal upper bounds are
    /// nonpositive and the lower bound matrix is an M-matrix.
    pub fn is_m_matrix(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let z_pattern = (0..n).all(|i| (0..n).all(|j| i == j || !self[(i, j)].hi().is_positive()));
        z_pattern
            && self
                .lower()
                .inverse()
                .is_some_and(|inv| inv.is_nonnegative())
    }

    /// `A̲ >= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|e| !e.lo().is_negative())
    }
}

impl Index<(usize, usize)> for IntervalMatrix {
    type Output = Interval;
    fn index(&self, (i, j): (usize, usize)) -> &Interval {
        &self.data[i * self.cols + j]
    }
}

/// `[a:b c; d e:f]` using the interval text form.
impl fmt::Display for IntervalMatrix {
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

impl IntervalVector {
    pub fn new(data: Vec<Interval>) -> Self {
        IntervalVector { data }
    }

    pub fn from_bounds(lower: &[Rational], upper: &[Rational]) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch("bound vectors differ in length".into()));
        }
        Ok(IntervalVector {
            data: lower
                .iter()
                .zip(upper)
                .map(|(l, u)| Interval::new(l.clone(), u.clone()))
                .collect::<Result<_>>()?,
        })
    }

    pub fn degenerate(x: &[Rational]) -> Self {
        IntervalVector {
            data: x.iter().cloned().map(Interval::point).collect(),
        }
    }

    /// Symmetric box `[-r, r]`.
    pub fn symmetric(r: &[Rational]) -> Self {
        IntervalVector {
            data: r.iter().map(|v| Interval::spanning(-v, v.clone())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn entries(&self) -> &[Interval] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Interval> {
        self.data
    }

    pub fn lower(&self) -> Vec<Rational> {
        self.data.iter().map(|e| e.lo().clone()).collect()
    }

    pub fn upper(&self) -> Vec<Rational> {
        self.data.iter().map(|e| e.hi().clone()).collect()
    }

    pub fn midpoint(&self) -> Vec<Rational> {
        self.data.iter().map(Interval::midpoint).collect()
    }

    pub fn radius(&self) -> Vec<Rational> {
        self.data.iter().map(Interval::radius).collect()
    }

    pub fn mag(&self) -> Vec<Rational> {
        self.data.iter().map(Interval::mag).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.data.iter().all(Interval::is_degenerate)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.len() && self.data.iter().zip(x).all(|(e, v)| e.contains(v))
    }

    pub fn is_subset_of(&self, other: &IntervalVector) -> bool {
        self.len() == other.len() && self.data.iter().zip(&other.data).all(|(a, b)| a.is_subset_of(b))
    }

    pub fn intersect(&self, other: &IntervalVector) -> Option<IntervalVector> {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.intersect(b))
            .collect::<Option<Vec<_>>>()
            .map(IntervalVector::new)
    }

    pub fn hull(&self, other: &IntervalVector) -> IntervalVector {
        IntervalVector {
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.hull(b)).collect(),
        }
    }

    /// Unit vector `e_i` as a degenerate interval vector.
    pub fn unit(n: usize, i: usize) -> Self {
        IntervalVector {
            data: (0..n)
                .map(|k| Interval::point(if k == i { Rational::one() } else { Rational::zero() }))
                .collect(),
        }
    }

    /// Interval matrix with this vector as its single column.
    pub fn as_column(&self) -> IntervalMatrix {
        IntervalMatrix::from_fn(self.len(), 1, |i, _| self.data[i].clone())
    }
}

impl Index<usize> for IntervalVector {
    type Output = Interval;
    fn index(&self, i: usize) -> &Interval {
        &self.data[i]
    }
}

impl FromIterator<Interval> for IntervalVector {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        IntervalVector {
            data: iter.into_iter().collect(),
        }
    }
}

/// `[lo:hi; lo:hi; ...]`, always printing both endpoints.
impl fmt::Display for IntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.data.iter().map(|e| format!("{}:{}", e.lo(), e.hi())).collect();
        write!(f, "[{}]", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    fn sample() -> IntervalMatrix {
        IntervalMatrix::new(2, 2, vec![iv(-1, 1), iv(3, 3), iv(0, 4), iv(-2, 0)]).unwrap()
    }

    #[test]
    fn midpoint_radius_example() {
        let (c, r) = sample().midpoint_radius();
        assert_eq!(c, RealMatrix::from_i64(&[&[0, 3], &[2, -1]]));
        assert_eq!(r, RealMatrix::from_i64(&[&[1, 0], &[2, 1]]));
        assert_eq!(IntervalMatrix::from_midpoint_radius(&c, &r).unwrap(), sample());
        let one = IntervalMatrix::new(1, 1, vec![iv(0, 2)]).unwrap();
        assert_eq!(one.midpoint_radius(), (RealMatrix::from_i64(&[&[1]]), RealMatrix::from_i64(&[&[1]])));
        let d = RealMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(IntervalMatrix::degenerate(&d).midpoint_radius(), (d, RealMatrix::zeros(2, 2)));
    }

    #[test]
    fn vertex_matrices_follow_sign_products() {
        let a = sample();
        let e = SignVector::ones(2);
        assert_eq!(a.vertex_matrix(&e, &e).unwrap(), a.lower());
        assert_eq!(a.vertex_matrix(&e, &e.negated()).unwrap(), a.upper());
        for y in SignVector::all(2) {
            for z in SignVector::all(2) {
                let v = a.vertex_matrix(&y, &z).unwrap();
                assert!(a.contains(&v).unwrap());
                for i in 0..2 {
                    for j in 0..2 {
                        let at_lower = v[(i, j)] == *a[(i, j)].lo();
                        let at_upper = v[(i, j)] == *a[(i, j)].hi();
                        if y.get(i) * z.get(j) > 0 {
                            assert!(at_lower);
                        } else {
                            assert!(at_upper);
                        }
                    }
                }
            }
        }
        assert!(a.vertex_matrix(&SignVector::ones(3), &e).is_err());
    }

    #[test]
    fn containment() {
        let a = sample();
        assert!(a.contains(&a.midpoint()).unwrap());
        let one = IntervalMatrix::new(1, 1, vec![iv(0, 1)]).unwrap();
        assert!(!one.contains(&RealMatrix::from_i64(&[&[2]])).unwrap());
        assert!(one.contains(&RealMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn matvec_examples() {
        let row = IntervalMatrix::new(1, 2, vec![iv(0, 1), iv(1, 1)]).unwrap();
        assert_eq!(row.matvec(&[int(1), int(1)]).unwrap(), IntervalVector::new(vec![iv(1, 2)]));
        let d = RealMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let x = [int(1), int(-1)];
        assert_eq!(
            IntervalMatrix::degenerate(&d).matvec(&x).unwrap(),
            IntervalVector::degenerate(&d.matvec(&x))
        );
        assert!(row.matvec(&[int(1)]).is_err());
    }

    #[test]
    fn sign_enumeration_is_lexicographic() {
        let all: Vec<_> = SignVector::all(2).collect();
        assert_eq!(all[0].entries(), &[1, 1]);
        assert_eq!(all[1].entries(), &[1, -1]);
        assert_eq!(all[3].entries(), &[-1, -1]);
        assert_eq!(all[2].entries(), &[-1, 1]);
        assert_eq!(SignVector::all(4).count(), 16);
    }

    #[test]
    fn structure_predicates() {
        let bid = IntervalMatrix::new(2, 2, vec![iv(1, 2), iv(0, 0), iv(0, 1), iv(1, 1)]).unwrap();
        assert!(bid.is_lower_bidiagonal());
        assert!(!bid.is_upper_bidiagonal());
        assert!(bid.is_band(2));
        assert!(!bid.is_diagonal());
        let m = IntervalMatrix::new(2, 2, vec![iv(3, 4), iv(-1, 0), iv(-1, -1), iv(3, 3)]).unwrap();
        assert!(m.is_m_matrix());
        assert!(!sample().is_m_matrix());
    }
}
