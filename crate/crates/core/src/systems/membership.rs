use num_traits::Zero;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, IntervalVector};
use crate::lp::{self, LinearProgram};
use crate::matrix::{self, RealMatrix};
use crate::rational::Rational;

use super::check_system;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcKind {
    Tolerance,
    Control,
}

fn residual_parts(
    a: &IntervalMatrix,
    b: &IntervalVector,
    x: &[Rational],
) -> Result<(Vec<Rational>, Vec<Rational>, Vec<Rational>)> {
    check_system(a, b)?;
    if x.len() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "point of length {} for {} unknowns",
            x.len(),
            a.cols()
        )));
    }
    let (center, delta) = a.midpoint_radius();
    let r = matrix::vec_abs(&matrix::vec_sub(&center.matvec(x), &b.midpoint()));
    let dx = delta.matvec(&matrix::vec_abs(x));
    Ok((r, dx, b.radius()))
}

/// Oettli–Prager test `|A_c x - b_c| <= Δ|x| + δ`.
pub fn is_solution(a: &IntervalMatrix, b: &IntervalVector, x: &[Rational]) -> Result<bool> {
    let (r, dx, db) = residual_parts(a, b, x)?;
    Ok(r.iter().zip(dx.iter().zip(&db)).all(|(ri, (p, q))| ri <= &(p + q)))
}

/// Tolerance: `|A_c x - b_c| <= -Δ|x| + δ`. Control: `|A_c x - b_c| <= Δ|x| - δ`.
pub fn tc_membership(a: &IntervalMatrix, b: &IntervalVector, x: &[Rational], kind: TcKind) -> Result<bool> {
    let (r, dx, db) = residual_parts(a, b, x)?;
    Ok(r.iter().zip(dx.iter().zip(&db)).all(|(ri, (p, q))| match kind {
        TcKind::Tolerance => ri <= &(q - p),
        TcKind::Control => ri <= &(p - q),
    }))
}

/// `A(p) x = b(p)` with `A(p) = sum_k p_k A^k`, `b(p) = sum_k p_k b^k`, `p` in a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricSystem {
    matrices: Vec<RealMatrix>,
    vectors: Vec<Vec<Rational>>,
    params: IntervalVector,
}

impl ParametricSystem {
    pub fn new(matrices: Vec<RealMatrix>, vectors: Vec<Vec<Rational>>, params: IntervalVector) -> Result<Self> {
        let k = matrices.len();
        if k == 0 {
            return Err(Error::EmptyInput);
        }
        if vectors.len() != k || params.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "{k} matrices, {} vectors, {} parameters",
                vectors.len(),
                params.len()
            )));
        }
        let (m, n) = (matrices[0].rows(), matrices[0].cols());
        if matrices.iter().any(|a| (a.rows(), a.cols()) != (m, n)) || vectors.iter().any(|b| b.len() != m) {
            return Err(Error::DimensionMismatch("parameter terms differ in shape".into()));
        }
        Ok(ParametricSystem {
            matrices,
            vectors,
            params,
        })
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn params(&self) -> &IntervalVector {
        &self.params
    }

    pub fn matrix_at(&self, p: &[Rational]) -> RealMatrix {
        let (m, n) = (self.matrices[0].rows(), self.matrices[0].cols());
        self.matrices
            .iter()
            .zip(p)
            .fold(RealMatrix::zeros(m, n), |acc, (a, pk)| acc.add(&a.scale(pk)))
    }

    pub fn rhs_at(&self, p: &[Rational]) -> Vec<Rational> {
        let m = self.vectors[0].len();
        self.vectors.iter().zip(p).fold(vec![Rational::zero(); m], |acc, (b, pk)| {
            acc.iter().zip(b).map(|(s, v)| s + v * pk).collect()
        })
    }

    /// The interval system obtained by treating every entry independently.
    pub fn relax(&self) -> (IntervalMatrix, IntervalVector) {
        let (m, n) = (self.matrices[0].rows(), self.matrices[0].cols());
        let a = IntervalMatrix::from_fn(m, n, |i, j| {
            self.matrices
                .iter()
                .zip(self.params.entries())
                .fold(Interval::zero(), |acc, (ak, pk)| &acc + &pk.scale(&ak[(i, j)]))
        });
        let b = (0..m)
            .map(|i| {
                self.vectors
                    .iter()
                    .zip(self.params.entries())
                    .fold(Interval::zero(), |acc, (bk, pk)| &acc + &pk.scale(&bk[i]))
            })
            .collect();
        (a, b)
    }
}

/// Decides `x` in the parametric solution set by one LP in `p`; returns the parameter witness.
pub fn is_solution_parametric(sys: &ParametricSystem, x: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let n = sys.matrices[0].cols();
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!("point of length {} for {n} unknowns", x.len())));
    }
    let k = sys.len();
    let cols: Vec<Vec<Rational>> = sys
        .matrices
        .iter()
        .zip(&sys.vectors)
        .map(|(a, b)| matrix::vec_sub(&a.matvec(x), b))
        .collect();
    let mut prog = LinearProgram::new(k);
    for i in 0..sys.vectors[0].len() {
        prog.equal((0..k).map(|t| cols[t][i].clone()).collect(), Rational::zero());
    }
    for (t, p) in sys.params.entries().iter().enumerate() {
        prog.set_bounds(t, Some(p.lo().clone()), Some(p.hi().clone()));
    }
    let p = lp::feasible_point(&prog)?;
    debug_assert!(p
        .as_ref()
        .is_none_or(|p| sys.matrix_at(p).matvec(x) == sys.rhs_at(p)));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn membership_examples() {
        let m = RealMatrix::from_i64(&[&[2, 1], &[1, 3]]);
        let b = vec![int(3), int(5)];
        let x = m.solve(&b).unwrap();
        let a = IntervalMatrix::degenerate(&m);
        assert!(is_solution(&a, &IntervalVector::degenerate(&b), &x).unwrap());
        let zero = vec![int(0), int(0)];
        let b_in = IntervalVector::new(vec![iv(-1, 1), iv(0, 2)]);
        let b_out = IntervalVector::new(vec![iv(-1, 1), iv(1, 2)]);
        assert!(is_solution(&a, &b_in, &zero).unwrap());
        assert!(!is_solution(&a, &b_out, &zero).unwrap());
        assert!(is_solution(&a, &b_in, &[int(1)]).is_err());
    }

    #[test]
    fn tolerance_control_examples() {
        let a = IntervalMatrix::new(1, 1, vec![iv(1, 1)]).unwrap();
        let b = IntervalVector::new(vec![iv(-1, 1)]);
        assert!(tc_membership(&a, &b, &[int(0)], TcKind::Tolerance).unwrap());
        assert!(!tc_membership(&a, &b, &[int(0)], TcKind::Control).unwrap());
        let a = IntervalMatrix::new(1, 1, vec![iv(0, 2)]).unwrap();
        let b = IntervalVector::new(vec![iv(1, 1)]);
        assert!(tc_membership(&a, &b, &[int(1)], TcKind::Control).unwrap());
        assert!(!tc_membership(&a, &b, &[int(1)], TcKind::Tolerance).unwrap());
    }

    #[test]
    fn parametric_single_term() {
        let a = RealMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        let sys = ParametricSystem::new(
            vec![a],
            vec![vec![int(2), int(2)]],
            IntervalVector::new(vec![iv(1, 1)]),
        )
        .unwrap();
        assert_eq!(is_solution_parametric(&sys, &[int(1), ratio(1, 2)]).unwrap(), Some(vec![int(1)]));
        assert_eq!(is_solution_parametric(&sys, &[int(1), int(1)]).unwrap(), None);
    }

    #[test]
    fn parametric_dependency_is_respected() {
        // A(p) = [[p1, p2], [p2, p1]] (symmetric), b = (1, 0), p in [0,1]^2 with p1 shared.
        let a1 = RealMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let a2 = RealMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let sys = ParametricSystem::new(
            vec![a1, a2, RealMatrix::zeros(2, 2)],
            vec![vec![int(0), int(0)], vec![int(0), int(0)], vec![int(1), int(0)]],
            IntervalVector::new(vec![iv(0, 1), iv(0, 1), iv(1, 1)]),
        )
        .unwrap();
        // x = (1, -1): rows give p1 - p2 = 1 and p2 - p1 = 0, no common p.
        let x = [int(1), int(-1)];
        assert_eq!(is_solution_parametric(&sys, &x).unwrap(), None);
        let (ra, rb) = sys.relax();
        assert!(is_solution(&ra, &rb, &x).unwrap());
        // x = (1, 0): p1 = 1, p2 = 0 works.
        let p = is_solution_parametric(&sys, &[int(1), int(0)]).unwrap().unwrap();
        assert!(sys.params().contains(&p));
    }
}
