use num_traits::Signed;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, IntervalVector};

use super::enclosure::{enclosure, EnclosureOptions, Method};
use super::{check_system, SolveReport};

fn diagonal_recips(a: &IntervalMatrix) -> Result<Vec<Interval>> {
    (0..a.rows())
        .map(|i| a[(i, i)].recip().map_err(|_| Error::DiagonalContainsZero(i)))
        .collect()
}

/// Exact hull for a diagonal interval matrix: `x_i = b_i / a_ii`.
pub fn hull_diagonal(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    check_system(a, b)?;
    if !a.is_diagonal() {
        return Err(Error::UnsupportedMatrixClass("matrix is not diagonal".into()));
    }
    let r = diagonal_recips(a)?;
    let x = (0..a.rows()).map(|i| &b[i] * &r[i]).collect();
    Ok(SolveReport::boxed("diagonal", x, true))
}

/// Exact hull for a lower- or upper-bidiagonal matrix by substitution.
pub fn hull_bidiagonal(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    check_system(a, b)?;
    let lower = a.is_lower_bidiagonal();
    if !lower && !a.is_upper_bidiagonal() {
        return Err(Error::NotBidiagonal);
    }
    let n = a.rows();
    let r = diagonal_recips(a)?;
    let mut x = vec![Interval::zero(); n];
    let order: Vec<usize> = if lower { (0..n).collect() } else { (0..n).rev().collect() };
    for (step, &i) in order.iter().enumerate() {
        let mut s = b[i].clone();
        if step > 0 {
            let prev = order[step - 1];
            s = &s - &(&a[(i, prev)] * &x[prev]);
        }
        x[i] = &s * &r[i];
    }
    Ok(SolveReport::boxed("bidiagonal", IntervalVector::new(x), true))
}

/// Exact hull for an inverse-nonnegative matrix with sign-definite `b`:
/// `[A̅^-1 b̲, A̲^-1 b̅]` for `b >= 0`, `[A̲^-1 b̲, A̅^-1 b̅]` for `b <= 0`.
pub fn hull_inverse_nonneg(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    check_system(a, b)?;
    a.require_square()?;
    let inv_lo = a.lower().inverse();
    let inv_hi = a.upper().inverse();
    let (Some(inv_lo), Some(inv_hi)) = (inv_lo, inv_hi) else {
        return Err(Error::PreconditionViolated("endpoint matrix is singular".into()));
    };
    if !inv_lo.is_nonnegative() || !inv_hi.is_nonnegative() {
        return Err(Error::PreconditionViolated("matrix is not inverse nonnegative".into()));
    }
    let (bl, bu) = (b.lower(), b.upper());
    let (lo, hi) = if bl.iter().all(|v| !v.is_negative()) {
        (inv_hi.matvec(&bl), inv_lo.matvec(&bu))
    } else if bu.iter().all(|v| !v.is_positive()) {
        (inv_lo.matvec(&bl), inv_hi.matvec(&bu))
    } else {
        return Err(Error::PreconditionViolated("right-hand side must be sign definite".into()));
    };
    Ok(SolveReport::boxed("inverse-nonneg", IntervalVector::from_bounds(&lo, &hi)?, true))
}

/// Enclosure of the least-squares set through the interval normal equations.
pub fn lsq_enclosure(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    check_system(a, b)?;
    if a.rows() < a.cols() {
        return Err(Error::ShapeError("least squares needs rows >= cols".into()));
    }
    let at = a.transpose();
    let ata = at.mul(a);
    let atb = at.mul_vector(b);
    let opts = EnclosureOptions::default();
    let mut last = Error::NoInitialEnclosure;
    for m in [Method::Hbr, Method::Krawczyk, Method::GaussSeidel] {
        match enclosure(&ata, &atb, m, &opts) {
            Ok(mut r) => {
                r.method = format!("lsq-{}", r.method);
                r.exact = false;
                return Ok(r);
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}
