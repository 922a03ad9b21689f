//! Regularity, singularity and full column rank.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval_matrix::{IntervalMatrix, SignVector};
use crate::lp::{self, LinearProgram};
use crate::matrix::{spectral_radius_below, RealMatrix};
use crate::orthant;
use crate::rational::{self, Rational};
use crate::spectral::{self, default_tolerance};
use crate::verdict::{Certificate, Decision, Verdict};

/// Bits of the grid used for the rational upper bound on a Frobenius norm.
const NORM_BITS: u32 = 40;

/// Searches for `x != 0` with `|A_c x| <= Δ|x|`, normalized by `e^T D_s x >= 1`.
fn null_vector_search(a: &IntervalMatrix) -> Option<(SignVector, Vec<Rational>)> {
    let (center, delta) = a.midpoint_radius();
    let n = a.cols();
    orthant::search(n, true, |s| {
        let ds = orthant::radius_times_sign(&delta, s);
        let mut prog = LinearProgram::new(n);
        for i in 0..a.rows() {
            let c = center.row(i);
            let d = ds.row(i);
            prog.le(c.iter().zip(d).map(|(x, y)| x - y).collect(), Rational::zero());
            prog.ge(c.iter().zip(d).map(|(x, y)| x + y).collect(), Rational::zero());
        }
        prog.ge(s.as_rationals(), Rational::one());
        orthant::restrict_to_orthant(&mut prog, s, 0);
        lp::feasible_point(&prog)
            .expect("well-formed program")
            .map(|x| crate::matrix::primitive_vector(&x))
    })
}

fn singular_certificate(a: &IntervalMatrix, s: SignVector, x: Vec<Rational>) -> Certificate {
    let (center, delta) = a.midpoint_radius();
    let zeros = vec![Rational::zero(); a.rows()];
    let (member, _) = orthant::op_member(&center, &delta, &zeros, &zeros, &x);
    debug_assert!(member.matvec(&x).iter().all(Zero::is_zero));
    Certificate::SingularMember { sign: s, x, member }
}

/// Exact regularity test. A negative answer carries a singular member.
pub fn is_regular_exact(a: &IntervalMatrix) -> Result<Decision> {
    a.require_square()?;
    Ok(match null_vector_search(a) {
        None => Decision::yes(None),
        Some((s, x)) => Decision::no(Some(singular_certificate(a, s, x))),
    })
}

/// Exact full column rank test for `m >= n`.
pub fn has_full_column_rank_exact(a: &IntervalMatrix) -> Result<Decision> {
    if a.rows() < a.cols() {
        return Err(Error::ShapeError(format!(
            "full column rank needs rows >= cols, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(match null_vector_search(a) {
        None => Decision::yes(None),
        Some((s, x)) => Decision::no(Some(singular_certificate(a, s, x))),
    })
}

fn bad_condition(cond: u8, max: u8) -> Error {
    Error::PreconditionViolated(format!("condition must be between 1 and {max}, got {cond}"))
}

/// `σ_max(Δ) < σ_min(A_c)` decided from enclosures.
fn singular_value_gap(center: &RealMatrix, delta: &RealMatrix) -> Result<Verdict> {
    let tau = default_tolerance();
    let (smin, _) = spectral::extremal_singular_values(center, &tau)?;
    let (_, dmax) = spectral::extremal_singular_values(delta, &tau)?;
    Ok(if dmax.hi() < smin.lo() {
        Verdict::proven(format!("sigma_max(D) <= {} < {} <= sigma_min(Ac)", dmax.hi(), smin.lo()))
    } else {
        Verdict::unknown("sigma_max(D) < sigma_min(Ac) not established")
    })
}

/// Sufficient conditions for regularity (`cond` in `1..=3`); never refutes.
pub fn regularity_sufficient(a: &IntervalMatrix, cond: u8) -> Result<Verdict> {
    let n = a.require_square()?;
    let (center, delta) = a.midpoint_radius();
    match cond {
        1 => {
            let Some(inv) = center.inverse() else {
                return Ok(Verdict::unknown("midpoint matrix is singular"));
            };
            let r = inv.abs().mul(&delta);
            Ok(if spectral_radius_below(&r, &Rational::one()) {
                Verdict::proven("rho(|Ac^-1| D) < 1")
            } else {
                Verdict::unknown("rho(|Ac^-1| D) >= 1")
            })
        }
        2 => singular_value_gap(&center, &delta),
        3 => {
            let ctc = center.transpose().mul(&center);
            let g = delta.transpose().mul(&delta);
            let id = RealMatrix::identity(n);
            let frob_sq: Rational = g.entries().iter().map(|v| v * v).sum();
            let frob = rational::sqrt_ceil(&frob_sq, NORM_BITS);
            if ctc.sub(&id.scale(&frob)).is_positive_definite() {
                return Ok(Verdict::proven("Ac^T Ac - ||D^T D||_F I is positive definite"));
            }
            let (_, lmax) = spectral::sym_eigen_range(&g, &default_tolerance())?;
            if ctc.sub(&id.scale(lmax.hi())).is_positive_definite() {
                return Ok(Verdict::proven("Ac^T Ac - ||D^T D||_2 I is positive definite"));
            }
            Ok(Verdict::unknown("Ac^T Ac - ||D^T D|| I not shown positive definite"))
        }
        _ => Err(bad_condition(cond, 3)),
    }
}

/// Sufficient conditions for singularity (`cond` in `1..=3`); never refutes.
pub fn singularity_sufficient(a: &IntervalMatrix, cond: u8) -> Result<Verdict> {
    a.require_square()?;
    let (center, delta) = a.midpoint_radius();
    match cond {
        1 => {
            let Some(inv) = center.inverse() else {
                return Ok(Verdict::unknown("midpoint matrix is singular"));
            };
            let r = inv.abs().mul(&delta);
            Ok(if r.diagonal().iter().any(|v| v >= &Rational::one()) {
                Verdict::proven("max_j (|Ac^-1| D)_jj >= 1")
            } else {
                Verdict::unknown("max_j (|Ac^-1| D)_jj < 1")
            })
        }
        2 => Ok(match delta.sub(&center.abs()).inverse() {
            Some(inv) if inv.is_nonnegative() => Verdict::proven("(D - |Ac|)^-1 >= 0"),
            _ => Verdict::unknown("(D - |Ac|)^-1 is not nonnegative"),
        }),
        3 => {
            let m = delta.transpose().mul(&delta).sub(&center.transpose().mul(&center));
            Ok(if m.is_positive_semidefinite() {
                Verdict::proven("D^T D - Ac^T Ac is positive semidefinite")
            } else {
                Verdict::unknown("D^T D - Ac^T Ac is not positive semidefinite")
            })
        }
        _ => Err(bad_condition(cond, 3)),
    }
}

/// Tries `A - z z^T / (z^T A^-1 z)` for `z` in `Y_n` on `[A - E, A + E]`.
pub fn singular_candidate_search(a: &IntervalMatrix) -> Result<Option<RealMatrix>> {
    let n = a.require_square()?;
    let (center, delta) = a.midpoint_radius();
    if delta != RealMatrix::ones(n, n) {
        return Err(Error::PreconditionViolated("radius matrix must be all ones".into()));
    }
    let inv = center
        .inverse()
        .ok_or_else(|| Error::PreconditionViolated("midpoint matrix must be invertible".into()))?;
    for z in SignVector::all(n) {
        let zr = z.as_rationals();
        let denom = crate::matrix::dot(&zr, &inv.matvec(&zr));
        if denom.is_zero() {
            continue;
        }
        let m = RealMatrix::from_fn(n, n, |i, j| &center[(i, j)] - &zr[i] * &zr[j] / &denom);
        if m.is_singular() && a.contains(&m)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Sufficient conditions for full column rank (`cond` in `1..=2`); never refutes.
pub fn fcr_sufficient(a: &IntervalMatrix, cond: u8) -> Result<Verdict> {
    let (center, delta) = a.midpoint_radius();
    if a.rows() < a.cols() {
        return Ok(Verdict::unknown("fewer rows than columns"));
    }
    match cond {
        1 => {
            if center.rank() < center.cols() {
                return Ok(Verdict::unknown("midpoint lacks full column rank"));
            }
            let r = center.pseudo_inverse().abs().mul(&delta);
            Ok(if spectral_radius_below(&r, &Rational::one()) {
                Verdict::proven("rho(|Ac^+| D) < 1")
            } else {
                Verdict::unknown("rho(|Ac^+| D) >= 1")
            })
        }
        2 => singular_value_gap(&center, &delta),
        _ => Err(bad_condition(cond, 2)),
    }
}
