use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::interval_matrix::{IntervalMatrix, IntervalVector, SignVector};
use crate::lp::{self, LinearProgram};
use crate::matrix::{self, RealMatrix};
use crate::orthant;
use crate::rational::Rational;
use crate::verdict::{Certificate, Decision};

use super::hull::orthant_program;
use super::membership::{tc_membership, TcKind};
use super::check_system;

/// Largest `m + n` for the exhaustive vertex self-check of universal witnesses.
const VERTEX_CHECK_MAX: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvabilityMode {
    Weak,
    Strong,
    NonnegWeak,
    NonnegStrong,
}

impl SolvabilityMode {
    pub const ALL: [SolvabilityMode; 4] = [
        SolvabilityMode::Weak,
        SolvabilityMode::Strong,
        SolvabilityMode::NonnegWeak,
        SolvabilityMode::NonnegStrong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolvabilityMode::Weak => "weak",
            SolvabilityMode::Strong => "strong",
            SolvabilityMode::NonnegWeak => "nonneg-weak",
            SolvabilityMode::NonnegStrong => "nonneg-strong",
        }
    }
}

impl fmt::Display for SolvabilityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolvabilityMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SolvabilityMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown solvability mode `{s}`")))
    }
}

fn combine(a: &[Rational], b: &[Rational], sign: i64) -> Vec<Rational> {
    a.iter()
        .zip(b)
        .map(|(x, y)| if sign > 0 { x + y } else { x - y })
        .collect()
}

fn member_system(a: &IntervalMatrix, b: &IntervalVector, x: Vec<Rational>) -> Certificate {
    let (center, delta) = a.midpoint_radius();
    let (matrix, rhs) = orthant::op_member(&center, &delta, &b.midpoint(), &b.radius(), &x);
    debug_assert_eq!(matrix.matvec(&x), rhs);
    Certificate::MemberSystem { matrix, rhs, x }
}

/// Searches `p` with sign `s` such that some `A` has `A^T p = 0` (or `>= 0`
/// when `nonneg`) and some `b` has `b^T p <= -1`.
fn farkas_search(a: &IntervalMatrix, b: &IntervalVector, nonneg: bool) -> Option<(SignVector, Vec<Rational>)> {
    let (center, delta) = a.midpoint_radius();
    let (m, n) = (a.rows(), a.cols());
    let (bc, bd) = (b.midpoint(), b.radius());
    orthant::search(m, false, |s| {
        let mut prog = LinearProgram::new(m);
        for j in 0..n {
            let c: Vec<Rational> = (0..m).map(|i| center[(i, j)].clone()).collect();
            let d: Vec<Rational> = (0..m)
                .map(|i| if s.get(i) > 0 { delta[(i, j)].clone() } else { -&delta[(i, j)] })
                .collect();
            prog.ge(combine(&c, &d, 1), Rational::zero());
            if !nonneg {
                prog.le(combine(&c, &d, -1), Rational::zero());
            }
        }
        prog.le(combine(&bc, &s.apply(&bd), -1), -Rational::one());
        orthant::restrict_to_orthant(&mut prog, s, 0);
        lp::feasible_point(&prog).expect("well-formed program")
    })
}

fn farkas_certificate(a: &IntervalMatrix, b: &IntervalVector, s: &SignVector, p: Vec<Rational>, nonneg: bool) -> Certificate {
    let (center, delta) = a.midpoint_radius();
    let matrix = if nonneg {
        RealMatrix::from_fn(a.rows(), a.cols(), |i, j| {
            if s.get(i) > 0 {
                &center[(i, j)] + &delta[(i, j)]
            } else {
                &center[(i, j)] - &delta[(i, j)]
            }
        })
    } else {
        let zeros = vec![Rational::zero(); a.cols()];
        orthant::op_member(&center.transpose(), &delta.transpose(), &zeros, &zeros, &p)
            .0
            .transpose()
    };
    let rhs = combine(&b.midpoint(), &s.apply(&b.radius()), -1);
    Certificate::Farkas { p, matrix, rhs }
}

/// Weak, strong and nonnegative solvability of `A x = b`.
pub fn solvability(a: &IntervalMatrix, b: &IntervalVector, mode: SolvabilityMode) -> Result<Decision> {
    check_system(a, b)?;
    let n = a.cols();
    match mode {
        SolvabilityMode::Weak => Ok(
            match orthant::search(n, false, |s| {
                lp::feasible_point(&orthant_program(a, b, s)).expect("well-formed program")
            }) {
                Some((_, x)) => Decision::yes(Some(member_system(a, b, x))),
                None => Decision::no(None),
            },
        ),
        SolvabilityMode::NonnegWeak => {
            let (lo, hi) = (a.lower(), a.upper());
            let mut prog = LinearProgram::nonneg(n);
            for i in 0..a.rows() {
                prog.le(lo.row(i).to_vec(), b[i].hi().clone());
                prog.ge(hi.row(i).to_vec(), b[i].lo().clone());
            }
            Ok(match lp::feasible_point(&prog)? {
                Some(x) => Decision::yes(Some(member_system(a, b, x))),
                None => Decision::no(None),
            })
        }
        SolvabilityMode::Strong | SolvabilityMode::NonnegStrong => {
            let nonneg = mode == SolvabilityMode::NonnegStrong;
            Ok(match farkas_search(a, b, nonneg) {
                None => Decision::yes(None),
                Some((s, p)) => Decision::no(Some(farkas_certificate(a, b, &s, p, nonneg))),
            })
        }
    }
}

/// `true` when `A_yz x <= b` for every vertex matrix.
fn all_vertices_satisfy(a: &IntervalMatrix, x: &[Rational], bound: &[Rational]) -> bool {
    SignVector::all(a.rows()).all(|y| {
        SignVector::all(a.cols()).all(|z| {
            let v = a.vertex_matrix(&y, &z).expect("matching dimensions");
            v.matvec(x).iter().zip(bound).all(|(l, r)| l <= r)
        })
    })
}

/// Weak, strong and nonnegative solvability of `A x <= b`. A strong `true`
/// carries a universal witness `x` with `A x <= b` for all members.
pub fn ineq_solvability(a: &IntervalMatrix, b: &IntervalVector, mode: SolvabilityMode) -> Result<Decision> {
    check_system(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let (lo, hi) = (a.lower(), a.upper());
    let witness = |x: Option<Vec<Rational>>| match x {
        Some(x) => Decision::yes(Some(Certificate::Witness(x))),
        None => Decision::no(None),
    };
    match mode {
        SolvabilityMode::Weak => {
            let (center, delta) = a.midpoint_radius();
            let found = orthant::search(n, false, |s| {
                let ds = orthant::radius_times_sign(&delta, s);
                let mut prog = LinearProgram::new(n);
                for i in 0..m {
                    prog.le(combine(center.row(i), ds.row(i), -1), b[i].hi().clone());
                }
                orthant::restrict_to_orthant(&mut prog, s, 0);
                lp::feasible_point(&prog).expect("well-formed program")
            });
            Ok(match found {
                Some((s, x)) => {
                    let matrix = center.sub(&orthant::radius_times_sign(&delta, &s));
                    Decision::yes(Some(Certificate::MemberSystem {
                        matrix,
                        rhs: b.upper(),
                        x,
                    }))
                }
                None => Decision::no(None),
            })
        }
        SolvabilityMode::Strong => {
            let mut prog = LinearProgram::nonneg(2 * n);
            for i in 0..m {
                let row: Vec<Rational> = hi.row(i).iter().cloned().chain(lo.row(i).iter().map(|v| -v)).collect();
                prog.le(row, b[i].lo().clone());
            }
            let Some(z) = lp::feasible_point(&prog)? else {
                return Ok(Decision::no(None));
            };
            let x = matrix::vec_sub(&z[..n], &z[n..]);
            let (center, delta) = a.midpoint_radius();
            let worst = matrix::vec_add(&center.matvec(&x), &delta.matvec(&matrix::vec_abs(&x)));
            let bl = b.lower();
            assert!(worst.iter().zip(&bl).all(|(l, r)| l <= r), "universal witness failed");
            if m + n <= VERTEX_CHECK_MAX {
                assert!(all_vertices_satisfy(a, &x, &bl), "universal witness failed at a vertex");
            }
            Ok(witness(Some(x)))
        }
        SolvabilityMode::NonnegWeak | SolvabilityMode::NonnegStrong => {
            let (mat, rhs) = if mode == SolvabilityMode::NonnegWeak {
                (&lo, b.upper())
            } else {
                (&hi, b.lower())
            };
            let mut prog = LinearProgram::nonneg(n);
            for i in 0..m {
                prog.le(mat.row(i).to_vec(), rhs[i].clone());
            }
            Ok(witness(lp::feasible_point(&prog)?))
        }
    }
}

/// Existence of a tolerance (one LP) or control (orthant LPs) solution.
pub fn tc_existence(a: &IntervalMatrix, b: &IntervalVector, kind: TcKind) -> Result<Decision> {
    check_system(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let (center, delta) = a.midpoint_radius();
    let (bc, bd) = (b.midpoint(), b.radius());
    let x = match kind {
        TcKind::Tolerance => {
            // |A_c (x1 - x2) - b_c| <= δ - Δ (x1 + x2), x1, x2 >= 0.
            let mut prog = LinearProgram::nonneg(2 * n);
            for i in 0..m {
                let (c, d) = (center.row(i), delta.row(i));
                let up: Vec<Rational> = c.iter().zip(d).map(|(p, q)| p + q).chain(c.iter().zip(d).map(|(p, q)| q - p)).collect();
                prog.le(up, &bc[i] + &bd[i]);
                let down: Vec<Rational> = c.iter().zip(d).map(|(p, q)| q - p).chain(c.iter().zip(d).map(|(p, q)| p + q)).collect();
                prog.le(down, &bd[i] - &bc[i]);
            }
            lp::feasible_point(&prog)?.map(|z| matrix::vec_sub(&z[..n], &z[n..]))
        }
        TcKind::Control => orthant::search(n, false, |s| {
            let ds = orthant::radius_times_sign(&delta, s);
            let mut prog = LinearProgram::new(n);
            for i in 0..m {
                prog.le(combine(center.row(i), ds.row(i), -1), &bc[i] - &bd[i]);
                prog.ge(combine(center.row(i), ds.row(i), 1), &bc[i] + &bd[i]);
            }
            orthant::restrict_to_orthant(&mut prog, s, 0);
            lp::feasible_point(&prog).expect("well-formed program")
        })
        .map(|(_, x)| x),
    };
    Ok(match x {
        Some(x) => {
            assert!(tc_membership(a, b, &x, kind)?, "witness fails re-verification");
            Decision::yes(Some(Certificate::Witness(x)))
        }
        None => Decision::no(None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::rational::int;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    fn one(a: Interval, b: Interval) -> (IntervalMatrix, IntervalVector) {
        (IntervalMatrix::new(1, 1, vec![a]).unwrap(), IntervalVector::new(vec![b]))
    }

    #[test]
    fn equation_examples() {
        let (a, b) = one(iv(-1, 1), iv(2, 2));
        assert!(solvability(&a, &b, SolvabilityMode::Weak).unwrap().answer);
        let d = solvability(&a, &b, SolvabilityMode::Strong).unwrap();
        assert!(!d.answer);
        match d.certificate {
            Some(Certificate::Farkas { p, matrix, rhs }) => {
                assert!(a.contains(&matrix).unwrap() && b.contains(&rhs));
                assert!(matrix.transpose().matvec(&p).iter().all(Zero::is_zero));
                assert!(matrix::dot(&rhs, &p) <= -Rational::one());
            }
            other => panic!("{other:?}"),
        }
        let (a, b) = one(iv(1, 2), iv(2, 3));
        assert!(solvability(&a, &b, SolvabilityMode::Strong).unwrap().answer);
        assert!(solvability(&a, &b, SolvabilityMode::NonnegStrong).unwrap().answer);
        let (a, b) = one(iv(1, 2), iv(-3, -2));
        assert!(solvability(&a, &b, SolvabilityMode::Strong).unwrap().answer);
        assert!(!solvability(&a, &b, SolvabilityMode::NonnegWeak).unwrap().answer);
        let d = solvability(&a, &b, SolvabilityMode::NonnegStrong).unwrap();
        assert!(!d.answer);
        match d.certificate {
            Some(Certificate::Farkas { p, matrix, rhs }) => {
                assert!(matrix.transpose().matvec(&p).iter().all(|v| v >= &Rational::zero()));
                assert!(matrix::dot(&rhs, &p) <= -Rational::one());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inequality_examples() {
        let (a, b) = one(iv(1, 2), iv(3, 4));
        let d = ineq_solvability(&a, &b, SolvabilityMode::Strong).unwrap();
        assert!(d.answer);
        match d.certificate {
            Some(Certificate::Witness(x)) => assert!(all_vertices_satisfy(&a, &x, &b.lower())),
            other => panic!("{other:?}"),
        }
        let (a, b) = one(iv(-1, 1), iv(-1, -1));
        assert!(!ineq_solvability(&a, &b, SolvabilityMode::NonnegStrong).unwrap().answer);
        assert!(ineq_solvability(&a, &b, SolvabilityMode::NonnegWeak).unwrap().answer);
        assert!(ineq_solvability(&a, &b, SolvabilityMode::Weak).unwrap().answer);
    }

    #[test]
    fn tolerance_control_existence() {
        let (a, b) = one(iv(1, 1), iv(-1, 1));
        let d = tc_existence(&a, &b, TcKind::Tolerance).unwrap();
        assert_eq!(d, Decision::yes(Some(Certificate::Witness(vec![int(0)]))));
        let (a, b) = one(iv(0, 2), iv(1, 1));
        assert!(tc_existence(&a, &b, TcKind::Control).unwrap().answer);
        let (a, b) = one(iv(1, 1), iv(0, 1));
        assert!(!tc_existence(&a, &b, TcKind::Control).unwrap().answer);
    }
}
