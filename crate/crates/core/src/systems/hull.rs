use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval_matrix::{IntervalMatrix, IntervalVector, SignVector};
use crate::lp::{self, LinearProgram, LpOutcome};
use crate::orthant;
use crate::rational::Rational;

use super::{check_system, SolveReport};

/// The Oettli–Prager set restricted to orthant `s` as an LP skeleton:
/// `(A_c - Δ D_s) x <= b̅`, `(A_c + Δ D_s) x >= b̲`, `D_s x >= 0`.
pub(crate) fn orthant_program(a: &IntervalMatrix, b: &IntervalVector, s: &SignVector) -> LinearProgram {
    let (center, delta) = a.midpoint_radius();
    let ds = orthant::radius_times_sign(&delta, s);
    let n = a.cols();
    let mut prog = LinearProgram::new(n);
    for i in 0..a.rows() {
        let c = center.row(i);
        let d = ds.row(i);
        prog.le(c.iter().zip(d).map(|(x, y)| x - y).collect(), b[i].hi().clone());
        prog.ge(c.iter().zip(d).map(|(x, y)| x + y).collect(), b[i].lo().clone());
    }
    orthant::restrict_to_orthant(&mut prog, s, 0);
    prog
}

type OrthantBox = Option<(Vec<Rational>, Vec<Rational>)>;

fn orthant_extremes(a: &IntervalMatrix, b: &IntervalVector, s: &SignVector) -> Result<OrthantBox> {
    let n = a.cols();
    let mut prog = orthant_program(a, b, s);
    if lp::feasible_point(&prog)?.is_none() {
        return Ok(None);
    }
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        for sign in [-1i64, 1] {
            let mut c = vec![Rational::zero(); n];
            c[i] = if sign > 0 { Rational::one() } else { -Rational::one() };
            prog.set_objective(c);
            match lp::lp_optimize(&prog)? {
                LpOutcome::Optimal { x, .. } => {
                    if sign > 0 {
                        hi.push(x[i].clone());
                    } else {
                        lo.push(x[i].clone());
                    }
                }
                LpOutcome::Unbounded => return Err(Error::UnboundedSolutionSet),
                LpOutcome::Infeasible => unreachable!("feasibility checked above"),
            }
        }
    }
    Ok(Some((lo, hi)))
}

/// Exact interval hull of the solution set by orthant decomposition.
pub fn hull_exact(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    check_system(a, b)?;
    let n = a.cols();
    let parts: Vec<Result<OrthantBox>> = (0..(1u64 << n))
        .into_par_iter()
        .map(|k| orthant_extremes(a, b, &SignVector::nth(n, k)))
        .collect();
    let mut acc: Option<(Vec<Rational>, Vec<Rational>)> = None;
    for part in parts {
        let Some((lo, hi)) = part? else { continue };
        acc = Some(match acc {
            None => (lo, hi),
            Some((alo, ahi)) => (
                alo.into_iter().zip(lo).map(|(p, q)| p.min(q)).collect(),
                ahi.into_iter().zip(hi).map(|(p, q)| p.max(q)).collect(),
            ),
        });
    }
    Ok(match acc {
        None => SolveReport::empty("hull", 0),
        Some((lo, hi)) => {
            let mut r = SolveReport::boxed("hull", IntervalVector::from_bounds(&lo, &hi)?, true);
            r.iterations = 1 << n;
            r
        }
    })
}
