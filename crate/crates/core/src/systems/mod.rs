//! Interval linear systems `A x = b`: membership, hulls, enclosures,
//! structured solvers and solvability.

mod enclosure;
mod hull;
mod membership;
mod solvability;
mod structured;

pub use enclosure::{enclosure, EnclosureOptions, Method, Preconditioning};
pub use hull::hull_exact;
pub use membership::{is_solution, is_solution_parametric, tc_membership, ParametricSystem, TcKind};
pub use solvability::{ineq_solvability, solvability, tc_existence, SolvabilityMode};
pub use structured::{hull_bidiagonal, hull_diagonal, hull_inverse_nonneg, lsq_enclosure};

use crate::error::{Error, Result};
use crate::interval_matrix::{IntervalMatrix, IntervalVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    /// Enclosure of the solution set; `None` when it is certified empty.
    pub enclosure: Option<IntervalVector>,
    pub method: String,
    pub exact: bool,
    pub iterations: usize,
    pub insolvability_detected: bool,
    /// Iterative methods: a fixpoint was reached within the iteration limit.
    pub converged: bool,
}

impl SolveReport {
    pub(crate) fn boxed(method: &str, enclosure: IntervalVector, exact: bool) -> Self {
        SolveReport {
            enclosure: Some(enclosure),
            method: method.into(),
            exact,
            iterations: 0,
            insolvability_detected: false,
            converged: true,
        }
    }

    pub(crate) fn empty(method: &str, iterations: usize) -> Self {
        SolveReport {
            enclosure: None,
            method: method.into(),
            exact: true,
            iterations,
            insolvability_detected: true,
            converged: true,
        }
    }

    /// The enclosure box; panics when the solution set was certified empty.
    pub fn unwrap_box(&self) -> &IntervalVector {
        self.enclosure.as_ref().expect("solution set is empty")
    }
}

pub(crate) fn check_system(a: &IntervalMatrix, b: &IntervalVector) -> Result<()> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with right-hand side of length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    Ok(())
}
