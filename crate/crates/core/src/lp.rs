//! Exact rational linear programming.
//!
//! Two-phase dense-tableau simplex with Bland's rule. Every result is exact
//! and identical inputs give identical outputs.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::dot;
use crate::rational::Rational;
use crate::verdict::{Certificate, Decision};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `maximize objective . x` subject to the constraints and per-variable bounds.
/// Variables are free unless bounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
    lower: Vec<Option<Rational>>,
    upper: Vec<Option<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
            lower: vec![None; num_vars],
            upper: vec![None; num_vars],
        }
    }

    /// All variables bounded below by zero.
    pub fn nonneg(num_vars: usize) -> Self {
        let mut lp = Self::new(num_vars);
        lp.lower = vec![Some(Rational::zero()); num_vars];
        lp
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_objective(&mut self, c: Vec<Rational>) -> &mut Self {
        self.objective = c;
        self
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn le(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add(coeffs, Relation::Le, rhs)
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add(coeffs, Relation::Ge, rhs)
    }

    pub fn equal(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.add(coeffs, Relation::Eq, rhs)
    }

    pub fn set_bounds(&mut self, j: usize, lo: Option<Rational>, hi: Option<Rational>) -> &mut Self {
        self.lower[j] = lo;
        self.upper[j] = hi;
        self
    }

    pub fn set_lower(&mut self, j: usize, lo: Option<Rational>) -> &mut Self {
        self.lower[j] = lo;
        self
    }

    pub fn set_upper(&mut self, j: usize, hi: Option<Rational>) -> &mut Self {
        self.upper[j] = hi;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedProgram(m));
        if self.objective.len() != self.num_vars {
            return bad(format!(
                "objective has {} entries for {} variables",
                self.objective.len(),
                self.num_vars
            ));
        }
        for (k, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return bad(format!(
                    "constraint {k} has {} coefficients for {} variables",
                    c.coeffs.len(),
                    self.num_vars
                ));
            }
        }
        for j in 0..self.num_vars {
            if let (Some(l), Some(u)) = (&self.lower[j], &self.upper[j]) {
                if l > u {
                    return bad(format!("variable {j} has lower bound {l} above upper bound {u}"));
                }
            }
        }
        Ok(())
    }

    /// Exact check of every constraint and bound at `x`.
    pub fn satisfies(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars {
            return false;
        }
        let bounds_ok = (0..self.num_vars).all(|j| {
            self.lower[j].as_ref().is_none_or(|l| &x[j] >= l)
                && self.upper[j].as_ref().is_none_or(|u| &x[j] <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }
}

/// How an original variable is expressed in nonnegative columns:
/// `x = offset + sum coef * y_col`.
struct VarMap {
    offset: Rational,
    terms: Vec<(usize, i8)>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

enum Status {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let prow = std::mem::take(&mut self.rows[r]);
        let support: Vec<usize> = (0..=self.ncols).filter(|&j| !prow[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &support {
                row[j] -= &f * &prow[j];
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[r] = prow;
        self.basis[r] = c;
    }

    /// Installs `min cost . y` as the objective row for the current basis.
    fn set_cost(&mut self, cost: &[Rational]) {
        let mut obj: Vec<Rational> = cost.to_vec();
        obj.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (o, v) in obj.iter_mut().zip(&self.rows[i]) {
                if !v.is_zero() {
                    *o -= cb * v;
                }
            }
        }
        self.obj = obj;
    }

    fn run(&mut self, allowed: &[bool]) -> Status {
        loop {
            let Some(c) = (0..self.ncols).find(|&j| allowed[j] && self.obj[j].is_negative()) else {
                return Status::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return Status::Unbounded,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn values(&self) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            y[b] = self.rows[i][self.ncols].clone();
        }
        y
    }
}

struct Prepared {
    tableau: Tableau,
    maps: Vec<VarMap>,
    ny: usize,
    artificial_from: usize,
}

enum Phase1 {
    Feasible(Prepared),
    Infeasible,
}

fn prepare(lp: &LinearProgram) -> Phase1 {
    let mut maps = Vec::with_capacity(lp.num_vars);
    let mut ny = 0usize;
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for j in 0..lp.num_vars {
        let map = match (&lp.lower[j], &lp.upper[j]) {
            (Some(l), hi) => {
                if let Some(u) = hi {
                    bound_rows.push((ny, u - l));
                }
                ny += 1;
                VarMap {
                    offset: l.clone(),
                    terms: vec![(ny - 1, 1)],
                }
            }
            (None, Some(u)) => {
                ny += 1;
                VarMap {
                    offset: u.clone(),
                    terms: vec![(ny - 1, -1)],
                }
            }
            (None, None) => {
                ny += 2;
                VarMap {
                    offset: Rational::zero(),
                    terms: vec![(ny - 2, 1), (ny - 1, -1)],
                }
            }
        };
        maps.push(map);
    }

    // Rows over y with nonnegative right-hand sides.
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![Rational::zero(); ny];
        let mut rhs = c.rhs.clone();
        for (j, a) in c.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let m = &maps[j];
            if !m.offset.is_zero() {
                rhs -= a * &m.offset;
            }
            for &(col, s) in &m.terms {
                if s > 0 {
                    coeffs[col] += a;
                } else {
                    coeffs[col] -= a;
                }
            }
        }
        rows.push((coeffs, c.relation, rhs));
    }
    for (col, width) in bound_rows {
        let mut coeffs = vec![Rational::zero(); ny];
        coeffs[col] = Rational::one();
        rows.push((coeffs, Relation::Le, width));
    }
    for row in rows.iter_mut() {
        if row.2.is_negative() {
            for v in row.0.iter_mut() {
                *v = -&*v;
            }
            row.2 = -&row.2;
            row.1 = match row.1 {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let m = rows.len();
    let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let artificial_from = ny + n_slack;
    let ncols = artificial_from + n_art;

    let mut tab_rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (ny, artificial_from);
    for (coeffs, rel, rhs) in rows {
        let mut row = coeffs;
        row.resize(ncols + 1, Rational::zero());
        row[ncols] = rhs;
        match rel {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        tab_rows.push(row);
    }

    let mut tableau = Tableau {
        rows: tab_rows,
        obj: Vec::new(),
        basis,
        ncols,
    };

    if n_art > 0 {
        let cost: Vec<Rational> = (0..ncols)
            .map(|j| if j >= artificial_from { Rational::one() } else { Rational::zero() })
            .collect();
        tableau.set_cost(&cost);
        let allowed = vec![true; ncols];
        // Phase 1 is bounded below by zero.
        let _ = tableau.run(&allowed);
        if !tableau.obj[ncols].is_zero() {
            return Phase1::Infeasible;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        let mut r = 0;
        while r < tableau.rows.len() {
            if tableau.basis[r] < artificial_from {
                r += 1;
                continue;
            }
            match (0..artificial_from).find(|&j| !tableau.rows[r][j].is_zero()) {
                Some(c) => {
                    tableau.pivot(r, c);
                    r += 1;
                }
                None => {
                    tableau.rows.remove(r);
                    tableau.basis.remove(r);
                }
            }
        }
    }

    Phase1::Feasible(Prepared {
        tableau,
        maps,
        ny,
        artificial_from,
    })
}

fn recover(maps: &[VarMap], y: &[Rational]) -> Vec<Rational> {
    maps.iter()
        .map(|m| {
            let mut v = m.offset.clone();
            for &(col, s) in &m.terms {
                if s > 0 {
                    v += &y[col];
                } else {
                    v -= &y[col];
                }
            }
            v
        })
        .collect()
}

pub fn lp_optimize(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let mut p = match prepare(lp) {
        Phase1::Infeasible => return Ok(LpOutcome::Infeasible),
        Phase1::Feasible(p) => p,
    };
    let ncols = p.tableau.ncols;
    let mut cost = vec![Rational::zero(); ncols];
    for (j, c) in lp.objective.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(col, s) in &p.maps[j].terms {
            // Minimize the negated objective.
            if s > 0 {
                cost[col] -= c;
            } else {
                cost[col] += c;
            }
        }
    }
    p.tableau.set_cost(&cost);
    let allowed: Vec<bool> = (0..ncols).map(|j| j < p.artificial_from).collect();
    match p.tableau.run(&allowed) {
        Status::Unbounded => Ok(LpOutcome::Unbounded),
        Status::Optimal => {
            let y = p.tableau.values();
            let x = recover(&p.maps, &y[..p.ny]);
            debug_assert!(lp.satisfies(&x));
            let value = dot(&lp.objective, &x);
            Ok(LpOutcome::Optimal { value, x })
        }
    }
}

/// Feasibility only; the witness is a basic feasible point.
pub fn lp_feasible(lp: &LinearProgram) -> Result<Decision> {
    lp.validate()?;
    match prepare(lp) {
        Phase1::Infeasible => Ok(Decision::no(None)),
        Phase1::Feasible(p) => {
            let y = p.tableau.values();
            let x = recover(&p.maps, &y[..p.ny]);
            debug_assert!(lp.satisfies(&x));
            Ok(Decision::yes(Some(Certificate::Witness(x))))
        }
    }
}

/// Convenience wrapper returning the witness of a feasible program.
pub fn feasible_point(lp: &LinearProgram) -> Result<Option<Vec<Rational>>> {
    Ok(match lp_feasible(lp)? {
        Decision {
            answer: true,
            certificate: Some(Certificate::Witness(x)),
        } => Some(x),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn trivial_feasibility() {
        let mut lp = LinearProgram::new(1);
        lp.ge(v(&[1]), int(0));
        let d = lp_feasible(&lp).unwrap();
        assert!(d.answer);
        assert_eq!(d.certificate, Some(Certificate::Witness(v(&[0]))));

        let mut lp = LinearProgram::new(1);
        lp.le(v(&[1]), int(-1)).ge(v(&[1]), int(1));
        assert!(!lp_feasible(&lp).unwrap().answer);
    }

    #[test]
    fn trivial_optimization() {
        let mut lp = LinearProgram::new(1);
        lp.set_objective(v(&[1])).le(v(&[1]), int(3));
        assert_eq!(
            lp_optimize(&lp).unwrap(),
            LpOutcome::Optimal {
                value: int(3),
                x: v(&[3])
            }
        );
        let mut lp = LinearProgram::new(1);
        lp.set_objective(v(&[1])).ge(v(&[1]), int(0));
        assert_eq!(lp_optimize(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn bounds_and_equalities() {
        // max x + y, x + 2y = 4, x in [-1, 2], y <= 5
        let mut lp = LinearProgram::new(2);
        lp.set_objective(v(&[1, 1]))
            .equal(v(&[1, 2]), int(4))
            .set_bounds(0, Some(int(-1)), Some(int(2)))
            .set_upper(1, Some(int(5)));
        match lp_optimize(&lp).unwrap() {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, int(3));
                assert_eq!(x, v(&[2, 1]));
            }
            other => panic!("{other:?}"),
        }
        // Free variable minimised through negation.
        let mut lp = LinearProgram::new(1);
        lp.set_objective(v(&[-1])).ge(v(&[2]), int(-3));
        match lp_optimize(&lp).unwrap() {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(x, vec![ratio(-3, 2)]);
                assert_eq!(value, ratio(3, 2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let mut lp = LinearProgram::nonneg(2);
        lp.set_objective(v(&[1, 0]))
            .equal(v(&[1, 1]), int(2))
            .equal(v(&[2, 2]), int(4));
        match lp_optimize(&lp).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_programs_are_rejected() {
        let mut lp = LinearProgram::new(2);
        lp.le(v(&[1]), int(0));
        assert!(matches!(lp_feasible(&lp), Err(Error::MalformedProgram(_))));
        let mut lp = LinearProgram::new(1);
        lp.set_bounds(0, Some(int(1)), Some(int(0)));
        assert!(matches!(lp_optimize(&lp), Err(Error::MalformedProgram(_))));
    }
}
