//! Enclosure methods: interval Gaussian elimination, Jacobi, Gauss–Seidel,
//! Krawczyk and Hansen–Bliek–Rohn.
//!
//! Iterations run on exact rationals. Since a linearly convergent rational
//! iteration need not reach its limit in finitely many steps, each step also
//! linearizes the (non-intersected) operator around the current box, solves
//! for the fixpoint of that affine piece, and accepts it only when the
//! operator maps it exactly onto itself. The operator is a contraction under
//! the checked spectral condition, so such a fixpoint is unique and encloses
//! the solution set.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, IntervalVector};
use crate::matrix::{self, spectral_radius_below, RealMatrix};
use crate::rational::{self, Rational};

use super::{check_system, SolveReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    IntGe,
    Jacobi,
    GaussSeidel,
    Krawczyk,
    Hbr,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::IntGe,
        Method::Jacobi,
        Method::GaussSeidel,
        Method::Krawczyk,
        Method::Hbr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::IntGe => "int-ge",
            Method::Jacobi => "jacobi",
            Method::GaussSeidel => "gauss-seidel",
            Method::Krawczyk => "krawczyk",
            Method::Hbr => "hbr",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown enclosure method `{s}`")))
    }
}

/// Left preconditioner for int-ge, Jacobi and Gauss–Seidel. `Auto` skips
/// preconditioning for M-matrices and uses the midpoint inverse otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Preconditioning {
    #[default]
    Auto,
    Midpoint,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnclosureOptions {
    pub max_iter: usize,
    pub preconditioning: Preconditioning,
    /// Starting box for iterative methods; computed when absent.
    pub initial: Option<IntervalVector>,
    /// Try the exact fixpoint jump after each step.
    pub accelerate: bool,
}

impl Default for EnclosureOptions {
    fn default() -> Self {
        EnclosureOptions {
            max_iter: 1000,
            preconditioning: Preconditioning::Auto,
            initial: None,
            accelerate: true,
        }
    }
}

pub fn enclosure(
    a: &IntervalMatrix,
    b: &IntervalVector,
    method: Method,
    opts: &EnclosureOptions,
) -> Result<SolveReport> {
    check_system(a, b)?;
    a.require_square()?;
    match method {
        Method::Hbr => hbr(a, b),
        Method::Krawczyk => {
            let c = a.midpoint().inverse().ok_or_else(|| {
                Error::PreconditionNotVerifiable("midpoint matrix is singular".into())
            })?;
            let ca = a.left_mul_real(&c);
            let n = a.rows();
            let m = IntervalMatrix::from_fn(n, n, |i, j| {
                let id = Interval::point(if i == j { Rational::one() } else { Rational::zero() });
                &id - &ca[(i, j)]
            });
            let cb = b.as_column().left_mul_real(&c);
            let cb: IntervalVector = (0..n).map(|i| cb[(i, 0)].clone()).collect();
            let contraction = spectral_radius_below(&m.mag(), &Rational::one());
            let op = Operator {
                kind: Kind::Krawczyk,
                a: &ca,
                b: &cb,
                m: Some(m),
            };
            iterate(&op, method, contraction, opts, false)
        }
        Method::IntGe | Method::Jacobi | Method::GaussSeidel => {
            let (pa, pb, preconditioned) = precondition(a, b, opts.preconditioning)?;
            if method == Method::IntGe {
                return int_ge(&pa, &pb);
            }
            let contraction = comparison_inverse(&pa).is_some();
            let op = Operator {
                kind: if method == Method::Jacobi {
                    Kind::Jacobi
                } else {
                    Kind::GaussSeidel
                },
                a: &pa,
                b: &pb,
                m: None,
            };
            let exact_limit = method == Method::GaussSeidel && !preconditioned && a.is_m_matrix();
            iterate(&op, method, contraction, opts, exact_limit)
        }
    }
}

fn precondition(
    a: &IntervalMatrix,
    b: &IntervalVector,
    policy: Preconditioning,
) -> Result<(IntervalMatrix, IntervalVector, bool)> {
    let c = match policy {
        Preconditioning::None => None,
        Preconditioning::Auto if a.is_m_matrix() => None,
        Preconditioning::Auto => a.midpoint().inverse(),
        Preconditioning::Midpoint => Some(a.midpoint().inverse().ok_or_else(|| {
            Error::PreconditionNotVerifiable("midpoint matrix is singular".into())
        })?),
    };
    Ok(match c {
        None => (a.clone(), b.clone(), false),
        Some(c) => {
            let cb = b.as_column().left_mul_real(&c);
            (
                a.left_mul_real(&c),
                (0..a.rows()).map(|i| cb[(i, 0)].clone()).collect(),
                true,
            )
        }
    })
}

/// Interval Gaussian elimination without pivoting, then back substitution.
fn int_ge(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    let n = a.rows();
    let mut m: Vec<Vec<Interval>> = (0..n).map(|i| (0..n).map(|j| a[(i, j)].clone()).collect()).collect();
    let mut r: Vec<Interval> = b.entries().to_vec();
    for k in 0..n {
        if m[k][k].contains_zero() {
            return Err(Error::PivotContainsZero(k));
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].div(&m[k][k])?;
            for j in k + 1..n {
                let t = &f * &m[k][j];
                m[i][j] = &m[i][j] - &t;
            }
            let t = &f * &r[k];
            r[i] = &r[i] - &t;
        }
    }
    let mut x = vec![Interval::zero(); n];
    for i in (0..n).rev() {
        let mut s = r[i].clone();
        for j in i + 1..n {
            s = &s - &(&m[i][j] * &x[j]);
        }
        x[i] = s.div(&m[i][i])?;
    }
    Ok(SolveReport::boxed(Method::IntGe.name(), IntervalVector::new(x), false))
}

/// Comparison matrix `<A>` inverse when `<A>` is a nonsingular M-matrix.
fn comparison_inverse(a: &IntervalMatrix) -> Option<RealMatrix> {
    let n = a.rows();
    let cmp = RealMatrix::from_fn(n, n, |i, j| if i == j { a[(i, i)].mig() } else { -a[(i, j)].mag() });
    cmp.inverse().filter(RealMatrix::is_nonnegative)
}

/// A box `[-r, r]` containing every solution, from `rho(|I - A|) < 1` and/or
/// `<A>` being an M-matrix.
fn initial_box(a: &IntervalMatrix, b: &IntervalVector) -> Option<IntervalVector> {
    let n = a.rows();
    let mb = b.mag();
    let mut bound: Option<Vec<Rational>> = None;
    let r = RealMatrix::from_fn(n, n, |i, j| {
        let id = Interval::point(if i == j { Rational::one() } else { Rational::zero() });
        (&id - &a[(i, j)]).mag()
    });
    if spectral_radius_below(&r, &Rational::one()) {
        let inv = RealMatrix::identity(n).sub(&r).inverse().expect("rho < 1");
        bound = Some(inv.matvec(&mb));
    }
    if let Some(inv) = comparison_inverse(a) {
        let v = inv.matvec(&mb);
        bound = Some(match bound {
            None => v,
            Some(u) => u.into_iter().zip(v).map(|(p, q)| p.min(q)).collect(),
        });
    }
    bound.map(|r| IntervalVector::symmetric(&r))
}

/// An endpoint carrying its value and, optionally, an affine form in the
/// `2n` endpoints of the argument box (last entry is the constant term).
#[derive(Clone, Debug)]
struct Aff {
    val: Rational,
    coef: Vec<Rational>,
}

impl Aff {
    fn constant(v: &Rational, dim: usize) -> Self {
        let mut coef = vec![Rational::zero(); if dim > 0 { dim + 1 } else { 0 }];
        if dim > 0 {
            coef[dim] = v.clone();
        }
        Aff { val: v.clone(), coef }
    }

    fn var(v: &Rational, idx: usize, dim: usize) -> Self {
        let mut coef = vec![Rational::zero(); dim + 1];
        coef[idx] = Rational::one();
        Aff { val: v.clone(), coef }
    }

    fn add(&self, o: &Aff) -> Aff {
        Aff {
            val: &self.val + &o.val,
            coef: self.coef.iter().zip(&o.coef).map(|(p, q)| p + q).collect(),
        }
    }

    fn sub(&self, o: &Aff) -> Aff {
        Aff {
            val: &self.val - &o.val,
            coef: self.coef.iter().zip(&o.coef).map(|(p, q)| p - q).collect(),
        }
    }

    fn scale(&self, c: &Rational) -> Aff {
        Aff {
            val: &self.val * c,
            coef: self.coef.iter().map(|p| if p.is_zero() { p.clone() } else { p * c }).collect(),
        }
    }
}

#[derive(Clone, Debug)]
struct Tracked {
    lo: Aff,
    hi: Aff,
}

impl Tracked {
    fn constant(x: &Interval, dim: usize) -> Self {
        Tracked {
            lo: Aff::constant(x.lo(), dim),
            hi: Aff::constant(x.hi(), dim),
        }
    }

    fn add(&self, o: &Tracked) -> Tracked {
        Tracked {
            lo: self.lo.add(&o.lo),
            hi: self.hi.add(&o.hi),
        }
    }

    fn sub(&self, o: &Tracked) -> Tracked {
        Tracked {
            lo: self.lo.sub(&o.hi),
            hi: self.hi.sub(&o.lo),
        }
    }

    /// `a * self` for a constant interval `a`.
    fn mul_const(&self, a: &Interval) -> Tracked {
        let cands = [
            (a.lo(), &self.lo),
            (a.lo(), &self.hi),
            (a.hi(), &self.lo),
            (a.hi(), &self.hi),
        ];
        let vals: Vec<Rational> = cands.iter().map(|(c, x)| *c * &x.val).collect();
        let (mut imin, mut imax) = (0, 0);
        for k in 1..4 {
            if vals[k] < vals[imin] {
                imin = k;
            }
            if vals[k] > vals[imax] {
                imax = k;
            }
        }
        Tracked {
            lo: cands[imin].1.scale(cands[imin].0),
            hi: cands[imax].1.scale(cands[imax].0),
        }
    }

    fn intersect(&self, o: &Tracked) -> Option<Tracked> {
        let lo = if o.lo.val > self.lo.val { &o.lo } else { &self.lo };
        let hi = if o.hi.val < self.hi.val { &o.hi } else { &self.hi };
        (lo.val <= hi.val).then(|| Tracked {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }

    fn interval(&self) -> Interval {
        Interval::new(self.lo.val.clone(), self.hi.val.clone()).expect("ordered endpoints")
    }
}

enum Kind {
    Jacobi,
    GaussSeidel,
    Krawczyk,
}

/// Jacobi/Gauss–Seidel on `A x = b`, or Krawczyk `x <- b + M x` with `b = C b`.
struct Operator<'a> {
    kind: Kind,
    a: &'a IntervalMatrix,
    b: &'a IntervalVector,
    m: Option<IntervalMatrix>,
}

impl Operator<'_> {
    fn row_update(&self, i: usize, cur: &[Tracked], dim: usize, recips: &[Interval]) -> Tracked {
        let n = cur.len();
        let mut s = Tracked::constant(&self.b[i], dim);
        match self.kind {
            Kind::Krawczyk => {
                let m = self.m.as_ref().expect("Krawczyk matrix");
                for (j, cj) in cur.iter().enumerate() {
                    if !m[(i, j)].is_zero() {
                        s = s.add(&cj.mul_const(&m[(i, j)]));
                    }
                }
                s
            }
            Kind::Jacobi | Kind::GaussSeidel => {
                for (j, cj) in cur.iter().enumerate().take(n) {
                    if j != i && !self.a[(i, j)].is_zero() {
                        s = s.sub(&cj.mul_const(&self.a[(i, j)]));
                    }
                }
                s.mul_const(&recips[i])
            }
        }
    }

    /// One sweep from `x`. Returns `None` when an intersection is empty.
    fn sweep(&self, x: &IntervalVector, track: bool, intersect: bool, recips: &[Interval]) -> Option<Vec<Tracked>> {
        let n = x.len();
        let dim = if track { 2 * n } else { 0 };
        let start: Vec<Tracked> = x
            .entries()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if track {
                    Tracked {
                        lo: Aff::var(e.lo(), i, dim),
                        hi: Aff::var(e.hi(), n + i, dim),
                    }
                } else {
                    Tracked::constant(e, 0)
                }
            })
            .collect();
        let mut cur = start.clone();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let src = match self.kind {
                Kind::GaussSeidel => &cur,
                _ => &start,
            };
            let mut v = self.row_update(i, src, dim, recips);
            if intersect {
                v = v.intersect(&start[i])?;
            }
            if matches!(self.kind, Kind::GaussSeidel) {
                cur[i] = v.clone();
            }
            out.push(v);
        }
        Some(out)
    }
}

fn to_box(t: &[Tracked]) -> IntervalVector {
    t.iter().map(Tracked::interval).collect()
}

/// Affine fixpoint of the operator's piece at `x`, accepted only if exact.
fn fixpoint_jump(op: &Operator, x: &IntervalVector, recips: &[Interval]) -> Option<IntervalVector> {
    let n = x.len();
    let dim = 2 * n;
    let g = op.sweep(x, true, false, recips)?;
    let affs: Vec<&Aff> = g.iter().map(|t| &t.lo).chain(g.iter().map(|t| &t.hi)).collect();
    let lhs = RealMatrix::from_fn(dim, dim, |r, c| {
        let id = if r == c { Rational::one() } else { Rational::zero() };
        id - &affs[r].coef[c]
    });
    let rhs: Vec<Rational> = affs.iter().map(|a| a.coef[dim].clone()).collect();
    let v = lhs.solve(&rhs)?;
    let candidate = IntervalVector::from_bounds(&v[..n], &v[n..]).ok()?;
    let image = op.sweep(&candidate, false, false, recips)?;
    (to_box(&image) == candidate).then_some(candidate)
}

fn iterate(
    op: &Operator,
    method: Method,
    contraction: bool,
    opts: &EnclosureOptions,
    exact_limit: bool,
) -> Result<SolveReport> {
    let n = op.a.rows();
    let recips: Vec<Interval> = match op.kind {
        Kind::Krawczyk => Vec::new(),
        _ => (0..n)
            .map(|i| op.a[(i, i)].recip().map_err(|_| Error::PivotContainsZero(i)))
            .collect::<Result<_>>()?,
    };
    let mut x = match &opts.initial {
        Some(x0) => {
            if x0.len() != n {
                return Err(Error::DimensionMismatch("initial box has the wrong length".into()));
            }
            x0.clone()
        }
        None => match op.kind {
            Kind::Krawczyk => {
                // x = Cb + M x with rho(|M|) < 1.
                let m = op.m.as_ref().expect("Krawczyk matrix");
                let mm = m.mag();
                if !contraction {
                    return Err(Error::NoInitialEnclosure);
                }
                let inv = RealMatrix::identity(n).sub(&mm).inverse().expect("rho < 1");
                IntervalVector::symmetric(&inv.matvec(&op.b.mag()))
            }
            _ => initial_box(op.a, op.b).ok_or(Error::NoInitialEnclosure)?,
        },
    };
    let accelerate = opts.accelerate && contraction;
    let report = |bx: IntervalVector, iterations: usize, converged: bool, fixpoint: bool| SolveReport {
        exact: exact_limit && fixpoint,
        enclosure: Some(bx),
        method: method.name().into(),
        iterations,
        insolvability_detected: false,
        converged,
    };
    for it in 1..=opts.max_iter {
        let Some(y) = op.sweep(&x, false, true, &recips) else {
            return Ok(SolveReport::empty(method.name(), it));
        };
        let y = to_box(&y);
        if accelerate {
            if let Some(v) = fixpoint_jump(op, &y, &recips) {
                if v.is_subset_of(&y) {
                    return Ok(report(v, it, true, true));
                }
                if let Some(w) = v.intersect(&y) {
                    x = w;
                    continue;
                }
            }
        }
        if y == x {
            // The operator's own fixpoint when `y` also equals the plain image.
            let fixpoint = contraction
                && op
                    .sweep(&y, false, false, &recips)
                    .is_some_and(|g| to_box(&g) == y);
            return Ok(report(y, it, true, fixpoint));
        }
        x = y;
    }
    Ok(report(x, opts.max_iter, false, false))
}

/// Hansen–Bliek–Rohn enclosure; requires `rho(|A_c^-1| Δ) < 1`.
fn hbr(a: &IntervalMatrix, b: &IntervalVector) -> Result<SolveReport> {
    let n = a.rows();
    let (center, delta) = a.midpoint_radius();
    let c = center
        .inverse()
        .ok_or_else(|| Error::PreconditionNotVerifiable("midpoint matrix is singular".into()))?;
    let cabs = c.abs();
    let r = cabs.mul(&delta);
    if !spectral_radius_below(&r, &Rational::one()) {
        return Err(Error::PreconditionNotVerifiable("rho(|Ac^-1| D) < 1 fails".into()));
    }
    let m = RealMatrix::identity(n).sub(&r).inverse().expect("rho < 1");
    let xc = c.matvec(&b.midpoint());
    let xstar = m.matvec(&matrix::vec_add(&matrix::vec_abs(&xc), &cabs.matvec(&b.radius())));
    let two = rational::int(2);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mii = &m[(i, i)];
        let axc = xc[i].abs();
        let lower_t = -&xstar[i] + mii * (&xc[i] + &axc);
        let upper_t = &xstar[i] + mii * (&xc[i] - &axc);
        let nu = (mii * &two - Rational::one()).recip();
        let lo = rational::min_of(&lower_t, &(&nu * &lower_t)).clone();
        let hi = rational::max_of(&upper_t, &(&nu * &upper_t)).clone();
        out.push(Interval::new(lo, hi)?);
    }
    let exact = center.is_diagonal();
    Ok(SolveReport::boxed(Method::Hbr.name(), IntervalVector::new(out), exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::systems::hull_exact;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    fn all_methods(a: &IntervalMatrix, b: &IntervalVector) -> Vec<SolveReport> {
        Method::ALL
            .iter()
            .map(|&m| enclosure(a, b, m, &EnclosureOptions::default()).unwrap())
            .collect()
    }

    #[test]
    fn degenerate_system_gives_the_point() {
        let m = RealMatrix::from_i64(&[&[4, 1], &[2, 5]]);
        let bv = vec![int(1), int(-3)];
        let x = m.solve(&bv).unwrap();
        let (a, b) = (IntervalMatrix::degenerate(&m), IntervalVector::degenerate(&bv));
        for r in all_methods(&a, &b) {
            assert_eq!(r.unwrap_box(), &IntervalVector::degenerate(&x), "{}", r.method);
        }
    }

    #[test]
    fn one_dimensional_hbr() {
        let a = IntervalMatrix::new(1, 1, vec![iv(2, 4)]).unwrap();
        let b = IntervalVector::new(vec![iv(2, 4)]);
        let r = enclosure(&a, &b, Method::Hbr, &EnclosureOptions::default()).unwrap();
        assert_eq!(r.unwrap_box()[0], Interval::new(ratio(1, 2), int(2)).unwrap());
        assert!(r.exact);
    }

    #[test]
    fn methods_enclose_the_hull() {
        let a = IntervalMatrix::new(
            2,
            2,
            vec![iv(3, 4), Interval::new(ratio(-1, 2), ratio(1, 2)).unwrap(), iv(0, 1), iv(5, 6)],
        )
        .unwrap();
        let b = IntervalVector::new(vec![iv(1, 2), iv(-1, 1)]);
        let hull = hull_exact(&a, &b).unwrap();
        for r in all_methods(&a, &b) {
            assert!(hull.unwrap_box().is_subset_of(r.unwrap_box()), "{}", r.method);
            assert!(r.converged, "{}", r.method);
        }
    }

    #[test]
    fn m_matrix_gauss_seidel_reaches_the_hull() {
        let a = IntervalMatrix::new(2, 2, vec![iv(3, 4), iv(-1, 0), iv(-2, -1), iv(4, 5)]).unwrap();
        let b = IntervalVector::new(vec![iv(1, 2), iv(-1, 3)]);
        let r = enclosure(&a, &b, Method::GaussSeidel, &EnclosureOptions::default()).unwrap();
        assert!(r.converged && r.exact);
        assert_eq!(r.unwrap_box(), hull_exact(&a, &b).unwrap().unwrap_box());
    }

    #[test]
    fn failures_are_reported() {
        let a = IntervalMatrix::new(2, 2, vec![iv(-1, 1), iv(0, 0), iv(0, 0), iv(1, 1)]).unwrap();
        let b = IntervalVector::new(vec![iv(1, 1), iv(1, 1)]);
        let none = EnclosureOptions {
            preconditioning: Preconditioning::None,
            ..Default::default()
        };
        assert_eq!(enclosure(&a, &b, Method::IntGe, &none), Err(Error::PivotContainsZero(0)));
        assert!(matches!(
            enclosure(&a, &b, Method::Hbr, &none),
            Err(Error::PreconditionNotVerifiable(_))
        ));
        assert_eq!(enclosure(&a, &b, Method::Jacobi, &none), Err(Error::PivotContainsZero(0)));
        let wide = IntervalMatrix::new(1, 1, vec![iv(-1, 3)]).unwrap();
        let b1 = IntervalVector::new(vec![iv(1, 1)]);
        assert_eq!(
            enclosure(&wide, &b1, Method::Krawczyk, &none),
            Err(Error::NoInitialEnclosure)
        );
    }

    #[test]
    fn empty_intersection_certifies_insolvability() {
        let a = IntervalMatrix::new(1, 1, vec![iv(1, 1)]).unwrap();
        let b = IntervalVector::new(vec![iv(5, 5)]);
        let opts = EnclosureOptions {
            initial: Some(IntervalVector::new(vec![iv(0, 1)])),
            ..Default::default()
        };
        let r = enclosure(&a, &b, Method::Jacobi, &opts).unwrap();
        assert!(r.insolvability_detected);
    }
}
