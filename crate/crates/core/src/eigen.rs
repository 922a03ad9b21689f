//! Eigenvalues, eigenvectors, definiteness and stability of interval matrices.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, SignVector};
use crate::matrix::{spectral_radius_below, RealMatrix};
use crate::orthant;
use crate::rational::{self, Rational};
use crate::regularity::is_regular_exact;
use crate::spectral::{self, default_tolerance};
use crate::verdict::{Certificate, Decision, Verdict};

pub const VERTEX_SCAN_MAX: usize = 12;

/// An interval matrix restricted to its symmetric members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricIntervalMatrix {
    base: IntervalMatrix,
}

impl SymmetricIntervalMatrix {
    pub fn new(base: IntervalMatrix) -> Result<Self> {
        base.require_square()?;
        if !base.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymmetricIntervalMatrix { base })
    }

    pub fn base(&self) -> &IntervalMatrix {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.rows()
    }

    pub fn neg(&self) -> SymmetricIntervalMatrix {
        SymmetricIntervalMatrix { base: self.base.neg() }
    }

    /// `A_zz = A_c - D_z Δ D_z`.
    pub fn vertex(&self, z: &SignVector) -> RealMatrix {
        self.base.vertex_matrix(z, z).expect("square")
    }

    /// Symmetric members contain the matrix `m`.
    pub fn contains(&self, m: &RealMatrix) -> bool {
        m.is_symmetric() && self.base.contains(m).unwrap_or(false)
    }
}

/// `λ` is an eigenvalue of some member iff `A - λ I` is singular.
pub fn is_eigenvalue(a: &IntervalMatrix, lambda: &Rational) -> Result<Decision> {
    a.require_square()?;
    let d = is_regular_exact(&a.shift_diagonal(lambda))?;
    Ok(if d.answer {
        Decision::no(None)
    } else {
        let certificate = match d.certificate {
            Some(Certificate::SingularMember { x, member, .. }) => Some(Certificate::EigenPair {
                member: shift(&member, lambda),
                lambda: lambda.clone(),
                vector: x,
            }),
            other => other,
        };
        Decision::yes(certificate)
    })
}

fn shift(m: &RealMatrix, lambda: &Rational) -> RealMatrix {
    m.add(&RealMatrix::identity(m.rows()).scale(lambda))
}

/// Admissible `λ` for `A x = λ x`, row by row; `None` when empty.
fn eigenvalue_window(a: &IntervalMatrix, x: &[Rational]) -> Result<Option<(Option<Rational>, Option<Rational>)>> {
    let ax = a.matvec(x)?;
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (i, xi) in x.iter().enumerate() {
        let r = &ax[i];
        if xi.is_zero() {
            if !r.contains_zero() {
                return Ok(None);
            }
            continue;
        }
        let (p, q) = (r.lo() / xi, r.hi() / xi);
        let (p, q) = if xi.is_positive() { (p, q) } else { (q, p) };
        lo = Some(lo.map_or(p.clone(), |l| l.max(p)));
        hi = Some(hi.map_or(q.clone(), |h| h.min(q)));
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l > h {
            return Ok(None);
        }
    }
    Ok(Some((lo, hi)))
}

/// A member `M` with `M x = λ x`, choosing each row on the segment between
/// its two extreme rows.
fn eigen_member(a: &IntervalMatrix, x: &[Rational], lambda: &Rational) -> RealMatrix {
    let (center, delta) = a.midpoint_radius();
    let cx = center.matvec(x);
    let w = delta.matvec(&crate::matrix::vec_abs(x));
    let m = RealMatrix::from_fn(a.rows(), a.cols(), |i, j| {
        if w[i].is_zero() {
            return center[(i, j)].clone();
        }
        let t = (lambda * &x[i] - &cx[i]) / &w[i];
        let step = &t * &delta[(i, j)];
        if x[j].is_negative() {
            &center[(i, j)] - step
        } else {
            &center[(i, j)] + step
        }
    });
    debug_assert!(a.contains(&m).unwrap());
    debug_assert_eq!(m.matvec(x), x.iter().map(|v| v * lambda).collect::<Vec<_>>());
    m
}

fn pick(lo: &Option<Rational>, hi: &Option<Rational>) -> Rational {
    match (lo, hi) {
        (Some(l), Some(h)) => (l + h) / Rational::from_integer(2.into()),
        (Some(l), None) => l.clone(),
        (None, Some(h)) => h.clone(),
        (None, None) => Rational::zero(),
    }
}

fn require_vector(a: &IntervalMatrix, x: &[Rational]) -> Result<()> {
    let n = a.require_square()?;
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!("vector of length {} for order {n}", x.len())));
    }
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Decides whether `x` is an eigenvector of some member. A positive answer
/// carries a member and eigenvalue realizing it.
pub fn is_eigenvector(a: &IntervalMatrix, x: &[Rational]) -> Result<Decision> {
    require_vector(a, x)?;
    Ok(match eigenvalue_window(a, x)? {
        None => Decision::no(None),
        Some((lo, hi)) => {
            let lambda = pick(&lo, &hi);
            Decision::yes(Some(Certificate::EigenPair {
                member: eigen_member(a, x, &lambda),
                lambda,
                vector: x.to_vec(),
            }))
        }
    })
}

fn is_irreducible(pattern: &RealMatrix) -> bool {
    let n = pattern.rows();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let e = if forward { &pattern[(i, j)] } else { &pattern[(j, i)] };
                if !seen[j] && e.is_positive() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    n == 0 || (reach(true) && reach(false))
}

/// Decides whether the positive vector `x` is a Perron vector of some member
/// of a nonnegative interval matrix with irreducible upper bound pattern.
pub fn is_perron_vector(a: &IntervalMatrix, x: &[Rational]) -> Result<Decision> {
    require_vector(a, x)?;
    if !a.is_nonnegative() {
        return Err(Error::NotNonnegative);
    }
    if !is_irreducible(&a.upper()) {
        return Err(Error::NotIrreducible);
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(Error::NotPositiveVector);
    }
    Ok(match eigenvalue_window(a, x)? {
        Some((lo, Some(hi))) if hi.is_positive() => {
            let lambda = match &lo {
                Some(l) if l.is_positive() => pick(&lo, &Some(hi)),
                _ => hi / Rational::from_integer(2.into()),
            };
            Decision::yes(Some(Certificate::EigenPair {
                member: eigen_member(a, x, &lambda),
                lambda,
                vector: x.to_vec(),
            }))
        }
        _ => Decision::no(None),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenRangeReport {
    /// Encloses `λ_min` over the symmetric members.
    pub lambda_min: Interval,
    pub lambda_max: Interval,
    pub exact_min: bool,
    pub exact_max: bool,
    pub subclass: Option<String>,
    /// Encloses `min_z λ_min(A_zz)`, an attained upper bound on `λ_min`.
    pub vertex_min: Option<Interval>,
    /// Encloses `max_z λ_max(A_zz)`, an attained lower bound on `λ_max`.
    pub vertex_max: Option<Interval>,
}

fn vertex_extremes(s: &SymmetricIntervalMatrix, tau: &Rational) -> Result<(Interval, Interval)> {
    let scans = orthant::map_all(s.dim(), |z| {
        if z.get(0) < 0 {
            return None;
        }
        Some(spectral::sym_eigen_range(&s.vertex(z), tau))
    });
    let mut lo: Option<Interval> = None;
    let mut hi: Option<Interval> = None;
    for scan in scans.into_iter().flatten() {
        let (lmin, lmax) = scan?;
        lo = Some(match lo {
            None => lmin.value,
            Some(v) => Interval::new(v.lo().clone().min(lmin.lo().clone()), v.hi().clone().min(lmin.hi().clone()))?,
        });
        hi = Some(match hi {
            None => lmax.value,
            Some(v) => Interval::new(v.lo().clone().max(lmax.lo().clone()), v.hi().clone().max(lmax.hi().clone()))?,
        });
    }
    Ok((lo.expect("nonempty"), hi.expect("nonempty")))
}

/// Bounds on the extremal eigenvalues over the symmetric members.
///
/// Exact subclasses: `Δ` diagonal (both endpoints at `A̲`, `A̅`), `A_c`
/// off-diagonal nonnegative (`λ_max` at `A̅`), `A_c` off-diagonal nonpositive
/// (`λ_min` at `A̲`). Otherwise the outer bound `λ(A_c) ± ρ(Δ)` is combined
/// with the vertex scan for `n <= 12`.
pub fn sym_eigen_range(s: &SymmetricIntervalMatrix) -> Result<EigenRangeReport> {
    let n = s.dim();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let tau = default_tolerance();
    let (center, delta) = s.base.midpoint_radius();
    let off = |f: fn(&Rational) -> bool| (0..n).all(|i| (0..n).all(|j| i == j || f(&center[(i, j)])));
    let diag_radius = delta.is_diagonal();
    let nonneg_off = off(|v| !v.is_negative());
    let nonpos_off = off(|v| !v.is_positive());
    let exact_max = diag_radius || nonneg_off;
    let exact_min = diag_radius || nonpos_off;

    let (c_min, c_max) = spectral::sym_eigen_range(&center, &tau)?;
    let rho = if delta.is_zero() {
        Rational::zero()
    } else {
        spectral::spectral_radius(&delta, &tau)?.hi().clone()
    };
    let (vertex_min, vertex_max) = if n <= VERTEX_SCAN_MAX && !delta.is_zero() {
        let (a, b) = vertex_extremes(s, &tau)?;
        (Some(a), Some(b))
    } else {
        (None, None)
    };

    let lambda_min = if exact_min {
        spectral::sym_eigen_range(&s.base.lower(), &tau)?.0.value
    } else {
        let upper = vertex_min.as_ref().map_or(c_min.hi().clone(), |v| v.hi().clone());
        Interval::new(c_min.lo() - &rho, upper)?
    };
    let lambda_max = if exact_max {
        spectral::sym_eigen_range(&s.base.upper(), &tau)?.1.value
    } else {
        let lower = vertex_max.as_ref().map_or(c_max.lo().clone(), |v| v.lo().clone());
        Interval::new(lower, c_max.hi() + &rho)?
    };
    let names: Vec<&str> = [
        (diag_radius, "diagonal-radius"),
        (nonneg_off, "essentially-nonnegative"),
        (nonpos_off, "essentially-nonpositive"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect();
    Ok(EigenRangeReport {
        lambda_min,
        lambda_max,
        exact_min,
        exact_max,
        subclass: (!names.is_empty()).then(|| names.join("+")),
        vertex_min,
        vertex_max,
    })
}

/// Range of the spectral radius for nonnegative (`[ρ(A̲), ρ(A̅)]`) or
/// diagonal interval matrices. Returns enclosures of the two endpoints.
pub fn spectral_radius_range(a: &IntervalMatrix) -> Result<(Interval, Interval)> {
    let n = a.require_square()?;
    if a.is_diagonal() {
        let lo = (0..n).map(|i| a[(i, i)].mig()).max().unwrap_or_default();
        let hi = (0..n).map(|i| a[(i, i)].mag()).max().unwrap_or_default();
        return Ok((Interval::point(lo), Interval::point(hi)));
    }
    if a.is_nonnegative() {
        let tau = default_tolerance();
        let lo = spectral::spectral_radius(&a.lower(), &tau)?.value;
        let hi = spectral::spectral_radius(&a.upper(), &tau)?.value;
        return Ok((lo, hi));
    }
    Err(Error::UnsupportedMatrixClass(
        "spectral radius range needs a nonnegative or diagonal interval matrix".into(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    Definite,
    Semidefinite,
}

impl Definiteness {
    fn holds(self, m: &RealMatrix) -> bool {
        match self {
            Definiteness::Definite => m.is_positive_definite(),
            Definiteness::Semidefinite => m.is_positive_semidefinite(),
        }
    }
}

/// Sufficient conditions for strong positive (semi)definiteness.
/// `1`: `λ_min(A_c) > ρ(Δ)` (`>=` for semidefinite). `2`: `A_c` positive
/// definite and `ρ(|A_c^-1| Δ) < 1`.
pub fn strong_pd_sufficient(s: &SymmetricIntervalMatrix, cond: u8, kind: Definiteness) -> Result<Verdict> {
    let n = s.dim();
    let (center, delta) = s.base.midpoint_radius();
    match cond {
        1 => {
            if delta.is_zero() {
                return Ok(if kind.holds(&center) {
                    Verdict::proven("degenerate member is definite")
                } else {
                    Verdict::unknown("degenerate member is not definite")
                });
            }
            let tau = default_tolerance();
            let rho = spectral::spectral_radius(&delta, &tau)?;
            let id = RealMatrix::identity(n);
            if kind.holds(&center.sub(&id.scale(rho.hi()))) {
                return Ok(Verdict::proven(format!("lambda_min(Ac) beyond rho(D) <= {}", rho.hi())));
            }
            let (c_min, _) = spectral::sym_eigen_range(&center, &tau)?;
            let l = c_min.lo();
            if l.is_positive() && spectral_radius_below(&delta, l) {
                return Ok(Verdict::proven(format!("rho(D) < {l} <= lambda_min(Ac)")));
            }
            Ok(Verdict::unknown("lambda_min(Ac) > rho(D) not established"))
        }
        2 => {
            if !center.is_positive_definite() {
                return Ok(Verdict::unknown("midpoint is not positive definite"));
            }
            let inv = center.inverse().expect("definite matrices are nonsingular");
            Ok(if spectral_radius_below(&inv.abs().mul(&delta), &Rational::one()) {
                Verdict::proven("Ac positive definite and rho(|Ac^-1| D) < 1")
            } else {
                Verdict::unknown("rho(|Ac^-1| D) >= 1")
            })
        }
        _ => Err(Error::PreconditionViolated(format!("condition must be 1 or 2, got {cond}"))),
    }
}

/// Exact strong positive (semi)definiteness over the `2^{n-1}` matrices
/// `A_zz`. A negative answer carries an offending vertex.
pub fn strong_pd_vertex(s: &SymmetricIntervalMatrix, kind: Definiteness) -> Result<Decision> {
    let n = s.dim();
    if n > VERTEX_SCAN_MAX {
        return Err(Error::SizeGuardExceeded { n, max: VERTEX_SCAN_MAX });
    }
    Ok(
        match orthant::search(n, true, |z| {
            let v = s.vertex(z);
            (!kind.holds(&v)).then_some(v)
        }) {
            None => Decision::yes(None),
            Some((_, v)) => Decision::no(Some(Certificate::Member(v))),
        },
    )
}

/// Weak positive definiteness (some symmetric member is positive definite).
pub fn weak_pd(s: &SymmetricIntervalMatrix) -> Result<Verdict> {
    let n = s.dim();
    if s.base.midpoint().is_positive_definite() {
        return Ok(Verdict::proven("midpoint is positive definite"));
    }
    if n <= VERTEX_SCAN_MAX {
        if let Some((z, _)) = orthant::search(n, true, |z| s.vertex(z).is_positive_definite().then_some(())) {
            return Ok(Verdict::proven(format!("vertex A_zz with z = {z} is positive definite")));
        }
    }
    let report = sym_eigen_range(s)?;
    if !report.lambda_max.hi().is_positive() {
        return Ok(Verdict::refuted(format!("lambda_max <= {} <= 0", report.lambda_max.hi())));
    }
    Ok(Verdict::unknown("no positive definite member found"))
}

/// Every symmetric member is Hurwitz stable iff `-A^S` is strongly positive definite.
pub fn hurwitz_sym(s: &SymmetricIntervalMatrix) -> Result<Decision> {
    strong_pd_vertex(&s.neg(), Definiteness::Definite)
}

/// Sufficient test for Hurwitz stability of every member: the symmetric part
/// `-(A + A^T)/2` is strongly positive definite.
pub fn hurwitz_general(a: &IntervalMatrix) -> Result<Verdict> {
    let n = a.require_square()?;
    let (center, delta) = a.midpoint_radius();
    let half = rational::half();
    let sc = center.add(&center.transpose()).scale(&half).neg();
    let sd = delta.add(&delta.transpose()).scale(&half);
    let sym = SymmetricIntervalMatrix::new(IntervalMatrix::from_midpoint_radius(&sc, &sd)?)?;
    if n <= VERTEX_SCAN_MAX {
        if strong_pd_vertex(&sym, Definiteness::Definite)?.answer {
            return Ok(Verdict::proven("symmetric part strongly negative definite"));
        }
    } else {
        for cond in [1, 2] {
            if strong_pd_sufficient(&sym, cond, Definiteness::Definite)?.is_proven() {
                return Ok(Verdict::proven("symmetric part strongly negative definite"));
            }
        }
    }
    Ok(Verdict::unknown("symmetric part not shown negative definite"))
}

/// Schur stability (`ρ < 1`) of every symmetric member.
pub fn schur_sym(s: &SymmetricIntervalMatrix) -> Result<Verdict> {
    let r = sym_eigen_range(s)?;
    let one = Rational::one();
    if r.lambda_max.hi() < &one && r.lambda_min.lo() > &-&one {
        return Ok(Verdict::proven(format!(
            "spectrum within [{}, {}]",
            r.lambda_min.lo(),
            r.lambda_max.hi()
        )));
    }
    if r.lambda_max.lo() >= &one {
        return Ok(Verdict::refuted(format!("some member has lambda_max >= {}", r.lambda_max.lo())));
    }
    if r.lambda_min.hi() <= &-&one {
        return Ok(Verdict::refuted(format!("some member has lambda_min <= {}", r.lambda_min.hi())));
    }
    Ok(Verdict::unknown("eigenvalue bounds straddle the unit interval"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    fn sym(c: RealMatrix, d: RealMatrix) -> SymmetricIntervalMatrix {
        SymmetricIntervalMatrix::new(IntervalMatrix::from_midpoint_radius(&c, &d).unwrap()).unwrap()
    }

    #[test]
    fn eigenvalue_membership() {
        let a = IntervalMatrix::new(1, 1, vec![iv(0, 2)]).unwrap();
        let d = is_eigenvalue(&a, &int(1)).unwrap();
        assert!(d.answer);
        match d.certificate {
            Some(Certificate::EigenPair { member, lambda, vector }) => {
                assert!(a.contains(&member).unwrap());
                assert_eq!(member.matvec(&vector), vec![&lambda * &vector[0]]);
            }
            other => panic!("{other:?}"),
        }
        assert!(!is_eigenvalue(&a, &int(3)).unwrap().answer);
    }

    #[test]
    fn eigenvector_membership() {
        let a = IntervalMatrix::new(2, 2, vec![iv(0, 2), iv(0, 0), iv(0, 0), iv(0, 2)]).unwrap();
        assert!(is_eigenvector(&a, &[int(1), int(0)]).unwrap().answer);
        let rot = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[0, -1], &[1, 0]]));
        assert!(!is_eigenvector(&rot, &[int(1), int(0)]).unwrap().answer);
        assert_eq!(is_eigenvector(&rot, &[int(0), int(0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn perron_vectors() {
        let p = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        let d = is_perron_vector(&p, &[int(1), int(1)]).unwrap();
        assert!(d.answer);
        assert!(matches!(d.certificate, Some(Certificate::EigenPair { lambda, .. }) if lambda == int(1)));
        assert!(!is_perron_vector(&p, &[int(2), int(1)]).unwrap().answer);
        let red = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[1, 1], &[0, 1]]));
        assert_eq!(is_perron_vector(&red, &[int(1), int(1)]), Err(Error::NotIrreducible));
        assert_eq!(is_perron_vector(&p, &[int(1), int(0)]), Err(Error::NotPositiveVector));
        assert_eq!(is_perron_vector(&p.neg(), &[int(1), int(1)]), Err(Error::NotNonnegative));
    }

    #[test]
    fn diagonal_radius_subclass() {
        let half = ratio(1, 2);
        let s = sym(
            RealMatrix::diag(&[int(1), int(2)]),
            RealMatrix::diag(&[half.clone(), half.clone()]),
        );
        let r = sym_eigen_range(&s).unwrap();
        assert!(r.exact_min && r.exact_max);
        assert!(r.lambda_min.contains(&half));
        assert!(r.lambda_max.contains(&ratio(5, 2)));
        let z = sym(RealMatrix::from_i64(&[&[2, 1], &[1, 2]]), RealMatrix::zeros(2, 2));
        let r = sym_eigen_range(&z).unwrap();
        assert!(r.lambda_min.contains(&int(1)) && r.lambda_max.contains(&int(3)));
    }

    #[test]
    fn general_range_brackets_vertices() {
        let s = sym(
            RealMatrix::from_i64(&[&[1, -1], &[-1, 3]]),
            RealMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        );
        let r = sym_eigen_range(&s).unwrap();
        assert!(!r.exact_max);
        let vmax = r.vertex_max.unwrap();
        assert!(r.lambda_max.lo() <= vmax.lo());
        assert!(r.lambda_min.hi() >= r.vertex_min.unwrap().hi() || r.exact_min);
    }

    #[test]
    fn spectral_radius_ranges() {
        let d = IntervalMatrix::new(2, 2, vec![iv(-3, -2), iv(0, 0), iv(0, 0), iv(1, 1)]).unwrap();
        assert_eq!(spectral_radius_range(&d).unwrap(), (iv(2, 2), iv(3, 3)));
        let z = IntervalMatrix::new(1, 1, vec![iv(-1, 2)]).unwrap();
        assert_eq!(spectral_radius_range(&z).unwrap().0, iv(0, 0));
        let p = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        let (lo, hi) = spectral_radius_range(&p).unwrap();
        assert!(lo.contains(&int(1)) && hi.contains(&int(1)));
        let g = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[0, -1], &[1, 0]]));
        assert!(matches!(spectral_radius_range(&g), Err(Error::UnsupportedMatrixClass(_))));
    }

    #[test]
    fn positive_definiteness() {
        let s = sym(RealMatrix::identity(2).scale(&int(2)), RealMatrix::ones(2, 2).scale(&ratio(1, 2)));
        assert!(strong_pd_sufficient(&s, 1, Definiteness::Definite).unwrap().is_proven());
        assert!(strong_pd_vertex(&s, Definiteness::Definite).unwrap().answer);
        let p = sym(RealMatrix::from_i64(&[&[2, 1], &[1, 2]]), RealMatrix::zeros(2, 2));
        for c in [1, 2] {
            assert!(strong_pd_sufficient(&p, c, Definiteness::Definite).unwrap().is_proven());
        }
        let w = sym(RealMatrix::identity(2), RealMatrix::ones(2, 2).scale(&int(2)));
        let d = strong_pd_vertex(&w, Definiteness::Definite).unwrap();
        assert!(!d.answer);
        match d.certificate {
            Some(Certificate::Member(m)) => {
                assert!(w.contains(&m));
                assert!(!m.is_positive_definite());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn weak_definiteness() {
        assert!(weak_pd(&sym(RealMatrix::identity(2), RealMatrix::zeros(2, 2))).unwrap().is_proven());
        let neg = sym(RealMatrix::identity(2).scale(&int(-2)), RealMatrix::identity(2));
        assert!(weak_pd(&neg).unwrap().is_refuted());
    }

    #[test]
    fn stability() {
        let s = sym(RealMatrix::identity(2).scale(&int(-2)), RealMatrix::identity(2).scale(&ratio(1, 2)));
        assert!(hurwitz_sym(&s).unwrap().answer);
        assert_eq!(hurwitz_sym(&s).unwrap(), strong_pd_vertex(&s.neg(), Definiteness::Definite).unwrap());
        let j = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert!(hurwitz_general(&j).unwrap().is_unknown());
        assert!(hurwitz_general(&IntervalMatrix::degenerate(&RealMatrix::identity(2).neg()))
            .unwrap()
            .is_proven());
        let d = SymmetricIntervalMatrix::new(
            IntervalMatrix::new(2, 2, vec![Interval::new(ratio(-1, 2), ratio(1, 2)).unwrap(), iv(0, 0), iv(0, 0), Interval::new(ratio(1, 4), ratio(3, 4)).unwrap()]).unwrap(),
        )
        .unwrap();
        assert!(schur_sym(&d).unwrap().is_proven());
        let big = sym(RealMatrix::identity(2), RealMatrix::identity(2).scale(&ratio(1, 2)));
        assert!(schur_sym(&big).unwrap().is_refuted());
    }
}
