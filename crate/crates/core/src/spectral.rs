//! Verified spectral quantities of real matrices.
//!
//! A floating-point estimate from `nalgebra` positions a narrow window; its
//! endpoints are then certified by exact rational tests (definiteness via
//! `L D L^T`, `rho(M) < t` via inverse nonnegativity). When the window cannot
//! be certified, rational bisection takes over from exact a priori bounds.

use nalgebra::DMatrix;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::matrix::{spectral_radius_below, RealMatrix};
use crate::rational::{self, Rational};
use crate::verdict::Verdict;

const MAX_BISECTIONS: usize = 4000;
const ITERATE_BITS: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralEnclosure {
    pub value: Interval,
    pub tolerance: Rational,
    /// Positive vector behind Collatz–Wielandt bounds, for nonnegative matrices.
    pub iterate: Option<Vec<Rational>>,
}

impl SpectralEnclosure {
    fn new(value: Interval, tolerance: &Rational) -> Self {
        SpectralEnclosure {
            value,
            tolerance: tolerance.clone(),
            iterate: None,
        }
    }

    pub fn lo(&self) -> &Rational {
        self.value.lo()
    }

    pub fn hi(&self) -> &Rational {
        self.value.hi()
    }
}

/// `10^-12`.
pub fn default_tolerance() -> Rational {
    rational::pow10_neg(12)
}

pub fn to_nalgebra(m: &RealMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| rational::to_f64(&m[(i, j)]))
}

/// Narrows `[lo, hi]` around a quantity `q` using a monotone predicate:
/// `pred(t)` certifies `q >= t`, its negation certifies `q <= t`.
fn bracket(
    pred: impl Fn(&Rational) -> bool,
    mut lo: Rational,
    mut hi: Rational,
    estimate: Option<f64>,
    tau: &Rational,
) -> Result<Interval> {
    let width = tau * rational::int(2);
    if let Some(mu) = estimate.filter(|v| v.is_finite()) {
        let m = Rational::from_float(mu).unwrap_or_else(rational::zero);
        let a = &m - tau;
        let b = &m + tau;
        if a > lo && a < hi {
            if pred(&a) {
                lo = a;
            } else {
                hi = a;
            }
        }
        if b > lo && b < hi {
            if pred(&b) {
                lo = b;
            } else {
                hi = b;
            }
        }
    }
    let mut steps = 0;
    while &hi - &lo > width {
        steps += 1;
        if steps > MAX_BISECTIONS {
            return Err(Error::NoConvergence(MAX_BISECTIONS));
        }
        let mid = (&lo + &hi) / rational::int(2);
        if pred(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Interval::new(lo, hi).expect("bracket keeps lo <= hi"))
}

/// Gershgorin interval containing the whole spectrum of a symmetric matrix.
fn gershgorin(s: &RealMatrix) -> (Rational, Rational) {
    let n = s.rows();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for i in 0..n {
        let r: Rational = (0..n).filter(|&j| j != i).map(|j| s[(i, j)].abs()).sum();
        let l = &s[(i, i)] - &r;
        let h = &s[(i, i)] + &r;
        if lo.as_ref().is_none_or(|v| &l < v) {
            lo = Some(l);
        }
        if hi.as_ref().is_none_or(|v| &h > v) {
            hi = Some(h);
        }
    }
    (lo.unwrap_or_default(), hi.unwrap_or_default())
}

fn sym_estimates(s: &RealMatrix) -> (Option<f64>, Option<f64>) {
    if s.rows() == 0 {
        return (None, None);
    }
    let ev = nalgebra::SymmetricEigen::new(to_nalgebra(s)).eigenvalues;
    (
        ev.iter().copied().reduce(f64::min),
        ev.iter().copied().reduce(f64::max),
    )
}

fn require_symmetric(s: &RealMatrix) -> Result<()> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

fn lambda_min_enclosure(s: &RealMatrix, estimate: Option<f64>, tau: &Rational) -> Result<Interval> {
    let n = s.rows();
    let (g_lo, _) = gershgorin(s);
    let d_min = s.diagonal().into_iter().min().unwrap_or_default();
    let pred = |t: &Rational| s.sub(&RealMatrix::identity(n).scale(t)).is_positive_definite();
    // lambda_min >= g_lo always; pred(g_lo) may fail only at equality.
    bracket(pred, g_lo, d_min, estimate, tau)
}

/// Enclosures of `lambda_min(S)` and `lambda_max(S)`, each of width at most `2 tau`.
pub fn sym_eigen_range(
    s: &RealMatrix,
    tau: &Rational,
) -> Result<(SpectralEnclosure, SpectralEnclosure)> {
    require_symmetric(s)?;
    let (e_min, e_max) = sym_estimates(s);
    let lo = lambda_min_enclosure(s, e_min, tau)?;
    let neg = lambda_min_enclosure(&s.neg(), e_max.map(|v| -v), tau)?;
    let hi = -&neg;
    Ok((SpectralEnclosure::new(lo, tau), SpectralEnclosure::new(hi, tau)))
}

/// `min_i (Mx)_i / x_i` and `max_i (Mx)_i / x_i` for positive `x`.
pub fn collatz_wielandt(m: &RealMatrix, x: &[Rational]) -> (Rational, Rational) {
    let mx = m.matvec(x);
    let ratios: Vec<Rational> = mx.iter().zip(x).map(|(a, b)| a / b).collect();
    (
        ratios.iter().min().cloned().unwrap_or_default(),
        ratios.iter().max().cloned().unwrap_or_default(),
    )
}

/// Positive rational approximation of a Perron vector by power iteration on `M + I`.
pub fn perron_iterate(m: &RealMatrix) -> Vec<Rational> {
    let n = m.rows();
    let a = to_nalgebra(m) + DMatrix::<f64>::identity(n, n);
    let mut v = nalgebra::DVector::<f64>::from_element(n, 1.0);
    for _ in 0..500 {
        let w = &a * &v;
        let norm = w.amax();
        if norm == 0.0 || !norm.is_finite() {
            break;
        }
        v = w / norm;
    }
    let floor = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << ITERATE_BITS));
    v.iter()
        .map(|&c| {
            let r = rational::from_f64_grid(c, ITERATE_BITS);
            if r < floor {
                floor.clone()
            } else {
                r
            }
        })
        .collect()
}

fn radius_estimate(m: &RealMatrix) -> Option<f64> {
    if m.rows() == 0 {
        return None;
    }
    let ev = to_nalgebra(m).complex_eigenvalues();
    ev.iter().map(|c| c.norm()).reduce(f64::max)
}

/// Enclosure of `rho(M)` for `M >= 0` or symmetric `M`.
pub fn spectral_radius(m: &RealMatrix, tau: &Rational) -> Result<SpectralEnclosure> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.is_nonnegative() {
        let x = perron_iterate(m);
        let (cw_lo, cw_hi) = collatz_wielandt(m, &x);
        let max_row: Rational = (0..m.rows())
            .map(|i| m.row(i).iter().sum::<Rational>())
            .max()
            .unwrap_or_default();
        let lo = rational::max_of(&cw_lo, &rational::zero()).clone();
        let hi = rational::min_of(&cw_hi, &max_row).clone();
        let pred = |t: &Rational| !spectral_radius_below(m, t);
        let value = bracket(pred, lo, hi, radius_estimate(m), tau)?;
        return Ok(SpectralEnclosure {
            value,
            tolerance: tau.clone(),
            iterate: Some(x),
        });
    }
    if m.is_symmetric() {
        let (lmin, lmax) = sym_eigen_range(m, tau)?;
        let zero = rational::zero();
        let lo = rational::max_of(rational::max_of(&-lmin.hi(), lmax.lo()), &zero).clone();
        let hi = rational::max_of(&-lmin.lo(), lmax.hi()).clone();
        return Ok(SpectralEnclosure::new(Interval::new(lo, hi)?, tau));
    }
    Err(Error::UnsupportedMatrixClass(
        "spectral radius needs a nonnegative or symmetric matrix".into(),
    ))
}

/// Enclosures of the smallest and largest singular value (`sigma_n`, `sigma_1`
/// of an `m x n` matrix, through `M^T M`).
pub fn extremal_singular_values(
    m: &RealMatrix,
    tau: &Rational,
) -> Result<(SpectralEnclosure, SpectralEnclosure)> {
    let g = m.transpose().mul(m);
    let n = g.rows();
    let id = RealMatrix::identity(n);
    let bits = 40;
    let sv = to_nalgebra(m).singular_values();
    let (e_min, e_max) = if m.rows() >= m.cols() {
        (sv.iter().copied().reduce(f64::min), sv.iter().copied().reduce(f64::max))
    } else {
        (Some(0.0), sv.iter().copied().reduce(f64::max))
    };

    let diag = g.diagonal();
    let d_min = diag.iter().min().cloned().unwrap_or_default();
    let d_max = diag.iter().max().cloned().unwrap_or_default();
    let frob: Rational = diag.iter().sum();

    let pred_min = |s: &Rational| !s.is_positive() || g.sub(&id.scale(&(s * s))).is_positive_definite();
    let smin = bracket(pred_min, rational::zero(), rational::sqrt_ceil(&d_min, bits), e_min, tau)?;

    let pred_max = |s: &Rational| !s.is_positive() || !id.scale(&(s * s)).sub(&g).is_positive_definite();
    let smax = bracket(
        pred_max,
        rational::sqrt_floor(&d_max, bits),
        rational::sqrt_ceil(&frob, bits),
        e_max,
        tau,
    )?;
    Ok((SpectralEnclosure::new(smin, tau), SpectralEnclosure::new(smax, tau)))
}

/// Exact positive definiteness; never `Unknown`.
pub fn is_positive_definite_real(s: &RealMatrix) -> Result<Verdict> {
    require_symmetric(s)?;
    Ok(if s.is_positive_definite() {
        Verdict::proven("all LDL^T pivots positive")
    } else {
        Verdict::refuted("nonpositive LDL^T pivot")
    })
}

/// Exact positive semidefiniteness; never `Unknown`.
pub fn is_positive_semidefinite_real(s: &RealMatrix) -> Result<Verdict> {
    require_symmetric(s)?;
    Ok(if s.is_positive_semidefinite() {
        Verdict::proven("LDL^T pivots nonnegative")
    } else {
        Verdict::refuted("negative LDL^T pivot")
    })
}
