//! Interval matrix inverse and determinant range.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, IntervalVector, SignVector};
use crate::matrix::{spectral_radius_below, RealMatrix};
use crate::rational::Rational;
use crate::regularity::is_regular_exact;
use crate::systems::{enclosure, EnclosureOptions, Method};
use crate::verdict::{Certificate, Decision};

pub const INVERSE_EXACT_MAX: usize = 6;
pub const DET_EXACT_MAX: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalInverse {
    pub matrix: IntervalMatrix,
    pub exact: bool,
    pub method: String,
}

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::SizeGuardExceeded { n, max });
    }
    Ok(())
}

fn entrywise(
    acc: Option<(RealMatrix, RealMatrix)>,
    m: &RealMatrix,
) -> Option<(RealMatrix, RealMatrix)> {
    Some(match acc {
        None => (m.clone(), m.clone()),
        Some((lo, hi)) => (
            RealMatrix::from_fn(m.rows(), m.cols(), |i, j| lo[(i, j)].clone().min(m[(i, j)].clone())),
            RealMatrix::from_fn(m.rows(), m.cols(), |i, j| hi[(i, j)].clone().max(m[(i, j)].clone())),
        ),
    })
}

fn merge(a: Option<(RealMatrix, RealMatrix)>, b: Option<(RealMatrix, RealMatrix)>) -> Option<(RealMatrix, RealMatrix)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some((lo, hi))) => entrywise(entrywise(Some(a), &lo), &hi),
    }
}

/// Hull of the inverses `A_yz^-1` over all sign pairs; `A_yz = A_{-y,-z}`, so
/// only `z_1 = +1` is visited.
pub fn inverse_exact(a: &IntervalMatrix) -> Result<IntervalInverse> {
    let n = a.require_square()?;
    guard(n, INVERSE_EXACT_MAX)?;
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if !is_regular_exact(a)?.answer {
        return Err(Error::SingularIntervalMatrix);
    }
    let half = 1u64 << (n - 1);
    let (lo, hi) = (0..(1u64 << n) * half)
        .into_par_iter()
        .map(|k| {
            let y = SignVector::nth(n, k / half);
            let z = SignVector::nth(n, k % half);
            let v = a.vertex_matrix(&y, &z).expect("square");
            v.inverse().expect("vertex of a regular matrix is nonsingular")
        })
        .fold(|| None, |acc, m| entrywise(acc, &m))
        .reduce(|| None, merge)
        .expect("at least one vertex");
    Ok(IntervalInverse {
        matrix: IntervalMatrix::from_bounds(&lo, &hi)?,
        exact: true,
        method: "exact".into(),
    })
}

/// Closed form for `[I - Δ, I + Δ]` with `rho(Δ) < 1`: with `M = (I - Δ)^-1`
/// and `k_j = 2 m_jj^2 / (2 m_jj - 1)` the inverse is `[-M + D_k, M]`.
pub fn inverse_unit_midpoint(delta: &RealMatrix) -> Result<IntervalInverse> {
    if !delta.is_square() {
        return Err(Error::NotSquare {
            rows: delta.rows(),
            cols: delta.cols(),
        });
    }
    if !delta.is_nonnegative() {
        return Err(Error::PreconditionViolated("radius matrix must be nonnegative".into()));
    }
    if !spectral_radius_below(delta, &Rational::one()) {
        return Err(Error::SpectralRadiusNotProven);
    }
    let n = delta.rows();
    let m = RealMatrix::identity(n)
        .sub(delta)
        .inverse()
        .ok_or(Error::SpectralRadiusNotProven)?;
    let two = Rational::from_integer(2.into());
    let lower = RealMatrix::from_fn(n, n, |i, j| {
        if i == j {
            let mjj = &m[(j, j)];
            let k = &two * mjj * mjj / (&two * mjj - Rational::one());
            k - mjj
        } else {
            -&m[(i, j)]
        }
    });
    Ok(IntervalInverse {
        matrix: IntervalMatrix::from_bounds(&lower, &m)?,
        exact: true,
        method: "unit-midpoint".into(),
    })
}

/// Decides inverse nonnegativity from the two bound matrices; on success the
/// inverse is `[A̅^-1, A̲^-1]`. A negative answer names the offending bound matrix.
pub fn inverse_nonneg(a: &IntervalMatrix) -> Result<(Decision, Option<IntervalInverse>)> {
    a.require_square()?;
    let (lo, hi) = (a.lower(), a.upper());
    let inv_lo = lo.inverse();
    let inv_hi = hi.inverse();
    for (m, inv) in [(&lo, &inv_lo), (&hi, &inv_hi)] {
        if !inv.as_ref().is_some_and(RealMatrix::is_nonnegative) {
            return Ok((Decision::no(Some(Certificate::Member(m.clone()))), None));
        }
    }
    let (inv_lo, inv_hi) = (inv_lo.unwrap(), inv_hi.unwrap());
    let inv = IntervalInverse {
        matrix: IntervalMatrix::from_bounds(&inv_hi, &inv_lo)?,
        exact: true,
        method: "nonneg".into(),
    };
    Ok((Decision::yes(None), Some(inv)))
}

/// Column `i` is an enclosure of the solutions of `A x = e_i`.
pub fn inverse_enclosure(a: &IntervalMatrix, method: Method, opts: &EnclosureOptions) -> Result<IntervalInverse> {
    let n = a.require_square()?;
    let cols = (0..n)
        .map(|i| {
            let r = enclosure(a, &IntervalVector::unit(n, i), method, opts)?;
            r.enclosure.ok_or(Error::SingularIntervalMatrix)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntervalInverse {
        matrix: IntervalMatrix::from_fn(n, n, |i, j| cols[j][i].clone()),
        exact: false,
        method: format!("enclosure-{}", method.name()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    Exact,
    Enclosure,
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DetMethod::Exact => "exact",
            DetMethod::Enclosure => "enclosure",
        })
    }
}

impl FromStr for DetMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(DetMethod::Exact),
            "enclosure" => Ok(DetMethod::Enclosure),
            _ => Err(Error::PreconditionViolated(format!("unknown determinant method `{s}`"))),
        }
    }
}

/// Determinant range. `Exact` scans the `2^{n^2}` endpoint matrices (the
/// determinant is multilinear in the entries); `Enclosure` multiplies the
/// pivots of interval Gaussian elimination.
pub fn det_range(a: &IntervalMatrix, method: DetMethod) -> Result<Interval> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(Interval::point(Rational::one()));
    }
    match method {
        DetMethod::Exact => {
            guard(n, DET_EXACT_MAX)?;
            let cells = n * n;
            let (lo, hi) = (0..(1u64 << cells))
                .into_par_iter()
                .map(|mask| {
                    RealMatrix::from_fn(n, n, |i, j| {
                        let e = &a[(i, j)];
                        if mask >> (i * n + j) & 1 == 1 {
                            e.hi().clone()
                        } else {
                            e.lo().clone()
                        }
                    })
                    .det()
                })
                .fold(
                    || None,
                    |acc: Option<(Rational, Rational)>, d| match acc {
                        None => Some((d.clone(), d)),
                        Some((l, h)) => Some((l.min(d.clone()), h.max(d))),
                    },
                )
                .reduce(
                    || None,
                    |p, q| match (p, q) {
                        (None, x) | (x, None) => x,
                        (Some((l1, h1)), Some((l2, h2))) => Some((l1.min(l2), h1.max(h2))),
                    },
                )
                .expect("at least one endpoint matrix");
            Interval::new(lo, hi)
        }
        DetMethod::Enclosure => {
            let mut m: Vec<Vec<Interval>> = (0..n).map(|i| (0..n).map(|j| a[(i, j)].clone()).collect()).collect();
            let mut det = Interval::point(Rational::one());
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
                }
                det = &det * &m[k][k];
            }
            Ok(det)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn scalar_inverse() {
        let a = IntervalMatrix::new(1, 1, vec![iv(2, 4)]).unwrap();
        let inv = inverse_exact(&a).unwrap();
        assert_eq!(inv.matrix[(0, 0)], Interval::new(ratio(1, 4), ratio(1, 2)).unwrap());
        let id = IntervalMatrix::degenerate(&RealMatrix::identity(3));
        assert_eq!(inverse_exact(&id).unwrap().matrix, id);
    }

    #[test]
    fn singular_and_too_large() {
        let a = IntervalMatrix::from_midpoint_radius(&RealMatrix::identity(2), &RealMatrix::ones(2, 2)).unwrap();
        assert_eq!(inverse_exact(&a), Err(Error::SingularIntervalMatrix));
        let big = IntervalMatrix::degenerate(&RealMatrix::identity(7));
        assert_eq!(inverse_exact(&big), Err(Error::SizeGuardExceeded { n: 7, max: 6 }));
    }

    #[test]
    fn unit_midpoint_scalar() {
        let inv = inverse_unit_midpoint(&RealMatrix::from_vec(1, 1, vec![ratio(1, 2)])).unwrap();
        assert_eq!(inv.matrix[(0, 0)], Interval::new(ratio(2, 3), int(2)).unwrap());
        let zero = inverse_unit_midpoint(&RealMatrix::zeros(2, 2)).unwrap();
        assert_eq!(zero.matrix, IntervalMatrix::degenerate(&RealMatrix::identity(2)));
        assert_eq!(
            inverse_unit_midpoint(&RealMatrix::from_vec(1, 1, vec![int(1)])),
            Err(Error::SpectralRadiusNotProven)
        );
    }

    #[test]
    fn unit_midpoint_agrees_with_vertices() {
        let delta = RealMatrix::from_rows(vec![vec![ratio(1, 4), ratio(1, 3)], vec![ratio(1, 5), ratio(1, 2)]]);
        let a = IntervalMatrix::from_midpoint_radius(&RealMatrix::identity(2), &delta).unwrap();
        assert_eq!(inverse_unit_midpoint(&delta).unwrap().matrix, inverse_exact(&a).unwrap().matrix);
    }

    #[test]
    fn inverse_nonneg_example() {
        let lo = RealMatrix::from_i64(&[&[2, -1], &[-1, 2]]);
        let hi = RealMatrix::from_i64(&[&[3, 0], &[0, 3]]);
        let a = IntervalMatrix::from_bounds(&lo, &hi).unwrap();
        let (d, inv) = inverse_nonneg(&a).unwrap();
        assert!(d.answer);
        let inv = inv.unwrap().matrix;
        assert_eq!(inv.lower(), RealMatrix::identity(2).scale(&ratio(1, 3)));
        assert_eq!(inv.upper(), RealMatrix::from_i64(&[&[2, 1], &[1, 2]]).scale(&ratio(1, 3)));
        assert_eq!(inv, inverse_exact(&a).unwrap().matrix);
        let tri = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[1, 1], &[0, 1]]));
        assert!(!inverse_nonneg(&tri).unwrap().0.answer);
    }

    #[test]
    fn enclosure_contains_exact() {
        let a = IntervalMatrix::new(2, 2, vec![iv(3, 4), iv(-1, 1), iv(0, 1), iv(4, 5)]).unwrap();
        let exact = inverse_exact(&a).unwrap().matrix;
        for m in [Method::Hbr, Method::Krawczyk, Method::GaussSeidel] {
            let enc = inverse_enclosure(&a, m, &EnclosureOptions::default()).unwrap().matrix;
            assert!(exact.entries().iter().zip(enc.entries()).all(|(x, y)| x.is_subset_of(y)), "{m}");
        }
        let d = IntervalMatrix::degenerate(&RealMatrix::from_i64(&[&[2, 1], &[1, 3]]));
        let enc = inverse_enclosure(&d, Method::Hbr, &EnclosureOptions::default()).unwrap();
        assert_eq!(enc.matrix, IntervalMatrix::degenerate(&d.midpoint().inverse().unwrap()));
    }

    #[test]
    fn determinant_examples() {
        let a = IntervalMatrix::new(1, 1, vec![iv(-2, 3)]).unwrap();
        assert_eq!(det_range(&a, DetMethod::Exact).unwrap(), iv(-2, 3));
        let d = IntervalMatrix::degenerate(&RealMatrix::diag(&[int(2), int(3), int(-1)]));
        assert_eq!(det_range(&d, DetMethod::Exact).unwrap(), iv(-6, -6));
        assert_eq!(det_range(&d, DetMethod::Enclosure).unwrap(), iv(-6, -6));
        let s = IntervalMatrix::from_midpoint_radius(&RealMatrix::identity(2), &RealMatrix::ones(2, 2)).unwrap();
        assert!(det_range(&s, DetMethod::Exact).unwrap().contains_zero());
        let g = IntervalMatrix::new(2, 2, vec![iv(3, 4), iv(-1, 1), iv(0, 1), iv(4, 5)]).unwrap();
        let exact = det_range(&g, DetMethod::Exact).unwrap();
        assert_eq!(exact, iv(11, 21));
        assert!(exact.is_subset_of(&det_range(&g, DetMethod::Enclosure).unwrap()));
    }
}
