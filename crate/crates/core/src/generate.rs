//! Seeded random instances by matrix class.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::interval_matrix::{IntervalMatrix, IntervalVector};
use crate::matrix::RealMatrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    General,
    Bidiagonal,
    MMatrix,
    Symmetric,
    UnitMidpoint,
}

impl MatrixClass {
    pub const ALL: [MatrixClass; 5] = [
        MatrixClass::General,
        MatrixClass::Bidiagonal,
        MatrixClass::MMatrix,
        MatrixClass::Symmetric,
        MatrixClass::UnitMidpoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixClass::General => "general",
            MatrixClass::Bidiagonal => "bidiagonal",
            MatrixClass::MMatrix => "mmatrix",
            MatrixClass::Symmetric => "symmetric",
            MatrixClass::UnitMidpoint => "unit-midpoint",
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MatrixClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown matrix class `{s}`")))
    }
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer in `[lo, hi]`.
fn draw(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    rng.random_range(lo..=hi)
}

/// One of `0, r/4, r/2, 3r/4, r`.
fn radius_level(rng: &mut ChaCha8Rng, r: &Rational) -> Rational {
    r * frac(draw(rng, 0, 4), 4)
}

fn require_square(m: usize, n: usize, class: MatrixClass) -> Result<()> {
    if m != n {
        return Err(Error::ShapeError(format!("class {class} needs a square matrix, got {m}x{n}")));
    }
    Ok(())
}

/// An `m x n` interval matrix of the given class with radii scaled by `radius`.
///
/// `mmatrix` instances are strictly diagonally dominant Z-matrices at the
/// lower bound; `unit-midpoint` has `A_c = I` and row sums of `Δ` at most
/// `radius`.
pub fn generate(m: usize, n: usize, seed: u64, radius: &Rational, class: MatrixClass) -> Result<IntervalMatrix> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyInput);
    }
    if radius.is_negative() {
        return Err(Error::PreconditionViolated("radius must be nonnegative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (center, delta) = match class {
        MatrixClass::General => {
            let c = RealMatrix::from_fn(m, n, |_, _| frac(draw(&mut rng, -8, 8), 2));
            let d = RealMatrix::from_fn(m, n, |_, _| radius_level(&mut rng, radius));
            (c, d)
        }
        MatrixClass::Symmetric => {
            require_square(m, n, class)?;
            let mut cells = vec![(Rational::default(), Rational::default()); n * n];
            for i in 0..n {
                for j in i..n {
                    cells[i * n + j] = (frac(draw(&mut rng, -8, 8), 2), radius_level(&mut rng, radius));
                }
            }
            let at = |i: usize, j: usize| &cells[i.min(j) * n + i.max(j)];
            (
                RealMatrix::from_fn(n, n, |i, j| at(i, j).0.clone()),
                RealMatrix::from_fn(n, n, |i, j| at(i, j).1.clone()),
            )
        }
        MatrixClass::Bidiagonal => {
            require_square(m, n, class)?;
            let upper = rng.random_bool(0.5);
            let mut c = vec![Rational::default(); n * n];
            let mut d = vec![Rational::default(); n * n];
            for i in 0..n {
                let mag = draw(&mut rng, 4, 10);
                let sign = if rng.random_bool(0.5) { 1 } else { -1 };
                c[i * n + i] = frac(sign * mag, 2);
                d[i * n + i] = radius_level(&mut rng, radius);
                if i + 1 < n {
                    let k = if upper { i * n + i + 1 } else { (i + 1) * n + i };
                    c[k] = frac(draw(&mut rng, -8, 8), 2);
                    d[k] = radius_level(&mut rng, radius);
                }
            }
            (RealMatrix::from_vec(n, n, c), RealMatrix::from_vec(n, n, d))
        }
        MatrixClass::MMatrix => {
            require_square(m, n, class)?;
            let mut off = vec![(Rational::default(), Rational::default()); n * n];
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let c = frac(-draw(&mut rng, 0, 4), 2);
                        let r = radius_level(&mut rng, radius).min(-c.clone());
                        off[i * n + j] = (c, r);
                    }
                }
            }
            let diag: Vec<(Rational, Rational)> = (0..n)
                .map(|i| {
                    let load: Rational = (0..n).filter(|&j| j != i).map(|j| {
                        let (c, r) = &off[i * n + j];
                        r - c
                    }).sum();
                    let c = load + frac(2 + draw(&mut rng, 0, 4), 2);
                    let r = radius_level(&mut rng, radius).min(frac(1, 2));
                    (c, r)
                })
                .collect();
            let pick = |i: usize, j: usize| if i == j { &diag[i] } else { &off[i * n + j] };
            (
                RealMatrix::from_fn(n, n, |i, j| pick(i, j).0.clone()),
                RealMatrix::from_fn(n, n, |i, j| pick(i, j).1.clone()),
            )
        }
        MatrixClass::UnitMidpoint => {
            require_square(m, n, class)?;
            let scale = Rational::from_integer(BigInt::from(4 * n as i64));
            let d = RealMatrix::from_fn(n, n, |_, _| radius * frac(draw(&mut rng, 0, 4), 1) / &scale);
            (RealMatrix::identity(n), d)
        }
    };
    IntervalMatrix::from_midpoint_radius(&center, &delta)
}

/// A right-hand side of length `m` with integer midpoints in `[-4, 4]`.
pub fn generate_rhs(m: usize, seed: u64, radius: &Rational) -> IntervalVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    (0..m)
        .map(|_| {
            let c = frac(draw(&mut rng, -4, 4), 1);
            let r = radius_level(&mut rng, radius);
            crate::interval::Interval::from_midpoint_radius(&c, &r).expect("nonnegative radius")
        })
        .collect()
}

/// An interval matrix whose lower bound is an exactly singular integer matrix,
/// so a singular member sits on the boundary.
pub fn boundary_singular(n: usize, seed: u64, radius: &Rational) -> Result<IntervalMatrix> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<Rational>> = (0..n.saturating_sub(1))
        .map(|_| (0..n).map(|_| frac(draw(&mut rng, -4, 4), 1)).collect())
        .collect();
    let (p, q) = (draw(&mut rng, -2, 2), draw(&mut rng, -2, 2));
    let last: Vec<Rational> = (0..n)
        .map(|j| {
            let first = rows.first().map_or(Rational::default(), |r| r[j].clone() * frac(p, 1));
            let second = rows.get(1).map_or(Rational::default(), |r| r[j].clone() * frac(q, 1));
            first + second
        })
        .collect();
    rows.push(last);
    let lower = RealMatrix::from_rows(rows);
    let upper = lower.add(&RealMatrix::from_fn(n, n, |_, _| radius_level(&mut rng, radius) * frac(2, 1)));
    IntervalMatrix::from_bounds(&lower, &upper)
}

/// Square instances of order 2 and 3 cycling through radius levels
/// `1/16, 1/4, 1/2, 1, 2` of the general class and boundary-singular matrices.
pub fn corpus(seed: u64, count: usize) -> Vec<IntervalMatrix> {
    let levels = [frac(1, 16), frac(1, 4), frac(1, 2), frac(1, 1), frac(2, 1)];
    (0..count)
        .map(|k| {
            let n = 2 + k % 2;
            let s = seed.wrapping_mul(1_000_003).wrapping_add(k as u64);
            let slot = k / 2 % (levels.len() + 1);
            if slot == levels.len() {
                boundary_singular(n, s, &frac(1, 2))
            } else {
                generate(n, n, s, &levels[slot], MatrixClass::General)
            }
            .expect("valid parameters")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_classed() {
        let r = frac(1, 2);
        for class in MatrixClass::ALL {
            let a = generate(3, 3, 11, &r, class).unwrap();
            assert_eq!(a, generate(3, 3, 11, &r, class).unwrap());
            match class {
                MatrixClass::Bidiagonal => assert!(a.is_lower_bidiagonal() || a.is_upper_bidiagonal()),
                MatrixClass::MMatrix => assert!(a.is_m_matrix()),
                MatrixClass::Symmetric => assert!(a.is_symmetric()),
                MatrixClass::UnitMidpoint => assert_eq!(a.midpoint(), RealMatrix::identity(3)),
                MatrixClass::General => {}
            }
        }
        assert!(generate(2, 3, 1, &r, MatrixClass::Symmetric).is_err());
        assert_eq!(generate_rhs(4, 5, &r), generate_rhs(4, 5, &r));
    }

    #[test]
    fn boundary_instances_have_singular_lower_bound() {
        for seed in 0..10 {
            let a = boundary_singular(3, seed, &frac(1, 2)).unwrap();
            assert!(a.lower().is_singular());
        }
        assert_eq!(corpus(1, 24).len(), 24);
    }
}
