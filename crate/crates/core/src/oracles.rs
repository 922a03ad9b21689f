//! Brute-force reference implementations: member sampling and endpoint
//! enumeration. Only the arithmetic core is used here, never the deciders.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, IntervalVector};
use crate::matrix::RealMatrix;
use crate::rational::Rational;

pub const GRID_BITS: u32 = 16;
pub const ENDPOINT_MAX: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledMember {
    pub matrix: RealMatrix,
    pub rhs: Vec<Rational>,
    pub seed: u64,
}

fn grid_point(rng: &mut ChaCha8Rng, e: &Interval) -> Rational {
    if e.is_degenerate() {
        return e.lo().clone();
    }
    let steps = 1u64 << GRID_BITS;
    let k = rng.random_range(0..=steps);
    e.lo() + e.width() * Rational::new(BigInt::from(k), BigInt::from(steps))
}

/// Deterministic uniform samples on the `2^-16` grid of each entry.
pub fn sample_members(a: &IntervalMatrix, b: Option<&IntervalVector>, seed: u64, count: usize) -> Vec<SampledMember> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let matrix = RealMatrix::from_fn(a.rows(), a.cols(), |i, j| grid_point(&mut rng, &a[(i, j)]));
            let rhs = b.map_or_else(Vec::new, |b| b.entries().iter().map(|e| grid_point(&mut rng, e)).collect());
            SampledMember { matrix, rhs, seed }
        })
        .collect()
}

/// Samples of symmetric members: the upper triangle is drawn and mirrored.
pub fn sample_symmetric_members(a: &IntervalMatrix, seed: u64, count: usize) -> Vec<RealMatrix> {
    let n = a.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut upper = vec![vec![Rational::default(); n]; n];
            for (i, row) in upper.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate().skip(i) {
                    *cell = grid_point(&mut rng, &a[(i, j)]);
                }
            }
            RealMatrix::from_fn(n, n, |i, j| upper[i.min(j)][i.max(j)].clone())
        })
        .collect()
}

/// Deterministic grid samples from a box.
pub fn sample_vectors(b: &IntervalVector, seed: u64, count: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| b.entries().iter().map(|e| grid_point(&mut rng, e)).collect())
        .collect()
}

fn endpoint_guard(a: &IntervalMatrix) -> Result<usize> {
    let n = a.require_square()?;
    if n > ENDPOINT_MAX {
        return Err(Error::SizeGuardExceeded { n, max: ENDPOINT_MAX });
    }
    Ok(n)
}

/// The `2^{n^2}` matrices with every entry at one of its endpoints.
pub fn endpoint_matrices(a: &IntervalMatrix) -> Vec<RealMatrix> {
    let (m, n) = (a.rows(), a.cols());
    (0..(1u64 << (m * n)))
        .map(|mask| {
            RealMatrix::from_fn(m, n, |i, j| {
                let e = &a[(i, j)];
                if mask >> (i * n + j) & 1 == 1 {
                    e.hi().clone()
                } else {
                    e.lo().clone()
                }
            })
        })
        .collect()
}

fn endpoint_vectors(b: &IntervalVector) -> Vec<Vec<Rational>> {
    (0..(1u64 << b.len()))
        .map(|mask| {
            b.entries()
                .iter()
                .enumerate()
                .map(|(i, e)| if mask >> i & 1 == 1 { e.hi().clone() } else { e.lo().clone() })
                .collect()
        })
        .collect()
}

/// `true` iff the endpoint determinants change sign or vanish.
pub fn vertex_det_singularity(a: &IntervalMatrix) -> Result<bool> {
    endpoint_guard(a)?;
    let dets: Vec<Rational> = endpoint_matrices(a).iter().map(RealMatrix::det).collect();
    let zero = Rational::default();
    let lo = dets.iter().min().expect("nonempty");
    let hi = dets.iter().max().expect("nonempty");
    Ok(lo <= &zero && &zero <= hi)
}

/// Hull of the solutions of all endpoint systems, an inner bound on the hull
/// of the solution set.
pub fn vertex_system_hull(a: &IntervalMatrix, b: &IntervalVector) -> Result<IntervalVector> {
    let n = endpoint_guard(a)?;
    if b.len() != n {
        return Err(Error::DimensionMismatch(format!("right-hand side of length {} for order {n}", b.len())));
    }
    let rhs = endpoint_vectors(b);
    let mut lo: Option<Vec<Rational>> = None;
    let mut hi: Option<Vec<Rational>> = None;
    for m in endpoint_matrices(a) {
        let inv = m.inverse().ok_or(Error::SingularEndpointMatrix)?;
        for r in &rhs {
            let x = inv.matvec(r);
            lo = Some(match lo {
                None => x.clone(),
                Some(l) => l.into_iter().zip(&x).map(|(p, q)| p.min(q.clone())).collect(),
            });
            hi = Some(match hi {
                None => x,
                Some(h) => h.into_iter().zip(x).map(|(p, q)| p.max(q)).collect(),
            });
        }
    }
    IntervalVector::from_bounds(&lo.expect("nonempty"), &hi.expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn samples_are_members_and_deterministic() {
        let a = IntervalMatrix::new(2, 2, vec![iv(0, 1), iv(-2, 2), iv(3, 3), iv(1, 5)]).unwrap();
        let b = IntervalVector::new(vec![iv(0, 1), iv(2, 3)]);
        let s = sample_members(&a, Some(&b), 7, 50);
        assert!(s.iter().all(|m| a.contains(&m.matrix).unwrap() && b.contains(&m.rhs)));
        assert_eq!(s, sample_members(&a, Some(&b), 7, 50));
        let d = IntervalMatrix::degenerate(&RealMatrix::identity(2));
        assert!(sample_members(&d, None, 1, 5).iter().all(|m| m.matrix == RealMatrix::identity(2)));
        let sym = IntervalMatrix::new(2, 2, vec![iv(0, 1), iv(-2, 2), iv(-2, 2), iv(1, 5)]).unwrap();
        assert!(sample_symmetric_members(&sym, 3, 20).iter().all(|m| m.is_symmetric() && sym.contains(m).unwrap()));
    }

    #[test]
    fn determinant_oracle() {
        let id = IntervalMatrix::degenerate(&RealMatrix::identity(2));
        assert!(!vertex_det_singularity(&id).unwrap());
        let s = IntervalMatrix::from_midpoint_radius(&RealMatrix::identity(2), &RealMatrix::ones(2, 2)).unwrap();
        assert!(vertex_det_singularity(&s).unwrap());
    }

    #[test]
    fn endpoint_hull() {
        let a = IntervalMatrix::new(1, 1, vec![iv(2, 4)]).unwrap();
        let b = IntervalVector::new(vec![iv(2, 4)]);
        let h = vertex_system_hull(&a, &b).unwrap();
        assert_eq!(h[0], Interval::new(ratio(1, 2), int(2)).unwrap());
        let z = IntervalMatrix::new(1, 1, vec![iv(0, 1)]).unwrap();
        assert_eq!(vertex_system_hull(&z, &b), Err(Error::SingularEndpointMatrix));
    }
}
