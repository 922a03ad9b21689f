//! Orthant decomposition helpers and Oettli–Prager member reconstruction.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::interval_matrix::SignVector;
use crate::lp::LinearProgram;
use crate::matrix::{self, RealMatrix};
use crate::rational::{self, Rational};

/// Runs `f` over `Y_n` in lexicographic order and returns the first hit.
/// With `half` set, only sign vectors with `s_1 = +1` are visited.
pub fn search<T, F>(n: usize, half: bool, f: F) -> Option<(SignVector, T)>
where
    T: Send,
    F: Fn(&SignVector) -> Option<T> + Sync,
{
    let count: u64 = if half && n > 0 { 1 << (n - 1) } else { 1 << n };
    (0..count).into_par_iter().find_map_first(|k| {
        let s = SignVector::nth(n, k);
        f(&s).map(|t| (s, t))
    })
}

/// Applies `f` to every sign vector and collects the results in order.
pub fn map_all<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&SignVector) -> T + Sync,
{
    (0..(1u64 << n))
        .into_par_iter()
        .map(|k| f(&SignVector::nth(n, k)))
        .collect()
}

/// `Δ D_s` as a dense matrix.
pub fn radius_times_sign(delta: &RealMatrix, s: &SignVector) -> RealMatrix {
    RealMatrix::from_fn(delta.rows(), delta.cols(), |i, j| {
        if s.get(j) > 0 {
            delta[(i, j)].clone()
        } else {
            -&delta[(i, j)]
        }
    })
}

/// Restricts variable `j` to the sign `s_j` (`D_s x >= 0`).
pub fn restrict_to_orthant(lp: &mut LinearProgram, s: &SignVector, offset: usize) {
    for j in 0..s.len() {
        if s.get(j) > 0 {
            lp.set_lower(offset + j, Some(Rational::zero()));
        } else {
            lp.set_upper(offset + j, Some(Rational::zero()));
        }
    }
}

/// Given `x` in the Oettli–Prager set `|A_c x - b_c| <= Δ|x| + δ`, returns a
/// member system `(A, b)` with `A x = b`.
pub fn op_member(
    center: &RealMatrix,
    delta: &RealMatrix,
    b_c: &[Rational],
    b_delta: &[Rational],
    x: &[Rational],
) -> (RealMatrix, Vec<Rational>) {
    let r = matrix::vec_sub(&center.matvec(x), b_c);
    let w = matrix::vec_add(&delta.matvec(&matrix::vec_abs(x)), b_delta);
    let y: Vec<Rational> = r
        .iter()
        .zip(&w)
        .map(|(ri, wi)| if wi.is_zero() { rational::zero() } else { ri / wi })
        .collect();
    let a = RealMatrix::from_fn(center.rows(), center.cols(), |i, j| {
        let t = &y[i] * &delta[(i, j)];
        if x[j].is_negative() {
            &center[(i, j)] + t
        } else {
            &center[(i, j)] - t
        }
    });
    let b = b_c
        .iter()
        .zip(b_delta)
        .zip(&y)
        .map(|((c, d), yi)| c + yi * d)
        .collect();
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval_matrix::IntervalMatrix;
    use crate::rational::int;

    #[test]
    fn first_hit_is_lexicographic() {
        let hit = search(3, false, |s| (s.get(1) < 0).then_some(()));
        assert_eq!(hit.unwrap().0.entries(), &[1, -1, 1]);
        assert_eq!(search(2, true, |s| (s.get(0) < 0).then_some(())), None);
    }

    #[test]
    fn op_member_solves_and_is_contained() {
        let a = IntervalMatrix::from_midpoint_radius(
            &RealMatrix::from_i64(&[&[2, 1], &[0, 3]]),
            &RealMatrix::from_i64(&[&[1, 1], &[1, 1]]),
        )
        .unwrap();
        let (c, d) = a.midpoint_radius();
        let x = vec![int(1), int(-1)];
        let bc = vec![int(1), int(-2)];
        let bd = vec![int(1), int(1)];
        let (m, b) = op_member(&c, &d, &bc, &bd, &x);
        assert!(a.contains(&m).unwrap());
        assert_eq!(m.matvec(&x), b);
    }
}
