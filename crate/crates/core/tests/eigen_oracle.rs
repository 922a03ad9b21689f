use intlin_core::eigen::{
    hurwitz_sym, is_eigenvalue, is_eigenvector, spectral_radius_range, strong_pd_sufficient, strong_pd_vertex,
    sym_eigen_range, Definiteness, SymmetricIntervalMatrix,
};
use intlin_core::generate::{corpus, generate, MatrixClass};
use intlin_core::lp::{feasible_point, LinearProgram};
use intlin_core::oracles::{sample_members, sample_symmetric_members};
use intlin_core::rational::{int, ratio};
use intlin_core::regularity::is_regular_exact;
use intlin_core::spectral::{default_tolerance, spectral_radius, sym_eigen_range as point_range};
use intlin_core::{Certificate, IntervalMatrix, Rational};

fn symmetric_instance(s: u64) -> SymmetricIntervalMatrix {
    let n = 2 + (s as usize) % 2;
    let a = generate(n, n, s, &ratio(1, 2), MatrixClass::Symmetric).unwrap();
    SymmetricIntervalMatrix::new(a.shift_diagonal(&int(4 - (s % 9) as i64))).unwrap()
}

/// Independent decision of `exists A in box, lambda: A x = lambda x` as one LP
/// over the entries of `A` and `lambda`.
fn eigenvector_lp(a: &IntervalMatrix, x: &[Rational]) -> bool {
    let n = a.rows();
    let vars = n * n + 1;
    let mut prog = LinearProgram::new(vars);
    for i in 0..n {
        let mut row = vec![Rational::default(); vars];
        for j in 0..n {
            row[i * n + j] = x[j].clone();
        }
        row[n * n] = -x[i].clone();
        prog.equal(row, Rational::default());
        for j in 0..n {
            prog.set_bounds(i * n + j, Some(a[(i, j)].lo().clone()), Some(a[(i, j)].hi().clone()));
        }
    }
    feasible_point(&prog).unwrap().is_some()
}

#[test]
fn eigenvalue_zero_is_singularity() {
    for a in corpus(31, 200) {
        assert_eq!(is_eigenvalue(&a, &int(0)).unwrap().answer, !is_regular_exact(&a).unwrap().answer);
    }
}

#[test]
fn eigenvector_decisions_match_lp_oracle() {
    let (mut yes, mut no) = (0, 0);
    for (k, a) in corpus(3, 80).into_iter().enumerate() {
        let n = a.rows();
        let x: Vec<Rational> = (0..n).map(|i| int(((k + 3 * i) % 5) as i64 - 2)).collect();
        if x.iter().all(|v| *v == Rational::default()) {
            continue;
        }
        let d = is_eigenvector(&a, &x).unwrap();
        assert_eq!(d.answer, eigenvector_lp(&a, &x), "{a} {x:?}");
        match d.certificate {
            Some(Certificate::EigenPair { member, lambda, vector }) => {
                yes += 1;
                assert!(a.contains(&member).unwrap());
                assert_eq!(member.matvec(&vector), vector.iter().map(|v| v * &lambda).collect::<Vec<_>>());
            }
            _ => no += 1,
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn vertex_pd_agrees_with_sampling_and_sufficient_conditions() {
    let mut proven = 0;
    for s in 0..50 {
        let a = symmetric_instance(s);
        let exact = strong_pd_vertex(&a, Definiteness::Definite).unwrap();
        for c in [1, 2] {
            if strong_pd_sufficient(&a, c, Definiteness::Definite).unwrap().is_proven() {
                assert!(exact.answer, "cond {c} on {}", a.base());
            }
        }
        if strong_pd_sufficient(&a, 1, Definiteness::Semidefinite).unwrap().is_proven() {
            assert!(strong_pd_vertex(&a, Definiteness::Semidefinite).unwrap().answer);
        }
        if exact.answer {
            proven += 1;
            for m in sample_symmetric_members(a.base(), s, 200) {
                assert!(m.is_positive_definite());
            }
        } else if let Some(Certificate::Member(m)) = &exact.certificate {
            assert!(a.contains(m) && !m.is_positive_definite());
        }
    }
    assert!(proven > 0);
}

#[test]
fn eigen_range_contains_sampled_spectra() {
    let tau = default_tolerance();
    for s in 0..30 {
        let a = symmetric_instance(s);
        let r = sym_eigen_range(&a).unwrap();
        for m in sample_symmetric_members(a.base(), s, 50) {
            let (lmin, lmax) = point_range(&m, &tau).unwrap();
            assert!(lmin.hi() >= r.lambda_min.lo() && lmax.lo() <= r.lambda_max.hi());
        }
        if let Some(v) = &r.vertex_max {
            assert!(r.lambda_max.hi() >= v.lo());
        }
    }
}

#[test]
fn hurwitz_identity_and_sampled_stability() {
    let tau = default_tolerance();
    let mut stable = 0;
    for s in 0..50 {
        let a = symmetric_instance(s);
        let h = hurwitz_sym(&a).unwrap();
        assert_eq!(h, strong_pd_vertex(&a.neg(), Definiteness::Definite).unwrap());
        if h.answer {
            stable += 1;
            for m in sample_symmetric_members(a.base(), s, 100) {
                let (_, lmax) = point_range(&m, &tau).unwrap();
                assert!(lmax.hi() < &Rational::default());
            }
        }
    }
    assert!(stable > 0);
}

#[test]
fn spectral_radius_range_is_monotone() {
    let tau = default_tolerance();
    for s in 0..20u64 {
        let a = generate(3, 3, s, &ratio(1, 2), MatrixClass::General).unwrap();
        let a = IntervalMatrix::from_fn(3, 3, |i, j| {
            let e = &a[(i, j)];
            intlin_core::Interval::new(e.mag(), e.mag() + e.width()).unwrap()
        });
        let (lo, hi) = spectral_radius_range(&a).unwrap();
        for m in sample_members(&a, None, s, 20) {
            let r = spectral_radius(&m.matrix, &tau).unwrap();
            assert!(r.hi() >= lo.lo() && r.lo() <= hi.hi());
        }
    }
}
