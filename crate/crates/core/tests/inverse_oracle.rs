use intlin_core::generate::{corpus, generate, MatrixClass};
use intlin_core::inverse::{det_range, inverse_enclosure, inverse_exact, inverse_nonneg, inverse_unit_midpoint};
use intlin_core::oracles::sample_members;
use intlin_core::rational::ratio;
use intlin_core::regularity::is_regular_exact;
use intlin_core::{DetMethod, EnclosureOptions, IntervalMatrix, Method};

fn within(outer: &IntervalMatrix, inner: &IntervalMatrix) -> bool {
    inner.entries().iter().zip(outer.entries()).all(|(i, o)| i.is_subset_of(o))
}

#[test]
fn sampled_inverses_and_determinants_lie_inside() {
    for a in corpus(5, 60) {
        let det = det_range(&a, DetMethod::Exact).unwrap();
        let regular = is_regular_exact(&a).unwrap().answer;
        assert_eq!(det.contains_zero(), !regular);
        let inv = regular.then(|| inverse_exact(&a).unwrap().matrix);
        for s in sample_members(&a, None, 9, 1000 / 60) {
            assert!(det.contains(&s.matrix.det()));
            if let Some(inv) = &inv {
                assert!(inv.contains(&s.matrix.inverse().unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn unit_midpoint_matches_vertex_inverse() {
    for s in 0..50u64 {
        let n = 1 + (s as usize) % 4;
        let a = generate(n, n, s, &ratio(7, 8), MatrixClass::UnitMidpoint).unwrap();
        let closed = inverse_unit_midpoint(&a.radius()).unwrap();
        assert_eq!(closed.matrix, inverse_exact(&a).unwrap().matrix, "{a}");
    }
    let a = IntervalMatrix::from_midpoint_radius(
        &intlin_core::RealMatrix::identity(1),
        &intlin_core::RealMatrix::from_vec(1, 1, vec![ratio(1, 2)]),
    )
    .unwrap();
    let closed = inverse_unit_midpoint(&a.radius()).unwrap().matrix;
    assert_eq!(closed, inverse_exact(&a).unwrap().matrix);
    assert_eq!(closed[(0, 0)].lo(), &ratio(2, 3));
    assert_eq!(closed[(0, 0)].hi(), &ratio(2, 1));
}

#[test]
fn inverse_nonneg_matches_vertex_inverse() {
    for s in 0..25u64 {
        let n = 2 + (s as usize) % 3;
        let a = generate(n, n, s, &ratio(1, 2), MatrixClass::MMatrix).unwrap();
        let (d, inv) = inverse_nonneg(&a).unwrap();
        assert!(d.answer);
        assert_eq!(inv.unwrap().matrix, inverse_exact(&a).unwrap().matrix);
    }
}

#[test]
fn column_enclosure_contains_exact_inverse() {
    let opts = EnclosureOptions::default();
    for a in corpus(11, 40) {
        if !is_regular_exact(&a).unwrap().answer {
            continue;
        }
        let exact = inverse_exact(&a).unwrap().matrix;
        if let Ok(enc) = inverse_enclosure(&a, Method::Krawczyk, &opts) {
            assert!(within(&enc.matrix, &exact), "{a}");
        }
        if let Ok(enc) = inverse_enclosure(&a, Method::Hbr, &opts) {
            assert!(within(&enc.matrix, &exact), "{a}");
        }
    }
    for s in 0..10u64 {
        let a = generate(3, 3, s, &ratio(1, 2), MatrixClass::UnitMidpoint).unwrap();
        let closed = inverse_unit_midpoint(&a.radius()).unwrap().matrix;
        let enc = inverse_enclosure(&a, Method::Hbr, &opts).unwrap();
        assert!(within(&enc.matrix, &closed));
    }
}
