use intlin_core::generate::{generate, MatrixClass};
use intlin_core::imx::{emit_matrix, parse_matrix};
use intlin_core::interval::{interval_binop, BinOp};
use intlin_core::rational::{int, ratio};
use intlin_core::{Interval, Rational};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..9).prop_map(|(p, q)| ratio(p, q))
}

fn interval() -> impl Strategy<Value = Interval> {
    (rat(), rat()).prop_map(|(a, b)| Interval::spanning(a, b))
}

/// `lo + t (hi - lo)` for `t` in `[0, 1]`.
fn point_in(x: &Interval, t: &Rational) -> Rational {
    x.lo() + x.width() * t
}

fn unit() -> impl Strategy<Value = Rational> {
    (0i64..=8).prop_map(|k| ratio(k, 8))
}

proptest! {
    #[test]
    fn operations_enclose_pointwise_results(x in interval(), y in interval(), s in unit(), t in unit()) {
        let (a, b) = (point_in(&x, &s), point_in(&y, &t));
        for (op, v) in [(BinOp::Add, &a + &b), (BinOp::Sub, &a - &b), (BinOp::Mul, &a * &b)] {
            prop_assert!(interval_binop(op, &x, &y).unwrap().contains(&v));
        }
        if !y.contains_zero() {
            prop_assert!(interval_binop(BinOp::Div, &x, &y).unwrap().contains(&(&a / &b)));
        } else {
            prop_assert!(interval_binop(BinOp::Div, &x, &y).is_err());
        }
    }

    #[test]
    fn products_are_attained_at_endpoints(x in interval(), y in interval()) {
        let p = interval_binop(BinOp::Mul, &x, &y).unwrap();
        let corners = [x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()];
        prop_assert!(corners.contains(p.lo()) && corners.contains(p.hi()));
    }

    #[test]
    fn imx_round_trip(seed in 0u64..500, m in 1usize..5, n in 1usize..5, k in 0i64..5) {
        let a = generate(m, n, seed, &ratio(k, 3), MatrixClass::General).unwrap();
        prop_assert_eq!(parse_matrix(&emit_matrix(&a)).unwrap(), a);
    }
}

#[test]
fn dependency_example() {
    let x = Interval::new(int(-2), int(1)).unwrap();
    assert_eq!(interval_binop(BinOp::Mul, &x, &x).unwrap(), Interval::new(int(-2), int(4)).unwrap());
}
