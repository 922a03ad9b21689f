//! Closed rational intervals and the four arithmetic operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// Builds `[min(a,b), max(a,b)]`.
    pub fn spanning(a: Rational, b: Rational) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn point(v: Rational) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn zero() -> Self {
        Self::point(rational::zero())
    }

    pub fn from_midpoint_radius(mid: &Rational, rad: &Rational) -> Result<Self> {
        Self::new(mid - rad, mid + rad)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    pub fn radius(&self) -> Rational {
        (&self.hi - &self.lo) / rational::int(2)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = rational::max_of(&self.lo, &other.lo).clone();
        let hi = rational::min_of(&self.hi, &other.hi).clone();
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: rational::min_of(&self.lo, &other.lo).clone(),
            hi: rational::max_of(&self.hi, &other.hi).clone(),
        }
    }

    /// Magnitude `max |a|` over the interval.
    pub fn mag(&self) -> Rational {
        rational::max_of(&self.lo.abs(), &self.hi.abs()).clone()
    }

    /// Mignitude `min |a|` over the interval; zero when it contains zero.
    pub fn mig(&self) -> Rational {
        if self.contains_zero() {
            rational::zero()
        } else {
            rational::min_of(&self.lo.abs(), &self.hi.abs()).clone()
        }
    }

    /// Exact range of `x^2`, unlike `x * x`.
    pub fn sqr(&self) -> Interval {
        let m = self.mig();
        let g = self.mag();
        Interval {
            lo: &m * &m,
            hi: &g * &g,
        }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        Interval::spanning(&self.lo * c, &self.hi * c)
    }

    pub fn recip(&self) -> Result<Interval> {
        if self.contains_zero() {
            return Err(Error::DivisionByIntervalContainingZero);
        }
        Ok(Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        Ok(self * &other.recip()?)
    }
}

/// Applies one of `+ - * /` with the textbook endpoint formulas.
pub fn interval_binop(op: BinOp, x: &Interval, y: &Interval) -> Result<Interval> {
    Ok(match op {
        BinOp::Add => x + y,
        BinOp::Sub => x - y,
        BinOp::Mul => x * y,
        BinOp::Div => x.div(y)?,
    })
}

/// `[min(points), max(points)]`.
pub fn interval_hull_of<'a, I>(points: I) -> Result<Interval>
where
    I: IntoIterator<Item = &'a Rational>,
{
    let mut it = points.into_iter();
    let first = it.next().ok_or(Error::EmptyInput)?;
    let mut out = Interval::point(first.clone());
    for p in it {
        if p < &out.lo {
            out.lo = p.clone();
        } else if p > &out.hi {
            out.hi = p.clone();
        }
    }
    Ok(out)
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        // Non-empty array, so the hull always exists.
        interval_hull_of(products.iter()).expect("four products")
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        &self + &rhs
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        &self - &rhs
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        &self * &rhs
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

impl Zero for Interval {
    fn zero() -> Self {
        Interval::zero()
    }
    fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

/// `lo:hi`, or a single rational when degenerate.
impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}:{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((lo, hi)) => {
                Interval::new(rational::parse_rational(lo)?, rational::parse_rational(hi)?)
            }
            None => Ok(Interval::point(rational::parse_rational(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn dependency_effect_on_square() {
        let x = iv(-2, 1);
        assert_eq!(interval_binop(BinOp::Mul, &x, &x).unwrap(), iv(-2, 4));
        // The true range of x^2 over [-2,1] is [0,4]; x*x overestimates it.
        let exact = interval_hull_of(
            [int(-2), int(-1), int(0), int(1)]
                .iter()
                .map(|v| v * v)
                .collect::<Vec<_>>()
                .iter(),
        )
        .unwrap();
        assert_eq!(exact, iv(0, 4));
        assert_eq!(x.sqr(), iv(0, 4));
        assert_eq!(iv(-3, -2).sqr(), iv(4, 9));
    }

    #[test]
    fn operation_examples() {
        assert_eq!(interval_binop(BinOp::Add, &iv(3, 5), &iv(0, 0)).unwrap(), iv(3, 5));
        assert_eq!(interval_binop(BinOp::Sub, &iv(1, 2), &iv(1, 2)).unwrap(), iv(-1, 1));
        assert_eq!(
            interval_binop(BinOp::Div, &iv(1, 2), &iv(-1, 1)),
            Err(Error::DivisionByIntervalContainingZero)
        );
        assert_eq!(
            interval_binop(BinOp::Div, &iv(1, 2), &iv(2, 4)).unwrap(),
            Interval::new(ratio(1, 4), int(1)).unwrap()
        );
    }

    #[test]
    fn hull_examples() {
        assert_eq!(interval_hull_of([int(3)].iter()).unwrap(), iv(3, 3));
        assert_eq!(interval_hull_of([int(1), int(-1), int(0)].iter()).unwrap(), iv(-1, 1));
        assert_eq!(
            interval_hull_of([ratio(1, 3), ratio(1, 2), ratio(2, 5)].iter()).unwrap(),
            Interval::new(ratio(1, 3), ratio(1, 2)).unwrap()
        );
        assert_eq!(interval_hull_of(std::iter::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn text_round_trip() {
        for s in ["-1/2:3", "7", "0:0", "-5/3:-1/7"] {
            let i: Interval = s.parse().unwrap();
            let again: Interval = i.to_string().parse().unwrap();
            assert_eq!(i, again);
        }
        assert_eq!("2:2".parse::<Interval>().unwrap().to_string(), "2");
        assert!("3:1".parse::<Interval>().is_err());
    }

    fn arb_interval() -> impl Strategy<Value = Interval> {
        (-20i64..20, 0i64..20, 1i64..6).prop_map(|(a, w, d)| {
            Interval::new(ratio(a, d), ratio(a + w, d)).unwrap()
        })
    }

    fn grid_point(x: &Interval, t: i64) -> Rational {
        x.lo() + x.width() * ratio(t, 16)
    }

    proptest! {
        #[test]
        fn inclusion_and_attainment(x in arb_interval(), y in arb_interval(), op in 0usize..4) {
            let op = [BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div][op];
            let Ok(z) = interval_binop(op, &x, &y) else {
                prop_assert!(op == BinOp::Div && y.contains_zero());
                return Ok(());
            };
            let apply = |a: &Rational, b: &Rational| match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a / b,
            };
            for s in 0..=16 {
                for t in 0..=16 {
                    let v = apply(&grid_point(&x, s), &grid_point(&y, t));
                    prop_assert!(z.contains(&v));
                }
            }
            let ends: Vec<Rational> = [x.lo(), x.hi()]
                .iter()
                .flat_map(|a| [y.lo(), y.hi()].map(|b| apply(a, b)))
                .collect();
            prop_assert!(ends.contains(z.lo()));
            prop_assert!(ends.contains(z.hi()));
        }

        #[test]
        fn single_occurrence_expression_is_sharp(a in arb_interval(), b in arb_interval(), c in arb_interval()) {
            // a*b + c: every operand occurs once, so endpoint enumeration attains both bounds.
            let z = &(&a * &b) + &c;
            let mut values = Vec::new();
            for pa in [a.lo(), a.hi()] {
                for pb in [b.lo(), b.hi()] {
                    for pc in [c.lo(), c.hi()] {
                        values.push(pa * pb + pc);
                    }
                }
            }
            prop_assert_eq!(interval_hull_of(values.iter()).unwrap(), z.clone());
            for s in 0..=8 {
                let v = grid_point(&a, 2 * s) * grid_point(&b, 16 - 2 * s) + grid_point(&c, s);
                prop_assert!(z.contains(&v));
            }
        }
    }
}
