//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in canonical form
//! (reduced, positive denominator), so structural equality is numeric
//! equality. Text form is `p/q` or a bare integer `p`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Parses `p/q` or `p`. The denominator must be nonzero.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = |message: String| Error::Parse {
        line: 0,
        column: 0,
        message,
    };
    if t.is_empty() {
        return Err(bad("empty rational".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let p = BigInt::from_str(num).map_err(|_| bad(format!("invalid integer `{num}`")))?;
    let q = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad(format!("invalid integer `{d}`")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad(format!("zero denominator in `{t}`")));
    }
    Ok(Rational::new(p, q))
}

/// Canonical text: `p` when the denominator is one, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Rounds a float to the nearest multiple of `2^-bits`. Non-finite input maps to zero.
pub fn from_f64_grid(v: f64, bits: u32) -> Rational {
    if !v.is_finite() {
        return zero();
    }
    let scale = (bits as f64).exp2();
    let scaled = (v * scale).round();
    let num = Rational::from_float(scaled).unwrap_or_else(zero);
    num / Rational::from_integer(BigInt::one() << bits)
}

pub fn min_of<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn max_of<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if a >= b {
        a
    } else {
        b
    }
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Largest `s` on a `2^-bits` grid with `s*s <= v`, for `v >= 0`.
pub fn sqrt_floor(v: &Rational, bits: u32) -> Rational {
    if !v.is_positive() {
        return zero();
    }
    let mut s = from_f64_grid(to_f64(v).sqrt(), bits);
    let step = Rational::new(BigInt::one(), BigInt::one() << bits);
    while &(&s * &s) > v {
        s -= &step;
    }
    while &((&s + &step) * (&s + &step)) <= v {
        s += &step;
    }
    if s.is_negative() {
        zero()
    } else {
        s
    }
}

/// Smallest `s` on a `2^-bits` grid with `s*s >= v`, for `v >= 0`.
pub fn sqrt_ceil(v: &Rational, bits: u32) -> Rational {
    if !v.is_positive() {
        return zero();
    }
    let mut s = from_f64_grid(to_f64(v).sqrt(), bits);
    let step = Rational::new(BigInt::one(), BigInt::one() << bits);
    while &(&s * &s) < v {
        s += &step;
    }
    while (&s - &step).is_positive() && &((&s - &step) * (&s - &step)) >= v {
        s -= &step;
    }
    s
}

/// `10^-k` as a rational.
pub fn pow10_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}
