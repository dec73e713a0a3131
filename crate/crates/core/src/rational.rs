//! Exact rational scalars and the `"p/q"` string encoding used on the wire.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

/// Parses `"7"`, `"-5/2"` or `"3/1"`. Decimal points are rejected to keep
/// the pipe exact.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let parse_int = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(parse_int(n)?, d))
        }
        None => Ok(Q::from_integer(parse_int(t)?)),
    }
}

/// Canonical `"p/q"` form; integers are written with an explicit `/1` so a
/// reader never has to guess the encoding.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Compact human form (`"-5/2"`, `"3"`).
pub fn display_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

pub fn is_negative_integer(x: &Q) -> bool {
    x.is_integer() && x.is_negative()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn dot_q(a: &[Q], b: &[i64]) -> Q {
    a.iter()
        .zip(b)
        .fold(Q::zero(), |acc, (x, &y)| acc + x * BigInt::from(y))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

pub fn floor_q(x: &Q) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil_q(x: &Q) -> BigInt {
    x.ceil().to_integer()
}
