//! Exact rational scalars.
//!
//! Everything in this crate is computed over `Q` with arbitrary-precision
//! numerators and denominators. [`Rational`] is `num_rational::BigRational`,
//! which is always kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `n` or `n/d`.
pub fn fmt(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

/// `[num, den]` JSON pair. Integers outside the `i64` range are emitted as
/// decimal strings.
pub fn to_json(q: &Rational) -> Value {
    Value::Array(vec![bigint_json(q.numer()), bigint_json(q.denom())])
}

fn parse_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

/// Accepts an integer, a `[num, den]` pair, or a string `"n"` / `"n/d"`.
pub fn from_json(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(_) => parse_bigint(v).map(Rational::from_integer),
        Value::Array(pair) if pair.len() == 2 => {
            let n = parse_bigint(&pair[0])?;
            let d = parse_bigint(&pair[1])?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        Value::String(s) => parse_str(s),
        _ => None,
    }
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty
/// slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| {
        num_integer::lcm(acc, q.denom().clone())
    })
}

/// Scales `values` by the smallest positive rational making them coprime
/// integers with a positive leading (first nonzero) entry. Returns all
/// zeros for the zero vector.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|q| q.numer() * (&den / q.denom()))
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::gcd(acc, x.clone()));
    if g.is_zero() {
        return ints;
    }
    let sign_flip = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if sign_flip {
            *x = -&*x;
        }
    }
    ints
}
