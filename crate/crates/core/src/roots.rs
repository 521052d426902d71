//! Numeric roots of rational polynomials in fixed-point arbitrary precision.
//!
//! Numbers are `m · 2^-bits` with `m` a [`BigInt`], so precision is absolute.
//! Roots are found by Aberth-Ehrlich iteration on square-free inputs; the
//! exact side (square-free split, real-root counts) lives in [`crate::poly`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::rational::Rational;

/// Complex number with fixed-point parts scaled by `2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComplex {
    pub re: BigInt,
    pub im: BigInt,
}

/// Fixed-point context.
#[derive(Clone, Copy, Debug)]
pub struct Fixed {
    pub bits: u32,
}

impl Fixed {
    /// Working precision for `digits` decimal digits plus guard bits.
    pub fn for_digits(digits: usize) -> Self {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64;
        Self { bits }
    }

    pub fn zero(&self) -> FixedComplex {
        FixedComplex {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn from_rational(&self, q: &Rational) -> BigInt {
        let scaled = q.numer() << self.bits;
        div_round(&scaled, q.denom())
    }

    pub fn from_f64(&self, x: f64) -> BigInt {
        // exact enough for seeds: split into mantissa/exponent via scaling
        let scaled = x * 2f64.powi(53);
        let m = BigInt::from(scaled as i128);
        if self.bits >= 53 {
            m << (self.bits - 53)
        } else {
            m >> (53 - self.bits)
        }
    }

    pub fn to_f64(&self, m: &BigInt) -> f64 {
        let shift = self.bits.saturating_sub(60);
        let top = (m >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    pub fn mul_real(&self, a: &BigInt, b: &BigInt) -> BigInt {
        shr_round(&(a * b), self.bits)
    }

    pub fn add(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        FixedComplex {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    pub fn sub(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        FixedComplex {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    pub fn mul(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        FixedComplex {
            re: shr_round(&(&a.re * &b.re - &a.im * &b.im), self.bits),
            im: shr_round(&(&a.re * &b.im + &a.im * &b.re), self.bits),
        }
    }

    /// `a / b`; `None` when `b` is exactly zero at this precision.
    pub fn div(&self, a: &FixedComplex, b: &FixedComplex) -> Option<FixedComplex> {
        let norm = &b.re * &b.re + &b.im * &b.im;
        if norm.is_zero() {
            return None;
        }
        let re = (&a.re * &b.re + &a.im * &b.im) << self.bits;
        let im = (&a.im * &b.re - &a.re * &b.im) << self.bits;
        Some(FixedComplex {
            re: div_round(&re, &norm),
            im: div_round(&im, &norm),
        })
    }

    pub fn one(&self) -> FixedComplex {
        FixedComplex {
            re: BigInt::one() << self.bits,
            im: BigInt::zero(),
        }
    }

    /// Max-norm `max(|re|, |im|)` of the raw mantissas.
    pub fn max_abs(z: &FixedComplex) -> BigInt {
        z.re.abs().max(z.im.abs())
    }

    /// Decimal rendering of a real fixed value with `digits` fractional
    /// digits, rounded half away from zero.
    pub fn to_decimal(&self, m: &BigInt, digits: usize) -> String {
        let ten = num_traits::pow(BigInt::from(10), digits);
        let scaled = shr_round(&(m.abs() * ten.clone()), self.bits);
        let (int_part, frac) = scaled.div_rem(&ten);
        let sign = if m.is_negative() && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits)
        }
    }
}

fn shr_round(x: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x.clone();
    }
    let half = BigInt::one() << (bits - 1);
    if x.is_negative() {
        -((-x + half) >> bits)
    } else {
        (x + half) >> bits
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    // q = floor(a/b), 0 <= r < |b| for b > 0
    let twice: BigInt = r * 2;
    if twice.abs() >= b.abs() {
        if b.is_positive() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn horner(ctx: &Fixed, coeffs: &[BigInt], z: &FixedComplex) -> (FixedComplex, FixedComplex) {
    // returns (p(z), p'(z)) for real fixed coefficients in ascending order
    let mut p = ctx.zero();
    let mut dp = ctx.zero();
    for c in coeffs.iter().rev() {
        dp = ctx.add(&ctx.mul(&dp, z), &p);
        p = ctx.mul(&p, z);
        p.re += c;
    }
    (p, dp)
}

/// All complex roots of a square-free rational polynomial, each accurate to
/// roughly `2^-(bits-16)` in absolute terms. Returns `None` if the iteration
/// fails to settle (for instance on a polynomial that is not square-free).
pub fn aberth_roots(poly: &Poly, ctx: Fixed) -> Option<Vec<FixedComplex>> {
    let monic = poly.monic();
    let n = monic.degree();
    if n == 0 {
        return Some(Vec::new());
    }
    let coeffs: Vec<BigInt> = monic.coeffs().iter().map(|c| ctx.from_rational(c)).collect();
    if n == 1 {
        return Some(vec![FixedComplex {
            re: -coeffs[0].clone(),
            im: BigInt::zero(),
        }]);
    }
    // Cauchy bound for the seed circle.
    let bound = 1.0
        + monic
            .coeffs()
            .iter()
            .take(n)
            .map(|c| c.to_f64().unwrap_or(f64::MAX).abs())
            .fold(0.0, f64::max);
    let radius = bound.min(1e12);
    let mut z: Vec<FixedComplex> = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            FixedComplex {
                re: ctx.from_f64(radius * 0.5 * t.cos()),
                im: ctx.from_f64(radius * 0.5 * t.sin()),
            }
        })
        .collect();
    let tol = BigInt::one() << 16;
    let one = ctx.one();
    for _ in 0..5000 {
        let mut converged = true;
        for k in 0..n {
            let (p, dp) = horner(&ctx, &coeffs, &z[k]);
            if p.re.is_zero() && p.im.is_zero() {
                continue;
            }
            let w = ctx.div(&p, &dp)?;
            let mut s = ctx.zero();
            for j in 0..n {
                if j != k {
                    let diff = ctx.sub(&z[k], &z[j]);
                    s = ctx.add(&s, &ctx.div(&one, &diff)?);
                }
            }
            let denom = ctx.sub(&one, &ctx.mul(&w, &s));
            let step = ctx.div(&w, &denom).unwrap_or(w);
            if Fixed::max_abs(&step) > tol {
                converged = false;
            }
            z[k] = ctx.sub(&z[k], &step);
        }
        if converged {
            return Some(z);
        }
    }
    None
}

/// Coefficients (ascending, fixed point) of `Π (x − r_i)^{m_i}`.
pub fn expand_roots(ctx: Fixed, roots: &[(FixedComplex, usize)]) -> Vec<FixedComplex> {
    let mut acc = vec![ctx.one()];
    for (r, m) in roots {
        for _ in 0..*m {
            let mut next = vec![ctx.zero(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] = ctx.add(&next[i + 1], c);
                let t = ctx.mul(c, r);
                next[i] = ctx.sub(&next[i], &t);
            }
            acc = next;
        }
    }
    acc
}
