//! Exact characteristic polynomials and certified numeric spectra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{berkowitz_charpoly, Matrix};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::roots::{aberth_roots, expand_roots, Fixed, FixedComplex};

/// Default number of decimal digits for reported roots.
pub const DEFAULT_DIGITS: usize = 30;

/// `det(λ − M)` as a monic rational polynomial (ascending coefficients),
/// computed division-free on the integer-scaled matrix.
pub fn char_poly(m: &Matrix) -> Poly {
    let n = m.rows();
    let (ints, den) = m.to_integer();
    let scaled = berkowitz_charpoly(&ints);
    // det(μ − L·M) at μ = Lλ equals L^n det(λ − M)
    let den_q = Rational::from_integer(den);
    let mut power = Rational::one();
    let scale_n = num_traits::pow(den_q.clone(), n);
    let coeffs = scaled
        .into_iter()
        .map(|c| {
            let v = Rational::from_integer(c) * &power / &scale_n;
            power = &power * &den_q;
            v
        })
        .collect();
    Poly::new(coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Fixed-point value in the spectrum's context.
    pub value: FixedComplex,
    pub multiplicity: usize,
    /// Certified by a Sturm count on the square-free factor.
    pub is_real: bool,
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Monic characteristic polynomial.
    pub char_poly: Poly,
    /// Primitive integer multiple, ascending degree, positive leading term.
    pub integer_coeffs: Vec<BigInt>,
    pub roots: Vec<Root>,
    pub digits: usize,
    ctx: Fixed,
    /// Largest coefficient difference between the char poly and
    /// `Π (λ − r)^m`, as a fixed-point magnitude.
    pub max_reconstruction_error: BigInt,
    /// `p(−λ) = ±p(λ)` exactly.
    pub symmetric: bool,
}

impl Spectrum {
    pub fn context(&self) -> Fixed {
        self.ctx
    }

    /// `max_reconstruction_error ≤ 10^{-exp}`.
    pub fn reconstruction_within(&self, exp: u32) -> bool {
        let bound = (BigInt::one() << self.ctx.bits) / num_traits::pow(BigInt::from(10), exp as usize);
        self.max_reconstruction_error <= bound
    }

    pub fn reconstruction_error_string(&self) -> String {
        let d = self.digits + 10;
        self.ctx.to_decimal(&self.max_reconstruction_error, d)
    }

    pub fn format_root(&self, r: &Root) -> String {
        let re = self.ctx.to_decimal(&r.value.re, self.digits);
        if r.is_real {
            return re;
        }
        let im = self.ctx.to_decimal(&r.value.im.abs(), self.digits);
        let sign = if r.value.im.is_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

/// Exact characteristic polynomial plus roots to `digits` decimals.
pub fn spectrum_of(m: &Matrix, digits: usize) -> Spectrum {
    let p = char_poly(m);
    let ctx = Fixed::for_digits(digits);
    let mut roots = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        let real_count = factor.count_real_roots();
        let mut found = aberth_roots(&factor, ctx).expect("square-free factor converges");
        found.sort_by_key(|z| z.im.abs());
        for (k, mut z) in found.into_iter().enumerate() {
            let is_real = k < real_count;
            if is_real {
                z.im = BigInt::zero();
            }
            roots.push(Root {
                value: z,
                multiplicity: mult,
                is_real,
            });
        }
    }
    roots.sort_by(|a, b| {
        b.is_real
            .cmp(&a.is_real)
            .then_with(|| a.value.re.cmp(&b.value.re))
            .then_with(|| a.value.im.cmp(&b.value.im))
    });
    let expanded = expand_roots(
        ctx,
        &roots
            .iter()
            .map(|r| (r.value.clone(), r.multiplicity))
            .collect::<Vec<_>>(),
    );
    let max_reconstruction_error = p
        .coeffs()
        .iter()
        .zip(&expanded)
        .map(|(c, e)| {
            let diff = FixedComplex {
                re: ctx.from_rational(c) - &e.re,
                im: e.im.clone(),
            };
            Fixed::max_abs(&diff)
        })
        .max()
        .unwrap_or_else(BigInt::zero);
    let reflected = p.reflect();
    let symmetric = reflected == p || reflected == p.neg();
    Spectrum {
        integer_coeffs: p.primitive_integer(),
        char_poly: p,
        roots,
        digits,
        ctx,
        max_reconstruction_error,
        symmetric,
    }
}
