//! Univariate polynomials over `Q`, coefficients stored in ascending degree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &lc).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// `(q, r)` with `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        if r.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: returns `(s_i, i)` with
    /// `monic(self) = Π s_i^i`, each `s_i` monic, square-free, pairwise
    /// coprime, and nonconstant.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Number of distinct real roots, by a Sturm sequence evaluated at ±∞.
    pub fn count_real_roots(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        let changes = |signs: Vec<i32>| {
            let nz: Vec<i32> = signs.into_iter().filter(|s| *s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let sign = |q: &Rational| {
            if q.is_positive() {
                1
            } else if q.is_negative() {
                -1
            } else {
                0
            }
        };
        let at_pos: Vec<i32> = seq.iter().map(|p| sign(&p.leading())).collect();
        let at_neg: Vec<i32> = seq
            .iter()
            .map(|p| {
                let s = sign(&p.leading());
                if p.degree() % 2 == 1 {
                    -s
                } else {
                    s
                }
            })
            .collect();
        changes(at_neg) - changes(at_pos)
    }

    /// Primitive integer coefficients (ascending), positive leading term.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut v = rational::primitive_integer_vector(&self.coeffs);
        if v.last().is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
        v
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", rational::fmt(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
