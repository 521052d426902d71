//! Forms and cotensors with left function coefficients.

use std::ops::{Add, Neg, Sub};

use crate::rational::Rational;

use super::GroupFunction;

/// `α = α^a E_a`, components indexed by position in `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    pub comps: Vec<GroupFunction>,
}

/// A 2-form in the chosen basis of `Ω²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    pub comps: Vec<GroupFunction>,
}

/// A cotensor built from `Ω¹` and `Ω²` factors, e.g. `Ω¹⊗Ω¹` with
/// `dims = [n, n]` or `Ω²⊗Ω¹` with `dims = [dim Ω², n]`. Components are
/// stored row-major and multiply basis tensors from the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotensor {
    pub dims: Vec<usize>,
    pub comps: Vec<GroupFunction>,
}

macro_rules! linear_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                for (a, b) in out.comps.iter_mut().zip(&rhs.comps) {
                    *a += b;
                }
                out
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                for (a, b) in out.comps.iter_mut().zip(&rhs.comps) {
                    *a -= b;
                }
                out
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                let mut out = self.clone();
                for a in out.comps.iter_mut() {
                    *a = -&*a;
                }
                out
            }
        }

        impl $t {
            pub fn is_zero(&self) -> bool {
                self.comps.iter().all(GroupFunction::is_zero)
            }

            pub fn scale(&self, s: &Rational) -> Self {
                let mut out = self.clone();
                for a in out.comps.iter_mut() {
                    *a = a.scale(s);
                }
                out
            }

            /// Multiplies every component by `f` from the left.
            pub fn left_mul(&self, f: &GroupFunction) -> Self {
                let mut out = self.clone();
                for a in out.comps.iter_mut() {
                    *a = f * &*a;
                }
                out
            }
        }
    };
}

linear_ops!(OneForm);
linear_ops!(TwoForm);
linear_ops!(Cotensor);

impl OneForm {
    pub fn zero(n: usize, order: usize) -> Self {
        Self {
            comps: vec![GroupFunction::zero(order); n],
        }
    }

    /// `E_a` for the member at position `a`.
    pub fn basis(n: usize, order: usize, a: usize) -> Self {
        let mut f = Self::zero(n, order);
        f.comps[a] = GroupFunction::one(order);
        f
    }

    /// Constant coefficients.
    pub fn constant(order: usize, coeffs: &[Rational]) -> Self {
        Self {
            comps: coeffs
                .iter()
                .map(|c| GroupFunction::constant(order, c.clone()))
                .collect(),
        }
    }
}

impl TwoForm {
    pub fn zero(dim: usize, order: usize) -> Self {
        Self {
            comps: vec![GroupFunction::zero(order); dim],
        }
    }
}

impl Cotensor {
    pub fn zero(dims: &[usize], order: usize) -> Self {
        let len = dims.iter().product();
        Self {
            dims: dims.to_vec(),
            comps: vec![GroupFunction::zero(order); len],
        }
    }

    pub fn flat_index(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.dims.len());
        index
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &d)| acc * d + i)
    }

    pub fn get(&self, index: &[usize]) -> &GroupFunction {
        &self.comps[self.flat_index(index)]
    }

    pub fn get_mut(&mut self, index: &[usize]) -> &mut GroupFunction {
        let k = self.flat_index(index);
        &mut self.comps[k]
    }

    /// Multi-index of the flat position `k`.
    pub fn unflatten(&self, mut k: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = k % d;
            k /= d;
        }
        out
    }
}
