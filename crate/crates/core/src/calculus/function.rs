//! Rational-valued functions on a finite group.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::group::GroupTable;
use crate::rational::Rational;

/// A function `G → Q`, stored by element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFunction {
    values: Vec<Rational>,
}

impl GroupFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(order, Rational::zero())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        Self {
            values: vec![c; order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    /// `δ_x`.
    pub fn delta(order: usize, x: usize) -> Self {
        let mut f = Self::zero(order);
        f.values[x] = Rational::one();
        f
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self {
            values: (0..order).map(f).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn at(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn set(&mut self, x: usize, v: Rational) {
        self.values[x] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    /// Right translation `R_a(f)(x) = f(xa)`.
    pub fn translate(&self, group: &GroupTable, a: usize) -> Self {
        Self::from_fn(self.len(), |x| self.values[group.mul(x, a)].clone())
    }
}

impl Add for &GroupFunction {
    type Output = GroupFunction;
    fn add(self, rhs: &GroupFunction) -> GroupFunction {
        GroupFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &GroupFunction {
    type Output = GroupFunction;
    fn sub(self, rhs: &GroupFunction) -> GroupFunction {
        GroupFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Pointwise product.
impl Mul for &GroupFunction {
    type Output = GroupFunction;
    fn mul(self, rhs: &GroupFunction) -> GroupFunction {
        GroupFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a * b).collect(),
        }
    }
}

impl Neg for &GroupFunction {
    type Output = GroupFunction;
    fn neg(self) -> GroupFunction {
        GroupFunction {
            values: self.values.iter().map(|a| -a).collect(),
        }
    }
}

impl AddAssign<&GroupFunction> for GroupFunction {
    fn add_assign(&mut self, rhs: &GroupFunction) {
        for (a, b) in self.values.iter_mut().zip(&rhs.values) {
            *a += b;
        }
    }
}

impl SubAssign<&GroupFunction> for GroupFunction {
    fn sub_assign(&mut self, rhs: &GroupFunction) {
        for (a, b) in self.values.iter_mut().zip(&rhs.values) {
            *a -= b;
        }
    }
}
