//! Metrics `g = E_a g^{ab} ⊗ E_b` and the coframings they define.

use num_traits::Zero;

use crate::calculus::{Calculus, Cotensor, GroupFunction, OneForm};
use crate::linalg::Matrix;
use crate::rational::Rational;

use super::RiemannianError;

/// Pointwise-invertible coefficient matrix `g^{ab}` of a metric, together
/// with its pointwise inverse `g_{ab}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coframing {
    n: usize,
    upper: Vec<GroupFunction>,
    lower: Vec<GroupFunction>,
}

impl Coframing {
    /// From the metric coefficients `g^{ab}` (row-major, `n × n`).
    pub fn new(n: usize, upper: Vec<GroupFunction>) -> Result<Self, RiemannianError> {
        assert_eq!(upper.len(), n * n);
        let order = upper.first().map_or(0, GroupFunction::len);
        let mut lower = vec![GroupFunction::zero(order); n * n];
        for x in 0..order {
            let m = Matrix::from_fn(n, n, |a, b| upper[a * n + b].at(x).clone());
            let inv = m.inverse().ok_or(RiemannianError::SingularMetric(x))?;
            for a in 0..n {
                for b in 0..n {
                    lower[a * n + b].set(x, inv[(a, b)].clone());
                }
            }
        }
        Ok(Self { n, upper, lower })
    }

    /// Constant coefficients `g^{ab} = m[a][b]`.
    pub fn constant(m: &Matrix, order: usize) -> Result<Self, RiemannianError> {
        let n = m.rows();
        let upper = (0..n * n)
            .map(|k| GroupFunction::constant(order, m[(k / n, k % n)].clone()))
            .collect();
        Self::new(n, upper)
    }

    /// `g^{ab} = η^{ab} − λ`, i.e. the metric `g − λ θ⊗θ`.
    pub fn shifted(eta: &Matrix, lambda: &Rational, order: usize) -> Result<Self, RiemannianError> {
        let m = Matrix::from_fn(eta.rows(), eta.cols(), |a, b| &eta[(a, b)] - lambda);
        Self::constant(&m, order)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `g^{ab}`.
    pub fn upper(&self, a: usize, b: usize) -> &GroupFunction {
        &self.upper[a * self.n + b]
    }

    /// `g_{ab}`, the pointwise inverse.
    pub fn lower(&self, a: usize, b: usize) -> &GroupFunction {
        &self.lower[a * self.n + b]
    }

    pub fn is_constant(&self) -> bool {
        self.upper.iter().all(GroupFunction::is_constant)
    }

    /// `E*^a = E_b g^{ba}` written with left coefficients `R_b(g^{ba})`, so
    /// that `g = E*^a ⊗ E_a`.
    pub fn coframe(&self, calc: &Calculus, a: usize) -> OneForm {
        OneForm {
            comps: (0..self.n)
                .map(|b| calc.push_right_at(b, self.upper(b, a)))
                .collect(),
        }
    }
}

/// The metric as a cotensor: component `(a, b)` is `R_a(g^{ab})`.
pub fn metric_tensor(calc: &Calculus, cof: &Coframing) -> Cotensor {
    let n = calc.n();
    let mut out = Cotensor::zero(&[n, n], calc.order());
    for a in 0..n {
        for b in 0..n {
            out.comps[a * n + b] = calc.push_right_at(a, cof.upper(a, b));
        }
    }
    out
}

/// Pointwise inverse of the left-coefficient matrix of a cotensor in
/// `Ω¹⊗Ω¹`, or `None` where it is singular.
pub fn pointwise_inverse(t: &Cotensor) -> Option<Vec<Matrix>> {
    let n = t.dims[0];
    let order = t.comps.first().map_or(0, GroupFunction::len);
    (0..order)
        .map(|x| Matrix::from_fn(n, n, |a, b| t.comps[a * n + b].at(x).clone()).inverse())
        .collect()
}

/// `true` when the coefficient matrix is invertible at every point.
pub fn is_nondegenerate(t: &Cotensor) -> bool {
    pointwise_inverse(t).is_some_and(|v| v.iter().all(|m| !m.determinant().is_zero()))
}
