//! Bimodule lifts `i : Ω² → Ω¹⊗Ω¹` used to contract curvature.

use num_traits::{One, Zero};

use crate::calculus::{Calculus, Cotensor, TwoForm};
use crate::linalg::Matrix;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftFlavor {
    /// `i = id − Ψ` on representative pairs.
    Woronowicz,
    /// The splitting built from dual bases of the invariant subspaces.
    Projection,
}

impl LiftFlavor {
    pub fn name(self) -> &'static str {
        match self {
            LiftFlavor::Woronowicz => "woronowicz",
            LiftFlavor::Projection => "projection",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub flavor: LiftFlavor,
    /// `n² × dim Ω²`; column `k` is the image of the `k`-th basis 2-form.
    pub matrix: Matrix,
}

impl Lift {
    pub fn apply(&self, f: &TwoForm) -> Cotensor {
        let nn = self.matrix.rows();
        let n = (nn as f64).sqrt().round() as usize;
        let order = f.comps.first().map_or(0, |c| c.len());
        let mut out = Cotensor::zero(&[n, n], order);
        for (k, fk) in f.comps.iter().enumerate() {
            if fk.is_zero() {
                continue;
            }
            for j in 0..nn {
                let c = &self.matrix[(j, k)];
                if !c.is_zero() {
                    out.comps[j] += &fk.scale(c);
                }
            }
        }
        out
    }
}

/// `i(E_a∧E_b) = E_a⊗E_b − E_{aba⁻¹}⊗E_a` on the chosen basis pairs.
pub fn lift_woronowicz(calc: &Calculus) -> Lift {
    let n = calc.n();
    let basis = calc.omega2().basis();
    let mut m = Matrix::zeros(n * n, basis.len());
    for (k, &(a, b)) in basis.iter().enumerate() {
        let (x, y) = calc.braid_at(a, b);
        m[(a * n + b, k)] += Rational::one();
        m[(x * n + y, k)] -= Rational::one();
    }
    Lift {
        flavor: LiftFlavor::Woronowicz,
        matrix: m,
    }
}

/// Projection `π` on `Ω¹⊗Ω¹` (left-invariant part) with kernel the
/// relations: `π(E_a⊗E_b) = E_a⊗E_b − Σ_α μ^{α,a} Σ_{cd=ab} λ^α_c E_c⊗E_d`,
/// where `μ^α` is the basis dual to the orbit sums `λ^α`.
pub fn projection_matrix(calc: &Calculus) -> Matrix {
    let n = calc.n();
    let set = calc.set();
    let mut pi = Matrix::identity(n * n);
    for sub in calc.omega2().invariant_subspaces() {
        let m = sub.basis.len();
        let gram = Matrix::from_fn(m, m, |i, j| {
            sub.basis[i]
                .iter()
                .zip(&sub.basis[j])
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        });
        let gram_inv = gram.inverse().expect("orbit sums are orthogonal and nonzero");
        let relations: Vec<Vec<Rational>> = sub.basis.iter().map(|l| sub.relation(set, l)).collect();
        for (ia, &a) in sub.support.iter().enumerate() {
            let b = set
                .position(set.group().mul(set.group().inv(set.element(a)), sub.g))
                .expect("support");
            let col = a * n + b;
            for alpha in 0..m {
                // μ^{α,a} = Σ_β (Gram⁻¹)_{αβ} λ^β_a
                let mu = (0..m).fold(Rational::zero(), |acc, beta| {
                    acc + &gram_inv[(alpha, beta)] * &sub.basis[beta][ia]
                });
                if mu.is_zero() {
                    continue;
                }
                for (row, r) in relations[alpha].iter().enumerate() {
                    if !r.is_zero() {
                        pi[(row, col)] -= &mu * r;
                    }
                }
            }
        }
    }
    pi
}

/// The lift `π` restricted to representatives of the basis 2-forms.
pub fn lift_projection(calc: &Calculus) -> Lift {
    let n = calc.n();
    let pi = projection_matrix(calc);
    let basis = calc.omega2().basis();
    let m = Matrix::from_fn(n * n, basis.len(), |j, k| {
        let (a, b) = basis[k];
        pi[(j, a * n + b)].clone()
    });
    Lift {
        flavor: LiftFlavor::Projection,
        matrix: m,
    }
}

pub fn lift(calc: &Calculus, flavor: LiftFlavor) -> Lift {
    match flavor {
        LiftFlavor::Woronowicz => lift_woronowicz(calc),
        LiftFlavor::Projection => lift_projection(calc),
    }
}
