//! Tautological gamma matrices and the braided Casimir.

use num_traits::Zero;

use crate::group::{AdSet, Representation};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::riemannian::KillingForm;

use super::DiracError;

/// `γ_a` for each position `a` in `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFamily {
    pub gammas: Vec<Matrix>,
}

impl GammaFamily {
    pub fn dim(&self) -> usize {
        self.gammas.first().map_or(0, Matrix::rows)
    }

    /// `ρ(g) γ_a ρ(g)⁻¹ = γ_{gag⁻¹}` for all `g` and `a`.
    pub fn is_equivariant(&self, set: &AdSet, rho: &Representation) -> bool {
        let group = set.group();
        group.elements().all(|g| {
            let r = rho.matrix(g);
            let r_inv = rho.matrix(group.inv(g));
            (0..set.len()).all(|a| &(r * &self.gammas[a]) * r_inv == self.gammas[set.conj_by_element(g, a)])
        })
    }

    /// `Σ_a γ_a`.
    pub fn sum(&self) -> Matrix {
        let d = self.dim();
        self.gammas.iter().fold(Matrix::zeros(d, d), |acc, g| &acc + g)
    }
}

/// `γ_a = Σ_b η⁻¹_{ab} (ρ(b) − 1)`.
pub fn tautological_gammas(
    eta: &KillingForm,
    rho: &Representation,
    set: &AdSet,
) -> Result<GammaFamily, DiracError> {
    let inv = eta.eta_inv.as_ref().ok_or(DiracError::DegenerateKilling)?;
    let n = set.len();
    let d = rho.dim();
    let shifted: Vec<Matrix> = (0..n)
        .map(|b| rho.matrix(set.element(b)) - &Matrix::identity(d))
        .collect();
    let gammas = (0..n)
        .map(|a| {
            (0..n).fold(Matrix::zeros(d, d), |acc, b| {
                if inv[(a, b)].is_zero() {
                    acc
                } else {
                    &acc + &shifted[b].scale(&inv[(a, b)])
                }
            })
        })
        .collect();
    Ok(GammaFamily { gammas })
}

/// `τ^a = ρ(a⁻¹) − 1`.
pub fn tau(rho: &Representation, set: &AdSet) -> Vec<Matrix> {
    let group = set.group();
    (0..set.len())
        .map(|a| rho.matrix(group.inv(set.element(a))) - &Matrix::identity(rho.dim()))
        .collect()
}

/// An element `Σ_g c_g g` of the group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub coeffs: Vec<Rational>,
}

impl GroupAlgebraElement {
    pub fn evaluate(&self, rho: &Representation) -> Matrix {
        let d = rho.dim();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(d, d), |acc, (g, c)| &acc + &rho.matrix(g).scale(c))
    }
}

/// `C = Σ_{a,b} η⁻¹_{ab} (a − e)(b − e)`.
pub fn braided_casimir(eta: &KillingForm, set: &AdSet) -> Result<GroupAlgebraElement, DiracError> {
    let inv = eta.eta_inv.as_ref().ok_or(DiracError::DegenerateKilling)?;
    let group = set.group();
    let mut coeffs = vec![Rational::zero(); group.order()];
    for a in 0..set.len() {
        for b in 0..set.len() {
            let c = &inv[(a, b)];
            if c.is_zero() {
                continue;
            }
            let (ea, eb) = (set.element(a), set.element(b));
            coeffs[group.mul(ea, eb)] += c;
            coeffs[ea] -= c;
            coeffs[eb] -= c;
            coeffs[0] += c;
        }
    }
    Ok(GroupAlgebraElement { coeffs })
}
