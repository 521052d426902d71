//! The bicovariant first-order calculus of an Ad-stable subset `C ⊂ G`, its
//! braiding, and the 2-forms with wedge product and exterior derivative.
//!
//! Forms carry function coefficients on the left, `α = α^a E_a`, and are
//! indexed by the position of `a` in `C`. Moving a function through a basis
//! form uses `E_a f = R_a(f) E_a` with `R_a(f)(x) = f(xa)`.

mod forms;
mod function;
mod omega2;

use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

pub use forms::{Cotensor, OneForm, TwoForm};
pub use function::GroupFunction;
pub use omega2::{invariant_subspaces, InvariantSubspace, TwoFormSpace};

use crate::group::{AdSet, GroupTable};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CalculusError {
    #[error("element {0} is not in the Ad-stable set")]
    NotInSet(usize),
}

/// A calculus together with its space of 2-forms.
#[derive(Clone, Debug)]
pub struct Calculus {
    set: AdSet,
    omega2: TwoFormSpace,
}

impl Calculus {
    pub fn new(set: AdSet) -> Self {
        let omega2 = TwoFormSpace::new(&set);
        Self { set, omega2 }
    }

    pub fn set(&self) -> &AdSet {
        &self.set
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.set.group()
    }

    pub fn omega2(&self) -> &TwoFormSpace {
        &self.omega2
    }

    /// `|C|`.
    pub fn n(&self) -> usize {
        self.set.len()
    }

    pub fn order(&self) -> usize {
        self.group().order()
    }

    fn position(&self, a: usize) -> Result<usize, CalculusError> {
        if a >= self.order() {
            return Err(CalculusError::NotInSet(a));
        }
        self.set.position(a).ok_or(CalculusError::NotInSet(a))
    }

    /// `∂^a f = R_a f − f` for the group element `a ∈ C`.
    pub fn partial(&self, a: usize, f: &GroupFunction) -> Result<GroupFunction, CalculusError> {
        Ok(self.partial_at(self.position(a)?, f))
    }

    /// `∂^a` for the member at position `a`.
    pub fn partial_at(&self, a: usize, f: &GroupFunction) -> GroupFunction {
        &f.translate(self.group(), self.set.element(a)) - f
    }

    /// `R_a(f)`, the coefficient produced by moving `f` left through `E_a`.
    pub fn push_right(&self, a: usize, f: &GroupFunction) -> Result<GroupFunction, CalculusError> {
        Ok(self.push_right_at(self.position(a)?, f))
    }

    pub fn push_right_at(&self, a: usize, f: &GroupFunction) -> GroupFunction {
        f.translate(self.group(), self.set.element(a))
    }

    /// `df = Σ_a (∂^a f) E_a`.
    pub fn differential(&self, f: &GroupFunction) -> OneForm {
        OneForm {
            comps: (0..self.n()).map(|a| self.partial_at(a, f)).collect(),
        }
    }

    /// `Ψ(E_a⊗E_b) = E_{aba⁻¹}⊗E_a`, on group elements.
    pub fn braiding(&self, a: usize, b: usize) -> Result<(usize, usize), CalculusError> {
        let (pa, pb) = (self.position(a)?, self.position(b)?);
        let (x, y) = self.braid_at(pa, pb);
        Ok((self.set.element(x), self.set.element(y)))
    }

    /// Braiding on positions.
    pub fn braid_at(&self, a: usize, b: usize) -> (usize, usize) {
        (self.set.conj_by(a, b), a)
    }

    /// `θ = Σ_a E_a`.
    pub fn theta(&self) -> OneForm {
        OneForm::constant(self.order(), &vec![Rational::from_integer(1.into()); self.n()])
    }

    pub fn basis_form(&self, a: usize) -> OneForm {
        OneForm::basis(self.n(), self.order(), a)
    }

    pub fn zero_one_form(&self) -> OneForm {
        OneForm::zero(self.n(), self.order())
    }

    pub fn zero_two_form(&self) -> TwoForm {
        TwoForm::zero(self.omega2.dim(), self.order())
    }

    /// `α ⊗ β` in `Ω¹⊗Ω¹`: component `(a, b)` is `α^a R_a(β^b)`.
    pub fn tensor(&self, alpha: &OneForm, beta: &OneForm) -> Cotensor {
        let n = self.n();
        let mut out = Cotensor::zero(&[n, n], self.order());
        for a in 0..n {
            if alpha.comps[a].is_zero() {
                continue;
            }
            for b in 0..n {
                out.comps[a * n + b] = &alpha.comps[a] * &self.push_right_at(a, &beta.comps[b]);
            }
        }
        out
    }

    /// `∧ : Ω¹⊗Ω¹ → Ω²`.
    pub fn project(&self, t: &Cotensor) -> TwoForm {
        let w = self.omega2.wedge_matrix();
        let mut out = self.zero_two_form();
        for (j, f) in t.comps.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for k in 0..w.rows() {
                let c = &w[(k, j)];
                if !c.is_zero() {
                    out.comps[k] += &f.scale(c);
                }
            }
        }
        out
    }

    pub fn wedge(&self, alpha: &OneForm, beta: &OneForm) -> TwoForm {
        self.project(&self.tensor(alpha, beta))
    }

    /// `dE_a = Σ_b (E_a⊗E_b + E_b⊗E_a)` before projection, for position `a`.
    pub fn d_basis_tensor(&self, a: usize) -> Cotensor {
        let n = self.n();
        let mut out = Cotensor::zero(&[n, n], self.order());
        let one = GroupFunction::one(self.order());
        for b in 0..n {
            out.comps[a * n + b] += &one;
            out.comps[b * n + a] += &one;
        }
        out
    }

    /// `dE_a` in `Ω²`.
    pub fn d_basis(&self, a: usize) -> TwoForm {
        self.project(&self.d_basis_tensor(a))
    }

    /// A representative of `dα` in `Ω¹⊗Ω¹` (projects to `dα`).
    pub fn d_one_form_tensor(&self, alpha: &OneForm) -> Cotensor {
        let n = self.n();
        let mut out = Cotensor::zero(&[n, n], self.order());
        for a in 0..n {
            let coeff = &alpha.comps[a];
            if coeff.is_zero() {
                continue;
            }
            // (dα^a)∧E_a
            for c in 0..n {
                out.comps[c * n + a] += &self.partial_at(c, coeff);
            }
            // α^a dE_a
            for b in 0..n {
                out.comps[a * n + b] += coeff;
                out.comps[b * n + a] += coeff;
            }
        }
        out
    }

    /// `d(α^a E_a) = dα^a ∧ E_a + α^a dE_a`.
    pub fn d_one_form(&self, alpha: &OneForm) -> TwoForm {
        self.project(&self.d_one_form_tensor(alpha))
    }
}
