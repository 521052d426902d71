//! Regularity, curvature, Riemann and Ricci tensors of a spin connection.

use num_traits::Zero;

use crate::calculus::{Calculus, Cotensor, GroupFunction, OneForm, TwoForm};

use super::connection::Connection;
use super::lift::Lift;
use super::metric::pointwise_inverse;

/// Group elements `q ∈ C·C` with `q ∉ C ∪ {e}`, ascending.
pub fn irregular_labels(calc: &Calculus) -> Vec<usize> {
    let set = calc.set();
    let mut qs: Vec<usize> = calc
        .omega2()
        .invariant_subspaces()
        .iter()
        .map(|s| s.g)
        .filter(|&q| q != 0 && !set.contains(q))
        .collect();
    qs.sort_unstable();
    qs
}

/// `Σ_{ab=q} X_a ∧ Y_b` for each `q` in `labels`.
pub fn product_sums(calc: &Calculus, x: &Connection, y: &Connection, labels: &[usize]) -> Vec<TwoForm> {
    let n = calc.n();
    let set = calc.set();
    let mut out = vec![calc.zero_two_form(); labels.len()];
    for a in 0..n {
        for b in 0..n {
            let q = set.product(a, b);
            if let Some(i) = labels.iter().position(|&l| l == q) {
                out[i] = &out[i] + &calc.wedge(&x.form(a), &y.form(b));
            }
        }
    }
    out
}

/// Residuals `Σ_{ab=q} A_a ∧ A_b` for `q ∉ C ∪ {e}`, paired with `q`.
pub fn regularity_residual(calc: &Calculus, conn: &Connection) -> Vec<(usize, TwoForm)> {
    let labels = irregular_labels(calc);
    let sums = product_sums(calc, conn, conn, &labels);
    labels.into_iter().zip(sums).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvature {
    /// `F_a` for each position `a` in `C`.
    pub forms: Vec<TwoForm>,
    /// Regularity residuals; all zero when the connection is regular.
    pub residuals: Vec<(usize, TwoForm)>,
    pub is_regular: bool,
}

impl Curvature {
    pub fn is_flat(&self) -> bool {
        self.forms.iter().all(TwoForm::is_zero)
    }
}

/// `F_a = dA_a + Σ_{cd=a} A_c ∧ A_d − Σ_b (A_b ∧ A_a + A_a ∧ A_b)`.
/// Computed for non-regular connections too, with `is_regular` unset.
pub fn curvature(calc: &Calculus, conn: &Connection) -> Curvature {
    let n = calc.n();
    let set = calc.set();
    let labels: Vec<usize> = set.members().to_vec();
    let quadratic = product_sums(calc, conn, conn, &labels);
    let forms = (0..n)
        .map(|a| {
            let aa = conn.form(a);
            let mut f = &calc.d_one_form(&aa) + &quadratic[a];
            for b in 0..n {
                let ab = conn.form(b);
                f = &f - &(&calc.wedge(&ab, &aa) + &calc.wedge(&aa, &ab));
            }
            f
        })
        .collect();
    let residuals = regularity_residual(calc, conn);
    let is_regular = residuals.iter().all(|(_, r)| r.is_zero());
    Curvature {
        forms,
        residuals,
        is_regular,
    }
}

/// `Rα = α^a Σ_b F_b ⊗ (E_{b⁻¹ab} − E_a)` in `Ω²⊗Ω¹`.
pub fn riemann(calc: &Calculus, forms: &[TwoForm], alpha: &OneForm) -> Cotensor {
    let n = calc.n();
    let set = calc.set();
    let dim2 = calc.omega2().dim();
    let mut out = Cotensor::zero(&[dim2, n], calc.order());
    for a in 0..n {
        let coeff = &alpha.comps[a];
        if coeff.is_zero() {
            continue;
        }
        for (b, fb) in forms.iter().enumerate() {
            let moved = set.conj_inv(b, a);
            if moved == a {
                continue;
            }
            for k in 0..dim2 {
                let t = coeff * &fb.comps[k];
                *out.get_mut(&[k, moved]) += &t;
                *out.get_mut(&[k, a]) -= &t;
            }
        }
    }
    out
}

/// `Ricci = Σ_{a,b,c} i(F_c)^{ab} E_b ⊗ (E_{c⁻¹ac} − E_a)`: the lifted
/// Riemann tensor traced over its input and first output.
pub fn ricci(calc: &Calculus, forms: &[TwoForm], lift: &Lift) -> Cotensor {
    let n = calc.n();
    let set = calc.set();
    let mut out = Cotensor::zero(&[n, n], calc.order());
    for (c, fc) in forms.iter().enumerate() {
        let lifted = lift.apply(fc);
        for a in 0..n {
            let moved = set.conj_inv(c, a);
            if moved == a {
                continue;
            }
            for b in 0..n {
                let t = &lifted.comps[a * n + b];
                if t.is_zero() {
                    continue;
                }
                out.comps[b * n + moved] += t;
                out.comps[b * n + a] -= t;
            }
        }
    }
    out
}

/// `Σ_{ab} Ricci^{ab} (G⁻¹)_{ba}` pointwise, with `G` the left-coefficient
/// matrix of the metric cotensor. `None` if the metric is degenerate.
pub fn scalar_curvature(ricci: &Cotensor, metric: &Cotensor) -> Option<GroupFunction> {
    let n = ricci.dims[0];
    let inverses = pointwise_inverse(metric)?;
    let order = inverses.len();
    Some(GroupFunction::from_fn(order, |x| {
        let mut s = crate::rational::zero();
        for a in 0..n {
            for b in 0..n {
                let r = ricci.comps[a * n + b].at(x);
                if !r.is_zero() {
                    s += r * &inverses[x][(b, a)];
                }
            }
        }
        s
    }))
}
