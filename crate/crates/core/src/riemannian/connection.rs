//! Spin connections `A_a = A_a^b E_b`, the covariant derivative they induce
//! on 1-forms, and their torsion and cotorsion.

use num_traits::Zero;

use crate::calculus::{Calculus, Cotensor, GroupFunction, OneForm, TwoForm};
use crate::linalg::Matrix;
use crate::rational::Rational;

use super::metric::Coframing;

/// Component functions `A_a^b`, stored row-major over positions in `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    n: usize,
    comps: Vec<GroupFunction>,
}

impl Connection {
    pub fn new(n: usize, comps: Vec<GroupFunction>) -> Self {
        assert_eq!(comps.len(), n * n);
        Self { n, comps }
    }

    pub fn zero(calc: &Calculus) -> Self {
        let n = calc.n();
        Self::new(n, vec![GroupFunction::zero(calc.order()); n * n])
    }

    /// Constant components `A_a^b = m[a][b]`.
    pub fn constant(calc: &Calculus, m: &Matrix) -> Self {
        let n = calc.n();
        Self::new(
            n,
            (0..n * n)
                .map(|k| GroupFunction::constant(calc.order(), m[(k / n, k % n)].clone()))
                .collect(),
        )
    }

    /// `A_a = E_a`.
    pub fn maurer_cartan(calc: &Calculus) -> Self {
        Self::constant(calc, &Matrix::identity(calc.n()))
    }

    /// Unknown vector ordered `(a, b, x)`.
    pub fn from_vector(calc: &Calculus, v: &[Rational]) -> Self {
        let (n, order) = (calc.n(), calc.order());
        assert_eq!(v.len(), n * n * order);
        Self::new(
            n,
            v.chunks(order)
                .map(|c| GroupFunction::new(c.to_vec()))
                .collect(),
        )
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        self.comps.iter().flat_map(|f| f.values().iter().cloned()).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `A_a^b`.
    pub fn comp(&self, a: usize, b: usize) -> &GroupFunction {
        &self.comps[a * self.n + b]
    }

    pub fn comps(&self) -> &[GroupFunction] {
        &self.comps
    }

    /// The 1-form `A_a`.
    pub fn form(&self, a: usize) -> OneForm {
        OneForm {
            comps: self.comps[a * self.n..(a + 1) * self.n].to_vec(),
        }
    }

    /// Constant matrix of components, if every component is constant.
    pub fn constant_matrix(&self) -> Option<Matrix> {
        if !self.comps.iter().all(GroupFunction::is_constant) {
            return None;
        }
        Some(Matrix::from_fn(self.n, self.n, |a, b| {
            self.comp(a, b).values().first().cloned().unwrap_or_else(Rational::zero)
        }))
    }
}

/// `∇α = dα^a ⊗ E_a − α^a Σ_b A_b ⊗ (E_{b⁻¹ab} − E_a)`.
pub fn covariant_derivative(calc: &Calculus, conn: &Connection, alpha: &OneForm) -> Cotensor {
    let n = calc.n();
    let set = calc.set();
    let mut out = Cotensor::zero(&[n, n], calc.order());
    for a in 0..n {
        let coeff = &alpha.comps[a];
        if coeff.is_zero() {
            continue;
        }
        for c in 0..n {
            out.comps[c * n + a] += &calc.partial_at(c, coeff);
        }
        for b in 0..n {
            let moved = set.conj_inv(b, a);
            if moved == a {
                continue;
            }
            for c in 0..n {
                let t = coeff * conn.comp(b, c);
                out.comps[c * n + moved] -= &t;
                out.comps[c * n + a] += &t;
            }
        }
    }
    out
}

/// Representative in `Ω¹⊗Ω¹` of the torsion
/// `T_a = dE_a + Σ_b A_b ∧ (E_{b⁻¹ab} − E_a)`.
pub fn torsion_tensor(calc: &Calculus, conn: &Connection, a: usize) -> Cotensor {
    let n = calc.n();
    let set = calc.set();
    let mut out = calc.d_basis_tensor(a);
    for b in 0..n {
        let moved = set.conj_inv(b, a);
        if moved == a {
            continue;
        }
        for c in 0..n {
            let f = conn.comp(b, c);
            out.comps[c * n + moved] += f;
            out.comps[c * n + a] -= f;
        }
    }
    out
}

pub fn torsion(calc: &Calculus, conn: &Connection) -> Vec<TwoForm> {
    (0..calc.n())
        .map(|a| calc.project(&torsion_tensor(calc, conn, a)))
        .collect()
}

/// `D_A E*^a = dE*^a + Σ_c (E*^{cac⁻¹} − E*^a) ∧ A_c`.
pub fn cotorsion(calc: &Calculus, conn: &Connection, cof: &Coframing) -> Vec<TwoForm> {
    let n = calc.n();
    let set = calc.set();
    let coframe: Vec<OneForm> = (0..n).map(|a| cof.coframe(calc, a)).collect();
    (0..n)
        .map(|a| {
            let mut out = calc.d_one_form(&coframe[a]);
            for c in 0..n {
                let moved = set.conj_by(c, a);
                if moved == a {
                    continue;
                }
                let diff = &coframe[moved] - &coframe[a];
                out = &out + &calc.wedge(&diff, &conn.form(c));
            }
            out
        })
        .collect()
}

/// `∧∇α`, which equals `dα` minus the torsion term when `A` is torsion free.
pub fn wedge_nabla(calc: &Calculus, conn: &Connection, alpha: &OneForm) -> TwoForm {
    calc.project(&covariant_derivative(calc, conn, alpha))
}

/// `X ⊗ E_a ⊗ Y` from `E_a ⊗ (X ⊗ Y)`: moves the left output of `∇` past a
/// basis form, translating its coefficient by `R_a`.
fn insert_after_first(calc: &Calculus, a: usize, t: &Cotensor, out: &mut Cotensor, coeff: &GroupFunction) {
    let n = calc.n();
    for x in 0..n {
        for y in 0..n {
            let f = &t.comps[x * n + y];
            if f.is_zero() {
                continue;
            }
            let v = coeff * &calc.push_right_at(a, f);
            *out.get_mut(&[x, a, y]) += &v;
        }
    }
}

/// `∇` on a cotensor `t = t^{ab} E_a ⊗ E_b` as a derivation, keeping the
/// left output of `∇` to the far left:
/// `∇(t) = dt^{ab} ⊗ E_a ⊗ E_b + t^{ab} (∇E_a ⊗ E_b + σ(E_a ⊗ ∇E_b))`.
pub fn nabla_on_metric(calc: &Calculus, conn: &Connection, t: &Cotensor) -> Cotensor {
    let n = calc.n();
    let order = calc.order();
    let nabla_e: Vec<Cotensor> = (0..n)
        .map(|a| covariant_derivative(calc, conn, &calc.basis_form(a)))
        .collect();
    let mut out = Cotensor::zero(&[n, n, n], order);
    for a in 0..n {
        for b in 0..n {
            let coeff = &t.comps[a * n + b];
            if coeff.is_zero() {
                continue;
            }
            for c in 0..n {
                *out.get_mut(&[c, a, b]) += &calc.partial_at(c, coeff);
            }
            for x in 0..n {
                for y in 0..n {
                    let f = &nabla_e[a].comps[x * n + y];
                    if !f.is_zero() {
                        // ∇E_a ⊗ E_b: E_y ⊗ E_b carries no translation
                        *out.get_mut(&[x, y, b]) += &(coeff * f);
                    }
                }
            }
            insert_after_first(calc, a, &nabla_e[b], &mut out, coeff);
        }
    }
    out
}

/// `(∇∧id − id∧∇)(t)` in `Ω²⊗Ω¹`, dims `[dim Ω², n]`.
pub fn skew_compatibility(calc: &Calculus, conn: &Connection, t: &Cotensor) -> Cotensor {
    let n = calc.n();
    let order = calc.order();
    let w = calc.omega2().wedge_matrix();
    let dim2 = calc.omega2().dim();
    let mut out = Cotensor::zero(&[dim2, n], order);
    let mut add_wedged = |first: usize, second: usize, last: usize, f: &GroupFunction, sign: i64| {
        for k in 0..dim2 {
            let c = &w[(k, first * n + second)];
            if !c.is_zero() {
                let s = c * Rational::from_integer(sign.into());
                *out.get_mut(&[k, last]) += &f.scale(&s);
            }
        }
    };
    for a in 0..n {
        for b in 0..n {
            let coeff = &t.comps[a * n + b];
            if coeff.is_zero() {
                continue;
            }
            let alpha = OneForm {
                comps: (0..n)
                    .map(|k| if k == a { coeff.clone() } else { GroupFunction::zero(order) })
                    .collect(),
            };
            let nab = covariant_derivative(calc, conn, &alpha);
            for x in 0..n {
                for y in 0..n {
                    let f = &nab.comps[x * n + y];
                    if !f.is_zero() {
                        add_wedged(x, y, b, f, 1);
                    }
                }
            }
            let nab_b = covariant_derivative(calc, conn, &calc.basis_form(b));
            for x in 0..n {
                for y in 0..n {
                    let f = &nab_b.comps[x * n + y];
                    if !f.is_zero() {
                        let v = coeff * &calc.push_right_at(a, f);
                        add_wedged(a, x, y, &v, -1);
                    }
                }
            }
        }
    }
    out
}
