//! Affine solution sets of the linear torsion and cotorsion conditions.
//!
//! Unknowns are the values `A_a^b(x)`, ordered `(a, b, x)` lexicographically
//! over positions in `C` and group elements.

use num_traits::Zero;

use crate::calculus::Calculus;
use crate::linalg::Matrix;
use crate::rational::Rational;

use super::connection::Connection;
use super::metric::Coframing;

/// `{x : M x = rhs}` with an explicit parametrization `base + span(basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineModuli {
    ambient_dim: usize,
    base: Option<Vec<Rational>>,
    basis: Vec<Vec<Rational>>,
    equations: Matrix,
    rhs: Vec<Rational>,
}

impl AffineModuli {
    /// Solves `equations · x = rhs` exactly.
    pub fn from_equations(equations: Matrix, rhs: Vec<Rational>) -> Self {
        let ambient_dim = equations.cols();
        let (base, basis) = match equations.solve_affine(&rhs) {
            Some((p, k)) => (Some(p), k),
            None => (None, Vec::new()),
        };
        Self {
            ambient_dim,
            base,
            basis,
            equations,
            rhs,
        }
    }

    /// The affine span `base + span(basis)`; its defining equations are the
    /// annihilator of `basis`.
    pub fn from_parametrization(base: Vec<Rational>, basis: Vec<Vec<Rational>>) -> Self {
        let dim = base.len();
        let annihilator = if basis.is_empty() {
            Matrix::identity(dim).to_rows()
        } else {
            Matrix::from_rows(basis, dim).nullspace()
        };
        let equations = Matrix::from_rows(annihilator, dim);
        let rhs = equations.mul_vec(&base);
        Self::from_equations(equations, rhs)
    }

    /// The whole ambient space.
    pub fn full(dim: usize) -> Self {
        Self::from_equations(Matrix::zeros(0, dim), Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_none()
    }

    /// Dimension, or `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        self.base.as_ref().map(|_| self.basis.len())
    }

    pub fn base(&self) -> Option<&[Rational]> {
        self.base.as_deref()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn equations(&self) -> (&Matrix, &[Rational]) {
        (&self.equations, &self.rhs)
    }

    /// `base + Σ t_i basis_i`.
    pub fn point(&self, params: &[Rational]) -> Option<Vec<Rational>> {
        let mut v = self.base.clone()?;
        for (t, b) in params.iter().zip(&self.basis) {
            if t.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += t * bi;
            }
        }
        Some(v)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        !self.is_empty() && self.equations.mul_vec(v) == self.rhs
    }

    pub fn intersect(&self, other: &AffineModuli) -> AffineModuli {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let equations = self.equations.vstack(&other.equations);
        let mut rhs = self.rhs.clone();
        rhs.extend(other.rhs.iter().cloned());
        Self::from_equations(equations, rhs)
    }
}

fn unknown(calc: &Calculus, a: usize, b: usize, x: usize) -> usize {
    (a * calc.n() + b) * calc.order() + x
}

fn row(calc: &Calculus, a: usize, k: usize, x: usize) -> usize {
    (a * calc.omega2().dim() + k) * calc.order() + x
}

/// Linear system for `T_a = 0` for all `a`. Rows are `(a, k, x)`: the
/// coefficient of basis 2-form `k` at point `x`.
pub fn torsion_system(calc: &Calculus) -> (Matrix, Vec<Rational>) {
    let n = calc.n();
    let order = calc.order();
    let dim2 = calc.omega2().dim();
    let w = calc.omega2().wedge_matrix();
    let set = calc.set();
    let mut m = Matrix::zeros(n * dim2 * order, n * n * order);
    let mut rhs = vec![Rational::zero(); n * dim2 * order];
    let zero = Connection::zero(calc);
    for a in 0..n {
        let constant = calc.project(&super::connection::torsion_tensor(calc, &zero, a));
        for b in 0..n {
            let moved = set.conj_inv(b, a);
            if moved == a {
                continue;
            }
            for c in 0..n {
                for k in 0..dim2 {
                    let coeff = &w[(k, c * n + moved)] - &w[(k, c * n + a)];
                    if coeff.is_zero() {
                        continue;
                    }
                    for x in 0..order {
                        m[(row(calc, a, k, x), unknown(calc, b, c, x))] += &coeff;
                    }
                }
            }
        }
        for k in 0..dim2 {
            for x in 0..order {
                rhs[row(calc, a, k, x)] = -constant.comps[k].at(x).clone();
            }
        }
    }
    (m, rhs)
}

/// Linear system for vanishing cotorsion with respect to `cof`.
pub fn cotorsion_system(calc: &Calculus, cof: &Coframing) -> (Matrix, Vec<Rational>) {
    let n = calc.n();
    let order = calc.order();
    let dim2 = calc.omega2().dim();
    let w = calc.omega2().wedge_matrix();
    let set = calc.set();
    let group = calc.group();
    let coframe: Vec<_> = (0..n).map(|a| cof.coframe(calc, a)).collect();
    let mut m = Matrix::zeros(n * dim2 * order, n * n * order);
    let mut rhs = vec![Rational::zero(); n * dim2 * order];
    for a in 0..n {
        let constant = calc.d_one_form(&coframe[a]);
        for c in 0..n {
            let moved = set.conj_by(c, a);
            if moved == a {
                continue;
            }
            let diff = &coframe[moved] - &coframe[a];
            // (s_d E_d) ∧ (A_c^e E_e) = s_d R_d(A_c^e) E_d∧E_e
            for d in 0..n {
                let s = &diff.comps[d];
                if s.is_zero() {
                    continue;
                }
                for e in 0..n {
                    for k in 0..dim2 {
                        let wk = &w[(k, d * n + e)];
                        if wk.is_zero() {
                            continue;
                        }
                        for x in 0..order {
                            let sx = s.at(x);
                            if sx.is_zero() {
                                continue;
                            }
                            let y = group.mul(x, set.element(d));
                            m[(row(calc, a, k, x), unknown(calc, c, e, y))] += sx * wk;
                        }
                    }
                }
            }
        }
        for k in 0..dim2 {
            for x in 0..order {
                rhs[row(calc, a, k, x)] = -constant.comps[k].at(x).clone();
            }
        }
    }
    (m, rhs)
}

pub fn solve_torsion_free(calc: &Calculus) -> AffineModuli {
    let (m, rhs) = torsion_system(calc);
    AffineModuli::from_equations(m, rhs)
}

pub fn solve_cotorsion_free(calc: &Calculus, cof: &Coframing) -> AffineModuli {
    let (m, rhs) = cotorsion_system(calc, cof);
    AffineModuli::from_equations(m, rhs)
}

pub fn intersect_moduli(m1: &AffineModuli, m2: &AffineModuli) -> AffineModuli {
    m1.intersect(m2)
}
