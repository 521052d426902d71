//! Assembly of the Dirac operator on `W`-valued functions.

use num_traits::Zero;

use crate::calculus::Calculus;
use crate::group::Representation;
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::riemannian::Connection;

use super::gamma::{tau, GammaFamily};

/// Square matrix of size `|G|·dim W`, function index outer and spinor index
/// inner: row `x·dim W + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracOperator {
    pub matrix: Matrix,
    pub order: usize,
    pub dim_w: usize,
}

impl DiracOperator {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// The `dim W × dim W` block coupling `ψ(y)` into `(D̸ψ)(x)`.
    pub fn block(&self, x: usize, y: usize) -> Matrix {
        let d = self.dim_w;
        Matrix::from_fn(d, d, |i, j| self.matrix[(x * d + i, y * d + j)].clone())
    }
}

/// `∂^a = R_a − id` as a `|G|×|G|` matrix on the delta basis:
/// `(∂^a ψ)(x) = ψ(xa) − ψ(x)`.
pub fn partial_matrix(calc: &Calculus, a: usize) -> Matrix {
    let order = calc.order();
    let g = calc.group();
    let elem = calc.set().element(a);
    let mut m = Matrix::zeros(order, order);
    for x in 0..order {
        m[(x, g.mul(x, elem))] += Rational::from_integer(1.into());
        m[(x, x)] -= Rational::from_integer(1.into());
    }
    m
}

/// `D̸ = ∂^a γ_a − A_b^a γ_a τ^b` with `τ^b = ρ(b⁻¹) − 1`.
pub fn dirac_matrix(
    calc: &Calculus,
    conn: &Connection,
    gammas: &GammaFamily,
    rho: &Representation,
) -> DiracOperator {
    let taus = tau(rho, calc.set());
    dirac_from_parts(calc, conn, gammas, &taus)
}

/// Same assembly with explicit `τ^b` matrices.
pub fn dirac_from_parts(
    calc: &Calculus,
    conn: &Connection,
    gammas: &GammaFamily,
    taus: &[Matrix],
) -> DiracOperator {
    let n = calc.n();
    let order = calc.order();
    let d = gammas.dim();
    let mut m = Matrix::zeros(order * d, order * d);
    for a in 0..n {
        let p = partial_matrix(calc, a);
        m = &m + &p.kron(&gammas.gammas[a]);
    }
    let products: Vec<Vec<Matrix>> = (0..n)
        .map(|a| (0..n).map(|b| &gammas.gammas[a] * &taus[b]).collect())
        .collect();
    for x in 0..order {
        for a in 0..n {
            for b in 0..n {
                let coeff = conn.comp(b, a).at(x);
                if coeff.is_zero() {
                    continue;
                }
                let prod = &products[a][b];
                for i in 0..d {
                    for j in 0..d {
                        let v = coeff * &prod[(i, j)];
                        m[(x * d + i, x * d + j)] -= v;
                    }
                }
            }
        }
    }
    DiracOperator {
        matrix: m,
        order,
        dim_w: d,
    }
}

/// `Tr(D̸²)`.
pub fn action_trace_d2(d: &DiracOperator) -> Rational {
    let m = &d.matrix;
    let n = m.rows();
    let mut t = Rational::zero();
    for i in 0..n {
        for k in 0..n {
            let a = &m[(i, k)];
            if !a.is_zero() {
                t += a * &m[(k, i)];
            }
        }
    }
    t
}
