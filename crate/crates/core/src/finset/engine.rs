//! Index-explicit differential geometry over a parallelized finite set.
//!
//! A connection is a list of edge 1-forms `A_i`, one per fiber label `i`,
//! acting through matrices `τ^i` with entries `τ^i[(b, a)] = τ^{i b}_a`.

use num_traits::{One, Zero};

use crate::group::GroupTable;
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::riemannian::AffineModuli;

use super::structure::{EdgeCalculus, VBein, WedgeFamily};
use super::tensor::{EdgeForm, PairForm, PathTensor};
use super::FinsetError;

/// `(df)_{x,y} = f(y) − f(x)`.
pub fn d_function(calc: &EdgeCalculus, f: &[Rational]) -> EdgeForm {
    EdgeForm {
        values: calc.edges().iter().map(|&(x, y)| &f[y] - &f[x]).collect(),
    }
}

/// V-bein components `α^a_x = Σ_y α_{x,y} E⁻¹_a^{x,y}`, indexed `[x][a]`.
pub fn components(calc: &EdgeCalculus, vbein: &VBein, alpha: &EdgeForm) -> Vec<Vec<Rational>> {
    (0..calc.points())
        .map(|x| {
            (0..vbein.dim())
                .map(|a| {
                    calc.fiber(x).iter().fold(Rational::zero(), |acc, &y| {
                        acc + alpha.get(calc, x, y) * vbein.e_inv(calc, a, x, y)
                    })
                })
                .collect()
        })
        .collect()
}

/// `α_{x,y} = α^a_x E_{a,x,y}`.
pub fn from_components(calc: &EdgeCalculus, vbein: &VBein, comps: &[Vec<Rational>]) -> EdgeForm {
    EdgeForm {
        values: calc
            .edges()
            .iter()
            .map(|&(x, y)| {
                (0..vbein.dim()).fold(Rational::zero(), |acc, a| {
                    acc + &comps[x][a] * vbein.e(calc, a, x, y)
                })
            })
            .collect(),
    }
}

/// The frame 1-form `E_a`.
pub fn frame_form(calc: &EdgeCalculus, vbein: &VBein, a: usize) -> EdgeForm {
    EdgeForm {
        values: calc.edges().iter().map(|&(x, y)| vbein.e(calc, a, x, y)).collect(),
    }
}

/// `(α⊗β)_{x,y,z} = α_{x,y} β_{y,z}`.
pub fn tensor(calc: &EdgeCalculus, alpha: &EdgeForm, beta: &EdgeForm) -> PathTensor {
    PathTensor {
        blocks: calc
            .pairs()
            .iter()
            .enumerate()
            .map(|(k, &(x, z))| {
                calc.middles(k)
                    .iter()
                    .map(|&y| alpha.get(calc, x, y) * beta.get(calc, y, z))
                    .collect()
            })
            .collect(),
    }
}

/// `∧ : t ↦ Σ_y t_{x,y,z} p_{x,z}^y_α`.
pub fn project(wf: &WedgeFamily, t: &PathTensor) -> PairForm {
    PairForm {
        blocks: wf.p.iter().zip(&t.blocks).map(|(p, b)| p.mul_vec(b)).collect(),
    }
}

pub fn wedge(calc: &EdgeCalculus, wf: &WedgeFamily, alpha: &EdgeForm, beta: &EdgeForm) -> PairForm {
    project(wf, &tensor(calc, alpha, beta))
}

/// `(dα)_{x,α,z} = Σ_{y∈F_{x,z}} (α_{x,y} + α_{y,z} − α_{x,z}) p_{x,z}^y_α`.
pub fn d_one_form(calc: &EdgeCalculus, wf: &WedgeFamily, alpha: &EdgeForm) -> PairForm {
    let t = PathTensor {
        blocks: calc
            .pairs()
            .iter()
            .enumerate()
            .map(|(k, &(x, z))| {
                let direct = alpha.get(calc, x, z);
                calc.middles(k)
                    .iter()
                    .map(|&y| alpha.get(calc, x, y) + alpha.get(calc, y, z) - &direct)
                    .collect()
            })
            .collect(),
    };
    project(wf, &t)
}

/// `∂^a f(x) = Σ_y (f(y) − f(x)) E⁻¹_a^{x,y}`.
pub fn partial(calc: &EdgeCalculus, vbein: &VBein, a: usize, f: &[Rational]) -> Vec<Rational> {
    components(calc, vbein, &d_function(calc, f))
        .into_iter()
        .map(|mut c| c.swap_remove(a))
        .collect()
}

/// `ρ_a^b(f)(x) = Σ_{y∈F_x} E⁻¹_b^{x,y} f(y) E_{a,x,y}`, so that
/// `E_a f = ρ_a^b(f) E_b`.
pub fn rho(calc: &EdgeCalculus, vbein: &VBein, a: usize, b: usize, f: &[Rational]) -> Vec<Rational> {
    (0..calc.points())
        .map(|x| {
            calc.fiber(x).iter().fold(Rational::zero(), |acc, &y| {
                acc + vbein.e_inv(calc, b, x, y) * &f[y] * vbein.e(calc, a, x, y)
            })
        })
        .collect()
}

/// Components `θ^a(x) = Σ_y E⁻¹_a^{x,y}` of `θ = Σ e_{x,y}`, indexed `[x][a]`.
pub fn theta_components(calc: &EdgeCalculus, vbein: &VBein) -> Vec<Vec<Rational>> {
    let theta = EdgeForm {
        values: vec![Rational::one(); calc.edges().len()],
    };
    components(calc, vbein, &theta)
}

/// `(∇α)_{x,y,z} = (α^a_y − α^a_x) E_{a,y,z} − α^a_x A_{i,x,y} E_{b,y,z} τ^{i b}_a`.
pub fn nabla_tensor(
    calc: &EdgeCalculus,
    vbein: &VBein,
    conn: &[EdgeForm],
    tau: &[Matrix],
    alpha: &EdgeForm,
) -> PathTensor {
    let n = vbein.dim();
    let comps = components(calc, vbein, alpha);
    // c[x][i][b] = Σ_a α^a_x τ^{i b}_a
    let twisted: Vec<Vec<Vec<Rational>>> = comps
        .iter()
        .map(|ax| tau.iter().map(|t| t.mul_vec(ax)).collect())
        .collect();
    PathTensor {
        blocks: calc
            .pairs()
            .iter()
            .enumerate()
            .map(|(k, &(x, z))| {
                calc.middles(k)
                    .iter()
                    .map(|&y| {
                        let mut v = Rational::zero();
                        for a in 0..n {
                            let e = vbein.e(calc, a, y, z);
                            if !e.is_zero() {
                                v += (&comps[y][a] - &comps[x][a]) * e;
                            }
                        }
                        for (i, ai) in conn.iter().enumerate() {
                            let axy = ai.get(calc, x, y);
                            if axy.is_zero() {
                                continue;
                            }
                            for b in 0..n {
                                let c = &twisted[x][i][b];
                                if !c.is_zero() {
                                    v -= c * &axy * vbein.e(calc, b, y, z);
                                }
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect(),
    }
}

/// `Σ_{i,b} A_{i,x,y} E_{b,y,z} τ^{i b}_a` on paths.
fn torsion_correction(
    calc: &EdgeCalculus,
    vbein: &VBein,
    conn: &[EdgeForm],
    tau: &[Matrix],
    a: usize,
) -> PathTensor {
    let n = vbein.dim();
    PathTensor {
        blocks: calc
            .pairs()
            .iter()
            .enumerate()
            .map(|(k, &(x, z))| {
                calc.middles(k)
                    .iter()
                    .map(|&y| {
                        let mut v = Rational::zero();
                        for (i, ai) in conn.iter().enumerate() {
                            let axy = ai.get(calc, x, y);
                            if axy.is_zero() {
                                continue;
                            }
                            for b in 0..n {
                                let t = &tau[i][(b, a)];
                                if !t.is_zero() {
                                    v += &axy * vbein.e(calc, b, y, z) * t;
                                }
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Torsion `(dE_a)_{x,α,z} + Σ A_{i,x,y} E_{b,y,z} p τ^{i b}_a` for each `a`.
pub fn torsion_tensor(
    calc: &EdgeCalculus,
    vbein: &VBein,
    wf: &WedgeFamily,
    conn: &[EdgeForm],
    tau: &[Matrix],
) -> Vec<PairForm> {
    (0..vbein.dim())
        .map(|a| {
            let de = d_one_form(calc, wf, &frame_form(calc, vbein, a));
            de.add(&project(wf, &torsion_correction(calc, vbein, conn, tau, a)))
        })
        .collect()
}

/// Coframe `E*^a_{x,y} = Σ_b E_{b,x,y} g^{ba}(y)` from the inverse metric
/// `upper[y][(b, a)]`.
pub fn coframe(calc: &EdgeCalculus, vbein: &VBein, upper: &[Matrix]) -> Vec<EdgeForm> {
    let n = vbein.dim();
    (0..n)
        .map(|a| EdgeForm {
            values: calc
                .edges()
                .iter()
                .map(|&(x, y)| {
                    (0..n).fold(Rational::zero(), |acc, b| {
                        acc + vbein.e(calc, b, x, y) * &upper[y][(b, a)]
                    })
                })
                .collect(),
        })
        .collect()
}

/// Cotorsion `(dE*^a)_{x,α,z} + Σ E*^b_{x,y} A_{i,y,z} p τ^{i a}_b`.
pub fn cotorsion_tensor(
    calc: &EdgeCalculus,
    wf: &WedgeFamily,
    conn: &[EdgeForm],
    tau: &[Matrix],
    coframe: &[EdgeForm],
) -> Vec<PairForm> {
    let n = coframe.len();
    (0..n)
        .map(|a| {
            let mut out = d_one_form(calc, wf, &coframe[a]);
            for (i, ai) in conn.iter().enumerate() {
                for b in 0..n {
                    let t = &tau[i][(a, b)];
                    if t.is_zero() {
                        continue;
                    }
                    let w = wedge(calc, wf, &coframe[b], ai);
                    for (ob, wb) in out.blocks.iter_mut().zip(&w.blocks) {
                        for (o, v) in ob.iter_mut().zip(wb) {
                            *o += v * t;
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// Curvature of a connection whose fiber labels are group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinsetCurvature {
    pub forms: Vec<PairForm>,
    /// `Σ_{jk=q} A_j ∧ A_k` for products `q` outside the labels and `e`.
    pub residuals: Vec<(usize, PairForm)>,
    pub is_regular: bool,
}

/// `F_i = dA_i + Σ_{jk=i} A_j∧A_k − Σ_j (A_j∧A_i + A_i∧A_j)` with labels
/// `labels[i] ∈ group`, plus the regularity residuals.
pub fn curvature_tensor(
    calc: &EdgeCalculus,
    wf: &WedgeFamily,
    conn: &[EdgeForm],
    group: &GroupTable,
    labels: &[usize],
) -> FinsetCurvature {
    let m = conn.len();
    let products: Vec<Vec<PairForm>> = (0..m)
        .map(|j| (0..m).map(|k| wedge(calc, wf, &conn[j], &conn[k])).collect())
        .collect();
    let forms = (0..m)
        .map(|i| {
            let mut f = d_one_form(calc, wf, &conn[i]);
            for j in 0..m {
                for k in 0..m {
                    if group.mul(labels[j], labels[k]) == labels[i] {
                        f = f.add(&products[j][k]);
                    }
                }
                f = f.sub(&products[j][i]).sub(&products[i][j]);
            }
            f
        })
        .collect();
    let mut qs: Vec<usize> = (0..m)
        .flat_map(|j| (0..m).map(move |k| (j, k)))
        .map(|(j, k)| group.mul(labels[j], labels[k]))
        .filter(|q| *q != group.identity() && !labels.contains(q))
        .collect();
    qs.sort_unstable();
    qs.dedup();
    let residuals: Vec<(usize, PairForm)> = qs
        .into_iter()
        .map(|q| {
            let mut r = PairForm::zero(wf);
            for j in 0..m {
                for k in 0..m {
                    if group.mul(labels[j], labels[k]) == q {
                        r = r.add(&products[j][k]);
                    }
                }
            }
            (q, r)
        })
        .collect();
    let is_regular = residuals.iter().all(|(_, r)| r.is_zero());
    FinsetCurvature {
        forms,
        residuals,
        is_regular,
    }
}

/// `i(f)_{x,y,z} = Σ_α f_{x,α,z} i_{x,z}^α_y`.
pub fn lift_apply(wf: &WedgeFamily, f: &PairForm) -> Result<PathTensor, FinsetError> {
    let lift = wf.lift.as_ref().ok_or(FinsetError::MissingLift)?;
    Ok(PathTensor {
        blocks: lift.iter().zip(&f.blocks).map(|(i, b)| i.mul_vec(b)).collect(),
    })
}

/// Components `t^{ab}_x = Σ_{y,z} t_{x,y,z} E⁻¹_a^{x,y} E⁻¹_b^{y,z}`, one
/// `dim × dim` matrix per point.
pub fn path_components(calc: &EdgeCalculus, vbein: &VBein, t: &PathTensor) -> Vec<Matrix> {
    let n = vbein.dim();
    (0..calc.points())
        .map(|x| {
            let mut m = Matrix::zeros(n, n);
            for &y in calc.fiber(x) {
                for &z in calc.fiber(y) {
                    let v = t.get(calc, x, y, z);
                    if v.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        let ea = vbein.e_inv(calc, a, x, y);
                        if ea.is_zero() {
                            continue;
                        }
                        for b in 0..n {
                            m[(a, b)] += &v * &ea * vbein.e_inv(calc, b, y, z);
                        }
                    }
                }
            }
            m
        })
        .collect()
}

/// `t_{x,y,z} = t^{ab}_x E_{a,x,y} E_{b,y,z}`.
pub fn path_from_components(calc: &EdgeCalculus, vbein: &VBein, comps: &[Matrix]) -> PathTensor {
    let n = vbein.dim();
    PathTensor {
        blocks: calc
            .pairs()
            .iter()
            .enumerate()
            .map(|(k, &(x, z))| {
                calc.middles(k)
                    .iter()
                    .map(|&y| {
                        let mut v = Rational::zero();
                        for a in 0..n {
                            let ea = vbein.e(calc, a, x, y);
                            if ea.is_zero() {
                                continue;
                            }
                            for b in 0..n {
                                v += &comps[x][(a, b)] * &ea * vbein.e(calc, b, y, z);
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect(),
    }
}

/// `Ricci_{x,y,z} = Σ i(F_i)_x^{ab} E_{b,x,y} E_{c,y,z} τ^{i c}_a`.
pub fn ricci_tensor(
    calc: &EdgeCalculus,
    vbein: &VBein,
    wf: &WedgeFamily,
    forms: &[PairForm],
    tau: &[Matrix],
) -> Result<PathTensor, FinsetError> {
    let n = vbein.dim();
    let mut comps = vec![Matrix::zeros(n, n); calc.points()];
    for (i, f) in forms.iter().enumerate() {
        let lifted = path_components(calc, vbein, &lift_apply(wf, f)?);
        for (x, l) in lifted.iter().enumerate() {
            // r^{bc} += Σ_a l^{ab} τ^{i c}_a
            let r = &l.transpose() * &tau[i].transpose();
            comps[x] = &comps[x] + &r;
        }
    }
    Ok(path_from_components(calc, vbein, &comps))
}

/// `D̸ = ∂^a γ_a − A_i^a γ_a τ^i_W` on `W`-valued functions, point index
/// outer and spinor index inner.
pub fn dirac_tensor(
    calc: &EdgeCalculus,
    vbein: &VBein,
    conn: &[EdgeForm],
    gammas: &[Matrix],
    tau_w: &[Matrix],
) -> Matrix {
    let n = vbein.dim();
    let d = gammas.first().map_or(0, Matrix::rows);
    let points = calc.points();
    let mut m = Matrix::zeros(points * d, points * d);
    let conn_comps: Vec<Vec<Vec<Rational>>> = conn.iter().map(|a| components(calc, vbein, a)).collect();
    for x in 0..points {
        for &y in calc.fiber(x) {
            for (a, g) in gammas.iter().enumerate() {
                let c = vbein.e_inv(calc, a, x, y);
                if c.is_zero() {
                    continue;
                }
                for i in 0..d {
                    for j in 0..d {
                        let v = &c * &g[(i, j)];
                        if v.is_zero() {
                            continue;
                        }
                        m[(x * d + i, y * d + j)] += &v;
                        m[(x * d + i, x * d + j)] -= v;
                    }
                }
            }
        }
        for (ci, t) in conn_comps.iter().zip(tau_w) {
            for a in 0..n {
                let coeff = &ci[x][a];
                if coeff.is_zero() {
                    continue;
                }
                let prod = &gammas[a] * t;
                for i in 0..d {
                    for j in 0..d {
                        m[(x * d + i, x * d + j)] -= coeff * &prod[(i, j)];
                    }
                }
            }
        }
    }
    m
}

/// Checks `π_{x,z}^y_w = π_{ab}^{cd} E⁻¹_a^{x,y} E⁻¹_b^{y,z} E_{c,x,w} E_{d,w,z}`
/// for the projectors `i∘p` of `wf` against a constant `π` acting on
/// `V⊗V` (entry `(c·n + d, a·n + b)`).
pub fn verify_projector(
    calc: &EdgeCalculus,
    vbein: &VBein,
    wf: &WedgeFamily,
    pi: &Matrix,
) -> Result<bool, FinsetError> {
    let projectors = wf.projectors().ok_or(FinsetError::MissingLift)?;
    let n = vbein.dim();
    for (k, &(x, z)) in calc.pairs().iter().enumerate() {
        let ys = calc.middles(k);
        for (py, &y) in ys.iter().enumerate() {
            for (pw, &w) in ys.iter().enumerate() {
                let mut v = Rational::zero();
                for a in 0..n {
                    let ea = vbein.e_inv(calc, a, x, y);
                    if ea.is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        let eb = vbein.e_inv(calc, b, y, z);
                        if eb.is_zero() {
                            continue;
                        }
                        for c in 0..n {
                            let ec = vbein.e(calc, c, x, w);
                            if ec.is_zero() {
                                continue;
                            }
                            for d in 0..n {
                                let p = &pi[(c * n + d, a * n + b)];
                                if !p.is_zero() {
                                    v += p * &ea * &eb * &ec * vbein.e(calc, d, w, z);
                                }
                            }
                        }
                    }
                }
                if v != projectors[k][(pw, py)] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Connection unknowns are `A_{i,x,y}`, ordered `(i, edge)`.
pub fn connection_from_vector(calc: &EdgeCalculus, labels: usize, v: &[Rational]) -> Vec<EdgeForm> {
    let e = calc.edges().len();
    (0..labels)
        .map(|i| EdgeForm {
            values: v[i * e..(i + 1) * e].to_vec(),
        })
        .collect()
}

fn affine_solve(
    calc: &EdgeCalculus,
    labels: usize,
    residual: impl Fn(&[EdgeForm]) -> Vec<PairForm>,
) -> AffineModuli {
    let e = calc.edges().len();
    let unknowns = labels * e;
    let flatten = |forms: Vec<PairForm>| -> Vec<Rational> {
        forms.into_iter().flat_map(|f| f.blocks.into_iter().flatten()).collect()
    };
    let zero_conn = vec![EdgeForm::zero(calc); labels];
    let base = flatten(residual(&zero_conn));
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut conn = zero_conn.clone();
        conn[u / e].values[u % e] = Rational::one();
        let r = flatten(residual(&conn));
        columns.push(r.iter().zip(&base).map(|(a, b)| a - b).collect::<Vec<_>>());
    }
    let rows = base.len();
    let m = Matrix::from_fn(rows, unknowns, |r, c| columns[c][r].clone());
    AffineModuli::from_equations(m, base.iter().map(|b| -b).collect())
}

/// Torsion-free connections as an affine space in the unknowns `A_{i,x,y}`.
pub fn solve_torsion_free(
    calc: &EdgeCalculus,
    vbein: &VBein,
    wf: &WedgeFamily,
    tau: &[Matrix],
) -> AffineModuli {
    affine_solve(calc, tau.len(), |conn| torsion_tensor(calc, vbein, wf, conn, tau))
}

/// Cotorsion-free connections for a given coframe.
pub fn solve_cotorsion_free(
    calc: &EdgeCalculus,
    wf: &WedgeFamily,
    tau: &[Matrix],
    coframe: &[EdgeForm],
) -> AffineModuli {
    affine_solve(calc, tau.len(), |conn| cotorsion_tensor(calc, wf, conn, tau, coframe))
}
