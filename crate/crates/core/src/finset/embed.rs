//! The calculus of `(G, C)` written as a parallelized finite set: points are
//! group elements, edges `(x, xa)`, `s_x(a) = xa` and
//! `τ^{a b}_c = δ^b_{a⁻¹ca} − δ^b_c`.

use num_traits::One;

use crate::calculus::{Calculus, Cotensor, OneForm, TwoForm};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::riemannian::{Coframing, Connection, Lift};

use crate::calculus::GroupFunction;
use crate::dirac::{dirac_from_parts, GammaFamily};
use crate::riemannian::{cotorsion, covariant_derivative, curvature, ricci, torsion};

use super::engine;
use super::structure::{local_vbein, EdgeCalculus, VBein, WedgeFamily};
use super::tensor::{EdgeForm, PairForm, PathTensor};

#[derive(Clone, Debug)]
pub struct GroupEmbedding {
    pub calc: EdgeCalculus,
    pub vbein: VBein,
    pub wedge: WedgeFamily,
    pub tau: Vec<Matrix>,
    /// Group elements labelling the fiber index, in the order of `C`.
    pub labels: Vec<usize>,
    /// For each endpoint pair, the `Ω²` basis indices spanning `V_{x,z}`.
    pub block_rows: Vec<Vec<usize>>,
}

/// `τ^a` with entries `τ^a[(b, c)] = δ^b_{a⁻¹ca} − δ^b_c`.
pub fn group_tau(calc: &Calculus) -> Vec<Matrix> {
    let n = calc.n();
    let set = calc.set();
    (0..n)
        .map(|a| {
            let mut t = Matrix::zeros(n, n);
            for c in 0..n {
                t[(set.conj_inv(a, c), c)] += Rational::one();
                t[(c, c)] -= Rational::one();
            }
            t
        })
        .collect()
}

/// Embeds the group calculus; `lift`, when given, supplies `i_{x,z}`.
pub fn from_group(gc: &Calculus, lift: Option<&Lift>) -> GroupEmbedding {
    let group = gc.group();
    let set = gc.set();
    let n = gc.n();
    let order = gc.order();
    let edges: Vec<(usize, usize)> = (0..order)
        .flat_map(|x| (0..n).map(move |a| (x, a)))
        .map(|(x, a)| (x, group.mul(x, set.element(a))))
        .collect();
    let calc = EdgeCalculus::new(order, &edges).expect("Cayley edges are off-diagonal");
    let s: Vec<Vec<usize>> = (0..order)
        .map(|x| (0..n).map(|a| group.mul(x, set.element(a))).collect())
        .collect();
    let vbein = local_vbein(&calc, &s).expect("right translation is bijective");
    let omega = gc.omega2();
    let w = omega.wedge_matrix();
    let block_of: Vec<usize> = omega.basis().iter().map(|&(a, b)| set.product(a, b)).collect();
    let mut block_rows = Vec::with_capacity(calc.pairs().len());
    let mut p = Vec::with_capacity(calc.pairs().len());
    let mut lifts = Vec::with_capacity(calc.pairs().len());
    let pos = |g: usize| set.position(g).expect("edge label in C");
    for (k, &(x, z)) in calc.pairs().iter().enumerate() {
        let g = group.mul(group.inv(x), z);
        let rows: Vec<usize> = (0..block_of.len()).filter(|&r| block_of[r] == g).collect();
        let ys = calc.middles(k);
        let pairs: Vec<(usize, usize)> = ys
            .iter()
            .map(|&y| {
                (
                    pos(group.mul(group.inv(x), y)),
                    pos(group.mul(group.inv(y), z)),
                )
            })
            .collect();
        p.push(Matrix::from_fn(rows.len(), ys.len(), |r, c| {
            let (a, b) = pairs[c];
            w[(rows[r], a * n + b)].clone()
        }));
        if let Some(l) = lift {
            lifts.push(Matrix::from_fn(ys.len(), rows.len(), |c, r| {
                let (a, b) = pairs[c];
                l.matrix[(a * n + b, rows[r])].clone()
            }));
        }
        block_rows.push(rows);
    }
    GroupEmbedding {
        calc,
        vbein,
        wedge: WedgeFamily {
            p,
            lift: lift.map(|_| lifts),
        },
        tau: group_tau(gc),
        labels: set.members().to_vec(),
        block_rows,
    }
}

impl GroupEmbedding {
    /// `α^a(x) ↦ α_{x,xa}`.
    pub fn one_form(&self, gc: &Calculus, alpha: &OneForm) -> EdgeForm {
        let group = gc.group();
        let mut out = EdgeForm::zero(&self.calc);
        for x in 0..gc.order() {
            for (a, f) in alpha.comps.iter().enumerate() {
                let e = self
                    .calc
                    .edge(x, group.mul(x, gc.set().element(a)))
                    .expect("Cayley edge");
                out.values[e] = f.at(x).clone();
            }
        }
        out
    }

    /// Component `(a, b)` at `x` goes to the path `(x, xa, xab)`.
    pub fn cotensor(&self, gc: &Calculus, t: &Cotensor) -> PathTensor {
        let group = gc.group();
        let n = gc.n();
        let mut out = PathTensor::zero(&self.calc);
        for x in 0..gc.order() {
            for a in 0..n {
                let y = group.mul(x, gc.set().element(a));
                for b in 0..n {
                    let z = group.mul(y, gc.set().element(b));
                    let k = self.calc.pair(x, z).expect("2-step path");
                    let p = self.calc.middles(k).binary_search(&y).expect("middle point");
                    out.blocks[k][p] = t.comps[a * n + b].at(x).clone();
                }
            }
        }
        out
    }

    /// Basis component `ω^k(x)` goes to `(x, x·g_k)`.
    pub fn two_form(&self, f: &TwoForm) -> PairForm {
        let mut out = PairForm::zero(&self.wedge);
        for (k, &(x, _)) in self.calc.pairs().iter().enumerate() {
            for (r, &row) in self.block_rows[k].iter().enumerate() {
                out.blocks[k][r] = f.comps[row].at(x).clone();
            }
        }
        out
    }

    /// `A_a^b(x) ↦ A_{a,x,xb}`.
    pub fn connection(&self, gc: &Calculus, conn: &Connection) -> Vec<EdgeForm> {
        (0..conn.n()).map(|a| self.one_form(gc, &conn.form(a))).collect()
    }

    /// Pointwise inverse metric `upper[y][(b, a)] = g^{ba}(y)`.
    pub fn upper_metric(&self, gc: &Calculus, cof: &Coframing) -> Vec<Matrix> {
        let n = gc.n();
        (0..gc.order())
            .map(|y| Matrix::from_fn(n, n, |b, a| cof.upper(b, a).at(y).clone()))
            .collect()
    }

    /// Whether every `p_{x,z}` block is empty, as for `Ω² = 0`.
    pub fn omega2_vanishes(&self) -> bool {
        self.wedge.p.iter().all(|p| p.rows() == 0)
    }
}

/// Outcome of comparing the tensor engine against the group modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub checks: Vec<(String, bool)>,
}

impl EquivalenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Computes `∇`, torsion, cotorsion, curvature, Ricci and (when `spin` is
/// given as gammas and `τ_W`) the Dirac operator both ways and compares them
/// exactly. The embedding must carry `lift`.
pub fn check_equivalence(
    gc: &Calculus,
    emb: &GroupEmbedding,
    conn: &Connection,
    lift: &Lift,
    cof: &Coframing,
    spin: Option<(&GammaFamily, &[Matrix])>,
) -> EquivalenceReport {
    let (calc, vbein, wf, tau) = (&emb.calc, &emb.vbein, &emb.wedge, &emb.tau);
    let a = emb.connection(gc, conn);
    let mut checks = Vec::new();

    let mut probes: Vec<OneForm> = (0..gc.n()).map(|k| gc.basis_form(k)).collect();
    probes.push(gc.theta());
    for x in 0..gc.order() {
        probes.push(gc.differential(&GroupFunction::delta(gc.order(), x)));
        let f = GroupFunction::from_fn(gc.order(), |y| Rational::from_integer(((x * 7 + y * 3) % 5).into()));
        probes.push(gc.basis_form(x % gc.n()).left_mul(&f));
    }
    let nabla_ok = probes.iter().all(|alpha| {
        let expect = emb.cotensor(gc, &covariant_derivative(gc, conn, alpha));
        engine::nabla_tensor(calc, vbein, &a, tau, &emb.one_form(gc, alpha)) == expect
    });
    checks.push(("nabla".to_string(), nabla_ok));

    let wedge_ok = probes.iter().zip(probes.iter().rev()).all(|(p, q)| {
        let expect = emb.two_form(&gc.wedge(p, q));
        let d_expect = emb.two_form(&gc.d_one_form(p));
        let (ep, eq) = (emb.one_form(gc, p), emb.one_form(gc, q));
        engine::wedge(calc, wf, &ep, &eq) == expect && engine::d_one_form(calc, wf, &ep) == d_expect
    });
    checks.push(("wedge and d".to_string(), wedge_ok));

    let t_expect: Vec<PairForm> = torsion(gc, conn).iter().map(|f| emb.two_form(f)).collect();
    checks.push((
        "torsion".to_string(),
        engine::torsion_tensor(calc, vbein, wf, &a, tau) == t_expect,
    ));

    let cof_forms = engine::coframe(calc, vbein, &emb.upper_metric(gc, cof));
    let cof_ok = (0..gc.n()).all(|k| cof_forms[k] == emb.one_form(gc, &cof.coframe(gc, k)));
    let c_expect: Vec<PairForm> = cotorsion(gc, conn, cof).iter().map(|f| emb.two_form(f)).collect();
    checks.push((
        "cotorsion".to_string(),
        cof_ok && engine::cotorsion_tensor(calc, wf, &a, tau, &cof_forms) == c_expect,
    ));

    let curv = curvature(gc, conn);
    let fc = engine::curvature_tensor(calc, wf, &a, gc.group(), &emb.labels);
    let f_expect: Vec<PairForm> = curv.forms.iter().map(|f| emb.two_form(f)).collect();
    let r_expect: Vec<(usize, PairForm)> = curv
        .residuals
        .iter()
        .map(|(q, f)| (*q, emb.two_form(f)))
        .collect();
    checks.push((
        "curvature".to_string(),
        fc.forms == f_expect && fc.residuals == r_expect && fc.is_regular == curv.is_regular,
    ));

    let ricci_expect = emb.cotensor(gc, &ricci(gc, &curv.forms, lift));
    let ricci_ok = engine::ricci_tensor(calc, vbein, wf, &fc.forms, tau).is_ok_and(|r| r == ricci_expect);
    checks.push(("ricci".to_string(), ricci_ok));

    if let Some((gammas, tau_w)) = spin {
        let expect = dirac_from_parts(gc, conn, gammas, tau_w).matrix;
        let got = engine::dirac_tensor(calc, vbein, &a, &gammas.gammas, tau_w);
        checks.push(("dirac".to_string(), got == expect));
    }
    EquivalenceReport { checks }
}
