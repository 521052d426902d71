//! The space of 2-forms: quotient of `Ω¹⊗Ω¹` by the braid-invariant
//! combinations.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::group::AdSet;
use crate::linalg::{self, Matrix};
use crate::rational::Rational;

type Pair = (usize, usize);

/// Invariant subspace `P_g` of `C(C ∩ gC⁻¹)` under `σ(a) = a⁻¹g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSubspace {
    /// The group element `g`.
    pub g: usize,
    /// Positions `a` in `C` with `a⁻¹g ∈ C`, ascending.
    pub support: Vec<usize>,
    /// σ-orbit sums, each a 0/1 vector over `support`.
    pub basis: Vec<Vec<Rational>>,
}

impl InvariantSubspace {
    /// The relation `Σ_a λ_a E_a⊗E_{a⁻¹g}` as a vector over pairs
    /// `a·n + b`.
    pub fn relation(&self, set: &AdSet, lambda: &[Rational]) -> Vec<Rational> {
        let n = set.len();
        let group = set.group();
        let mut v = vec![Rational::zero(); n * n];
        for (&a, l) in self.support.iter().zip(lambda) {
            let b = set
                .position(group.mul(group.inv(set.element(a)), self.g))
                .expect("support element");
            v[a * n + b] = l.clone();
        }
        v
    }
}

/// `P_g` for every `g` in `C·C`, ordered by element index of `g`.
pub fn invariant_subspaces(set: &AdSet) -> Vec<InvariantSubspace> {
    let group = set.group();
    let n = set.len();
    let mut products: Vec<usize> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| set.product(a, b))
        .collect();
    products.sort_unstable();
    products.dedup();
    products
        .into_iter()
        .map(|g| {
            let sigma = |a: usize| set.position(group.mul(group.inv(set.element(a)), g));
            let support: Vec<usize> = (0..n).filter(|&a| sigma(a).is_some()).collect();
            let mut seen = vec![false; n];
            let mut basis = Vec::new();
            for &start in &support {
                if seen[start] {
                    continue;
                }
                let mut lambda = vec![Rational::zero(); support.len()];
                let mut a = start;
                while !seen[a] {
                    seen[a] = true;
                    let k = support.binary_search(&a).expect("σ preserves support");
                    lambda[k] = Rational::one();
                    a = sigma(a).expect("σ preserves support");
                }
                basis.push(lambda);
            }
            InvariantSubspace { g, support, basis }
        })
        .collect()
}

/// `Ω²` with a basis of representative pairs `E_a∧E_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFormSpace {
    n: usize,
    basis: Vec<(usize, usize)>,
    wedge: Matrix,
    subspaces: Vec<InvariantSubspace>,
}

/// Order in which pairs are offered as basis candidates: by unordered pair,
/// then `(a, b)` with `a < b` before its reverse.
fn pair_key(a: usize, b: usize) -> (usize, usize, bool) {
    (a.min(b), a.max(b), a > b)
}

impl TwoFormSpace {
    pub fn new(set: &AdSet) -> Self {
        let n = set.len();
        let subspaces = invariant_subspaces(set);
        let mut blocks: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                blocks.entry(set.product(a, b)).or_default().push((a, b));
            }
        }
        let mut basis = Vec::new();
        // (pair index in n², row of the wedge matrix restricted to the block)
        let mut rows: Vec<(Pair, Vec<(usize, Rational)>)> = Vec::new();
        for (g, mut pairs) in blocks {
            pairs.sort_by_key(|&(a, b)| pair_key(a, b));
            let local = |p: &(usize, usize)| pairs.iter().position(|q| q == p).unwrap();
            let m = pairs.len();
            let relations: Vec<Vec<Rational>> = subspaces
                .iter()
                .find(|s| s.g == g)
                .map(|s| {
                    s.basis
                        .iter()
                        .map(|l| {
                            let full = s.relation(set, l);
                            pairs.iter().map(|&(a, b)| full[a * n + b].clone()).collect()
                        })
                        .collect()
                })
                .unwrap_or_default();
            let mut spanning = relations.clone();
            let mut chosen = Vec::new();
            for p in &pairs {
                let mut unit = vec![Rational::zero(); m];
                unit[local(p)] = Rational::one();
                spanning.push(unit);
                if linalg::rank_of(&spanning, m) == relations.len() + chosen.len() + 1 {
                    chosen.push(*p);
                } else {
                    spanning.pop();
                }
            }
            // columns: chosen unit vectors, then relations; invert to read off
            // coordinates along the chosen pairs.
            let mut cols: Vec<Vec<Rational>> = chosen
                .iter()
                .map(|p| {
                    let mut unit = vec![Rational::zero(); m];
                    unit[local(p)] = Rational::one();
                    unit
                })
                .collect();
            cols.extend(relations);
            let change = Matrix::from_fn(m, m, |i, j| cols[j][i].clone())
                .inverse()
                .expect("relations are independent of the chosen pairs");
            for (r, p) in chosen.iter().enumerate() {
                let row = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| !change[(r, j)].is_zero())
                    .map(|(j, &(a, b))| (a * n + b, change[(r, j)].clone()))
                    .collect();
                rows.push((*p, row));
            }
            basis.extend(chosen);
        }
        rows.sort_by_key(|((a, b), _)| pair_key(*a, *b));
        basis.sort_by_key(|&(a, b)| pair_key(a, b));
        let mut wedge = Matrix::zeros(basis.len(), n * n);
        for (k, (_, row)) in rows.into_iter().enumerate() {
            for (j, v) in row {
                wedge[(k, j)] = v;
            }
        }
        Self {
            n,
            basis,
            wedge,
            subspaces,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of `C`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Basis pairs `(a, b)` of positions, meaning `E_a∧E_b`.
    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// Matrix of `∧ : Ω¹⊗Ω¹ → Ω²` on left-invariant cotensors, columns
    /// indexed by `a·n + b`.
    pub fn wedge_matrix(&self) -> &Matrix {
        &self.wedge
    }

    pub fn invariant_subspaces(&self) -> &[InvariantSubspace] {
        &self.subspaces
    }

    /// All relation vectors over `n²`.
    pub fn relations(&self, set: &AdSet) -> Vec<Vec<Rational>> {
        self.subspaces
            .iter()
            .flat_map(|s| s.basis.iter().map(move |l| s.relation(set, l)))
            .collect()
    }

    /// Nonzero entries of column `a·n + b`: the expansion of `E_a∧E_b`.
    pub fn wedge_column(&self, a: usize, b: usize) -> Vec<(usize, Rational)> {
        let j = a * self.n + b;
        (0..self.dim())
            .filter(|&k| !self.wedge[(k, j)].is_zero())
            .map(|k| (k, self.wedge[(k, j)].clone()))
            .collect()
    }
}
