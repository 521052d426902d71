//! Necessary conditions for the Dirac operator to reproduce the calculus's
//! degree-2 relations.

use crate::group::AdSet;
use crate::linalg::Matrix;

use super::gamma::GammaFamily;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// Human-readable statement, e.g. `γ_u² = 0`.
    pub statement: String,
    pub holds: bool,
    /// The matrix that has to vanish.
    pub value: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnesReport {
    pub conditions: Vec<Condition>,
}

impl ConnesReport {
    pub fn passes(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }
}

/// `γ_a² = 0` whenever `a² ∈ C ∪ {e}`, and `Σ_{ab=g} γ_a γ_b = 0` for all
/// `g ∈ C ∪ {e}`.
pub fn connes_necessary_check(gammas: &GammaFamily, set: &AdSet) -> ConnesReport {
    let group = set.group();
    let d = gammas.dim();
    let n = set.len();
    let mut conditions = Vec::new();
    for a in 0..n {
        let sq = set.product(a, a);
        if sq == group.identity() || set.contains(sq) {
            let value = &gammas.gammas[a] * &gammas.gammas[a];
            conditions.push(Condition {
                statement: format!("γ_{}² = 0", group.label(set.element(a))),
                holds: value.is_zero(),
                value,
            });
        }
    }
    let targets = std::iter::once(group.identity()).chain(set.members().iter().copied());
    for g in targets {
        let mut value = Matrix::zeros(d, d);
        for a in 0..n {
            for b in 0..n {
                if set.product(a, b) == g {
                    value = &value + &(&gammas.gammas[a] * &gammas.gammas[b]);
                }
            }
        }
        conditions.push(Condition {
            statement: format!("Σ_{{ab={}}} γ_a γ_b = 0", group.label(g)),
            holds: value.is_zero(),
            value,
        });
    }
    ConnesReport { conditions }
}
