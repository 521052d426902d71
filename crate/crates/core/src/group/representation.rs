//! Exact rational matrix representations.

use std::sync::Arc;

use crate::linalg::Matrix;

use super::{GroupError, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    group: Arc<GroupTable>,
    dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Builds a representation from matrices for some elements. When only
    /// part of the group is given the rest is generated multiplicatively; the
    /// homomorphism property is then verified on all pairs.
    pub fn new(
        group: Arc<GroupTable>,
        dim: usize,
        given: &[(usize, Matrix)],
    ) -> Result<Self, GroupError> {
        let n = group.order();
        for (g, m) in given {
            if *g >= n {
                return Err(GroupError::UnknownElement(*g));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(GroupError::BadShape {
                    label: group.label(*g).to_string(),
                    dim,
                });
            }
            if m.determinant() == crate::rational::zero() {
                return Err(GroupError::NotInvertible(group.label(*g).to_string()));
            }
        }
        let mut slots: Vec<Option<Matrix>> = vec![None; n];
        slots[0] = Some(Matrix::identity(dim));
        let mut frontier = vec![0usize];
        let mut reached = 1;
        while let Some(x) = frontier.pop() {
            for (g, m) in given {
                let y = group.mul(x, *g);
                let candidate = slots[x].as_ref().unwrap() * m;
                match &slots[y] {
                    Some(existing) if *existing != candidate => {
                        return Err(GroupError::NotHomomorphism {
                            g: group.label(x).to_string(),
                            h: group.label(*g).to_string(),
                        })
                    }
                    Some(_) => {}
                    None => {
                        slots[y] = Some(candidate);
                        reached += 1;
                        frontier.push(y);
                    }
                }
            }
        }
        if reached < n {
            return Err(GroupError::NotGenerating { reached, order: n });
        }
        let matrices: Vec<Matrix> = slots.into_iter().map(Option::unwrap).collect();
        let rep = Self {
            group,
            dim,
            matrices,
        };
        rep.verify()?;
        Ok(rep)
    }

    /// The trivial representation in dimension `dim`.
    pub fn trivial(group: Arc<GroupTable>, dim: usize) -> Self {
        let matrices = vec![Matrix::identity(dim); group.order()];
        Self {
            group,
            dim,
            matrices,
        }
    }

    /// Left regular representation: `ρ(g) δ_h = δ_{gh}`.
    pub fn regular(group: Arc<GroupTable>) -> Self {
        let n = group.order();
        let matrices = group
            .elements()
            .map(|g| {
                Matrix::from_fn(n, n, |i, j| {
                    if group.mul(g, j) == i {
                        crate::rational::one()
                    } else {
                        crate::rational::zero()
                    }
                })
            })
            .collect();
        Self {
            group,
            dim: n,
            matrices,
        }
    }

    /// Exhaustive check of `ρ(g)ρ(h) = ρ(gh)`.
    pub fn verify(&self) -> Result<(), GroupError> {
        let g = &self.group;
        if self.matrices[0] != Matrix::identity(self.dim) {
            return Err(GroupError::NotHomomorphism {
                g: "e".into(),
                h: "e".into(),
            });
        }
        for a in g.elements() {
            for b in g.elements() {
                if &self.matrices[a] * &self.matrices[b] != self.matrices[g.mul(a, b)] {
                    return Err(GroupError::NotHomomorphism {
                        g: g.label(a).to_string(),
                        h: g.label(b).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }
}
