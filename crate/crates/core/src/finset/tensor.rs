//! Tensor fields over an edge calculus: 1-forms on edges, cotensors on
//! 2-step paths and 2-forms on the quotients `V_{x,z}`.

use num_traits::Zero;

use crate::rational::Rational;

use super::structure::{EdgeCalculus, WedgeFamily};

/// `α = Σ α_{x,y} e_{x,y}`, indexed by edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeForm {
    pub values: Vec<Rational>,
}

/// `t = Σ t_{x,y,z} e_{x,y}⊗e_{y,z}`, one block per endpoint pair holding
/// the values over its middle points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTensor {
    pub blocks: Vec<Vec<Rational>>,
}

/// A 2-form with components `f_{x,α,z}`, one block per endpoint pair of
/// length `dim V_{x,z}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairForm {
    pub blocks: Vec<Vec<Rational>>,
}

fn add_blocks(a: &[Vec<Rational>], b: &[Vec<Rational>], sign: bool) -> Vec<Vec<Rational>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            x.iter()
                .zip(y)
                .map(|(p, q)| if sign { p + q } else { p - q })
                .collect()
        })
        .collect()
}

impl EdgeForm {
    pub fn zero(calc: &EdgeCalculus) -> Self {
        Self {
            values: vec![Rational::zero(); calc.edges().len()],
        }
    }

    /// `α_{x,y}`, read as zero off the edge set.
    pub fn get(&self, calc: &EdgeCalculus, x: usize, y: usize) -> Rational {
        calc.edge(x, y)
            .map_or_else(Rational::zero, |k| self.values[k].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl PathTensor {
    pub fn zero(calc: &EdgeCalculus) -> Self {
        Self {
            blocks: (0..calc.pairs().len())
                .map(|k| vec![Rational::zero(); calc.middles(k).len()])
                .collect(),
        }
    }

    /// `t_{x,y,z}`, zero when `(x, y, z)` is not a path.
    pub fn get(&self, calc: &EdgeCalculus, x: usize, y: usize, z: usize) -> Rational {
        calc.pair(x, z)
            .and_then(|k| {
                calc.middles(k)
                    .binary_search(&y)
                    .ok()
                    .map(|p| self.blocks[k][p].clone())
            })
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            blocks: add_blocks(&self.blocks, &other.blocks, true),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            blocks: add_blocks(&self.blocks, &other.blocks, false),
        }
    }
}

impl PairForm {
    pub fn zero(wf: &WedgeFamily) -> Self {
        Self {
            blocks: wf.p.iter().map(|p| vec![Rational::zero(); p.rows()]).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            blocks: add_blocks(&self.blocks, &other.blocks, true),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            blocks: add_blocks(&self.blocks, &other.blocks, false),
        }
    }
}
