//! Edge calculi, V-beins and wedge families on a finite set.

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::rational::Rational;

use super::FinsetError;

/// A finite set `{0..points}` with directed edges `E ⊆ Σ×Σ` off the
/// diagonal. Also indexes the 2-step paths `(x, y, z)`, grouped by
/// endpoints `(x, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCalculus {
    points: usize,
    edges: Vec<(usize, usize)>,
    edge_id: Vec<Option<usize>>,
    fibers: Vec<Vec<usize>>,
    pairs: Vec<(usize, usize)>,
    pair_id: Vec<Option<usize>>,
    middles: Vec<Vec<usize>>,
}

impl EdgeCalculus {
    pub fn new(points: usize, edges: &[(usize, usize)]) -> Result<Self, FinsetError> {
        let mut list = edges.to_vec();
        list.sort_unstable();
        list.dedup();
        for &(x, y) in &list {
            if x >= points || y >= points {
                return Err(FinsetError::BadEdge(x, y));
            }
            if x == y {
                return Err(FinsetError::DiagonalEdge(x));
            }
        }
        let mut edge_id = vec![None; points * points];
        let mut fibers = vec![Vec::new(); points];
        for (k, &(x, y)) in list.iter().enumerate() {
            edge_id[x * points + y] = Some(k);
            fibers[x].push(y);
        }
        let mut middles_of = vec![Vec::new(); points * points];
        for x in 0..points {
            for &y in &fibers[x] {
                for &z in &fibers[y] {
                    middles_of[x * points + z].push(y);
                }
            }
        }
        let mut pairs = Vec::new();
        let mut middles = Vec::new();
        let mut pair_id = vec![None; points * points];
        for (k, mut ys) in middles_of.into_iter().enumerate() {
            if ys.is_empty() {
                continue;
            }
            ys.sort_unstable();
            pair_id[k] = Some(pairs.len());
            pairs.push((k / points, k % points));
            middles.push(ys);
        }
        Ok(Self {
            points,
            edges: list,
            edge_id,
            fibers,
            pairs,
            pair_id,
            middles,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, x: usize, y: usize) -> Option<usize> {
        self.edge_id[x * self.points + y]
    }

    pub fn fiber(&self, x: usize) -> &[usize] {
        &self.fibers[x]
    }

    /// Position of `y` within the fiber `F_x`.
    pub fn fiber_pos(&self, x: usize, y: usize) -> Option<usize> {
        self.fibers[x].binary_search(&y).ok()
    }

    /// Endpoint pairs `(x, z)` joined by at least one 2-step path.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, x: usize, z: usize) -> Option<usize> {
        self.pair_id[x * self.points + z]
    }

    /// `F_{x,z}` for the pair with index `k`.
    pub fn middles(&self, k: usize) -> &[usize] {
        &self.middles[k]
    }
}

/// `|F_x| = dim V` for every `x`.
pub fn validate_fibration(calc: &EdgeCalculus, dim_v: usize) -> bool {
    (0..calc.points()).all(|x| calc.fiber(x).len() == dim_v)
}

/// A V-bein `E_{a,x,y}` with pointwise inverses. `frame[x]` is
/// `dim × |F_x|`, `inverse[x]` is `|F_x| × dim`, columns/rows following
/// the sorted fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VBein {
    dim: usize,
    frame: Vec<Matrix>,
    inverse: Vec<Matrix>,
}

impl VBein {
    pub fn new(calc: &EdgeCalculus, frame: Vec<Matrix>) -> Result<Self, FinsetError> {
        let dim = frame.first().map_or(0, Matrix::rows);
        let mut inverse = Vec::with_capacity(frame.len());
        for (x, m) in frame.iter().enumerate() {
            if m.rows() != dim || m.cols() != calc.fiber(x).len() {
                return Err(FinsetError::NotFibred(x));
            }
            let inv = m.inverse().ok_or(FinsetError::SingularFrame(x))?;
            inverse.push(inv);
        }
        Ok(Self {
            dim,
            frame,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `E_{a,x,y}` (zero when `(x, y)` is not an edge).
    pub fn e(&self, calc: &EdgeCalculus, a: usize, x: usize, y: usize) -> Rational {
        match calc.fiber_pos(x, y) {
            Some(p) => self.frame[x][(a, p)].clone(),
            None => Rational::zero(),
        }
    }

    /// `E⁻¹_a^{x,y}`.
    pub fn e_inv(&self, calc: &EdgeCalculus, a: usize, x: usize, y: usize) -> Rational {
        match calc.fiber_pos(x, y) {
            Some(p) => self.inverse[x][(p, a)].clone(),
            None => Rational::zero(),
        }
    }

    pub fn frame(&self, x: usize) -> &Matrix {
        &self.frame[x]
    }

    pub fn inverse(&self, x: usize) -> &Matrix {
        &self.inverse[x]
    }

    /// Both composition identities hold at every point.
    pub fn check_inverse(&self) -> bool {
        self.frame.iter().zip(&self.inverse).all(|(e, inv)| {
            (e * inv) == Matrix::identity(e.rows()) && (inv * e) == Matrix::identity(e.cols())
        })
    }
}

/// `E_{a,x,y} = δ_{s_x(a), y}` from bijections `s_x : I → F_x`, given as
/// `s[x][a]`.
pub fn local_vbein(calc: &EdgeCalculus, s: &[Vec<usize>]) -> Result<VBein, FinsetError> {
    let mut frame = Vec::with_capacity(calc.points());
    for x in 0..calc.points() {
        let fiber = calc.fiber(x);
        let sx = s.get(x).ok_or(FinsetError::NotBijective(x))?;
        if sx.len() != fiber.len() {
            return Err(FinsetError::NotBijective(x));
        }
        let mut m = Matrix::zeros(sx.len(), fiber.len());
        let mut hit = vec![false; fiber.len()];
        for (a, &y) in sx.iter().enumerate() {
            let p = calc.fiber_pos(x, y).ok_or(FinsetError::NotBijective(x))?;
            if std::mem::replace(&mut hit[p], true) {
                return Err(FinsetError::NotBijective(x));
            }
            m[(a, p)] = Rational::one();
        }
        frame.push(m);
    }
    VBein::new(calc, frame)
}

/// Surjections `p_{x,z} : C F_{x,z} → V_{x,z}` for every endpoint pair,
/// stored as `dim V_{x,z} × |F_{x,z}|` matrices, with optional lifts
/// `i_{x,z}` of shape `|F_{x,z}| × dim V_{x,z}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeFamily {
    pub p: Vec<Matrix>,
    pub lift: Option<Vec<Matrix>>,
}

impl WedgeFamily {
    /// Rows of `p_{x,z}` sum to zero whenever `(x, z)` is neither an edge nor
    /// on the diagonal.
    pub fn satisfies_zero_sum(&self, calc: &EdgeCalculus) -> bool {
        calc.pairs().iter().enumerate().all(|(k, &(x, z))| {
            if x == z || calc.edge(x, z).is_some() {
                return true;
            }
            let p = &self.p[k];
            (0..p.rows()).all(|r| {
                (0..p.cols())
                    .fold(Rational::zero(), |acc, c| acc + &p[(r, c)])
                    .is_zero()
            })
        })
    }

    /// `p ∘ i = id` on every `V_{x,z}`.
    pub fn lift_is_section(&self) -> Option<bool> {
        let lift = self.lift.as_ref()?;
        Some(
            self.p
                .iter()
                .zip(lift)
                .all(|(p, i)| p * i == Matrix::identity(p.rows())),
        )
    }

    /// `π_{x,z} = i ∘ p` as `|F| × |F|` matrices, mapping `y` to `w`.
    pub fn projectors(&self) -> Option<Vec<Matrix>> {
        let lift = self.lift.as_ref()?;
        Some(self.p.iter().zip(lift).map(|(p, i)| i * p).collect())
    }
}
