//! Exact search for regular connections inside a low-dimensional affine
//! family.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::calculus::Calculus;
use crate::mpoly::{rational_points, MPoly, PointSet};
use crate::rational::Rational;

use super::connection::Connection;
use super::curvature::{irregular_labels, product_sums};
use super::moduli::AffineModuli;

/// Default largest family dimension handed to the exact solver.
pub const DEFAULT_REGULAR_BOUND: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegularError {
    #[error(
        "moduli dimension {dim} exceeds the exact-solve bound {bound}; \
         evaluate regularity_residual on chosen points instead"
    )]
    DimensionTooLarge { dim: usize, bound: usize },
    #[error("regular connections form a positive-dimensional family")]
    PositiveDimensional,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularPoints {
    /// Parameter values `t` of each rational solution `base + Σ t_i basis_i`.
    pub params: Vec<Vec<Rational>>,
    pub connections: Vec<Connection>,
    /// The solution set also contains points with irrational coordinates.
    pub has_irrational: bool,
}

/// All rational parameter points of `moduli` where every regularity residual
/// vanishes.
pub fn find_regular(
    calc: &Calculus,
    moduli: &AffineModuli,
    bound: usize,
) -> Result<RegularPoints, RegularError> {
    let Some(base) = moduli.base() else {
        return Ok(RegularPoints {
            params: Vec::new(),
            connections: Vec::new(),
            has_irrational: false,
        });
    };
    let dim = moduli.basis().len();
    if dim > bound {
        return Err(RegularError::DimensionTooLarge { dim, bound });
    }
    let labels = irregular_labels(calc);
    let a0 = Connection::from_vector(calc, base);
    let dirs: Vec<Connection> = moduli
        .basis()
        .iter()
        .map(|b| Connection::from_vector(calc, b))
        .collect();
    // residual(A0 + Σ t_i B_i) expanded through the bilinear product sums;
    // each (label, 2-form component, point) becomes one polynomial.
    let mut polys: BTreeMap<(usize, usize, usize), MPoly> = BTreeMap::new();
    let mut accumulate = |monomial: Vec<u32>, x: &Connection, y: &Connection| {
        for (q, form) in product_sums(calc, x, y, &labels).into_iter().enumerate() {
            for (k, f) in form.comps.iter().enumerate() {
                for (p, v) in f.values().iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    polys
                        .entry((q, k, p))
                        .or_insert_with(|| MPoly::zero(dim))
                        .add_term(monomial.clone(), v.clone());
                }
            }
        }
    };
    let unit = |i: usize| {
        let mut m = vec![0u32; dim];
        m[i] += 1;
        m
    };
    accumulate(vec![0; dim], &a0, &a0);
    for (i, bi) in dirs.iter().enumerate() {
        accumulate(unit(i), &a0, bi);
        accumulate(unit(i), bi, &a0);
        for (j, bj) in dirs.iter().enumerate() {
            let mut m = unit(i);
            m[j] += 1;
            accumulate(m, bi, bj);
        }
    }
    let system: Vec<MPoly> = polys.into_values().filter(|p| !p.is_zero()).collect();
    match rational_points(&system, dim) {
        PointSet::PositiveDimensional => Err(RegularError::PositiveDimensional),
        PointSet::Finite {
            points,
            has_irrational,
        } => {
            let connections = points
                .iter()
                .map(|t| Connection::from_vector(calc, &moduli.point(t).expect("nonempty")))
                .collect();
            Ok(RegularPoints {
                params: points,
                connections,
                has_irrational,
            })
        }
    }
}
