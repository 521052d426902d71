//! Gamma matrices from a representation, the braided Casimir, the Dirac
//! operator on `W`-valued functions, its exact spectrum, and the algebraic
//! compatibility check between the Dirac operator and the 2-form relations.

mod connes;
mod gamma;
mod operator;
mod spectrum;

use thiserror::Error;

pub use connes::{connes_necessary_check, Condition, ConnesReport};
pub use gamma::{braided_casimir, tau, tautological_gammas, GammaFamily, GroupAlgebraElement};
pub use operator::{action_trace_d2, dirac_from_parts, dirac_matrix, partial_matrix, DiracOperator};
pub use spectrum::{char_poly, spectrum_of, Root, Spectrum, DEFAULT_DIGITS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiracError {
    #[error("the braided-Killing form is degenerate; tautological gammas need its inverse")]
    DegenerateKilling,
}

#[cfg(test)]
mod tests;
