//! Tensorial geometry on a finite set whose edge calculus is parallelized by
//! a V-bein, and the embedding of the group calculus into it.

mod embed;
mod engine;
mod structure;
mod tensor;

use thiserror::Error;

pub use embed::{check_equivalence, from_group, group_tau, EquivalenceReport, GroupEmbedding};
pub use engine::{
    components, connection_from_vector, coframe, cotorsion_tensor, curvature_tensor, d_function,
    d_one_form, dirac_tensor, frame_form, from_components, lift_apply, nabla_tensor, partial,
    path_components, path_from_components, project, rho, ricci_tensor, solve_cotorsion_free,
    solve_torsion_free, tensor, theta_components, torsion_tensor, verify_projector, wedge,
    FinsetCurvature,
};
pub use structure::{local_vbein, validate_fibration, EdgeCalculus, VBein, WedgeFamily};
pub use tensor::{EdgeForm, PairForm, PathTensor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinsetError {
    #[error("edge ({0}, {1}) refers to a missing point")]
    BadEdge(usize, usize),
    #[error("diagonal edge at point {0}")]
    DiagonalEdge(usize),
    #[error("frame at point {0} does not match the fiber size")]
    NotFibred(usize),
    #[error("frame at point {0} is singular")]
    SingularFrame(usize),
    #[error("s_x is not a bijection onto the fiber at point {0}")]
    NotBijective(usize),
    #[error("the wedge family carries no lift")]
    MissingLift,
}

#[cfg(test)]
mod tests;
