//! Metrics, spin connections, torsion and cotorsion, the linear moduli of
//! torsion-free and cotorsion-free connections, regularity, curvature,
//! lifts of 2-forms and the Ricci tensor.

mod connection;
mod curvature;
mod killing;
mod lift;
mod metric;
mod moduli;
mod regular;

use thiserror::Error;

pub use connection::{
    covariant_derivative, cotorsion, nabla_on_metric, skew_compatibility, torsion, torsion_tensor,
    wedge_nabla, Connection,
};
pub use curvature::{
    curvature, irregular_labels, product_sums, regularity_residual, ricci, riemann,
    scalar_curvature, Curvature,
};
pub use killing::{centralizer_count, killing_form, killing_form_offset, KillingForm};
pub use lift::{lift, lift_projection, lift_woronowicz, projection_matrix, Lift, LiftFlavor};
pub use metric::{is_nondegenerate, metric_tensor, pointwise_inverse, Coframing};
pub use moduli::{
    cotorsion_system, intersect_moduli, solve_cotorsion_free, solve_torsion_free, torsion_system,
    AffineModuli,
};
pub use regular::{find_regular, RegularError, RegularPoints, DEFAULT_REGULAR_BOUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RiemannianError {
    #[error("metric coefficient matrix is singular at element {0}")]
    SingularMetric(usize),
    #[error("the braided-Killing form is degenerate")]
    DegenerateKilling,
}

impl Coframing {
    /// The coframing `E*^a = η^{ba} E_b` of the braided-Killing metric.
    pub fn killing(calc: &crate::calculus::Calculus) -> Result<Self, RiemannianError> {
        let k = killing_form(calc.set());
        if !k.is_semisimple() {
            return Err(RiemannianError::DegenerateKilling);
        }
        Self::constant(&k.eta, calc.order())
    }
}
