//! The braided-Killing form `η^{ab} = n(ab)` of an Ad-stable set.

use num_traits::Zero;

use crate::group::AdSet;
use crate::linalg::Matrix;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    pub eta: Matrix,
    pub eta_inv: Option<Matrix>,
}

impl KillingForm {
    pub fn is_semisimple(&self) -> bool {
        self.eta_inv.is_some()
    }
}

/// `n(g) = #{c ∈ C : cg = gc}`.
pub fn centralizer_count(set: &AdSet, g: usize) -> usize {
    let group = set.group();
    set.members()
        .iter()
        .filter(|&&c| group.mul(c, g) == group.mul(g, c))
        .count()
}

pub fn killing_form(set: &AdSet) -> KillingForm {
    let n = set.len();
    let eta = Matrix::from_fn(n, n, |a, b| {
        Rational::from_integer(centralizer_count(set, set.product(a, b)).into())
    });
    let eta_inv = if eta.determinant().is_zero() {
        None
    } else {
        eta.inverse()
    };
    KillingForm { eta, eta_inv }
}

/// `n(ab) − n(a) − n(b) + n(e)`, the form built from the shifted generators
/// `a − e`.
pub fn killing_form_offset(set: &AdSet) -> Matrix {
    let n = set.len();
    let count = |g| Rational::from_integer(centralizer_count(set, g).into());
    let ne = count(set.group().identity());
    Matrix::from_fn(n, n, |a, b| {
        count(set.product(a, b)) - count(set.element(a)) - count(set.element(b)) + &ne
    })
}
