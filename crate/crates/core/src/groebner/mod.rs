//! Gröbner bases and the ideal calculus built on them.

mod buchberger;
mod ideal;

pub use buchberger::{buchberger, normal_form, GbLimits};
pub use ideal::Ideal;

use crate::error::Result;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Reduced monic Gröbner basis of `ideal` under `order`.
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Result<Vec<Polynomial>> {
    ideal.groebner_basis_in(order)
}
