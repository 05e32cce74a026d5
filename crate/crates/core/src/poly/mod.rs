//! Exact sparse multivariate polynomial algebra.

mod monomial;
mod mpoly;
mod order;

pub use monomial::Monomial;
pub use mpoly::{align_vars, MPoly};
pub use order::MonomialOrder;
