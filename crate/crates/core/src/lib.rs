//! Central seminormality and central weak normality for real algebraic
//! varieties, decided with exact rational arithmetic.

pub mod cli;
pub mod context;
pub mod curve;
pub mod error;
pub mod extension;
pub mod groebner;
pub mod poly;
pub mod realroots;
pub mod scalar;
pub mod seminorm;

pub use cli::parse::{parse_poly, parse_rational};
pub use context::Context;
pub use error::{Error, Result};
pub use groebner::{
    buchberger, eliminate, ideal_member, normal_form, radical_member, saturate, solve_zero_dim, GroebnerBasis, Ideal,
    SolvedPoint, ZeroDimSolution,
};
pub use poly::{MPoly, Monomial, MonomialOrder};
pub use realroots::{binary_form_lines, isolate_roots, resultant, sturm_count, Bound, UPoly};
pub use scalar::{OrderedScalar, Scalar};

/// Exact rational scalar used by every decision procedure.
pub type Rational = num_rational::BigRational;
/// Multivariate polynomial over the rationals.
pub type Poly = MPoly<Rational>;
/// Univariate polynomial over the rationals.
pub type UniPoly = UPoly<Rational>;
/// Multivariate polynomial over `f64`, for numeric experiments.
pub type PolyF64 = MPoly<f64>;
