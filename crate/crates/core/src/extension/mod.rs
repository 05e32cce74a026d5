//! Finite birational extensions `Pol(X) -> Pol(X)[f_1, ..., f_k]`.

mod bijectivity;
mod element;
mod hereditary;
mod presentation;
mod search;

pub use bijectivity::{
    central_bijectivity_check, central_singular_points, continuity_decision, BijectivityCertificate, CentralityMethod,
    CheckedPoint, ContinuityCertificate, FiberPointCheck,
};
pub use element::{verify_integral_relation, IntegralElement, RationalFunction};
pub use hereditary::{hereditary_birational_check, specialization_values, HereditaryCertificate, Specialization};
pub use presentation::{adjoin, adjoin_to, fiber_over_point, ExtensionPresentation, Fiber, FiberSummary};
pub use search::{wc_normalization_search, CandidateOutcome, SearchLabel, SearchResult, SearchStep};

#[cfg(test)]
mod tests;
