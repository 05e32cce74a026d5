//! Singular locus, tangent cones and isolated real points of curves.

mod affine;
mod presentation;
mod probe;
mod singular;

pub use affine::AffineChange;
pub use presentation::{jacobian, minors, AffinePresentation, Assertions, VarietyKind};
pub use probe::{centrality_report, isolated_point_probe, CentralityReport, ProbeResult};
pub use singular::{classify_singularity, is_smooth, singular_points, Classification, SingularLocus, SingularityReport};

#[cfg(test)]
mod tests;
