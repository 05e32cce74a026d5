//! Central seminormality of plane curves.
//!
//! A plane curve is centrally seminormal exactly when its complexification
//! has no non-real singular point and every real singular point is a node
//! with two real tangents. For an ordinary singularity the branches, the
//! tangent lines and the normalization fiber points correspond one to one,
//! and a branch is real iff its tangent is; in the plane only nodes are
//! ordinary.

use rayon::prelude::*;
use serde::Serialize;

use crate::context::Context;
use crate::curve::{classify_singularity, singular_points, AffinePresentation, Classification, SingularityReport, VarietyKind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CentrallySeminormal,
    NotCentrallySeminormal,
    Unsupported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Condition {
    /// Every real singular point is ordinary.
    #[serde(rename = "C1-ordinary")]
    Ordinary,
    /// Every singular point of the complexification is real.
    #[serde(rename = "C2-real")]
    Real,
    /// Every normalization fiber over a singular point is totally real.
    #[serde(rename = "C3-totally-real")]
    TotallyReal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointEvidence {
    pub report: SingularityReport,
    pub failed: Vec<Condition>,
}

/// For curves, central seminormalization and central weak normalization
/// agree, so one decision answers both questions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WcScNote {
    pub statement: &'static str,
}

impl Default for WcScNote {
    fn default() -> Self {
        WcScNote {
            statement: "for curves X^{s_c} = X^{w_c}",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Notion {
    Seminormal,
    WeaklyNormal,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeminormalityCertificate {
    pub notion: Notion,
    pub verdict: Verdict,
    pub evidence: Vec<PointEvidence>,
    pub nonreal_singular_count: usize,
    /// Conditions failing globally (only C2 can).
    pub failed: Vec<Condition>,
    pub unsupported_reason: Option<String>,
    pub note: WcScNote,
}

fn failed_at(report: &SingularityReport) -> Vec<Condition> {
    match report.implied_classification() {
        Classification::Smooth | Classification::RealNode => Vec::new(),
        Classification::ComplexNode => vec![Condition::TotallyReal],
        Classification::NonOrdinary => {
            let mut out = vec![Condition::Ordinary];
            if report.real_tangents < report.distinct_tangents {
                out.push(Condition::TotallyReal);
            }
            out
        }
    }
}

impl SeminormalityCertificate {
    /// The verdict implied by the evidence fields alone.
    pub fn recompute_verdict(&self) -> Verdict {
        if self.unsupported_reason.is_some() {
            return Verdict::Unsupported;
        }
        let nodes_only = self.evidence.iter().all(|e| {
            matches!(
                e.report.implied_classification(),
                Classification::RealNode | Classification::Smooth
            )
        });
        if self.nonreal_singular_count == 0 && nodes_only {
            Verdict::CentrallySeminormal
        } else {
            Verdict::NotCentrallySeminormal
        }
    }

    /// Verdict, failure lists and classifications all agree with the raw
    /// report data.
    pub fn is_consistent(&self) -> bool {
        self.verdict == self.recompute_verdict()
            && self.evidence.iter().all(|e| {
                e.failed == failed_at(&e.report) && e.report.classification == e.report.implied_classification()
            })
            && self.failed.contains(&Condition::Real) == (self.nonreal_singular_count > 0)
    }

    /// All conditions that fail somewhere, sorted.
    pub fn failed_conditions(&self) -> Vec<Condition> {
        let mut all: Vec<Condition> = self
            .failed
            .iter()
            .chain(self.evidence.iter().flat_map(|e| e.failed.iter()))
            .copied()
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

fn decide(x: &AffinePresentation, notion: Notion, ctx: &Context) -> Result<SeminormalityCertificate> {
    if x.kind() != VarietyKind::PlaneCurve {
        return Err(Error::invalid("seminormality is decided for plane curves only"));
    }
    let mut cert = SeminormalityCertificate {
        notion,
        verdict: Verdict::Unsupported,
        evidence: Vec::new(),
        nonreal_singular_count: 0,
        failed: Vec::new(),
        unsupported_reason: None,
        note: WcScNote::default(),
    };
    let missing: Vec<&str> = [
        (x.assertions.irreducible, "irreducible"),
        (x.assertions.smooth_real_point, "smooth-real-point"),
    ]
    .iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, name)| *name)
    .collect();
    if !missing.is_empty() {
        cert.unsupported_reason = Some(format!("hypotheses not asserted: {}", missing.join(", ")));
        return Ok(cert);
    }
    let locus = singular_points(x, ctx)?;
    let points = locus.rational_points()?;
    cert.evidence = points
        .par_iter()
        .map(|p| {
            let report = classify_singularity(x, p)?;
            Ok(PointEvidence {
                failed: failed_at(&report),
                report,
            })
        })
        .collect::<Result<_>>()?;
    cert.nonreal_singular_count = locus.nonreal_count;
    if locus.nonreal_count > 0 {
        cert.failed.push(Condition::Real);
    }
    cert.verdict = cert.recompute_verdict();
    Ok(cert)
}

pub fn is_centrally_seminormal(x: &AffinePresentation, ctx: &Context) -> Result<SeminormalityCertificate> {
    decide(x, Notion::Seminormal, ctx)
}

pub fn is_centrally_weakly_normal(x: &AffinePresentation, ctx: &Context) -> Result<SeminormalityCertificate> {
    decide(x, Notion::WeaklyNormal, ctx)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::curve::AffineChange;
    use crate::parse_poly;

    fn curve(s: &str) -> AffinePresentation {
        AffinePresentation::plane_curve(parse_poly(s, Some(&["x", "y"])).unwrap())
            .unwrap()
            .assume(true, true)
    }

    fn verdict(s: &str) -> (Verdict, Vec<Condition>) {
        let cert = is_centrally_seminormal(&curve(s), &Context::default()).unwrap();
        assert!(cert.is_consistent());
        (cert.verdict, cert.failed_conditions())
    }

    use Condition::*;
    use Verdict::*;

    #[test]
    fn seminormal_examples() {
        assert_eq!(verdict("y^2 - x^2*(x + 1)"), (CentrallySeminormal, vec![]));
        assert_eq!(verdict("y^2 - x^3"), (NotCentrallySeminormal, vec![Ordinary]));
        assert_eq!(verdict("y^2 - (x^2 + 1)^2*x"), (NotCentrallySeminormal, vec![Real]));
        assert_eq!(
            verdict("(x^2 + y^2)^2 - x*(x^2 + 3*y^2)"),
            (NotCentrallySeminormal, vec![Ordinary, TotallyReal])
        );
        assert_eq!(verdict("y^2 - x^2*(x - 1)"), (NotCentrallySeminormal, vec![TotallyReal]));
    }

    #[test]
    fn weakly_normal_examples() {
        let ctx = Context::default();
        let wn = |s: &str| is_centrally_weakly_normal(&curve(s), &ctx).unwrap();
        let tac = wn("y^2 - x^4*(x + 1)");
        assert_eq!(tac.verdict, NotCentrallySeminormal);
        assert_eq!(tac.evidence[0].report.tangent_cone.to_string(), "y^2");
        assert_eq!(tac.notion, Notion::WeaklyNormal);
        assert_eq!(wn("y^2 - x^2*(x + 1)").verdict, CentrallySeminormal);
        assert_eq!(wn("(x^2 + y^2)^2 - x*(x^2 - 3*y^2)").verdict, NotCentrallySeminormal);
    }

    #[test]
    fn missing_hypotheses_give_unsupported() {
        let x = AffinePresentation::plane_curve(parse_poly("y^2 - x^3", Some(&["x", "y"])).unwrap()).unwrap();
        let cert = is_centrally_seminormal(&x, &Context::default()).unwrap();
        assert_eq!(cert.verdict, Unsupported);
        assert!(cert.is_consistent());
    }

    #[test]
    fn tampered_certificate_is_inconsistent() {
        let mut cert = is_centrally_seminormal(&curve("y^2 - x^3"), &Context::default()).unwrap();
        cert.verdict = CentrallySeminormal;
        assert!(!cert.is_consistent());
    }

    #[test]
    fn verdicts_are_affine_invariant() {
        let ctx = Context::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in ["y^2 - x^2*(x + 1)", "y^2 - x^3", "y^2 - x^2*(x - 1)", "y^2 - (x^2 + 1)^2*x"] {
            let x = curve(f);
            let base = verdict(f);
            for _ in 0..3 {
                let g = AffineChange::random(2, &mut rng).pull_back(x.generator().unwrap()).unwrap();
                let moved = AffinePresentation::plane_curve(g).unwrap().assume(true, true);
                let cert = is_centrally_seminormal(&moved, &ctx).unwrap();
                assert_eq!((cert.verdict, cert.failed_conditions()), base, "{f}");
            }
        }
    }
}
