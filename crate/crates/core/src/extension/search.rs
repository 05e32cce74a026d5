use serde::Serialize;

use crate::context::Context;
use crate::curve::{centrality_report, is_smooth, AffinePresentation};
use crate::error::{Error, Result};

use super::bijectivity::{central_bijectivity_check, central_singular_points, BijectivityCertificate};
use super::presentation::{adjoin_to, ExtensionPresentation};
use super::IntegralElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "reason", rename_all = "kebab-case")]
pub enum CandidateOutcome {
    Accepted,
    Rejected,
    Undecided,
    /// The relation does not hold or the name clashes.
    Invalid(String),
    /// Mentions variables that never became available.
    Unresolved(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchStep {
    pub pass: usize,
    pub candidate: String,
    pub outcome: CandidateOutcome,
    pub evidence: Option<BijectivityCertificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchLabel {
    /// The result is smooth, hence the normalization, and it is the
    /// w_c-normalization.
    Normalization,
    /// Largest extension generated by the catalog whose central locus maps
    /// bijectively.
    CatalogClosure,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    #[serde(skip)]
    pub presentation: ExtensionPresentation,
    pub accepted: Vec<String>,
    pub steps: Vec<SearchStep>,
    pub smooth: bool,
    pub label: SearchLabel,
    /// Whether the result is central, when that could be decided.
    pub central: Option<bool>,
}

impl SearchResult {
    pub fn outcome(&self, name: &str) -> Option<&CandidateOutcome> {
        self.steps.iter().rev().find(|s| s.candidate == name).map(|s| &s.outcome)
    }

    pub fn has_undecided(&self) -> bool {
        self.steps
            .iter()
            .any(|s| matches!(s.outcome, CandidateOutcome::Undecided))
    }
}

/// Adjoins every catalog element whose addition keeps the central locus in
/// bijection with that of `x`, until nothing more can be added. Elements
/// that mention variables of other candidates wait until those are adjoined.
pub fn wc_normalization_search(
    x: &AffinePresentation,
    catalog: &[IntegralElement],
    ctx: &Context,
) -> Result<SearchResult> {
    if !x.kind().is_curve() {
        return Err(Error::invalid("the search runs on curves"));
    }
    let (_, points) = central_singular_points(x, ctx)?;
    let mut current = ExtensionPresentation::identity(x);
    let mut pending: Vec<&IntegralElement> = catalog.iter().collect();
    let mut steps = Vec::new();
    let mut accepted = Vec::new();
    for pass in 1.. {
        let mut progress = false;
        let mut next_pending = Vec::new();
        for cand in pending {
            if current.vars().contains(&cand.name) {
                steps.push(SearchStep {
                    pass,
                    candidate: cand.name.clone(),
                    outcome: CandidateOutcome::Invalid(format!("variable {} is already in use", cand.name)),
                    evidence: None,
                });
                continue;
            }
            if cand.referenced_vars().iter().any(|v| !current.vars().contains(v)) {
                next_pending.push(cand);
                continue;
            }
            let next = match adjoin_to(&current, std::slice::from_ref(cand), ctx) {
                Ok(n) => n,
                Err(Error::Precondition(msg)) => {
                    steps.push(SearchStep {
                        pass,
                        candidate: cand.name.clone(),
                        outcome: CandidateOutcome::Invalid(msg),
                        evidence: None,
                    });
                    continue;
                }
                Err(e) => return Err(e),
            };
            let cert = central_bijectivity_check(&next, &points, ctx)?;
            let outcome = match cert.verdict {
                Some(true) => {
                    current = next;
                    accepted.push(cand.name.clone());
                    progress = true;
                    CandidateOutcome::Accepted
                }
                Some(false) => CandidateOutcome::Rejected,
                None => CandidateOutcome::Undecided,
            };
            steps.push(SearchStep {
                pass,
                candidate: cand.name.clone(),
                outcome,
                evidence: Some(cert),
            });
        }
        pending = next_pending;
        if !progress || pending.is_empty() {
            for cand in &pending {
                let missing: Vec<String> = cand
                    .referenced_vars()
                    .into_iter()
                    .filter(|v| !current.vars().contains(v))
                    .collect();
                steps.push(SearchStep {
                    pass,
                    candidate: cand.name.clone(),
                    outcome: CandidateOutcome::Unresolved(missing.join(", ")),
                    evidence: None,
                });
            }
            break;
        }
    }
    let y = current.upstairs()?;
    let smooth = is_smooth(&y, ctx)?;
    let central = if smooth {
        Some(true)
    } else {
        match centrality_report(&y, ctx) {
            Ok(r) => Some(r.is_central),
            Err(Error::ResourceLimit { steps }) => return Err(Error::ResourceLimit { steps }),
            Err(_) => None,
        }
    };
    Ok(SearchResult {
        presentation: current,
        accepted,
        steps,
        smooth,
        label: if smooth {
            SearchLabel::Normalization
        } else {
            SearchLabel::CatalogClosure
        },
        central,
    })
}
