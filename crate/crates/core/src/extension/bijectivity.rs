use rayon::prelude::*;
use serde::Serialize;

use crate::context::Context;
use crate::curve::{centrality_report, is_smooth, isolated_point_probe, AffinePresentation, CentralityReport};
use crate::error::{Error, Result};
use crate::Rational;

use super::presentation::{adjoin, fiber_over_point, ExtensionPresentation};
use super::IntegralElement;

/// How the centrality of a point of `Y` was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralityMethod {
    /// `Y` has no singular point, so every real point is central.
    SmoothShortcut,
    Asserted,
    /// The only real preimage of a central point: the central locus of `Y`
    /// maps onto that of `X`.
    SolePreimage,
    Probe,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberPointCheck {
    pub point: String,
    pub central: Option<bool>,
    pub method: CentralityMethod,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckedPoint {
    #[serde(serialize_with = "crate::cli::report::ser_point")]
    pub point: Vec<Rational>,
    pub fiber: Vec<FiberPointCheck>,
    pub nonreal_count: usize,
    /// Number of central fiber points, when every fiber point was decided.
    pub central_fiber_size: Option<usize>,
}

impl CheckedPoint {
    fn known_central(&self) -> usize {
        self.fiber.iter().filter(|f| f.central == Some(true)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BijectivityCertificate {
    pub checked: Vec<CheckedPoint>,
    /// `None` when some fiber point could not be decided.
    pub verdict: Option<bool>,
}

impl BijectivityCertificate {
    pub fn recompute_verdict(&self) -> Option<bool> {
        if self
            .checked
            .iter()
            .any(|c| c.known_central() >= 2 || c.central_fiber_size == Some(0))
        {
            return Some(false);
        }
        if self.checked.iter().any(|c| c.central_fiber_size.is_none()) {
            return None;
        }
        Some(true)
    }
}

fn check_point(
    y: &AffinePresentation,
    smooth: bool,
    e: &ExtensionPresentation,
    a: &[Rational],
    ctx: &Context,
) -> Result<CheckedPoint> {
    let fiber = fiber_over_point(e, a, ctx)?;
    let sole = fiber.real_points.len() == 1;
    let mut checks = Vec::with_capacity(fiber.real_points.len());
    for b in &fiber.real_points {
        let coords = b.as_rational();
        let (central, method) = if smooth {
            (Some(true), CentralityMethod::SmoothShortcut)
        } else if coords.is_some_and(|c| e.asserted_central.iter().any(|p| p == c)) {
            (Some(true), CentralityMethod::Asserted)
        } else if sole {
            (Some(true), CentralityMethod::SolePreimage)
        } else {
            match coords {
                Some(c) if y.kind().is_curve() => match isolated_point_probe(y, c, ctx) {
                    Ok(probe) => (Some(!probe.isolated), CentralityMethod::Probe),
                    Err(Error::ResourceLimit { steps }) => return Err(Error::ResourceLimit { steps }),
                    Err(_) => (None, CentralityMethod::Undecided),
                },
                _ => (None, CentralityMethod::Undecided),
            }
        };
        checks.push(FiberPointCheck {
            point: b.to_string(),
            central,
            method,
        });
    }
    let size = checks
        .iter()
        .try_fold(0usize, |acc, c| c.central.map(|yes| acc + usize::from(yes)));
    Ok(CheckedPoint {
        point: a.to_vec(),
        fiber: checks,
        nonreal_count: fiber.nonreal_count,
        central_fiber_size: size,
    })
}

/// Whether the central locus of `Y` maps bijectively onto that of `X` over
/// the given central points of `X`.
pub fn central_bijectivity_check(
    e: &ExtensionPresentation,
    central_points: &[Vec<Rational>],
    ctx: &Context,
) -> Result<BijectivityCertificate> {
    let y = e.upstairs()?;
    let smooth = is_smooth(&y, ctx)?;
    let checked = central_points
        .par_iter()
        .map(|a| check_point(&y, smooth, e, a, ctx))
        .collect::<Result<Vec<_>>>()?;
    let mut cert = BijectivityCertificate { checked, verdict: None };
    cert.verdict = cert.recompute_verdict();
    Ok(cert)
}

/// Central singular points of a curve. Over its other central points the
/// curve is normal, so an integral extension does not change the fiber.
pub fn central_singular_points(x: &AffinePresentation, ctx: &Context) -> Result<(CentralityReport, Vec<Vec<Rational>>)> {
    let report = centrality_report(x, ctx)?;
    let points = report
        .probes
        .iter()
        .filter(|p| !p.isolated)
        .map(|p| p.point.clone())
        .collect();
    Ok((report, points))
}

#[derive(Clone, Debug, Serialize)]
pub struct ContinuityCertificate {
    pub element: IntegralElement,
    pub centrality: CentralityReport,
    pub bijectivity: BijectivityCertificate,
    pub continuous: Option<bool>,
}

/// Whether an integral rational function on a curve extends continuously to
/// its central locus.
pub fn continuity_decision(x: &AffinePresentation, element: &IntegralElement, ctx: &Context) -> Result<ContinuityCertificate> {
    if !x.kind().is_curve() {
        return Err(Error::invalid("continuity is decided on curves"));
    }
    let (centrality, points) = central_singular_points(x, ctx)?;
    let e = adjoin(x, std::slice::from_ref(element), ctx)?;
    let bijectivity = central_bijectivity_check(&e, &points, ctx)?;
    Ok(ContinuityCertificate {
        element: element.clone(),
        centrality,
        continuous: bijectivity.verdict,
        bijectivity,
    })
}
