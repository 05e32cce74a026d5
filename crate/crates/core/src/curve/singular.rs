use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::groebner::{solve_zero_dim, SolvedPoint};
use crate::realroots::binary_form_lines;
use crate::{Poly, Rational};

use super::presentation::{AffinePresentation, VarietyKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Smooth,
    RealNode,
    ComplexNode,
    NonOrdinary,
}

/// Local data of a plane curve at a rational point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityReport {
    #[serde(serialize_with = "crate::cli::report::ser_point")]
    pub point: Vec<Rational>,
    pub multiplicity: u64,
    #[serde(serialize_with = "crate::cli::report::ser_display")]
    pub tangent_cone: Poly,
    pub distinct_tangents: usize,
    pub real_tangents: usize,
    pub classification: Classification,
}

impl SingularityReport {
    /// The classification implied by the numeric fields alone.
    pub fn implied_classification(&self) -> Classification {
        match (self.multiplicity, self.distinct_tangents, self.real_tangents) {
            (1, _, _) => Classification::Smooth,
            (2, 2, 2) => Classification::RealNode,
            (2, 2, 0) => Classification::ComplexNode,
            _ => Classification::NonOrdinary,
        }
    }
}

/// Singular points of the complexification of a curve.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub real_points: Vec<SolvedPoint>,
    pub nonreal_count: usize,
    pub complex_count: usize,
    pub seed: u64,
}

impl SingularLocus {
    /// Real singular points, all of which must be rational.
    pub fn rational_points(&self) -> Result<Vec<Vec<Rational>>> {
        self.real_points
            .iter()
            .map(|p| match p {
                SolvedPoint::Rational(c) => Ok(c.clone()),
                SolvedPoint::Algebraic(_) => Err(Error::UnsupportedIrrational(p.to_string())),
            })
            .collect()
    }
}

pub fn singular_points(x: &AffinePresentation, ctx: &Context) -> Result<SingularLocus> {
    if !x.kind().is_curve() {
        return Err(Error::invalid("singular points are computed for curves only"));
    }
    x.check_squarefree(ctx)?;
    let sing = x.singular_ideal()?;
    let sol = solve_zero_dim(&sing, ctx).map_err(|e| match e {
        Error::NotZeroDimensional(_) => Error::NotZeroDimensional("singular scheme of the curve is not finite".into()),
        e => e,
    })?;
    Ok(SingularLocus {
        real_points: sol.real_points,
        nonreal_count: sol.nonreal_count,
        complex_count: sol.complex_count,
        seed: sol.seed,
    })
}

pub fn classify_singularity(x: &AffinePresentation, point: &[Rational]) -> Result<SingularityReport> {
    let f = match (x.kind(), x.generator()) {
        (VarietyKind::PlaneCurve, Some(f)) => f,
        _ => return Err(Error::invalid("classification needs a plane curve")),
    };
    if f.evaluate(point)? != Rational::from_integer(0.into()) {
        return Err(Error::PointNotOnVariety(AffinePresentation::format_point(point)));
    }
    let (k, cone) = f.translate(point)?.lowest_form()?;
    let (distinct, real) = binary_form_lines(&cone)?;
    let mut report = SingularityReport {
        point: point.to_vec(),
        multiplicity: k,
        tangent_cone: cone,
        distinct_tangents: distinct,
        real_tangents: real,
        classification: Classification::Smooth,
    };
    report.classification = report.implied_classification();
    Ok(report)
}

/// Whether the complexification has no singular point at all.
pub fn is_smooth(x: &AffinePresentation, ctx: &Context) -> Result<bool> {
    Ok(x.singular_ideal()?.groebner(ctx)?.is_one())
}
