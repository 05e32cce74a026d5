use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::groebner::{solve_zero_dim, Ideal, SolvedPoint};
use crate::poly::MonomialOrder;
use crate::{Poly, Rational};

use super::presentation::{jacobian, minors, AffinePresentation};
use super::singular::singular_points;

/// Outcome of the sphere probe around one real point of a curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeResult {
    #[serde(serialize_with = "crate::cli::report::ser_point")]
    pub point: Vec<Rational>,
    pub isolated: bool,
    /// Squared probe radius.
    #[serde(serialize_with = "crate::cli::report::ser_rational")]
    pub eps2: Rational,
    /// Certified lower bound for the least positive squared distance from
    /// the point to a critical point of the distance function; absent when
    /// there is none.
    #[serde(serialize_with = "crate::cli::report::ser_opt_rational")]
    pub delta2_lower: Option<Rational>,
    /// Real points on the sphere of squared radius `eps2`.
    pub sphere_points: usize,
    /// Sphere point counts at `eps2 / 2` and `eps2 / 4`.
    pub reruns: Vec<usize>,
}

impl ProbeResult {
    pub fn is_stable(&self) -> bool {
        self.reruns.iter().all(|&c| (c == 0) == self.isolated)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralityReport {
    #[serde(serialize_with = "crate::cli::report::ser_points")]
    pub isolated_points: Vec<Vec<Rational>>,
    pub is_central: bool,
    pub probes: Vec<ProbeResult>,
    pub nonreal_singular_count: usize,
}

fn squared_distance(point: &[Rational], vars: &[String]) -> Result<Poly> {
    let mut acc = Poly::zero(vars);
    for (v, c) in vars.iter().zip(point) {
        let d = &Poly::var(v, vars)? - &Poly::constant(c.clone(), vars);
        acc = &acc + &(&d * &d);
    }
    Ok(acc)
}

/// Lower bound for the squared distance from `point` to `q`, or `None` when
/// `q` is `point`.
fn distance_lower_bound(q: &SolvedPoint, point: &[Rational], dist: &Poly) -> Result<Option<Rational>> {
    match q {
        SolvedPoint::Rational(c) => {
            let d = dist.evaluate(c)?;
            Ok((!d.is_zero()).then_some(d))
        }
        SolvedPoint::Algebraic(a) => {
            let h = a.compose(dist)?;
            if a.sign_of(&h) != Ordering::Greater {
                debug_assert!(point.len() == a.coords.len());
                return Ok(None);
            }
            Ok(Some(a.positive_lower_bound(&h)))
        }
    }
}

fn sphere_count(x: &AffinePresentation, dist: &Poly, eps2: &Rational, ctx: &Context) -> Result<usize> {
    let vars = x.vars();
    let sphere = dist - &Poly::constant(eps2.clone(), vars);
    let mut gens = x.ideal().generators().to_vec();
    gens.push(sphere);
    let sol = solve_zero_dim(&Ideal::new(gens, vars, MonomialOrder::GrevLex)?, ctx)?;
    Ok(sol.real_points.len())
}

/// Decides whether a real rational point of a curve is isolated in its real
/// locus, by counting real points on a sphere whose radius lies below every
/// critical value of the distance to the point.
pub fn isolated_point_probe(x: &AffinePresentation, point: &[Rational], ctx: &Context) -> Result<ProbeResult> {
    if !x.kind().is_curve() {
        return Err(Error::invalid("the isolated-point probe applies to curves"));
    }
    x.require_point(point)?;
    let vars = x.vars().to_vec();
    let n = vars.len();

    // rank [J; x - p] <= n - 1 marks the critical points of the distance
    let mut mat = jacobian(x.ideal().generators(), &vars)?;
    let row: Vec<Poly> = vars
        .iter()
        .zip(point)
        .map(|(v, c)| Ok(&Poly::var(v, &vars)? - &Poly::constant(c.clone(), &vars)))
        .collect::<Result<_>>()?;
    mat.push(row);
    let mut gens = x.ideal().generators().to_vec();
    gens.extend(minors(&mat, n));
    let critical = Ideal::new(gens, &vars, MonomialOrder::GrevLex)?;
    let sol = solve_zero_dim(&critical, ctx).map_err(|e| match e {
        Error::NotZeroDimensional(_) => Error::NotZeroDimensional(
            "distance-critical system is not finite (a component lies on a sphere around the point)".into(),
        ),
        e => e,
    })?;

    let dist = squared_distance(point, &vars)?;
    let mut delta2: Option<Rational> = None;
    for q in &sol.real_points {
        if let Some(d) = distance_lower_bound(q, point, &dist)? {
            delta2 = Some(match delta2 {
                Some(cur) if cur <= d => cur,
                _ => d,
            });
        }
    }
    let two = Rational::from_integer(2.into());
    let mut eps2 = Rational::one();
    if let Some(d) = &delta2 {
        while &eps2 >= d {
            eps2 = &eps2 / &two;
        }
    }
    debug_assert!(eps2.is_positive());
    let sphere_points = sphere_count(x, &dist, &eps2, ctx)?;
    let reruns = [&eps2 / &two, &eps2 / Rational::from_integer(4.into())]
        .iter()
        .map(|e| sphere_count(x, &dist, e, ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbeResult {
        point: point.to_vec(),
        isolated: sphere_points == 0,
        eps2,
        delta2_lower: delta2,
        sphere_points,
        reruns,
    })
}

/// Isolated real points of a curve. Away from its finitely many singular
/// points a curve is locally a real arc, so only singular points can be
/// isolated.
pub fn centrality_report(x: &AffinePresentation, ctx: &Context) -> Result<CentralityReport> {
    let locus = singular_points(x, ctx)?;
    let points = locus.rational_points()?;
    let probes = points
        .par_iter()
        .map(|p| isolated_point_probe(x, p, ctx))
        .collect::<Result<Vec<_>>>()?;
    let isolated_points: Vec<Vec<Rational>> = probes.iter().filter(|p| p.isolated).map(|p| p.point.clone()).collect();
    Ok(CentralityReport {
        is_central: isolated_points.is_empty(),
        isolated_points,
        probes,
        nonreal_singular_count: locus.nonreal_count,
    })
}
