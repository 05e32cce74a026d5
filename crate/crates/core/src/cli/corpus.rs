//! Regression corpus over the bundled fixtures. Each entry is an isolated
//! computation with its own budget.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::context::Context;
use crate::curve::{centrality_report, isolated_point_probe, AffinePresentation, Classification};
use crate::error::{Error, Result};
use crate::extension::{
    adjoin, central_bijectivity_check, fiber_over_point, hereditary_birational_check, specialization_values,
    verify_integral_relation, wc_normalization_search, IntegralElement, SearchLabel,
};
use crate::groebner::{eliminate, Ideal};
use crate::poly::MonomialOrder;
use crate::seminorm::{is_centrally_seminormal, Condition, Verdict};
use crate::{parse_poly, Poly, Rational};

use super::commands::tag;
use super::report::Status;
use super::spec_file::VarietySpec;

pub const FIXTURES: &[(&str, &str)] = &[
    ("acnode", include_str!("../../fixtures/acnode.spec")),
    ("branch-and-point", include_str!("../../fixtures/branch-and-point.spec")),
    ("cartan", include_str!("../../fixtures/cartan.spec")),
    ("cusp", include_str!("../../fixtures/cusp.spec")),
    ("grospoint-chain", include_str!("../../fixtures/grospoint-chain.spec")),
    ("grospoint-curve", include_str!("../../fixtures/grospoint-curve.spec")),
    ("grospoint-surface", include_str!("../../fixtures/grospoint-surface.spec")),
    ("kollar", include_str!("../../fixtures/kollar.spec")),
    ("node", include_str!("../../fixtures/node.spec")),
    ("nonreal-singular", include_str!("../../fixtures/nonreal-singular.spec")),
    ("tacnode", include_str!("../../fixtures/tacnode.spec")),
    ("three-tangents", include_str!("../../fixtures/three-tangents.spec")),
    ("trifolium", include_str!("../../fixtures/trifolium.spec")),
    ("whitney", include_str!("../../fixtures/whitney.spec")),
];

pub fn fixture(name: &str) -> Result<VarietySpec> {
    let text = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::invalid(format!("no fixture named {name}")))?;
    VarietySpec::parse(text)
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub status: Status,
    pub steps_used: u64,
    pub elapsed_ms: u64,
}

type Check = fn(&Context) -> Result<(bool, String)>;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn pt(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&v| r(v)).collect()
}

fn seminormal(name: &str, verdict: Verdict, failed: &[Condition], ctx: &Context) -> Result<(bool, String, Vec<crate::seminorm::PointEvidence>, usize)> {
    let cert = is_centrally_seminormal(&fixture(name)?.presentation()?, ctx)?;
    let got = cert.failed_conditions();
    let ok = cert.verdict == verdict && got == failed && cert.is_consistent();
    let detail = format!(
        "{} [{}]",
        tag(&cert.verdict),
        got.iter().map(tag).collect::<Vec<_>>().join(", ")
    );
    Ok((ok, detail, cert.evidence, cert.nonreal_singular_count))
}

fn semi(name: &str, verdict: Verdict, failed: &[Condition], ctx: &Context) -> Result<(bool, String)> {
    seminormal(name, verdict, failed, ctx).map(|(ok, d, _, _)| (ok, d))
}

fn relation_holds(name: &str, candidate: usize, ctx: &Context) -> Result<bool> {
    let spec = fixture(name)?;
    let x = spec.presentation()?;
    verify_integral_relation(x.ideal(), &spec.candidates[candidate], ctx)
}

fn ideal_of(gens: &[&str], vars: &[String]) -> Result<Ideal<Rational>> {
    let polys = gens.iter().map(|g| parse_poly(g, Some(vars))).collect::<Result<Vec<Poly>>>()?;
    Ideal::new(polys, vars, MonomialOrder::GrevLex)
}

fn entries() -> Vec<(&'static str, Check)> {
    use Condition::*;
    use Verdict::*;
    vec![
        ("seminormal/node", |ctx| semi("node", CentrallySeminormal, &[], ctx)),
        ("seminormal/cusp", |ctx| semi("cusp", NotCentrallySeminormal, &[Ordinary], ctx)),
        ("seminormal/tacnode", |ctx| semi("tacnode", NotCentrallySeminormal, &[Ordinary], ctx)),
        ("seminormal/trifolium", |ctx| {
            let (ok, d, ev, _) = seminormal("trifolium", NotCentrallySeminormal, &[Ordinary], ctx)?;
            let mult: Vec<u64> = ev.iter().map(|e| e.report.multiplicity).collect();
            Ok((ok && mult == [3], format!("{d}, multiplicities {mult:?}")))
        }),
        ("seminormal/three-tangents", |ctx| {
            semi("three-tangents", NotCentrallySeminormal, &[Ordinary, TotallyReal], ctx)
        }),
        ("seminormal/nonreal-singular", |ctx| {
            let (ok, d, _, n) = seminormal("nonreal-singular", NotCentrallySeminormal, &[Real], ctx)?;
            Ok((ok && n == 2, format!("{d}, {n} nonreal singular points")))
        }),
        ("seminormal/acnode", |ctx| {
            let (ok, d, ev, _) = seminormal("acnode", NotCentrallySeminormal, &[TotallyReal], ctx)?;
            let complex_node = ev.len() == 1 && ev[0].report.classification == Classification::ComplexNode;
            Ok((ok && complex_node, d))
        }),
        ("centrality/grospoint-curve", |ctx| {
            let rep = centrality_report(&fixture("grospoint-curve")?.presentation()?, ctx)?;
            let stable = rep.probes.iter().all(|p| p.is_stable());
            Ok((rep.is_central && stable, format!("central {}, stable {stable}", rep.is_central)))
        }),
        ("centrality/acnode", |ctx| {
            let rep = centrality_report(&fixture("acnode")?.presentation()?, ctx)?;
            let stable = rep.probes.iter().all(|p| p.is_stable());
            let ok = !rep.is_central && rep.isolated_points == [pt(&[0, 0])] && stable;
            Ok((ok, format!("isolated {:?}", rep.isolated_points.iter().map(|p| AffinePresentation::format_point(p)).collect::<Vec<_>>())))
        }),
        ("centrality/branch-and-point", |ctx| {
            let spec = fixture("branch-and-point")?;
            let x = spec.presentation()?;
            let probes = spec
                .points
                .iter()
                .map(|p| isolated_point_probe(&x, p, ctx))
                .collect::<Result<Vec<_>>>()?;
            let iso: Vec<bool> = probes.iter().map(|p| p.isolated).collect();
            let ok = iso == [true, false] && probes.iter().all(|p| p.is_stable());
            Ok((ok, format!("isolated at (0, 0): {}, at (1, 0): {}", iso[0], iso[1])))
        }),
        ("adjoin/grospoint-curve", |ctx| {
            let spec = fixture("grospoint-curve")?;
            let e = adjoin(&spec.presentation()?, &spec.candidates[..1], ctx)?;
            let hand = ideal_of(
                &["y^4 - x*(x^2 + y^2)", "t^2 - t - x", "x*t - y^2", "y^2*t - (x^2 + y^2)"],
                e.vars(),
            )?;
            let same = e.ideal.same_ideal(&hand, ctx)?;
            Ok((same, format!("equal to the four-generator ideal: {same}")))
        }),
        ("adjoin/grospoint-surface", |ctx| {
            let spec = fixture("grospoint-surface")?;
            let e = adjoin(&spec.presentation()?, &spec.candidates, ctx)?;
            let hand = ideal_of(
                &[
                    "(y^2 + z^2)^2 - x*(x^2 + y^2 + z^2)",
                    "t^2 - t - x",
                    "x*t - (y^2 + z^2)",
                    "(y^2 + z^2)*t - (x^2 + y^2 + z^2)",
                ],
                e.vars(),
            )?;
            let same = e.ideal.same_ideal(&hand, ctx)?;
            let contraction = e.contraction_holds(ctx)?;
            Ok((same && contraction, format!("equal {same}, contraction {contraction}")))
        }),
        ("fiber/grospoint-curve", |ctx| {
            let spec = fixture("grospoint-curve")?;
            let e = adjoin(&spec.presentation()?, &spec.candidates[..1], ctx)?;
            let f = fiber_over_point(&e, &spec.points[0], ctx)?;
            let mut pts: Vec<Vec<Rational>> = f.real_points.iter().filter_map(|p| p.as_rational().map(<[_]>::to_vec)).collect();
            pts.sort();
            let ok = f.real_points.len() == 2 && pts == [pt(&[0, 0, 0]), pt(&[0, 0, 1])];
            Ok((ok, format!("{} real points over the origin", f.real_points.len())))
        }),
        ("kollar", |ctx| {
            let spec = fixture("kollar")?;
            let e = adjoin(&spec.presentation()?, &spec.candidates, ctx)?;
            let keep = ["t", "y", "z"];
            let down = eliminate(&e.ideal, &keep, ctx)?;
            let has = down.contains(&parse_poly("t^3 - (1 + z^2)", Some(&keep))?, ctx)?;
            let (param, pinned) = spec.parameter.clone().unwrap();
            let cert = hereditary_birational_check(&e, &spec.subvariety, &param, &specialization_values(&pinned, ctx), ctx)?;
            let ok = has && cert.degree == 3 && !cert.birational && cert.samples.len() == 3;
            Ok((ok, format!("relation eliminated: {has}, degree {}", cert.degree)))
        }),
        ("search/cusp", |ctx| {
            let spec = fixture("cusp")?;
            let res = wc_normalization_search(&spec.presentation()?, &spec.candidates, ctx)?;
            let ok = res.accepted == ["t"] && res.smooth && res.label == SearchLabel::Normalization;
            Ok((ok, format!("accepted {:?}, smooth {}", res.accepted, res.smooth)))
        }),
        ("search/node", |ctx| {
            let spec = fixture("node")?;
            let x = spec.presentation()?;
            let res = wc_normalization_search(&x, &spec.candidates, ctx)?;
            let same = res.presentation.ideal.same_ideal(x.ideal(), ctx)?;
            Ok((res.accepted.is_empty() && same, format!("accepted {:?}, result is X: {same}", res.accepted)))
        }),
        ("search/tacnode", |ctx| {
            let spec = fixture("tacnode")?;
            let x = spec.presentation()?;
            let res = wc_normalization_search(&x, &spec.candidates, ctx)?;
            let direct = adjoin(&x, &spec.candidates[..1], ctx)?;
            let same = res.presentation.same_as(&direct, ctx)?;
            let reversed: Vec<IntegralElement> = spec.candidates.iter().rev().cloned().collect();
            let back = wc_normalization_search(&x, &reversed, ctx)?;
            let perm = back.accepted == res.accepted && back.presentation.same_as(&res.presentation, ctx)?;
            let ok = res.accepted == ["t"] && same && perm;
            Ok((ok, format!("accepted {:?}, equals X[y/x]: {same}, permutation invariant: {perm}", res.accepted)))
        }),
        ("search/grospoint-chain", |ctx| {
            let spec = fixture("grospoint-chain")?;
            let res = wc_normalization_search(&spec.presentation()?, &spec.candidates, ctx)?;
            Ok((res.accepted == ["t", "s"] && res.smooth, format!("accepted {:?}", res.accepted)))
        }),
        ("whitney", |ctx| {
            let spec = fixture("whitney")?;
            let e = adjoin(&spec.presentation()?, &spec.candidates, ctx)?;
            let yt = eliminate(&e.ideal, &["y", "t"], ctx)?;
            let zero = yt.generators().iter().all(|g| g.is_zero());
            let cert = central_bijectivity_check(&e, &spec.central_points, ctx)?;
            let ok = zero && cert.verdict == Some(false);
            Ok((ok, format!("zero ideal in (y, t): {zero}, bijective: {}", cert.verdict.map_or("undecided".into(), |b| b.to_string()))))
        }),
        ("cartan", |ctx| {
            let spec = fixture("cartan")?;
            let e = adjoin(&spec.presentation()?, &spec.candidates, ctx)?;
            let (param, pinned) = spec.parameter.clone().unwrap();
            let cert = hereditary_birational_check(&e, &spec.subvariety, &param, &specialization_values(&pinned, ctx), ctx)?;
            Ok((cert.degree == 1 && cert.birational, format!("degree {}", cert.degree)))
        }),
        ("relations", |ctx| {
            let tri = relation_holds("trifolium", 0, ctx)?;
            let curve = relation_holds("grospoint-curve", 0, ctx)?;
            let surface = relation_holds("grospoint-surface", 0, ctx)?;
            let spec = fixture("trifolium")?;
            let good = &spec.candidates[0];
            let vars = spec.upstairs_vars();
            let flipped = parse_poly("t^2 - 3*y*t + x^2*y^2 + 2*y^4 - x*y^2", Some(&vars))?;
            let bad = IntegralElement::new("t", good.f.num.clone(), good.f.den.clone(), flipped)?;
            let corrupted = verify_integral_relation(spec.presentation()?.ideal(), &bad, ctx)?;
            let ok = tri && curve && surface && !corrupted;
            Ok((ok, format!("trifolium {tri}, grospoint curve {curve}, surface {surface}, sign flip {corrupted}")))
        }),
    ]
}

pub fn entry_names() -> Vec<&'static str> {
    entries().into_iter().map(|(n, _)| n).collect()
}

/// Runs every entry in parallel, each with a fresh context carrying the
/// seed and budget of `ctx`.
pub fn run_corpus(ctx: &Context) -> Vec<EntryResult> {
    entries()
        .into_par_iter()
        .map(|(name, check)| {
            let local = Context::new(ctx.seed, ctx.max_steps);
            let start = Instant::now();
            let (pass, detail, status) = match check(&local) {
                Ok((pass, detail)) => (pass, detail, Status::Verdicts),
                Err(e) => (false, e.to_string(), Status::of_error(&e)),
            };
            EntryResult {
                name,
                pass,
                detail,
                status,
                steps_used: local.steps_used(),
                elapsed_ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect()
}
