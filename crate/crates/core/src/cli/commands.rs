use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Value};

use crate::context::Context;
use crate::curve::{centrality_report, singular_points, AffinePresentation, VarietyKind};
use crate::error::{Error, Result};
use crate::groebner::PointSummary;
use crate::extension::{
    adjoin_to, central_bijectivity_check, continuity_decision, fiber_over_point, hereditary_birational_check,
    specialization_values, wc_normalization_search, ExtensionPresentation, FiberSummary,
};
use crate::seminorm::{is_centrally_seminormal, Verdict};

use super::corpus;
use super::report::{Report, Status, SCHEMA};
use super::spec_file::VarietySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Adjoin,
    Fiber,
    Continuity,
    WcSearch,
    Hereditary,
    VerifyPaper,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Adjoin => "adjoin",
            Command::Fiber => "fiber",
            Command::Continuity => "continuity",
            Command::WcSearch => "wc-search",
            Command::Hereditary => "hereditary",
            Command::VerifyPaper => "verify-paper",
        }
    }
}

/// Result of one command before it is wrapped into a report.
pub struct Outcome {
    pub status: Status,
    pub certificates: Value,
    pub text: String,
}

impl Outcome {
    fn new(decided: bool, certificates: Value, text: String) -> Self {
        let status = if decided { Status::Verdicts } else { Status::Undecided };
        Outcome { status, certificates, text }
    }
}

/// Runs `command` on the spec text read from `input` and wraps the result
/// into a report. Errors become reports too.
pub fn execute(command: Command, input: Option<(&str, &str)>, ctx: &Context) -> Report {
    let start = Instant::now();
    let result = match (command, input) {
        (Command::VerifyPaper, _) => Ok(verify_paper(ctx)),
        (_, None) => Err(Error::invalid(format!("{} needs a spec file", command.name()))),
        (_, Some((_, text))) => VarietySpec::parse(text).and_then(|spec| run(command, &spec, ctx)),
    };
    let (status, certificates, text, error) = match result {
        Ok(o) => (o.status, o.certificates, o.text, None),
        Err(e) => (Status::of_error(&e), Value::Null, String::new(), Some(e.to_string())),
    };
    Report {
        schema: SCHEMA,
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: command.name().to_string(),
        input: input.map(|(name, _)| name.to_string()),
        seed: ctx.seed,
        max_steps: ctx.max_steps,
        steps_used: ctx.steps_used(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        status,
        exit_code: status.exit_code(),
        error,
        certificates,
        text,
    }
}

pub fn run(command: Command, spec: &VarietySpec, ctx: &Context) -> Result<Outcome> {
    let x = spec.presentation()?;
    match command {
        Command::Analyze => analyze(&x, ctx),
        Command::Adjoin => adjoin_cmd(&x, spec, ctx),
        Command::Fiber => fiber_cmd(&x, spec, ctx),
        Command::Continuity => continuity_cmd(&x, spec, ctx),
        Command::WcSearch => search_cmd(&x, spec, ctx),
        Command::Hereditary => hereditary_cmd(&x, spec, ctx),
        Command::VerifyPaper => Ok(verify_paper(ctx)),
    }
}

fn names(v: &[String]) -> String {
    v.join(", ")
}

/// The serialized name of a unit enum variant.
pub(crate) fn tag<T: serde::Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn bool_word(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undecided",
    }
}

fn analyze(x: &AffinePresentation, ctx: &Context) -> Result<Outcome> {
    if !x.kind().is_curve() {
        return Err(Error::invalid("analyze runs on curves"));
    }
    x.check_squarefree(ctx)?;
    let locus = singular_points(x, ctx)?;
    let centrality = centrality_report(x, ctx)?;
    let mut text = String::new();
    writeln!(text, "singular points: {} real, {} nonreal", locus.real_points.len(), locus.nonreal_count).unwrap();
    for p in &locus.real_points {
        writeln!(text, "  {p}").unwrap();
    }
    writeln!(text, "central: {}", bool_word(Some(centrality.is_central))).unwrap();
    for p in &centrality.isolated_points {
        writeln!(text, "  isolated point {}", AffinePresentation::format_point(p)).unwrap();
    }
    let stable = centrality.probes.iter().all(|p| p.is_stable());
    if !stable {
        writeln!(text, "  probe counts changed when the radius shrank").unwrap();
    }
    let mut decided = stable;
    let seminormality = if x.kind() == VarietyKind::PlaneCurve {
        let cert = is_centrally_seminormal(x, ctx)?;
        for ev in &cert.evidence {
            let r = &ev.report;
            writeln!(
                text,
                "  {}: multiplicity {}, tangent cone {}, {} tangents ({} real), {}",
                AffinePresentation::format_point(&r.point),
                r.multiplicity,
                r.tangent_cone,
                r.distinct_tangents,
                r.real_tangents,
                tag(&r.classification)
            )
            .unwrap();
        }
        writeln!(text, "verdict: {}", tag(&cert.verdict)).unwrap();
        let failed: Vec<String> = cert.failed_conditions().iter().map(tag).collect();
        if !failed.is_empty() {
            writeln!(text, "failed conditions: {}", failed.join(", ")).unwrap();
        }
        if let Some(reason) = &cert.unsupported_reason {
            writeln!(text, "unsupported: {reason}").unwrap();
        }
        decided &= cert.verdict != Verdict::Unsupported;
        json!({ "certificate": cert, "consistent": cert.is_consistent() })
    } else {
        writeln!(text, "seminormality is decided for plane curves only").unwrap();
        Value::Null
    };
    let singular = json!({
        "real_points": locus.real_points.iter().map(PointSummary::from).collect::<Vec<_>>(),
        "nonreal_count": locus.nonreal_count,
        "complex_count": locus.complex_count,
    });
    Ok(Outcome::new(
        decided,
        json!({ "singular_locus": singular, "centrality": centrality, "seminormality": seminormality }),
        text,
    ))
}

/// Adjoins the candidates one after another, so later ones may mention
/// earlier names.
fn adjoin_all(x: &AffinePresentation, spec: &VarietySpec, ctx: &Context) -> Result<ExtensionPresentation> {
    if spec.candidates.is_empty() {
        return Err(Error::invalid("no CANDIDATES given"));
    }
    let mut e = ExtensionPresentation::identity(x);
    for c in &spec.candidates {
        e = adjoin_to(&e, std::slice::from_ref(c), ctx)?;
    }
    e.asserted_central = spec.upstairs_central.clone();
    Ok(e)
}

fn adjoin_cmd(x: &AffinePresentation, spec: &VarietySpec, ctx: &Context) -> Result<Outcome> {
    let e = adjoin_all(x, spec, ctx)?;
    let gb: Vec<String> = e.ideal.groebner(ctx)?.elements().iter().map(|g| g.to_string()).collect();
    let contraction = e.contraction_holds(ctx)?;
    let relations = e.relations_hold(ctx)?;
    let mut text = format!("ring of Y in ({}), reduced grevlex basis:\n", names(e.vars()));
    for g in &gb {
        writeln!(text, "  {g}").unwrap();
    }
    writeln!(text, "contraction to X: {}", bool_word(Some(contraction))).unwrap();
    writeln!(text, "relations hold: {}", bool_word(Some(relations))).unwrap();
    Ok(Outcome::new(
        true,
        json!({
            "vars": e.vars(),
            "x_vars": e.x_vars,
            "t_vars": e.t_vars,
            "elements": e.elements,
            "groebner_basis": gb,
            "contraction_holds": contraction,
            "relations_hold": relations,
        }),
        text,
    ))
}

fn fiber_cmd(x: &AffinePresentation, spec: &VarietySpec, ctx: &Context) -> Result<Outcome> {
    if spec.points.is_empty() {
        return Err(Error::invalid("no POINTS given"));
    }
    let e = adjoin_all(x, spec, ctx)?;
    let mut fibers = Vec::new();
    let mut text = String::new();
    for p in &spec.points {
        let f = fiber_over_point(&e, p, ctx)?;
        let s = FiberSummary::from(&f);
        writeln!(
            text,
            "fiber over {}: {} real, {} nonreal",
            AffinePresentation::format_point(p),
            s.real_points.len(),
            s.nonreal_count
        )
        .unwrap();
        for q in &s.real_points {
            writeln!(text, "  {q}").unwrap();
        }
        fibers.push(s);
    }
    Ok(Outcome::new(true, json!({ "vars": e.vars(), "fibers": fibers }), text))
}

fn continuity_cmd(x: &AffinePresentation, spec: &VarietySpec, ctx: &Context) -> Result<Outcome> {
    if spec.candidates.is_empty() {
        return Err(Error::invalid("no CANDIDATES given"));
    }
    let mut certs = Vec::new();
    let mut text = String::new();
    let mut decided = true;
    for c in &spec.candidates {
        if c.referenced_vars().iter().any(|v| !spec.vars.contains(v)) {
            return Err(Error::invalid(format!("candidate {} must be a function on X", c.name)));
        }
        let continuous = if x.kind().is_curve() {
            let cert = continuity_decision(x, c, ctx)?;
            let v = cert.continuous;
            certs.push(json!({ "candidate": c.name, "continuous": v, "certificate": cert }));
            v
        } else {
            if spec.central_points.is_empty() {
                return Err(Error::invalid("surfaces need asserted central points of X"));
            }
            let mut e = ExtensionPresentation::identity(x);
            e = adjoin_to(&e, std::slice::from_ref(c), ctx)?;
            let cert = central_bijectivity_check(&e, &spec.central_points, ctx)?;
            let v = cert.verdict;
            certs.push(json!({ "candidate": c.name, "continuous": v, "certificate": { "bijectivity": cert } }));
            v
        };
        decided &= continuous.is_some();
        writeln!(text, "{} = {}: continuous on the central locus: {}", c.name, c.f, bool_word(continuous)).unwrap();
    }
    Ok(Outcome::new(decided, Value::Array(certs), text))
}

fn search_cmd(x: &AffinePresentation, spec: &VarietySpec, ctx: &Context) -> Result<Outcome> {
    let result = wc_normalization_search(x, &spec.candidates, ctx)?;
    let gb: Vec<String> = result.presentation.ideal.groebner(ctx)?.elements().iter().map(|g| g.to_string()).collect();
    let mut text = String::new();
    for s in &result.steps {
        let o = serde_json::to_value(&s.outcome).unwrap_or_default();
        writeln!(text, "pass {}: {} {}", s.pass, s.candidate, o["outcome"].as_str().unwrap_or_default()).unwrap();
    }
    writeln!(text, "accepted: [{}]", result.accepted.join(", ")).unwrap();
    writeln!(text, "smooth: {}", bool_word(Some(result.smooth))).unwrap();
    writeln!(text, "result in ({}):", names(result.presentation.vars())).unwrap();
    for g in &gb {
        writeln!(text, "  {g}").unwrap();
    }
    Ok(Outcome::new(
        !result.has_undecided(),
        json!({ "search": result, "vars": result.presentation.vars(), "groebner_basis": gb }),
        text,
    ))
}

fn hereditary_cmd(x: &AffinePresentation, spec: &VarietySpec, ctx: &Context) -> Result<Outcome> {
    let (param, pinned) = spec
        .parameter
        .as_ref()
        .ok_or_else(|| Error::invalid("hereditary needs a PARAMETER"))?;
    if spec.subvariety.is_empty() {
        return Err(Error::invalid("hereditary needs a SUBVARIETY"));
    }
    let e = adjoin_all(x, spec, ctx)?;
    let values = specialization_values(pinned, ctx);
    let cert = hereditary_birational_check(&e, &spec.subvariety, param, &values, ctx)?;
    let mut text = format!("image of W: ({})\n", cert.image.join(", "));
    for s in &cert.samples {
        writeln!(text, "  {} = {}: {} points upstairs, {} downstairs", param, s.value, s.upstairs, s.downstairs).unwrap();
    }
    writeln!(text, "degree {}, birational: {}", cert.degree, bool_word(Some(cert.birational))).unwrap();
    Ok(Outcome::new(true, json!(cert), text))
}

fn verify_paper(ctx: &Context) -> Outcome {
    let results = corpus::run_corpus(ctx);
    ctx.charge(results.iter().map(|r| r.steps_used).sum());
    let mut text = String::new();
    for r in &results {
        writeln!(text, "{} {}: {}", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail).unwrap();
    }
    let passed = results.iter().filter(|r| r.pass).count();
    writeln!(text, "{passed}/{} entries pass", results.len()).unwrap();
    let status = if results.iter().any(|r| r.status == Status::ResourceLimit) {
        Status::ResourceLimit
    } else if passed == results.len() {
        Status::Verdicts
    } else {
        Status::Undecided
    };
    Outcome {
        status,
        certificates: json!({ "entries": results, "passed": passed, "total": results.len() }),
        text,
    }
}
