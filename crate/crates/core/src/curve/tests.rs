use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::{parse_poly, Context, Error, Poly, Rational};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn curve(s: &str) -> AffinePresentation {
    AffinePresentation::plane_curve(parse_poly(s, Some(&["x", "y"])).unwrap()).unwrap()
}

fn curve_in(s: &str, vars: &[&str]) -> AffinePresentation {
    AffinePresentation::plane_curve(parse_poly(s, Some(vars)).unwrap()).unwrap()
}

fn origin() -> Vec<Rational> {
    vec![r(0), r(0)]
}

const NODE: &str = "y^2 - x^2*(x + 1)";
const CUSP: &str = "y^2 - x^3";
const ACNODE: &str = "y^2 - x^2*(x - 1)";
const TRIFOLIUM: &str = "(x^2 + y^2)^2 - x*(x^2 - 3*y^2)";
const GROSPOINT: &str = "y^4 - x*(x^2 + y^2)";

#[test]
fn singular_points_examples() {
    let ctx = Context::default();
    for (f, real, nonreal) in [(CUSP, 1, 0), ("y^2 - (x^2 + 1)^2*x", 0, 2), (NODE, 1, 0)] {
        let locus = singular_points(&curve(f), &ctx).unwrap();
        assert_eq!((locus.real_points.len(), locus.nonreal_count), (real, nonreal), "{f}");
        if real == 1 {
            assert_eq!(locus.rational_points().unwrap(), vec![origin()]);
        }
    }
}

#[test]
fn non_reduced_curve_is_rejected() {
    let ctx = Context::default();
    assert!(matches!(
        singular_points(&curve("(y - x^2)^2*(y + 1)"), &ctx),
        Err(Error::NonReduced(_))
    ));
}

#[test]
fn classify_examples() {
    let node = classify_singularity(&curve(NODE), &origin()).unwrap();
    assert_eq!(node.multiplicity, 2);
    assert_eq!(node.tangent_cone, parse_poly("y^2 - x^2", Some(&["x", "y"])).unwrap());
    assert_eq!(node.classification, Classification::RealNode);

    let cusp = classify_singularity(&curve(CUSP), &origin()).unwrap();
    assert_eq!((cusp.multiplicity, cusp.distinct_tangents), (2, 1));
    assert_eq!(cusp.tangent_cone.to_string(), "y^2");
    assert_eq!(cusp.classification, Classification::NonOrdinary);

    let tri = classify_singularity(&curve(TRIFOLIUM), &origin()).unwrap();
    assert_eq!((tri.multiplicity, tri.distinct_tangents, tri.real_tangents), (3, 3, 3));
    assert_eq!(tri.classification, Classification::NonOrdinary);

    let acnode = classify_singularity(&curve(ACNODE), &origin()).unwrap();
    assert_eq!(acnode.classification, Classification::ComplexNode);

    let smooth = classify_singularity(&curve(NODE), &[r(-1), r(0)]).unwrap();
    assert_eq!(smooth.classification, Classification::Smooth);

    assert!(matches!(
        classify_singularity(&curve(NODE), &[r(1), r(1)]),
        Err(Error::PointNotOnVariety(_))
    ));
}

#[test]
fn is_smooth_examples() {
    let ctx = Context::default();
    assert!(is_smooth(&curve("y"), &ctx).unwrap());
    assert!(!is_smooth(&curve(CUSP), &ctx).unwrap());
    let txy = ["t", "x", "y"];
    let gens = ["y^2 - x^3", "x*t - y", "t^2 - x", "y*t - x^2"]
        .iter()
        .map(|g| parse_poly(g, Some(&txy)).unwrap())
        .collect();
    let y = AffinePresentation::new(gens, &txy, VarietyKind::SpaceCurve).unwrap();
    assert!(is_smooth(&y, &ctx).unwrap());
}

#[test]
fn probe_examples() {
    let ctx = Context::default();
    let acnode = isolated_point_probe(&curve(ACNODE), &origin(), &ctx).unwrap();
    assert!(acnode.isolated);
    assert!(acnode.is_stable());

    let gros = isolated_point_probe(&curve(GROSPOINT), &origin(), &ctx).unwrap();
    assert!(!gros.isolated);
    assert!(gros.is_stable());

    let ty = curve_in("y^2 - t^2*(t - 1)", &["t", "y"]);
    assert!(isolated_point_probe(&ty, &origin(), &ctx).unwrap().isolated);
    let p = isolated_point_probe(&ty, &[r(1), r(0)], &ctx).unwrap();
    assert!(!p.isolated);
    assert!(p.is_stable());

    // real tangent cone y^2 but an isolated real point
    let hidden = isolated_point_probe(&curve("(y - x^2)^2 + x^6"), &origin(), &ctx).unwrap();
    assert!(hidden.isolated);

    for probe in [&acnode, &gros, &p, &hidden] {
        if let Some(d) = &probe.delta2_lower {
            assert!(&probe.eps2 < d);
        }
    }
}

#[test]
fn centrality_examples() {
    let ctx = Context::default();
    let gros = centrality_report(&curve(GROSPOINT), &ctx).unwrap();
    assert!(gros.is_central);

    let acnode = centrality_report(&curve(ACNODE), &ctx).unwrap();
    assert!(!acnode.is_central);
    assert_eq!(acnode.isolated_points, vec![origin()]);

    let cusp = centrality_report(&curve(CUSP), &ctx).unwrap();
    assert!(cusp.is_central);
    assert_eq!(cusp.probes[0].sphere_points, 2);
}

#[test]
fn sphere_counts_are_even_on_plane_fixtures() {
    let ctx = Context::default();
    for f in [NODE, CUSP, ACNODE, TRIFOLIUM, GROSPOINT, "y^2 - x^4*(x + 1)"] {
        let report = centrality_report(&curve(f), &ctx).unwrap();
        for probe in &report.probes {
            assert_eq!(probe.sphere_points % 2, 0, "{f}");
            assert!(probe.is_stable(), "{f}");
        }
    }
}

#[test]
fn irrational_singular_points_are_unsupported() {
    let ctx = Context::default();
    // nodes at (±√2, 0)
    let x = curve("y^2 - (x^2 - 2)^2");
    assert!(matches!(centrality_report(&x, &ctx), Err(Error::UnsupportedIrrational(_))));
}

#[test]
fn space_curve_probe() {
    let ctx = Context::default();
    // twisted cubic through the origin: not isolated
    let xyz = ["x", "y", "z"];
    let gens = ["y - x^2", "z - x^3"].iter().map(|g| parse_poly(g, Some(&xyz)).unwrap()).collect();
    let c = AffinePresentation::new(gens, &xyz, VarietyKind::SpaceCurve).unwrap();
    let zero = vec![r(0), r(0), r(0)];
    assert!(!isolated_point_probe(&c, &zero, &ctx).unwrap().isolated);
    assert!(singular_points(&c, &ctx).unwrap().real_points.is_empty());
}

fn classes(x: &AffinePresentation, ctx: &Context) -> Vec<(u64, usize, usize, Classification)> {
    let locus = singular_points(x, ctx).unwrap();
    let mut out: Vec<_> = locus
        .rational_points()
        .unwrap()
        .iter()
        .map(|p| {
            let rep = classify_singularity(x, p).unwrap();
            (rep.multiplicity, rep.distinct_tangents, rep.real_tangents, rep.classification)
        })
        .collect();
    out.sort_by_key(|t| format!("{t:?}"));
    out
}

#[test]
fn classification_is_affine_invariant() {
    let ctx = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in [NODE, CUSP, ACNODE, TRIFOLIUM, "y^2 - x^4*(x + 1)", "(x^2 + y^2)^2 - x*(x^2 + 3*y^2)"] {
        let x = curve(f);
        let base = classes(&x, &ctx);
        for _ in 0..3 {
            let change = AffineChange::random(2, &mut rng);
            let moved = AffinePresentation::plane_curve(change.pull_back(x.generator().unwrap()).unwrap()).unwrap();
            assert_eq!(classes(&moved, &ctx), base, "{f}");
        }
    }
}

#[test]
fn affine_preimage_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f: Poly = parse_poly(NODE, Some(&["x", "y"])).unwrap();
    let change = AffineChange::random(2, &mut rng);
    let g = change.pull_back(&f).unwrap();
    let pre = change.preimage(&origin()).unwrap();
    assert_eq!(g.evaluate(&pre).unwrap(), r(0));
    let moved = AffinePresentation::plane_curve(g).unwrap();
    assert_eq!(classify_singularity(&moved, &pre).unwrap().classification, Classification::RealNode);
    assert_eq!(AffineChange::identity(2).pull_back(&f).unwrap(), f);
}
