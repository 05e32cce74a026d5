use super::*;
use crate::curve::{is_smooth, AffinePresentation, VarietyKind};
use crate::groebner::{eliminate, Ideal};
use crate::poly::MonomialOrder;
use crate::{parse_poly, Context, Error, Poly, Rational};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn curve(s: &str) -> AffinePresentation {
    AffinePresentation::plane_curve(parse_poly(s, Some(&["x", "y"])).unwrap())
        .unwrap()
        .assume(true, true)
}

fn variety(gens: &[&str], vars: &[&str], kind: VarietyKind) -> AffinePresentation {
    let gens = gens.iter().map(|g| parse_poly(g, Some(vars)).unwrap()).collect();
    AffinePresentation::new(gens, vars, kind).unwrap().assume(true, true)
}

/// Element `name = num/den` with `relation`, all read over `vars + [name]`.
fn elem(name: &str, num: &str, den: &str, relation: &str, vars: &[&str]) -> IntegralElement {
    let mut all: Vec<&str> = vars.to_vec();
    all.push(name);
    let p = |s: &str| parse_poly(s, Some(&all)).unwrap();
    IntegralElement::new(name, p(num), p(den), p(relation)).unwrap()
}

const XY: &[&str] = &["x", "y"];
const GROSPOINT: &str = "y^4 - x*(x^2 + y^2)";
const TRIFOLIUM: &str = "(x^2 + y^2)^2 - x*(x^2 - 3*y^2)";
const TACNODE: &str = "y^2 - x^4*(x + 1)";

#[test]
fn verify_relation_examples() {
    let ctx = Context::default();
    let gros = curve(GROSPOINT);
    let e = elem("t", "y^2", "x", "t^2 - t - x", XY);
    assert!(verify_integral_relation(gros.ideal(), &e, &ctx).unwrap());

    let tri = curve(TRIFOLIUM);
    let e = elem("t", "y^3", "x", "t^2 + 3*y*t + x^2*y^2 + 2*y^4 - x*y^2", XY);
    assert!(verify_integral_relation(tri.ideal(), &e, &ctx).unwrap());
    let flipped = elem("t", "y^3", "x", "t^2 - 3*y*t + x^2*y^2 + 2*y^4 - x*y^2", XY);
    assert!(!verify_integral_relation(tri.ideal(), &flipped, &ctx).unwrap());

    let cusp = curve("y^2 - x^3");
    let e = elem("t", "y", "x", "t^2 - t", XY);
    assert!(!verify_integral_relation(cusp.ideal(), &e, &ctx).unwrap());

    let bad = elem("t", "y", "y^2 - x^3", "t^2", XY);
    assert!(matches!(
        verify_integral_relation(cusp.ideal(), &bad, &ctx),
        Err(Error::Precondition(_))
    ));
    let p = |s: &str| parse_poly(s, Some(&["x", "y", "t"])).unwrap();
    assert!(IntegralElement::new("t", p("y"), p("x"), p("2*t^2 - x")).is_err());
}

#[test]
fn adjoin_grospoint_matches_hand_presentation() {
    let ctx = Context::default();
    let x = curve(GROSPOINT);
    let e = adjoin(&x, &[elem("t", "y^2", "x", "t^2 - t - x", XY)], &ctx).unwrap();
    let hand = Ideal::new(
        ["y^4 - x*(x^2 + y^2)", "t^2 - t - x", "x*t - y^2", "y^2*t - (x^2 + y^2)"]
            .iter()
            .map(|g| parse_poly(g, Some(&["x", "y", "t"])).unwrap())
            .collect(),
        &["x", "y", "t"],
        MonomialOrder::GrevLex,
    )
    .unwrap();
    assert!(e.ideal.same_ideal(&hand, &ctx).unwrap());
    assert!(e.contraction_holds(&ctx).unwrap());
    assert!(e.relations_hold(&ctx).unwrap());
}

#[test]
fn adjoin_kollar() {
    let ctx = Context::default();
    let xyz = &["x", "y", "z"];
    let x = variety(&["x^3 - y^3*(1 + z^2)"], xyz, VarietyKind::Surface);
    let e = adjoin(&x, &[elem("t", "x", "y", "t^3 - (1 + z^2)", xyz)], &ctx).unwrap();
    let down = eliminate(&e.ideal, &["t", "y", "z"], &ctx).unwrap();
    assert!(down.contains(&parse_poly("t^3 - (1 + z^2)", Some(&["t", "y", "z"])).unwrap(), &ctx).unwrap());
    assert!(e.ideal.contains(&parse_poly("x - y*t", Some(e.vars())).unwrap(), &ctx).unwrap());
    assert!(e.contraction_holds(&ctx).unwrap());
}

#[test]
fn adjoin_whitney_gives_a_plane() {
    let ctx = Context::default();
    let xyz = &["x", "y", "z"];
    let x = variety(&["x^2 - y^2*z"], xyz, VarietyKind::Surface);
    let e = adjoin(&x, &[elem("t", "x", "y", "t^2 - z", xyz)], &ctx).unwrap();
    let plane = Ideal::new(
        vec![
            parse_poly("x - y*t", Some(e.vars())).unwrap(),
            parse_poly("z - t^2", Some(e.vars())).unwrap(),
        ],
        e.vars(),
        MonomialOrder::GrevLex,
    )
    .unwrap();
    assert!(e.ideal.same_ideal(&plane, &ctx).unwrap());
    let yt = eliminate(&e.ideal, &["y", "t"], &ctx).unwrap();
    assert!(yt.generators().is_empty());
    assert!(is_smooth(&e.upstairs().unwrap(), &ctx).unwrap());
    assert!(e.contraction_holds(&ctx).unwrap());
}

#[test]
fn fiber_examples() {
    let ctx = Context::default();
    let origin = vec![r(0), r(0)];
    let gros = adjoin(&curve(GROSPOINT), &[elem("t", "y^2", "x", "t^2 - t - x", XY)], &ctx).unwrap();
    let f = fiber_over_point(&gros, &origin, &ctx).unwrap();
    let pts: Vec<_> = f.real_points.iter().map(|p| p.as_rational().unwrap().to_vec()).collect();
    assert_eq!(pts, vec![vec![r(0), r(0), r(0)], vec![r(0), r(0), r(1)]]);
    assert_eq!(f.nonreal_count, 0);

    let xyz = &["x", "y", "z"];
    let surf = variety(&["(y^2 + z^2)^2 - x*(x^2 + y^2 + z^2)"], xyz, VarietyKind::Surface);
    let e = adjoin(&surf, &[elem("t", "y^2 + z^2", "x", "t^2 - t - x", xyz)], &ctx).unwrap();
    let f = fiber_over_point(&e, &[r(0), r(0), r(0)], &ctx).unwrap();
    assert_eq!(f.real_points.len(), 2);

    let cusp = adjoin(&curve("y^2 - x^3"), &[elem("t", "y", "x", "t^2 - x", XY)], &ctx).unwrap();
    let f = fiber_over_point(&cusp, &origin, &ctx).unwrap();
    assert_eq!(f.real_points.len(), 1);
    assert_eq!(f.nonreal_count, 0);
    assert!(f.real_points.len() <= f.complex_count);

    assert!(matches!(
        fiber_over_point(&cusp, &[r(1), r(2)], &ctx),
        Err(Error::PointNotOnVariety(_))
    ));
}

#[test]
fn bijectivity_examples() {
    let ctx = Context::default();
    let origin = vec![vec![r(0), r(0)]];
    let cusp = adjoin(&curve("y^2 - x^3"), &[elem("t", "y", "x", "t^2 - x", XY)], &ctx).unwrap();
    assert_eq!(central_bijectivity_check(&cusp, &origin, &ctx).unwrap().verdict, Some(true));

    let node = adjoin(&curve("y^2 - x^2*(x + 1)"), &[elem("t", "y", "x", "t^2 - x - 1", XY)], &ctx).unwrap();
    let cert = central_bijectivity_check(&node, &origin, &ctx).unwrap();
    assert_eq!(cert.verdict, Some(false));
    assert_eq!(cert.checked[0].central_fiber_size, Some(2));
    assert!(cert.checked[0].fiber.iter().all(|f| f.method == CentralityMethod::SmoothShortcut));

    let xyz = &["x", "y", "z"];
    let whitney = variety(&["x^2 - y^2*z"], xyz, VarietyKind::Surface)
        .with_central_points(vec![vec![r(0), r(0), r(1)]]);
    let e = adjoin(&whitney, &[elem("t", "x", "y", "t^2 - z", xyz)], &ctx).unwrap();
    let cert = central_bijectivity_check(&e, &whitney.assertions.central_points, &ctx).unwrap();
    assert_eq!(cert.verdict, Some(false));
    assert_eq!(cert.recompute_verdict(), cert.verdict);
}

#[test]
fn continuity_examples() {
    let ctx = Context::default();
    let tac = curve(TACNODE);
    let by_x = elem("t", "y", "x", "t^2 - x^2*(x + 1)", XY);
    let by_x2 = elem("t", "y", "x^2", "t^2 - x - 1", XY);
    assert_eq!(continuity_decision(&tac, &by_x, &ctx).unwrap().continuous, Some(true));
    assert_eq!(continuity_decision(&tac, &by_x2, &ctx).unwrap().continuous, Some(false));

    let tri = curve(TRIFOLIUM);
    let f = elem("t", "y^3", "x", "t^2 + 3*y*t + x^2*y^2 + 2*y^4 - x*y^2", XY);
    assert_eq!(continuity_decision(&tri, &f, &ctx).unwrap().continuous, Some(true));

    let node = curve("y^2 - x^2*(x + 1)");
    let f = elem("t", "y", "x", "t^2 - x - 1", XY);
    assert_eq!(continuity_decision(&node, &f, &ctx).unwrap().continuous, Some(false));
}

#[test]
fn continuity_is_invariant_under_affine_changes() {
    use crate::curve::AffineChange;
    use rand::SeedableRng;
    let ctx = Context::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (f, num, den, rel, expected) in [
        ("y^2 - x^2*(x + 1)", "y", "x", "t^2 - x - 1", false),
        ("y^2 - x^3", "y", "x", "t^2 - x", true),
    ] {
        let x = curve(f);
        let e = elem("t", num, den, rel, XY);
        for _ in 0..3 {
            let ch = AffineChange::random(2, &mut rng);
            let xyt = ["x", "y", "t"];
            let tvar = Poly::var("t", &xyt).unwrap();
            let pull = |p: &Poly| -> Poly {
                let images: Vec<Poly> = ch
                    .matrix
                    .iter()
                    .zip(&ch.shift)
                    .map(|(row, b)| {
                        let mut acc = Poly::constant(b.clone(), &xyt);
                        for (v, a) in XY.iter().zip(row) {
                            acc = &acc + &Poly::var(v, &xyt).unwrap().scale(a);
                        }
                        acc
                    })
                    .chain([tvar.clone()])
                    .collect();
                p.with_vars(&xyt).unwrap().compose(&images).unwrap()
            };
            let moved_x = AffinePresentation::plane_curve(ch.pull_back(x.generator().unwrap()).unwrap())
                .unwrap()
                .assume(true, true);
            let moved_e = IntegralElement::new("t", pull(&e.f.num), pull(&e.f.den), pull(&e.relation)).unwrap();
            assert_eq!(
                continuity_decision(&moved_x, &moved_e, &ctx).unwrap().continuous,
                Some(expected),
                "{f}"
            );
        }
    }
}

fn tacnode_catalog() -> Vec<IntegralElement> {
    vec![
        elem("t", "y", "x", "t^2 - x^2*(x + 1)", XY),
        elem("s", "y", "x^2", "s^2 - x - 1", XY),
    ]
}

#[test]
fn search_examples() {
    let ctx = Context::default();
    let cusp = wc_normalization_search(&curve("y^2 - x^3"), &[elem("t", "y", "x", "t^2 - x", XY)], &ctx).unwrap();
    assert_eq!(cusp.accepted, vec!["t"]);
    assert!(cusp.smooth);
    assert_eq!(cusp.label, SearchLabel::Normalization);

    let node_x = curve("y^2 - x^2*(x + 1)");
    let node = wc_normalization_search(&node_x, &[elem("t", "y", "x", "t^2 - x - 1", XY)], &ctx).unwrap();
    assert!(node.accepted.is_empty());
    assert_eq!(node.outcome("t"), Some(&CandidateOutcome::Rejected));
    assert!(node.presentation.ideal.same_ideal(node_x.ideal(), &ctx).unwrap());
    assert_eq!(node.central, Some(true));

    let tac = wc_normalization_search(&curve(TACNODE), &tacnode_catalog(), &ctx).unwrap();
    assert_eq!(tac.accepted, vec!["t"]);
    assert_eq!(tac.outcome("s"), Some(&CandidateOutcome::Rejected));
    let direct = adjoin(&curve(TACNODE), &tacnode_catalog()[..1], &ctx).unwrap();
    assert!(tac.presentation.same_as(&direct, &ctx).unwrap());
}

#[test]
fn search_is_confluent() {
    let ctx = Context::default();
    let mut cat = tacnode_catalog();
    let a = wc_normalization_search(&curve(TACNODE), &cat, &ctx).unwrap();
    cat.reverse();
    let b = wc_normalization_search(&curve(TACNODE), &cat, &ctx).unwrap();
    assert!(a.presentation.same_as(&b.presentation, &ctx).unwrap());
    assert_eq!(a.accepted, b.accepted);
}

#[test]
fn search_follows_a_chain() {
    let ctx = Context::default();
    let t = elem("t", "y^2", "x", "t^2 - t - x", XY);
    let s = elem("s", "y", "t", "s^2 - (t - 1)", &["x", "y", "t"]);
    let fwd = wc_normalization_search(&curve(GROSPOINT), &[t.clone(), s.clone()], &ctx).unwrap();
    assert_eq!(fwd.accepted, vec!["t", "s"]);
    assert!(fwd.smooth);
    let back = wc_normalization_search(&curve(GROSPOINT), &[s, t], &ctx).unwrap();
    assert_eq!(back.accepted, vec!["t", "s"]);
    assert!(fwd.presentation.same_as(&back.presentation, &ctx).unwrap());
    assert!(fwd.presentation.contraction_holds(&ctx).unwrap());
}

#[test]
fn hereditary_examples() {
    let ctx = Context::default();
    let xyz = &["x", "y", "z"];
    let kollar = variety(&["x^3 - y^3*(1 + z^2)"], xyz, VarietyKind::Surface);
    let e = adjoin(&kollar, &[elem("t", "x", "y", "t^3 - (1 + z^2)", xyz)], &ctx).unwrap();
    let w = vec![parse_poly("y", Some(e.vars())).unwrap()];
    let values = specialization_values(&r(1), &ctx);
    let cert = hereditary_birational_check(&e, &w, "z", &values, &ctx).unwrap();
    assert_eq!((cert.degree, cert.birational), (3, false));
    assert_eq!(cert.samples.len(), 3);
    assert_eq!(cert.samples[0].upstairs, 3);

    let cusp = adjoin(&curve("y^2 - x^3"), &[elem("t", "y", "x", "t^2 - x", XY)], &ctx).unwrap();
    let w: Vec<Poly> = ["x", "y", "t"].iter().map(|g| parse_poly(g, Some(cusp.vars())).unwrap()).collect();
    assert!(matches!(
        hereditary_birational_check(&cusp, &w, "x", &values, &ctx),
        Err(Error::Precondition(_))
    ));

    let cartan = variety(&["x^3 - (x^2 + y^2)*z"], xyz, VarietyKind::Surface);
    let e = adjoin(&cartan, &[elem("t", "y*z", "x", "t^2 - x*z + z^2", xyz)], &ctx).unwrap();
    let w: Vec<Poly> = ["x", "z", "t"].iter().map(|g| parse_poly(g, Some(e.vars())).unwrap()).collect();
    let cert = hereditary_birational_check(&e, &w, "y", &specialization_values(&r(1), &ctx), &ctx).unwrap();
    assert_eq!((cert.degree, cert.birational), (1, true));
}
