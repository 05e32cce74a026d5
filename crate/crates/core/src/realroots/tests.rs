use proptest::prelude::*;

use super::*;
use crate::{parse_poly, Poly, Rational};

fn up(c: &[i64]) -> UPoly<Rational> {
    UPoly::from_i64(c)
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn all(p: &UPoly<Rational>) -> usize {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

#[test]
fn sturm_count_examples() {
    assert_eq!(all(&up(&[0, -1, 0, 1])), 3); // t^3 - t
    assert_eq!(all(&up(&[1, 0, 1])), 0); // t^2 + 1
    assert_eq!(all(&up(&[-2, 0, 0, 1])), 1); // t^3 - 2
}

#[test]
fn sturm_count_half_open_interval() {
    let p = up(&[0, -1, 0, 1]); // roots -1, 0, 1
    assert_eq!(sturm_count(&p, &Bound::Finite(r(-1)), &Bound::Finite(r(1))), 2);
    assert_eq!(sturm_count(&p, &Bound::Finite(r(-2)), &Bound::Finite(r(-1))), 1);
    assert_eq!(sturm_count(&p, &Bound::Finite(r(1)), &Bound::Finite(r(-1))), 0);
    // repeated roots are counted once
    let sq = &p * &p;
    assert_eq!(all(&sq), 3);
}

#[test]
fn sturm_over_floats() {
    let p = UPoly::<f64>::new(vec![-2.0, 0.0, 1.0]);
    assert_eq!(sturm_count(&p, &Bound::Finite(0.0), &Bound::Finite(2.0)), 1);
}

#[test]
fn isolate_examples() {
    let iso = isolate_roots(&up(&[-1, 0, 1]));
    let exact: Vec<_> = iso.intervals.iter().map(|i| i.exact.clone().unwrap()).collect();
    assert_eq!(exact, vec![r(-1), r(1)]);

    let iso = isolate_roots(&up(&[-2, 0, 1]));
    assert_eq!(iso.len(), 2);
    for iv in &iso.intervals {
        assert!(iv.exact.is_none());
        let two = r(2);
        let fine = refine(&up(&[-2, 0, 1]), iv, &Rational::new(1.into(), 1000.into()));
        let (lo2, hi2) = (&fine.lo * &fine.lo, &fine.hi * &fine.hi);
        assert!((lo2 < two && hi2 > two) || (lo2 > two && hi2 < two));
    }

    let iso = isolate_roots(&up(&[0, 0, 1]));
    assert_eq!(iso.len(), 1);
    assert_eq!(iso.intervals[0].exact, Some(r(0)));
}

#[test]
fn isolate_detects_rational_roots_with_denominators() {
    // (3t - 1)(2t + 5)(t^2 - 3)
    let p = &(&up(&[-1, 3]) * &up(&[5, 2])) * &up(&[-3, 0, 1]);
    let iso = isolate_roots(&p);
    assert_eq!(iso.len(), 4);
    let exact: Vec<_> = iso.intervals.iter().filter_map(|i| i.exact.clone()).collect();
    assert_eq!(exact, vec![Rational::new((-5).into(), 2.into()), Rational::new(1.into(), 3.into())]);
}

#[test]
fn squarefree_examples() {
    assert_eq!(up(&[0, 0, 1]).squarefree_part(), up(&[0, 1]));
    assert_eq!(up(&[0, -1, 0, 1]).squarefree_part(), up(&[0, -1, 0, 1]));
    let p = &(&up(&[-1, 1]) * &up(&[-1, 1])) * &up(&[2, 1]);
    assert_eq!(p.squarefree_part(), &up(&[-1, 1]) * &up(&[2, 1]));
}

#[test]
fn resultant_examples() {
    // Sylvester rows [1, 0, -x^3], [1, 0, 0], [0, 1, 0]: determinant -x^3
    let f = parse_poly("y^2 - x^3", Some(&["x", "y"])).unwrap();
    let g = parse_poly("y", Some(&["x", "y"])).unwrap();
    let res = resultant(&f, &g, "y").unwrap();
    assert_eq!(res, parse_poly("-x^3", Some(&["x"])).unwrap());
    assert_eq!(res.vars(), &["x"]);

    let a = parse_poly("t - a", Some(&["a", "b", "t"])).unwrap();
    let b = parse_poly("t - b", Some(&["a", "b", "t"])).unwrap();
    assert_eq!(resultant(&a, &b, "t").unwrap(), parse_poly("a - b", Some(&["a", "b"])).unwrap());

    let c = "t^2 + 1".parse::<Poly>().unwrap();
    assert!(resultant(&c, &c, "t").unwrap().is_zero());
    assert_eq!(up(&[1, 0, 1]).resultant(&up(&[1, 0, 1])), r(0));
}

#[test]
fn binary_form_examples() {
    let xy = ["x", "y"];
    let lines = |s: &str| binary_form_lines(&parse_poly(s, Some(&xy)).unwrap()).unwrap();
    assert_eq!(lines("y^2 - x^2"), (2, 2));
    assert_eq!(lines("y^2 + x^2"), (2, 0));
    assert_eq!(lines("-x^3 - 3*x*y^2"), (3, 1));
    assert_eq!(lines("y^2"), (1, 1));
    assert_eq!(lines("x^2*y"), (2, 2));
    assert_eq!(
        binary_form_lines(&parse_poly("x^2 + y", Some(&xy)).unwrap()),
        Err(crate::Error::NotHomogeneous)
    );
}

/// Polynomial with prescribed distinct integer roots and a factor with no
/// real roots.
fn with_known_roots(roots: &[i64], mult: &[u32], pos_quad: Option<i64>) -> UPoly<Rational> {
    let mut p = up(&[1]);
    for (root, &m) in roots.iter().zip(mult) {
        for _ in 0..m {
            p = &p * &up(&[-root, 1]);
        }
    }
    if let Some(c) = pos_quad {
        p = &p * &up(&[c, 1, 1]); // t^2 + t + c has no real root for c >= 1
    }
    p
}

proptest! {
    #[test]
    fn isolation_count_matches_sturm_and_oracle(
        roots in prop::collection::btree_set(-6i64..7, 0..5),
        mult in prop::collection::vec(1u32..3, 5),
        quad in prop::option::of(1i64..5),
        scale in 1i64..4,
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let p = with_known_roots(&roots, &mult, quad).scale(&Rational::new(scale.into(), 3.into()));
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let iso = isolate_roots(&p);
        prop_assert_eq!(iso.len(), roots.len());
        prop_assert_eq!(all(&p), roots.len());
        let exact: Vec<Rational> = iso.intervals.iter().map(|i| i.exact.clone().unwrap()).collect();
        let want: Vec<Rational> = roots.iter().map(|&x| r(x)).collect();
        prop_assert_eq!(exact, want);
    }

    #[test]
    fn isolation_intervals_each_hold_one_root(coeffs in prop::collection::vec(-9i64..10, 2..7)) {
        let p = up(&coeffs);
        prop_assume!(p.degree().unwrap_or(0) > 0);
        let iso = isolate_roots(&p);
        prop_assert_eq!(iso.len(), all(&p));
        for w in iso.intervals.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
        for iv in &iso.intervals {
            if let Some(x) = &iv.exact {
                prop_assert!(p.eval(x) == r(0));
            } else {
                prop_assert_eq!(sturm_count(&p, &Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone())), 1);
                prop_assert!(p.eval(&iv.hi) != r(0));
            }
        }
    }

    #[test]
    fn sturm_is_additive_on_coprime_squarefree(
        a in prop::collection::vec(-6i64..7, 2..6),
        b in prop::collection::vec(-6i64..7, 2..6),
    ) {
        let p = up(&a);
        let q = up(&b);
        prop_assume!(p.degree().unwrap_or(0) > 0 && q.degree().unwrap_or(0) > 0);
        let (p, q) = (p.squarefree_part(), q.squarefree_part());
        prop_assume!(p.gcd(&q).degree() == Some(0));
        prop_assert_eq!(all(&(&p * &q)), all(&p) + all(&q));
        let cut = Bound::Finite(r(1));
        prop_assert_eq!(
            sturm_count(&(&p * &q), &Bound::NegInf, &cut),
            sturm_count(&p, &Bound::NegInf, &cut) + sturm_count(&q, &Bound::NegInf, &cut)
        );
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in prop::collection::vec(-4i64..5, 2..5),
        b in prop::collection::vec(-4i64..5, 2..5),
        shared in prop::option::of(prop::collection::vec(-3i64..4, 2..4)),
    ) {
        let (mut p, mut q) = (up(&a), up(&b));
        if let Some(s) = shared {
            let s = up(&s);
            p = &p * &s;
            q = &q * &s;
        }
        prop_assume!(p.degree().unwrap_or(0) > 0 && q.degree().unwrap_or(0) > 0);
        let res = p.resultant(&q);
        prop_assert_eq!(res == r(0), p.gcd(&q).degree().unwrap_or(0) > 0);
        // the multivariate route agrees
        let (pm, qm) = (p.to_mpoly("t", &["t"]), q.to_mpoly("t", &["t"]));
        let rm = resultant(&pm, &qm, "t").unwrap();
        prop_assert_eq!(rm.constant_value().unwrap(), res);
    }

    #[test]
    fn binary_form_counts_are_linear_invariants(
        real_lines in prop::collection::vec((-3i64..4, -3i64..4), 1..4),
        conj in 0usize..2,
        m in (-3i64..4, -3i64..4, -3i64..4, -3i64..4),
    ) {
        let vars = ["u", "v"];
        let mut form = Poly::one(&vars);
        let mut distinct_dirs: Vec<(i64, i64)> = Vec::new();
        for (a, b) in real_lines {
            prop_assume!((a, b) != (0, 0));
            let g = num_integer::gcd(a, b);
            let (mut a, mut b) = (a / g, b / g);
            if a < 0 || (a == 0 && b < 0) { a = -a; b = -b; }
            if !distinct_dirs.contains(&(a, b)) { distinct_dirs.push((a, b)); }
            let line = parse_poly(&format!("{a}*u + {b}*v"), Some(&vars)).unwrap();
            form = &form * &line;
        }
        for _ in 0..conj {
            form = &form * &parse_poly("u^2 + v^2", Some(&vars)).unwrap();
        }
        let expected = (distinct_dirs.len() + 2 * conj.min(1), distinct_dirs.len());
        prop_assert!(expected.1 <= expected.0);
        prop_assert_eq!(binary_form_lines(&form).unwrap(), expected);
        let (a, b, c, d) = m;
        prop_assume!(a * d - b * c != 0);
        let images = [
            parse_poly(&format!("{a}*u + {b}*v"), Some(&vars)).unwrap(),
            parse_poly(&format!("{c}*u + {d}*v"), Some(&vars)).unwrap(),
        ];
        let moved = form.compose(&images).unwrap();
        prop_assert_eq!(binary_form_lines(&moved).unwrap(), expected);
    }
}
