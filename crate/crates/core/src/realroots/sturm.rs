use std::cmp::Ordering;



use crate::scalar::OrderedScalar;

use super::UPoly;

/// An interval endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound<C> {
    NegInf,
    Finite(C),
    PosInf,
}

impl<C: OrderedScalar> Bound<C> {
    fn precedes(&self, other: &Bound<C>) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(_), Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

/// Positive rescaling of `p` by its content.
fn primitive<C: OrderedScalar>(p: &UPoly<C>) -> UPoly<C> {
    if p.is_zero() {
        return p.clone();
    }
    let c = C::positive_content(p.coeffs());
    p.scale(&(C::one() / c))
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`, sign-corrected so
/// that it is a positive multiple of the true remainder.
fn signed_prem<C: OrderedScalar>(a: &UPoly<C>, b: &UPoly<C>) -> UPoly<C> {
    let (da, db) = (a.degree().unwrap_or(0), b.degree().expect("nonzero divisor"));
    if a.degree().is_none() || da < db {
        return a.clone();
    }
    let lc = b.leading_coeff();
    let delta = (da - db + 1) as u32;
    let mut mult = C::one();
    for _ in 0..delta {
        mult = mult * lc.abs();
    }
    // |lc|^delta keeps the sign of the remainder
    a.scale(&mult).rem(b)
}

/// Sturm sequence `p, p', -rem(p, p'), ...` with content removed from every
/// member.
pub fn sturm_sequence<C: OrderedScalar>(p: &UPoly<C>) -> Vec<UPoly<C>> {
    let mut seq = vec![primitive(p)];
    if p.is_zero() {
        return seq;
    }
    let d = primitive(&p.derivative());
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = signed_prem(&seq[n - 2], &seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(primitive(&(-&r)));
    }
    seq
}

fn sign<C: OrderedScalar>(c: &C) -> i8 {
    match c.partial_cmp(&C::zero()) {
        Some(Ordering::Greater) => 1,
        Some(Ordering::Less) => -1,
        _ => 0,
    }
}

fn sign_at<C: OrderedScalar>(p: &UPoly<C>, x: &Bound<C>) -> i8 {
    match x {
        Bound::Finite(v) => sign(&p.eval(v)),
        Bound::PosInf => sign(&p.leading_coeff()),
        Bound::NegInf => {
            let s = sign(&p.leading_coeff());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sign variations of a sequence at `x`, zeros skipped.
pub fn variations<C: OrderedScalar>(seq: &[UPoly<C>], x: &Bound<C>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
///
/// Returns 0 for an empty interval. Panics on the zero polynomial.
pub fn sturm_count<C: OrderedScalar>(p: &UPoly<C>, lo: &Bound<C>, hi: &Bound<C>) -> usize {
    assert!(!p.is_zero(), "sturm_count of the zero polynomial");
    if !lo.precedes(hi) {
        return 0;
    }
    let sf = p.squarefree_part();
    let seq = sturm_sequence(&sf);
    variations(&seq, lo).saturating_sub(variations(&seq, hi))
}

/// Distinct real roots on the whole line.
pub fn real_root_count<C: OrderedScalar>(p: &UPoly<C>) -> usize {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// Cauchy bound: every root has absolute value below the result.
pub fn root_bound<C: OrderedScalar>(p: &UPoly<C>) -> C {
    let lc = p.leading_coeff().abs();
    let m = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs() / lc.clone())
        .fold(C::zero(), |a, b| if b > a { b } else { a });
    m + C::one()
}

/// Sign of `p` at a point, as -1, 0 or 1.
pub fn sign_of<C: OrderedScalar>(p: &UPoly<C>, x: &C) -> i8 {
    sign(&p.eval(x))
}
