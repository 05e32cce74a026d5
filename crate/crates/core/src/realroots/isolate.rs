use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::Rational;

use super::sturm::{root_bound, sturm_sequence, variations, Bound};
use super::UPoly;

/// One isolated real root: the root lies in the open interval `(lo, hi)`,
/// or equals `exact` (then `lo = hi = exact`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsolatingInterval {
    #[serde(serialize_with = "crate::cli::report::ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "crate::cli::report::ser_rational")]
    pub hi: Rational,
    #[serde(serialize_with = "crate::cli::report::ser_opt_rational")]
    pub exact: Option<Rational>,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Pairwise disjoint isolating intervals, in increasing order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootIsolation {
    pub intervals: Vec<IsolatingInterval>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Integer coefficients with gcd 1 and positive leading coefficient.
pub(crate) fn integer_primitive(p: &UPoly<Rational>) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

struct Isolator {
    poly: UPoly<Rational>,
    seq: Vec<UPoly<Rational>>,
    lead: BigInt,
}

impl Isolator {
    fn new(p: &UPoly<Rational>) -> Self {
        let poly = p.squarefree_part();
        let seq = sturm_sequence(&poly);
        let ints = integer_primitive(&poly);
        Isolator {
            poly,
            seq,
            lead: ints.last().cloned().unwrap_or_else(BigInt::one),
        }
    }

    /// Roots in `(lo, hi]`.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        let v = |x: &Rational| variations(&self.seq, &Bound::Finite(x.clone()));
        v(lo).saturating_sub(v(hi))
    }

    fn collect(&self, lo: Rational, hi: Rational, out: &mut Vec<IsolatingInterval>) {
        let mut stack = vec![(lo, hi)];
        while let Some((lo, hi)) = stack.pop() {
            match self.count(&lo, &hi) {
                0 => {}
                1 => out.push(self.finish(lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / Rational::from_integer(2.into());
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
    }

    /// Turns an interval `(lo, hi]` with one root into an isolating interval,
    /// detecting rational roots exactly.
    fn finish(&self, lo: Rational, hi: Rational) -> IsolatingInterval {
        if self.poly.eval(&hi).is_zero() {
            return exact(hi);
        }
        // a rational root has the form k / lead; shrink until at most one such
        // value remains inside
        let step = Rational::new(BigInt::one(), self.lead.abs());
        let (mut lo, mut hi) = (lo, hi);
        // move `lo` off a neighbouring root
        while self.poly.eval(&lo).is_zero() {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            if self.poly.eval(&mid).is_zero() {
                return exact(mid);
            }
            if self.count(&mid, &hi) == 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        while &hi - &lo >= step {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            if self.poly.eval(&mid).is_zero() {
                return exact(mid);
            }
            if self.count(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let k = (&lo / &step).floor() + Rational::one();
        let candidate = k * &step;
        if candidate > lo && candidate < hi && self.poly.eval(&candidate).is_zero() {
            return exact(candidate);
        }
        IsolatingInterval { lo, hi, exact: None }
    }
}

fn exact(r: Rational) -> IsolatingInterval {
    IsolatingInterval {
        lo: r.clone(),
        hi: r.clone(),
        exact: Some(r),
    }
}

/// Isolates all distinct real roots of `p` by Sturm bisection. Rational
/// roots are returned exactly.
pub fn isolate_roots(p: &UPoly<Rational>) -> RootIsolation {
    assert!(!p.is_zero(), "isolate_roots of the zero polynomial");
    let iso = Isolator::new(p);
    let mut out = Vec::new();
    if iso.poly.degree().unwrap_or(0) > 0 {
        let b = root_bound(&iso.poly);
        iso.collect(-b.clone(), b, &mut out);
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    RootIsolation { intervals: out }
}

/// Shrinks an isolating interval of a root of `p` below `width`.
pub fn refine(p: &UPoly<Rational>, iv: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    if iv.exact.is_some() {
        return iv.clone();
    }
    let sf = p.squarefree_part();
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = sf.eval(&lo).signum();
    while &hi - &lo >= *width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let v = sf.eval(&mid);
        if v.is_zero() {
            return exact(mid);
        }
        if v.signum() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    IsolatingInterval { lo, hi, exact: None }
}

/// Interval enclosure of `p` over `[lo, hi]` (naive Horner interval
/// arithmetic).
pub fn eval_interval(p: &UPoly<Rational>, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc = (Rational::zero(), Rational::zero());
    for c in p.coeffs().iter().rev() {
        let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let mn = prods.iter().min().unwrap().clone();
        let mx = prods.iter().max().unwrap().clone();
        acc = (mn + c, mx + c);
    }
    acc
}
