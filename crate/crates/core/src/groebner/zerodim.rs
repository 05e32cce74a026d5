//! Real and complex solutions of zero-dimensional ideals over the rationals.
//!
//! The ideal is first made radical by adjoining the squarefree part of the
//! minimal polynomial of every coordinate (Seidenberg). A linear form that
//! separates the points is then found, starting with the coordinates and
//! falling back to seeded random combinations; every coordinate is written
//! as a polynomial in that form, so each real root of the form's minimal
//! polynomial gives one real point.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial, MonomialOrder};
use crate::realroots::{eval_interval, isolate_roots, refine, sturm_count, Bound, IsolatingInterval, UPoly};
use crate::Rational;

use super::{GroebnerBasis, Ideal, Terms};

/// A real point with irrational coordinates.
///
/// The point is `(coords[0](θ), …, coords[n-1](θ))` where `θ` is the root of
/// `eliminant` inside `interval`; `θ` is the value of the separating form.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicPoint {
    pub eliminant: UPoly<Rational>,
    pub interval: IsolatingInterval,
    pub coords: Vec<UPoly<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolvedPoint {
    Rational(Vec<Rational>),
    Algebraic(AlgebraicPoint),
}

#[derive(Clone, Debug)]
pub struct ZeroDimSolution {
    pub vars: Vec<String>,
    /// Distinct real solutions.
    pub real_points: Vec<SolvedPoint>,
    /// Distinct complex solutions (real ones included).
    pub complex_count: usize,
    /// Distinct non-real solutions.
    pub nonreal_count: usize,
    /// Coefficients of the separating linear form.
    pub separating_form: Vec<Rational>,
    /// Minimal polynomial of the separating form (squarefree).
    pub eliminant: UPoly<Rational>,
    pub seed: u64,
}

impl SolvedPoint {
    pub fn as_rational(&self) -> Option<&[Rational]> {
        match self {
            SolvedPoint::Rational(p) => Some(p),
            SolvedPoint::Algebraic(_) => None,
        }
    }

    /// Coordinate enclosures of width below `width` (degenerate for rational
    /// points).
    pub fn boxes(&self, width: &Rational) -> Vec<(Rational, Rational)> {
        match self {
            SolvedPoint::Rational(p) => p.iter().map(|c| (c.clone(), c.clone())).collect(),
            SolvedPoint::Algebraic(a) => a.boxes(width),
        }
    }

    /// Exact sign of `f` at the point.
    pub fn sign_of(&self, f: &MPoly<Rational>) -> Result<Ordering> {
        match self {
            SolvedPoint::Rational(p) => Ok(f.evaluate(p)?.cmp(&Rational::zero())),
            SolvedPoint::Algebraic(a) => Ok(a.sign_of(&a.compose(f)?)),
        }
    }
}

impl AlgebraicPoint {
    pub fn boxes(&self, width: &Rational) -> Vec<(Rational, Rational)> {
        let mut iv = self.interval.clone();
        loop {
            let boxes: Vec<_> = self.coords.iter().map(|g| eval_interval(g, &iv.lo, &iv.hi)).collect();
            if boxes.iter().all(|(lo, hi)| hi - lo < *width) || iv.exact.is_some() {
                return boxes;
            }
            iv = refine(&self.eliminant, &iv, &(iv.width() / Rational::from_integer(4.into())));
        }
    }

    /// `f(coords(θ))` as a univariate polynomial in `θ`, reduced modulo the
    /// eliminant.
    pub fn compose(&self, f: &MPoly<Rational>) -> Result<UPoly<Rational>> {
        if f.nvars() != self.coords.len() {
            return Err(Error::invalid("polynomial and point dimensions differ"));
        }
        let mut acc = UPoly::zero();
        for (m, c) in f.terms() {
            let mut t = UPoly::constant(c.clone());
            for (g, &e) in self.coords.iter().zip(m.exps()) {
                for _ in 0..e {
                    t = (&t * g).rem(&self.eliminant);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc.rem(&self.eliminant))
    }

    /// Exact sign of `h(θ)`.
    pub fn sign_of(&self, h: &UPoly<Rational>) -> Ordering {
        let h = h.rem(&self.eliminant);
        if h.is_zero() {
            return Ordering::Equal;
        }
        let g = h.gcd(&self.eliminant);
        if g.degree().unwrap_or(0) > 0 {
            let hit = match &self.interval.exact {
                Some(x) => g.eval(x).is_zero(),
                None => sturm_count(&g, &Bound::Finite(self.interval.lo.clone()), &Bound::Finite(self.interval.hi.clone())) > 0,
            };
            if hit {
                return Ordering::Equal;
            }
        }
        let mut iv = self.interval.clone();
        loop {
            let (lo, hi) = eval_interval(&h, &iv.lo, &iv.hi);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            if let Some(x) = &iv.exact {
                return h.eval(x).cmp(&Rational::zero());
            }
            iv = refine(&self.eliminant, &iv, &(iv.width() / Rational::from_integer(4.into())));
        }
    }

    /// A rational lower bound for `h(θ)`, assuming `h(θ) > 0`.
    pub fn positive_lower_bound(&self, h: &UPoly<Rational>) -> Rational {
        let mut iv = self.interval.clone();
        loop {
            if let Some(x) = &iv.exact {
                return h.eval(x);
            }
            let (lo, _) = eval_interval(h, &iv.lo, &iv.hi);
            if lo.is_positive() {
                return lo;
            }
            iv = refine(&self.eliminant, &iv, &(iv.width() / Rational::from_integer(4.into())));
        }
    }
}

/// Linear algebra over the quotient ring `Q[vars]/I`, in the basis of
/// standard monomials.
struct Quotient<'a> {
    gb: &'a GroebnerBasis<Rational>,
    index: HashMap<Monomial, usize>,
}

impl<'a> Quotient<'a> {
    fn new(gb: &'a GroebnerBasis<Rational>) -> Result<Self> {
        let basis = gb.standard_monomials()?;
        let index = basis.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Quotient { gb, index })
    }

    fn dim(&self) -> usize {
        self.index.len()
    }

    fn dense(&self, t: &Terms<Rational>) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in t {
            v[self.index[m]] = c.clone();
        }
        v
    }

    fn nf(&self, p: &MPoly<Rational>) -> Result<Terms<Rational>> {
        Ok(self.gb.reduce_terms(self.gb.to_terms(p)?))
    }
}

/// Echelonized Krylov sequence `1, ℓ, ℓ², …` in a quotient ring.
struct Krylov {
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
}

impl Krylov {
    /// Reduces `v` against the rows, returning the residual and the
    /// combination of Krylov vectors that was subtracted.
    fn reduce(&self, mut v: Vec<Rational>, len: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut combo = vec![Rational::zero(); len];
        for (pivot, row, rc) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = &v[*pivot] / &row[*pivot];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &f * b;
            }
            for (a, b) in combo.iter_mut().zip(rc) {
                *a += &f * b;
            }
        }
        (v, combo)
    }

    /// Minimal polynomial of `form` in the quotient, plus the echelon data.
    fn run(q: &Quotient<'_>, form: &MPoly<Rational>) -> Result<(UPoly<Rational>, Krylov)> {
        let mut k = Krylov { rows: Vec::new() };
        let vars = q.gb.vars().to_vec();
        let mut power = q.nf(&MPoly::one(&vars))?;
        for deg in 0..=q.dim() {
            let v = q.dense(&power);
            let (res, combo) = k.reduce(v, deg + 1);
            match res.iter().position(|c| !c.is_zero()) {
                None => {
                    // ℓ^deg - Σ combo_j ℓ^j = 0
                    let mut coeffs: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
                    coeffs[deg] = Rational::one();
                    return Ok((UPoly::new(coeffs), k));
                }
                Some(pivot) => {
                    let mut own = combo.into_iter().map(|c| -c).collect::<Vec<_>>();
                    own[deg] = Rational::one();
                    k.rows.push((pivot, res, own));
                    for (_, _, c) in k.rows.iter_mut() {
                        c.resize(deg + 2, Rational::zero());
                    }
                }
            }
            let next = MPoly::from_terms(&vars, power).try_mul(&form.with_vars(&vars)?)?;
            power = q.nf(&next)?;
        }
        unreachable!("minimal polynomial degree exceeds the quotient dimension")
    }

    /// Coefficients `a_j` with `v = Σ a_j ℓ^j`, if `v` is in the span.
    fn express(&self, v: Vec<Rational>, len: usize) -> Option<Vec<Rational>> {
        let (res, combo) = self.reduce(v, len);
        res.iter().all(Zero::is_zero).then_some(combo)
    }
}

fn linear_form(coeffs: &[Rational], vars: &[String]) -> MPoly<Rational> {
    MPoly::from_terms(
        vars,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(vars.len(), i), c.clone())),
    )
}

/// Solves a zero-dimensional ideal over the rationals.
pub fn solve_zero_dim(ideal: &Ideal<Rational>, ctx: &Context) -> Result<ZeroDimSolution> {
    let vars = ideal.vars().to_vec();
    let n = vars.len();
    let gb = ideal.groebner(ctx)?;
    if gb.is_one() {
        return Ok(ZeroDimSolution {
            vars,
            real_points: Vec::new(),
            complex_count: 0,
            nonreal_count: 0,
            separating_form: Vec::new(),
            eliminant: UPoly::constant(Rational::one()),
            seed: ctx.seed,
        });
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional(format!(
            "ideal over ({}) has positive dimension",
            vars.join(", ")
        )));
    }
    if n == 0 {
        return Ok(ZeroDimSolution {
            vars,
            real_points: vec![SolvedPoint::Rational(Vec::new())],
            complex_count: 1,
            nonreal_count: 0,
            separating_form: Vec::new(),
            eliminant: UPoly::x(),
            seed: ctx.seed,
        });
    }

    // radical via squarefree coordinate minimal polynomials
    let quot = Quotient::new(gb)?;
    let mut extra = Vec::with_capacity(n);
    let mut coord_minpolys = Vec::with_capacity(n);
    for v in &vars {
        let (mu, _) = Krylov::run(&quot, &MPoly::var(v, &vars)?)?;
        let sf = mu.squarefree_part();
        extra.push(sf.to_mpoly(v, &vars));
        coord_minpolys.push(sf);
    }
    let radical = Ideal::new(
        ideal.generators().iter().cloned().chain(extra).collect(),
        &vars,
        MonomialOrder::GrevLex,
    )?;
    let rgb = radical.groebner(ctx)?;
    let rquot = Quotient::new(rgb)?;
    let count = rquot.dim();

    // separating form: coordinates from the last one down, then random forms
    let mut candidates: Vec<Vec<Rational>> = (0..n)
        .rev()
        .filter(|&i| coord_minpolys[i].degree() == Some(count))
        .map(|i| {
            let mut c = vec![Rational::zero(); n];
            c[i] = Rational::one();
            c
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for _ in 0..ctx.shape_attempts {
        candidates.push(
            (0..n)
                .map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into()))
                .collect(),
        );
    }
    for coeffs in candidates {
        let form = linear_form(&coeffs, &vars);
        let (mu, krylov) = Krylov::run(&rquot, &form)?;
        if mu.degree() != Some(count) {
            continue;
        }
        let mut coords = Vec::with_capacity(n);
        for v in &vars {
            let target = rquot.dense(&rquot.nf(&MPoly::var(v, &vars)?)?);
            let a = krylov
                .express(target, count)
                .expect("separating form generates the quotient");
            coords.push(UPoly::new(a));
        }
        let iso = isolate_roots(&mu);
        let real_points: Vec<SolvedPoint> = iso
            .intervals
            .into_iter()
            .map(|iv| match &iv.exact {
                Some(theta) => SolvedPoint::Rational(coords.iter().map(|g| g.eval(theta)).collect()),
                None => SolvedPoint::Algebraic(AlgebraicPoint {
                    eliminant: mu.clone(),
                    interval: iv,
                    coords: coords.clone(),
                }),
            })
            .collect();
        let real = real_points.len();
        return Ok(ZeroDimSolution {
            vars,
            real_points,
            complex_count: count,
            nonreal_count: count - real,
            separating_form: coeffs,
            eliminant: mu,
            seed: ctx.seed,
        });
    }
    Err(Error::ShapePosition {
        attempts: ctx.shape_attempts,
    })
}

/// Serializable summary of a solved point.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PointSummary {
    Rational { coords: Vec<String> },
    Algebraic { eliminant: String, interval: (String, String), boxes: Vec<(String, String)> },
}

impl From<&SolvedPoint> for PointSummary {
    fn from(p: &SolvedPoint) -> Self {
        match p {
            SolvedPoint::Rational(c) => PointSummary::Rational {
                coords: c.iter().map(|x| x.to_string()).collect(),
            },
            SolvedPoint::Algebraic(a) => PointSummary::Algebraic {
                eliminant: a.eliminant.to_string(),
                interval: (a.interval.lo.to_string(), a.interval.hi.to_string()),
                boxes: a
                    .boxes(&Rational::new(1.into(), 1_000_000.into()))
                    .into_iter()
                    .map(|(l, h)| (l.to_string(), h.to_string()))
                    .collect(),
            },
        }
    }
}

impl std::fmt::Display for SolvedPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolvedPoint::Rational(c) => {
                let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(", "))
            }
            SolvedPoint::Algebraic(a) => {
                let boxes = a.boxes(&Rational::new(1.into(), 1000.into()));
                let s: Vec<String> = boxes
                    .iter()
                    .map(|(l, h)| format!("[{:.4}, {:.4}]", to_f64(l), to_f64(h)))
                    .collect();
                write!(f, "({})", s.join(", "))
            }
        }
    }
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
