use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::MonomialOrder;
use crate::{Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VarietyKind {
    PlaneCurve,
    SpaceCurve,
    Surface,
}

impl VarietyKind {
    pub fn dim(self) -> usize {
        match self {
            VarietyKind::PlaneCurve | VarietyKind::SpaceCurve => 1,
            VarietyKind::Surface => 2,
        }
    }

    pub fn is_curve(self) -> bool {
        self.dim() == 1
    }
}

/// Hypotheses supplied by the caller rather than computed.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Assertions {
    pub irreducible: bool,
    pub smooth_real_point: bool,
    #[serde(serialize_with = "crate::cli::report::ser_points")]
    pub central_points: Vec<Vec<Rational>>,
}

/// A real affine variety given by generators of its ideal.
#[derive(Clone, Debug)]
pub struct AffinePresentation {
    ideal: Ideal<Rational>,
    kind: VarietyKind,
    pub assertions: Assertions,
}

impl AffinePresentation {
    pub fn new<S: AsRef<str>>(generators: Vec<Poly>, vars: &[S], kind: VarietyKind) -> Result<Self> {
        let ideal = Ideal::new(generators, vars, MonomialOrder::GrevLex)?;
        Self::from_ideal(ideal, kind)
    }

    pub fn from_ideal(ideal: Ideal<Rational>, kind: VarietyKind) -> Result<Self> {
        let n = ideal.vars().len();
        if ideal.generators().is_empty() {
            return Err(Error::invalid("variety needs at least one nonzero generator"));
        }
        if kind == VarietyKind::PlaneCurve && (n != 2 || ideal.generators().len() != 1) {
            return Err(Error::invalid(
                "a plane curve needs exactly two variables and one generator",
            ));
        }
        if n <= kind.dim() {
            return Err(Error::invalid(format!(
                "{} variables cannot carry a variety of dimension {}",
                n,
                kind.dim()
            )));
        }
        Ok(AffinePresentation {
            ideal,
            kind,
            assertions: Assertions::default(),
        })
    }

    /// Plane curve `f = 0` over the variables of `f`.
    pub fn plane_curve(f: Poly) -> Result<Self> {
        let vars = f.vars().to_vec();
        Self::new(vec![f], &vars, VarietyKind::PlaneCurve)
    }

    pub fn assume(mut self, irreducible: bool, smooth_real_point: bool) -> Self {
        self.assertions.irreducible = irreducible;
        self.assertions.smooth_real_point = smooth_real_point;
        self
    }

    pub fn with_central_points(mut self, points: Vec<Vec<Rational>>) -> Self {
        self.assertions.central_points = points;
        self
    }

    pub fn ideal(&self) -> &Ideal<Rational> {
        &self.ideal
    }

    pub fn kind(&self) -> VarietyKind {
        self.kind
    }

    pub fn vars(&self) -> &[String] {
        self.ideal.vars()
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn codim(&self) -> usize {
        self.vars().len() - self.dim()
    }

    /// The defining polynomial of a plane curve.
    pub fn generator(&self) -> Option<&Poly> {
        match self.kind {
            VarietyKind::PlaneCurve => self.ideal.generators().first(),
            _ => None,
        }
    }

    pub fn contains_point(&self, point: &[Rational]) -> Result<bool> {
        if point.len() != self.vars().len() {
            return Err(Error::invalid(format!(
                "point has {} coordinates, variety lives in {} variables",
                point.len(),
                self.vars().len()
            )));
        }
        for g in self.ideal.generators() {
            if g.evaluate(point)? != Rational::from_integer(0.into()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn format_point(p: &[Rational]) -> String {
        let s: Vec<String> = p.iter().map(|c| c.to_string()).collect();
        format!("({})", s.join(", "))
    }

    pub(crate) fn require_point(&self, point: &[Rational]) -> Result<()> {
        if self.contains_point(point)? {
            Ok(())
        } else {
            Err(Error::PointNotOnVariety(Self::format_point(point)))
        }
    }

    /// Generators plus the maximal minors of the Jacobian that cut out the
    /// singular locus of the complexification.
    pub fn singular_ideal(&self) -> Result<Ideal<Rational>> {
        let jac = jacobian(self.ideal.generators(), self.vars())?;
        let mut gens = self.ideal.generators().to_vec();
        gens.extend(minors(&jac, self.codim()));
        Ideal::new(gens, self.vars(), MonomialOrder::GrevLex)
    }

    /// Plane curves must be squarefree: their singular scheme is then finite.
    pub fn check_squarefree(&self, ctx: &Context) -> Result<()> {
        if self.kind != VarietyKind::PlaneCurve {
            return Ok(());
        }
        let gb = self.singular_ideal()?;
        let gb = gb.groebner(ctx)?;
        if gb.is_one() || gb.is_zero_dimensional() {
            Ok(())
        } else {
            Err(Error::NonReduced(format!(
                "{} has a repeated factor",
                self.ideal.generators()[0]
            )))
        }
    }
}


pub fn jacobian<S: AsRef<str>>(gens: &[Poly], vars: &[S]) -> Result<Vec<Vec<Poly>>> {
    gens.iter()
        .map(|g| vars.iter().map(|v| g.partial_derivative(v.as_ref())).collect())
        .collect()
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Laplace expansion along the first row.
pub(crate) fn determinant(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = Poly::zero(m[0][0].vars());
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(&sub);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// All nonzero `size × size` minors, without duplicates.
pub fn minors(m: &[Vec<Poly>], size: usize) -> Vec<Poly> {
    if size == 0 || m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut out: Vec<Poly> = Vec::new();
    for rows in combinations(m.len(), size) {
        for cs in combinations(cols, size) {
            let sub: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}
