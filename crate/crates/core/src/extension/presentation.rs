use serde::Serialize;

use crate::context::Context;
use crate::curve::{AffinePresentation, VarietyKind};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, saturate, solve_zero_dim, Ideal, SolvedPoint};
use crate::poly::MonomialOrder;
use crate::{Poly, Rational};

use super::element::{verify_integral_relation, IntegralElement};

/// `Y -> X` given by `Pol(Y) = Pol(X)[f_1, ..., f_k]`.
#[derive(Clone, Debug)]
pub struct ExtensionPresentation {
    pub base: AffinePresentation,
    pub elements: Vec<IntegralElement>,
    /// Ideal of `Y` over `x_vars` followed by `t_vars`.
    pub ideal: Ideal<Rational>,
    pub x_vars: Vec<String>,
    pub t_vars: Vec<String>,
    /// Points of `Y` asserted to be central.
    pub asserted_central: Vec<Vec<Rational>>,
}

impl ExtensionPresentation {
    /// The trivial extension `Y = X`.
    pub fn identity(base: &AffinePresentation) -> Self {
        ExtensionPresentation {
            base: base.clone(),
            elements: Vec::new(),
            ideal: base.ideal().clone(),
            x_vars: base.vars().to_vec(),
            t_vars: Vec::new(),
            asserted_central: Vec::new(),
        }
    }

    pub fn vars(&self) -> &[String] {
        self.ideal.vars()
    }

    /// `Y` as a variety of its own.
    pub fn upstairs(&self) -> Result<AffinePresentation> {
        let kind = match self.base.kind() {
            VarietyKind::Surface => VarietyKind::Surface,
            _ if self.t_vars.is_empty() => self.base.kind(),
            _ => VarietyKind::SpaceCurve,
        };
        Ok(AffinePresentation::from_ideal(self.ideal.clone(), kind)?.with_central_points(self.asserted_central.clone()))
    }

    /// `I_Y ∩ Q[x] = I_X`, by two-way membership.
    pub fn contraction_holds(&self, ctx: &Context) -> Result<bool> {
        let down = eliminate(&self.ideal, &self.x_vars, ctx)?;
        down.same_ideal(self.base.ideal(), ctx)
    }

    /// Each `q_i t_i - p_i` and `m_i(t_i)` lies in `I_Y`.
    pub fn relations_hold(&self, ctx: &Context) -> Result<bool> {
        for e in &self.elements {
            let vars = self.vars();
            let t = Poly::var(&e.name, vars)?;
            let link = &(&e.f.den.with_vars(vars)? * &t) - &e.f.num.with_vars(vars)?;
            if !self.ideal.contains(&link, ctx)? || !self.ideal.contains(&e.relation.with_vars(vars)?, ctx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same variety as `other` (same ideal after aligning variables).
    pub fn same_as(&self, other: &ExtensionPresentation, ctx: &Context) -> Result<bool> {
        let mut va = self.vars().to_vec();
        va.sort();
        let mut vb = other.vars().to_vec();
        vb.sort();
        if va != vb {
            return Ok(false);
        }
        let b = other.ideal.reordered(self.vars(), MonomialOrder::GrevLex)?;
        self.ideal.same_ideal(&b, ctx)
    }
}

/// Adjoins integral elements to the coordinate ring of `x`.
pub fn adjoin(x: &AffinePresentation, elements: &[IntegralElement], ctx: &Context) -> Result<ExtensionPresentation> {
    adjoin_to(&ExtensionPresentation::identity(x), elements, ctx)
}

/// Adjoins further elements on top of an existing extension. Elements may
/// mention the variables already adjoined.
pub fn adjoin_to(
    e: &ExtensionPresentation,
    elements: &[IntegralElement],
    ctx: &Context,
) -> Result<ExtensionPresentation> {
    let mut vars = e.vars().to_vec();
    let mut t_vars = e.t_vars.clone();
    for el in elements {
        if vars.contains(&el.name) {
            return Err(Error::invalid(format!("variable {} is already in use", el.name)));
        }
        let here = Ideal::new(e.ideal.generators().to_vec(), &vars, MonomialOrder::GrevLex)?;
        if !verify_integral_relation(&here, el, ctx)? {
            return Err(Error::Precondition(format!(
                "{} does not satisfy {} = 0",
                el.f, el.relation
            )));
        }
        vars.push(el.name.clone());
        t_vars.push(el.name.clone());
    }
    let mut gens: Vec<Poly> = e.ideal.generators().iter().map(|g| g.with_vars(&vars)).collect::<Result<_>>()?;
    let mut dens = Poly::one(&vars);
    for el in elements {
        let t = Poly::var(&el.name, &vars)?;
        let q = el.f.den.with_vars(&vars)?;
        gens.push(&(&q * &t) - &el.f.num.with_vars(&vars)?);
        gens.push(el.relation.with_vars(&vars)?);
        dens = &dens * &q;
    }
    let big = Ideal::new(gens, &vars, MonomialOrder::GrevLex)?;
    let ideal = if dens.is_constant() { big } else { saturate(&big, &dens, ctx)? };
    let mut all = e.elements.clone();
    all.extend(elements.iter().cloned());
    Ok(ExtensionPresentation {
        base: e.base.clone(),
        elements: all,
        ideal,
        x_vars: e.x_vars.clone(),
        t_vars,
        asserted_central: e.asserted_central.clone(),
    })
}

/// The fiber of `Y -> X` over a rational point of `X`.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub point: Vec<Rational>,
    /// Real fiber points in the coordinates of `Y`.
    pub real_points: Vec<SolvedPoint>,
    pub nonreal_count: usize,
    pub complex_count: usize,
}

pub fn fiber_over_point(e: &ExtensionPresentation, a: &[Rational], ctx: &Context) -> Result<Fiber> {
    e.base.require_point(a)?;
    let vars = e.vars();
    let mut gens = e.ideal.generators().to_vec();
    for (v, c) in e.x_vars.iter().zip(a) {
        gens.push(&Poly::var(v, vars)? - &Poly::constant(c.clone(), vars));
    }
    let sol = solve_zero_dim(&Ideal::new(gens, vars, MonomialOrder::GrevLex)?, ctx).map_err(|err| match err {
        Error::NotZeroDimensional(_) => Error::NotZeroDimensional(format!(
            "fiber over {} is not finite",
            crate::curve::AffinePresentation::format_point(a)
        )),
        err => err,
    })?;
    Ok(Fiber {
        point: a.to_vec(),
        real_points: sol.real_points,
        nonreal_count: sol.nonreal_count,
        complex_count: sol.complex_count,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberSummary {
    #[serde(serialize_with = "crate::cli::report::ser_point")]
    pub point: Vec<Rational>,
    pub real_points: Vec<String>,
    pub nonreal_count: usize,
}

impl From<&Fiber> for FiberSummary {
    fn from(f: &Fiber) -> Self {
        FiberSummary {
            point: f.point.clone(),
            real_points: f.real_points.iter().map(|p| p.to_string()).collect(),
            nonreal_count: f.nonreal_count,
        }
    }
}
