use num_traits::One;
use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::Poly;

/// `num / den` on a variety.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalFunction {
    #[serde(serialize_with = "crate::cli::report::ser_display")]
    pub num: Poly,
    #[serde(serialize_with = "crate::cli::report::ser_display")]
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(RationalFunction { num, den })
    }

    /// Numerator and denominator in normal form modulo `ideal`; errors when
    /// the denominator vanishes identically on the variety.
    pub fn reduced(&self, ideal: &Ideal<crate::Rational>, ctx: &Context) -> Result<Self> {
        let gb = ideal.groebner(ctx)?;
        let den = gb.normal_form(&self.den.with_vars(ideal.vars())?)?;
        if den.is_zero() {
            return Err(Error::Precondition(format!("denominator {} vanishes on the variety", self.den)));
        }
        Ok(RationalFunction {
            num: gb.normal_form(&self.num.with_vars(ideal.vars())?)?,
            den,
        })
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.constant_value().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// A rational function `f` together with a monic relation `m(t)`,
/// `t` named `name`, whose coefficients are polynomials in the ambient
/// variables.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntegralElement {
    pub name: String,
    pub f: RationalFunction,
    #[serde(serialize_with = "crate::cli::report::ser_display")]
    pub relation: Poly,
}

impl IntegralElement {
    pub fn new(name: &str, num: Poly, den: Poly, relation: Poly) -> Result<Self> {
        let e = IntegralElement {
            name: name.to_string(),
            f: RationalFunction::new(num, den)?,
            relation,
        };
        e.degree()?;
        if e.f.num.support_vars().iter().chain(e.f.den.support_vars().iter()).any(|v| v == name) {
            return Err(Error::invalid(format!("{name} appears in its own defining fraction")));
        }
        Ok(e)
    }

    /// Degree of the relation in the adjoined variable; the relation must be
    /// monic in it.
    pub fn degree(&self) -> Result<usize> {
        let coeffs = self
            .relation
            .coefficients_in(&self.name)
            .map_err(|_| Error::invalid(format!("relation does not mention {}", self.name)))?;
        let lead = coeffs.last().expect("at least the constant coefficient");
        if coeffs.len() < 2 || !lead.constant_value().is_some_and(|c| c.is_one()) {
            return Err(Error::invalid(format!("relation {} is not monic in {}", self.relation, self.name)));
        }
        Ok(coeffs.len() - 1)
    }

    /// Variables other than the adjoined one that the element mentions.
    pub fn referenced_vars(&self) -> Vec<String> {
        let mut out: Vec<String> = [&self.f.num, &self.f.den, &self.relation]
            .iter()
            .flat_map(|p| p.support_vars())
            .filter(|v| *v != self.name)
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `den^d * m(num/den)` as a polynomial in the ambient variables.
    pub fn cleared_relation<S: AsRef<str>>(&self, vars: &[S]) -> Result<Poly> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let mut with_t = vars.clone();
        with_t.push(self.name.clone());
        let coeffs = self.relation.with_vars(&with_t)?.coefficients_in(&self.name)?;
        let d = coeffs.len() - 1;
        let (p, q) = (self.f.num.with_vars(&vars)?, self.f.den.with_vars(&vars)?);
        let mut acc = Poly::zero(&vars);
        for (j, c) in coeffs.iter().enumerate() {
            let c = c.with_vars(&vars)?;
            let term = c.try_mul(&p.pow(j as u32)?)?.try_mul(&q.pow((d - j) as u32)?)?;
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

/// Whether `den^d * m(num/den)` lies in `ideal`.
pub fn verify_integral_relation(ideal: &Ideal<crate::Rational>, e: &IntegralElement, ctx: &Context) -> Result<bool> {
    if let Some(v) = e.referenced_vars().iter().find(|v| !ideal.vars().contains(v)) {
        return Err(Error::UnknownVariable(v.clone()));
    }
    e.f.reduced(ideal, ctx)?;
    let cleared = e.cleared_relation(ideal.vars())?;
    ideal.contains(&cleared, ctx)
}
