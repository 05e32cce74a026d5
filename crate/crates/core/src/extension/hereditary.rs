use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::groebner::{eliminate, solve_zero_dim, Ideal};
use crate::poly::MonomialOrder;
use crate::{Poly, Rational};

use super::presentation::ExtensionPresentation;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Specialization {
    #[serde(serialize_with = "crate::cli::report::ser_rational")]
    pub value: Rational,
    /// Distinct complex points of `W` over the parameter value.
    pub upstairs: usize,
    /// Distinct complex points of `V` over the parameter value.
    pub downstairs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HereditaryCertificate {
    /// Generators of the image `V` of `W` in `X`.
    pub image: Vec<String>,
    pub parameter: String,
    pub samples: Vec<Specialization>,
    pub degree: usize,
    pub birational: bool,
}

/// `pinned` followed by two seeded random integers in `2..=50` distinct
/// from it.
pub fn specialization_values(pinned: &Rational, ctx: &Context) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut out = vec![pinned.clone()];
    while out.len() < 3 {
        let v = Rational::from_integer(rng.gen_range(2i64..=50).into());
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Degree of the restriction `W -> V` of `Y -> X` to a subvariety `W` of `Y`,
/// read off from the fibers over generic values of a parameter on `V`.
///
/// `W` is assumed prime. All sample values must give the same degree.
pub fn hereditary_birational_check(
    e: &ExtensionPresentation,
    w: &[Poly],
    parameter: &str,
    values: &[Rational],
    ctx: &Context,
) -> Result<HereditaryCertificate> {
    if !e.x_vars.iter().any(|v| v == parameter) {
        return Err(Error::UnknownVariable(parameter.to_string()));
    }
    if values.is_empty() {
        return Err(Error::invalid("no specialization values"));
    }
    let vars = e.vars();
    let mut gens = e.ideal.generators().to_vec();
    for g in w {
        gens.push(g.with_vars(vars)?);
    }
    let upstairs = Ideal::new(gens, vars, MonomialOrder::GrevLex)?;
    let image = eliminate(&upstairs, &e.x_vars, ctx)?;
    let gb = image.groebner(ctx)?;
    if gb.is_one() {
        return Err(Error::Precondition("W does not lie on Y".into()));
    }
    if gb.is_zero_dimensional() {
        return Err(Error::Precondition(
            "the image of W is zero-dimensional; the restriction test needs a positive-dimensional image".into(),
        ));
    }
    let mut samples = Vec::with_capacity(values.len());
    let mut degrees = Vec::with_capacity(values.len());
    for v in values {
        let count = |i: &Ideal<Rational>| -> Result<usize> {
            let pin = &Poly::var(parameter, i.vars())? - &Poly::constant(v.clone(), i.vars());
            let sol = solve_zero_dim(&i.extended(&[pin])?, ctx).map_err(|err| match err {
                Error::NotZeroDimensional(_) => Error::NonGenericSpecialization(Vec::new()),
                err => err,
            })?;
            Ok(sol.complex_count)
        };
        let down = count(&image)?;
        let up = count(&upstairs)?;
        samples.push(Specialization {
            value: v.clone(),
            upstairs: up,
            downstairs: down,
        });
        if down == 0 || up % down != 0 {
            degrees.push(usize::MAX);
        } else {
            degrees.push(up / down);
        }
    }
    if degrees.iter().any(|&d| d != degrees[0] || d == usize::MAX || d == 0) {
        return Err(Error::NonGenericSpecialization(
            samples.iter().map(|s| s.upstairs).collect(),
        ));
    }
    Ok(HereditaryCertificate {
        image: image.generators().iter().map(|g| g.to_string()).collect(),
        parameter: parameter.to_string(),
        degree: degrees[0],
        birational: degrees[0] == 1,
        samples,
    })
}
