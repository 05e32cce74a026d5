//! Ideals, reduced Gröbner bases, elimination and zero-dimensional solving.

mod buchberger;
mod zerodim;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial, MonomialOrder};
use crate::scalar::Scalar;

pub(crate) use buchberger::Terms;
pub use zerodim::{solve_zero_dim, AlgebraicPoint, PointSummary, SolvedPoint, ZeroDimSolution};

/// A finitely generated ideal of `C[vars]` with a lazily computed reduced
/// Gröbner basis under `order`.
#[derive(Debug)]
pub struct Ideal<C> {
    generators: Vec<MPoly<C>>,
    vars: Arc<[String]>,
    order: MonomialOrder,
    gb: OnceLock<GroebnerBasis<C>>,
}

impl<C: Scalar> Clone for Ideal<C> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            generators: self.generators.clone(),
            vars: self.vars.clone(),
            order: self.order,
            gb,
        }
    }
}

/// Reduced Gröbner basis: monic, interreduced, sorted by increasing leading
/// monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<C> {
    vars: Arc<[String]>,
    order: MonomialOrder,
    sorted: Vec<Terms<C>>,
}

impl<C: Scalar> Ideal<C> {
    /// Builds an ideal over `vars`. Generators are re-expressed over `vars`
    /// (unknown variables are an error) and zero generators are dropped.
    pub fn new<S: AsRef<str>>(generators: Vec<MPoly<C>>, vars: &[S], order: MonomialOrder) -> Result<Self> {
        let vars: Arc<[String]> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_vars(&vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal {
            generators,
            vars,
            order,
            gb: OnceLock::new(),
        })
    }

    /// Ideal over the union of the generators' variable lists, grevlex.
    pub fn from_generators(generators: Vec<MPoly<C>>) -> Result<Self> {
        let vars = generators
            .iter()
            .fold(Vec::<String>::new(), |acc, g| crate::poly::align_vars(&acc, g.vars()));
        Self::new(generators, &vars, MonomialOrder::GrevLex)
    }

    pub fn generators(&self) -> &[MPoly<C>] {
        &self.generators
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same generators under another order or variable list.
    pub fn reordered<S: AsRef<str>>(&self, vars: &[S], order: MonomialOrder) -> Result<Self> {
        Ideal::new(self.generators.clone(), vars, order)
    }

    /// `self + (extra)`, over the union of variable lists.
    pub fn extended(&self, extra: &[MPoly<C>]) -> Result<Self> {
        let vars = extra
            .iter()
            .fold(self.vars.to_vec(), |acc, g| crate::poly::align_vars(&acc, g.vars()));
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(gens, &vars, self.order)
    }

    /// The reduced Gröbner basis, computed once and cached.
    pub fn groebner(&self, ctx: &Context) -> Result<&GroebnerBasis<C>> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let gb = buchberger(self, ctx)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    pub(crate) fn seed_groebner(&self, gb: GroebnerBasis<C>) {
        let _ = self.gb.set(gb);
    }

    pub fn contains(&self, p: &MPoly<C>, ctx: &Context) -> Result<bool> {
        ideal_member(p, self, ctx)
    }

    /// Two-way generator membership.
    pub fn same_ideal(&self, other: &Ideal<C>, ctx: &Context) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g, ctx)? {
                return Ok(false);
            }
        }
        for g in self.generators() {
            if !other.contains(g, ctx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<C: Scalar> GroebnerBasis<C> {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn elements(&self) -> Vec<MPoly<C>> {
        self.sorted
            .iter()
            .map(|t| MPoly::from_terms(&self.vars, t.iter().cloned()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.sorted.iter().map(|t| &t[0].0).collect()
    }

    /// True for the unit ideal.
    pub fn is_one(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].0.is_one()
    }

    pub(crate) fn to_terms(&self, p: &MPoly<C>) -> Result<Terms<C>> {
        Ok(p.with_vars(&self.vars)?.sorted_terms(self.order))
    }

    pub(crate) fn reduce_terms(&self, p: Terms<C>) -> Terms<C> {
        let basis: Vec<&Terms<C>> = self.sorted.iter().collect();
        buchberger::reduce(p, &basis, self.order, &mut None).expect("unmetered reduction")
    }

    /// Unique remainder of `p` modulo the basis.
    pub fn normal_form(&self, p: &MPoly<C>) -> Result<MPoly<C>> {
        let t = self.reduce_terms(self.to_terms(p)?);
        Ok(MPoly::from_terms(&self.vars, t))
    }

    /// True iff every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let mut seen = vec![false; self.vars.len()];
        for m in self.leading_monomials() {
            if m.is_one() {
                return true;
            }
            if let Some(i) = m.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Monomials outside the leading-term ideal, in increasing order. Errors
    /// when there are infinitely many.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional("standard monomials are infinite".into()));
        }
        if self.is_one() {
            return Ok(Vec::new());
        }
        let n = self.vars.len();
        let lms = self.leading_monomials();
        let mut found: BTreeSet<Monomial> = BTreeSet::new();
        let mut frontier = vec![Monomial::one(n)];
        while let Some(m) = frontier.pop() {
            if found.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
                continue;
            }
            for i in 0..n {
                frontier.push(m.mul(&Monomial::var(n, i)));
            }
            found.insert(m);
        }
        let mut out: Vec<Monomial> = found.into_iter().collect();
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(out)
    }

    /// Equality of reduced bases (as polynomials over the same variables).
    pub fn same_as(&self, other: &GroebnerBasis<C>) -> bool {
        if self.sorted.len() != other.sorted.len() {
            return false;
        }
        let a: Vec<MPoly<C>> = self.elements();
        let b: Vec<MPoly<C>> = other.elements();
        a.iter().all(|p| b.contains(p))
    }
}

/// Reduced Gröbner basis of `ideal` under its own order.
pub fn buchberger<C: Scalar>(ideal: &Ideal<C>, ctx: &Context) -> Result<GroebnerBasis<C>> {
    let gens: Vec<Terms<C>> = ideal.generators.iter().map(|g| g.sorted_terms(ideal.order)).collect();
    let mut meter = ctx.meter();
    let sorted = buchberger::groebner_basis(gens, ideal.order, &mut meter)?;
    Ok(GroebnerBasis {
        vars: ideal.vars.clone(),
        order: ideal.order,
        sorted,
    })
}

pub fn normal_form<C: Scalar>(p: &MPoly<C>, gb: &GroebnerBasis<C>) -> Result<MPoly<C>> {
    gb.normal_form(p)
}

pub fn ideal_member<C: Scalar>(p: &MPoly<C>, ideal: &Ideal<C>, ctx: &Context) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    Ok(ideal.groebner(ctx)?.normal_form(p)?.is_zero())
}

/// A variable name not in `taken`: `base`, then `base_1`, `base_2`, ...
pub fn fresh_var(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|v| v == base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}_{i}"))
        .find(|c| !taken.contains(c))
        .expect("unbounded")
}

/// `I ∩ C[keep]`. The result is over `keep` (in the given order), grevlex,
/// and carries its reduced basis.
pub fn eliminate<C: Scalar, S: AsRef<str>>(ideal: &Ideal<C>, keep: &[S], ctx: &Context) -> Result<Ideal<C>> {
    let keep: Vec<String> = keep.iter().map(|s| s.as_ref().to_string()).collect();
    if let Some(k) = keep.iter().find(|k| !ideal.vars.contains(k)) {
        return Err(Error::UnknownVariable(k.clone()));
    }
    let elim: Vec<String> = ideal.vars.iter().filter(|v| !keep.contains(v)).cloned().collect();
    let mut all = elim.clone();
    all.extend(keep.iter().cloned());
    let big = ideal.reordered(&all, MonomialOrder::Block(elim.len()))?;
    let gb = big.groebner(ctx)?;
    let k = elim.len();
    let kept: Vec<Terms<C>> = gb
        .sorted
        .iter()
        .filter(|t| t.iter().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
        .map(|t| {
            t.iter()
                .map(|(m, c)| (Monomial::new(m.exps()[k..].to_vec()), c.clone()))
                .collect()
        })
        .collect();
    let gens: Vec<MPoly<C>> = kept.iter().map(|t| MPoly::from_terms(&keep, t.iter().cloned())).collect();
    let out = Ideal::new(gens, &keep, MonomialOrder::GrevLex)?;
    out.seed_groebner(GroebnerBasis {
        vars: out.vars.clone(),
        order: MonomialOrder::GrevLex,
        sorted: kept,
    });
    Ok(out)
}

/// `I : q^∞`, via a fresh variable `u` and `u*q - 1`.
pub fn saturate<C: Scalar>(ideal: &Ideal<C>, q: &MPoly<C>, ctx: &Context) -> Result<Ideal<C>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = q.with_vars(&ideal.vars)?;
    let u = fresh_var("u", &ideal.vars);
    let mut vars = ideal.vars.to_vec();
    vars.push(u.clone());
    let uq = &MPoly::var(&u, &vars)? * &q.with_vars(&vars)?;
    let witness = &uq - &MPoly::one(&vars);
    let big = ideal.reordered(&vars, ideal.order)?.extended(&[witness])?;
    let out = eliminate(&big, &ideal.vars, ctx)?;
    out.reordered(&ideal.vars, ideal.order).inspect(|i| {
        if ideal.order == MonomialOrder::GrevLex {
            if let Some(g) = out.gb.get() {
                i.seed_groebner(g.clone());
            }
        }
    })
}

/// Whether `p ∈ √I`, via `1 ∈ I + (1 - u*p)`.
pub fn radical_member<C: Scalar>(p: &MPoly<C>, ideal: &Ideal<C>, ctx: &Context) -> Result<bool> {
    let p = p.with_vars(&ideal.vars)?;
    if p.is_zero() {
        return Ok(true);
    }
    let u = fresh_var("u", &ideal.vars);
    let mut vars = ideal.vars.to_vec();
    vars.push(u.clone());
    let up = &MPoly::var(&u, &vars)? * &p.with_vars(&vars)?;
    let witness = &MPoly::one(&vars) - &up;
    let big = ideal.reordered(&vars, MonomialOrder::GrevLex)?.extended(&[witness])?;
    Ok(big.groebner(ctx)?.is_one())
}

pub fn is_zero_dimensional<C: Scalar>(ideal: &Ideal<C>, ctx: &Context) -> Result<bool> {
    Ok(ideal.groebner(ctx)?.is_zero_dimensional())
}

/// Dimension of `C[vars]/I` as a vector space.
pub fn standard_monomial_count<C: Scalar>(ideal: &Ideal<C>, ctx: &Context) -> Result<usize> {
    Ok(ideal.groebner(ctx)?.standard_monomials()?.len())
}
