use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Monomial, MonomialOrder};

/// Sparse multivariate polynomial over a named variable list.
///
/// Terms are stored in a map keyed by exponent vector; no zero coefficient is
/// ever stored. Binary operations on polynomials with different variable
/// lists first align both operands (see [`align_vars`]).
#[derive(Clone, Debug)]
pub struct MPoly<C> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, C>,
}

/// Common variable list for two operands.
///
/// Equal lists are kept; if one list contains the other, the larger list is
/// kept in its own order; otherwise the union is sorted by name.
pub fn align_vars(a: &[String], b: &[String]) -> Vec<String> {
    if a == b {
        return a.to_vec();
    }
    if b.iter().all(|v| a.contains(v)) {
        return a.to_vec();
    }
    if a.iter().all(|v| b.contains(v)) {
        return b.to_vec();
    }
    let mut all: Vec<String> = a.iter().chain(b).cloned().collect();
    all.sort();
    all.dedup();
    all
}

impl<C: Scalar> MPoly<C> {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MPoly {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(c: C, vars: &[S]) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            let n = p.nvars();
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(C::one(), vars)
    }

    /// The variable `name` as a polynomial; errors if it is not in `vars`.
    pub fn var<S: AsRef<str>>(name: &str, vars: &[S]) -> Result<Self> {
        let mut p = Self::zero(vars);
        let i = p
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        p.terms.insert(Monomial::var(p.nvars(), i), C::one());
        Ok(p)
    }

    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), p.nvars(), "monomial length must match variable count");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn from_parts(vars: Arc<[String]>, terms: BTreeMap<Monomial, C>) -> Self {
        MPoly { vars, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            return Some(C::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.var_index(var)?;
        Some(self.terms.keys().map(|m| m.exps()[i]).max().unwrap_or(0))
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<String> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exps()[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Re-expresses the polynomial over `vars`. Every variable that occurs
    /// must be present in the new list.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let new_vars: Arc<[String]> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        if *new_vars == *self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            let j = new_vars.iter().position(|w| w == v);
            if j.is_none() && self.terms.keys().any(|m| m.exps()[i] > 0) {
                return Err(Error::UnknownVariable(v.clone()));
            }
            map.push(j);
        }
        let n = new_vars.len();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.exps().iter().enumerate() {
                    if let Some(j) = map[i] {
                        e[j] = x;
                    }
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(MPoly { vars: new_vars, terms })
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = align_vars(&self.vars, &other.vars);
        (
            self.with_vars(&vars).expect("aligned superset"),
            other.with_vars(&vars).expect("aligned superset"),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::from_parts(self.vars.clone(), BTreeMap::new());
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other);
        let mut out = Self::from_parts(a.vars.clone(), BTreeMap::new());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.try_mul(mb)?, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, a)| (k.mul(m), a.clone() * c.clone()))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted in decreasing order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Exact division. Returns [`Error::Indivisible`] when the remainder is
    /// nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Indivisible);
        }
        let (mut rem, d) = self.aligned(divisor);
        let order = MonomialOrder::GrevLex;
        let (lm, lc) = {
            let (m, c) = d.leading_term(order).expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut quot = Self::from_parts(rem.vars.clone(), BTreeMap::new());
        while let Some((m, c)) = rem.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Err(Error::Indivisible);
            }
            let qm = m.div(&lm);
            let qc = c / lc.clone();
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        let i = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = Self::from_parts(self.vars.clone(), BTreeMap::new());
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.exps_mut()[i] -= 1;
            out.add_term(m2, c.clone() * C::of_u64(e as u64));
        }
        Ok(out)
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one
    /// variable list, which becomes the variable list of the result.
    pub fn compose(&self, images: &[MPoly<C>]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::invalid(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.nvars()
            )));
        }
        let target: Vec<String> = match images.first() {
            Some(p) => images.iter().skip(1).fold(p.vars.to_vec(), |acc, q| align_vars(&acc, &q.vars)),
            None => Vec::new(),
        };
        let images: Vec<MPoly<C>> = images.iter().map(|p| p.with_vars(&target)).collect::<Result<_>>()?;
        // cache powers per variable
        let mut powers: Vec<Vec<MPoly<C>>> = vec![vec![MPoly::one(&target)]; images.len()];
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone(), &target);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().try_mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.try_mul(&powers[i][e as usize])?;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitutes a single variable by a polynomial.
    pub fn substitute(&self, var: &str, value: &MPoly<C>) -> Result<Self> {
        let i = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let vars = align_vars(&self.vars, &value.vars);
        let images: Vec<MPoly<C>> = (0..self.nvars())
            .map(|j| {
                if j == i {
                    value.with_vars(&vars)
                } else {
                    MPoly::var(&self.vars[j], &vars)
                }
            })
            .collect::<Result<_>>()?;
        self.compose(&images)
    }

    /// `p(x + a)`, expanded.
    pub fn translate(&self, point: &[C]) -> Result<Self> {
        self.check_point(point)?;
        let images: Vec<MPoly<C>> = (0..self.nvars())
            .map(|i| {
                let x = MPoly::var(&self.vars[i], &self.vars).expect("own variable");
                &x + &MPoly::constant(point[i].clone(), &self.vars)
            })
            .collect();
        self.compose(&images)
    }

    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        self.check_point(point)?;
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    fn check_point(&self, point: &[C]) -> Result<()> {
        if point.len() != self.nvars() {
            return Err(Error::invalid(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars()
            )));
        }
        Ok(())
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_component(&self, d: u64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self::from_parts(self.vars.clone(), terms)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Minimal total degree `k` among the terms and the sum of those terms.
    pub fn lowest_form(&self) -> Result<(u64, Self)> {
        let k = self.terms.keys().map(Monomial::degree).min().ok_or(Error::ZeroPolynomial)?;
        Ok((k, self.homogeneous_component(k)))
    }

    /// Coefficients with respect to `var`, lowest degree first. The
    /// coefficients keep the full variable list.
    pub fn coefficients_in(&self, var: &str) -> Result<Vec<Self>> {
        let i = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out: Vec<Self> = (0..=deg).map(|_| Self::from_parts(self.vars.clone(), BTreeMap::new())).collect();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::replace(&mut m2.exps_mut()[i], 0);
            out[e as usize].add_term(m2, c.clone());
        }
        Ok(out)
    }

    /// Divides all coefficients by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = C::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MPoly::from_parts(self.vars.clone(), terms)
    }
}

impl<C: Scalar> PartialEq for MPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<'a, C: Scalar> Add<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        let (mut a, b) = self.aligned(rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl<'a, C: Scalar> Sub<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        let (mut a, b) = self.aligned(rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

/// Panics on exponent overflow; use [`MPoly::try_mul`] to get an error instead.
impl<'a, C: Scalar> Mul<&'a MPoly<C>> for &'a MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: &'a MPoly<C>) -> MPoly<C> {
        self.try_mul(rhs).expect("exponent overflow in polynomial product")
    }
}

impl<C: Scalar> Neg for &MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MPoly::from_parts(self.vars.clone(), terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Scalar> $tr<MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: MPoly<C>) -> MPoly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<'a, C: Scalar> $tr<&'a MPoly<C>> for MPoly<C> {
            type Output = MPoly<C>;
            fn $f(self, rhs: &'a MPoly<C>) -> MPoly<C> {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Scalar> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> MPoly<C> {
        -&self
    }
}

/// Canonical text form: terms in decreasing grevlex order over the
/// polynomial's own variable order, `*` between factors, `^` for powers,
/// coefficients `a` or `a/b`.
impl<C: Scalar> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| match MonomialOrder::GrevLex.cmp(b.0, a.0) {
            Ordering::Equal => Ordering::Equal,
            o => o,
        });
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let neg = is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in self.vars.iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn is_negative<C: Scalar>(c: &C) -> bool {
    c.to_string().starts_with('-')
}
