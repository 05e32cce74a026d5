//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use crate::context::StepMeter;
use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder};
use crate::scalar::Scalar;

/// Terms in strictly decreasing order, no zero coefficients.
pub(crate) type Terms<C> = Vec<(Monomial, C)>;

/// `p - coef * shift * g`, where `p` and `g` are sorted by `order`.
fn sub_scaled<C: Scalar>(p: &[(Monomial, C)], g: &[(Monomial, C)], shift: &Monomial, coef: &C, order: MonomialOrder) -> Terms<C> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(m, c)| (m.mul(shift), c.clone() * coef.clone())).peekable();
    while i < p.len() || gi.peek().is_some() {
        let take = match (p.get(i), gi.peek()) {
            (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match take {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (m, c) = gi.next().unwrap();
                out.push((m, -c));
            }
            Ordering::Equal => {
                let (m, c) = gi.next().unwrap();
                let s = p[i].1.clone() - c;
                if !s.is_zero() {
                    out.push((m, s));
                }
                i += 1;
            }
        }
    }
    out
}

/// Fully reduces `p` by `basis` (every term, not just the head).
pub(crate) fn reduce<C: Scalar>(
    p: Terms<C>,
    basis: &[&Terms<C>],
    order: MonomialOrder,
    meter: &mut Option<&mut StepMeter<'_>>,
) -> Result<Terms<C>> {
    let mut rem: Terms<C> = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        let divisor = basis.iter().find(|g| g[0].0.divides(m));
        match divisor {
            Some(g) => {
                if let Some(meter) = meter.as_mut() {
                    meter.tick()?;
                }
                let shift = m.div(&g[0].0);
                let coef = c.clone() / g[0].1.clone();
                cur = sub_scaled(&cur[start + 1..], &g[1..], &shift, &coef, order);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    Ok(rem)
}

pub(crate) fn make_monic<C: Scalar>(p: &mut Terms<C>) {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = C::one() / lc.clone();
            for t in p.iter_mut() {
                t.1 = t.1.clone() * inv.clone();
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder<'m, 'c, C> {
    order: MonomialOrder,
    polys: Vec<Terms<C>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    meter: &'m mut StepMeter<'c>,
}

impl<C: Scalar> Builder<'_, '_, C> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    /// Gebauer–Möller update after inserting polynomial `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.lm(h).clone();
        let mut candidates: Vec<(usize, Monomial)> =
            self.active.iter().map(|&g| (g, lm_h.lcm(self.lm(g)))).collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = lm_h.is_coprime(self.lm(g1));
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lm_h.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: h, lcm })
            .collect();

        // drop old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let lcm_ih = polys[p.i][0].0.lcm(&lm_h);
            let lcm_jh = polys[p.j][0].0.lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm)
        });
        self.pairs.extend(new_pairs);

        let polys = &self.polys;
        self.active.retain(|&g| !lm_h.divides(&polys[g][0].0));
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| pa.lcm.cmp(&pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }

    fn spoly(&self, pair: &Pair) -> Terms<C> {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let sf = pair.lcm.div(&f[0].0);
        let sg = pair.lcm.div(&g[0].0);
        let cf = C::one() / f[0].1.clone();
        let cg = g[0].1.clone();
        // leading terms cancel; scale g by 1 / lc(g) through `coef`
        let fs: Terms<C> = f[1..].iter().map(|(m, c)| (m.mul(&sf), c.clone() * cf.clone())).collect();
        sub_scaled(&fs, &g[1..], &sg, &(C::one() / cg), self.order)
    }

    fn reduce_against_active(&mut self, p: Terms<C>) -> Result<Terms<C>> {
        let basis: Vec<&Terms<C>> = self.active.iter().map(|&i| &self.polys[i]).collect();
        let mut meter = Some(&mut *self.meter);
        reduce(p, &basis, self.order, &mut meter)
    }

    fn insert(&mut self, mut h: Terms<C>) -> bool {
        make_monic(&mut h);
        let is_unit = h[0].0.is_one();
        self.polys.push(h);
        let idx = self.polys.len() - 1;
        if is_unit {
            self.active = vec![idx];
            self.pairs.clear();
            return true;
        }
        self.update(idx);
        false
    }
}

/// Computes the reduced Gröbner basis of the polynomials `gens` (each sorted
/// by `order`). Output is monic, interreduced and sorted by increasing
/// leading monomial.
pub(crate) fn groebner_basis<C: Scalar>(
    gens: Vec<Terms<C>>,
    order: MonomialOrder,
    meter: &mut StepMeter<'_>,
) -> Result<Vec<Terms<C>>> {
    let mut b = Builder {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        meter,
    };
    // process generators by increasing leading monomial
    let mut gens: Vec<Terms<C>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    for g in gens {
        let h = b.reduce_against_active(g)?;
        if !h.is_empty() && b.insert(h) {
            return Ok(vec![unit(b.polys[0][0].0.nvars())]);
        }
    }
    while let Some(pair) = b.select() {
        let s = b.spoly(&pair);
        let h = b.reduce_against_active(s)?;
        if !h.is_empty() && b.insert(h) {
            return Ok(vec![unit(b.polys[0][0].0.nvars())]);
        }
    }
    interreduce(b.active.iter().map(|&i| b.polys[i].clone()).collect(), order)
}

fn unit<C: Scalar>(nvars: usize) -> Terms<C> {
    vec![(Monomial::one(nvars), C::one())]
}

/// Interreduces a minimal basis into the reduced basis.
pub(crate) fn interreduce<C: Scalar>(mut basis: Vec<Terms<C>>, order: MonomialOrder) -> Result<Vec<Terms<C>>> {
    // enforce minimality: drop elements whose head is divisible by another head
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms<C>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Terms<C>> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g).collect();
        let head = minimal[i][0].clone();
        let tail = reduce(minimal[i][1..].to_vec(), &others, order, &mut None)?;
        let mut g = Vec::with_capacity(tail.len() + 1);
        g.push(head);
        g.extend(tail);
        make_monic(&mut g);
        out.push(g);
    }
    Ok(out)
}
