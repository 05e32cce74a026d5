//! Univariate exact real-root machinery.

mod isolate;
mod sturm;
mod upoly;

pub use isolate::{eval_interval, isolate_roots, refine, IsolatingInterval, RootIsolation};
pub use sturm::{real_root_count, root_bound, sign_of, sturm_count, sturm_sequence, variations, Bound};
pub use upoly::UPoly;

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::scalar::{OrderedScalar, Scalar};

/// Resultant of `p` and `q` with respect to `var`: the determinant of the
/// Sylvester matrix with the rows of `p` on top, coefficients listed from
/// the highest power of `var` down. The result no longer mentions `var`.
pub fn resultant<C: Scalar>(p: &MPoly<C>, q: &MPoly<C>, var: &str) -> Result<MPoly<C>> {
    let vars = crate::poly::align_vars(p.vars(), q.vars());
    let (p, q) = (p.with_vars(&vars)?, q.with_vars(&vars)?);
    let out_vars: Vec<String> = vars.iter().filter(|v| *v != var).cloned().collect();
    if p.is_zero() || q.is_zero() {
        return Ok(MPoly::zero(&out_vars));
    }
    let pc = p.coefficients_in(var)?;
    let qc = q.coefficients_in(var)?;
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    if m == 0 && n == 0 {
        return MPoly::one(&vars).with_vars(&out_vars);
    }
    let size = m + n;
    let zero = MPoly::zero(&vars);
    let mut rows: Vec<Vec<MPoly<C>>> = Vec::with_capacity(size);
    for (count, coeffs, d) in [(n, &pc, m), (m, &qc, n)] {
        for r in 0..count {
            let mut row = vec![zero.clone(); size];
            for k in 0..=d {
                row[r + k] = coeffs[d - k].clone();
            }
            rows.push(row);
        }
    }
    bareiss_determinant(rows)?.with_vars(&out_vars)
}

/// Fraction-free determinant over a polynomial ring.
fn bareiss_determinant<C: Scalar>(mut a: Vec<Vec<MPoly<C>>>) -> Result<MPoly<C>> {
    let n = a.len();
    let vars = a[0][0].vars().to_vec();
    let mut negate = false;
    let mut prev = MPoly::one(&vars);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Counts the lines of a binary form `F(u, v)` of degree `k >= 1`:
/// `(distinct, real)`, where `distinct` counts distinct linear factors over
/// the complex numbers and `real` those defined over the reals. The first
/// variable of `F` plays the role of `u`.
pub fn binary_form_lines<C: OrderedScalar>(form: &MPoly<C>) -> Result<(usize, usize)> {
    if form.nvars() != 2 {
        return Err(Error::invalid(format!(
            "binary form needs exactly two variables, got {}",
            form.nvars()
        )));
    }
    if form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !form.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let k = form.total_degree().unwrap_or(0) as usize;
    if k == 0 {
        return Err(Error::invalid("binary form of degree 0"));
    }
    // F(1, t): coefficient of u^(k-j) v^j becomes the t^j coefficient
    let mut coeffs = vec![C::zero(); k + 1];
    for (m, c) in form.terms() {
        coeffs[m.exps()[1] as usize] = c.clone();
    }
    let dehom = UPoly::new(coeffs);
    let chart_deg = dehom.degree().unwrap_or(0);
    let at_infinity = usize::from(chart_deg < k);
    let sf = dehom.squarefree_part();
    let distinct = sf.degree().unwrap_or(0) + at_infinity;
    let real = if sf.degree().unwrap_or(0) > 0 { real_root_count(&sf) } else { 0 } + at_infinity;
    Ok((distinct, real))
}

#[cfg(test)]
mod tests;
