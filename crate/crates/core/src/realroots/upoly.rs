use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{MPoly, Monomial};
use crate::scalar::Scalar;

/// Dense univariate polynomial, coefficients from degree 0 upward.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        UPoly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        UPoly::new(vec![C::zero(), C::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| C::of_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::of_u64(i as u64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(C::one() / self.leading_coeff()))
    }

    /// Quotient and remainder of field division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() / lc.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| &(&acc * inner) + &UPoly::constant(c.clone()))
    }

    /// Embeds into a multivariate polynomial in `var` over `vars`.
    pub fn to_mpoly<S: AsRef<str>>(&self, var: &str, vars: &[S]) -> MPoly<C> {
        let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let i = names.iter().position(|v| v == var).expect("variable in list");
        MPoly::from_terms(
            &names,
            self.coeffs.iter().enumerate().map(|(e, c)| {
                let mut m = vec![0u32; names.len()];
                m[i] = e as u32;
                (Monomial::new(m), c.clone())
            }),
        )
    }

    /// Reads a polynomial that involves at most `var`.
    pub fn from_mpoly(p: &MPoly<C>, var: &str) -> Option<Self> {
        let others = p.support_vars();
        if others.iter().any(|v| v != var) {
            return None;
        }
        let i = p.var_index(var);
        let deg = match i {
            Some(i) => p.terms().map(|(m, _)| m.exps()[i]).max().unwrap_or(0) as usize,
            None => 0,
        };
        let mut coeffs = vec![C::zero(); deg + 1];
        for (m, c) in p.terms() {
            let e = i.map(|i| m.exps()[i]).unwrap_or(0) as usize;
            coeffs[e] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    /// Determinant of the Sylvester matrix with the rows of `self` on top.
    pub fn resultant(&self, other: &Self) -> C {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return C::zero(),
        };
        if m == 0 && n == 0 {
            return C::one();
        }
        let size = m + n;
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(size);
        for (count, p, d) in [(n, self, m), (m, other, n)] {
            for r in 0..count {
                let mut row = vec![C::zero(); size];
                for k in 0..=d {
                    row[r + k] = p.coeffs[d - k].clone();
                }
                rows.push(row);
            }
        }
        determinant(rows)
    }
}

/// Determinant over a field by Gaussian elimination.
pub(crate) fn determinant<C: Scalar>(mut a: Vec<Vec<C>>) -> C {
    let n = a.len();
    let mut det = C::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return C::zero(),
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det = det * pv.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / pv.clone();
            for c in col..n {
                let v = a[col][c].clone() * f.clone();
                a[r][c] = a[r][c].clone() - v;
            }
        }
    }
    det
}

impl<C: Scalar> Add for &UPoly<C> {
    type Output = UPoly<C>;
    fn add(self, rhs: &UPoly<C>) -> UPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(C::zero);
                    let b = rhs.coeffs.get(i).cloned().unwrap_or_else(C::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<C: Scalar> Neg for &UPoly<C> {
    type Output = UPoly<C>;
    fn neg(self) -> UPoly<C> {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Scalar> Sub for &UPoly<C> {
    type Output = UPoly<C>;
    fn sub(self, rhs: &UPoly<C>) -> UPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Scalar> Mul for &UPoly<C> {
    type Output = UPoly<C>;
    fn mul(self, rhs: &UPoly<C>) -> UPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }
}

impl<C: Scalar> fmt::Display for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly("t", &["t"]))
    }
}
