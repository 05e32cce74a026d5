use num_traits::{One, Zero};
use rand::Rng;

use crate::error::Result;
use crate::{Poly, Rational};

/// Invertible affine substitution `x ↦ A x + b` with small integer entries.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineChange {
    pub matrix: Vec<Vec<Rational>>,
    pub shift: Vec<Rational>,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl AffineChange {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        AffineChange {
            matrix,
            shift: vec![Rational::zero(); n],
        }
    }

    /// Random invertible change with entries in `-3..=3`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        loop {
            let matrix: Vec<Vec<Rational>> =
                (0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()).collect();
            let shift = (0..n).map(|_| int(rng.gen_range(-3..=3))).collect();
            let change = AffineChange { matrix, shift };
            if change.inverse().is_some() {
                return change;
            }
        }
    }

    /// `f(A x + b)`.
    pub fn pull_back(&self, f: &Poly) -> Result<Poly> {
        let vars = f.vars().to_vec();
        let images: Vec<Poly> = self
            .matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, b)| {
                let mut acc = Poly::constant(b.clone(), &vars);
                for (v, a) in vars.iter().zip(row) {
                    acc = &acc + &Poly::var(v, &vars)?.scale(a);
                }
                Ok(acc)
            })
            .collect::<Result<_>>()?;
        f.compose(&images)
    }

    /// The point `y` with `A y + b = p`, so that `f(p) = pull_back(f)(y)`.
    pub fn preimage(&self, p: &[Rational]) -> Option<Vec<Rational>> {
        let inv = self.inverse()?;
        let d: Vec<Rational> = p.iter().zip(&self.shift).map(|(a, b)| a - b).collect();
        Some(
            inv.iter()
                .map(|row| row.iter().zip(&d).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    fn inverse(&self) -> Option<Vec<Vec<Rational>>> {
        let n = self.matrix.len();
        let mut a: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        for k in 0..n {
            let piv = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, piv);
            let lead = a[k][k].clone();
            for c in a[k].iter_mut() {
                *c /= lead.clone();
            }
            for r in 0..n {
                if r != k && !a[r][k].is_zero() {
                    let f = a[r][k].clone();
                    let pivot_row = a[k].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
    }
}
