use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Two blocks split at index `k`: the first `k` variables form a block that
    /// dominates the rest lexicographically; grevlex inside each block.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn grevlex_small_cases() {
        let o = MonomialOrder::GrevLex;
        // x > y > z; x*z < y^2 in grevlex
        assert_eq!(o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[0, 0, 3]), &mono(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block(1);
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 1, 1]), &mono(&[0, 2, 0])), Ordering::Less);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..4).prop_map(MonomialOrder::Block),
        ]
    }

    proptest! {
        #[test]
        fn order_is_total_multiplicative_and_well_founded(
            o in orders(),
            a in prop::collection::vec(0u32..5, 3),
            b in prop::collection::vec(0u32..5, 3),
            c in prop::collection::vec(0u32..5, 3),
        ) {
            let (a, b, c) = (mono(&a), mono(&b), mono(&c));
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(o.cmp(&a, &Monomial::one(3)), Ordering::Less);
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }
    }
}
