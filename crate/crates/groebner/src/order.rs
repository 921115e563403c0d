//! Monomial orders, supplied per computation rather than baked into the
//! polynomials.

use multipoly::{grevlex, Monomial};
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Eliminate the first `front` variables: compare total degree in the
    /// front block first, break ties by full grevlex.
    Elim { front: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Elim { front } => {
                let da: u32 = a.0[..*front].iter().map(|&e| e as u32).sum();
                let db: u32 = b.0[..*front].iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| grevlex(a, b))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elimination_order_front_block_dominates() {
        let ord = MonomialOrder::Elim { front: 1 };
        // t > x^5 when t is the front variable
        let t = Monomial::from_exponents(&[1, 0]);
        let x5 = Monomial::from_exponents(&[0, 5]);
        assert_eq!(ord.cmp(&t, &x5), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&t, &x5), Ordering::Less);
    }
}
