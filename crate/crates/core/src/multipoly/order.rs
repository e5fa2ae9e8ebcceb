use std::cmp::Ordering;

use super::monomial::Monomial;

/// Term orders on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Graded reverse lexicographic with `x_0 > x_1 > ...`.
    GrevLex,
    /// Elimination order for the first `k` variables: those are compared
    /// lexicographically first, ties are broken by grevlex on the rest.
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(a.len());
                a[..k].cmp(&b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
