use super::groebner::{buchberger, GroebnerBasis};
use super::monomial::{monomials_below_degree, Monomial};
use super::order::MonomialOrder;
use super::poly::MultiPoly;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::unipoly::ExtNat;

/// Generators of `<gens> ∩ Q[x_k, ..., x_{n-1}]` with `k = drop_count`,
/// returned in the smaller ring (variable `k + i` becomes variable `i`).
pub fn eliminate(gens: &[MultiPoly], drop_count: usize) -> Result<Vec<MultiPoly>> {
    let gb = buchberger(gens, MonomialOrder::BlockElim(drop_count))?;
    Ok(gb
        .generators()
        .iter()
        .filter(|g| (0..drop_count).all(|v| !g.involves(v)))
        .map(|g| g.project_out_leading(drop_count))
        .collect())
}

/// `dim_Q Q[x]/<G>`, the number of standard monomials.
pub fn quotient_dimension(gb: &GroebnerBasis) -> ExtNat {
    let nvars = gb.nvars();
    let lms = gb.leading_monomials();
    if lms.iter().any(Monomial::is_one) {
        return ExtNat::Finite(0);
    }
    let zero_dimensional = (0..nvars).all(|v| lms.iter().any(|m| m.pure_power().is_some_and(|(i, _)| i == v)));
    if !zero_dimensional {
        return ExtNat::Infinite;
    }
    // Standard monomials form an order ideal; walk it, raising only
    // variables at or after the last raised one so each monomial is visited
    // once.
    fn walk(m: &mut Monomial, from: usize, lms: &[Monomial], count: &mut usize) {
        *count += 1;
        for v in from..m.nvars() {
            m.exponents_mut()[v] += 1;
            if !lms.iter().any(|l| l.divides(m)) {
                walk(m, v, lms, count);
            }
            m.exponents_mut()[v] -= 1;
        }
    }
    let mut count = 0;
    walk(&mut Monomial::one(nvars), 0, &lms, &mut count);
    ExtNat::Finite(count)
}

/// `dim_Q Q[x]/(<gens> + m^N)` with `m` the maximal ideal at the origin,
/// by rank of the Macaulay matrix of all products `u·f` truncated below
/// degree `N`. No Gröbner bases are involved.
pub fn quotient_dimension_truncated(gens: &[MultiPoly], n: u32) -> usize {
    assert!(n >= 1, "truncation order must be positive");
    let Some(nvars) = gens.first().map(MultiPoly::nvars) else {
        return 0;
    };
    let columns = monomials_below_degree(nvars, n);
    let index = |m: &Monomial| columns.binary_search_by(|c| c.degree().cmp(&m.degree()).then_with(|| m.cmp(c)));
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for f in gens {
        let Some(low) = f.terms().iter().map(|(m, _)| m.degree()).min() else {
            continue;
        };
        for u in &columns {
            if u.degree() + low >= n {
                continue;
            }
            let mut row = vec![Rational::zero(); columns.len()];
            for (m, c) in f.mul_monomial(u).truncate_degree(n).terms() {
                row[index(m).expect("monomial enumerated")] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return columns.len();
    }
    columns.len() - Matrix::from_rows(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(n, i)).collect()
    }

    #[test]
    fn enumeration_order_matches_index() {
        // monomials_below_degree lists by degree, then decreasing exponent
        // vector; the binary search above relies on it.
        let cols = monomials_below_degree(3, 4);
        for w in cols.windows(2) {
            assert!(w[0].degree() < w[1].degree() || (w[0].degree() == w[1].degree() && w[0] > w[1]));
        }
    }

    #[test]
    fn quotient_dimension_examples() {
        let v = vars(4);
        let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
        let one = MultiPoly::one(4);
        let gb = buchberger(&[y * y, x + &one, y - z, t.clone()], MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb), ExtNat::Finite(2));

        let v = vars(2);
        let gb = buchberger(&v, MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb), ExtNat::Finite(1));
        let gb = buchberger(&v[..1], MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb), ExtNat::Infinite);
        let gb = buchberger(&[MultiPoly::one(2)], MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb), ExtNat::Finite(0));
    }

    #[test]
    fn truncated_examples() {
        // <y^2, x + 1, y - z, t> moved to its root (-1, 0, 0, 0): <y^2, x, y - z, t>
        let v = vars(4);
        let (x, y, z, t) = (&v[0], &v[1], &v[2], &v[3]);
        assert_eq!(quotient_dimension_truncated(&[y * y, x.clone(), y - z, t.clone()], 3), 2);

        let v = vars(2);
        assert_eq!(quotient_dimension_truncated(&v, 1), 1);
        let x = MultiPoly::var(1, 0);
        assert_eq!(quotient_dimension_truncated(&[x.pow(3)], 5), 3);
        assert_eq!(quotient_dimension_truncated(&[&x + &MultiPoly::one(1)], 4), 0);
    }

    #[test]
    fn elimination_examples() {
        // ring (λ, x, y, z, t)
        let v = vars(5);
        let (l, x, y, z, t) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
        let one = MultiPoly::one(5);
        let curve = [x - &(&(l * l) - &one), y - l, z - l, t.clone()];
        let elim = eliminate(&curve, 1).unwrap();
        let w = vars(4);
        let (x, y, z, t) = (&w[0], &w[1], &w[2], &w[3]);
        let expected =
            buchberger(&[&(x - &(y * y)) + &MultiPoly::one(4), y - z, t.clone()], MonomialOrder::GrevLex).unwrap();
        let got = buchberger(&elim, MonomialOrder::GrevLex).unwrap();
        assert_eq!(got, expected);

        let v = vars(3);
        let elim = eliminate(&[&v[1] - &v[0], &v[2] - &v[0]], 1).unwrap();
        let w = vars(2);
        assert_eq!(elim, vec![&w[0] - &w[1]]);

        let v = vars(2);
        assert!(eliminate(&[&v[1] - &(&v[0] * &v[0])], 1).unwrap().is_empty());
    }
}
