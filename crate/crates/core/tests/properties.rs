//! Randomized invariants across the library, driven by seeded instance
//! generators so that failures shrink to a reproducible seed.

use eigencurve_core::classical::{classical_report, multiplicity_via_nullspace};
use eigencurve_core::geometry::{curve_ideal, gcd_witness, is_admissible};
use eigencurve_core::multipoly::{buchberger, eliminate, MonomialOrder, MultiPoly};
use eigencurve_core::projective::{bezout_check, infinity_multiplicity, reversed_det};
use eigencurve_core::random::InstanceGenerator;
use eigencurve_core::{ExtNat, Matrix, MatrixPolynomial, Rational, UniPoly};
use proptest::prelude::*;

fn curve(g: &mut InstanceGenerator, kind: u8, n: usize) -> MatrixPolynomial {
    match kind {
        0 => g.pencil(n),
        1 => g.curve_with_rational_spectrum(n, 2),
        _ => g.monic_quadratic(n),
    }
}

fn eval_entrywise(l: &MatrixPolynomial, at: &Rational) -> Vec<Rational> {
    l.entries().iter().map(|e| e.eval(at)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_commutes_with_evaluation(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let l = curve(&mut g, kind, n);
        let at = g.rational(5, 4);
        prop_assert_eq!(l.determinant().eval(&at), l.evaluate(&at).det().unwrap());
        prop_assert_eq!(l.evaluate(&at).entries().to_vec(), eval_entrywise(&l, &at));
    }

    #[test]
    fn characteristic_pencils_have_monic_degree_n_det(seed in any::<u64>(), n in 1usize..=4) {
        let mut g = InstanceGenerator::new(seed);
        let t = g.matrix(n, 4, 3);
        let det = MatrixPolynomial::characteristic(&t).unwrap().determinant();
        prop_assert_eq!(det.degree(), Some(n));
        prop_assert!(det.leading_coeff().unwrap().is_one());
    }

    #[test]
    fn factor_table_accounts_for_degree(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let s = curve(&mut g, kind, n).spectrum();
        prop_assume!(!s.identically_singular);
        let from_table: usize = s.factor_table.iter().map(|(f, e)| e * f.degree().unwrap()).sum();
        prop_assert_eq!(s.total_finite_multiplicity, from_table);
        let mut product = UniPoly::constant(s.det.leading_coeff().unwrap().clone());
        for (f, e) in &s.factor_table {
            product = &product * &f.pow(*e as u32);
        }
        prop_assert_eq!(product, s.det);
    }

    #[test]
    fn monic_curves_have_nm_finite_eigenvalues(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let l = g.monic_quadratic(n);
        prop_assert_eq!(l.determinant().degree(), Some(2 * n));
        prop_assert_eq!(infinity_multiplicity(&l).unwrap(), 0);
    }

    #[test]
    fn degree_equals_largest_entry_degree(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let l = curve(&mut g, kind, n);
        let max_entry = l.entries().iter().filter_map(|e| e.degree()).max();
        prop_assert_eq!(max_entry, Some(l.degree()));
    }

    #[test]
    fn reversed_det_matches_inverted_chart(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let l = curve(&mut g, kind, n);
        prop_assume!(!l.is_identically_singular());
        let mu = loop {
            let mu = g.rational(4, 3);
            if !mu.is_zero() {
                break mu;
            }
        };
        let dn = (l.degree() * l.n()) as u32;
        let lhs = reversed_det(&l).unwrap().eval(&mu);
        prop_assert_eq!(lhs, &mu.pow(dn) * &l.determinant().eval(&mu.recip()));
    }

    #[test]
    fn completed_bezout_identity(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let l = curve(&mut g, kind, n);
        prop_assume!(!l.is_identically_singular());
        let b = bezout_check(&l).unwrap();
        prop_assert_eq!(b.finite_sum + b.infinity_multiplicity, l.degree() * n);
        prop_assert_eq!(b.meets_infinity, b.infinity_multiplicity > 0);
    }

    #[test]
    fn pencils_are_admissible(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        prop_assert!(is_admissible(&g.pencil(n)));
    }

    #[test]
    fn admissible_curves_have_linear_gcd_witness(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let l = curve(&mut g, kind, n);
        prop_assume!(is_admissible(&l));
        let mut points: Vec<Rational> = l.spectrum().rational_eigenvalues.into_iter().map(|(r, _)| r).collect();
        points.push(g.rational(5, 3));
        for at in points {
            prop_assert_eq!(gcd_witness(&l, &at).unwrap(), UniPoly::linear_root(&at));
        }
    }

    #[test]
    fn curve_ideal_pulls_back_to_zero(seed in any::<u64>(), kind in 0u8..3, n in 1usize..=2) {
        let mut g = InstanceGenerator::new(seed);
        let l = curve(&mut g, kind, n);
        let subs: Vec<MultiPoly> = l.entries().iter().map(|e| MultiPoly::from_unipoly(1, 0, e)).collect();
        for f in curve_ideal(&l).generators {
            prop_assert!(f.substitute(&subs, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn nullspace_and_determinant_multiplicities_agree(seed in any::<u64>(), n in 1usize..=4) {
        let mut g = InstanceGenerator::new(seed);
        let t = g.split_matrix(n);
        let pencil = MatrixPolynomial::characteristic(&t).unwrap();
        for (at, _) in pencil.spectrum().rational_eigenvalues {
            let m = multiplicity_via_nullspace(&t, &at).unwrap();
            prop_assert_eq!(ExtNat::Finite(m), pencil.algebraic_multiplicity(&at));
            let r = classical_report(&t, &at).unwrap();
            prop_assert!(r.kernel_dims.windows(2).all(|w| w[0] <= w[1]));
            prop_assert_eq!(r.kernel_dims.len(), r.nu + 1);
            prop_assert_eq!(r.kernel_dims[r.nu], r.kernel_dims[r.nu - 1]);
            let a = Matrix::scalar(n, &at).sub(&t);
            for extra in 1..=2 {
                let dim = eigencurve_core::classical::nullspace_dim(&a.pow((r.nu + extra) as u32)).unwrap();
                prop_assert_eq!(dim, r.generalized_dim);
            }
        }
    }

    #[test]
    fn groebner_bases_are_canonical(seed in any::<u64>(), nvars in 1usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let gens = g.ideal(nvars, 3, 3);
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::BlockElim(1)] {
            let gb = buchberger(&gens, order).unwrap();
            let mut other: Vec<MultiPoly> = gens.iter().rev().cloned().collect();
            let r = g.polynomial(nvars, 2, 3, 0.5);
            other.push(&(&gens[0] * &r) + &gens[gens.len() - 1]);
            prop_assert_eq!(&gb, &buchberger(&other, order).unwrap());
            prop_assert!(gb.is_reduced());
            let f = g.polynomial(nvars, 4, 4, 0.5);
            let nf = gb.normal_form(&f).unwrap();
            prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf);
        }
    }

    #[test]
    fn elimination_yields_the_contraction(seed in any::<u64>(), nvars in 2usize..=3) {
        let mut g = InstanceGenerator::new(seed);
        let gens = g.ideal(nvars, 2, 3);
        let full = buchberger(&gens, MonomialOrder::BlockElim(1)).unwrap();
        let contracted = eliminate(&gens, 1).unwrap();
        for e in &contracted {
            prop_assert_eq!(e.nvars(), nvars - 1);
            let lifted = e.lift(1);
            prop_assert!(full.contains(&lifted).unwrap());
            let r = g.polynomial(nvars - 1, 2, 3, 0.5);
            prop_assert!(full.contains(&(e * &r).lift(1)).unwrap());
        }
        // The t-free part of the block basis generates the contraction.
        let small = buchberger(&contracted, MonomialOrder::GrevLex).unwrap();
        for f in full.generators().iter().filter(|f| !f.involves(0)) {
            prop_assert!(small.contains(&f.project_out_leading(1)).unwrap());
        }
    }
}
