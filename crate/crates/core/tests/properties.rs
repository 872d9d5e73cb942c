use num_bigint::BigInt;
use proptest::prelude::*;

use agpoly_core::algebra::format::{from_machine, render_text, to_machine};
use agpoly_core::algebra::{divide_exact, expand_factor, expand_rational, rational_add, series_mul};
use agpoly_core::fermionic::fermionic_sum;
use agpoly_core::polyhedral::{enumerate_basis, hilbert_by_transfer, reflect_check};
use agpoly_core::{BinomialFactor, LaurentPoly, Params, RationalFn, Series};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..6, -3i64..4, -20i64..20), 0..8)
        .prop_map(LaurentPoly::from_terms)
}

fn nonneg_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i64..6, 0i64..4, -20i64..20), 0..8)
        .prop_map(LaurentPoly::from_terms)
}

/// Exponents `(a, b)` with `a > 0` and `0 <= b <= a`, as the vertex
/// formulas produce after canonicalization.
fn canonical_exponent() -> impl Strategy<Value = (i64, i64)> {
    (1i64..6).prop_flat_map(|a| (Just(a), 0..=a))
}

fn params() -> impl Strategy<Value = Params> {
    (2i64..6, 0i64..4)
        .prop_flat_map(|(n, k)| (Just(n), Just(k), 0..=k, 0..=k))
        .prop_map(|(n, k, l, r)| Params::new(n, k, l, r).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn geometric_series_inverts_binomial((a, b) in canonical_exponent(), cutoff in 0i64..40) {
        let s = expand_factor(a, b, cutoff).unwrap();
        let f = Series::new(LaurentPoly::one() - LaurentPoly::unit(a, b), cutoff).unwrap();
        prop_assert_eq!(series_mul(&s, &f), Series::one(cutoff));
    }

    #[test]
    fn both_regions_sum_to_one((a, b) in canonical_exponent(), cutoff in 0i64..40) {
        // 1/(1 - x) + 1/(1 - 1/x) = 1
        let pos = expand_factor(a, b, cutoff).unwrap();
        let neg = expand_factor(-a, -b, cutoff).unwrap();
        prop_assert_eq!(pos.add(&neg), Series::one(cutoff));
    }

    #[test]
    fn mixed_signs_are_rejected(a in 1i64..5, b in 1i64..5) {
        prop_assert!(expand_factor(a, -b, 10).is_err());
        prop_assert!(expand_factor(-a, b, 10).is_err());
    }

    #[test]
    fn canonicalization_preserves_expansion((a, b) in canonical_exponent(), cutoff in 0i64..30) {
        // 1/(1 - x) = -x^{-1}/(1 - x^{-1}), written with the flipped factor
        let (f, unit) = BinomialFactor::canonicalize(-a, -b).unwrap();
        prop_assert_eq!((f.a(), f.b()), (a, b));
        prop_assert_eq!(unit, Some((a, b)));
        let flipped = RationalFn::monomial_over(0, 0, &[(-a, -b)]).unwrap();
        let direct = expand_factor(-a, -b, cutoff).unwrap();
        prop_assert_eq!(expand_rational(&flipped, cutoff).unwrap(), direct);
    }

    #[test]
    fn exact_division_recovers_quotient(g in poly(), (a, b) in canonical_exponent()) {
        let f = BinomialFactor::new(a, b).unwrap();
        let product = &g * &f.as_poly();
        prop_assert_eq!(divide_exact(&product, &f), Some(g));
    }

    #[test]
    fn division_is_never_wrong(num in poly(), (a, b) in canonical_exponent()) {
        let f = BinomialFactor::new(a, b).unwrap();
        if let Some(h) = divide_exact(&num, &f) {
            prop_assert_eq!(&h * &f.as_poly(), num);
        }
    }

    #[test]
    fn addition_commutes_with_expansion(
        (c1, d1) in (0i64..4, 0i64..3),
        (c2, d2) in (0i64..4, 0i64..3),
        f1 in prop::collection::vec(canonical_exponent(), 1..3),
        f2 in prop::collection::vec(canonical_exponent(), 1..3),
        cutoff in 0i64..25,
    ) {
        let x = RationalFn::monomial_over(c1, d1.min(c1), &f1).unwrap();
        let y = RationalFn::monomial_over(c2, d2.min(c2), &f2).unwrap();
        let sum = expand_rational(&rational_add(&x, &y), cutoff).unwrap();
        let parts = expand_rational(&x, cutoff).unwrap().add(&expand_rational(&y, cutoff).unwrap());
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn polynomial_fractions_reduce(p in nonneg_poly(), fs in prop::collection::vec(canonical_exponent(), 0..3)) {
        let mut num = p.clone();
        let mut x = RationalFn::from_poly(LaurentPoly::one());
        for &(a, b) in &fs {
            num = &num * &BinomialFactor::new(a, b).unwrap().as_poly();
            x.divide_by_raw(a, b).unwrap();
        }
        let x = x.mul_poly(&num);
        prop_assert_eq!(x.to_poly(), Some(p));
    }

    #[test]
    fn machine_format_round_trips(p in poly()) {
        let v = to_machine(&p);
        let back = from_machine(&v).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(to_machine(&back), v);
        prop_assert_eq!(render_text(&back), render_text(&p));
    }

    #[test]
    fn hilbert_polynomial_shape(par in params()) {
        let d = hilbert_by_transfer(&par).unwrap();
        prop_assert_eq!(d.coeff(0, 0), BigInt::from(1));
        for (&(i, j), c) in d.iter() {
            prop_assert!(c > &BigInt::from(0));
            prop_assert!(0 <= j && j <= i);
        }
        let count = enumerate_basis(&par).unwrap().len();
        prop_assert_eq!(d.eval_at_one(), BigInt::from(count));
        prop_assert_eq!(fermionic_sum(&par).unwrap(), d);
        prop_assert!(reflect_check(&par).unwrap());
    }

    #[test]
    fn hilbert_polynomial_grows_with_bounds(par in params()) {
        let d = hilbert_by_transfer(&par).unwrap();
        if par.r < par.k {
            let bigger = hilbert_by_transfer(&par.with_r(par.r + 1)).unwrap();
            for (&(i, j), c) in d.iter() {
                prop_assert!(bigger.coeff(i, j) >= *c);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn vertex_sums_beyond_the_fixed_grid(n in 2i64..9, k in 0i64..3, l in 0i64..3, r in 0i64..3) {
        let par = Params::new(n, k, l.min(k), r.min(k)).unwrap();
        let cutoff = agpoly_core::bosonic::default_cutoff(&par).unwrap();
        let d = hilbert_by_transfer(&par).unwrap();
        for parity in agpoly_core::bosonic::select_case(&par) {
            let s = agpoly_core::bosonic::bosonic_sum(&par, parity, cutoff).unwrap();
            prop_assert!(s.agrees_with_poly(&d), "{} {}", par, parity);
        }
    }
}
