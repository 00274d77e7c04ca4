//! Property tests for the algebraic invariants: transposition, run
//! decompositions, Laurent arithmetic, the N -> -N substitution, and the
//! duality identities on randomly shaped inputs.

use num::{BigInt, Zero};
use proptest::prelude::*;

use negn::{
    check_prop1, check_prop2, check_z2, dim_hook, dim_weyl_oracle, interpolate, LaurentPoly,
    Rational, StableRep, YoungDiagram,
};

fn diagram(max_part: usize, max_rows: usize) -> impl Strategy<Value = YoungDiagram> {
    prop::collection::vec(1..=max_part, 0..=max_rows).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram::new(rows).unwrap()
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn laurent_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::btree_map(-5i64..=5, rational(), 0..=6).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #[test]
    fn transpose_is_involution(y in diagram(9, 9)) {
        prop_assert_eq!(y.transpose().transpose(), y.clone());
        prop_assert_eq!(y.transpose().area(), y.area());
    }

    #[test]
    fn runs_swap_under_transpose(y in diagram(8, 8)) {
        prop_assume!(!y.is_empty());
        let r = y.runs().unwrap();
        let rt = y.transpose().runs().unwrap();
        prop_assert_eq!(r.a(), rt.b());
        prop_assert_eq!(r.b(), rt.a());
        prop_assert_eq!(r.to_diagram(), y);
    }

    #[test]
    fn hook_multiset_is_transpose_invariant(y in diagram(7, 7)) {
        let mut a: Vec<usize> = y.hook_lengths().into_iter().flatten().collect();
        let mut b: Vec<usize> = y.transpose().hook_lengths().into_iter().flatten().collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn substitute_neg_is_involution(p in laurent_poly()) {
        prop_assert_eq!(p.substitute_neg().substitute_neg(), p);
    }

    #[test]
    fn poly_ring_laws(p in laurent_poly(), q in laurent_poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &q, &q * &p);
        // Evaluation is a ring homomorphism away from the pole.
        let n = Rational::new(BigInt::from(3), BigInt::from(2));
        let lhs = (&p * &q).evaluate(&n).unwrap();
        let rhs = p.evaluate(&n).unwrap() * q.evaluate(&n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    // The substitution/evaluation compatibility gets a bigger case budget.
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn substitution_commutes_with_negated_evaluation(
        p in laurent_poly(),
        numer in -20i64..=20,
        denom in 1i64..=7,
    ) {
        prop_assume!(numer != 0);
        let n = Rational::new(BigInt::from(numer), BigInt::from(denom));
        prop_assert_eq!(
            p.substitute_neg().evaluate(&n).unwrap(),
            p.evaluate(&(-n)).unwrap()
        );
    }
}

proptest! {
    #[test]
    fn interpolation_reproduces_its_points(
        values in prop::collection::vec(rational(), 1..=8),
        start in -10i64..=10,
    ) {
        let points: Vec<(i64, Rational)> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| (start + i as i64, v))
            .collect();
        let p = interpolate(&points).unwrap();
        prop_assert!(p.degree().unwrap_or(0) < points.len() as i64);
        prop_assert!(p.min_exponent().unwrap_or(0) >= 0);
        for (x, v) in &points {
            prop_assert_eq!(&p.evaluate_int(*x).unwrap(), v);
        }
    }

    #[test]
    fn hook_and_weyl_dimensions_agree(y in diagram(6, 6), extra in 0i64..=5) {
        let n = (y.row_count() as i64).max(1) + extra;
        let d = dim_hook(&y, n).unwrap();
        prop_assert_eq!(d.clone(), dim_weyl_oracle(&y, n).unwrap());
        if (y.row_count() as i64) < n || y.is_empty() {
            prop_assert!(d > BigInt::zero());
        }
    }
}

proptest! {
    // Full duality checks interpolate per case; keep the budget modest.
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn duality_identities_hold(lambda in diagram(4, 4), tau in diagram(4, 4)) {
        let rep = StableRep::new(lambda, tau);
        prop_assert!(check_prop1(&rep).unwrap().holds, "prop1 fails for {}", rep);
        prop_assert!(check_prop2(&rep).unwrap().holds, "prop2 fails for {}", rep);
        prop_assert!(check_z2(&rep).unwrap().holds, "z2 fails for {}", rep);
    }
}
