use num_bigint::BigInt;
use proptest::prelude::*;
use sl2_tqft::{LocalizedScalar, Poly};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..6, -9i64..10), 0..5)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar() -> impl Strategy<Value = LocalizedScalar> {
    (poly(), 0u32..4, 0u32..4).prop_map(|(n, a, b)| LocalizedScalar::new(n, a, b))
}

proptest! {
    #[test]
    fn addition_is_a_commutative_group(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &LocalizedScalar::zero(), x.clone());
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x + &(-&x), LocalizedScalar::zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_unital(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &LocalizedScalar::one(), x.clone());
    }

    #[test]
    fn multiplication_distributes(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn normalization_is_idempotent(x in scalar()) {
        let (a, b) = x.denominator_exps();
        prop_assert_eq!(LocalizedScalar::new(x.numerator().clone(), a, b), x);
    }

    #[test]
    fn cross_multiplication_is_equality(n in poly(), a in 0u32..3, b in 0u32..3, k in 0u32..3, l in 0u32..3) {
        let scaled = &(&n * &Poly::q_minus_one().pow(k)) * &Poly::q_plus_one().pow(l);
        prop_assert_eq!(LocalizedScalar::new(scaled, a + k, b + l), LocalizedScalar::new(n, a, b));
    }

    #[test]
    fn normalized_numerator_is_coprime_to_denominator(x in scalar()) {
        let (a, b) = x.denominator_exps();
        if a > 0 {
            prop_assert!(x.numerator().strip_q_minus_one().is_none());
        }
        if b > 0 {
            prop_assert!(x.numerator().strip_q_plus_one().is_none());
        }
    }

    #[test]
    fn exact_div_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn exact_div_by_zero_fails(a in poly()) {
        prop_assert!(a.exact_div(&Poly::zero()).is_err());
    }

    #[test]
    fn units_invert(c in prop::sample::select(vec![-1i64, 1]), e in -3i64..4, a in 0u32..3, b in 0u32..3) {
        let num = Poly::monomial(BigInt::from(c), e);
        let unit = &LocalizedScalar::new(num, 0, 0)
            * &LocalizedScalar::new(Poly::one(), a, b);
        let inv = unit.inverse().unwrap();
        prop_assert!((&unit * &inv).is_one());
    }

    #[test]
    fn bivariate_matches_diagonal_evaluation(p in poly(), n in prop::sample::select(vec![-3i64, -2, 2, 3, 5])) {
        let n = BigInt::from(n);
        let uv = p.to_bivariate().eval_rational(&n, &n).unwrap();
        prop_assert_eq!(uv, p.eval_rational(&(&n * &n)).unwrap());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), n in prop::sample::select(vec![-2i64, 2, 3, 7])) {
        let n = BigInt::from(n);
        let ea = a.eval_rational(&n).unwrap();
        let eb = b.eval_rational(&n).unwrap();
        prop_assert_eq!((&a * &b).eval_rational(&n).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_rational(&n).unwrap(), ea + eb);
    }

    #[test]
    fn text_round_trips(x in scalar(), p in poly()) {
        prop_assert_eq!(x.to_string().parse::<LocalizedScalar>().unwrap(), x);
        prop_assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
    }

    #[test]
    fn json_round_trips(p in poly()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), p);
    }

    #[test]
    fn rational_embedding_is_a_ring_map(x in scalar(), y in scalar()) {
        prop_assert_eq!((&x * &y).to_rational(), &x.to_rational() * &y.to_rational());
        prop_assert_eq!((&x + &y).to_rational(), &x.to_rational() + &y.to_rational());
    }
}
