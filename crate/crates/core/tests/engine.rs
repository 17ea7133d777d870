use proptest::prelude::*;
use sl2_tqft::engine::{closed_form, compose_word, evaluate, PunctureClass, SurfaceSpec};
use sl2_tqft::ff_oracle::count;
use sl2_tqft::generators;
use sl2_tqft::verify::{ff_grid, FfCheck};

fn puncture() -> impl Strategy<Value = PunctureClass> {
    prop::sample::select(PunctureClass::ALL.to_vec())
}

fn spec(max_genus: u32, max_punctures: usize) -> impl Strategy<Value = SurfaceSpec> {
    (1..=max_genus, prop::collection::vec(puncture(), 0..=max_punctures))
        .prop_map(|(g, ps)| SurfaceSpec::new(g, ps))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariant_under_puncture_permutation(s in spec(3, 4), seed in any::<u64>()) {
        let mut ps = s.punctures.clone();
        let n = ps.len();
        for i in (1..n).rev() {
            ps.swap(i, (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(evaluate(&SurfaceSpec::new(s.genus, ps)).unwrap(), evaluate(&s).unwrap());
    }

    #[test]
    fn engine_equals_closed_form(s in spec(5, 5)) {
        prop_assert_eq!(evaluate(&s).unwrap(), closed_form(&s).unwrap());
    }

    #[test]
    fn depends_only_on_genus_parabolic_count_and_sign(g in 1u32..4, rp in 0usize..4, rm in 0usize..4, t in 0usize..3) {
        let s = SurfaceSpec::with_counts(g, rp, rm, t);
        let r = rp + rm;
        let minus = usize::from(s.sigma_sign() < 0);
        let canonical = SurfaceSpec::with_counts(g, r - minus.min(r), minus.min(r), minus.saturating_sub(r));
        prop_assert_eq!(canonical.sigma_sign(), s.sigma_sign());
        prop_assert_eq!(evaluate(&canonical).unwrap(), evaluate(&s).unwrap());
    }
}

#[test]
fn identity_punctures_are_invisible() {
    for g in 1..4 {
        let base = evaluate(&SurfaceSpec::closed(g)).unwrap();
        for k in 1..3 {
            let with_id = evaluate(&SurfaceSpec::new(g, vec![PunctureClass::Id; k])).unwrap();
            assert_eq!(with_id, base, "g={g} k={k}");
        }
    }
}

#[test]
fn genus_word_matches_repeated_tube() {
    let word = compose_word(&["L", "L", "L_JPlus"]).unwrap();
    let expected = generators::rz_genus().pow(2).mul_mat(generators::rz_jplus());
    assert_eq!(word, expected);
}

#[test]
fn counts_agree_at_five() {
    for s in ff_grid(2, 2) {
        let check = FfCheck::run(&s, 5).unwrap();
        assert!(check.agree, "{s}: {} vs {}", check.expected, check.counted);
    }
}

#[test]
fn counts_agree_at_three_for_untwisted_specs() {
    for s in ff_grid(2, 2).into_iter().filter(|s| s.sigma_sign() > 0) {
        let check = FfCheck::run(&s, 3).unwrap();
        assert!(check.agree, "{s}: {} vs {}", check.expected, check.counted);
    }
}

#[test]
fn counts_agree_at_seven_for_untwisted_genus_one() {
    for s in ff_grid(1, 2).into_iter().filter(|s| s.sigma_sign() > 0) {
        let poly = evaluate(&s).unwrap();
        assert_eq!(poly.eval_int(7).unwrap(), count(&s, 7).unwrap(), "{s}");
    }
}
