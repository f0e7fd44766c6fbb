use homz_core::battery::{self, rng};
use homz_core::fgab::{direct_sum, tensor};
use homz_core::torfun::{free_resolution, tor, tor_additivity_check, tor_symmetry_check, ResolutionStyle};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tor_zero_is_tensor_and_tor_one_is_torsion(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = battery::random_group(&mut r, 20, 2);
        let b = battery::random_group(&mut r, 20, 2);
        let t0 = tor(&a, &b, 0, None).unwrap();
        let t = tensor(&a, &b);
        prop_assert_eq!(t0.group.canonical(), t.group().canonical());
        prop_assert_eq!(tor(&a, &b, 1, None).unwrap().group.canonical().free_rank, 0);
        prop_assert!(tor(&a, &b, 2, None).unwrap().group.is_trivial());
    }

    #[test]
    fn tor_ignores_the_resolution(seed in any::<u64>(), pad in 1usize..=2) {
        let mut r = rng(seed);
        let g = battery::random_group(&mut r, 20, 2);
        let b = battery::random_finite_group(&mut r, 20);
        let padded = free_resolution(&g, ResolutionStyle::Padded(pad));
        for n in 0..=2 {
            let x = tor(&g, &b, n, None).unwrap();
            let y = tor(&g, &b, n, Some(&padded)).unwrap();
            prop_assert_eq!(x.group.canonical(), y.group.canonical(), "n = {}", n);
        }
    }

    #[test]
    fn tor_is_symmetric_and_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = battery::random_small_group(&mut r);
        let b = battery::random_small_group(&mut r);
        let c = battery::random_small_group(&mut r);
        for n in 0..=1 {
            prop_assert!(tor_symmetry_check(&a, &b, n).unwrap());
            prop_assert!(tor_additivity_check(&a, &[b.clone(), c.clone()], n).unwrap());
            let left = tor(&direct_sum(&a, &b).group, &c, n, None).unwrap();
            let split = direct_sum(
                &tor(&a, &c, n, None).unwrap().group,
                &tor(&b, &c, n, None).unwrap().group,
            );
            prop_assert_eq!(left.group.canonical(), split.group.canonical());
        }
    }

    #[test]
    fn tor_vanishes_on_free_groups(seed in any::<u64>(), rank in 0usize..=3) {
        let mut r = rng(seed);
        let b = battery::random_group(&mut r, 20, 1);
        let free = homz_core::FgAbGroup::free(rank);
        prop_assert!(tor(&free, &b, 1, None).unwrap().group.is_trivial());
        prop_assert!(tor(&b, &free, 1, None).unwrap().group.is_trivial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn schanuel_holds_for_random_presentations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = battery::random_group(&mut r, 20, 2);
        let p = battery::random_presentation(&mut r, &g).unwrap();
        let q = battery::random_presentation(&mut r, &g).unwrap();
        prop_assert!(homz_core::torfun::schanuel_check(&g, &p, &q).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn tor_sequence_terms_match_tor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = if seed % 2 == 0 {
            battery::random_split_ses(&mut r).unwrap()
        } else {
            battery::random_non_split_ses(&mut r).unwrap()
        };
        let b = battery::random_small_group(&mut r);
        let les = homz_core::torfun::tor_les(&s, &b).unwrap();
        let seq = &les.sequence;
        prop_assert!(seq.is_exact());
        let inner = &seq.terms[1..seq.terms.len() - 1];
        prop_assert_eq!(inner.len() % 3, 0);
        let top = inner.len() / 3 - 1;
        for (k, row) in inner.chunks(3).enumerate() {
            let n = top - k;
            for (term, a) in row.iter().zip([s.left(), s.middle(), s.right()]) {
                let expected = tor(a, &b, n, None).unwrap().group;
                prop_assert_eq!(term.group.canonical(), expected.canonical(), "{}", term.label);
            }
        }
    }
}
