mod common;

use acm_core::deform::syzygies;
use acm_core::hilbert::hilbert_function;
use acm_core::polyring::PolyRing;
use common::props::{self, random_form, random_ideal, rng, FP};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn spairs_reduce_to_zero(seed in any::<u64>()) {
        prop_assert!(props::spairs_reduce_to_zero(seed));
    }

    #[test]
    fn reduced_basis_is_unique(seed in any::<u64>()) {
        prop_assert!(props::reduced_basis_is_unique(seed));
    }

    #[test]
    fn algebra_laws(seed in any::<u64>()) {
        prop_assert!(props::algebra_laws_hold(seed));
    }

    #[test]
    fn elimination_matches_oracle(seed in any::<u64>()) {
        prop_assert!(props::elimination_matches_oracle(seed));
    }

    #[test]
    fn tangent_dimension_is_coordinate_free(seed in any::<u64>()) {
        prop_assert!(props::tangent_invariant(seed));
    }

    #[test]
    fn hilbert_function_matches_oracle(seed in any::<u64>(), d in 0u32..5) {
        let mut r = rng(seed);
        let ring = PolyRing::standard(4, FP);
        let i = random_ideal(&ring, &mut r);
        prop_assert_eq!(hilbert_function(&i, d).unwrap(), common::hf(FP, 4, i.generators(), d));
    }

    #[test]
    fn membership_matches_oracle(seed in any::<u64>(), d in 1u32..4) {
        let mut r = rng(seed);
        let ring = PolyRing::standard(3, FP);
        let i = random_ideal(&ring, &mut r);
        let f = random_form(&ring, d, 3, &mut r);
        prop_assert_eq!(i.contains(&f).unwrap(), common::member(FP, 3, i.generators(), &f));
    }

    #[test]
    fn syzygies_generate(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = PolyRing::standard(3, FP);
        let i = random_ideal(&ring, &mut r);
        let gens = i.generators();
        let s = syzygies(gens).unwrap();
        prop_assert!(s.annihilates());
        let shifts: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
        let top = shifts.iter().sum::<u32>() + 1;
        for d in 0..=top {
            prop_assert_eq!(
                common::module_dim(FP, 3, &shifts, &s.rows, d),
                common::syzygy_kernel_dim(FP, 3, gens, d)
            );
        }
    }
}
