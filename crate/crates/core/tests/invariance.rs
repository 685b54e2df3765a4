//! Everything reported about a semigroup must survive renaming its elements.

use proptest::prelude::*;

use subdirect_core::catalog;
use subdirect_core::certify::{distinguish, divisor_spectrum, divisor_spectrum_of, DistinguishOptions, Verdict};
use subdirect_core::classify::classify;
use subdirect_core::constructions::t_m;
use subdirect_core::enumerate::{enumerate_subdirect, DEFAULT_CENSUS_CAP};
use subdirect_core::iso::Fingerprint;
use subdirect_core::structure::{analyze, nilpotency_class};
use subdirect_core::FiniteSemigroup;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn named() -> impl Strategy<Value = FiniteSemigroup> {
    prop::sample::select(catalog::names()).prop_map(|n| catalog::get(n).unwrap())
}

fn relabelled() -> impl Strategy<Value = (FiniteSemigroup, FiniteSemigroup)> {
    named()
        .prop_flat_map(|s| {
            let n = s.order();
            (Just(s), permutation(n))
        })
        .prop_map(|(s, p)| {
            let r = s.relabel(&p).unwrap();
            (s, r)
        })
}

proptest! {
    #[test]
    fn classification_is_label_free((s, r) in relabelled()) {
        let (a, b) = (classify(&s), classify(&r));
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.rule, b.rule);
        prop_assert_eq!(a.suggested_construction, b.suggested_construction);
    }

    #[test]
    fn invariants_are_label_free((s, r) in relabelled()) {
        prop_assert_eq!(Fingerprint::of(&s), Fingerprint::of(&r));
        prop_assert_eq!(divisor_spectrum_of(&s), divisor_spectrum_of(&r));
        prop_assert_eq!(nilpotency_class(&s), nilpotency_class(&r));
        let (a, b) = (analyze(&s), analyze(&r));
        prop_assert_eq!(a.idempotents.len(), b.idempotents.len());
        prop_assert_eq!(a.kernel.elements.len(), b.kernel.elements.len());
        prop_assert_eq!(a.rectangular_band, b.rectangular_band);
    }

    #[test]
    fn census_totals_are_label_free(p in permutation(2), q in permutation(3)) {
        for (name, perm) in [("L2", &p), ("Z2", &p), ("SL3", &q)] {
            let s = catalog::get(name).unwrap();
            let r = s.relabel(perm).unwrap();
            let (a, b) = (enumerate_subdirect(&s, 2, DEFAULT_CENSUS_CAP).unwrap(), enumerate_subdirect(&r, 2, DEFAULT_CENSUS_CAP).unwrap());
            prop_assert_eq!(a.total, b.total);
            // class order follows the labels; the multiset of sizes does not
            let (mut x, mut y) = (a.class_sizes, b.class_sizes);
            x.sort_unstable();
            y.sort_unstable();
            prop_assert_eq!(x, y);
        }
    }

    /// Permuting coordinates gives an isomorphic algebra, which no
    /// certificate may separate.
    #[test]
    fn coordinate_permutations_are_not_separated(perm in permutation(4)) {
        let nil3 = catalog::get("NIL3").unwrap();
        let f = t_m(&nil3, &"3k".parse().unwrap(), 1, 4).unwrap();
        let t = f.truncation;
        let p = t.permute_coordinates(&perm).unwrap();
        prop_assert_eq!(divisor_spectrum(&t).unwrap(), divisor_spectrum(&p).unwrap());
        let c = distinguish(&t, &p, DistinguishOptions::default()).unwrap();
        prop_assert_eq!(c.verdict, Verdict::Equivalent);
    }
}
