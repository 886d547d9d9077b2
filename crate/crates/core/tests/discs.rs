//! Disc enumeration properties.

use std::collections::BTreeSet;

use proptest::prelude::*;
use tricox_core::disc::{enumerate_discs, DiscConstraints, TriDisc};

fn constraints() -> impl Strategy<Value = DiscConstraints> {
    (any::<bool>(), 0usize..3, any::<bool>()).prop_map(|(l, a, c)| DiscConstraints {
        locally_6_large: l,
        min_boundary_angle: a,
        forbid_boundary_chords: c,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn enumerated_discs_are_valid_distinct_and_satisfy_gauss_bonnet(b in 3usize..9, t in 1usize..9, c in constraints()) {
        let found = enumerate_discs(b, t, c).unwrap();
        for d in &found {
            d.validate().unwrap();
            prop_assert_eq!(d.curvature_profile().unwrap().total(), 6);
            prop_assert!(d.satisfies(&c));
            prop_assert!(d.triangles.len() <= t);
            prop_assert_eq!(d.boundary_len(), b);
        }
        for (i, d) in found.iter().enumerate() {
            for e in &found[i + 1..] {
                prop_assert!(!d.is_isomorphic(e));
            }
        }
    }

    #[test]
    fn relaxing_constraints_only_adds_discs(b in 3usize..8, t in 1usize..8, c in constraints()) {
        let strict: BTreeSet<TriDisc> = enumerate_discs(b, t, c).unwrap().into_iter().collect();
        let loose: BTreeSet<TriDisc> = enumerate_discs(b, t, DiscConstraints::default()).unwrap().into_iter().collect();
        prop_assert!(strict.is_subset(&loose));
        let refiltered: BTreeSet<TriDisc> = loose.into_iter().filter(|d| d.satisfies(&c)).collect();
        prop_assert_eq!(refiltered, strict);
        let bigger: BTreeSet<TriDisc> = enumerate_discs(b, t + 1, c).unwrap().into_iter().collect();
        prop_assert!(bigger.is_superset(&enumerate_discs(b, t, c).unwrap().into_iter().collect()));
    }
}

#[test]
fn counts_without_interior_vertices() {
    // triangulations of an n-gon up to dihedral symmetry: 1, 1, 1, 3, 4, 12
    let none = DiscConstraints::default();
    let counts: Vec<usize> = (3..=8).map(|b| enumerate_discs(b, b - 2, none).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 1, 3, 4, 12]);
}
