//! Group kernel and field checks against independent oracles.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use proptest::prelude::*;
use tricox_core::coxeter::{brute_force_double_coset_rep, min_coset_rep, min_double_coset_rep};
use tricox_core::graph::build_cayley_ball;
use tricox_core::{FieldElement, GroupElement, ParabolicId};

fn small_element() -> impl Strategy<Value = FieldElement> {
    prop::array::uniform4(-100i64..=100).prop_map(|[a, b, c, d]| FieldElement::from_fractions([(a, 1), (b, 1), (c, 1), (d, 1)]))
}

fn fraction_element() -> impl Strategy<Value = FieldElement> {
    prop::array::uniform4((-30i64..=30, 1i64..=12)).prop_map(FieldElement::from_fractions)
}

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['r', 's', 't']), 0..14).prop_map(|v| v.into_iter().collect())
}

/// Floating-point sign with a certified margin: for integer coefficients in
/// `[-100, 100]` a nonzero value is at least `1/1300^3` in absolute value
/// (its norm is a nonzero integer and every conjugate is below 1300), far
/// above double rounding error.
fn float_sign(x: &FieldElement) -> Ordering {
    let v = x.approx();
    if v.abs() < 1e-10 {
        Ordering::Equal
    } else if v > 0.0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

proptest! {
    #[test]
    fn field_ring_axioms(a in fraction_element(), b in fraction_element(), c in fraction_element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, FieldElement::zero());
        prop_assert_eq!(&a * &FieldElement::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn sign_matches_a_float_oracle(a in small_element()) {
        prop_assert_eq!(a.sign(), float_sign(&a));
    }

    #[test]
    fn sign_is_compatible_with_arithmetic(a in fraction_element(), b in fraction_element()) {
        // positives are closed under + and ·
        if a.sign() == Ordering::Greater && b.sign() == Ordering::Greater {
            prop_assert_eq!((&a + &b).sign(), Ordering::Greater);
            prop_assert_eq!((&a * &b).sign(), Ordering::Greater);
        }
        prop_assert_eq!((-&a).sign(), a.sign().reverse());
    }

    #[test]
    fn canonical_strings_parse_back(a in fraction_element()) {
        prop_assert_eq!(a.canonical_string().parse::<FieldElement>().unwrap(), a);
    }

    #[test]
    fn coset_representatives_ignore_the_coset_member(w in word(), k in 0usize..10) {
        let g = GroupElement::parse(&w).unwrap();
        for p in ParabolicId::ALL {
            let x = &p.elements()[k % p.order()];
            let rep = min_coset_rep(&g, p);
            prop_assert_eq!(&min_coset_rep(&g.mul(x), p), &rep);
            prop_assert!(rep.length() <= g.length());
        }
    }

    #[test]
    fn double_coset_representatives_match_enumeration(w in word()) {
        let g = GroupElement::parse(&w).unwrap();
        for p in ParabolicId::ALL {
            for q in ParabolicId::ALL {
                prop_assert_eq!(min_double_coset_rep(&g, p, q), brute_force_double_coset_rep(&g, p, q));
            }
        }
    }

    #[test]
    fn normal_forms_are_shortest(w in word()) {
        let g = GroupElement::parse(&w).unwrap();
        let nf = g.canonical_word().clone();
        prop_assert!(nf.len() <= w.len());
        prop_assert_eq!(nf.len() % 2, w.len() % 2);
        prop_assert_eq!(GroupElement::from_word(&nf), g);
    }
}

#[test]
fn cayley_ball_of_radius_ten() {
    let ball = build_cayley_ball(GroupElement::identity(), 10, 1_000_000).unwrap();
    let mut by_word: HashMap<String, usize> = HashMap::new();
    let mut by_matrix: HashSet<GroupElement> = HashSet::new();
    for i in 0..ball.len() {
        let g = ball.node(i);
        let w = g.canonical_word().to_string();
        // BFS depth in the Cayley graph is the word length
        assert_eq!(w.len(), ball.depth(i), "{w}");
        assert!(by_word.insert(w, i).is_none());
        assert!(by_matrix.insert(g.clone()));
        let det = g.determinant();
        if g.length() % 2 == 0 {
            assert!(det.is_one());
        } else {
            assert!((-&det).is_one());
        }
    }
    assert_eq!(by_word.len(), ball.len());
    // distinct elements really have distinct matrices, independent of hashing
    for i in 0..ball.len() {
        for j in i + 1..ball.len() {
            assert_ne!(ball.node(i).matrix(), ball.node(j).matrix());
        }
    }
}

#[test]
fn parabolic_orders() {
    let sizes: Vec<usize> = ParabolicId::ALL.iter().map(|p| p.elements().len()).collect();
    assert_eq!(sizes, [8, 10, 4]);
}
