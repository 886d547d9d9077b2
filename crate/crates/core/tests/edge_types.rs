//! Edge-type keys: orbit invariance, a brute-force key oracle, turn strings.

use proptest::prelude::*;
use tricox_core::coxeter::brute_force_double_coset_rep;
use tricox_core::edge_type::{type_key_cayley, type_key_complex};
use tricox_core::graph::{build_coset_ball, pentagon_adjacent, CosetMode};
use tricox_core::pentagon::{string_key, StringSpec, TurnLetter};
use tricox_core::{EdgeTypeKey, Endpoint, GroupElement, ParabolicId, Vertex};

fn word() -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(prop::sample::select(vec!['r', 's', 't']), 0..10)
        .prop_map(|v| GroupElement::parse(&v.into_iter().collect::<String>()).unwrap())
}

fn turns() -> impl Strategy<Value = StringSpec> {
    prop::collection::vec(prop::sample::select(vec![TurnLetter::L, TurnLetter::S, TurnLetter::R]), 0..7).prop_map(StringSpec)
}

/// Key of `(gP, hQ)` from enumerated double cosets, trying both orders.
fn oracle_key(u: &Vertex, v: &Vertex) -> String {
    let one_way = |a: &Vertex, b: &Vertex| {
        let x = a.rep().inverse().mul(b.rep());
        let rep = brute_force_double_coset_rep(&x, a.parabolic(), b.parabolic());
        format!("CPLX:{}:{}:{}", a.parabolic(), b.parabolic(), rep.canonical_word())
    };
    one_way(u, v).min(one_way(v, u))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complex_keys_match_the_oracle(g in word(), h in word(), p in 0usize..3, q in 0usize..3) {
        let u = Vertex::new(ParabolicId::ALL[p], &g);
        let v = Vertex::new(ParabolicId::ALL[q], &h);
        prop_assert_eq!(type_key_complex(&u, &v).to_string(), oracle_key(&u, &v));
    }

    #[test]
    fn cayley_keys_are_invariant(g in word(), h in word(), w in word()) {
        let k = type_key_cayley(&g, &h);
        prop_assert_eq!(&type_key_cayley(&w.mul(&g), &w.mul(&h)), &k);
        prop_assert_eq!(&type_key_cayley(&h, &g), &k);
        prop_assert_eq!(&k.canonical(), &k);
    }

    #[test]
    fn strings_alias_under_reversal_and_mirroring(s in turns()) {
        let k = string_key(&s);
        prop_assert_eq!(&string_key(&s.reversed()), &k);
        prop_assert_eq!(&string_key(&s.mirrored()), &k);
    }

    #[test]
    fn key_text_round_trips(g in word(), h in word()) {
        let k = type_key_complex(&Vertex::new(ParabolicId::Rs, &g), &Vertex::new(ParabolicId::St, &h));
        prop_assert_eq!(k.to_string().parse::<EdgeTypeKey>().unwrap(), k);
    }
}

/// Left action and endpoint swap preserve keys on 1200 pairs of a radius-4
/// slab around each fixed vertex.
#[test]
fn keys_are_invariant_on_slab_pairs() {
    let movers: Vec<GroupElement> = ["", "r", "st", "rst", "tsrts", "srtstr", "rstrstst"].iter().map(|w| GroupElement::parse(w).unwrap()).collect();
    let mut checked = 0;
    for p in ParabolicId::ALL {
        let slab = build_coset_ball(Vertex::fixed_by(p), 4, CosetMode::FullY, 100_000).unwrap();
        let n = slab.len();
        for k in 0..400 {
            let (i, j) = ((k * 7919) % n, (k * 104_729 + 13) % n);
            let (u, v) = (slab.node(i), slab.node(j));
            let key = u.type_key(v);
            assert_eq!(v.type_key(u), key);
            let w = &movers[k % movers.len()];
            assert_eq!(u.act(w).type_key(&v.act(w)), key);
            checked += 1;
        }
    }
    assert!(checked >= 1000);
}

#[test]
fn pentagon_tiling_has_degree_four_inside() {
    let slab = build_coset_ball(Vertex::fixed_by(ParabolicId::Rs), 5, CosetMode::Pentagon, 100_000).unwrap();
    for i in 0..slab.len() {
        if slab.depth(i) < 5 {
            assert_eq!(slab.degree(i), 4, "{}", slab.node(i));
            for &j in slab.neighbors(i) {
                assert!(pentagon_adjacent(slab.node(i), slab.node(j)));
            }
        }
    }
}
