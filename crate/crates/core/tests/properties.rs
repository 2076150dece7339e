mod common;

use common::*;
use proptest::prelude::*;
use quandle_cocycle::braid::BraidWord;

fn letters(strands: usize, max: usize) -> impl Strategy<Value = Vec<(usize, i8)>> {
    prop::collection::vec((1..strands, prop::bool::ANY).prop_map(|(j, s)| (j, if s { 1 } else { -1 })), 0..=max)
}

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| letters(n, max_len).prop_map(move |l| word(n, &l)))
}

/// A word with a Markov partner: a conjugate or a stabilization.
fn markov_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=3usize).prop_flat_map(|n| {
        (letters(n, 6), letters(n, 3), prop::bool::ANY, prop::bool::ANY).prop_map(move |(l, g, conj, sign)| {
            let w = word(n, &l);
            let v = if conj { w.conjugate(&word(n, &g)).unwrap() } else { w.stabilize(if sign { 1 } else { -1 }) };
            (w, v)
        })
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn markov_moves_preserve_invariants((w, v) in markov_pair()) {
        prop_assert_eq!(markov_agrees(&w, &v), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn coboundaries_do_not_change_phi(w in braid(4, 6), l in prop::array::uniform3(prop::array::uniform3(0i64..3))) {
        prop_assert_eq!(coboundary_invisible(&w, &l), Ok(()));
    }

    #[test]
    fn conjugate_coboundaries_do_not_change_psi(w in braid(3, 5), gamma in prop::collection::vec(0usize..6, 10)) {
        prop_assert_eq!(beta_coboundary_invisible(&w, &gamma), Ok(()));
    }

    #[test]
    fn cokernel_matches_enumeration(a in matrix(), q in 2u64..=6) {
        prop_assert_eq!(cokernel_brute(&a, q), Ok(()));
    }

    #[test]
    fn smith_transforms_diagonalize(a in matrix()) {
        prop_assert_eq!(smith_transforms(&a), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn weighted_sum_defect(w in braid(4, 6), coloring in 0usize..1000, beads in prop::collection::vec(0i64..3, 1..12)) {
        prop_assert_eq!(defect_identity(&w, coloring, &beads), Ok(()));
    }
}

#[test]
fn bundled_cocycles_are_cocycles() {
    assert_eq!(bundled_cocycles_verify(), Ok(()));
}

#[test]
fn longitude_form_on_hopf_and_trefoil() {
    assert_eq!(longitude_oracle(&word(2, &[(1, 1), (1, 1)])), Ok(()));
    assert_eq!(longitude_oracle(&word(2, &[(1, 1), (1, 1), (1, 1)])), Ok(()));
    assert_eq!(longitude_oracle(&word(2, &[(1, -1), (1, -1), (1, -1)])), Ok(()));
}

#[test]
fn lifting_colorings_contribute_nothing() {
    for (name, w) in validated_words() {
        let lifted = extension_zero(&w).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(lifted >= 3, "{name}: trivial colorings always lift");
    }
}
