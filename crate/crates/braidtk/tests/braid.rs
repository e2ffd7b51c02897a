mod common;

use braidtk::braid::{
    apply_move, closure_summary, half_twist_divides, parse_braid, strand_reduce, BraidWord, Move,
    DEFAULT_REDUCE_BUDGET,
};
use braidtk::forms::{alexander_polynomial, arf_invariant, seifert_matrix};
use proptest::prelude::*;

fn word_strategy(max: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(move |n| {
        proptest::collection::vec(1..n, 1..=max).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

/// Every move worth trying on `w`.
fn candidate_moves(w: &BraidWord) -> Vec<Move> {
    let mut out = vec![
        Move::ElementaryConjugation { backward: false },
        Move::ElementaryConjugation { backward: true },
        Move::MarkovStabilize,
        Move::MarkovDestabilize,
        Move::Flip,
    ];
    for p in 0..w.len() {
        out.push(Move::FarCommutation { position: p });
        out.push(Move::BraidRelation { position: p });
    }
    for c in 1..w.strands() {
        out.push(Move::StrandReduction { column: c });
    }
    out
}

type Invariants = (usize, i64, i64, Option<Vec<i64>>, Option<u8>);

fn invariants(w: &BraidWord) -> Invariants {
    let s = closure_summary(w);
    let sd = seifert_matrix(w).ok();
    let alex = sd.as_ref().map(|sd| alexander_polynomial(sd).normalized());
    let arf = sd.as_ref().and_then(|sd| arf_invariant(sd).ok());
    (s.components, s.betti, s.genus, alex, arf)
}

#[test]
fn permutation_matches_strand_tracking() {
    for w in common::corpus(7) {
        let (image, cycles) = common::permutation_oracle(&w);
        let s = closure_summary(&w);
        assert_eq!(s.permutation, image, "{w}");
        assert_eq!(s.components, cycles, "{w}");
    }
}

#[test]
fn permutation_composes_over_splits() {
    for w in common::all_words(7, 4) {
        let full = closure_summary(&w).permutation;
        for cut in 0..=w.len() {
            let a = BraidWord::new(4, w.letters()[..cut].to_vec()).unwrap();
            let b = BraidWord::new(4, w.letters()[cut..].to_vec()).unwrap();
            let (pa, pb) = (common::permutation_oracle(&a).0, common::permutation_oracle(&b).0);
            let composed: Vec<usize> = pa.iter().map(|&x| pb[x - 1]).collect();
            assert_eq!(composed, full, "{w} cut at {cut}");
        }
    }
}

#[test]
fn moves_preserve_closure_invariants() {
    // Exhaustive over the small corpus. Markov moves change c and N
    // together, so b1 and g stay put as well.
    for w in common::corpus(8) {
        let before = invariants(&w);
        for m in candidate_moves(&w) {
            if let Ok(v) = apply_move(&w, m) {
                assert_eq!(invariants(&v), before, "{m:?} on {w} gave {v}");
            }
        }
    }
}

#[test]
fn alexander_matches_burau() {
    for w in common::corpus(7) {
        if w.is_split() {
            continue;
        }
        let alex = alexander_polynomial(&seifert_matrix(&w).unwrap()).normalized();
        assert_eq!(
            common::times_cyclotomic(&alex, w.strands()),
            common::burau_det(&w),
            "{w}"
        );
    }
}

#[test]
fn parse_examples() {
    let w = parse_braid("s1^3 s2 s1").unwrap();
    assert_eq!((w.strands(), w.letters()), (3, &[1, 1, 1, 2, 1][..]));
    let w = parse_braid("N=5; s1 s2").unwrap();
    assert_eq!(w.strands(), 5);
    assert!(parse_braid("s1^").is_err());
    assert!(parse_braid("N=2; s2").is_err());
    assert!(parse_braid("s0").is_err());
}

#[test]
fn half_twist_examples() {
    assert!(half_twist_divides(&parse_braid("s1 s2 s1").unwrap()));
    assert!(half_twist_divides(&parse_braid("s2 s1 s2 s2").unwrap()));
    assert!(!half_twist_divides(&parse_braid("s1 s1 s2").unwrap()));
}

proptest! {
    #[test]
    fn display_round_trips(w in word_strategy(12)) {
        prop_assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn random_moves_preserve_invariants(w in word_strategy(10), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let before = invariants(&w);
        let mut cur = w;
        for pick in picks {
            let moves = candidate_moves(&cur);
            if let Ok(v) = apply_move(&cur, moves[pick.index(moves.len())]) {
                cur = v;
            }
        }
        prop_assert_eq!(invariants(&cur), before, "{}", cur);
    }

    #[test]
    fn half_twist_is_a_monoid_invariant(w in word_strategy(10), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let before = half_twist_divides(&w);
        let mut cur = w;
        for pick in picks {
            let p = pick.index(cur.len());
            for m in [Move::BraidRelation { position: p }, Move::FarCommutation { position: p }] {
                if let Ok(v) = apply_move(&cur, m) {
                    cur = v;
                }
            }
        }
        prop_assert_eq!(half_twist_divides(&cur), before, "{}", cur);
    }

    #[test]
    fn strand_reduce_keeps_the_closure(w in word_strategy(12), col in 1usize..4) {
        if let Ok(v) = strand_reduce(&w, col, DEFAULT_REDUCE_BUDGET) {
            prop_assert_eq!(v.strands() + 1, w.strands());
            prop_assert_eq!(invariants(&v), invariants(&w), "{} -> {}", w, v);
        }
    }
}
