use proptest::prelude::*;

use signed_crossings::enumeration::enumerate_bn;
use signed_crossings::fillings::{xi, xi_inverse, YoungFilling};
use signed_crossings::involution::{crossing_nesting_involution, kz_transform, split, unsplit};
use signed_crossings::statistics::oracle::max_chain_by_subsets;
use signed_crossings::statistics::{
    classify_pair, cro_star, is_crossing_chain, is_nesting_chain, nes_star, ChainKind, PatternCounts,
};
use signed_crossings::{Arc, SignedPermutation, UpperDiagram, VertexKind};

fn all_upto(n: usize) -> impl Iterator<Item = SignedPermutation> {
    (1..=n).flat_map(|k| enumerate_bn(k).unwrap())
}

fn signed_permutation(max_rank: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_rank).prop_flat_map(|n| {
        (
            Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(magnitudes, signs)| {
                let values = magnitudes
                    .into_iter()
                    .zip(signs)
                    .map(|(m, negate)| if negate { -m } else { m })
                    .collect();
                SignedPermutation::new(values).unwrap()
            })
    })
}

fn subsets(arcs: &[Arc]) -> impl Iterator<Item = Vec<Arc>> + '_ {
    (1u32..1 << arcs.len()).map(move |mask| {
        (0..arcs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| arcs[i])
            .collect()
    })
}

#[test]
fn diagram_and_text_round_trip() {
    for p in all_upto(5) {
        let d = p.upper_diagram();
        assert_eq!(SignedPermutation::from_upper(&d).unwrap(), p);
        assert_eq!(UpperDiagram::new(p.rank(), d.arcs().to_vec()).unwrap(), d);
        assert_eq!(p.to_string().parse::<SignedPermutation>().unwrap(), p);
    }
}

#[test]
fn mirror_and_arc_counts() {
    for p in all_upto(5) {
        let n = p.rank() as i32;
        for i in 1..=n {
            assert_eq!(p.at(-i).unwrap(), -p.at(i).unwrap());
        }
        let d = p.upper_diagram();
        assert_eq!(d.arcs().len(), p.rank());
        let negative_starts = d.arcs().iter().filter(|a| a.start < 0).count();
        assert_eq!(p.wex() + negative_starts, p.rank(), "{p}");
    }
}

#[test]
fn degree_totals_equal_rank() {
    for p in all_upto(4) {
        let d = p.upper_diagram();
        let entries = d.degree_sequence().entries().to_vec();
        let indegree: usize = entries.iter().map(|&(i, _)| usize::from(i)).sum();
        let outdegree: usize = entries.iter().map(|&(_, o)| usize::from(o)).sum();
        assert_eq!((indegree, outdegree), (p.rank(), p.rank()), "{p}");
    }
}

#[test]
fn positive_vertices_can_be_isolated() {
    // (-2,-1) and (-1,2) leave vertex 1 untouched
    let p: SignedPermutation = "-2,1".parse().unwrap();
    assert_eq!(p.upper_diagram().vertex_kind(1), VertexKind::Isolated);
    let with_isolated_positive = enumerate_bn(3)
        .unwrap()
        .filter(|p| {
            let d = p.upper_diagram();
            (1..=3).any(|v| d.vertex_kind(v) == VertexKind::Isolated)
        })
        .count();
    assert!(with_isolated_positive > 0);
}

#[test]
fn pair_patterns_partition_all_pairs() {
    for p in all_upto(5) {
        let d = p.upper_diagram();
        let counts = PatternCounts::of(&d);
        let n = p.rank();
        let total = counts.crossings() + counts.nestings() + counts.alignments;
        assert_eq!(total, n * (n - 1) / 2);
        let arcs = d.arcs();
        let mut crossings = 0;
        let mut nestings = 0;
        for (i, &a) in arcs.iter().enumerate() {
            for &b in &arcs[i + 1..] {
                let kind = classify_pair(a, b).unwrap().kind;
                assert_eq!(kind, classify_pair(b, a).unwrap().kind);
                assert!(!(kind.is_crossing() && kind.is_nesting()));
                crossings += usize::from(kind.is_crossing());
                nestings += usize::from(kind.is_nesting());
            }
        }
        assert_eq!((crossings, nestings), (counts.crossings(), counts.nestings()), "{p}");
    }
}

#[test]
fn chains_of_two_exist_iff_pairs_do() {
    for p in all_upto(4) {
        let d = p.upper_diagram();
        let counts = PatternCounts::of(&d);
        assert_eq!(cro_star(&d) >= 2, counts.crossings() >= 1, "{p}");
        assert_eq!(nes_star(&d) >= 2, counts.nestings() >= 1, "{p}");
    }
}

#[test]
fn chains_are_pairwise() {
    for p in all_upto(4) {
        let d = p.upper_diagram();
        for sub in subsets(d.arcs()) {
            let pairs: Vec<_> = sub
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| sub[i + 1..].iter().map(move |&b| classify_pair(a, b).unwrap().kind))
                .collect();
            assert_eq!(
                is_crossing_chain(&sub),
                pairs.iter().all(|k| k.is_crossing()),
                "{p} {sub:?}"
            );
            assert_eq!(
                is_nesting_chain(&sub),
                pairs.iter().all(|k| k.is_nesting()),
                "{p} {sub:?}"
            );
        }
    }
}

#[test]
fn split_round_trip_and_kz_is_involutive() {
    for p in all_upto(4) {
        let d = p.upper_diagram();
        let s = split(&d);
        assert_eq!(unsplit(&s).unwrap(), d);
        let once = kz_transform(&s).unwrap();
        assert_eq!(kz_transform(&once).unwrap(), s, "{p}");
    }
}

#[test]
fn filling_text_round_trip() {
    for p in all_upto(4) {
        let f = xi(&p.upper_diagram()).unwrap();
        assert_eq!(f.to_string().parse::<YoungFilling>().unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn theorem24_swaps_and_preserves(p in signed_permutation(8)) {
        let q = crossing_nesting_involution(&p).unwrap();
        let (d, e) = (p.upper_diagram(), q.upper_diagram());
        let (before, after) = (PatternCounts::of(&d), PatternCounts::of(&e));
        prop_assert_eq!(before.crossings(), after.nestings());
        prop_assert_eq!(before.nestings(), after.crossings());
        prop_assert_eq!(p.wex(), q.wex());
        prop_assert_eq!(p.neg(), q.neg());
        prop_assert_eq!(d.degree_sequence(), e.degree_sequence());
        prop_assert_eq!(crossing_nesting_involution(&q).unwrap(), p);
    }

    #[test]
    fn xi_round_trips(p in signed_permutation(8)) {
        let d = p.upper_diagram();
        prop_assert_eq!(xi_inverse(&xi(&d).unwrap()).unwrap(), d);
    }

    #[test]
    fn chain_statistics_match_oracle(p in signed_permutation(7)) {
        let d = p.upper_diagram();
        prop_assert_eq!(cro_star(&d), max_chain_by_subsets(&d, ChainKind::Crossing));
        prop_assert_eq!(nes_star(&d), max_chain_by_subsets(&d, ChainKind::Nesting));
    }

    #[test]
    fn display_parse_round_trips(p in signed_permutation(8)) {
        prop_assert_eq!(p.to_string().parse::<SignedPermutation>().unwrap(), p);
    }
}
