//! Exhaustive checks over every signed graph on a few vertices.

use itertools::Itertools;

use signed_elim::enumerate::{enumerate_complete_graphs, enumerate_signed_graphs, graph_at, signed_graph_count};
use signed_elim::seo::{is_seo_via_weights, seo_violations};
use signed_elim::special::complete_graph_check;
use signed_elim::{
    chordality_check, enumerate_seos, greedy_seo, is_seo, signed_simplicial_set, Chordality, Sign, SignedGraph,
    UnsignedGraph, VertexOrder,
};

fn all_graphs(max_n: usize) -> impl Iterator<Item = SignedGraph> {
    (0..=max_n).flat_map(|n| enumerate_signed_graphs(n).unwrap())
}

fn se(g: &SignedGraph) -> bool {
    greedy_seo(g).is_ok()
}

#[test]
fn every_test_of_an_ordering_agrees() {
    for g in all_graphs(4) {
        let n = g.vertex_count();
        for seq in (0..n).permutations(n) {
            let order = VertexOrder::from_sequence(seq).unwrap();
            let first = is_seo(&g, &order).unwrap();
            assert_eq!(first.is_none(), is_seo_via_weights(&g, &order).unwrap(), "{g:?} {order}");
            assert_eq!(first.is_none(), seo_violations(&g, &order).unwrap().is_empty());
        }
    }
}

#[test]
fn seo_enumeration_matches_filtering() {
    for g in all_graphs(4) {
        let n = g.vertex_count();
        let expected: Vec<Vec<usize>> = (0..n)
            .permutations(n)
            .filter(|p| is_seo(&g, &VertexOrder::from_sequence(p.clone()).unwrap()).unwrap().is_none())
            .collect();
        let got: Vec<Vec<usize>> = enumerate_seos(&g).unwrap().map(|o| o.sequence().to_vec()).collect();
        assert_eq!(got, expected, "{g:?}");
        assert_eq!(got.is_empty(), !se(&g));
    }
}

/// Every remaining-vertex set reachable by removing signed-simplicial
/// vertices of an SE graph still has one, so greedy may pick any of them.
#[test]
fn any_signed_simplicial_choice_completes() {
    for n in 0..=5 {
        for idx in 0..signed_graph_count(n).unwrap() {
            let g = graph_at(n, idx);
            if !se(&g) {
                continue;
            }
            let full = (1u32 << n) - 1;
            let mut seen = vec![false; 1 << n];
            let mut stack = vec![full];
            seen[full as usize] = true;
            while let Some(mask) = stack.pop() {
                if mask == 0 {
                    continue;
                }
                let alive: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let (sub, map) = g.induced_subgraph(&alive).unwrap();
                let simplicial = signed_simplicial_set(&sub);
                assert!(!simplicial.is_empty(), "n={n} index={idx} stuck at {alive:?}");
                for v in simplicial {
                    let next = mask & !(1 << map.to_old(v));
                    if !seen[next as usize] {
                        seen[next as usize] = true;
                        stack.push(next);
                    }
                }
            }
        }
    }
}

#[test]
fn vertex_deletion_preserves_eliminability() {
    for g in all_graphs(5) {
        if !se(&g) {
            continue;
        }
        let n = g.vertex_count();
        for drop in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&v| v != drop).collect();
            let (sub, _) = g.induced_subgraph(&keep).unwrap();
            assert!(se(&sub), "{g:?} minus {drop}");
        }
    }
}

#[test]
fn disjoint_union_is_se_iff_both_parts_are() {
    let small: Vec<SignedGraph> = all_graphs(4).filter(|g| g.vertex_count() >= 3).collect();
    let non_se: Vec<&SignedGraph> = small.iter().filter(|g| !se(g)).collect();
    assert!(!non_se.is_empty());
    for a in &small {
        for b in small.iter().step_by(7) {
            let u = a.disjoint_union(b).unwrap();
            assert_eq!(se(&u), se(a) && se(b));
        }
    }
}

#[test]
fn single_sign_graphs_reduce_to_chordality() {
    for s in Sign::BOTH {
        for n in 0..=5 {
            for g in enumerate_complete_graphs(n).chain(signed_elim::enumerate::enumerate_positive_graphs(n)) {
                // Keep only the edges of the first sign, then relabel them to `s`.
                let only: Vec<_> = g.edges().filter(|e| e.2 == Sign::Plus).map(|(u, v, _)| (u, v, s)).collect();
                let h = SignedGraph::from_edges(n, only).unwrap();
                assert_eq!(se(&h), chordality_check(&h.sign_restriction(s)).is_chordal(), "{h:?}");
            }
        }
    }
}

/// Induced cycles of length at least 4, by checking every vertex subset.
fn brute_force_hole(h: &UnsignedGraph) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    (4..=n).flat_map(|k| (0..n).combinations(k)).find(|set| {
        let sub = h.induced_subgraph(set);
        (0..set.len()).all(|v| sub.degree(v) == 2) && sub.connected_components().len() == 1
    })
}

fn is_induced_cycle(h: &UnsignedGraph, c: &[usize]) -> bool {
    let k = c.len();
    k >= 4
        && c.iter().all_unique()
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                i == j || h.adjacent(c[i], c[j]) == consecutive
            })
        })
}

#[test]
fn chordality_matches_brute_force_up_to_six_vertices() {
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        for mask in 0u32..1 << pairs.len() {
            let h = UnsignedGraph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p));
            let hole = brute_force_hole(&h);
            match chordality_check(&h) {
                Chordality::Chordal(order) => {
                    assert!(hole.is_none(), "missed hole {hole:?} in {h:?}");
                    assert_eq!(signed_elim::chordal::elimination_failure(&h, order.sequence()), None);
                }
                Chordality::NotChordal(cycle) => {
                    assert!(hole.is_some());
                    assert!(is_induced_cycle(&h, &cycle), "{cycle:?} in {h:?}");
                    assert_eq!(cycle[0], *cycle.iter().min().unwrap());
                    assert!(cycle[1] < cycle[cycle.len() - 1]);
                }
            }
        }
    }
}

#[test]
fn complete_graph_checker_up_to_six_vertices() {
    for n in 0..=6 {
        for g in enumerate_complete_graphs(n) {
            let verdict = complete_graph_check(&g);
            assert_eq!(verdict.decision(), Some(se(&g)), "{g:?}");
        }
    }
}
