//! Chordality of unsigned graphs, with a chordless cycle as the witness of
//! failure.
//!
//! Orders follow the "earlier neighbours form a clique" convention: for
//! every vertex `x`, the neighbours of `x` placed before `x` are pairwise
//! adjacent. Maximum-cardinality search visits vertices in exactly such an
//! order whenever one exists.

use std::collections::VecDeque;

use crate::graph::{UnsignedGraph, VertexId};
use crate::seo::VertexOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal(VertexOrder),
    /// An induced cycle of length at least 4, rotated to start at its
    /// smallest vertex and oriented so the second entry is below the last.
    NotChordal(Vec<VertexId>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Visit order of maximum-cardinality search; ties go to the lowest id.
pub fn maximum_cardinality_search(h: &UnsignedGraph) -> Vec<VertexId> {
    let n = h.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<VertexId> = None;
        for v in 0..n {
            if !visited[v] && best.is_none_or(|b| weight[v] > weight[b]) {
                best = Some(v);
            }
        }
        let x = best.expect("an unvisited vertex remains");
        visited[x] = true;
        order.push(x);
        for y in h.neighbors(x) {
            if !visited[y] {
                weight[y] += 1;
            }
        }
    }
    order
}

/// First `(x, u, w)` with `u`, `w` earlier non-adjacent neighbours of `x`:
/// smallest position of `x`, then of `u`, then of `w`.
pub fn elimination_failure(h: &UnsignedGraph, sequence: &[VertexId]) -> Option<(VertexId, VertexId, VertexId)> {
    for (k, &x) in sequence.iter().enumerate() {
        let earlier: Vec<VertexId> = sequence[..k]
            .iter()
            .copied()
            .filter(|&y| h.adjacent(x, y))
            .collect();
        for (i, &u) in earlier.iter().enumerate() {
            for &w in &earlier[i + 1..] {
                if !h.adjacent(u, w) {
                    return Some((x, u, w));
                }
            }
        }
    }
    None
}

pub fn chordality_check(h: &UnsignedGraph) -> Chordality {
    let sequence = maximum_cardinality_search(h);
    match elimination_failure(h, &sequence) {
        None => Chordality::Chordal(VertexOrder::from_sequence(sequence).expect("search visits every vertex once")),
        Some((x, u, w)) => {
            let cycle = cycle_through(h, x, u, w)
                .or_else(|| any_chordless_cycle(h))
                .expect("a failed elimination check implies a chordless cycle");
            Chordality::NotChordal(canonical_cycle(cycle))
        }
    }
}

/// `x` with non-adjacent neighbours `u`, `w`: a shortest `u`-`w` path whose
/// interior avoids `N[x]` closes an induced cycle through `x`.
fn cycle_through(h: &UnsignedGraph, x: VertexId, u: VertexId, w: VertexId) -> Option<Vec<VertexId>> {
    let n = h.vertex_count();
    let blocked: Vec<bool> = (0..n)
        .map(|y| y == x || (h.adjacent(x, y) && y != u && y != w))
        .collect();
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        if a == w {
            break;
        }
        for b in h.neighbors(a) {
            if blocked[b] || parent[b] != usize::MAX {
                continue;
            }
            parent[b] = a;
            queue.push_back(b);
        }
    }
    if parent[w] == usize::MAX {
        return None;
    }
    let mut path = vec![w];
    let mut at = w;
    while at != u {
        at = parent[at];
        path.push(at);
    }
    path.reverse();
    let mut cycle = vec![x];
    cycle.extend(path);
    Some(cycle)
}

fn any_chordless_cycle(h: &UnsignedGraph) -> Option<Vec<VertexId>> {
    let n = h.vertex_count();
    for x in 0..n {
        let nbrs: Vec<_> = h.neighbors(x).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !h.adjacent(u, w) {
                    if let Some(c) = cycle_through(h, x, u, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

pub(crate) fn canonical_cycle(mut cycle: Vec<VertexId>) -> Vec<VertexId> {
    if cycle.is_empty() {
        return cycle;
    }
    let (at, _) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).expect("non-empty");
    cycle.rotate_left(at);
    if cycle.len() > 2 && cycle[1] > cycle[cycle.len() - 1] {
        cycle[1..].reverse();
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> UnsignedGraph {
        UnsignedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn square_is_not_chordal() {
        assert_eq!(chordality_check(&cycle(4)), Chordality::NotChordal(vec![0, 1, 2, 3]));
    }

    #[test]
    fn long_cycle_is_returned_whole() {
        match chordality_check(&cycle(7)) {
            Chordality::NotChordal(c) => assert_eq!(c, (0..7).collect::<Vec<_>>()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trees_and_cliques_are_chordal() {
        let path = UnsignedGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(chordality_check(&path).is_chordal());
        let k4 = UnsignedGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(chordality_check(&k4).is_chordal());
        assert!(chordality_check(&UnsignedGraph::new(0)).is_chordal());
    }

    #[test]
    fn returned_order_is_perfect() {
        // Two triangles sharing an edge plus a pendant.
        let h = UnsignedGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]);
        match chordality_check(&h) {
            Chordality::Chordal(o) => assert_eq!(elimination_failure(&h, o.sequence()), None),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycle_with_pendant_triangle() {
        // C5 on 0..5 plus a triangle hanging off vertex 0.
        let mut h = UnsignedGraph::new(7);
        for i in 0..5 {
            h.add_edge(i, (i + 1) % 5);
        }
        h.add_edge(0, 5);
        h.add_edge(0, 6);
        h.add_edge(5, 6);
        assert_eq!(chordality_check(&h), Chordality::NotChordal(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(vec![3, 0, 1, 2]), vec![0, 1, 2, 3]);
        assert_eq!(canonical_cycle(vec![2, 1, 0, 3]), vec![0, 1, 2, 3]);
    }
}
