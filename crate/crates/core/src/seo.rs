//! Signed elimination orderings.
//!
//! An ordering is a *signed elimination ordering* (SEO) when, for every
//! vertex `w` and every two distinct earlier vertices `u`, `v`, and each
//! sign `s`:
//!
//! * **E1**: `u ~s w ~s v` implies `u ~s v`;
//! * **E2**: `u ~s v ~(-s) w` implies `u ~s w`.
//!
//! A vertex is *signed-simplicial* when it could be the last vertex of an
//! SEO of the graph around it:
//!
//! * **S1**: for each sign `s`, `N_s[v]` is an `s`-clique;
//! * **S2**: for each sign `s`, `u ~(-s) w ~s v` implies `u ~(-s) v`.
//!
//! A sequence is an SEO exactly when every prefix ends in a vertex that is
//! signed-simplicial in the subgraph induced by that prefix, which gives both
//! the greedy recognizer and the backtracking enumerator below.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{is_permutation, Sign, SignedGraph, VertexId};

/// Default largest `n` for [`enumerate_seos`].
pub const DEFAULT_SEO_ENUMERATION_CAP: usize = 8;

/// A vertex ordering, stored as the sequence of vertices by increasing
/// position: `sequence()[i]` is the vertex at position `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexOrder {
    sequence: Vec<VertexId>,
}

impl VertexOrder {
    /// Accepts any permutation of `0..sequence.len()`.
    pub fn from_sequence(sequence: Vec<VertexId>) -> Result<Self, Error> {
        if !is_permutation(&sequence) {
            return Err(Error::NotAPermutation { n: sequence.len() });
        }
        Ok(VertexOrder { sequence })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder {
            sequence: (0..n).collect(),
        }
    }

    pub fn sequence(&self) -> &[VertexId] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// 0-based position of every vertex (the inverse permutation).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.sequence.len()];
        for (i, &v) in self.sequence.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Checks that this orders exactly the vertices of `g`.
    pub fn check_fits(&self, g: &SignedGraph) -> Result<(), Error> {
        if self.sequence.len() != g.vertex_count() {
            return Err(Error::NotAPermutation { n: g.vertex_count() });
        }
        Ok(())
    }
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.sequence.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexOrder {
    type Err = Error;

    /// Whitespace-separated vertex ids in increasing position order.
    fn from_str(s: &str) -> Result<Self, Error> {
        let sequence = s
            .split_whitespace()
            .map(|tok| {
                if !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Syntax {
                        line: 1,
                        message: format!("expected a vertex id, found `{tok}`"),
                    });
                }
                tok.parse::<VertexId>().map_err(|_| Error::Syntax {
                    line: 1,
                    message: format!("vertex id `{tok}` is too large"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        VertexOrder::from_sequence(sequence)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeoCondition {
    E1,
    E2,
}

/// A triple `(u, v, w)` with `u`, `v` before `w` that breaks E1 or E2 for
/// `sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeoViolation {
    pub condition: SeoCondition,
    pub sign: Sign,
    pub u: VertexId,
    pub v: VertexId,
    pub w: VertexId,
}

impl fmt::Display for SeoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "violation {:?} {} u={} v={} w={}",
            self.condition, self.sign, self.u, self.v, self.w
        )
    }
}

fn triple_violation(g: &SignedGraph, u: VertexId, v: VertexId, w: VertexId) -> Option<(SeoCondition, Sign)> {
    for s in Sign::BOTH {
        if g.has_edge(u, w, s) && g.has_edge(w, v, s) && !g.has_edge(u, v, s) {
            return Some((SeoCondition::E1, s));
        }
    }
    for s in Sign::BOTH {
        if g.has_edge(u, v, s) && g.has_edge(v, w, -s) && !g.has_edge(u, w, s) {
            return Some((SeoCondition::E2, s));
        }
    }
    None
}

/// Every violation, in scan order: increasing position of `w`, then of `u`,
/// then of `v`; per triple E1 before E2 and `+` before `-` (only the first
/// failing condition of each triple is reported).
pub fn seo_violations(g: &SignedGraph, order: &VertexOrder) -> Result<Vec<SeoViolation>, Error> {
    order.check_fits(g)?;
    let seq = order.sequence();
    let mut out = Vec::new();
    for (k, &w) in seq.iter().enumerate() {
        for &u in &seq[..k] {
            for &v in &seq[..k] {
                if u == v {
                    continue;
                }
                if let Some((condition, sign)) = triple_violation(g, u, v, w) {
                    out.push(SeoViolation {
                        condition,
                        sign,
                        u,
                        v,
                        w,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// `Ok(None)` when `order` is an SEO of `g`, else the first violation in the
/// scan order of [`seo_violations`].
pub fn is_seo(g: &SignedGraph, order: &VertexOrder) -> Result<Option<SeoViolation>, Error> {
    order.check_fits(g)?;
    let seq = order.sequence();
    for (k, &w) in seq.iter().enumerate() {
        for &u in &seq[..k] {
            for &v in &seq[..k] {
                if u == v {
                    continue;
                }
                if let Some((condition, sign)) = triple_violation(g, u, v, w) {
                    return Ok(Some(SeoViolation {
                        condition,
                        sign,
                        u,
                        v,
                        w,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// The same test phrased with pair weights `+1 / -1 / 0`: for each triple
/// with `u`, `v` before `w`, the median of `{ω(uv), ω(vw), ω(uw)}` must be
/// `ω(uv)` unless both `uw` and `vw` are non-edges.
pub fn is_seo_via_weights(g: &SignedGraph, order: &VertexOrder) -> Result<bool, Error> {
    order.check_fits(g)?;
    let weight = |a, b| g.edge(a, b).map_or(0, Sign::weight);
    let seq = order.sequence();
    for (k, &w) in seq.iter().enumerate() {
        for &u in &seq[..k] {
            for &v in &seq[..k] {
                if u == v {
                    continue;
                }
                let (uv, vw, uw) = (weight(u, v), weight(v, w), weight(u, w));
                if uw == 0 && vw == 0 {
                    continue;
                }
                let mut sorted = [uv, vw, uw];
                sorted.sort_unstable();
                if sorted[1] != uv {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Why a vertex `v` is not signed-simplicial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SimplicialViolation {
    /// `a ~sign v ~sign b` but `a`, `b` are not `sign`-adjacent.
    S1 { sign: Sign, a: VertexId, b: VertexId },
    /// `u ~(-sign) w ~sign v` but not `u ~(-sign) v`.
    S2 { sign: Sign, u: VertexId, w: VertexId },
}

/// First S1/S2 failure of `v` inside the subgraph induced by `alive`.
///
/// Order: S1 before S2, `+` before `-`, then smallest witness ids.
pub(crate) fn simplicial_violation_within(
    g: &SignedGraph,
    v: VertexId,
    alive: &[bool],
) -> Option<SimplicialViolation> {
    let n = g.vertex_count();
    for sign in Sign::BOTH {
        let nbrs: Vec<VertexId> = g.neighbors(v, sign).filter(|&x| alive[x]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b, sign) {
                    return Some(SimplicialViolation::S1 { sign, a, b });
                }
            }
        }
    }
    for sign in Sign::BOTH {
        for w in g.neighbors(v, sign).filter(|&x| alive[x]) {
            for u in (0..n).filter(|&x| alive[x]) {
                if g.has_edge(u, w, -sign) && !g.has_edge(u, v, -sign) {
                    return Some(SimplicialViolation::S2 { sign, u, w });
                }
            }
        }
    }
    None
}

/// `Ok(None)` when `v` is signed-simplicial in `g`.
pub fn is_signed_simplicial(g: &SignedGraph, v: VertexId) -> Result<Option<SimplicialViolation>, Error> {
    g.check_vertex(v)?;
    let alive = vec![true; g.vertex_count()];
    Ok(simplicial_violation_within(g, v, &alive))
}

/// `S(G)`, ascending.
pub fn signed_simplicial_set(g: &SignedGraph) -> Vec<VertexId> {
    let alive = vec![true; g.vertex_count()];
    g.vertices()
        .filter(|&v| simplicial_violation_within(g, v, &alive).is_none())
        .collect()
}

/// Greedy elimination got stuck: no vertex of the remaining induced subgraph
/// is signed-simplicial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stuck {
    pub remaining: Vec<VertexId>,
}

/// Peels signed-simplicial vertices off the back of the ordering, always
/// taking the lowest-id candidate. Succeeds iff `g` is signed-eliminable.
pub fn greedy_seo(g: &SignedGraph) -> Result<VertexOrder, Stuck> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut sequence = vec![0; n];
    for slot in (0..n).rev() {
        let pick = (0..n).find(|&v| alive[v] && simplicial_violation_within(g, v, &alive).is_none());
        match pick {
            Some(v) => {
                sequence[slot] = v;
                alive[v] = false;
            }
            None => {
                return Err(Stuck {
                    remaining: (0..n).filter(|&v| alive[v]).collect(),
                })
            }
        }
    }
    Ok(VertexOrder { sequence })
}

/// `true` iff `g` admits an SEO.
pub fn is_signed_eliminable(g: &SignedGraph) -> bool {
    greedy_seo(g).is_ok()
}

/// Every SEO of `g`, in lexicographic order of the vertex sequence.
pub fn enumerate_seos(g: &SignedGraph) -> Result<Seos<'_>, Error> {
    enumerate_seos_capped(g, DEFAULT_SEO_ENUMERATION_CAP)
}

pub fn enumerate_seos_capped(g: &SignedGraph, cap: usize) -> Result<Seos<'_>, Error> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "SEO enumeration",
            n,
            cap,
        });
    }
    Ok(Seos {
        graph: g,
        prefix: Vec::with_capacity(n),
        in_prefix: vec![false; n],
        next: vec![0; n + 1],
        exhausted: false,
    })
}

/// Backtracking stream built front to back: a vertex may be appended only if
/// it is signed-simplicial in the subgraph induced by the extended prefix.
#[derive(Clone, Debug)]
pub struct Seos<'g> {
    graph: &'g SignedGraph,
    prefix: Vec<VertexId>,
    in_prefix: Vec<bool>,
    next: Vec<VertexId>,
    exhausted: bool,
}

impl Iterator for Seos<'_> {
    type Item = VertexOrder;

    fn next(&mut self) -> Option<VertexOrder> {
        let n = self.graph.vertex_count();
        while !self.exhausted {
            let depth = self.prefix.len();
            if depth == n {
                let out = VertexOrder {
                    sequence: self.prefix.clone(),
                };
                self.backtrack();
                return Some(out);
            }
            let mut extended = false;
            while self.next[depth] < n {
                let c = self.next[depth];
                self.next[depth] += 1;
                if self.in_prefix[c] {
                    continue;
                }
                self.in_prefix[c] = true;
                if simplicial_violation_within(self.graph, c, &self.in_prefix).is_none() {
                    self.prefix.push(c);
                    self.next[depth + 1] = 0;
                    extended = true;
                    break;
                }
                self.in_prefix[c] = false;
            }
            if !extended {
                self.backtrack();
            }
        }
        None
    }
}

impl Seos<'_> {
    fn backtrack(&mut self) {
        match self.prefix.pop() {
            Some(v) => self.in_prefix[v] = false,
            None => self.exhausted = true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use Sign::{Minus, Plus};

    fn g_ex() -> SignedGraph {
        SignedGraph::from_edges(4, [(0, 1, Plus), (1, 3, Plus), (2, 3, Minus)]).unwrap()
    }

    /// Mountain(+, 3): path 0 -1- 1 -2- 2 negative, apex 3 positive to 1.
    fn m3() -> SignedGraph {
        SignedGraph::from_edges(4, [(0, 1, Minus), (1, 2, Minus), (3, 1, Plus)]).unwrap()
    }

    fn order(seq: &[usize]) -> VertexOrder {
        VertexOrder::from_sequence(seq.to_vec()).unwrap()
    }

    #[test]
    fn ordering_text_form() {
        let o: VertexOrder = "2 1  3\t0".parse().unwrap();
        assert_eq!(o.sequence(), &[2, 1, 3, 0]);
        assert_eq!(o.to_string(), "2 1 3 0");
        assert_eq!(o.positions(), vec![3, 1, 0, 2]);
        assert!("0 0".parse::<VertexOrder>().is_err());
        assert!("0 2".parse::<VertexOrder>().is_err());
        assert!("0 x".parse::<VertexOrder>().is_err());
        assert_eq!("".parse::<VertexOrder>().unwrap().len(), 0);
    }

    #[test]
    fn worked_example_identity_is_seo() {
        assert_eq!(is_seo(&g_ex(), &VertexOrder::identity(4)).unwrap(), None);
        assert!(is_seo_via_weights(&g_ex(), &VertexOrder::identity(4)).unwrap());
        let single = SignedGraph::new(1).unwrap();
        assert_eq!(is_seo(&single, &order(&[0])).unwrap(), None);
    }

    #[test]
    fn mountain_identity_violates() {
        // w = 3 last: 0 ~- 1 ~+ 3 forces 0 ~- 3 under E2 with s = -.
        let v = is_seo(&m3(), &VertexOrder::identity(4)).unwrap().unwrap();
        assert_eq!(
            v,
            SeoViolation {
                condition: SeoCondition::E2,
                sign: Minus,
                u: 0,
                v: 1,
                w: 3
            }
        );
        assert!(!is_seo_via_weights(&m3(), &VertexOrder::identity(4)).unwrap());
        assert_eq!(v.to_string(), "violation E2 - u=0 v=1 w=3");
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(is_seo(&g_ex(), &order(&[0, 1, 2])).is_err());
        assert!(is_seo_via_weights(&g_ex(), &order(&[0, 1, 2])).is_err());
    }

    #[test]
    fn edgeless_passes_every_order() {
        let g = SignedGraph::new(4).unwrap();
        for p in (0..4).permutations(4) {
            assert!(is_seo_via_weights(&g, &order(&p)).unwrap());
            assert_eq!(is_seo(&g, &order(&p)).unwrap(), None);
        }
    }

    #[test]
    fn all_violations_lists_in_scan_order() {
        let all = seo_violations(&m3(), &VertexOrder::identity(4)).unwrap();
        assert_eq!(all.first(), is_seo(&m3(), &VertexOrder::identity(4)).unwrap().as_ref());
        assert!(seo_violations(&g_ex(), &VertexOrder::identity(4)).unwrap().is_empty());
    }

    #[test]
    fn signed_simplicial_vertices() {
        assert_eq!(is_signed_simplicial(&g_ex(), 3).unwrap(), None);
        assert_eq!(
            is_signed_simplicial(&g_ex(), 1).unwrap(),
            Some(SimplicialViolation::S1 { sign: Plus, a: 0, b: 3 })
        );
        assert_eq!(
            is_signed_simplicial(&g_ex(), 2).unwrap(),
            Some(SimplicialViolation::S2 { sign: Minus, u: 1, w: 3 })
        );
        assert_eq!(signed_simplicial_set(&g_ex()), vec![0, 3]);
        for v in 0..4 {
            assert!(is_signed_simplicial(&m3(), v).unwrap().is_some());
        }
        assert!(signed_simplicial_set(&m3()).is_empty());
        assert_eq!(signed_simplicial_set(&SignedGraph::new(3).unwrap()), vec![0, 1, 2]);
        assert!(is_signed_simplicial(&g_ex(), 9).is_err());
    }

    #[test]
    fn isolated_vertex_is_signed_simplicial() {
        let g = g_ex().disjoint_union(&SignedGraph::new(1).unwrap()).unwrap();
        assert_eq!(is_signed_simplicial(&g, 4).unwrap(), None);
    }

    #[test]
    fn greedy_trace() {
        assert_eq!(greedy_seo(&g_ex()).unwrap().sequence(), &[2, 1, 3, 0]);
        assert_eq!(
            greedy_seo(&m3()),
            Err(Stuck {
                remaining: vec![0, 1, 2, 3]
            })
        );
        assert_eq!(greedy_seo(&SignedGraph::new(0).unwrap()).unwrap().len(), 0);
    }

    #[test]
    fn capped_mountain_orders() {
        let mut cm3 = m3();
        cm3.add_edge(3, 2, Plus).unwrap();
        let g = greedy_seo(&cm3).unwrap();
        assert_eq!(is_seo(&cm3, &g).unwrap(), None);
        // w first, then the path
        assert_eq!(is_seo(&cm3, &order(&[3, 0, 1, 2])).unwrap(), None);
    }

    #[test]
    fn seo_enumeration_matches_filtering() {
        let brute = |g: &SignedGraph| -> Vec<VertexOrder> {
            (0..g.vertex_count())
                .permutations(g.vertex_count())
                .map(|p| order(&p))
                .filter(|o| is_seo(g, o).unwrap().is_none())
                .collect()
        };
        let single = SignedGraph::new(1).unwrap();
        assert_eq!(enumerate_seos(&single).unwrap().count(), 1);
        assert_eq!(enumerate_seos(&SignedGraph::new(0).unwrap()).unwrap().count(), 1);
        assert_eq!(enumerate_seos(&m3()).unwrap().count(), 0);
        let got: Vec<_> = enumerate_seos(&g_ex()).unwrap().collect();
        assert!(!got.is_empty());
        assert_eq!(got, brute(&g_ex()));
        assert_eq!(enumerate_seos(&SignedGraph::new(4).unwrap()).unwrap().count(), 24);
        assert!(enumerate_seos(&SignedGraph::new(9).unwrap()).is_err());
    }
}
