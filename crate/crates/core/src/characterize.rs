//! The forbidden-structure characterization of signed-eliminable graphs.
//!
//! A signed graph is signed-eliminable exactly when
//!
//! * **C1**: both sign restrictions are chordal;
//! * **C2**: every alternating 4-path `u ~s v ~(-s) w ~s x` (four distinct
//!   vertices, other pairs unconstrained) has `w ~s u ~s x` or `u ~s x ~s v`;
//! * **C3**: no mountain and no hill occurs as an induced subgraph.
//!
//! Each failed condition comes with a [`Certificate`]. Mountain and hill
//! detection is exponential backtracking, so it refuses graphs above a
//! vertex cap unless the caller overrides it; [`crate::seo::greedy_seo`] is
//! the polynomial decision path.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::certificate::Certificate;
use crate::chordal::{chordality_check, Chordality};
use crate::error::Error;
use crate::format::serialize_sg;
use crate::graph::{Sign, SignedGraph, VertexId};
use crate::seo::{greedy_seo, VertexOrder};

/// Default vertex cap for mountain/hill searches.
pub const DEFAULT_SEARCH_CAP: usize = 12;

/// Vertex cap for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimit {
    max_vertices: Option<usize>,
}

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit {
            max_vertices: Some(DEFAULT_SEARCH_CAP),
        }
    }
}

impl SearchLimit {
    pub fn at_most(n: usize) -> Self {
        SearchLimit { max_vertices: Some(n) }
    }

    pub fn unlimited() -> Self {
        SearchLimit { max_vertices: None }
    }

    fn check(self, g: &SignedGraph, what: &'static str) -> Result<(), Error> {
        match self.max_vertices {
            Some(cap) if g.vertex_count() > cap => Err(Error::CapExceeded {
                what,
                n: g.vertex_count(),
                cap,
            }),
            _ => Ok(()),
        }
    }
}

/// C1 for one sign: `None` if `G_s` is chordal.
pub fn chordless_cycle(g: &SignedGraph, sign: Sign) -> Option<Certificate> {
    match chordality_check(&g.sign_restriction(sign)) {
        Chordality::Chordal(_) => None,
        Chordality::NotChordal(cycle) => Some(Certificate::ChordlessCycle { sign, cycle }),
    }
}

/// C1: `+` checked before `-`.
pub fn check_c1(g: &SignedGraph) -> Option<Certificate> {
    Sign::BOTH.into_iter().find_map(|s| chordless_cycle(g, s))
}

/// C2 violations in lexicographic `(sign, u, v, w, x)` order.
pub fn alt_path_violations(g: &SignedGraph) -> impl Iterator<Item = Certificate> + '_ {
    Sign::BOTH.into_iter().flat_map(move |s| {
        g.vertices().flat_map(move |u| {
            g.neighbors(u, s).flat_map(move |v| {
                g.neighbors(v, -s).flat_map(move |w| {
                    g.neighbors(w, s).filter_map(move |x| {
                        if u == w || u == x || v == x {
                            return None;
                        }
                        let left = g.has_edge(w, u, s) && g.has_edge(u, x, s);
                        let right = g.has_edge(u, x, s) && g.has_edge(x, v, s);
                        (!left && !right).then_some(Certificate::AltPath { sign: s, u, v, w, x })
                    })
                })
            })
        })
    })
}

/// C2: first violation, or `None`.
pub fn check_c2(g: &SignedGraph) -> Option<Certificate> {
    alt_path_violations(g).next()
}

/// First induced mountain, searching `+` before `-`, apexes by id, and
/// induced interior paths lowest-id first.
pub fn find_mountain(g: &SignedGraph, limit: SearchLimit) -> Result<Option<Certificate>, Error> {
    limit.check(g, "mountain search")?;
    for sign in Sign::BOTH {
        for apex in g.vertices() {
            let mut search = MountainSearch {
                g,
                sign,
                apex,
                path: Vec::new(),
            };
            if let Some(path) = search.run() {
                return Ok(Some(Certificate::Mountain { sign, path, apex }));
            }
        }
    }
    Ok(None)
}

/// `true` if `x` has no edge (either sign) to any of `others`.
fn isolated_from(g: &SignedGraph, x: VertexId, others: &[VertexId]) -> bool {
    others.iter().all(|&y| !g.adjacent(x, y))
}

struct MountainSearch<'g> {
    g: &'g SignedGraph,
    sign: Sign,
    apex: VertexId,
    /// Interior vertices `v2..v(n-1)`.
    path: Vec<VertexId>,
}

impl MountainSearch<'_> {
    fn run(&mut self) -> Option<Vec<VertexId>> {
        let starts: Vec<_> = self.g.neighbors(self.apex, self.sign).collect();
        for s in starts {
            self.path.push(s);
            let found = self.extend();
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Endpoint for one end of the interior: `(-sign)`-adjacent to `end`,
    /// not adjacent to the apex or any other interior vertex.
    fn endpoint_ok(&self, x: VertexId, end: VertexId) -> bool {
        let g = self.g;
        x != self.apex
            && !self.path.contains(&x)
            && g.has_edge(x, end, -self.sign)
            && !g.adjacent(x, self.apex)
            && self.path.iter().all(|&p| p == end || !g.adjacent(x, p))
    }

    fn extend(&mut self) -> Option<Vec<VertexId>> {
        let g = self.g;
        let first = self.path[0];
        let last = *self.path.last().expect("non-empty");
        let heads: Vec<_> = g
            .neighbors(first, -self.sign)
            .filter(|&a| self.endpoint_ok(a, first))
            .collect();
        let tails: Vec<_> = g
            .neighbors(last, -self.sign)
            .filter(|&b| self.endpoint_ok(b, last))
            .collect();
        for &a in &heads {
            for &b in &tails {
                if a != b && !g.adjacent(a, b) {
                    let mut full = vec![a];
                    full.extend(&self.path);
                    full.push(b);
                    return Some(full);
                }
            }
        }
        let next: Vec<_> = g
            .neighbors(last, -self.sign)
            .filter(|&y| {
                g.has_edge(y, self.apex, self.sign)
                    && !self.path.contains(&y)
                    && isolated_from(g, y, &self.path[..self.path.len() - 1])
            })
            .collect();
        for y in next {
            self.path.push(y);
            let found = self.extend();
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// First induced hill of any path length.
pub fn find_hill(g: &SignedGraph, limit: SearchLimit) -> Result<Option<Certificate>, Error> {
    find_hill_with_path_len(g, 2..=usize::MAX, limit)
}

/// First induced hill whose path length lies in `lengths`. Search order:
/// `+` before `-`, then `w1`, then `w2`, then path vertices lowest-id first.
pub fn find_hill_with_path_len(
    g: &SignedGraph,
    lengths: RangeInclusive<usize>,
    limit: SearchLimit,
) -> Result<Option<Certificate>, Error> {
    limit.check(g, "hill search")?;
    for sign in Sign::BOTH {
        for w1 in g.vertices() {
            for w2 in g.neighbors(w1, sign) {
                let mut search = HillSearch {
                    g,
                    sign,
                    w1,
                    w2,
                    lengths: lengths.clone(),
                    path: Vec::new(),
                };
                if let Some(path) = search.run() {
                    return Ok(Some(Certificate::Hill {
                        sign,
                        path,
                        apexes: (w1, w2),
                    }));
                }
            }
        }
    }
    Ok(None)
}

struct HillSearch<'g> {
    g: &'g SignedGraph,
    sign: Sign,
    w1: VertexId,
    w2: VertexId,
    lengths: RangeInclusive<usize>,
    /// `v1..vk` placed so far (the final `vn` is attached separately).
    path: Vec<VertexId>,
}

impl HillSearch<'_> {
    fn run(&mut self) -> Option<Vec<VertexId>> {
        let g = self.g;
        let starts: Vec<_> = g
            .neighbors(self.w1, self.sign)
            .filter(|&a| a != self.w2 && !g.adjacent(a, self.w2))
            .collect();
        for a in starts {
            self.path.push(a);
            let found = self.extend();
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn fresh(&self, y: VertexId) -> bool {
        y != self.w1 && y != self.w2 && !self.path.contains(&y)
    }

    fn extend(&mut self) -> Option<Vec<VertexId>> {
        let g = self.g;
        let s = self.sign;
        let last = *self.path.last().expect("non-empty");
        let before_last = &self.path[..self.path.len() - 1];
        if self.lengths.contains(&(self.path.len() + 1)) {
            let close = g.neighbors(last, -s).find(|&b| {
                self.fresh(b)
                    && g.has_edge(b, self.w2, s)
                    && !g.adjacent(b, self.w1)
                    && isolated_from(g, b, before_last)
            });
            if let Some(b) = close {
                let mut full = self.path.clone();
                full.push(b);
                return Some(full);
            }
        }
        if self.path.len() + 2 > *self.lengths.end() {
            return None;
        }
        let next: Vec<_> = g
            .neighbors(last, -s)
            .filter(|&y| {
                self.fresh(y)
                    && g.has_edge(y, self.w1, s)
                    && g.has_edge(y, self.w2, s)
                    && isolated_from(g, y, before_last)
            })
            .collect();
        for y in next {
            self.path.push(y);
            let found = self.extend();
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// C3: the first mountain, else the first hill.
pub fn check_c3(g: &SignedGraph, limit: SearchLimit) -> Result<Option<Certificate>, Error> {
    if let Some(m) = find_mountain(g, limit)? {
        return Ok(Some(m));
    }
    find_hill(g, limit)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFlags {
    pub c1_plus: bool,
    pub c1_minus: bool,
    pub c2: bool,
    pub c3: bool,
}

impl ConditionFlags {
    pub fn all(&self) -> bool {
        self.c1_plus && self.c1_minus && self.c2 && self.c3
    }
}

fn yn(b: bool) -> char {
    if b {
        'y'
    } else {
        'n'
    }
}

impl fmt::Display for ConditionFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c1+={} c1-={} c2={} c3={}",
            yn(self.c1_plus),
            yn(self.c1_minus),
            yn(self.c2),
            yn(self.c3)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Eliminable { order: VertexOrder },
    NotEliminable { certificate: Certificate },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub flags: ConditionFlags,
    #[serde(flatten)]
    pub status: Status,
}

impl Verdict {
    pub fn is_eliminable(&self) -> bool {
        matches!(self.status, Status::Eliminable { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.status {
            Status::NotEliminable { certificate } => Some(certificate),
            Status::Eliminable { .. } => None,
        }
    }
}

/// Evaluates every condition, then reports the first failing one's
/// certificate (C1 `+`, C1 `-`, C2, mountain, hill) or, if all hold, the
/// greedy SEO.
///
/// Returns [`Error::CharacterizationMismatch`] if the conditions hold but
/// greedy elimination fails, which would mean the conditions are not
/// sufficient after all.
pub fn characterize(g: &SignedGraph, limit: SearchLimit) -> Result<Verdict, Error> {
    let c1_plus = chordless_cycle(g, Sign::Plus);
    let c1_minus = chordless_cycle(g, Sign::Minus);
    let c2 = check_c2(g);
    let c3 = check_c3(g, limit)?;
    let flags = ConditionFlags {
        c1_plus: c1_plus.is_none(),
        c1_minus: c1_minus.is_none(),
        c2: c2.is_none(),
        c3: c3.is_none(),
    };
    let first = c1_plus.or(c1_minus).or(c2).or(c3);
    let status = match first {
        Some(certificate) => Status::NotEliminable { certificate },
        None => match greedy_seo(g) {
            Ok(order) => Status::Eliminable { order },
            Err(_) => return Err(Error::CharacterizationMismatch(serialize_sg(g))),
        },
    };
    Ok(Verdict { flags, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use Sign::{Minus, Plus};

    fn g(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn m3() -> SignedGraph {
        g(4, &[(0, 1, Minus), (1, 2, Minus), (3, 1, Plus)])
    }

    fn cm3() -> SignedGraph {
        g(4, &[(0, 1, Minus), (1, 2, Minus), (3, 1, Plus), (3, 2, Plus)])
    }

    fn p4alt() -> SignedGraph {
        g(4, &[(0, 1, Plus), (1, 2, Minus), (2, 3, Plus)])
    }

    #[test]
    fn c1_examples() {
        let g_ex = g(4, &[(0, 1, Plus), (1, 3, Plus), (2, 3, Minus)]);
        assert_eq!(check_c1(&g_ex), None);
        let square = g(4, &[(0, 1, Plus), (1, 2, Plus), (2, 3, Plus), (3, 0, Plus)]);
        assert_eq!(
            check_c1(&square),
            Some(Certificate::ChordlessCycle {
                sign: Plus,
                cycle: vec![0, 1, 2, 3]
            })
        );
        let mixed = g(4, &[(0, 1, Plus), (1, 2, Minus), (2, 3, Plus), (3, 0, Minus)]);
        assert_eq!(check_c1(&mixed), None);
    }

    #[test]
    fn c2_examples() {
        assert_eq!(
            check_c2(&p4alt()),
            Some(Certificate::AltPath {
                sign: Plus,
                u: 0,
                v: 1,
                w: 2,
                x: 3
            })
        );
        assert_eq!(check_c2(&cm3()), None);
        assert_eq!(check_c2(&SignedGraph::new(5).unwrap()), None);
    }

    #[test]
    fn mountain_examples() {
        assert_eq!(
            find_mountain(&m3(), SearchLimit::default()).unwrap(),
            Some(Certificate::Mountain {
                sign: Plus,
                path: vec![0, 1, 2],
                apex: 3
            })
        );
        // minus-mountain with a 4-vertex path, plus an isolated vertex
        let m = g(
            6,
            &[(0, 1, Plus), (1, 2, Plus), (2, 3, Plus), (4, 1, Minus), (4, 2, Minus)],
        );
        let found = find_mountain(&m, SearchLimit::default()).unwrap().unwrap();
        assert_eq!(
            found,
            Certificate::Mountain {
                sign: Minus,
                path: vec![0, 1, 2, 3],
                apex: 4
            }
        );
        assert_eq!(verify_certificate(&m, &found), Ok(()));
        assert_eq!(find_mountain(&cm3(), SearchLimit::default()).unwrap(), None);
    }

    #[test]
    fn hill_examples() {
        let h2 = g(4, &[(0, 1, Minus), (2, 3, Plus), (2, 0, Plus), (3, 1, Plus)]);
        assert_eq!(
            find_hill(&h2, SearchLimit::default()).unwrap(),
            Some(Certificate::Hill {
                sign: Plus,
                path: vec![0, 1],
                apexes: (2, 3)
            })
        );
        let mut ch2 = h2.clone();
        ch2.add_edge(2, 1, Plus).unwrap();
        assert_eq!(find_hill(&ch2, SearchLimit::default()).unwrap(), None);
        // minus-hill on path 0-1-2 inside a 6-vertex graph
        let h3 = g(
            6,
            &[
                (0, 1, Plus),
                (1, 2, Plus),
                (3, 4, Minus),
                (3, 0, Minus),
                (3, 1, Minus),
                (4, 1, Minus),
                (4, 2, Minus),
            ],
        );
        let found = find_hill(&h3, SearchLimit::default()).unwrap().unwrap();
        assert_eq!(verify_certificate(&h3, &found), Ok(()));
        assert_eq!(found.sign(), Minus);
        assert_eq!(find_hill_with_path_len(&h3, 2..=2, SearchLimit::default()).unwrap(), None);
    }

    #[test]
    fn search_cap() {
        let big = SignedGraph::new(13).unwrap();
        assert!(matches!(
            find_mountain(&big, SearchLimit::default()),
            Err(Error::CapExceeded { n: 13, cap: 12, .. })
        ));
        assert!(find_hill(&big, SearchLimit::default()).is_err());
        assert_eq!(find_mountain(&big, SearchLimit::unlimited()).unwrap(), None);
        assert!(find_hill(&big, SearchLimit::at_most(2)).is_err());
    }

    #[test]
    fn verdicts() {
        let v = characterize(&m3(), SearchLimit::default()).unwrap();
        assert_eq!(v.flags.to_string(), "c1+=y c1-=y c2=y c3=n");
        assert!(matches!(v.certificate(), Some(Certificate::Mountain { .. })));

        let v = characterize(&p4alt(), SearchLimit::default()).unwrap();
        assert!(!v.flags.c2);
        assert!(matches!(v.certificate(), Some(Certificate::AltPath { .. })));

        let v = characterize(&cm3(), SearchLimit::default()).unwrap();
        assert!(v.is_eliminable());
        assert!(v.flags.all());
    }
}
