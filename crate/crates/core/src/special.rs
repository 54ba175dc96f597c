//! Fast recognizers for restricted graph classes.
//!
//! Each checker first tests its precondition and reports
//! `applicable = false` instead of failing when it does not hold, so a
//! harness can push every graph through every checker.
//!
//! * four vertices: SE iff some vertex has degree 3 in `G+` or `G-`
//!   (FV1), or both restrictions are chordal, `G` is not itself a mountain
//!   and `G` has no alternating 4-path at all (FV2);
//! * chordal underlying graph: SE iff C2 and C3;
//! * independence number below 3: SE iff C2, no monochromatic 4- or
//!   5-cycle that is induced in `G` (I1), and no induced hill on 5 or 6
//!   vertices (I2);
//! * complete underlying graph: SE iff for each sign, `G_s` has no induced
//!   `P4` and no induced `2K2`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::chordal::chordality_check;
use crate::characterize::{
    alt_path_violations, characterize, check_c1, check_c2, find_hill, find_hill_with_path_len, find_mountain,
    SearchLimit,
};
use crate::error::Error;
use crate::graph::{Sign, SignedGraph, VertexId};
use crate::seo::is_signed_eliminable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialChecker {
    FourVertex,
    ChordalUnderlying,
    LowIndependence,
    Complete,
}

impl SpecialChecker {
    pub const ALL: [SpecialChecker; 4] = [
        SpecialChecker::FourVertex,
        SpecialChecker::ChordalUnderlying,
        SpecialChecker::LowIndependence,
        SpecialChecker::Complete,
    ];

    /// Short name used on the command line and in verdict lines.
    pub fn name(self) -> &'static str {
        match self {
            SpecialChecker::FourVertex => "fv",
            SpecialChecker::ChordalUnderlying => "chordal",
            SpecialChecker::LowIndependence => "lowindep",
            SpecialChecker::Complete => "complete",
        }
    }

    pub fn from_name(name: &str) -> Option<SpecialChecker> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn run(self, g: &SignedGraph) -> Result<SpecialVerdict, Error> {
        match self {
            SpecialChecker::FourVertex => Ok(four_vertex_check(g)),
            SpecialChecker::ChordalUnderlying => chordal_underlying_check(g),
            SpecialChecker::LowIndependence => low_independence_check(g),
            SpecialChecker::Complete => Ok(complete_graph_check(g)),
        }
    }
}

/// Which clause settled the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// The precondition failed.
    Precondition,
    Fv1,
    Fv2,
    ChordlessCycle,
    IsMountain,
    AltPath,
    /// C2 and C3 hold.
    C2C3,
    Mountain,
    Hill,
    /// C2, I1 and I2 hold.
    C2I1I2,
    InducedCycle,
    SmallHill,
    NoP4Or2K2,
    P4,
    TwoK2,
}

impl Reason {
    pub fn token(self) -> &'static str {
        match self {
            Reason::Precondition => "precondition",
            Reason::Fv1 => "fv1",
            Reason::Fv2 => "fv2",
            Reason::ChordlessCycle => "chordless-cycle",
            Reason::IsMountain => "is-mountain",
            Reason::AltPath => "alt-path",
            Reason::C2C3 => "c2-c3",
            Reason::Mountain => "mountain",
            Reason::Hill => "hill",
            Reason::C2I1I2 => "c2-i1-i2",
            Reason::InducedCycle => "i1",
            Reason::SmallHill => "i2",
            Reason::NoP4Or2K2 => "no-p4-2k2",
            Reason::P4 => "p4",
            Reason::TwoK2 => "2k2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialVerdict {
    pub checker: SpecialChecker,
    pub applicable: bool,
    /// Meaningful only when `applicable`.
    pub se: bool,
    pub reason: Reason,
}

impl SpecialVerdict {
    fn inapplicable(checker: SpecialChecker) -> Self {
        SpecialVerdict {
            checker,
            applicable: false,
            se: false,
            reason: Reason::Precondition,
        }
    }

    fn decided(checker: SpecialChecker, se: bool, reason: Reason) -> Self {
        SpecialVerdict {
            checker,
            applicable: true,
            se,
            reason,
        }
    }

    /// `Some(se)` when applicable.
    pub fn decision(&self) -> Option<bool> {
        self.applicable.then_some(self.se)
    }
}

impl fmt::Display for SpecialVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b| if b { 'y' } else { 'n' };
        write!(
            f,
            "special {}: applicable={} se={} reason={}",
            self.checker.name(),
            yn(self.applicable),
            yn(self.se),
            self.reason.token()
        )
    }
}

/// Whether the whole graph is a mountain with a 3-vertex path, under any
/// labelling and either sign.
fn whole_graph_is_small_mountain(g: &SignedGraph) -> bool {
    if g.vertex_count() != 4 {
        return false;
    }
    Sign::BOTH.into_iter().any(|s| {
        (0..4).permutations(4).any(|p| {
            let (v1, v2, v3, w) = (p[0], p[1], p[2], p[3]);
            g.has_edge(v1, v2, -s)
                && g.has_edge(v2, v3, -s)
                && g.has_edge(w, v2, s)
                && !g.adjacent(v1, v3)
                && !g.adjacent(w, v1)
                && !g.adjacent(w, v3)
        })
    })
}

pub fn four_vertex_check(g: &SignedGraph) -> SpecialVerdict {
    let me = SpecialChecker::FourVertex;
    if g.vertex_count() != 4 {
        return SpecialVerdict::inapplicable(me);
    }
    let fv1 = Sign::BOTH
        .into_iter()
        .any(|s| g.vertices().any(|v| g.degree(v, s) == 3));
    if fv1 {
        return SpecialVerdict::decided(me, true, Reason::Fv1);
    }
    if check_c1(g).is_some() {
        return SpecialVerdict::decided(me, false, Reason::ChordlessCycle);
    }
    if whole_graph_is_small_mountain(g) {
        return SpecialVerdict::decided(me, false, Reason::IsMountain);
    }
    // FV2 forbids every alternating 4-path, not only C2-violating ones.
    let any_alt_path = Sign::BOTH.into_iter().any(|s| {
        g.vertices().any(|u| {
            g.neighbors(u, s).any(|v| {
                g.neighbors(v, -s)
                    .any(|w| g.neighbors(w, s).any(|x| u != w && u != x && v != x))
            })
        })
    });
    if any_alt_path {
        return SpecialVerdict::decided(me, false, Reason::AltPath);
    }
    SpecialVerdict::decided(me, true, Reason::Fv2)
}

pub fn chordal_underlying_check(g: &SignedGraph) -> Result<SpecialVerdict, Error> {
    let me = SpecialChecker::ChordalUnderlying;
    if !chordality_check(&g.underlying()).is_chordal() {
        return Ok(SpecialVerdict::inapplicable(me));
    }
    if check_c2(g).is_some() {
        return Ok(SpecialVerdict::decided(me, false, Reason::AltPath));
    }
    if find_mountain(g, SearchLimit::default())?.is_some() {
        return Ok(SpecialVerdict::decided(me, false, Reason::Mountain));
    }
    if find_hill(g, SearchLimit::default())?.is_some() {
        return Ok(SpecialVerdict::decided(me, false, Reason::Hill));
    }
    Ok(SpecialVerdict::decided(me, true, Reason::C2C3))
}

/// Brute-force scan of all vertex triples for a pairwise non-adjacent one.
pub fn has_independent_triple(g: &SignedGraph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            !g.adjacent(a, b) && (b + 1..n).any(|c| !g.adjacent(a, c) && !g.adjacent(b, c))
        })
    })
}

/// A cycle on 4 or 5 vertices whose edges all have sign `s` and that is an
/// induced subgraph of `G` (no chord of either sign).
pub fn monochromatic_induced_cycle(g: &SignedGraph, s: Sign) -> Option<Vec<VertexId>> {
    for k in [4, 5] {
        for subset in g.vertices().combinations(k) {
            let edges: Vec<_> = subset
                .iter()
                .tuple_combinations()
                .filter_map(|(&a, &b)| g.edge(a, b).map(|t| (a, b, t)))
                .collect();
            if edges.len() != k || edges.iter().any(|e| e.2 != s) {
                continue;
            }
            let two_regular = subset
                .iter()
                .all(|&v| edges.iter().filter(|e| e.0 == v || e.1 == v).count() == 2);
            if !two_regular {
                continue;
            }
            // 2-regular on 4 or 5 vertices is a single cycle; walk it
            let mut cycle = vec![subset[0]];
            let mut prev = usize::MAX;
            while cycle.len() < k {
                let at = *cycle.last().expect("non-empty");
                let next = subset
                    .iter()
                    .copied()
                    .find(|&y| y != prev && y != at && g.adjacent(at, y))
                    .expect("2-regular");
                prev = at;
                cycle.push(next);
            }
            return Some(cycle);
        }
    }
    None
}

pub fn low_independence_check(g: &SignedGraph) -> Result<SpecialVerdict, Error> {
    let me = SpecialChecker::LowIndependence;
    if has_independent_triple(g) {
        return Ok(SpecialVerdict::inapplicable(me));
    }
    if check_c2(g).is_some() {
        return Ok(SpecialVerdict::decided(me, false, Reason::AltPath));
    }
    if Sign::BOTH
        .into_iter()
        .any(|s| monochromatic_induced_cycle(g, s).is_some())
    {
        return Ok(SpecialVerdict::decided(me, false, Reason::InducedCycle));
    }
    // hills on 5 or 6 vertices have paths of 3 or 4 vertices
    if find_hill_with_path_len(g, 3..=4, SearchLimit::default())?.is_some() {
        return Ok(SpecialVerdict::decided(me, false, Reason::SmallHill));
    }
    Ok(SpecialVerdict::decided(me, true, Reason::C2I1I2))
}

/// Induced `P4` or induced `2K2` in `G_s`, whichever comes first by vertex
/// subset.
fn p4_or_2k2(g: &SignedGraph, s: Sign) -> Option<Reason> {
    for quad in g.vertices().combinations(4) {
        let edges: Vec<(VertexId, VertexId)> = quad
            .iter()
            .tuple_combinations()
            .filter(|(&a, &b)| g.has_edge(a, b, s))
            .map(|(&a, &b)| (a, b))
            .collect();
        let degree = |v| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
        let mut degrees: Vec<usize> = quad.iter().map(|&v| degree(v)).collect();
        degrees.sort_unstable();
        match (edges.len(), degrees.as_slice()) {
            // three edges with degrees 1,1,2,2 is a path (a triangle plus
            // isolated vertex would be 0,2,2,2)
            (3, [1, 1, 2, 2]) => return Some(Reason::P4),
            (2, [1, 1, 1, 1]) => return Some(Reason::TwoK2),
            _ => {}
        }
    }
    None
}

pub fn complete_graph_check(g: &SignedGraph) -> SpecialVerdict {
    let me = SpecialChecker::Complete;
    let n = g.vertex_count();
    let complete = (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v)));
    if !complete {
        return SpecialVerdict::inapplicable(me);
    }
    match Sign::BOTH.into_iter().find_map(|s| p4_or_2k2(g, s)) {
        Some(reason) => SpecialVerdict::decided(me, false, reason),
        None => SpecialVerdict::decided(me, true, Reason::NoP4Or2K2),
    }
}

/// Runs every checker.
pub fn all_special_checks(g: &SignedGraph) -> Result<Vec<SpecialVerdict>, Error> {
    SpecialChecker::ALL.into_iter().map(|c| c.run(g)).collect()
}

/// The older form of the characterization: C1, C3 and "every 4-vertex
/// induced subgraph is SE". `true` iff it agrees with [`characterize`].
pub fn remark_equivalence_check(g: &SignedGraph) -> Result<bool, Error> {
    let limit = SearchLimit::default();
    let verdict = characterize(g, limit)?;
    let small_ok = g.vertices().combinations(4).all(|quad| {
        let (sub, _) = g.induced_subgraph(&quad).expect("in range");
        is_signed_eliminable(&sub)
    });
    let alternative = verdict.flags.c1_plus && verdict.flags.c1_minus && verdict.flags.c3 && small_ok;
    Ok(alternative == verdict.is_eliminable())
}

/// Whether every alternating 4-path satisfies the closure an SE graph must
/// have: `u ~s x`, and `u ~s w` or `v ~s x`.
pub fn alternating_path_property(g: &SignedGraph) -> bool {
    alt_path_violations(g).next().is_none()
}
