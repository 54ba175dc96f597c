//! Signed and unsigned simple graphs on dense `0..n` vertex ids.
//!
//! A [`SignedGraph`] stores one cell per unordered vertex pair holding
//! "absent", `+` or `-`, so the partition of the edge set into positive and
//! negative edges can never be violated. All accessors accept a pair in
//! either order.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Largest vertex count accepted by constructors and the text parser.
///
/// Storage is a dense `n * n` matrix; anything much larger than this is out
/// of scope for the toolkit and would mostly be an accident (or a hostile
/// input).
pub const MAX_VERTICES: usize = 1024;

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// The sign carried by an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    /// Both signs, plus first. Every deterministic scan uses this order.
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }

    /// `+1` for plus, `-1` for minus.
    pub fn weight(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A finite simple graph whose edges are each labelled `+` or `-`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    cells: Vec<Option<Sign>>,
}

impl SignedGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(SignedGraph {
            n,
            cells: vec![None; n * n],
        })
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Self-loops, out-of-range ids and repeated pairs (even with the same
    /// sign) are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Sign)>,
    {
        let mut g = SignedGraph::new(n)?;
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Inserts an edge; fails if the pair already carries one.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, s: Sign) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.edge(u, v).is_some() {
            let (a, b) = ordered(u, v);
            return Err(Error::DuplicateEdge(a, b));
        }
        self.set(u, v, Some(s));
        Ok(())
    }

    pub(crate) fn set(&mut self, u: VertexId, v: VertexId, s: Option<Sign>) {
        self.cells[u * self.n + v] = s;
        self.cells[v * self.n + u] = s;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), Error> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// The sign of the edge `uv`, if any. Panics if either id is out of range.
    #[inline]
    pub fn edge(&self, u: VertexId, v: VertexId) -> Option<Sign> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.cells[u * self.n + v]
    }

    /// `u ~s v`.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId, s: Sign) -> bool {
        self.edge(u, v) == Some(s)
    }

    /// Adjacent in either sign.
    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edge(u, v).is_some()
    }

    /// Open `s`-neighbours of `v`, ascending.
    pub fn neighbors(&self, v: VertexId, s: Sign) -> impl Iterator<Item = VertexId> + '_ {
        let row = &self.cells[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(move |(_, c)| **c == Some(s))
            .map(|(u, _)| u)
    }

    /// `N_s(v)`, or `N_s[v]` when `closed`, as a sorted list.
    pub fn neighborhood(&self, v: VertexId, s: Sign, closed: bool) -> Result<Vec<VertexId>, Error> {
        self.check_vertex(v)?;
        let mut out: Vec<_> = self.neighbors(v, s).collect();
        if closed {
            let at = out.partition_point(|&u| u < v);
            out.insert(at, v);
        }
        Ok(out)
    }

    /// Number of `s`-neighbours of `v`.
    pub fn degree(&self, v: VertexId, s: Sign) -> usize {
        self.neighbors(v, s).count()
    }

    /// Every edge once, as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Sign)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| {
            (u + 1..n).filter_map(move |v| self.cells[u * n + v].map(|s| (u, v, s)))
        })
    }

    pub fn edge_count(&self, s: Sign) -> usize {
        self.edges().filter(|e| e.2 == s).count()
    }

    /// The induced subgraph on `keep`, relabelled order-preservingly.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<(SignedGraph, InducedMap), Error> {
        let map = InducedMap::new(self.n, keep)?;
        let k = map.kept.len();
        let mut sub = SignedGraph::new(k)?;
        for (i, &a) in map.kept.iter().enumerate() {
            for (j, &b) in map.kept.iter().enumerate().skip(i + 1) {
                sub.set(i, j, self.edge(a, b));
            }
        }
        Ok((sub, map))
    }

    /// `G_s`: same vertices, only the edges of sign `s`.
    pub fn sign_restriction(&self, s: Sign) -> UnsignedGraph {
        let mut h = UnsignedGraph::new(self.n);
        for (u, v, t) in self.edges() {
            if t == s {
                h.add_edge(u, v);
            }
        }
        h
    }

    /// The underlying unsigned graph (signs dropped).
    pub fn underlying(&self) -> UnsignedGraph {
        let mut h = UnsignedGraph::new(self.n);
        for (u, v, _) in self.edges() {
            h.add_edge(u, v);
        }
        h
    }

    /// The same graph with every sign negated.
    pub fn flipped(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            cells: self.cells.iter().map(|c| c.map(|s| -s)).collect(),
        }
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<SignedGraph, Error> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::NotAPermutation { n: self.n });
        }
        let mut g = SignedGraph::new(self.n)?;
        for (u, v, s) in self.edges() {
            g.set(perm[u], perm[v], Some(s));
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> Result<SignedGraph, Error> {
        let mut g = SignedGraph::new(self.n + other.n)?;
        for (u, v, s) in self.edges() {
            g.set(u, v, Some(s));
        }
        for (u, v, s) in other.edges() {
            g.set(u + self.n, v + self.n, Some(s));
        }
        Ok(g)
    }

    /// Maximal vertex sets connected by edges of either sign, each sorted,
    /// listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.underlying().connected_components()
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph({}; ", self.n)?;
        let mut first = true;
        for (u, v, s) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{u}{s}{v}")?;
        }
        write!(f, ")")
    }
}

/// Old/new vertex correspondence of an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    kept: Vec<VertexId>,
    new_of_old: Vec<Option<VertexId>>,
}

impl InducedMap {
    fn new(n: usize, keep: &[VertexId]) -> Result<Self, Error> {
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&bad) = kept.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut new_of_old = vec![None; n];
        for (i, &v) in kept.iter().enumerate() {
            new_of_old[v] = Some(i);
        }
        Ok(InducedMap { kept, new_of_old })
    }

    pub fn to_new(&self, old: VertexId) -> Option<VertexId> {
        self.new_of_old.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: VertexId) -> VertexId {
        self.kept[new]
    }

    /// The kept original vertices, ascending; index = new id.
    pub fn kept(&self) -> &[VertexId] {
        &self.kept
    }
}

/// A simple undirected graph, used for sign restrictions and the underlying
/// graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnsignedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UnsignedGraph {
    pub fn new(n: usize) -> Self {
        UnsignedGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Panics on self-loops or out-of-range ids; repeated edges are idempotent.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut h = UnsignedGraph::new(n);
        for (u, v) in edges {
            h.add_edge(u, v);
        }
        h
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loop");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &a)| a).map(|(u, _)| u)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| self.adj[u * n + v]).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Induced subgraph on `keep` (sorted, deduplicated, relabelled in order).
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> UnsignedGraph {
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut h = UnsignedGraph::new(kept.len());
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for UnsignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnsignedGraph({}; ", self.n)?;
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{})", edges.join(", "))
    }
}

pub(crate) fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

pub(crate) fn is_permutation(seq: &[VertexId]) -> bool {
    let mut seen = vec![false; seq.len()];
    for &v in seq {
        if v >= seq.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}
