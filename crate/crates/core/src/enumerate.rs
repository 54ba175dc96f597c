//! Exhaustive enumeration of labelled signed graphs.
//!
//! Graphs on `n` vertices are read as base-3 odometers over the vertex
//! pairs `(0,1), (0,2), ..., (n-2,n-1)` in lexicographic order, one digit
//! per pair with `0 = absent`, `1 = +`, `2 = -`. The last pair is the
//! fastest-moving digit, so index 0 is the edgeless graph and index 1 adds
//! `(n-2, n-1, +)`.

use crate::error::Error;
use crate::graph::{Sign, SignedGraph, VertexId};

/// Default largest `n` for [`enumerate_signed_graphs`] (`3^15` graphs).
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

const STATES: [Option<Sign>; 3] = [None, Some(Sign::Plus), Some(Sign::Minus)];

/// Vertex pairs in odometer order.
pub fn pairs(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `3^(n(n-1)/2)`, or `None` on overflow.
pub fn signed_graph_count(n: usize) -> Option<u64> {
    let m = u32::try_from(n * n.saturating_sub(1) / 2).ok()?;
    3u64.checked_pow(m)
}

/// Every labelled signed graph on `n <= 6` vertices exactly once.
pub fn enumerate_signed_graphs(n: usize) -> Result<SignedGraphs, Error> {
    enumerate_signed_graphs_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_signed_graphs_capped(n: usize, cap: usize) -> Result<SignedGraphs, Error> {
    if n > cap || signed_graph_count(n).is_none() {
        return Err(Error::CapExceeded {
            what: "signed graph enumeration",
            n,
            cap,
        });
    }
    Ok(SignedGraphs {
        n,
        pairs: pairs(n),
        digits: vec![0; n * n.saturating_sub(1) / 2],
        done: false,
    })
}

/// The graph at position `index` of the enumeration order.
pub fn graph_at(n: usize, index: u64) -> SignedGraph {
    let pairs = pairs(n);
    let mut g = SignedGraph::new(n).expect("enumeration sizes are small");
    let mut rest = index;
    for &(u, v) in pairs.iter().rev() {
        g.set(u, v, STATES[(rest % 3) as usize]);
        rest /= 3;
    }
    debug_assert_eq!(rest, 0, "index beyond the enumeration");
    g
}

/// Stream returned by [`enumerate_signed_graphs`]. Cloning restarts nothing:
/// a clone continues from the same point independently.
#[derive(Clone, Debug)]
pub struct SignedGraphs {
    n: usize,
    pairs: Vec<(VertexId, VertexId)>,
    digits: Vec<u8>,
    done: bool,
}

impl Iterator for SignedGraphs {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.done {
            return None;
        }
        let mut g = SignedGraph::new(self.n).expect("enumeration sizes are small");
        for (&(u, v), &d) in self.pairs.iter().zip(&self.digits) {
            g.set(u, v, STATES[d as usize]);
        }
        // advance the odometer, last digit fastest
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            if *d < 2 {
                *d += 1;
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(g)
    }
}

/// All `2^(n(n-1)/2)` single-sign graphs with every edge positive.
pub fn enumerate_positive_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let pairs = pairs(n);
    let m = pairs.len();
    assert!(m < 64, "too many pairs");
    (0u64..1 << m).map(move |mask| {
        let mut g = SignedGraph::new(n).expect("small");
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> (m - 1 - bit) & 1 == 1 {
                g.set(u, v, Some(Sign::Plus));
            }
        }
        g
    })
}

/// All complete signed graphs on `n` vertices (`2^(n(n-1)/2)` sign patterns).
pub fn enumerate_complete_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    enumerate_positive_graphs(n).map(move |pos| {
        let mut g = pos.clone();
        for u in 0..n {
            for v in u + 1..n {
                if pos.edge(u, v).is_none() {
                    g.set(u, v, Some(Sign::Minus));
                }
            }
        }
        g
    })
}
