//! The degree-pair profile of an ordering and its difference projection.
//!
//! For the vertex at position `i`, count its `+`- and `-`-neighbours at
//! positions `<= i`. The multiset of these pairs is the same for every SEO of
//! a signed-eliminable graph, so it (and the multiset of `d+ - d-`) is a
//! graph invariant.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Sign, SignedGraph};
use crate::seo::{enumerate_seos, greedy_seo, VertexOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreePair {
    pub plus: usize,
    pub minus: usize,
}

impl DegreePair {
    pub fn difference(self) -> i64 {
        self.plus as i64 - self.minus as i64
    }

    pub fn swapped(self) -> DegreePair {
        DegreePair {
            plus: self.minus,
            minus: self.plus,
        }
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.plus, self.minus)
    }
}

/// A multiset of degree pairs, kept as a sorted list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeProfile(Vec<DegreePair>);

impl DegreeProfile {
    pub fn from_pairs(mut pairs: Vec<DegreePair>) -> Self {
        pairs.sort_unstable();
        DegreeProfile(pairs)
    }

    pub fn pairs(&self) -> &[DegreePair] {
        &self.0
    }

    /// Componentwise sum; equals `(|E+|, |E-|)` for any ordering.
    pub fn totals(&self) -> (usize, usize) {
        self.0
            .iter()
            .fold((0, 0), |(p, m), d| (p + d.plus, m + d.minus))
    }

    pub fn swapped(&self) -> DegreeProfile {
        DegreeProfile::from_pairs(self.0.iter().map(|d| d.swapped()).collect())
    }

    /// The `d+ - d-` multiset, ascending.
    pub fn deg_tilde(&self) -> DegTilde {
        let mut values: Vec<i64> = self.0.iter().map(|d| d.difference()).collect();
        values.sort_unstable();
        DegTilde(values)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("profile:")?;
        for d in &self.0 {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

/// Ascending multiset of `d+ - d-` values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DegTilde(Vec<i64>);

impl DegTilde {
    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for DegTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("degt:")?;
        for x in &self.0 {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

/// Per-position pairs in position order (not yet sorted).
pub fn degree_pairs(g: &SignedGraph, order: &VertexOrder) -> Result<Vec<DegreePair>, Error> {
    order.check_fits(g)?;
    let pos = order.positions();
    Ok(order
        .sequence()
        .iter()
        .map(|&v| {
            let earlier = |s| g.neighbors(v, s).filter(|&u| pos[u] < pos[v]).count();
            DegreePair {
                plus: earlier(Sign::Plus),
                minus: earlier(Sign::Minus),
            }
        })
        .collect())
}

/// Defined for any ordering; only for SEOs is it ordering-independent.
pub fn degree_profile(g: &SignedGraph, order: &VertexOrder) -> Result<DegreeProfile, Error> {
    degree_pairs(g, order).map(DegreeProfile::from_pairs)
}

/// The profile of the greedy SEO; fails on graphs that are not
/// signed-eliminable.
pub fn invariant_profile(g: &SignedGraph) -> Result<DegreeProfile, Error> {
    let order = greedy_seo(g).map_err(|_| Error::NotEliminable)?;
    degree_profile(g, &order)
}

pub fn deg_tilde(g: &SignedGraph) -> Result<DegTilde, Error> {
    invariant_profile(g).map(|p| p.deg_tilde())
}

/// Distinct profiles over all SEOs of `g`.
pub fn profiles_over_all_seos(g: &SignedGraph) -> Result<BTreeSet<DegreeProfile>, Error> {
    enumerate_seos(g)?
        .map(|o| degree_profile(g, &o))
        .collect()
}

/// `true` iff every SEO of `g` yields the same profile.
pub fn invariance_check(g: &SignedGraph) -> Result<bool, Error> {
    let profiles = profiles_over_all_seos(g)?;
    if profiles.is_empty() {
        return Err(Error::NotEliminable);
    }
    Ok(profiles.len() == 1)
}
