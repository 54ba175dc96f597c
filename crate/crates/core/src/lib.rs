//! Signed elimination orderings on signed graphs.
//!
//! A signed graph carries a `+` or `-` label on each edge. An ordering of its
//! vertices is a signed elimination ordering (SEO) when, for every triple with
//! `u` and `v` placed before `w`, the two closure rules hold:
//!
//! * `u ~s w ~s v` implies `u ~s v`;
//! * `u ~s v ~-s w` implies `u ~s w`.
//!
//! The crate recognizes and constructs such orderings, computes the degree
//! invariant they share, decides existence through a forbidden-structure
//! characterization with checkable certificates, and includes brute-force
//! oracles used to cross-check all of it on small graphs.
//!
//! ```
//! use signed_elim::{greedy_seo, is_seo, parse_sg};
//!
//! let g = parse_sg("sgraph 3\ne 0 1 +\ne 1 2 -\n").unwrap();
//! let order = greedy_seo(&g).unwrap();
//! assert!(is_seo(&g, &order).unwrap().is_none());
//! ```

pub mod certificate;
pub mod characterize;
pub mod chordal;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariant;
pub mod oracle;
pub mod seo;
pub mod special;

pub use certificate::{verify_certificate, Certificate, Rejection};
pub use characterize::{characterize, ConditionFlags, SearchLimit, Status, Verdict};
pub use chordal::{chordality_check, Chordality};
pub use enumerate::{enumerate_signed_graphs, graph_at};
pub use error::Error;
pub use format::{parse_sg, serialize_sg};
pub use graph::{Sign, SignedGraph, UnsignedGraph, VertexId, MAX_VERTICES};
pub use invariant::{deg_tilde, degree_profile, invariant_profile, DegTilde, DegreePair, DegreeProfile};
pub use oracle::{brute_force_se, build_family, cross_check, CrossCheckConfig, CrossCheckReport, Family};
pub use seo::{
    enumerate_seos, greedy_seo, is_seo, is_signed_eliminable, is_signed_simplicial, signed_simplicial_set,
    SeoViolation, Stuck, VertexOrder,
};
pub use special::{SpecialChecker, SpecialVerdict};
