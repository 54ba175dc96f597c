//! Witnesses of non-eliminability, their one-line text form, and a checker
//! that validates them against a graph from scratch.
//!
//! ```text
//! cert chordless-cycle <sign> <v0> <v1> ...
//! cert alt-path <sign> <u> <v> <w> <x>
//! cert mountain <sign> path=<v1,...,vn> apex=<w>
//! cert hill <sign> path=<v1,...,vn> apexes=<w1>,<w2>
//! ```
//!
//! [`verify_certificate`] only asks the graph for the sign of individual
//! pairs; it shares nothing with the search code that produces certificates.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Sign, SignedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A cycle of `sign`-edges, length at least 4, with no `sign`-chord.
    ChordlessCycle { sign: Sign, cycle: Vec<VertexId> },
    /// `u ~sign v ~(-sign) w ~sign x` where neither `w ~ u ~ x` nor
    /// `u ~ x ~ v` holds in sign `sign`.
    AltPath {
        sign: Sign,
        u: VertexId,
        v: VertexId,
        w: VertexId,
        x: VertexId,
    },
    /// Induced `sign`-mountain: `(-sign)`-path `v1..vn` (n >= 3) and an apex
    /// `sign`-adjacent to exactly `v2..v(n-1)`.
    Mountain {
        sign: Sign,
        path: Vec<VertexId>,
        apex: VertexId,
    },
    /// Induced `sign`-hill: `(-sign)`-path `v1..vn` (n >= 2), `w1 ~sign w2`,
    /// `w1` covering `v1..v(n-1)` and `w2` covering `v2..vn`.
    Hill {
        sign: Sign,
        path: Vec<VertexId>,
        apexes: (VertexId, VertexId),
    },
}

impl Certificate {
    pub fn sign(&self) -> Sign {
        match self {
            Certificate::ChordlessCycle { sign, .. }
            | Certificate::AltPath { sign, .. }
            | Certificate::Mountain { sign, .. }
            | Certificate::Hill { sign, .. } => *sign,
        }
    }

    /// Every vertex the certificate mentions, in listing order.
    pub fn vertices(&self) -> Vec<VertexId> {
        match self {
            Certificate::ChordlessCycle { cycle, .. } => cycle.clone(),
            Certificate::AltPath { u, v, w, x, .. } => vec![*u, *v, *w, *x],
            Certificate::Mountain { path, apex, .. } => {
                let mut all = path.clone();
                all.push(*apex);
                all
            }
            Certificate::Hill { path, apexes, .. } => {
                let mut all = path.clone();
                all.extend([apexes.0, apexes.1]);
                all
            }
        }
    }
}

fn join(ids: &[VertexId], sep: &str) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ChordlessCycle { sign, cycle } => {
                write!(f, "cert chordless-cycle {sign} {}", join(cycle, " "))
            }
            Certificate::AltPath { sign, u, v, w, x } => write!(f, "cert alt-path {sign} {u} {v} {w} {x}"),
            Certificate::Mountain { sign, path, apex } => {
                write!(f, "cert mountain {sign} path={} apex={apex}", join(path, ","))
            }
            Certificate::Hill { sign, path, apexes } => write!(
                f,
                "cert hill {sign} path={} apexes={},{}",
                join(path, ","),
                apexes.0,
                apexes.1
            ),
        }
    }
}

fn bad(message: impl Into<String>) -> Error {
    Error::Syntax {
        line: 1,
        message: message.into(),
    }
}

fn id(tok: &str) -> Result<VertexId, Error> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(format!("expected a vertex id, found `{tok}`")));
    }
    tok.parse().map_err(|_| bad(format!("vertex id `{tok}` is too large")))
}

fn id_list(tok: &str) -> Result<Vec<VertexId>, Error> {
    tok.split(',').map(id).collect()
}

fn keyed<'a>(tok: Option<&'a str>, key: &str) -> Result<&'a str, Error> {
    tok.and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| bad(format!("expected `{key}=...`")))
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self, Error> {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("cert") {
            return Err(bad("certificate lines start with `cert`"));
        }
        let kind = tokens.next().ok_or_else(|| bad("missing certificate kind"))?;
        let sign = tokens
            .next()
            .and_then(Sign::from_symbol)
            .ok_or_else(|| bad("missing or invalid sign"))?;
        let cert = match kind {
            "chordless-cycle" => Certificate::ChordlessCycle {
                sign,
                cycle: tokens.by_ref().map(id).collect::<Result<_, _>>()?,
            },
            "alt-path" => {
                let ids: Vec<VertexId> = tokens.by_ref().map(id).collect::<Result<_, _>>()?;
                let [u, v, w, x] = ids[..] else {
                    return Err(bad("alt-path takes exactly four vertices"));
                };
                Certificate::AltPath { sign, u, v, w, x }
            }
            "mountain" => {
                let path = id_list(keyed(tokens.next(), "path")?)?;
                let apex = id(keyed(tokens.next(), "apex")?)?;
                Certificate::Mountain { sign, path, apex }
            }
            "hill" => {
                let path = id_list(keyed(tokens.next(), "path")?)?;
                let apexes = id_list(keyed(tokens.next(), "apexes")?)?;
                let [w1, w2] = apexes[..] else {
                    return Err(bad("hill takes exactly two apexes"));
                };
                Certificate::Hill {
                    sign,
                    path,
                    apexes: (w1, w2),
                }
            }
            other => return Err(bad(format!("unknown certificate kind `{other}`"))),
        };
        if let Some(extra) = tokens.next() {
            return Err(bad(format!("unexpected trailing token `{extra}`")));
        }
        Ok(cert)
    }
}

/// Why a certificate does not hold for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection(pub String);

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn reject<T>(msg: impl Into<String>) -> Result<T, Rejection> {
    Err(Rejection(msg.into()))
}

fn fmt_edge(s: Option<Sign>) -> String {
    s.map_or_else(|| "none".to_string(), |s| s.to_string())
}

/// Checks that `expected(i, j)` is the exact sign pattern of the pairs of
/// `vs` in `g`.
fn exact_pattern(
    g: &SignedGraph,
    vs: &[VertexId],
    expected: impl Fn(usize, usize) -> Option<Sign>,
) -> Result<(), Rejection> {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let want = expected(i, j);
            let got = g.edge(vs[i], vs[j]);
            if want != got {
                return reject(format!(
                    "pair {}-{} should be {} but is {}",
                    vs[i],
                    vs[j],
                    fmt_edge(want),
                    fmt_edge(got)
                ));
            }
        }
    }
    Ok(())
}

fn distinct_in_range(g: &SignedGraph, vs: &[VertexId]) -> Result<(), Rejection> {
    let mut seen = HashSet::new();
    for &v in vs {
        if v >= g.vertex_count() {
            return reject(format!("vertex {v} out of range"));
        }
        if !seen.insert(v) {
            return reject(format!("vertex {v} repeated"));
        }
    }
    Ok(())
}

pub fn verify_certificate(g: &SignedGraph, cert: &Certificate) -> Result<(), Rejection> {
    distinct_in_range(g, &cert.vertices())?;
    match cert {
        Certificate::ChordlessCycle { sign, cycle } => {
            let k = cycle.len();
            if k < 4 {
                return reject(format!("cycle has length {k}, need at least 4"));
            }
            for i in 0..k {
                for j in i + 1..k {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    let present = g.edge(cycle[i], cycle[j]) == Some(*sign);
                    if consecutive && !present {
                        return reject(format!("cycle edge {}-{} is not a {sign} edge", cycle[i], cycle[j]));
                    }
                    if !consecutive && present {
                        return reject(format!("chord {}-{} has sign {sign}", cycle[i], cycle[j]));
                    }
                }
            }
            Ok(())
        }
        &Certificate::AltPath { sign, u, v, w, x } => {
            let s = sign;
            let e = |a, b, t| g.edge(a, b) == Some(t);
            if !(e(u, v, s) && e(v, w, -s) && e(w, x, s)) {
                return reject("edges do not form the pattern sign, -sign, sign");
            }
            if e(w, u, s) && e(u, x, s) {
                return reject(format!("{w} ~{s} {u} ~{s} {x} holds"));
            }
            if e(u, x, s) && e(x, v, s) {
                return reject(format!("{u} ~{s} {x} ~{s} {v} holds"));
            }
            Ok(())
        }
        Certificate::Mountain { sign, path, apex } => {
            let n = path.len();
            if n < 3 {
                return reject(format!("mountain path has {n} vertices, need at least 3"));
            }
            let mut vs = path.clone();
            vs.push(*apex);
            exact_pattern(g, &vs, |i, j| {
                if j == n {
                    (1..n - 1).contains(&i).then_some(*sign)
                } else {
                    (j == i + 1).then_some(-*sign)
                }
            })
        }
        Certificate::Hill { sign, path, apexes } => {
            let n = path.len();
            if n < 2 {
                return reject(format!("hill path has {n} vertices, need at least 2"));
            }
            let mut vs = path.clone();
            vs.extend([apexes.0, apexes.1]);
            exact_pattern(g, &vs, |i, j| match (i, j) {
                (i, j) if i == n && j == n + 1 => Some(*sign),
                (i, j) if j == n => (i < n - 1).then_some(*sign),
                (i, j) if j == n + 1 => (i >= 1).then_some(*sign),
                (i, j) => (j == i + 1).then_some(-*sign),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn m3() -> SignedGraph {
        SignedGraph::from_edges(4, [(0, 1, Minus), (1, 2, Minus), (3, 1, Plus)]).unwrap()
    }

    fn p4alt() -> SignedGraph {
        SignedGraph::from_edges(4, [(0, 1, Plus), (1, 2, Minus), (2, 3, Plus)]).unwrap()
    }

    #[test]
    fn mountain_certificate() {
        let good = Certificate::Mountain {
            sign: Plus,
            path: vec![0, 1, 2],
            apex: 3,
        };
        assert_eq!(verify_certificate(&m3(), &good), Ok(()));
        let flipped = Certificate::Mountain {
            sign: Minus,
            path: vec![0, 1, 2],
            apex: 3,
        };
        assert!(verify_certificate(&m3(), &flipped).is_err());
        let short = Certificate::Mountain {
            sign: Plus,
            path: vec![0, 1],
            apex: 3,
        };
        assert!(verify_certificate(&m3(), &short).is_err());
    }

    #[test]
    fn alt_path_certificate() {
        let c = Certificate::AltPath {
            sign: Plus,
            u: 0,
            v: 1,
            w: 2,
            x: 3,
        };
        assert_eq!(verify_certificate(&p4alt(), &c), Ok(()));
        let mut closed = p4alt();
        closed.add_edge(0, 3, Plus).unwrap();
        closed.add_edge(0, 2, Plus).unwrap();
        assert!(verify_certificate(&closed, &c).is_err());
        let repeated = Certificate::AltPath {
            sign: Plus,
            u: 0,
            v: 1,
            w: 0,
            x: 3,
        };
        assert!(verify_certificate(&p4alt(), &repeated).is_err());
    }

    #[test]
    fn hill_certificate() {
        // hill(+, 2): path 0 -(-)- 1, w1 = 2 over v1, w2 = 3 over v2.
        let g = SignedGraph::from_edges(4, [(0, 1, Minus), (2, 3, Plus), (2, 0, Plus), (3, 1, Plus)]).unwrap();
        let c = Certificate::Hill {
            sign: Plus,
            path: vec![0, 1],
            apexes: (2, 3),
        };
        assert_eq!(verify_certificate(&g, &c), Ok(()));
        let swapped = Certificate::Hill {
            sign: Plus,
            path: vec![0, 1],
            apexes: (3, 2),
        };
        assert!(verify_certificate(&g, &swapped).is_err());
    }

    #[test]
    fn chordless_cycle_certificate() {
        let g = SignedGraph::from_edges(4, [(0, 1, Plus), (1, 2, Plus), (2, 3, Plus), (3, 0, Plus), (0, 2, Minus)])
            .unwrap();
        let c = Certificate::ChordlessCycle {
            sign: Plus,
            cycle: vec![0, 1, 2, 3],
        };
        assert_eq!(verify_certificate(&g, &c), Ok(()));
        let tri = Certificate::ChordlessCycle {
            sign: Plus,
            cycle: vec![0, 1, 2],
        };
        assert!(verify_certificate(&g, &tri).is_err());
        let out_of_range = Certificate::ChordlessCycle {
            sign: Plus,
            cycle: vec![0, 1, 2, 9],
        };
        assert!(verify_certificate(&g, &out_of_range).is_err());
    }

    #[test]
    fn text_forms() {
        let certs = [
            (
                Certificate::ChordlessCycle {
                    sign: Plus,
                    cycle: vec![0, 1, 2, 3],
                },
                "cert chordless-cycle + 0 1 2 3",
            ),
            (
                Certificate::AltPath {
                    sign: Minus,
                    u: 3,
                    v: 2,
                    w: 1,
                    x: 0,
                },
                "cert alt-path - 3 2 1 0",
            ),
            (
                Certificate::Mountain {
                    sign: Plus,
                    path: vec![0, 1, 2],
                    apex: 3,
                },
                "cert mountain + path=0,1,2 apex=3",
            ),
            (
                Certificate::Hill {
                    sign: Minus,
                    path: vec![0, 1],
                    apexes: (2, 3),
                },
                "cert hill - path=0,1 apexes=2,3",
            ),
        ];
        for (cert, text) in certs {
            assert_eq!(cert.to_string(), text);
            assert_eq!(text.parse::<Certificate>().unwrap(), cert);
        }
    }

    #[test]
    fn malformed_lines() {
        for line in [
            "",
            "cert",
            "cert mountain",
            "cert mountain * path=0,1,2 apex=3",
            "cert mountain + path=0,,2 apex=3",
            "cert mountain + apex=3 path=0,1,2",
            "cert hill + path=0,1 apexes=2",
            "cert alt-path + 0 1 2",
            "cert alt-path + 0 1 2 3 4",
            "cert triangle + 0 1 2",
            "cert mountain + path=0,1,2 apex=3 extra",
            "certificate alt-path + 0 1 2 3",
        ] {
            assert!(line.parse::<Certificate>().is_err(), "{line:?}");
        }
    }
}
