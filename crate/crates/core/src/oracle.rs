//! Ground truth by exhaustion, the standard fixture families, and the
//! cross-check harness that runs every decision procedure over every
//! labelled signed graph of a given size.
//!
//! Fixture layout is fixed: path vertices `v1..vn` are `0..n`, then the
//! apex `w` (mountains) or apexes `w1, w2` (hills) as `n` and `n + 1`.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::verify_certificate;
use crate::characterize::{characterize, chordless_cycle, check_c2, find_hill, find_mountain, SearchLimit, Status};
use crate::enumerate::{graph_at, signed_graph_count};
use crate::error::Error;
use crate::format::serialize_sg;
use crate::graph::{Sign, SignedGraph, VertexId};
use crate::invariant::invariance_check;
use crate::seo::{greedy_seo, is_seo, VertexOrder};
use crate::special::{alternating_path_property, remark_equivalence_check, SpecialChecker};

/// Largest graph [`brute_force_se`] accepts (`8! = 40320` orderings).
pub const ORACLE_CAP: usize = 8;

/// The first SEO in lexicographic order of the vertex sequence, found by
/// trying every permutation. Uses nothing but [`is_seo`].
pub fn brute_force_se(g: &SignedGraph) -> Result<Option<VertexOrder>, Error> {
    let n = g.vertex_count();
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force oracle",
            n,
            cap: ORACLE_CAP,
        });
    }
    for perm in (0..n).permutations(n) {
        let order = VertexOrder::from_sequence(perm)?;
        if is_seo(g, &order)?.is_none() {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

/// The four-vertex graph with `0 ~+ 1 ~+ 3` and `2 ~- 3`.
pub fn worked_example() -> SignedGraph {
    SignedGraph::from_edges(4, [(0, 1, Sign::Plus), (1, 3, Sign::Plus), (2, 3, Sign::Minus)])
        .expect("valid fixture")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Mountain,
    Hill,
    CappedMountain,
    CappedHill,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Mountain, Family::Hill, Family::CappedMountain, Family::CappedHill];

    pub fn name(self) -> &'static str {
        match self {
            Family::Mountain => "mountain",
            Family::Hill => "hill",
            Family::CappedMountain => "capped_mountain",
            Family::CappedHill => "capped_hill",
        }
    }

    /// Smallest allowed path length.
    pub fn min_path_len(self) -> usize {
        match self {
            Family::Mountain | Family::CappedMountain => 3,
            Family::Hill | Family::CappedHill => 2,
        }
    }

    /// Apex count (1 for mountains, 2 for hills).
    pub fn apexes(self) -> usize {
        match self {
            Family::Mountain | Family::CappedMountain => 1,
            Family::Hill | Family::CappedHill => 2,
        }
    }

    /// The SEO known for the capped families: apexes first, then the path.
    pub fn known_seo(self, n: usize) -> Option<VertexOrder> {
        let sequence: Vec<VertexId> = match self {
            Family::CappedMountain => std::iter::once(n).chain(0..n).collect(),
            Family::CappedHill => [n, n + 1].into_iter().chain(0..n).collect(),
            Family::Mountain | Family::Hill => return None,
        };
        VertexOrder::from_sequence(sequence).ok()
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Builds a mountain, hill, or capped variant with path length `n`.
pub fn build_family(kind: Family, sign: Sign, n: usize) -> Result<SignedGraph, Error> {
    if n < kind.min_path_len() {
        return Err(Error::FamilyTooSmall {
            kind: kind.name(),
            n,
            min: kind.min_path_len(),
        });
    }
    let mut g = SignedGraph::new(n + kind.apexes())?;
    for i in 0..n - 1 {
        g.add_edge(i, i + 1, -sign)?;
    }
    match kind {
        Family::Mountain | Family::CappedMountain => {
            let w = n;
            for i in 1..n - 1 {
                g.add_edge(w, i, sign)?;
            }
            if kind == Family::CappedMountain {
                g.add_edge(w, n - 1, sign)?;
            }
        }
        Family::Hill | Family::CappedHill => {
            let (w1, w2) = (n, n + 1);
            g.add_edge(w1, w2, sign)?;
            for i in 0..n - 1 {
                g.add_edge(w1, i, sign)?;
            }
            for i in 1..n {
                g.add_edge(w2, i, sign)?;
            }
            if kind == Family::CappedHill {
                g.add_edge(w1, n - 1, sign)?;
            }
        }
    }
    Ok(g)
}

/// One decision procedure or property run by [`cross_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Checker {
    /// Greedy elimination; its ordering must also pass the SEO test.
    Greedy,
    /// Full condition check with certificate or ordering.
    Characterize,
    /// Exhaustive permutation search.
    Oracle,
    /// Every applicable restricted-class checker.
    Special,
    /// All SEOs give one degree profile (SE graphs only).
    Invariance,
    /// C1 + C3 + all 4-vertex subgraphs SE agrees with the verdict.
    Remark,
    /// SE graphs close every alternating 4-path.
    AltPathLemma,
    /// Every certificate produced by any finder verifies.
    Certificates,
}

impl Checker {
    pub const ALL: [Checker; 8] = [
        Checker::Greedy,
        Checker::Characterize,
        Checker::Oracle,
        Checker::Special,
        Checker::Invariance,
        Checker::Remark,
        Checker::AltPathLemma,
        Checker::Certificates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Checker::Greedy => "greedy",
            Checker::Characterize => "characterize",
            Checker::Oracle => "oracle",
            Checker::Special => "special",
            Checker::Invariance => "invariance",
            Checker::Remark => "remark",
            Checker::AltPathLemma => "alt-path-lemma",
            Checker::Certificates => "certificates",
        }
    }
}

/// Largest `n` the harness runs without `allow_long_run`.
pub const DEFAULT_CROSSCHECK_CAP: usize = 5;
/// Largest `n` the harness runs at all.
pub const LONG_RUN_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckConfig {
    pub n: usize,
    pub checkers: Vec<Checker>,
    pub workers: usize,
    /// Required for `n = 6` (about 14.3 million instances).
    pub allow_long_run: bool,
}

impl CrossCheckConfig {
    /// Everything for `n <= 5`; greedy against characterize only above that.
    pub fn new(n: usize) -> Self {
        let checkers = if n <= DEFAULT_CROSSCHECK_CAP {
            Checker::ALL.to_vec()
        } else {
            vec![Checker::Greedy, Checker::Characterize]
        };
        CrossCheckConfig {
            n,
            checkers,
            workers: 1,
            allow_long_run: false,
        }
    }

    pub fn with_oracle(mut self) -> Self {
        if !self.checkers.contains(&Checker::Oracle) {
            self.checkers.push(Checker::Oracle);
            self.checkers.sort_unstable();
        }
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn long_run(mut self, allow: bool) -> Self {
        self.allow_long_run = allow;
        self
    }
}

/// One instance on which the checkers disagreed or a property failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: u64,
    /// Full `.sg` text, replayable as a regression test.
    pub graph: String,
    /// `(checker, verdict)` pairs in checker order.
    pub verdicts: Vec<(String, String)>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mismatch index={}", self.index)?;
        for (name, verdict) in &self.verdicts {
            write!(f, " {name}={verdict}")?;
        }
        write!(f, " sg=\"{}\"", self.graph.replace('\n', "\\n"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub n: usize,
    pub instances: u64,
    pub mismatches: Vec<Mismatch>,
    pub checkers_run: Vec<Checker>,
    /// Instances that greedy elimination (or, without it, characterize)
    /// called signed-eliminable.
    pub eliminable: u64,
    /// Certificates produced and re-verified.
    pub certificates_checked: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CrossCheckReport {
    pub fn header(&self) -> String {
        format!(
            "crosscheck n={} instances={} mismatches={}",
            self.n,
            self.instances,
            self.mismatches.len()
        )
    }

    /// Header line, then one line per mismatch. No timing, so identical
    /// inputs give identical text.
    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for m in &self.mismatches {
            out.push_str(&m.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    eliminable: u64,
    certificates: u64,
    mismatches: Vec<Mismatch>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.eliminable += other.eliminable;
        self.certificates += other.certificates;
        self.mismatches.extend(other.mismatches);
        self
    }
}

fn yn(b: bool) -> String {
    if b { "y" } else { "n" }.to_string()
}

struct InstanceOutcome {
    eliminable: bool,
    certificates: u64,
    verdicts: Vec<(String, String)>,
    consistent: bool,
}

/// Runs the selected checkers on one graph.
fn check_instance(g: &SignedGraph, checkers: &[Checker]) -> InstanceOutcome {
    let mut verdicts = Vec::new();
    let mut decisions: Vec<bool> = Vec::new();
    let mut properties_hold = true;
    let mut certificates = 0u64;
    let limit = SearchLimit::unlimited();

    let mut greedy_se = None;
    let mut characterize_se = None;

    for &checker in checkers {
        match checker {
            Checker::Greedy => {
                let verdict = match greedy_seo(g) {
                    Ok(order) => {
                        let sound = matches!(is_seo(g, &order), Ok(None));
                        properties_hold &= sound;
                        greedy_se = Some(true);
                        decisions.push(true);
                        if sound { "y" } else { "unsound" }.to_string()
                    }
                    Err(_) => {
                        greedy_se = Some(false);
                        decisions.push(false);
                        "n".to_string()
                    }
                };
                verdicts.push((checker.name().to_string(), verdict));
            }
            Checker::Characterize => {
                let verdict = match characterize(g, limit) {
                    Ok(v) => {
                        let se = v.is_eliminable();
                        if let Status::Eliminable { order } = &v.status {
                            properties_hold &= matches!(is_seo(g, order), Ok(None));
                        }
                        characterize_se = Some(se);
                        decisions.push(se);
                        yn(se)
                    }
                    Err(e) => {
                        properties_hold = false;
                        format!("error({e})").replace(char::is_whitespace, "_")
                    }
                };
                verdicts.push((checker.name().to_string(), verdict));
            }
            Checker::Oracle => {
                let verdict = match brute_force_se(g) {
                    Ok(found) => {
                        decisions.push(found.is_some());
                        yn(found.is_some())
                    }
                    Err(_) => {
                        properties_hold = false;
                        "error".to_string()
                    }
                };
                verdicts.push((checker.name().to_string(), verdict));
            }
            Checker::Special => {
                for special in SpecialChecker::ALL {
                    match special.run(g) {
                        Ok(v) => {
                            if let Some(se) = v.decision() {
                                decisions.push(se);
                                verdicts.push((special.name().to_string(), yn(se)));
                            }
                        }
                        Err(_) => {
                            properties_hold = false;
                            verdicts.push((special.name().to_string(), "error".to_string()));
                        }
                    }
                }
            }
            _ => {}
        }
    }

    let eliminable = greedy_se
        .or(characterize_se)
        .unwrap_or_else(|| greedy_seo(g).is_ok());

    for &checker in checkers {
        let outcome = match checker {
            Checker::Invariance if eliminable => Some(matches!(invariance_check(g), Ok(true))),
            Checker::AltPathLemma if eliminable => Some(alternating_path_property(g)),
            Checker::Remark => Some(matches!(remark_equivalence_check(g), Ok(true))),
            Checker::Certificates => {
                let mut emitted = Vec::new();
                emitted.extend(Sign::BOTH.into_iter().filter_map(|s| chordless_cycle(g, s)));
                emitted.extend(check_c2(g));
                let mut ok = true;
                match (find_mountain(g, limit), find_hill(g, limit)) {
                    (Ok(m), Ok(h)) => emitted.extend(m.into_iter().chain(h)),
                    _ => ok = false,
                }
                if let Ok(v) = characterize(g, limit) {
                    emitted.extend(v.certificate().cloned());
                }
                certificates += emitted.len() as u64;
                ok &= emitted.iter().all(|c| verify_certificate(g, c).is_ok());
                Some(ok)
            }
            _ => None,
        };
        if let Some(ok) = outcome {
            properties_hold &= ok;
            verdicts.push((checker.name().to_string(), if ok { "pass" } else { "fail" }.to_string()));
        }
    }

    let agree = decisions.windows(2).all(|w| w[0] == w[1]);
    InstanceOutcome {
        eliminable,
        certificates,
        verdicts,
        consistent: agree && properties_hold,
    }
}

/// Runs `config.checkers` over every labelled signed graph on `config.n`
/// vertices. Mismatches are reported in enumeration order whatever the
/// worker count.
pub fn cross_check(config: &CrossCheckConfig) -> Result<CrossCheckReport, Error> {
    let n = config.n;
    let cap = if config.allow_long_run {
        LONG_RUN_CAP
    } else {
        DEFAULT_CROSSCHECK_CAP
    };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "cross-check",
            n,
            cap,
        });
    }
    let count = signed_graph_count(n).expect("n <= 6");
    let mut checkers = config.checkers.clone();
    checkers.sort_unstable();
    checkers.dedup();

    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    let tally = pool.install(|| {
        (0..count)
            .into_par_iter()
            .fold(Tally::default, |mut acc, index| {
                let g = graph_at(n, index);
                let outcome = check_instance(&g, &checkers);
                acc.instances += 1;
                acc.eliminable += u64::from(outcome.eliminable);
                acc.certificates += outcome.certificates;
                if !outcome.consistent {
                    acc.mismatches.push(Mismatch {
                        index,
                        graph: serialize_sg(&g),
                        verdicts: outcome.verdicts,
                    });
                }
                acc
            })
            .reduce(Tally::default, Tally::merge)
    });
    let mut mismatches = tally.mismatches;
    mismatches.sort_by_key(|m| m.index);

    Ok(CrossCheckReport {
        n,
        instances: tally.instances,
        mismatches,
        checkers_run: checkers,
        eliminable: tally.eliminable,
        certificates_checked: tally.certificates,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seo::signed_simplicial_set;
    use Sign::{Minus, Plus};

    #[test]
    fn oracle_examples() {
        let m3 = build_family(Family::Mountain, Plus, 3).unwrap();
        assert_eq!(brute_force_se(&m3).unwrap(), None);
        let cm3 = build_family(Family::CappedMountain, Plus, 3).unwrap();
        assert!(brute_force_se(&cm3).unwrap().is_some());
        let single = SignedGraph::new(1).unwrap();
        assert_eq!(brute_force_se(&single).unwrap(), Some(VertexOrder::identity(1)));
        assert!(brute_force_se(&SignedGraph::new(9).unwrap()).is_err());
    }

    #[test]
    fn oracle_returns_lexicographically_first() {
        // 0 ~+ 1 ~+ 2 path: 0 1 2 is already an SEO.
        let g = SignedGraph::from_edges(3, [(0, 1, Plus), (1, 2, Plus)]).unwrap();
        assert_eq!(brute_force_se(&g).unwrap(), Some(VertexOrder::identity(3)));
        // Identity puts 2 last after its two non-adjacent neighbours.
        let star = SignedGraph::from_edges(3, [(2, 0, Plus), (2, 1, Plus)]).unwrap();
        assert_eq!(
            brute_force_se(&star).unwrap().unwrap().sequence(),
            &[0, 2, 1]
        );
    }

    #[test]
    fn family_layouts() {
        let m3 = build_family(Family::Mountain, Plus, 3).unwrap();
        assert_eq!(
            m3,
            SignedGraph::from_edges(4, [(0, 1, Minus), (1, 2, Minus), (3, 1, Plus)]).unwrap()
        );
        let h2 = build_family(Family::Hill, Plus, 2).unwrap();
        assert_eq!(
            h2,
            SignedGraph::from_edges(4, [(0, 1, Minus), (2, 3, Plus), (2, 0, Plus), (3, 1, Plus)]).unwrap()
        );
        let mut cm3 = m3.clone();
        cm3.add_edge(3, 2, Plus).unwrap();
        assert_eq!(build_family(Family::CappedMountain, Plus, 3).unwrap(), cm3);
        assert!(build_family(Family::Mountain, Plus, 2).is_err());
        assert!(build_family(Family::Hill, Minus, 1).is_err());
    }

    #[test]
    fn forbidden_families_have_no_signed_simplicial_vertex() {
        for s in Sign::BOTH {
            for n in 3..=6 {
                assert!(signed_simplicial_set(&build_family(Family::Mountain, s, n).unwrap()).is_empty());
            }
            for n in 2..=6 {
                assert!(signed_simplicial_set(&build_family(Family::Hill, s, n).unwrap()).is_empty());
            }
        }
    }

    #[test]
    fn known_orders_of_capped_families() {
        for s in Sign::BOTH {
            let g = build_family(Family::CappedHill, s, 4).unwrap();
            let o = Family::CappedHill.known_seo(4).unwrap();
            assert_eq!(o.sequence(), &[4, 5, 0, 1, 2, 3]);
            assert_eq!(is_seo(&g, &o).unwrap(), None);
        }
        assert_eq!(Family::Mountain.known_seo(3), None);
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("valley".parse::<Family>().is_err());
    }

    #[test]
    fn small_cross_checks() {
        let r = cross_check(&CrossCheckConfig::new(3)).unwrap();
        assert_eq!(r.instances, 27);
        assert!(r.mismatches.is_empty());
        assert_eq!(r.eliminable, 27);
        assert_eq!(r.to_text(), "crosscheck n=3 instances=27 mismatches=0\n");
    }

    #[test]
    fn cross_check_caps() {
        assert!(cross_check(&CrossCheckConfig::new(6)).is_err());
        assert!(cross_check(&CrossCheckConfig::new(7).long_run(true)).is_err());
    }

    #[test]
    fn mismatch_line_embeds_graph() {
        let m = Mismatch {
            index: 5,
            graph: "sgraph 2\ne 0 1 +\n".to_string(),
            verdicts: vec![("greedy".into(), "y".into()), ("oracle".into(), "n".into())],
        };
        assert_eq!(
            m.to_string(),
            "mismatch index=5 greedy=y oracle=n sg=\"sgraph 2\\ne 0 1 +\\n\""
        );
    }
}
