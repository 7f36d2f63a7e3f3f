//! Seeded verification suites. Trial `i` draws its instance from
//! `SplitMix64::derive(seed, i)`, trials run in parallel, and reports are
//! assembled in trial order, so a report depends only on suite, trial
//! count and seed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{
    gen_blowup, gen_chordal, gen_circular_arc, gen_class_filtered, gen_connected, gen_hgraph,
    gen_interval, SplitMix64,
};
use crate::graph::{Graph, VertexSet};
use crate::hgraph::{decompose, extract_q, realize, verify_claims, HRepresentation};
use crate::oracle::{Oracle, TransversalCertificate};
use crate::pipelines::{
    bullchair_transversal, chordal_refined_transversal, chordal_refinement, ptfree_refinement,
    ptfree_transversal,
};
use crate::recognizers::{matched_clique_index, patterns};
use crate::refine::{
    minimal_dominating_subset, path_maximal_component, refine_transversal, RefinementInput,
};
use crate::report::sha256_hex;

/// Attempts allowed to each rejection-sampled trial.
pub const FILTER_BUDGET: usize = 20_000;

/// Densities tried before a rejection-sampled trial is skipped.
pub const FILTER_ROUNDS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Refine,
    P5,
    P6,
    BullChair,
    Chordal,
    HGraph,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Refine,
        Suite::P5,
        Suite::P6,
        Suite::BullChair,
        Suite::Chordal,
        Suite::HGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Refine => "refine",
            Suite::P5 => "p5",
            Suite::P6 => "p6",
            Suite::BullChair => "bullchair",
            Suite::Chordal => "chordal",
            Suite::HGraph => "hgraph",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Passed { size: usize, bound: Option<usize> },
    /// The instance source gave up (rejection budget); never a pass.
    Skipped(String),
    Violation(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    /// Instance family or construction branch.
    pub tag: String,
    pub status: Status,
}

impl Trial {
    pub fn line(&self) -> String {
        let status = match &self.status {
            Status::Passed { size, bound } => match bound {
                Some(b) => format!("pass size={size} bound={b}"),
                None => format!("pass size={size}"),
            },
            Status::Skipped(why) => format!("skip {why}"),
            Status::Violation(why) => format!("VIOLATION {why}"),
        };
        format!(
            "trial {} seed={:016x} n={} tag={} {}",
            self.index, self.seed, self.n, self.tag, status
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: Vec<Trial>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.count(|s| matches!(s, Status::Passed { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, Status::Skipped(_)))
    }

    pub fn violations(&self) -> Vec<&Trial> {
        self.trials
            .iter()
            .filter(|t| matches!(t.status, Status::Violation(_)))
            .collect()
    }

    fn count(&self, f: impl Fn(&Status) -> bool) -> usize {
        self.trials.iter().filter(|t| f(&t.status)).count()
    }

    pub fn is_clean(&self) -> bool {
        self.violations().is_empty()
    }

    /// Passing trials per tag.
    pub fn tags(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for t in &self.trials {
            if matches!(t.status, Status::Passed { .. }) {
                *out.entry(t.tag.clone()).or_default() += 1;
            }
        }
        out
    }

    pub fn max_size(&self) -> usize {
        self.trials
            .iter()
            .filter_map(|t| match t.status {
                Status::Passed { size, .. } => Some(size),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Digest of every trial line.
    pub fn digest(&self) -> String {
        let all: String = self.trials.iter().map(|t| t.line() + "\n").collect();
        sha256_hex(all.as_bytes())
    }

    /// Summary lines, then one line per skipped or violating trial.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite: {}\nseed: {}\ntrials: {}\npassed: {}\nskipped: {}\nviolations: {}\nmax_size: {}\n",
            self.suite,
            self.seed,
            self.trials.len(),
            self.passed(),
            self.skipped(),
            self.violations().len(),
            self.max_size()
        );
        for (tag, k) in self.tags() {
            out.push_str(&format!("tag {tag}: {k}\n"));
        }
        out.push_str(&format!("digest: {}\n", self.digest()));
        for t in &self.trials {
            if !matches!(t.status, Status::Passed { .. }) {
                out.push_str(&t.line());
                out.push('\n');
            }
        }
        out
    }
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> SuiteReport {
    let trials = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = SplitMix64::derive(seed, i as u64);
            let (n, tag, status) = run_trial(suite, i, s);
            Trial {
                index: i,
                seed: s,
                n,
                tag,
                status,
            }
        })
        .collect();
    SuiteReport { suite, seed, trials }
}

type Outcome = (usize, String, Status);

fn run_trial(suite: Suite, index: usize, seed: u64) -> Outcome {
    let mut rng = SplitMix64::new(seed);
    match suite {
        Suite::Refine => refine_trial(&mut rng, index),
        Suite::P5 => ptfree_trial(&mut rng, 5, 12),
        Suite::P6 => ptfree_trial(&mut rng, 6, 14),
        Suite::BullChair => bullchair_trial(&mut rng, index),
        Suite::Chordal => chordal_trial(&mut rng, index),
        Suite::HGraph => hgraph_trial(&mut rng, index),
    }
}

/// Checks a certificate independently of how it was produced.
fn judge(g: &Graph, cert: Result<TransversalCertificate>, bound: Option<usize>) -> Status {
    let cert = match cert {
        Ok(c) => c,
        Err(e) => return Status::Violation(e.to_string()),
    };
    match Oracle::default().is_transversal(g, &cert.transversal) {
        Ok(true) => {}
        Ok(false) => return Status::Violation(format!("{} is not a transversal", cert.transversal)),
        Err(e) => return Status::Violation(e.to_string()),
    }
    if !cert.verified {
        return Status::Violation("certificate not marked verified".into());
    }
    let bound = bound.or(cert.bound_claimed);
    if bound.is_some_and(|b| cert.size() > b) {
        return Status::Violation(format!("size {} exceeds bound {:?}", cert.size(), bound));
    }
    Status::Passed {
        size: cert.size(),
        bound,
    }
}

fn skipped(n: usize, tag: &str, e: Error) -> Outcome {
    (n, tag.to_string(), Status::Skipped(e.to_string()))
}

/// Rejection sampling at a random density; an exhausted budget redraws the
/// density, up to [`FILTER_ROUNDS`] times.
fn filtered(rng: &mut SplitMix64, n: usize, forbidden: &[Graph]) -> Result<Graph> {
    let mut last = None;
    for _ in 0..FILTER_ROUNDS {
        let p = 0.45 + 0.45 * rng.unit();
        match gen_class_filtered(rng.next_u64(), n, p, forbidden, FILTER_BUDGET) {
            Ok(f) => return Ok(f.graph),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one round"))
}

fn ptfree_trial(rng: &mut SplitMix64, t: usize, max_n: usize) -> Outcome {
    let n = rng.range(t, max_n);
    let g = match filtered(rng, n, &[patterns::path(t)]) {
        Ok(g) => g,
        Err(e) => return skipped(n, "filtered", e),
    };
    let status = judge(&g, ptfree_transversal(&g, t), Some(t - 2));
    (n, "filtered".into(), status)
}

fn bullchair_trial(rng: &mut SplitMix64, index: usize) -> Outcome {
    let g = match index % 3 {
        0 => {
            let n = rng.range(5, 12);
            match filtered(rng, n, &[patterns::bull(), patterns::chair()]) {
                Ok(g) => g,
                Err(e) => return skipped(n, "filtered", e),
            }
        }
        1 => gen_blowup(rng.next_u64(), &Graph::path(rng.range(6, 9)), 2),
        _ => gen_blowup(rng.next_u64(), &Graph::cycle(rng.range(5, 9)), 2),
    };
    let cert = bullchair_transversal(&g);
    let tag = match &cert {
        Ok(c) => c.method.to_string(),
        Err(_) => "error".to_string(),
    };
    (g.n(), tag, judge(&g, cert, Some(5)))
}

fn chordal_trial(rng: &mut SplitMix64, index: usize) -> Outcome {
    let n = rng.range(1, 14);
    let (g, tag, cap) = if index.is_multiple_of(2) {
        let density = 0.1 + 0.5 * rng.unit();
        (gen_chordal(rng.next_u64(), n, density).graph, "subtree", None)
    } else {
        (gen_interval(rng.next_u64(), n).graph, "interval", Some(2))
    };
    let bound = matched_clique_index(&g) - 1;
    let bound = if g.n() == 1 { 1 } else { bound };
    let status = match judge(&g, chordal_refined_transversal(&g), Some(bound)) {
        Status::Passed { size, .. } if cap.is_some_and(|c| size > c) => {
            Status::Violation(format!("interval certificate of size {size} exceeds 2"))
        }
        s => s,
    };
    (n, tag.into(), status)
}

/// Alternates synthetic hypotheses with the ones the pipelines build.
fn refine_trial(rng: &mut SplitMix64, index: usize) -> Outcome {
    let n = rng.range(4, 12);
    let kind = match index % 4 {
        0 | 1 => "synthetic",
        2 => "pt_free",
        _ => "chordal",
    };
    let g = match kind {
        "synthetic" => {
            let p = 0.15 + 0.5 * rng.unit();
            gen_connected(rng, n, p)
        }
        "pt_free" => {
            let t = if rng.chance(0.5) { 5 } else { 6 };
            match filtered(rng, n, &[patterns::path(t)]) {
                Ok(g) => {
                    return match ptfree_refinement(&g, t) {
                        Ok((_, Some(input))) => (n, kind.into(), judge_refinement(&input)),
                        Ok((_, None)) => synthetic_outcome(rng, &g, "pt_free/synthetic"),
                        Err(e) => (n, kind.into(), Status::Violation(e.to_string())),
                    };
                }
                Err(e) => return skipped(n, kind, e),
            }
        }
        _ => gen_chordal(rng.next_u64(), n, 0.1 + 0.4 * rng.unit()).graph,
    };
    if kind == "chordal" {
        return match chordal_refinement(&g) {
            Ok((_, Some(input))) => (n, kind.into(), judge_refinement(&input)),
            Ok((_, None)) => synthetic_outcome(rng, &g, "chordal/synthetic"),
            Err(e) => (n, kind.into(), Status::Violation(e.to_string())),
        };
    }
    synthetic_outcome(rng, &g, kind)
}

fn synthetic_outcome(rng: &mut SplitMix64, g: &Graph, tag: &str) -> Outcome {
    let status = match synthetic_input(rng, g) {
        Ok(input) => judge_refinement(&input),
        Err(e) => Status::Violation(format!("hypothesis construction failed: {e}")),
    };
    (g.n(), tag.into(), status)
}

fn judge_refinement(input: &RefinementInput<'_>) -> Status {
    let bound = input.d().union(input.s()).len();
    judge(input.graph(), refine_transversal(input), Some(bound))
}

/// Random `(M, D, S)`: `D` a random connected set, `M` between `D` and
/// `N[D]` (grown until it is a transversal), `S` a minimal subset of `M`
/// dominating the boundary of the path-maximal component, plus a random
/// extra member now and then.
pub fn synthetic_input<'g>(rng: &mut SplitMix64, g: &'g Graph) -> Result<RefinementInput<'g>> {
    let family = Oracle::default().analyze(g)?;
    let root = rng.below(g.n());
    let mut d = VertexSet::singleton(root);
    let target = rng.range(1, g.n().div_ceil(3));
    while d.len() < target {
        let frontier = g.open_neighborhood(&d).to_vec();
        d.insert(rng.pick(&frontier));
    }
    let m = loop {
        let nd = g.closed_neighborhood(&d);
        let mut m = d.clone();
        for v in nd.difference(&d).iter() {
            if rng.chance(0.5) {
                m.insert(v);
            }
        }
        if family.is_transversal(&m)? {
            break m;
        }
        if family.is_transversal(&nd)? {
            break nd;
        }
        let frontier = g.open_neighborhood(&d).to_vec();
        d.insert(rng.pick(&frontier));
    };
    let mut s = match path_maximal_component(g, &m)? {
        Some(p) => minimal_dominating_subset(g, &m, &p.boundary)?,
        None => VertexSet::new(),
    };
    if rng.chance(0.3) {
        let pool = m.to_vec();
        s.insert(rng.pick(&pool));
    }
    RefinementInput::new(g, m, d, s)
}

fn hgraph_trial(rng: &mut SplitMix64, index: usize) -> Outcome {
    let paw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("paw");
    let n = rng.range(2, 12);
    let (tag, rep): (&str, HRepresentation) = match index % 5 {
        0 => ("K2", gen_interval(rng.next_u64(), n).rep),
        1 => ("K3", gen_circular_arc(rng.next_u64(), n).rep),
        2 => ("paw", gen_hgraph(rng.next_u64(), &paw, n, 3).rep),
        3 => ("K4", gen_hgraph(rng.next_u64(), &Graph::complete(4), n, 2).rep),
        _ => {
            let k = rng.range(2, 5);
            let host = gen_connected(rng, k, 0.5);
            ("random", gen_hgraph(rng.next_u64(), &host, n, 3).rep)
        }
    };
    (n, tag.into(), judge_extraction(&rep))
}

fn judge_extraction(rep: &HRepresentation) -> Status {
    let td = decompose(rep);
    let g = match realize(rep) {
        Ok(g) => g,
        Err(e) => return Status::Violation(e.to_string()),
    };
    let (cert, trace) = match extract_q(rep, &td) {
        Ok(x) => x,
        Err(e) => return Status::Violation(e.to_string()),
    };
    let claims = verify_claims(&trace, &g);
    if !claims.all_pass() {
        return Status::Violation(format!("failed checks: {}", claims.failures().join(", ")));
    }
    let bound = trace.theorem.map_or(trace.s2.rhs, |c| c.rhs);
    judge(&g, Ok(cert), Some(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("p7".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_are_clean_and_repeatable() {
        for s in Suite::ALL {
            let a = run_suite(s, 6, 11);
            assert!(a.is_clean(), "{}", a.render());
            assert_eq!(a.render(), run_suite(s, 6, 11).render());
        }
    }
}
