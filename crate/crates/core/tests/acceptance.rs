//! Acceptance run: one PASS or FAIL line per criterion.
//!
//! Built without the libtest harness so the lines always print; any FAIL
//! makes the process exit nonzero.

mod common;

use std::time::{Duration, Instant};

use lpt::commands::{self, Class, GenKind, GenParams};
use lpt::generators::{fixture_walther_zamfirescu, gen_chordal, SplitMix64};
use lpt::oracle::{enumerate_longest_paths, exact_lpt, is_transversal};
use lpt::pipelines::chordal_refinement;
use lpt::refine::minimal_dominating_subset;
use lpt::suites::{run_suite, Suite, SuiteReport};
use lpt::{Graph, VertexSet};

use common::{closed_nbhd, connected_corpus, naive_dominates, naive_longest_paths};

const SEED: u64 = 2024;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.2}s]", o.detail, took.as_secs_f64());
    if let Some(limit) = limit {
        if took > limit {
            o.pass = false;
            o.detail = format!("{} exceeds {}s", o.detail, limit.as_secs());
        }
    }
    o
}

fn fixture_facts() -> Outcome {
    let g = fixture_walther_zamfirescu();
    let (size, witness) = exact_lpt(&g).expect("fixture within oracle limits");
    let singles: Vec<usize> = (0..g.n())
        .filter(|&v| is_transversal(&g, &VertexSet::singleton(v)).unwrap())
        .collect();
    outcome(
        size == 2 && singles.is_empty() && is_transversal(&g, &witness).unwrap(),
        format!("lpt={size} witness={witness} singleton_transversals={singles:?}"),
    )
}

fn cross_validation(corpus: &[Graph]) -> Outcome {
    let mut bad = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let report = enumerate_longest_paths(g).unwrap();
        let ours: Vec<Vec<usize>> = report.paths.iter().map(|p| p.vertices().to_vec()).collect();
        let (len, theirs) = naive_longest_paths(g);
        if report.length != len || ours != theirs {
            bad.push(i);
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} graphs, disagreements at {bad:?}", corpus.len()),
    )
}

fn gallai_pairwise(corpus: &[Graph]) -> Outcome {
    let mut paths_seen = 0usize;
    let mut bad = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let paths = enumerate_longest_paths(g).unwrap().paths;
        paths_seen += paths.len();
        // disjointness depends only on vertex sets
        let mut sets: Vec<u64> = paths.iter().map(|p| p.vertex_set().to_mask()).collect();
        sets.sort_unstable();
        sets.dedup();
        let disjoint = sets
            .iter()
            .enumerate()
            .any(|(a, x)| sets[a + 1..].iter().any(|y| x & y == 0));
        if disjoint {
            bad.push(i);
        }
    }
    outcome(
        bad.is_empty(),
        format!("{paths_seen} longest paths, disjoint pairs in graphs {bad:?}"),
    )
}

fn suite_line(r: &SuiteReport) -> String {
    let tags: Vec<String> = r.tags().iter().map(|(t, k)| format!("{t}={k}")).collect();
    format!(
        "{} trials, passed={} skipped={} violations={} max_size={} tags[{}]",
        r.trials.len(),
        r.passed(),
        r.skipped(),
        r.violations().len(),
        r.max_size(),
        tags.join(" ")
    )
}

fn all_passed(r: &SuiteReport) -> bool {
    r.is_clean() && r.passed() == r.trials.len()
}

fn bullchair_ok(r: &SuiteReport) -> Outcome {
    let tags = r.tags();
    let branches = ["bull_chair/a", "bull_chair/b1", "bull_chair/b2"];
    let missing: Vec<&str> = branches
        .iter()
        .copied()
        .filter(|b| !tags.contains_key(*b))
        .collect();
    let b2_skip_signalled = missing == ["bull_chair/b2"] && r.skipped() > 0;
    let pass = r.is_clean() && r.max_size() <= 5 && (missing.is_empty() || b2_skip_signalled);
    outcome(pass, format!("{} missing_branches={missing:?}", suite_line(r)))
}

fn minimality() -> Outcome {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for (i, g) in connected_corpus(SEED ^ 0x9, 300, 12).iter().enumerate() {
        let mut rng = SplitMix64::new(SplitMix64::derive(SEED ^ 0xa, i as u64));
        let target: Vec<usize> = (0..g.n()).filter(|_| rng.chance(0.6)).collect();
        let mut pool: Vec<usize> = (0..g.n()).filter(|_| rng.chance(0.5)).collect();
        while !naive_dominates(g, &pool, &target) {
            let missing = target
                .iter()
                .find(|&&t| !closed_nbhd(g, t).iter().any(|x| pool.contains(x)))
                .unwrap();
            pool.push(*missing);
        }
        let d = minimal_dominating_subset(g, &pool.as_slice().into(), &target.as_slice().into())
            .unwrap()
            .to_vec();
        checked += 1;
        let redundant = d.iter().any(|&v| {
            let rest: Vec<usize> = d.iter().copied().filter(|&x| x != v).collect();
            naive_dominates(g, &rest, &target)
        });
        if !naive_dominates(g, &d, &target) || redundant || !d.iter().all(|v| pool.contains(v)) {
            bad.push(format!("random#{i}"));
        }
    }
    let mut members = 0usize;
    for i in 0..300u64 {
        let mut rng = SplitMix64::new(SplitMix64::derive(SEED ^ 0xc, i));
        let n = rng.range(2, 14);
        let density = 0.1 + 0.5 * rng.unit();
        let g = gen_chordal(rng.next_u64(), n, density).graph;
        let Ok((_, Some(input))) = chordal_refinement(&g) else {
            continue;
        };
        let boundary = input.path_maximal().expect("profile").boundary.to_vec();
        let d = input.d().to_vec();
        checked += 1;
        for &member in &d {
            members += 1;
            let private = boundary.iter().any(|&t| {
                let doms: Vec<usize> = closed_nbhd(&g, t).into_iter().filter(|x| d.contains(x)).collect();
                doms == [member]
            });
            if !private {
                bad.push(format!("chordal#{i}:{member}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} subsets, {members} clique members, violations {bad:?}"),
    )
}

fn reports_once(seed: u64) -> Vec<String> {
    let mut out = Vec::new();
    for kind in [GenKind::Chordal, GenKind::Interval, GenKind::CircularArc] {
        let params = GenParams {
            seed,
            n: 11,
            ..GenParams::default()
        };
        let generated = commands::generate(kind, &params).unwrap();
        out.push(generated.edge_list.clone());
        out.push(commands::oracle_report(&generated.edge_list).unwrap().to_json());
        if kind != GenKind::CircularArc {
            let r = commands::pipeline_report(Class::Chordal, &generated.edge_list).unwrap();
            out.push(r.to_json());
        }
        let (r, _) = commands::hgraph_report(generated.rep_json.as_deref().unwrap(), None).unwrap();
        out.push(r.to_json());
    }
    let params = GenParams {
        seed,
        n: 9,
        forbid: vec!["P5".into()],
        ..GenParams::default()
    };
    let filtered = commands::generate(GenKind::Filtered, &params).unwrap().edge_list;
    for class in [Class::P5Free, Class::P6Free, Class::BullChair] {
        if let Ok(r) = commands::pipeline_report(class, &filtered) {
            out.push(r.to_text());
        }
    }
    out
}

fn determinism(first: &[(Suite, usize, String)]) -> Outcome {
    let mut differing = Vec::new();
    for (suite, trials, rendered) in first {
        if run_suite(*suite, *trials, SEED).render() != *rendered {
            differing.push(suite.name().to_string());
        }
    }
    let mut reports = 0;
    for seed in 0..5 {
        let a = reports_once(seed);
        reports += a.len();
        if a != reports_once(seed) {
            differing.push(format!("reports@{seed}"));
        }
    }
    outcome(
        differing.is_empty(),
        format!(
            "{} suites and {reports} reports rerun, differing {differing:?}",
            first.len()
        ),
    )
}

fn main() {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let corpus = connected_corpus(SEED, 500, 10);

    results.push((
        "fixture facts",
        timed(Some(Duration::from_secs(10)), fixture_facts),
    ));
    results.push((
        "oracle cross-validation",
        timed(Some(Duration::from_secs(120)), || cross_validation(&corpus)),
    ));
    results.push(("pairwise intersection", timed(None, || gallai_pairwise(&corpus))));

    let mut rendered = Vec::new();
    let mut suite = |s: Suite, trials: usize| {
        let r = run_suite(s, trials, SEED);
        rendered.push((s, trials, r.render()));
        r
    };

    results.push((
        "refinement suite",
        timed(Some(Duration::from_secs(300)), || {
            let r = suite(Suite::Refine, 1000);
            outcome(all_passed(&r), suite_line(&r))
        }),
    ));
    results.push((
        "p5/p6-free bounds",
        timed(None, || {
            let p5 = suite(Suite::P5, 300);
            let p6 = suite(Suite::P6, 300);
            outcome(
                all_passed(&p5) && all_passed(&p6) && p5.max_size() <= 3 && p6.max_size() <= 4,
                format!("p5: {} | p6: {}", suite_line(&p5), suite_line(&p6)),
            )
        }),
    ));
    results.push((
        "bull/chair bound",
        timed(None, || bullchair_ok(&suite(Suite::BullChair, 300))),
    ));
    results.push((
        "chordal bound",
        timed(None, || {
            let r = suite(Suite::Chordal, 500);
            let interval = r.tags().get("interval").copied().unwrap_or(0);
            outcome(all_passed(&r) && interval > 0, suite_line(&r))
        }),
    ));
    results.push((
        "h-graph extraction",
        timed(Some(Duration::from_secs(600)), || {
            let r = suite(Suite::HGraph, 300);
            outcome(all_passed(&r), suite_line(&r))
        }),
    ));

    results.push(("minimality", timed(None, minimality)));
    results.push(("determinism", timed(None, || determinism(&rendered))));

    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name}: {}", i + 1, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
