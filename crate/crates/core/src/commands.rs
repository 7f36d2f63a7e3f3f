//! The operations behind the command-line tool, as plain functions from
//! input text to reports.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::{
    fixture_walther_zamfirescu, gen_chordal, gen_circular_arc, gen_class_filtered, gen_interval,
    WALTHER_ZAMFIRESCU_EL,
};
use crate::graph::{parse_edge_list, write_edge_list, Graph};
use crate::hgraph::{decompose, extract_q, realize, verify_claims, HRepresentation, TreeDecomposition};
use crate::oracle::{Method, Oracle, TransversalCertificate};
use crate::pipelines::{bullchair_transversal, chordal_refined_transversal, ptfree_transversal};
use crate::recognizers::{matched_clique_index, patterns};
use crate::report::Report;

/// Process exit status for an error: 2 class membership, 3 oracle size,
/// 4 a violated guarantee (a bug), 1 anything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInClass { .. } | Error::Disconnected => 2,
        Error::SizeLimit { .. } | Error::PathCapExceeded { .. } => 3,
        Error::InternalContradiction(_) | Error::Hypothesis(_) => 4,
        _ => 1,
    }
}

pub fn oracle_report(input: &str) -> Result<Report> {
    let g = parse_edge_list(input)?;
    let oracle = Oracle::default();
    let family = oracle.analyze(&g)?;
    let mut r = Report::new("oracle", input.as_bytes());
    r.push("n", g.n());
    r.push("m", g.edge_count());
    r.push("longest_path_length", family.length);
    r.push("longest_path_vertex_sets", family.vertex_set_masks().len());
    if g.n() <= oracle.limits.enumeration {
        match oracle.enumerate_longest_paths(&g) {
            Ok(report) => r.push("longest_paths", report.paths.len()),
            Err(Error::PathCapExceeded { cap }) => r.push("longest_paths", format!("more than {cap}")),
            Err(e) => return Err(e),
        };
    }
    let (size, witness) = oracle.exact_lpt(&g)?;
    r.push("lpt", size);
    r.certificate(&TransversalCertificate {
        transversal: witness,
        bound_claimed: None,
        method: Method::Exact,
        verified: true,
    });
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    P5Free,
    P6Free,
    BullChair,
    Chordal,
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "p5free" => Ok(Class::P5Free),
            "p6free" => Ok(Class::P6Free),
            "bullchair" => Ok(Class::BullChair),
            "chordal" => Ok(Class::Chordal),
            _ => Err(format!("unknown class {s:?}")),
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::P5Free => "p5free",
            Class::P6Free => "p6free",
            Class::BullChair => "bullchair",
            Class::Chordal => "chordal",
        })
    }
}

pub fn pipeline_certificate(class: Class, g: &Graph) -> Result<TransversalCertificate> {
    match class {
        Class::P5Free => ptfree_transversal(g, 5),
        Class::P6Free => ptfree_transversal(g, 6),
        Class::BullChair => bullchair_transversal(g),
        Class::Chordal => chordal_refined_transversal(g),
    }
}

pub fn pipeline_report(class: Class, input: &str) -> Result<Report> {
    let g = parse_edge_list(input)?;
    let cert = pipeline_certificate(class, &g)?;
    let mut r = Report::new("pipeline", input.as_bytes());
    r.push("class", class.to_string());
    r.push("n", g.n());
    r.push("m", g.edge_count());
    if class == Class::Chordal {
        r.push("matched_clique_index", matched_clique_index(&g));
    }
    r.certificate(&cert);
    Ok(r)
}

/// Extraction report; the flag is false when any claim check failed.
pub fn hgraph_report(rep_json: &str, td_text: Option<&str>) -> Result<(Report, bool)> {
    let rep = HRepresentation::from_json(rep_json)?;
    let td = match td_text {
        Some(text) => TreeDecomposition::from_pace(text)?,
        None => decompose(&rep),
    };
    let g = realize(&rep)?;
    let (cert, trace) = extract_q(&rep, &td)?;
    let claims = verify_claims(&trace, &g);
    let mut input = rep_json.as_bytes().to_vec();
    if let Some(text) = td_text {
        input.extend_from_slice(text.as_bytes());
    }
    let mut r = Report::new("hgraph extract", &input);
    r.push("n", g.n());
    r.push("host_vertices", rep.host().n());
    r.push("host_edges", trace.host_edges);
    r.push("subdivision_vertices", rep.h_phi().n());
    r.push("width", trace.width);
    r.push("host_treewidth", trace.host_treewidth);
    r.push("helly_node", trace.helly_node);
    let bag: Vec<String> = trace.x_bag.iter().map(|x| rep.label(x)).collect();
    r.push("bag", bag);
    r.push("s", trace.s.to_vec());
    r.push("intermediate_vertices", trace.intermediate.graph.n());
    r.push("intermediate_edges", trace.intermediate.graph.edge_count());
    r.push("selections", trace.selections.len());
    r.push("s1", format!("{} <= {}", trace.s1.lhs, trace.s1.rhs));
    r.push("s2", format!("{} <= {}", trace.s2.lhs, trace.s2.rhs));
    r.push(
        "theorem",
        trace
            .theorem
            .map_or("not checked".to_string(), |c| format!("{} <= {}", c.lhs, c.rhs)),
    );
    for note in &trace.notes {
        r.push("note", note.clone());
    }
    r.certificate(&cert);
    let ok = claims.all_pass();
    r.push("claims", if ok { "pass".to_string() } else { claims.failures().join(" ") });
    Ok((r, ok))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Chordal,
    Interval,
    CircularArc,
    Filtered,
    Fixture,
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "chordal" => Ok(GenKind::Chordal),
            "interval" => Ok(GenKind::Interval),
            "circular-arc" => Ok(GenKind::CircularArc),
            "filtered" => Ok(GenKind::Filtered),
            "fixture" => Ok(GenKind::Fixture),
            _ => Err(format!("unknown generator {s:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenParams {
    pub seed: u64,
    pub n: usize,
    pub density: f64,
    pub p: f64,
    /// Pattern names: `P<k>`, `C<k>`, `K<k>`, `claw`, `bull`, `chair`.
    pub forbid: Vec<String>,
    pub budget: usize,
    pub fixture: Option<String>,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            seed: 0,
            n: 10,
            density: 0.3,
            p: 0.5,
            forbid: Vec::new(),
            budget: 10_000,
            fixture: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub edge_list: String,
    pub rep_json: Option<String>,
}

pub fn pattern_by_name(name: &str) -> Result<Graph> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("unknown pattern {name:?}"),
    };
    let size = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
    match name {
        "claw" => Ok(patterns::claw()),
        "bull" => Ok(patterns::bull()),
        "chair" => Ok(patterns::chair()),
        _ if !name.is_ascii() || name.len() < 2 => Err(bad()),
        _ => match name.split_at(1) {
            ("P", k) => Ok(patterns::path(size(k)?)),
            ("C", k) if size(k)? >= 3 => Ok(patterns::cycle(size(k)?)),
            ("K", k) => Ok(patterns::complete(size(k)?)),
            _ => Err(bad()),
        },
    }
}

pub fn generate(kind: GenKind, params: &GenParams) -> Result<Generated> {
    let with_rep = |graph: &Graph, rep: &HRepresentation| Generated {
        edge_list: write_edge_list(graph),
        rep_json: Some(rep.to_json()),
    };
    match kind {
        GenKind::Chordal => {
            let inst = gen_chordal(params.seed, params.n, params.density);
            Ok(with_rep(&inst.graph, &inst.rep))
        }
        GenKind::Interval => {
            let inst = gen_interval(params.seed, params.n);
            Ok(with_rep(&inst.graph, &inst.rep))
        }
        GenKind::CircularArc => {
            let inst = gen_circular_arc(params.seed, params.n);
            Ok(with_rep(&inst.graph, &inst.rep))
        }
        GenKind::Filtered => {
            let forbidden = params
                .forbid
                .iter()
                .map(|s| pattern_by_name(s))
                .collect::<Result<Vec<_>>>()?;
            let f = gen_class_filtered(params.seed, params.n, params.p, &forbidden, params.budget)?;
            Ok(Generated {
                edge_list: write_edge_list(&f.graph),
                rep_json: None,
            })
        }
        GenKind::Fixture => match params.fixture.as_deref().unwrap_or("walther-zamfirescu") {
            "walther-zamfirescu" => {
                debug_assert_eq!(fixture_walther_zamfirescu().n(), 12);
                Ok(Generated {
                    edge_list: WALTHER_ZAMFIRESCU_EL.to_string(),
                    rep_json: None,
                })
            }
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown fixture {other:?}"),
            }),
        },
    }
}
