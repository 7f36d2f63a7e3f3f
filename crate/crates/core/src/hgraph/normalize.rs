use super::{realize, HRepresentation};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One vertex of the subdivision: which represented vertices cover it and
/// its id in the input, for messages.
#[derive(Clone)]
struct Cell {
    cover: VertexSet,
    origin: usize,
}

/// Turns a representation into a nice one with the same intersection graph.
///
/// Uncovered internal subdivision vertices are contracted away. An edge of
/// the subdivision that no single segment covers is contracted when at
/// least one end is internal and every pair of segments meeting the two
/// ends already intersects elsewhere, so no new adjacency appears. An
/// uncovered host vertex, or an uncovered edge that cannot be contracted
/// that way, is rejected.
pub fn normalize_nice(rep: &HRepresentation) -> Result<HRepresentation> {
    let g = realize(rep)?;
    if rep.is_nice() {
        return Ok(rep.clone());
    }
    let cell = |x: usize| Cell {
        cover: rep.cover(x),
        origin: x,
    };
    let mut hosts: Vec<Cell> = (0..rep.host().n()).map(cell).collect();
    if let Some(a) = hosts.iter().find(|c| c.cover.is_empty()) {
        return Err(Error::Representation(format!(
            "host vertex {} is uncovered",
            rep.label(a.origin)
        )));
    }
    let mut interiors: Vec<Vec<Cell>> = rep
        .edge_paths()
        .iter()
        .map(|p| p[1..p.len() - 1].iter().map(|&x| cell(x)).collect())
        .collect();
    for cells in &mut interiors {
        cells.retain(|c| !c.cover.is_empty());
    }
    for (i, &(a, b)) in rep.host_edges().iter().enumerate() {
        contract_edge(&g, rep, &mut hosts, a, b, &mut interiors[i])?;
    }
    let lengths = interiors.iter().map(|c| c.len() + 1).collect();
    let mut phi = vec![VertexSet::new(); rep.order()];
    let mut place = |id: usize, cover: &VertexSet| {
        for v in cover.iter() {
            phi[v].insert(id);
        }
    };
    for (a, c) in hosts.iter().enumerate() {
        place(a, &c.cover);
    }
    let mut next = hosts.len();
    for cells in &interiors {
        for c in cells {
            place(next, &c.cover);
            next += 1;
        }
    }
    let out = HRepresentation::new(rep.host().clone(), lengths, phi)?;
    debug_assert!(out.is_nice());
    debug_assert_eq!(realize(&out)?, g);
    Ok(out)
}

/// Contracts uncovered edges along the path `a, cells…, b` until every
/// consecutive pair shares a segment.
fn contract_edge(
    g: &Graph,
    rep: &HRepresentation,
    hosts: &mut [Cell],
    a: usize,
    b: usize,
    cells: &mut Vec<Cell>,
) -> Result<()> {
    let mut k = 0;
    // Positions 0..=cells.len()+1 along the path; 0 is `a`, the last is `b`.
    while k <= cells.len() {
        let last = cells.len() + 1;
        let get = |hosts: &[Cell], cells: &[Cell], p: usize| -> Cell {
            match p {
                0 => hosts[a].clone(),
                p if p == last => hosts[b].clone(),
                p => cells[p - 1].clone(),
            }
        };
        let x = get(hosts, cells, k);
        let y = get(hosts, cells, k + 1);
        if x.cover.intersects(&y.cover) {
            k += 1;
            continue;
        }
        let edge = format!("{}~{}", rep.label(x.origin), rep.label(y.origin));
        if cells.is_empty() {
            return Err(Error::Representation(format!(
                "edge {edge} is uncovered and joins two host vertices"
            )));
        }
        let creates_edge = x
            .cover
            .iter()
            .any(|u| y.cover.iter().any(|w| !g.has_edge(u, w)));
        if creates_edge {
            return Err(Error::Representation(format!(
                "edge {edge} is uncovered and contracting it adds adjacencies"
            )));
        }
        let merged = x.cover.union(&y.cover);
        // Keep the host end when there is one; otherwise keep `x`.
        if k + 1 == last {
            hosts[b].cover = merged;
            cells.remove(k - 1);
            k -= 1;
        } else if k == 0 {
            hosts[a].cover = merged;
            cells.remove(0);
        } else {
            cells[k - 1].cover = merged;
            cells.remove(k);
            k -= 1;
        }
    }
    Ok(())
}
