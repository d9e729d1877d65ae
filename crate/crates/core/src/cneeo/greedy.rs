use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::EdgeOrdering;
use crate::graphs::{is_cobipartite, Graph, OddCycleCertificate};

/// The greedy construction got stuck: no remaining edge has a cobipartite
/// common neighbourhood, so the graph admits no CNEEO.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CneeoFailure {
    pub chosen: Vec<(usize, usize)>,
    pub remaining: Vec<(usize, usize)>,
    pub witness_edge: (usize, usize),
    /// Odd cycle in the complement of the witness edge's neighbourhood.
    pub certificate: OddCycleCertificate,
}

impl CneeoFailure {
    /// Re-checks the stored witness and, on demand, that every other
    /// remaining edge is blocked too.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(rest) = Graph::from_edges(g.n(), &self.remaining) else {
            return false;
        };
        let common = |(u, v): (usize, usize)| {
            let mut s = rest.neighbors(u).clone();
            s.intersect_with(rest.neighbors(v));
            s.ones().collect::<Vec<_>>()
        };
        let witness = common(self.witness_edge);
        self.remaining.contains(&self.witness_edge)
            && self.certificate.validate(g)
            && self.certificate.cycle.iter().all(|v| witness.contains(v))
            && self
                .remaining
                .iter()
                .all(|&e| is_cobipartite(g, &common(e)).is_err())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Unknown,
    Blocked,
    Qualified,
}

/// Repeatedly eliminates the lexicographically first remaining edge whose
/// common neighbourhood (in the remaining graph) is cobipartite in `g`.
///
/// A qualified edge stays qualified, since neighbourhoods only shrink and
/// cobipartiteness is hereditary. A blocked edge can only change after an
/// edge at one of its endpoints is removed, so statuses are cached and
/// invalidated locally.
pub fn greedy_cneeo(g: &Graph) -> Result<EdgeOrdering, Box<CneeoFailure>> {
    let edges = g.edges();
    let m = edges.len();
    let mut alive: Vec<FixedBitSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    let mut removed = vec![false; m];
    let mut status = vec![Status::Unknown; m];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut chosen = Vec::with_capacity(m);
    let mut common = FixedBitSet::with_capacity(g.n());

    while chosen.len() < m {
        let mut pick = None;
        for i in 0..m {
            if removed[i] {
                continue;
            }
            if status[i] == Status::Unknown {
                let (u, v) = edges[i];
                common.clone_from(&alive[u]);
                common.intersect_with(&alive[v]);
                let subset: Vec<usize> = common.ones().collect();
                status[i] = if is_cobipartite(g, &subset).is_ok() {
                    Status::Qualified
                } else {
                    Status::Blocked
                };
            }
            if status[i] == Status::Qualified {
                pick = Some(i);
                break;
            }
        }
        let Some(i) = pick else {
            return Err(Box::new(failure(g, &edges, &removed, chosen, &alive)));
        };
        let (u, v) = edges[i];
        removed[i] = true;
        chosen.push((u, v));
        alive[u].set(v, false);
        alive[v].set(u, false);
        for &j in incident[u].iter().chain(&incident[v]) {
            if status[j] == Status::Blocked {
                status[j] = Status::Unknown;
            }
        }
    }
    Ok(EdgeOrdering::new(chosen))
}

fn failure(
    g: &Graph,
    edges: &[(usize, usize)],
    removed: &[bool],
    chosen: Vec<(usize, usize)>,
    alive: &[FixedBitSet],
) -> CneeoFailure {
    let remaining: Vec<(usize, usize)> = edges
        .iter()
        .zip(removed)
        .filter(|(_, &r)| !r)
        .map(|(&e, _)| e)
        .collect();
    let witness_edge = remaining[0];
    let (u, v) = witness_edge;
    let mut common = alive[u].clone();
    common.intersect_with(&alive[v]);
    let subset: Vec<usize> = common.ones().collect();
    let certificate = is_cobipartite(g, &subset).expect_err("witness edge is blocked");
    CneeoFailure {
        chosen,
        remaining,
        witness_edge,
        certificate,
    }
}
