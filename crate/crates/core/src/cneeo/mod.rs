//! Cobipartite-neighbourhood edge elimination orderings (CNEEOs).
//!
//! An ordering `e_1, …, e_m` of the edges is a CNEEO when, for every `k`,
//! the common neighbours of `e_k`'s endpoints in the suffix graph
//! `{e_k, …, e_m}` induce a cobipartite subgraph of the whole graph.
//! Given one, a maximum clique is the best `e_k ∪ clique(N_k)` over all
//! positions. Positions are reported 1-based.

mod geometric;
mod greedy;
pub mod neighborhoods;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{GeomObject, Tolerance};
use crate::graphs::{
    build_intersection_graph, is_cobipartite, max_clique_cobipartite, Graph, OddCycleCertificate,
};

pub use geometric::{geometric_cneeo_ordering, EdgeClass};
pub use greedy::{greedy_cneeo, CneeoFailure};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CneeoError {
    #[error("ordering is not a permutation of the edge set")]
    NotAPermutation,
    #[error("common neighbourhood at position {position} is not cobipartite")]
    NotCobipartite {
        position: usize,
        certificate: OddCycleCertificate,
    },
    #[error("expected unit disks and 2-pancakes only, found {0}")]
    NotPi2(&'static str),
}

/// A total order on a graph's edges; each edge is stored as `(u, v)` with
/// `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOrdering {
    edges: Vec<(usize, usize)>,
}

impl EdgeOrdering {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        EdgeOrdering {
            edges: edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect(),
        }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_permutation_of(&self, g: &Graph) -> bool {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted == g.edges()
    }

    /// `N_{Λ,k}` for 1-based `k`, recomputed from scratch.
    pub fn common_neighborhood(&self, g: &Graph, k: usize) -> Vec<usize> {
        let (u, v) = self.edges[k - 1];
        let suffix = Graph::from_edges(g.n(), &self.edges[k - 1..]).expect("edges of g");
        let mut common = suffix.neighbors(u).clone();
        common.intersect_with(suffix.neighbors(v));
        common.ones().collect()
    }

    /// Walks the positions in order, handing each edge and its common
    /// neighbourhood in the current suffix graph to `visit`.
    fn sweep<E>(
        &self,
        g: &Graph,
        mut visit: impl FnMut(usize, (usize, usize), &FixedBitSet) -> Result<(), E>,
    ) -> Result<(), E> {
        let mut alive: Vec<FixedBitSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
        let mut common = FixedBitSet::with_capacity(g.n());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            common.clone_from(&alive[u]);
            common.intersect_with(&alive[v]);
            visit(i + 1, (u, v), &common)?;
            alive[u].set(v, false);
            alive[v].set(u, false);
        }
        Ok(())
    }
}

/// Checks every position; the first violation comes back with a witness.
pub fn is_valid_cneeo(g: &Graph, ordering: &EdgeOrdering) -> Result<(), CneeoError> {
    if !ordering.is_permutation_of(g) {
        return Err(CneeoError::NotAPermutation);
    }
    ordering.sweep(g, |position, _, common| {
        let subset: Vec<usize> = common.ones().collect();
        match is_cobipartite(g, &subset) {
            Ok(_) => Ok(()),
            Err(certificate) => Err(CneeoError::NotCobipartite {
                position,
                certificate,
            }),
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueMethod {
    Geometric,
    Robust,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub method: CliqueMethod,
    /// The 1-based position whose neighbourhood gave the optimum.
    pub ordering_position: Option<usize>,
}

impl CliqueResult {
    fn new(vertices: Vec<usize>, method: CliqueMethod, ordering_position: Option<usize>) -> Self {
        CliqueResult {
            size: vertices.len(),
            vertices,
            method,
            ordering_position,
        }
    }
}

/// Maximum clique from a CNEEO. Every neighbourhood is re-checked for
/// cobipartiteness, so a bad ordering fails loudly instead of silently
/// returning a suboptimal clique.
pub fn clique_from_cneeo(
    g: &Graph,
    ordering: &EdgeOrdering,
    method: CliqueMethod,
) -> Result<CliqueResult, CneeoError> {
    if !ordering.is_permutation_of(g) {
        return Err(CneeoError::NotAPermutation);
    }
    if ordering.is_empty() {
        let vertices = if g.n() > 0 { vec![0] } else { vec![] };
        return Ok(CliqueResult::new(vertices, method, None));
    }
    let mut best: Option<(Vec<usize>, usize)> = None;
    ordering.sweep(g, |position, (u, v), common| {
        let subset: Vec<usize> = common.ones().collect();
        let partition = is_cobipartite(g, &subset).map_err(|certificate| {
            CneeoError::NotCobipartite {
                position,
                certificate,
            }
        })?;
        let incumbent = best.as_ref().map_or(0, |(c, _)| c.len());
        if subset.len() + 2 <= incumbent {
            return Ok(());
        }
        let mut clique = max_clique_cobipartite(g, &partition);
        clique.push(u);
        clique.push(v);
        if clique.len() > incumbent {
            clique.sort_unstable();
            best = Some((clique, position));
        }
        Ok(())
    })?;
    let (vertices, position) = best.expect("at least one edge");
    assert!(g.is_clique(&vertices), "extracted set is not a clique");
    Ok(CliqueResult::new(vertices, method, Some(position)))
}

/// Maximum clique of the intersection graph of unit disks and 2-pancakes
/// using the geometric ordering.
pub fn solve_pi2_geometric(objects: &[GeomObject], tol: Tolerance) -> Result<CliqueResult, CneeoError> {
    let ordering = geometric_cneeo_ordering(objects, tol)?;
    let g = build_intersection_graph(objects, tol);
    clique_from_cneeo(&g, &ordering, CliqueMethod::Geometric)
}

/// Maximum clique from the graph alone, or a certificate that the graph
/// has no CNEEO (and so is not an intersection graph of unit disks and
/// 2-pancakes).
pub fn solve_pi2_robust(g: &Graph) -> Result<CliqueResult, Box<CneeoFailure>> {
    let ordering = greedy_cneeo(g)?;
    Ok(clique_from_cneeo(g, &ordering, CliqueMethod::Robust)
        .expect("greedy orderings are valid by construction"))
}
