use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::Graph;

/// Two cliques covering the queried vertex subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobipartitePartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl CobipartitePartition {
    pub fn validate(&self, g: &Graph) -> bool {
        g.is_clique(&self.part1) && g.is_clique(&self.part2)
    }
}

/// An odd cycle in the complement: consecutive vertices (cyclically) are
/// non-adjacent in the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycleCertificate {
    pub cycle: Vec<usize>,
}

impl OddCycleCertificate {
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 3 || k.is_multiple_of(2) || self.cycle.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(g.n());
        for &v in &self.cycle {
            if seen.put(v) {
                return false;
            }
        }
        (0..k).all(|i| !g.has_edge(self.cycle[i], self.cycle[(i + 1) % k]))
    }
}

/// 2-colours the complement of `g[subset]` by breadth-first search.
///
/// Returns the colour classes (each a clique of `g`) or an odd cycle of
/// non-edges built from the two tree paths to the lowest common ancestor.
pub fn is_cobipartite(
    g: &Graph,
    subset: &[usize],
) -> Result<CobipartitePartition, OddCycleCertificate> {
    let n = g.n();
    let mut unvisited = g.vertex_set(subset);
    let mut class = [
        FixedBitSet::with_capacity(n),
        FixedBitSet::with_capacity(n),
    ];
    let mut color = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    let mut order: Vec<usize> = subset.to_vec();
    order.sort_unstable();

    for &root in &order {
        if !unvisited.contains(root) {
            continue;
        }
        unvisited.set(root, false);
        class[0].insert(root);
        color[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let c = color[v] as usize;
            let mut clash = class[c].clone();
            clash.difference_with(g.neighbors(v));
            clash.set(v, false);
            if let Some(w) = clash.ones().next() {
                return Err(odd_cycle(v, w, &parent, &depth));
            }
            let mut fresh = unvisited.clone();
            fresh.difference_with(g.neighbors(v));
            for w in fresh.ones() {
                unvisited.set(w, false);
                color[w] = 1 - color[v];
                class[1 - c].insert(w);
                parent[w] = v;
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(CobipartitePartition {
        part1: class[0].ones().collect(),
        part2: class[1].ones().collect(),
    })
}

fn odd_cycle(v: usize, w: usize, parent: &[usize], depth: &[usize]) -> OddCycleCertificate {
    let (mut a, mut b) = (v, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // up_a and up_b both end at the common ancestor
    up_b.pop();
    up_b.reverse();
    up_a.extend(up_b);
    OddCycleCertificate { cycle: up_a }
}
