use super::{Adjacency, CobipartitePartition, Graph, GraphError};

/// Maximum matching between `left` and `right` by augmenting paths,
/// trying left vertices and their right neighbours in slice order.
/// Returns `mate_of_left[i]` as an index into `right`.
pub fn maximum_matching<A: Adjacency>(g: &A, left: &[usize], right: &[usize]) -> Vec<Option<usize>> {
    let mut mate_l: Vec<Option<usize>> = vec![None; left.len()];
    let mut mate_r: Vec<Option<usize>> = vec![None; right.len()];
    // adjacency lists once, so augmenting does not re-query the graph
    let lists: Vec<Vec<usize>> = left
        .iter()
        .map(|&u| (0..right.len()).filter(|&j| g.adjacent(u, right[j])).collect())
        .collect();
    let mut seen = vec![0usize; right.len()];
    for i in 0..left.len() {
        augment(i, i + 1, &lists, &mut mate_l, &mut mate_r, &mut seen);
    }
    mate_l
}

fn augment(
    i: usize,
    stamp: usize,
    lists: &[Vec<usize>],
    mate_l: &mut [Option<usize>],
    mate_r: &mut [Option<usize>],
    seen: &mut [usize],
) -> bool {
    for &j in &lists[i] {
        if seen[j] == stamp {
            continue;
        }
        seen[j] = stamp;
        let free = match mate_r[j] {
            None => true,
            Some(k) => augment(k, stamp, lists, mate_l, mate_r, seen),
        };
        if free {
            mate_l[i] = Some(j);
            mate_r[j] = Some(i);
            return true;
        }
    }
    false
}

/// Maximum independent set of the bipartite graph with sides `left` and
/// `right`, via König: with `Z` the vertices reachable from unmatched left
/// vertices along alternating paths, the set is `(left ∩ Z) ∪ (right ∖ Z)`.
pub fn bipartite_mis<A: Adjacency>(
    g: &A,
    left: &[usize],
    right: &[usize],
) -> Result<Vec<usize>, GraphError> {
    for side in [left, right] {
        for (i, &u) in side.iter().enumerate() {
            if let Some(&v) = side[i + 1..].iter().find(|&&v| g.adjacent(u, v)) {
                return Err(GraphError::ImproperColoring(u, v));
            }
        }
    }
    let mate_l = maximum_matching(g, left, right);
    let mut mate_r: Vec<Option<usize>> = vec![None; right.len()];
    for (i, m) in mate_l.iter().enumerate() {
        if let Some(j) = *m {
            mate_r[j] = Some(i);
        }
    }
    let mut z_left = vec![false; left.len()];
    let mut z_right = vec![false; right.len()];
    let mut stack: Vec<usize> = (0..left.len()).filter(|&i| mate_l[i].is_none()).collect();
    for &i in &stack {
        z_left[i] = true;
    }
    while let Some(i) = stack.pop() {
        for j in 0..right.len() {
            if z_right[j] || !g.adjacent(left[i], right[j]) {
                continue;
            }
            z_right[j] = true;
            if let Some(k) = mate_r[j] {
                if !z_left[k] {
                    z_left[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    let mut out: Vec<usize> = (0..left.len())
        .filter(|&i| z_left[i])
        .map(|i| left[i])
        .chain((0..right.len()).filter(|&j| !z_right[j]).map(|j| right[j]))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Maximum clique of a cobipartite induced subgraph: a maximum independent
/// set of the bipartite complement.
pub fn max_clique_cobipartite(g: &Graph, partition: &CobipartitePartition) -> Vec<usize> {
    let clique = bipartite_mis(&g.complement(), &partition.part1, &partition.part2)
        .expect("partition parts must be cliques");
    assert!(g.is_clique(&clique), "matching produced a non-clique");
    clique
}
