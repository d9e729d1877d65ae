use super::{Graph, GraphError};

pub const DEFAULT_ORACLE_CAP: usize = 40;

/// Exact maximum clique by branch and bound; see
/// [`max_clique_bruteforce_capped`].
pub fn max_clique_bruteforce(g: &Graph) -> Result<Vec<usize>, GraphError> {
    max_clique_bruteforce_capped(g, DEFAULT_ORACLE_CAP)
}

/// Exact maximum clique for graphs with at most `cap` (≤ 128) vertices.
///
/// Vertices are branched in ascending order, include before exclude, and
/// only a strictly larger clique replaces the incumbent, so the answer is
/// the lexicographically smallest maximum clique.
pub fn max_clique_bruteforce_capped(g: &Graph, cap: usize) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if n > cap.min(128) {
        return Err(GraphError::OracleCapExceeded { n, cap });
    }
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).ones().fold(0u128, |m, w| m | (1u128 << w)))
        .collect();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = 0u128;
    search(&adj, 0, all, &mut best);
    Ok(bits(best))
}

fn search(adj: &[u128], current: u128, cand: u128, best: &mut u128) {
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + color_bound(adj, cand) <= best.count_ones() {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u128 << v;
    search(adj, current | bit, cand & adj[v], best);
    search(adj, current, cand & !bit, best);
}

/// Number of colours in a greedy colouring of `cand`; bounds its clique.
fn color_bound(adj: &[u128], mut cand: u128) -> u32 {
    let mut colors = 0;
    while cand != 0 {
        colors += 1;
        let mut avail = cand;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            cand &= !(1u128 << v);
            avail &= !(1u128 << v) & !adj[v];
        }
    }
    colors
}

fn bits(mut m: u128) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}
