use super::*;
use crate::geometry::{Pancake2, UnitDisk};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub(crate) fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete multipartite graph with `parts` parts of `size` vertices.
fn complete_multipartite(parts: usize, size: usize) -> Graph {
    let n = parts * size;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if u / size != v / size {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Exhaustive: some split of the vertices into two cliques.
fn cobipartite_by_search(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        g.is_clique(&a) && g.is_clique(&b)
    })
}

/// Exhaustive maximum clique size over all vertex subsets.
fn clique_number_by_search(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&mask| {
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            g.is_clique(&s)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn construction_rejects_bad_edges() {
    assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
    assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::OutOfRange(2, 2)));
    let g = Graph::from_edges(3, &[(2, 0), (0, 2), (1, 2)]).unwrap();
    assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
    assert_eq!(g.edge_count(), 2);
}

#[test]
fn intersection_graph_examples() {
    let tol = Default::default();
    assert_eq!(build_intersection_graph(&[], tol).n(), 0);
    let one = build_intersection_graph(&[UnitDisk::new(0.0, 0.0).into()], tol);
    assert_eq!((one.n(), one.edge_count()), (1, 0));

    let objects: Vec<GeomObject> = vec![
        UnitDisk::new(0.0, 0.0).into(),
        UnitDisk::new(1.6, 0.0).into(),
        UnitDisk::new(0.8, 1.38).into(),
        UnitDisk::new(0.8, -1.38).into(),
        Pancake2::new(-2.0, 3.6).unwrap().into(),
    ];
    let g = build_intersection_graph(&objects, tol);
    for d in 0..4 {
        assert!(g.has_edge(4, d));
    }
    assert!(!g.has_edge(2, 3));
    assert_eq!(g.edge_count(), 9);
}

#[test]
fn intersection_graph_is_order_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let objects: Vec<GeomObject> = (0..30)
        .map(|i| {
            if i % 3 == 0 {
                let x = rng.gen_range(-8.0..8.0);
                Pancake2::new(x, x + rng.gen_range(0.0..3.0)).unwrap().into()
            } else {
                UnitDisk::new(rng.gen_range(-8.0..8.0), rng.gen_range(-4.0..4.0)).into()
            }
        })
        .collect();
    let g = build_intersection_graph(&objects, Default::default());
    let mut perm: Vec<usize> = (0..objects.len()).collect();
    perm.reverse();
    perm.swap(0, 7);
    let shuffled: Vec<GeomObject> = perm.iter().map(|&i| objects[i].clone()).collect();
    let h = build_intersection_graph(&shuffled, Default::default());
    for a in 0..perm.len() {
        for b in 0..perm.len() {
            if a != b {
                assert_eq!(h.has_edge(a, b), g.has_edge(perm[a], perm[b]));
            }
        }
    }
}

#[test]
fn cobipartite_examples() {
    let k4 = complete(4);
    let part = is_cobipartite(&k4, &[0, 1, 2, 3]).unwrap();
    assert!(part.validate(&k4));
    let c5 = cycle(5);
    let cert = is_cobipartite(&c5, &[0, 1, 2, 3, 4]).unwrap_err();
    assert!(cert.validate(&c5));
    assert_eq!(cert.cycle.len(), 5);
    let e3 = Graph::empty(3);
    let cert = is_cobipartite(&e3, &[0, 1, 2]).unwrap_err();
    assert_eq!(cert.cycle.len(), 3);
    assert!(cert.validate(&e3));
    // a subset may be cobipartite when the whole graph is not
    assert!(is_cobipartite(&c5, &[0, 1, 2, 3]).is_ok());
    assert!(is_cobipartite(&c5, &[]).is_ok());
}

#[test]
fn cobipartite_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100_000 {
        let n = rng.gen_range(0..=7);
        let p = rng.gen_range(0.3..1.0);
        let g = random_graph(&mut rng, n, p);
        let all: Vec<usize> = (0..n).collect();
        match is_cobipartite(&g, &all) {
            Ok(part) => {
                assert!(part.validate(&g));
                let mut cover = part.part1.clone();
                cover.extend(&part.part2);
                cover.sort_unstable();
                assert_eq!(cover, all);
            }
            Err(cert) => {
                assert!(cert.validate(&g), "{cert:?}");
                assert!(!cobipartite_by_search(&g));
            }
        }
        if is_cobipartite(&g, &all).is_ok() {
            assert!(cobipartite_by_search(&g));
        }
    }
}

#[test]
fn mis_examples() {
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(bipartite_mis(&path, &[0, 2], &[1]).unwrap(), vec![0, 2]);
    let mut k33 = Graph::empty(6);
    for u in 0..3 {
        for v in 3..6 {
            k33.add_edge(u, v).unwrap();
        }
    }
    assert_eq!(bipartite_mis(&k33, &[0, 1, 2], &[3, 4, 5]).unwrap().len(), 3);
    let pm = Graph::from_edges(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
    let mis = bipartite_mis(&pm, &[0, 1, 2, 3], &[4, 5, 6, 7]).unwrap();
    assert_eq!(mis.len(), 4);
    assert!(pm.is_independent(&mis));
    assert_eq!(
        bipartite_mis(&path, &[0, 1], &[2]),
        Err(GraphError::ImproperColoring(0, 1))
    );
}

/// Matching size by trying every subset of edges (small graphs only).
fn matching_number_by_search(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let mut used = 0u32;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

#[test]
fn mis_satisfies_koenig() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2000 {
        let l = rng.gen_range(0..5);
        let r = rng.gen_range(0..5);
        let mut g = Graph::empty(l + r);
        for u in 0..l {
            for v in l..l + r {
                if rng.gen_bool(0.4) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let left: Vec<usize> = (0..l).collect();
        let right: Vec<usize> = (l..l + r).collect();
        let mis = bipartite_mis(&g, &left, &right).unwrap();
        assert!(g.is_independent(&mis));
        assert_eq!(mis.len(), l + r - matching_number_by_search(&g));
        let mate = maximum_matching(&g, &left, &right);
        assert_eq!(mate.iter().flatten().count(), matching_number_by_search(&g));
    }
}

#[test]
fn cobipartite_clique_examples() {
    let k4 = complete(4);
    let part = is_cobipartite(&k4, &[0, 1, 2, 3]).unwrap();
    assert_eq!(max_clique_cobipartite(&k4, &part).len(), 4);
    let single = Graph::from_edges(3, &[(0, 2)]).unwrap();
    let part = is_cobipartite(&single, &[0, 1, 2]).unwrap();
    assert_eq!(max_clique_cobipartite(&single, &part), vec![0, 2]);
    let mut two_k3 = Graph::empty(6);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
        two_k3.add_edge(u, v).unwrap();
    }
    let part = is_cobipartite(&two_k3, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(max_clique_cobipartite(&two_k3, &part).len(), 3);
}

#[test]
fn cobipartite_clique_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 10_000 {
        // two random cliques joined by random cross edges
        let n = rng.gen_range(1..=14);
        let split = rng.gen_range(0..=n);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if (u < split) == (v < split) || rng.gen_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let all: Vec<usize> = (0..n).collect();
        let part = is_cobipartite(&g, &all).unwrap();
        let clique = max_clique_cobipartite(&g, &part);
        assert!(g.is_clique(&clique));
        assert_eq!(clique.len(), max_clique_bruteforce(&g).unwrap().len());
        checked += 1;
    }
}

#[test]
fn oracle_examples() {
    assert_eq!(max_clique_bruteforce(&cycle(5)).unwrap(), vec![0, 1]);
    assert_eq!(max_clique_bruteforce(&complete(5)).unwrap().len(), 5);
    assert_eq!(max_clique_bruteforce(&petersen()).unwrap().len(), 2);
    // one vertex per part
    assert_eq!(max_clique_bruteforce(&complete_multipartite(4, 3)).unwrap(), vec![0, 3, 6, 9]);
    assert_eq!(max_clique_bruteforce(&Graph::empty(0)).unwrap(), Vec::<usize>::new());
    assert_eq!(max_clique_bruteforce(&Graph::empty(3)).unwrap(), vec![0]);
    assert_eq!(
        max_clique_bruteforce(&Graph::empty(41)),
        Err(GraphError::OracleCapExceeded { n: 41, cap: 40 })
    );
}

#[test]
fn oracle_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..400 {
        let n = rng.gen_range(0..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let c = max_clique_bruteforce(&g).unwrap();
        assert!(g.is_clique(&c));
        assert_eq!(c.len(), clique_number_by_search(&g));
    }
}

#[test]
fn oracle_prefers_lexicographically_smallest() {
    // two triangles {1,2,3} and {0,4,5}: {0,4,5} is lexicographically first
    let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
    assert_eq!(max_clique_bruteforce(&g).unwrap(), vec![0, 4, 5]);
}

#[test]
fn oracle_handles_dense_forty() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let g = random_graph(&mut rng, 40, 0.7);
    let c = max_clique_bruteforce(&g).unwrap();
    assert!(g.is_clique(&c));
}

proptest! {
    #[test]
    fn certificates_always_validate(n in 0usize..12, seed in any::<u64>(), p in 0.2..0.95f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let subset: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.8)).collect();
        match is_cobipartite(&g, &subset) {
            Ok(part) => prop_assert!(part.validate(&g)),
            Err(cert) => {
                prop_assert!(cert.validate(&g));
                prop_assert!(cert.cycle.iter().all(|v| subset.contains(v)));
            }
        }
    }
}
