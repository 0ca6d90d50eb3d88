use super::*;
use crate::error::Error;
use crate::graph::{complete, complete_bipartite, cycle, path, Graph};
use crate::num::{rat, ratio, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_connected(rng: &mut ChaCha8Rng, n: usize, distinct: bool) -> WeightedGraph {
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !pairs.contains(&(u, v)) && rng.gen_bool(0.4) {
                pairs.push((u, v));
            }
        }
    }
    let mut pool: Vec<i64> = (1..=200).collect();
    let edges = pairs
        .into_iter()
        .map(|(u, v)| {
            let w = if distinct {
                pool.remove(rng.gen_range(0..pool.len()))
            } else {
                rng.gen_range(1..=4)
            };
            (u, v, ratio(w, 3))
        })
        .collect();
    WeightedGraph::new(n, edges).unwrap()
}

/// Minimum cost and number of minimum spanning trees over all `(n-1)`-edge subsets.
fn brute_mst(g: &WeightedGraph) -> (Rational, usize) {
    let m = g.graph().edge_count();
    let n = g.n();
    let mut best: Option<(Rational, usize)> = None;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize + 1 != n {
            continue;
        }
        let ids: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if !g.graph().edge_subgraph(&ids).is_connected() {
            continue;
        }
        let cost = g.total(&ids);
        best = match best {
            Some((b, c)) if b == cost => Some((b, c + 1)),
            Some((b, c)) if b < cost => Some((b, c)),
            _ => Some((cost, 1)),
        };
    }
    best.unwrap()
}

#[test]
fn kruskal_matches_exhaustive_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b);
    for i in 0..100 {
        let n = rng.gen_range(1..=7);
        let g = random_connected(&mut rng, n, i % 2 == 0);
        let t = kruskal_mst(&g).unwrap();
        assert!(crate::graph::is_tree(&t.tree));
        let (cost, count) = brute_mst(&g);
        assert_eq!(t.cost, cost);
        if i % 2 == 0 {
            assert_eq!(count, 1);
        }
    }
}

#[test]
fn kruskal_examples() {
    let k4 = WeightedGraph::complete_with(4, |_, _| rat(2));
    let t = kruskal_mst(&k4).unwrap();
    assert_eq!(t.cost, rat(6));
    assert_eq!(brute_mst(&k4), (rat(6), 16));
    let tree = WeightedGraph::new(4, vec![(0, 1, rat(5)), (1, 2, rat(1)), (1, 3, rat(7))]).unwrap();
    assert_eq!(kruskal_mst(&tree).unwrap().tree, tree.graph().clone());
    let split = WeightedGraph::new(4, vec![(0, 1, rat(1)), (2, 3, rat(1))]).unwrap();
    assert_eq!(kruskal_mst(&split), Err(Error::Disconnected));
}

fn random_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<(f64, f64)> {
    (0..n).map(|_| (rng.gen_range(0.0..100.0), rng.gen_range(0.0..100.0))).collect()
}

#[test]
fn euclidean_tour_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x75);
    for _ in 0..40 {
        let n = rng.gen_range(3..=8);
        let g = euclidean_graph(&random_points(&mut rng, n), 1000).unwrap();
        assert!(satisfies_triangle_inequality(&g).unwrap());
        let mst = kruskal_mst(&g).unwrap().cost;
        let opt = brute_force_tour(&g).unwrap();
        let start = rng.gen_range(0..n);
        let short = tsp_tree_shortcut(&g, start).unwrap();
        assert!(mst <= opt.cost && opt.cost <= short.cost && short.cost <= &mst * rat(2));
        let mut seen = short.vertices[..n].to_vec();
        seen.sort_unstable();
        assert_eq!(seen, (0..n).collect::<Vec<_>>());
        assert_eq!((short.vertices[0], short.vertices[n]), (start, start));
    }
}

#[test]
fn triangle_tour_is_optimal() {
    let g = WeightedGraph::complete_with(3, |u, v| rat((u + v) as i64 + 1));
    assert_eq!(tsp_tree_shortcut(&g, 0).unwrap().cost, brute_force_tour(&g).unwrap().cost);
}

fn non_metric() -> WeightedGraph {
    WeightedGraph::complete_with(4, |u, v| match (u, v) {
        (0, 3) => rat(1000),
        (0, 2) | (1, 3) => rat(2),
        _ => rat(1),
    })
}

#[test]
fn non_metric_instance_breaks_the_bound() {
    let g = non_metric();
    assert!(!satisfies_triangle_inequality(&g).unwrap());
    let short = tsp_tree_shortcut(&g, 0).unwrap();
    let opt = brute_force_tour(&g).unwrap();
    assert_eq!(short.vertices, vec![0, 1, 2, 3, 0]);
    assert_eq!((short.cost.clone(), opt.cost.clone()), (rat(1003), rat(6)));
    assert!(short.cost > opt.cost * rat(2));
}

#[test]
fn tour_errors_and_workers() {
    let g = WeightedGraph::new(3, vec![(0, 1, rat(1)), (1, 2, rat(1))]).unwrap();
    assert_eq!(brute_force_tour(&g), Err(Error::NotComplete));
    assert_eq!(tsp_tree_shortcut(&g, 0), Err(Error::NotComplete));
    let big = WeightedGraph::complete_with(11, |_, _| rat(1));
    assert!(matches!(brute_force_tour(&big), Err(Error::TooLarge { .. })));
    let mut rng = ChaCha8Rng::seed_from_u64(0x88);
    for _ in 0..5 {
        let g = euclidean_graph(&random_points(&mut rng, 8), 100).unwrap();
        let one = brute_force_tour(&g).unwrap();
        for w in [2, 3, 7] {
            assert_eq!(brute_force_tour_with_workers(&g, w).unwrap(), one);
        }
    }
}

#[test]
fn weighted_text_format() {
    let g = parse_weighted_graph("3 2\n0 1 3/2\n2 1 -4\n").unwrap();
    assert_eq!(g.weight(1, 2), Some(&rat(-4)));
    assert_eq!(parse_weighted_graph(&g.to_string()).unwrap(), g);
    assert!(matches!(parse_weighted_graph("3 1\n0 1\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_weighted_graph("3 1\n0 1 x\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_weighted_graph("3 2\n0 1 1\n1 0 2\n"), Err(Error::Parse { line: 3, .. })));
}

#[test]
fn path_matchings() {
    let p4 = path(4);
    let greedy = greedy_matching_in_order(&p4, &[(1, 2), (0, 1), (2, 3)]).unwrap();
    assert_eq!(greedy.len(), 1);
    assert!(greedy.is_maximal_in(&p4));
    assert_eq!(maximum_matching_bipartite(&p4).unwrap().len(), 2);
    assert_eq!(greedy_maximal_matching(&p4).len(), 2);
    assert_eq!(maximum_matching_bipartite(&complete_bipartite(20, 21)).unwrap().len(), 20);
    assert_eq!(maximum_matching_bipartite(&complete(5)), Err(Error::NotBipartite));
    assert_eq!(greedy_maximal_matching(&complete(5)).len(), 2);
}

/// `B_{4,4}` with left A..D = 0..3, right 1..4 = 4..7, minus the edge {4, A}.
fn worked_example() -> Graph {
    let edges: Vec<(usize, usize)> = (0..4).flat_map(|l| (4..8).map(move |r| (l, r))).filter(|&e| e != (0, 7)).collect();
    Graph::simple(8, &edges).unwrap()
}

#[test]
fn worked_augmenting_path() {
    let g = worked_example();
    let (a, b, c, d) = (0, 1, 2, 3);
    let (one, two, three, four) = (4, 5, 6, 7);
    let m = Matching::new(&g, [(one, b), (two, c), (three, d)]).unwrap();
    assert!(m.is_maximal_in(&g));
    let path = [a, one, b, two, c, three, d, four];
    let bigger = augment(&g, &m, &path).unwrap();
    assert_eq!(bigger, Matching::new(&g, [(a, one), (b, two), (c, three), (d, four)]).unwrap());
    let found = find_augmenting_path(&g, &m).unwrap().unwrap();
    assert_eq!(found.len() % 2, 0);
    assert_eq!(augment(&g, &m, &found).unwrap().len(), 4);
    assert!(matches!(augment(&g, &m, &[a, one]), Err(Error::InvalidPath(_))));
    assert!(matches!(augment(&g, &m, &[a, two, d, four]), Err(Error::InvalidPath(_))));
    assert!(matches!(augment(&g, &bigger, &path), Err(Error::InvalidPath(_))));
}

fn brute_max_matching(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
    let Some((&(u, v), rest)) = edges.split_first() else { return 0 };
    let skip = brute_max_matching(rest, used);
    if used[u] || used[v] {
        return skip;
    }
    used[u] = true;
    used[v] = true;
    let take = 1 + brute_max_matching(rest, used);
    used[u] = false;
    used[v] = false;
    skip.max(take)
}

#[test]
fn augmenting_maximum_matches_brute_force() {
    let host = complete_bipartite(3, 4);
    let m = host.edge_count();
    for mask in 0u32..(1 << m) {
        let ids: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let g = host.edge_subgraph(&ids);
        let best = maximum_matching_bipartite(&g).unwrap();
        assert_eq!(best.len(), brute_max_matching(g.edges(), &mut vec![false; g.n()]));
        assert!(find_augmenting_path(&g, &best).unwrap().is_none());
    }
}

#[test]
fn augment_grows_by_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa6);
    for _ in 0..100 {
        let (l, r) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let edges: Vec<(usize, usize)> =
            (0..l).flat_map(|u| (l..l + r).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
        let g = Graph::simple(l + r, &edges).unwrap();
        let mut m = greedy_maximal_matching(&g);
        while let Some(p) = find_augmenting_path(&g, &m).unwrap() {
            let next = augment(&g, &m, &p).unwrap();
            assert_eq!(next.len(), m.len() + 1);
            assert!(Matching::new(&g, next.edges().iter().copied()).is_ok());
            m = next;
        }
        assert_eq!(m.len(), maximum_matching_bipartite(&g).unwrap().len());
    }
}

/// Students a..d are 0..3; dorms AV, B, C, P are 4..7.
fn dorms(prefs: &[&[usize]]) -> Graph {
    let edges: Vec<(usize, usize)> =
        prefs.iter().enumerate().flat_map(|(s, ds)| ds.iter().map(move |&d| (s, 4 + d))).collect();
    Graph::simple(8, &edges).unwrap()
}

#[test]
fn dorm_examples() {
    let (av, b, c, p) = (0, 1, 2, 3);
    let first = dorms(&[&[p], &[b], &[av, b, c], &[b, p]]);
    assert_eq!(hall_violator(&first, &[0, 1, 2, 3]).unwrap(), Some(vec![0, 1, 3]));
    let second = dorms(&[&[av, p], &[b, c], &[av, c], &[b, p]]);
    assert_eq!(hall_violator(&second, &[0, 1, 2, 3]).unwrap(), None);
    assert_eq!(maximum_matching_bipartite(&second).unwrap().len(), 4);
    assert!(hall_violator(&complete(3), &[0, 1]).is_err());
    let wide = complete_bipartite(21, 1);
    assert!(matches!(hall_violator(&wide, &(0..21).collect::<Vec<_>>()), Err(Error::TooLarge { .. })));
}

#[test]
fn hall_agrees_with_matching() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a11);
    for _ in 0..300 {
        let (l, r) = (rng.gen_range(1..=6), rng.gen_range(1..=7));
        let edges: Vec<(usize, usize)> =
            (0..l).flat_map(|u| (l..l + r).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.35)).collect();
        let g = Graph::simple(l + r, &edges).unwrap();
        let left: Vec<usize> = (0..l).collect();
        let violator = hall_violator(&g, &left).unwrap();
        let size = maximum_matching_bipartite(&g).unwrap().len();
        assert_eq!(violator.is_none(), size == l);
        if let Some(x) = violator {
            let mut hood: Vec<usize> = x.iter().flat_map(|&v| g.neighbors()[v].clone()).collect();
            hood.sort_unstable();
            hood.dedup();
            assert!(hood.len() < x.len());
        }
    }
    // regular bipartite graphs: cycles C_{2k} and K_{k,k}
    for k in 2..=6 {
        let g = cycle(2 * k).unwrap();
        let evens: Vec<usize> = (0..2 * k).step_by(2).collect();
        assert_eq!(hall_violator(&g, &evens).unwrap(), None);
        assert_eq!(hall_violator(&complete_bipartite(k, k), &(0..k).collect::<Vec<_>>()).unwrap(), None);
    }
}

#[test]
fn ramsey_values() {
    assert_eq!(ramsey_number(3, 3, 7, 1).unwrap(), 6);
    for k in 2..=5 {
        assert_eq!(ramsey_number(2, k, k, 1).unwrap(), k);
        assert_eq!(ramsey_number(k, 2, k, 2).unwrap(), k);
    }
    assert_eq!(ramsey_number(3, 3, 5, 1), Err(Error::CapExceeded(5)));
    assert!(matches!(ramsey_holds(8, 3, 3), Err(Error::TooLarge { .. })));
    let w = pentagon_coloring();
    assert!(mono_clique(&w, 3, 0).is_none() && mono_clique(&w, 3, 1).is_none());
    assert_eq!(mono_clique(&w, 2, 0), Some(vec![0, 1]));
    assert!(!ramsey_holds(5, 3, 3).unwrap());
    let found = ramsey_counterexample(5, 3, 3, 1).unwrap().unwrap();
    assert!(mono_clique(&found, 3, 0).is_none() && mono_clique(&found, 3, 1).is_none());
    assert_eq!(ramsey_counterexample(5, 3, 3, 4).unwrap().unwrap(), found);
    assert!(ramsey_holds_with_workers(6, 3, 3, 3).unwrap());
}

#[test]
fn six_vertex_colorings_have_triangles() {
    // every coloring of K_6 found by sampling has a monochromatic triangle
    let mut rng = ChaCha8Rng::seed_from_u64(0x66);
    for _ in 0..200 {
        let c = EdgeColoring2::from_fn(6, |_, _| rng.gen_range(0..2)).unwrap();
        assert!(mono_clique(&c, 3, 0).is_some() || mono_clique(&c, 3, 1).is_some());
    }
    assert!(EdgeColoring2::new(3, vec![0, 1]).is_err());
    assert!(EdgeColoring2::new(2, vec![2]).is_err());
}
