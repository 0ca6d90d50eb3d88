//! Shared inputs for the benchmarks.

use combkit::graph::Graph;
use combkit::graphopt::{euclidean_graph, WeightedGraph};

/// `n` points on a fixed pseudo-random scatter, as a complete Euclidean graph.
pub fn scatter(n: usize) -> WeightedGraph {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 10_000) as f64 / 100.0
    };
    let points: Vec<(f64, f64)> = (0..n).map(|_| (next(), next())).collect();
    euclidean_graph(&points, 10).expect("points are finite")
}

/// A wheel: hub 0 joined to the cycle 1..n.
pub fn wheel(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    edges.extend((1..n).map(|v| (v, if v + 1 < n { v + 1 } else { 1 })));
    Graph::simple(n, &edges).expect("wheel is simple")
}
