use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::num::Rational;

use super::WeightedGraph;

/// Union-find with path halving and union by size.
struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub tree: Graph,
    /// Ids of the chosen edges in the host graph, in the order Kruskal took them.
    pub edge_ids: Vec<usize>,
    pub cost: Rational,
}

/// Cheapest edge first, skipping edges that close a cycle. Equal weights are
/// taken in edge order `(u, v)`.
pub fn kruskal_mst(g: &WeightedGraph) -> Result<SpanningTree> {
    let n = g.n();
    let mut order: Vec<usize> = (0..g.graph().edge_count()).collect();
    order.sort_by(|&a, &b| g.weights()[a].cmp(&g.weights()[b]));
    let mut sets = DisjointSets::new(n);
    let mut chosen = Vec::with_capacity(n.saturating_sub(1));
    for id in order {
        let (u, v) = g.graph().edges()[id];
        if sets.union(u, v) {
            chosen.push(id);
            if chosen.len() + 1 == n {
                break;
            }
        }
    }
    if chosen.len() + 1 < n {
        return Err(Error::Disconnected);
    }
    let tree = Graph::new(n, chosen.iter().map(|&i| g.graph().edges()[i]), GraphKind::SIMPLE)?;
    Ok(SpanningTree { tree, cost: g.total(&chosen), edge_ids: chosen })
}
