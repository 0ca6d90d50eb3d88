//! Undirected (multi)graphs on vertices `0..n`, with the classic
//! constructors, degree and connectivity queries, walks and trees.

mod euler;
pub(crate) mod io;
mod named;
mod trees;
mod walks;

use std::collections::VecDeque;

use crate::error::{invalid, Error, Result};

pub use euler::{euler_classify, euler_walk, hamiltonian_cycle, EulerClass, Walk, MAX_HAMILTON_VERTICES};
pub use io::{parse_graph, write_graph_text};
pub use named::{
    complete, complete_bipartite, cycle, empty, konigsberg, path, petersen, platonic, Platonic,
};
pub use trees::{
    at_most_binary_count, binary_tree_count, bst_from_keys, cayley_count, enumerate_labeled_trees,
    increasing_tree_from_permutation, is_tree, permutation_from_increasing_tree, spanning_tree,
    tournament_count, BinaryTree, Node, MAX_ENUMERATED_TREE,
};
pub use walks::{count_walks, fibonacci_walk_matrix, from_adjacency, walk_matrix, AdjacencyMatrix, NatMatrix};

/// Which edge multisets a graph accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GraphKind {
    pub multi: bool,
    pub loops: bool,
}

impl GraphKind {
    pub const SIMPLE: GraphKind = GraphKind { multi: false, loops: false };
    pub const MULTI: GraphKind = GraphKind { multi: true, loops: false };
    pub const PSEUDO: GraphKind = GraphKind { multi: true, loops: true };
}

/// Edges are stored as `(u, v)` with `u <= v`, sorted. An edge id is its
/// position in [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    kind: GraphKind,
}

pub fn make_graph(n: usize, edges: &[(usize, usize)], kind: GraphKind) -> Result<Graph> {
    Graph::new(n, edges.iter().copied(), kind)
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, kind: GraphKind) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge {u}-{v} has an endpoint outside 0..{n}")));
            }
            if u == v && !kind.loops {
                return Err(invalid(format!("loop at {u} in a graph without loops")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if !kind.multi {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(invalid(format!("duplicate edge {}-{} in a graph without multi-edges", w[0].0, w[0].1)));
            }
        }
        Ok(Graph { n, edges: list, kind })
    }

    pub fn simple(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        make_graph(n, edges, GraphKind::SIMPLE)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// True when no loops or repeated edges are present (whatever the kind allows).
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|(u, v)| u != v) && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let e = (u.min(v), u.max(v));
        let lo = self.edges.partition_point(|x| *x < e);
        let hi = self.edges.partition_point(|x| *x <= e);
        hi - lo
    }

    /// Loops count twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Degrees in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Neighbor lists with one entry per edge end, as `(neighbor, edge id)`.
    /// A loop appears once in its vertex's list.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, id));
            if a != b {
                adj[b].push((a, id));
            }
        }
        adj
    }

    /// Sorted distinct neighbors of each vertex.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = self.incidence().into_iter().map(|l| l.into_iter().map(|(w, _)| w).collect()).collect();
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
        }
        adj
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The graph with zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Simple graphs only.
    pub fn complement(&self) -> Result<Graph> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges, GraphKind::SIMPLE)
    }

    /// The subgraph keeping the listed edge ids.
    pub fn edge_subgraph(&self, ids: &[usize]) -> Graph {
        let edges = ids.iter().map(|&i| self.edges[i]);
        Graph::new(self.n, edges, self.kind).expect("subset of a valid edge list")
    }

    /// Induced subgraph on `keep`, relabeled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| index[*a] != usize::MAX && index[*b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        Graph::new(keep.len(), edges, self.kind).expect("relabeling keeps the edge list valid")
    }
}

/// Result of trying to 2-color a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    /// `colors[v]` is 0 or 1 and every edge joins different colors.
    Coloring(Vec<u8>),
    /// Vertices of an odd cycle, in order; the closing edge is implicit.
    OddCycle(Vec<usize>),
}

/// BFS layering per component. A clash between two vertices of the same
/// layer parity closes an odd cycle through their lowest common ancestor.
pub fn two_coloring(g: &Graph) -> TwoColoring {
    let adj = g.neighbors();
    let mut color: Vec<Option<u8>> = vec![None; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    let mut depth = vec![0usize; g.n()];
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(1 - color[u].unwrap());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(c) if c == color[u].unwrap() => {
                        return TwoColoring::OddCycle(odd_cycle(u, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    TwoColoring::Coloring(color.into_iter().map(Option::unwrap).collect())
}

fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    if u == w {
        return vec![u];
    }
    let (mut a, mut b) = (u, w);
    let (mut left, mut right) = (vec![a], vec![b]);
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
