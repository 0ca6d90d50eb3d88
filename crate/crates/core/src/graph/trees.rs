use std::fmt;

use super::{complete, Graph, GraphKind};
use crate::counting::{catalan, factorial, CatalanMethod};
use crate::error::{invalid, Error, Result};
use crate::num::Natural;

/// Largest vertex count for [`enumerate_labeled_trees`].
pub const MAX_ENUMERATED_TREE: usize = 5;

/// Connected with exactly `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.edge_count() == g.n() - 1 && g.is_connected()
}

/// Breadth-first spanning tree rooted at 0, as a simple graph on the same vertices.
pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = g.neighbors();
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    if g.n() > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    Graph::new(g.n(), edges, GraphKind::SIMPLE)
}

/// Labeled trees on `n` vertices: `n^(n-2)`, and 1 for a single vertex.
pub fn cayley_count(n: u64) -> Result<Natural> {
    match n {
        0 => Err(invalid("a tree needs at least one vertex")),
        1 => Ok(Natural::from(1u8)),
        _ => Ok(Natural::from(n).pow((n - 2) as u32)),
    }
}

/// All labeled trees on `0..n`, found by testing every `(n-1)`-edge subset
/// of `K_n`. Subsets are visited in lexicographic order of edge ids.
pub fn enumerate_labeled_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATED_TREE {
        return Err(invalid(format!("tree enumeration supports 1..={MAX_ENUMERATED_TREE} vertices")));
    }
    let kn = complete(n);
    let m = kn.edge_count();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let ids: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let g = kn.edge_subgraph(&ids);
        if g.is_connected() {
            out.push(g);
        }
    }
    out.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(out)
}

/// Binary trees (every internal vertex has two children) with `leaves` leaves.
pub fn binary_tree_count(leaves: u64) -> Result<Natural> {
    if leaves == 0 {
        return Err(invalid("a binary tree has at least one leaf"));
    }
    Ok(catalan(leaves - 1, CatalanMethod::ClosedForm))
}

/// At-most binary trees on `n` vertices.
pub fn at_most_binary_count(n: u64) -> Natural {
    catalan(n, CatalanMethod::ClosedForm)
}

/// Single-elimination brackets for `players` labeled players: a binary tree
/// shape times an assignment of players to leaves.
pub fn tournament_count(players: u64) -> Result<Natural> {
    Ok(binary_tree_count(players)? * factorial(players))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub key: i64,
    pub left: Option<Box<Node>>,
    pub right: Option<Box<Node>>,
}

impl Node {
    pub fn leaf(key: i64) -> Self {
        Node { key, left: None, right: None }
    }
}

/// Rooted tree where each vertex has an optional left and right child.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryTree {
    pub root: Option<Box<Node>>,
}

impl BinaryTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        fn go(n: &Option<Box<Node>>) -> usize {
            n.as_ref().map_or(0, |n| 1 + go(&n.left) + go(&n.right))
        }
        go(&self.root)
    }

    pub fn leaves(&self) -> usize {
        fn go(n: &Option<Box<Node>>) -> usize {
            match n {
                None => 0,
                Some(n) if n.left.is_none() && n.right.is_none() => 1,
                Some(n) => go(&n.left) + go(&n.right),
            }
        }
        go(&self.root)
    }

    /// Every vertex has zero or two children.
    pub fn is_strict_binary(&self) -> bool {
        fn go(n: &Option<Box<Node>>) -> bool {
            n.as_ref()
                .is_none_or(|n| n.left.is_some() == n.right.is_some() && go(&n.left) && go(&n.right))
        }
        go(&self.root)
    }

    pub fn in_order(&self) -> Vec<i64> {
        fn go(n: &Option<Box<Node>>, out: &mut Vec<i64>) {
            if let Some(n) = n {
                go(&n.left, out);
                out.push(n.key);
                go(&n.right, out);
            }
        }
        let mut out = Vec::new();
        go(&self.root, &mut out);
        out
    }

    /// Keys strictly increase along every downward path.
    pub fn is_increasing(&self) -> bool {
        fn go(n: &Option<Box<Node>>, above: Option<i64>) -> bool {
            n.as_ref()
                .is_none_or(|n| above.is_none_or(|a| a < n.key) && go(&n.left, Some(n.key)) && go(&n.right, Some(n.key)))
        }
        go(&self.root, None)
    }

    /// In-order keys are strictly increasing.
    pub fn is_search_tree(&self) -> bool {
        self.in_order().windows(2).all(|w| w[0] < w[1])
    }

    /// Binary search tree insertion; returns false if the key is already present.
    pub fn insert(&mut self, key: i64) -> bool {
        let mut slot = &mut self.root;
        while let Some(node) = slot {
            if key == node.key {
                return false;
            }
            slot = if key < node.key { &mut node.left } else { &mut node.right };
        }
        *slot = Some(Box::new(Node::leaf(key)));
        true
    }
}

/// `key(left,right)` with empty text for a missing child; a leaf is just its key.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(n: &Option<Box<Node>>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let Some(n) = n else { return Ok(()) };
            write!(f, "{}", n.key)?;
            if n.left.is_some() || n.right.is_some() {
                write!(f, "(")?;
                go(&n.left, f)?;
                write!(f, ",")?;
                go(&n.right, f)?;
                write!(f, ")")?;
            }
            Ok(())
        }
        go(&self.root, f)
    }
}

/// Inserts the keys in order into an empty search tree.
pub fn bst_from_keys(keys: &[i64]) -> Result<BinaryTree> {
    let mut t = BinaryTree::new();
    for &k in keys {
        if !t.insert(k) {
            return Err(invalid(format!("duplicate key {k}")));
        }
    }
    Ok(t)
}

/// The smallest entry becomes the root; entries to its left and right build
/// the two subtrees the same way.
pub fn increasing_tree_from_permutation(perm: &[i64]) -> Result<BinaryTree> {
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(i, &v)| v != i as i64 + 1) {
        return Err(invalid(format!("not a permutation of 1..{}", perm.len())));
    }
    fn build(p: &[i64]) -> Option<Box<Node>> {
        let (at, &key) = p.iter().enumerate().min_by_key(|(_, v)| **v)?;
        Some(Box::new(Node { key, left: build(&p[..at]), right: build(&p[at + 1..]) }))
    }
    Ok(BinaryTree { root: build(perm) })
}

/// Reads an increasing tree back in order.
pub fn permutation_from_increasing_tree(t: &BinaryTree) -> Result<Vec<i64>> {
    if !t.is_increasing() {
        return Err(invalid("labels do not increase down the tree"));
    }
    let perm = t.in_order();
    let mut sorted = perm.clone();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(i, &v)| v != i as i64 + 1) {
        return Err(invalid("tree labels are not 1..n"));
    }
    Ok(perm)
}
