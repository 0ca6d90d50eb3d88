use std::collections::VecDeque;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::{two_coloring, Graph, TwoColoring};

/// Largest left side accepted by [`hall_violator`].
pub const MAX_HALL_LEFT: usize = 20;

/// A set of pairwise disjoint edges, stored as sorted `(u, v)` pairs with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Checks disjointness and that every edge is in `g`.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        let mut used = vec![false; g.n()];
        for &(u, v) in &list {
            if u == v || !g.has_edge(u, v) {
                return Err(invalid(format!("{u}-{v} is not an edge")));
            }
            if used[u] || used[v] {
                return Err(invalid(format!("edge {u}-{v} shares a vertex with another matched edge")));
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(Matching { edges: list })
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

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// `mate[v]` is the partner of `v`, if matched.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// No edge of `g` has both endpoints unmatched.
    pub fn is_maximal_in(&self, g: &Graph) -> bool {
        let mate = self.mates(g.n());
        g.edges().iter().all(|&(u, v)| u == v || mate[u].is_some() || mate[v].is_some())
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Takes edges in sorted `(u, v)` order whenever both ends are still free.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    greedy_matching_in_order(g, g.edges()).expect("graph edges are valid")
}

/// Greedy over a caller-chosen edge order.
pub fn greedy_matching_in_order(g: &Graph, order: &[(usize, usize)]) -> Result<Matching> {
    let mut used = vec![false; g.n()];
    let mut edges = Vec::new();
    for &(u, v) in order {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(invalid(format!("{u}-{v} is not an edge")));
        }
        if u != v && !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    Ok(Matching { edges })
}

/// Replaces `m` by its symmetric difference with the path's edges, after
/// checking the path is augmenting: distinct vertices, both ends unmatched,
/// edges alternately outside and inside `m`.
pub fn augment(g: &Graph, m: &Matching, path: &[usize]) -> Result<Matching> {
    let bad = |msg: &str| Err(Error::InvalidPath(msg.to_string()));
    if path.len() < 2 || !path.len().is_multiple_of(2) {
        return bad("an augmenting path has an odd number of edges");
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() {
            return bad("vertex out of range");
        }
        if seen[v] {
            return bad("vertices repeat");
        }
        seen[v] = true;
    }
    let mate = m.mates(g.n());
    if mate[path[0]].is_some() || mate[*path.last().unwrap()].is_some() {
        return bad("endpoints must be unmatched");
    }
    for (i, w) in path.windows(2).enumerate() {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::InvalidPath(format!("{}-{} is not an edge", w[0], w[1])));
        }
        if m.contains(w[0], w[1]) != (i % 2 == 1) {
            return Err(Error::InvalidPath(format!("edge {}-{} breaks the alternation", w[0], w[1])));
        }
    }
    let mut edges: Vec<(usize, usize)> = m
        .edges
        .iter()
        .copied()
        .filter(|&(u, v)| !path.windows(2).any(|w| (w[0].min(w[1]), w[0].max(w[1])) == (u, v)))
        .collect();
    edges.extend(path.windows(2).step_by(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))));
    edges.sort_unstable();
    Ok(Matching { edges })
}

fn sides(g: &Graph) -> Result<Vec<u8>> {
    match two_coloring(g) {
        TwoColoring::Coloring(c) => Ok(c),
        TwoColoring::OddCycle(_) => Err(Error::NotBipartite),
    }
}

/// Breadth-first search for an augmenting path in a bipartite graph, from
/// all free vertices of color 0 at once. Returns the path from its free
/// color-0 end.
pub fn find_augmenting_path(g: &Graph, m: &Matching) -> Result<Option<Vec<usize>>> {
    let side = sides(g)?;
    Ok(search_path(g, &g.neighbors(), &side, m))
}

fn search_path(g: &Graph, adj: &[Vec<usize>], side: &[u8], m: &Matching) -> Option<Vec<usize>> {
    let n = g.n();
    let mate = m.mates(n);
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if side[v] == 0 && mate[v].is_none() && !adj[v].is_empty() {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if seen[w] || mate[u] == Some(w) {
                continue;
            }
            seen[w] = true;
            prev[w] = u;
            match mate[w] {
                None => {
                    let mut path = vec![w];
                    let mut at = w;
                    while prev[at] != usize::MAX {
                        at = prev[at];
                        path.push(at);
                    }
                    path.reverse();
                    return Some(path);
                }
                Some(x) => {
                    seen[x] = true;
                    prev[x] = w;
                    queue.push_back(x);
                }
            }
        }
    }
    None
}

/// Grows the empty matching along augmenting paths until none remain.
pub fn maximum_matching_bipartite(g: &Graph) -> Result<Matching> {
    let side = sides(g)?;
    let adj = g.neighbors();
    let mut m = Matching::empty();
    while let Some(path) = search_path(g, &adj, &side, &m) {
        m = augment(g, &m, &path).expect("search returns augmenting paths");
    }
    Ok(m)
}

/// The first subset `X` of `left` with fewer than `|X|` neighbors, by
/// increasing size and then lexicographic position in `left`.
pub fn hall_violator(g: &Graph, left: &[usize]) -> Result<Option<Vec<usize>>> {
    if left.len() > MAX_HALL_LEFT {
        return Err(Error::TooLarge { what: "Hall subset scan left side", limit: MAX_HALL_LEFT as u64 });
    }
    let mut in_left = vec![false; g.n()];
    for &v in left {
        if v >= g.n() || in_left[v] {
            return Err(invalid(format!("left side vertex {v} is out of range or repeated")));
        }
        in_left[v] = true;
    }
    if g.edges().iter().any(|&(u, v)| in_left[u] && in_left[v]) {
        return Err(invalid("an edge joins two left vertices"));
    }
    let words = g.n().div_ceil(64);
    let adj = g.neighbors();
    let hoods: Vec<Vec<u64>> = left
        .iter()
        .map(|&v| {
            let mut bits = vec![0u64; words];
            for &w in &adj[v] {
                bits[w / 64] |= 1 << (w % 64);
            }
            bits
        })
        .collect();
    let k = left.len();
    for size in 1..=k {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let mut union = vec![0u64; words];
            for &i in &pick {
                for (a, b) in union.iter_mut().zip(&hoods[i]) {
                    *a |= b;
                }
            }
            let count: u32 = union.iter().map(|w| w.count_ones()).sum();
            if (count as usize) < size {
                return Ok(Some(pick.iter().map(|&i| left[i]).collect()));
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| pick[i] < k - size + i) else { break };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
