use super::Graph;
use crate::error::{invalid, Error, Result};

/// Largest vertex count accepted by [`hamiltonian_cycle`].
pub const MAX_HAMILTON_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerClass {
    NoEulerianWalk,
    /// Walk exists between the two odd-degree vertices, smaller first.
    OpenWalk(usize, usize),
    ClosedWalk,
}

/// `vertices[i]` and `vertices[i+1]` are joined by edge id `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Walk {
    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// Checks that every step uses an existing edge between its endpoints.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        self.edges.iter().enumerate().all(|(i, &e)| {
            let Some(&(a, b)) = g.edges().get(e) else { return false };
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            (a, b) == (x.min(y), x.max(y))
        })
    }
}

/// Classifies by the number of odd-degree vertices. Isolated vertices are
/// ignored; the remaining edges must lie in one component.
pub fn euler_classify(g: &Graph) -> Result<EulerClass> {
    let deg = g.degrees();
    let touched = g.connected_components().into_iter().filter(|c| c.iter().any(|&v| deg[v] > 0)).count();
    if touched > 1 {
        return Err(Error::Disconnected);
    }
    let odd: Vec<usize> = (0..g.n()).filter(|&v| deg[v] % 2 == 1).collect();
    Ok(match odd.len() {
        0 => EulerClass::ClosedWalk,
        2 => EulerClass::OpenWalk(odd[0], odd[1]),
        _ => EulerClass::NoEulerianWalk,
    })
}

/// Hierholzer's algorithm. An open walk starts at the smaller odd vertex;
/// a closed one at the smallest non-isolated vertex.
pub fn euler_walk(g: &Graph) -> Result<Walk> {
    let start = match euler_classify(g)? {
        EulerClass::NoEulerianWalk => {
            let odd = g.degrees().iter().filter(|d| *d % 2 == 1).count();
            return Err(Error::NoEulerianWalk(odd));
        }
        EulerClass::OpenWalk(u, _) => u,
        EulerClass::ClosedWalk => match g.edges().first() {
            Some(&(u, _)) => u,
            None if g.n() > 0 => return Ok(Walk { vertices: vec![0], edges: vec![] }),
            None => return Err(invalid("the graph has no vertices")),
        },
    };
    let adj = g.incidence();
    let mut next = vec![0usize; g.n()];
    let mut used = vec![false; g.edge_count()];
    // stack of (vertex, edge used to reach it)
    let mut stack = vec![(start, usize::MAX)];
    let mut out: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&(v, _)) = stack.last() {
        while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
            next[v] += 1;
        }
        if next[v] == adj[v].len() {
            out.push(stack.pop().unwrap());
        } else {
            let (w, e) = adj[v][next[v]];
            used[e] = true;
            stack.push((w, e));
        }
    }
    out.reverse();
    let vertices = out.iter().map(|&(v, _)| v).collect();
    let edges = out[1..].iter().map(|&(_, e)| e).collect();
    Ok(Walk { vertices, edges })
}

/// A Hamiltonian cycle as a vertex order starting at 0 (closing edge implicit),
/// found by backtracking with neighbors tried in index order.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > MAX_HAMILTON_VERTICES {
        return Err(Error::TooLarge { what: "Hamiltonian search vertex count", limit: MAX_HAMILTON_VERTICES as u64 });
    }
    if n < 3 {
        return Ok(None);
    }
    let adj = g.neighbors();
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    Ok(extend(g, &adj, &mut order, &mut seen).then_some(order))
}

fn extend(g: &Graph, adj: &[Vec<usize>], order: &mut Vec<usize>, seen: &mut [bool]) -> bool {
    let last = *order.last().unwrap();
    if order.len() == g.n() {
        return g.has_edge(last, 0);
    }
    for &w in &adj[last] {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        order.push(w);
        if extend(g, adj, order, seen) {
            return true;
        }
        order.pop();
        seen[w] = false;
    }
    false
}
