//! Vertex colorings, chromatic numbers and polynomials, planarity edge
//! bounds, Euler's formula and two-coloring of circle arrangements.

mod chromatic;
mod planar;

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::{two_coloring, Graph, TwoColoring};

pub use chromatic::{chromatic_polynomial, count_colorings, ChromaticPolynomial, MAX_BRUTE_FORCE_COLORINGS, MAX_DELETION_CONTRACTION_EDGES};
pub use planar::{
    bipartite_planar_bound, check_polyhedron, circle_region_color, euler_characteristic, planar_edge_bound, polyhedron,
    Circle, PlanarVerdict, PolyhedronData, POLYHEDRA,
};

/// Largest vertex count accepted by the backtracking search.
pub const MAX_BACKTRACK_VERTICES: usize = 20;

/// `colors[v]` is the color index of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        VertexColoring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// One more than the largest color index; 0 for the empty graph.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().max().map_or(0, |&c| c + 1)
    }

    /// Covers every vertex of `g` and no edge has equal colors at both ends.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

impl fmt::Display for VertexColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn has_loop(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| u == v)
}

/// A proper coloring with colors `0..k`, found by backtracking over vertices
/// in descending degree order (ties by index) and colors by index. `None` if
/// there is none; a graph with a loop never has one.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<Option<VertexColoring>> {
    let n = g.n();
    if n > MAX_BACKTRACK_VERTICES {
        return Err(Error::TooLarge { what: "backtracking vertex count", limit: MAX_BACKTRACK_VERTICES as u64 });
    }
    if has_loop(g) {
        return Ok(None);
    }
    let adj = g.neighbors();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    let mut colors = vec![usize::MAX; n];
    // A vertex never needs a color more than one past the largest used so
    // far; the colors are interchangeable.
    fn go(i: usize, used: usize, k: usize, order: &[usize], adj: &[Vec<usize>], colors: &mut [usize]) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for c in 0..k.min(used + 1) {
            if adj[v].iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if go(i + 1, used.max(c + 1), k, order, adj, colors) {
                    return true;
                }
            }
        }
        colors[v] = usize::MAX;
        false
    }
    Ok(go(0, 0, k, &order, &adj, &mut colors).then(|| VertexColoring::new(colors)))
}

/// Least `k` with a proper `k`-coloring. The empty graph on no vertices
/// needs 0 colors.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > MAX_BACKTRACK_VERTICES {
        return Err(Error::TooLarge { what: "backtracking vertex count", limit: MAX_BACKTRACK_VERTICES as u64 });
    }
    if has_loop(g) {
        return Err(invalid("a graph with a loop has no proper coloring"));
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if matches!(two_coloring(g), TwoColoring::Coloring(_)) {
        return Ok(2);
    }
    for k in 3..=g.n() {
        if is_k_colorable(g, k)?.is_some() {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice on a loopless graph")
}

/// Vertex removal order that always takes a vertex of least remaining degree
/// (smallest index on ties), with the largest degree seen at removal time.
/// Degrees count distinct neighbors; loops are ignored.
pub fn degeneracy_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let adj: Vec<Vec<usize>> = g.neighbors().into_iter().enumerate().map(|(v, ws)| ws.into_iter().filter(|&w| w != v).collect()).collect();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut worst = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| deg[v]).expect("a vertex remains");
        worst = worst.max(deg[v]);
        gone[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    (order, worst)
}

/// Colors vertices greedily in reverse removal order, each with the least
/// color unused by its already-colored neighbors. Uses at most `d + 1`
/// colors where `d` is the degeneracy from [`degeneracy_order`]. Loops are
/// ignored, so the result is proper exactly when `g` is loopless.
pub fn degeneracy_coloring(g: &Graph) -> VertexColoring {
    let (order, _) = degeneracy_order(g);
    let adj = g.neighbors();
    let mut colors = vec![usize::MAX; g.n()];
    for &v in order.iter().rev() {
        let taken: Vec<usize> = adj[v].iter().filter(|&&w| w != v).map(|&w| colors[w]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).expect("some color is free");
    }
    VertexColoring::new(colors)
}

#[cfg(test)]
mod tests;
