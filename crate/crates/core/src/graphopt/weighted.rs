use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::num::{format_rational, parse_rational, Rational};

/// A simple graph with one exact weight per edge. `weights[i]` belongs to
/// `graph.edges()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<Rational>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let mut edges: Vec<(usize, usize, Rational)> =
            edges.into_iter().map(|(u, v, w)| (u.min(v), u.max(v), w)).collect();
        edges.sort_by_key(|a| (a.0, a.1));
        let graph = Graph::new(n, edges.iter().map(|e| (e.0, e.1)), GraphKind::SIMPLE)?;
        Ok(WeightedGraph { graph, weights: edges.into_iter().map(|e| e.2).collect() })
    }

    /// Complete graph with `weight(u, v)` on each edge `u < v`.
    pub fn complete_with(n: usize, mut weight: impl FnMut(usize, usize) -> Rational) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>();
        let edges = edges.into_iter().map(|(u, v)| (u, v, weight(u, v))).collect();
        Self::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `(u, v, weight)` in edge-id order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.graph.edges().iter().zip(&self.weights).map(|(&(u, v), w)| (u, v, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&Rational> {
        let key = (u.min(v), u.max(v));
        self.graph.edges().binary_search(&key).ok().map(|i| &self.weights[i])
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.graph.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(Error::NotComplete)
        }
    }

    pub fn has_negative_weight(&self) -> bool {
        self.weights.iter().any(Signed::is_negative)
    }

    /// Dense `n x n` weight table; missing edges and the diagonal are `None`.
    pub fn table(&self) -> Vec<Vec<Option<Rational>>> {
        let n = self.n();
        let mut t = vec![vec![None; n]; n];
        for (u, v, w) in self.edges() {
            t[u][v] = Some(w.clone());
            t[v][u] = Some(w.clone());
        }
        t
    }

    pub fn total(&self, ids: &[usize]) -> Rational {
        ids.iter().fold(Rational::zero(), |acc, &i| acc + &self.weights[i])
    }
}

/// `w(u, w) <= w(u, v) + w(v, w)` for all triples of a complete graph.
pub fn satisfies_triangle_inequality(g: &WeightedGraph) -> Result<bool> {
    g.require_complete()?;
    let t = g.table();
    let n = g.n();
    let w = |a: usize, b: usize| t[a][b].as_ref().unwrap();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c && *w(a, c) > w(a, b) + w(b, c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Complete graph on planar points. Each distance is rounded up to a
/// multiple of `1/scale`, then replaced by the shortest-path distance so
/// the triangle inequality holds exactly despite the rounding.
pub fn euclidean_graph(points: &[(f64, f64)], scale: u64) -> Result<WeightedGraph> {
    if scale == 0 {
        return Err(invalid("scale must be positive"));
    }
    let n = points.len();
    let mut d = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (points[i].0 - points[j].0, points[i].1 - points[j].1);
            let dist = dx.hypot(dy);
            if !dist.is_finite() {
                return Err(invalid("point coordinates must be finite"));
            }
            let q = Rational::new(((dist * scale as f64).ceil() as i64).into(), (scale as i64).into());
            d[i][j] = q.clone();
            d[j][i] = q;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    Ok(WeightedGraph::complete_with(n, |u, v| d[u][v].clone()))
}

/// Weighted edge-list text: header `n m`, then `u v w` lines with rational `w`.
pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph> {
    let (n, kind, records) = crate::graph::io::parse_records(text, true)?;
    if kind != GraphKind::SIMPLE {
        return Err(Error::Parse { line: 1, msg: "weighted graphs must be simple".into() });
    }
    let mut edges = Vec::with_capacity(records.len());
    for r in &records {
        let w = parse_rational(r.weight.unwrap())
            .map_err(|e| Error::Parse { line: r.line, msg: e.to_string() })?;
        if r.u == r.v {
            return Err(Error::Parse { line: r.line, msg: "loop in a weighted graph".into() });
        }
        if edges.iter().any(|&(a, b, _)| (a, b) == (r.u.min(r.v), r.u.max(r.v))) {
            return Err(Error::Parse { line: r.line, msg: "repeated edge".into() });
        }
        edges.push((r.u.min(r.v), r.u.max(r.v), w));
    }
    WeightedGraph::new(n, edges)
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.graph.edge_count())?;
        for (u, v, w) in self.edges() {
            writeln!(f, "{u} {v} {}", format_rational(w))?;
        }
        Ok(())
    }
}
