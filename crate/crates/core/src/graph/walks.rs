use std::fmt;

use num_traits::{One, Zero};

use super::{Graph, GraphKind};
use crate::error::{invalid, Result};
use crate::num::Natural;

/// Edge multiplicities; a loop contributes 1 to its diagonal entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl AdjacencyMatrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut entries = vec![0u64; n * n];
        for &(a, b) in g.edges() {
            entries[a * n + b] += 1;
            if a != b {
                entries[b * n + a] += 1;
            }
        }
        AdjacencyMatrix { n, entries }
    }

    /// Square, row-major.
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(invalid("adjacency matrix must be square"));
        }
        let m = AdjacencyMatrix { n, entries: rows.concat() };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(invalid(format!("adjacency matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[u64]>::to_vec).collect()
    }

    /// Inverse of [`AdjacencyMatrix::of`]. The graph kind is the least
    /// permissive one that fits: multi-edges only if some entry exceeds 1,
    /// loops only if the diagonal is nonzero.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut kind = GraphKind::SIMPLE;
        for i in 0..self.n {
            for j in i..self.n {
                let m = self.get(i, j);
                kind.multi |= m > 1;
                kind.loops |= i == j && m > 0;
                edges.extend(std::iter::repeat_n((i, j), m as usize));
            }
        }
        Graph::new(self.n, edges, kind).expect("matrix entries give a valid edge list")
    }
}

pub fn from_adjacency(m: &AdjacencyMatrix) -> Graph {
    m.to_graph()
}

impl fmt::Display for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Square matrix of naturals, not necessarily symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatMatrix {
    n: usize,
    entries: Vec<Natural>,
}

impl NatMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Natural::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Natural::one();
        }
        NatMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(invalid("matrix must be square"));
        }
        Ok(NatMatrix { n, entries: rows.iter().flatten().map(|&x| Natural::from(x)).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Natural {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &NatMatrix) -> NatMatrix {
        let n = self.n;
        let mut entries = vec![Natural::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * &other.entries[k * n + j];
                }
            }
        }
        NatMatrix { n, entries }
    }

    /// Square-and-multiply.
    pub fn pow(&self, mut e: u64) -> NatMatrix {
        let mut base = self.clone();
        let mut acc = NatMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl From<&AdjacencyMatrix> for NatMatrix {
    fn from(m: &AdjacencyMatrix) -> Self {
        NatMatrix { n: m.n, entries: m.entries.iter().map(|&x| Natural::from(x)).collect() }
    }
}

impl fmt::Display for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let cells: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Entry `(i, j)` counts walks of exactly `length` edges from `i` to `j`.
pub fn walk_matrix(g: &Graph, length: u64) -> NatMatrix {
    NatMatrix::from(&AdjacencyMatrix::of(g)).pow(length)
}

pub fn count_walks(g: &Graph, i: usize, j: usize, length: u64) -> Result<Natural> {
    if i >= g.n() || j >= g.n() {
        return Err(invalid(format!("vertex out of range 0..{}", g.n())));
    }
    Ok(walk_matrix(g, length).get(i, j).clone())
}

/// Directed graph on `u = 0`, `v = 1` with a loop at `u` and arcs `u -> v`,
/// `v -> u`. Walks of length `N` from `u` to `v` number `F_N`.
pub fn fibonacci_walk_matrix() -> NatMatrix {
    NatMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap()
}
