use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphKind};
use crate::error::{invalid, Error, Result};

fn simple(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges, GraphKind::SIMPLE).expect("named graphs are simple")
}

/// `n` vertices, no edges.
pub fn empty(n: usize) -> Graph {
    simple(n, Vec::new())
}

pub fn complete(n: usize) -> Graph {
    simple(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// Edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    simple(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Edges `{i, i+1 mod n}`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Ok(simple(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// Left side `0..a`, right side `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    simple(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
}

/// Outer cycle `0..k`, spokes `i -- k+i`, inner vertex `k+i` joined to `k + (i+step) mod k`.
fn generalized_petersen(k: usize, step: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, k + i));
        edges.push((k + i, k + (i + step) % k));
    }
    simple(2 * k, edges)
}

/// Outer pentagon `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

/// Vertex 0 is the island with five bridges; 1 and 2 are the river banks
/// joined to it by two bridges each; 3 is the eastern land mass.
pub fn konigsberg() -> Graph {
    let edges = [(0, 1), (0, 1), (0, 2), (0, 2), (0, 3), (1, 3), (2, 3)];
    Graph::new(4, edges, GraphKind::MULTI).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] =
        [Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron, Platonic::Dodecahedron, Platonic::Icosahedron];

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }

    /// Faces of the solid.
    pub fn faces(self) -> usize {
        match self {
            Platonic::Tetrahedron => 4,
            Platonic::Cube => 6,
            Platonic::Octahedron => 8,
            Platonic::Dodecahedron => 12,
            Platonic::Icosahedron => 20,
        }
    }
}

impl fmt::Display for Platonic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Platonic::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| invalid(format!("unknown platonic solid {s:?}")))
    }
}

/// Vertex-edge graph of a Platonic solid.
pub fn platonic(solid: Platonic) -> Graph {
    match solid {
        Platonic::Tetrahedron => complete(4),
        // 3-bit strings differing in one bit
        Platonic::Cube => simple(
            8,
            (0..8usize)
                .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
                .filter(|(u, v)| u < v)
                .collect(),
        ),
        // opposite vertices are 0-1, 2-3, 4-5
        Platonic::Octahedron => simple(
            6,
            (0..6usize)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
                .collect(),
        ),
        Platonic::Dodecahedron => generalized_petersen(10, 2),
        // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
        Platonic::Icosahedron => {
            let mut edges = Vec::new();
            for j in 0..5 {
                let (up, up_next) = (1 + j, 1 + (j + 1) % 5);
                let (low, low_next) = (6 + j, 6 + (j + 1) % 5);
                edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11), (up, low), (up, low_next)]);
            }
            simple(12, edges)
        }
    }
}
