use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::graph::{two_coloring, Graph, TwoColoring};
use crate::num::Rational;

/// Outcome of a necessary condition for planarity. Passing the test proves
/// nothing, so there is no "planar" verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlanarVerdict {
    ViolatesBound,
    Inconclusive,
}

impl fmt::Display for PlanarVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanarVerdict::ViolatesBound => "violates-bound",
            PlanarVerdict::Inconclusive => "inconclusive",
        })
    }
}

/// Edges of the underlying simple graph: parallel edges collapse and loops drop.
fn simple_edge_count(g: &Graph) -> usize {
    g.edges().iter().filter(|(u, v)| u != v).collect::<BTreeSet<_>>().len()
}

/// A planar graph on `v >= 3` vertices has at most `3v - 6` edges.
/// Graphs with fewer than 3 vertices are always planar.
pub fn planar_edge_bound(g: &Graph) -> PlanarVerdict {
    let v = g.n();
    if v >= 3 && simple_edge_count(g) > 3 * v - 6 {
        PlanarVerdict::ViolatesBound
    } else {
        PlanarVerdict::Inconclusive
    }
}

/// A planar bipartite graph on `v >= 3` vertices has at most `2v - 4`
/// edges. Non-bipartite graphs get `Inconclusive`.
pub fn bipartite_planar_bound(g: &Graph) -> PlanarVerdict {
    let v = g.n();
    let bipartite = matches!(two_coloring(g), TwoColoring::Coloring(_));
    if bipartite && v >= 3 && simple_edge_count(g) > 2 * v - 4 {
        PlanarVerdict::ViolatesBound
    } else {
        PlanarVerdict::Inconclusive
    }
}

/// `v - e + f`
pub fn euler_characteristic(v: u64, e: u64, f: u64) -> i128 {
    v as i128 - e as i128 + f as i128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyhedronData {
    pub name: &'static str,
    pub v: u64,
    pub e: u64,
    pub f: u64,
}

impl fmt::Display for PolyhedronData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: v={} e={} f={}", self.name, self.v, self.e, self.f)
    }
}

const fn solid(name: &'static str, v: u64, e: u64, f: u64) -> PolyhedronData {
    PolyhedronData { name, v, e, f }
}

/// The Platonic solids and four balls drawn as polyhedra.
pub const POLYHEDRA: [PolyhedronData; 9] = [
    solid("tetrahedron", 4, 6, 4),
    solid("cube", 8, 12, 6),
    solid("octahedron", 6, 12, 8),
    solid("dodecahedron", 20, 30, 12),
    solid("icosahedron", 12, 30, 20),
    solid("soccer", 60, 90, 32),
    solid("basketball", 6, 12, 8),
    solid("football", 2, 4, 4),
    solid("volleyball", 32, 48, 18),
];

pub fn polyhedron(name: &str) -> Option<PolyhedronData> {
    POLYHEDRA.into_iter().find(|p| p.name.eq_ignore_ascii_case(name))
}

pub fn check_polyhedron(p: &PolyhedronData) -> bool {
    euler_characteristic(p.v, p.e, p.f) == 2
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circle {
    pub x: Rational,
    pub y: Rational,
    pub radius: Rational,
}

impl Circle {
    pub fn new(x: Rational, y: Rational, radius: Rational) -> Result<Self> {
        if !radius.is_positive() {
            return Err(invalid("circle radius must be positive"));
        }
        Ok(Circle { x, y, radius })
    }

    /// Sign of squared distance minus squared radius: negative inside.
    pub(crate) fn side(&self, px: &Rational, py: &Rational) -> Rational {
        let dx = px - &self.x;
        let dy = py - &self.y;
        &dx * &dx + &dy * &dy - &self.radius * &self.radius
    }
}

/// Color of the region containing the point: the parity of the number of
/// circles strictly containing it. Regions across a single arc differ.
pub fn circle_region_color(px: &Rational, py: &Rational, circles: &[Circle]) -> Result<u8> {
    let mut inside = 0u8;
    for (i, c) in circles.iter().enumerate() {
        let s = c.side(px, py);
        if s.is_zero() {
            return Err(Error::BoundaryPoint(i));
        }
        if s.is_negative() {
            inside ^= 1;
        }
    }
    Ok(inside)
}
