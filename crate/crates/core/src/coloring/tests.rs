use super::*;
use crate::graph::{complete, complete_bipartite, cycle, empty, path, petersen, platonic, GraphKind, Platonic};
use crate::num::{nat, ratio};
use crate::poly::Polynomial;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_simple(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::simple(n, &edges).unwrap()
}

fn corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0);
    let mut out = vec![complete(5), path(6), cycle(5).unwrap(), cycle(6).unwrap(), complete_bipartite(3, 3), empty(4), empty(0)];
    out.extend(Platonic::ALL.map(platonic).into_iter().filter(|g| g.n() <= 8));
    for _ in 0..80 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.7);
        out.push(random_simple(&mut rng, n, p));
    }
    out
}

fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.n() as u64).find(|&k| count_colorings(g, k).unwrap() > nat(0)).unwrap() as usize
}

#[test]
fn chromatic_numbers_of_named_graphs() {
    for n in 1..=7 {
        assert_eq!(chromatic_number(&complete(n)).unwrap(), n);
    }
    assert_eq!(chromatic_number(&cycle(7).unwrap()).unwrap(), 3);
    assert_eq!(chromatic_number(&cycle(6).unwrap()).unwrap(), 2);
    assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
    assert_eq!(chromatic_number(&empty(4)).unwrap(), 1);
    assert_eq!(chromatic_number(&empty(0)).unwrap(), 0);
    assert_eq!(chromatic_number(&platonic(Platonic::Icosahedron)).unwrap(), 4);
    assert!(is_k_colorable(&petersen(), 2).unwrap().is_none());
    let c = is_k_colorable(&petersen(), 3).unwrap().unwrap();
    assert!(c.is_proper(&petersen()));
    assert!(chromatic_number(&empty(21)).is_err());
    let looped = Graph::new(2, [(0, 0), (0, 1)], GraphKind::PSEUDO).unwrap();
    assert!(is_k_colorable(&looped, 2).unwrap().is_none());
    assert!(chromatic_number(&looped).is_err());
}

#[test]
fn chromatic_number_matches_brute_force() {
    for g in corpus() {
        let k = chromatic_number(&g).unwrap();
        assert_eq!(k, brute_chromatic(&g), "{g:?}");
        if g.n() > 0 {
            assert!(1 <= k && k <= g.n());
            let c = is_k_colorable(&g, k).unwrap().unwrap();
            assert!(c.is_proper(&g) && c.num_colors() <= k);
        }
    }
}

#[test]
fn two_colorable_iff_bipartite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb1);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.5);
        let g = random_simple(&mut rng, n, p);
        let bipartite = matches!(two_coloring(&g), TwoColoring::Coloring(_));
        assert_eq!(is_k_colorable(&g, 2).unwrap().is_some(), bipartite);
        if g.edge_count() > 0 {
            assert_eq!(chromatic_number(&g).unwrap() == 2, bipartite);
        }
    }
}

#[test]
fn subgraphs_need_no_more_colors() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b);
    for _ in 0..60 {
        let n = rng.gen_range(2..=9);
        let g = random_simple(&mut rng, n, 0.5);
        let ids: Vec<usize> = (0..g.edge_count()).filter(|_| rng.gen_bool(0.6)).collect();
        let h = g.edge_subgraph(&ids);
        assert!(chromatic_number(&h).unwrap() <= chromatic_number(&g).unwrap());
        let keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        assert!(chromatic_number(&g.induced(&keep)).unwrap() <= chromatic_number(&g).unwrap());
    }
}

#[test]
fn degeneracy_coloring_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.8);
        let g = random_simple(&mut rng, n, p);
        let c = degeneracy_coloring(&g);
        let (order, d) = degeneracy_order(&g);
        let maxdeg = g.degrees().into_iter().max().unwrap_or(0);
        assert!(c.is_proper(&g));
        assert!(c.num_colors() <= d + 1);
        assert!(d <= maxdeg);
        assert!(chromatic_number(&g).unwrap() <= c.num_colors());
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..n).collect::<Vec<_>>());
    }
    assert!(degeneracy_coloring(&path(9)).num_colors() <= 2);
    for solid in Platonic::ALL {
        let g = platonic(solid);
        let c = degeneracy_coloring(&g);
        assert!(c.is_proper(&g) && c.num_colors() <= 6, "{solid}");
    }
    assert_eq!(degeneracy_order(&platonic(Platonic::Icosahedron)).1, 5);
}

fn product(factors: &[&[i64]]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, f| &acc * &Polynomial::from_ints(f))
}

#[test]
fn chromatic_polynomials_of_small_graphs() {
    let k3 = chromatic_polynomial(&complete(3)).unwrap();
    assert_eq!(k3, ChromaticPolynomial::from_ints(&[0, 2, -3, 1]));
    assert_eq!(k3.to_polynomial(), product(&[&[0, 1], &[-1, 1], &[-2, 1]]));
    assert_eq!(k3.expression(), "x^3 - 3*x^2 + 2*x");
    let c4 = chromatic_polynomial(&cycle(4).unwrap()).unwrap();
    assert_eq!(c4, ChromaticPolynomial::from_ints(&[0, -3, 6, -4, 1]));
    assert_eq!(c4.to_string(), "[0, -3, 6, -4, 1]");
    let c5 = chromatic_polynomial(&cycle(5).unwrap()).unwrap();
    assert_eq!(c5.to_polynomial(), product(&[&[0, 1], &[-1, 1], &[-2, 1], &[2, -2, 1]]));
    assert_eq!(chromatic_polynomial(&empty(4)).unwrap(), ChromaticPolynomial::from_ints(&[0, 0, 0, 0, 1]));
    assert_eq!(chromatic_polynomial(&empty(0)).unwrap(), ChromaticPolynomial::from_ints(&[1]));
    assert_eq!(chromatic_polynomial(&petersen()).unwrap().eval_u64(3), 120.into());
    assert!(chromatic_polynomial(&crate::graph::konigsberg()).is_err());
    assert!(chromatic_polynomial(&complete(7)).is_err());
}

#[test]
fn trees_have_x_times_x_minus_one_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e);
    for n in 1..=10usize {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let t = Graph::simple(n, &edges).unwrap();
        let expect = &Polynomial::from_ints(&[0, 1]) * &Polynomial::from_ints(&[-1, 1]).pow(n as u32 - 1);
        assert_eq!(chromatic_polynomial(&t).unwrap().to_polynomial(), expect);
    }
}

#[test]
fn polynomial_counts_colorings() {
    for g in corpus().into_iter().filter(|g| g.edge_count() <= MAX_DELETION_CONTRACTION_EDGES) {
        let p = chromatic_polynomial(&g).unwrap();
        assert!(p.is_monic() && p.degree() == g.n());
        if g.n() > 0 {
            assert!(p.coeffs()[0] == 0.into());
        }
        for k in 0..=4u64 {
            assert_eq!(p.eval_u64(k), count_colorings(&g, k).unwrap().into(), "{g:?} k={k}");
        }
    }
    assert!(count_colorings(&empty(24), 2).is_err());
    assert_eq!(count_colorings(&empty(0), 0).unwrap(), nat(1));
}

#[test]
fn planarity_bounds() {
    assert_eq!(planar_edge_bound(&complete(5)), PlanarVerdict::ViolatesBound);
    assert_eq!(planar_edge_bound(&complete(4)), PlanarVerdict::Inconclusive);
    assert_eq!(planar_edge_bound(&complete_bipartite(3, 3)), PlanarVerdict::Inconclusive);
    assert_eq!(bipartite_planar_bound(&complete_bipartite(3, 3)), PlanarVerdict::ViolatesBound);
    assert_eq!(bipartite_planar_bound(&complete(5)), PlanarVerdict::Inconclusive);
    let c10 = cycle(10).unwrap();
    assert_eq!(planar_edge_bound(&c10), PlanarVerdict::Inconclusive);
    assert_eq!(bipartite_planar_bound(&c10), PlanarVerdict::Inconclusive);
    assert_eq!(planar_edge_bound(&complete(2)), PlanarVerdict::Inconclusive);
    for solid in Platonic::ALL {
        assert_eq!(planar_edge_bound(&platonic(solid)), PlanarVerdict::Inconclusive);
    }
    assert_eq!(planar_edge_bound(&petersen()), PlanarVerdict::Inconclusive);
}

#[test]
fn euler_formula_on_polyhedra() {
    assert_eq!(euler_characteristic(60, 90, 32), 2);
    assert_eq!(euler_characteristic(1, 0, 1), 2);
    assert_eq!(euler_characteristic(20, 30, 12), 2);
    assert!(POLYHEDRA.iter().all(check_polyhedron));
    for solid in Platonic::ALL {
        let g = platonic(solid);
        let p = polyhedron(solid.name()).unwrap();
        assert_eq!((p.v, p.e, p.f), (g.n() as u64, g.edge_count() as u64, solid.faces() as u64));
    }
    assert_eq!(polyhedron("Soccer").unwrap().v, 60);
    assert!(polyhedron("torus").is_none());
}

fn circle(x: i64, y: i64, r: i64) -> Circle {
    Circle::new(ratio(x, 1), ratio(y, 1), ratio(r, 1)).unwrap()
}

#[test]
fn circle_regions() {
    let q = |x: i64, y: i64| (ratio(x, 2), ratio(y, 2));
    let one = [circle(0, 0, 2)];
    let (x, y) = q(0, 0);
    assert_eq!(circle_region_color(&x, &y, &one).unwrap(), 1);
    let (x, y) = q(10, 0);
    assert_eq!(circle_region_color(&x, &y, &one).unwrap(), 0);
    let (x, y) = q(4, 0);
    assert_eq!(circle_region_color(&x, &y, &one), Err(Error::BoundaryPoint(0)));
    let two = [circle(0, 0, 2), circle(2, 0, 2)];
    let color = |x: i64, y: i64| circle_region_color(&ratio(x, 2), &ratio(y, 2), &two).unwrap();
    assert_eq!(color(2, 0), 0);
    assert_eq!(color(-2, 0), 1);
    assert_eq!(color(6, 0), 1);
    assert_eq!(color(20, 20), 0);
    assert!(Circle::new(ratio(0, 1), ratio(0, 1), ratio(0, 1)).is_err());
}

/// Neighboring grid samples differ in color exactly when an odd number of
/// circles separates them.
#[test]
fn crossing_one_boundary_flips_color() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc1);
    for _ in 0..20 {
        let circles: Vec<Circle> = (0..rng.gen_range(1..=5))
            .map(|_| circle(rng.gen_range(-4..=4), rng.gen_range(-4..=4), rng.gen_range(1..=4)))
            .collect();
        // Samples that land exactly on a circle are skipped.
        let grid: Vec<Vec<Option<(Vec<bool>, u8)>>> = (-15..15)
            .map(|i| {
                (-15..15)
                    .map(|j| {
                        let (x, y) = (ratio(2 * i + 1, 5), ratio(2 * j + 1, 5));
                        let inside: Option<Vec<bool>> = circles
                            .iter()
                            .map(|c| {
                                let s = c.side(&x, &y);
                                (!s.is_zero()).then(|| s.is_negative())
                            })
                            .collect();
                        inside.map(|ins| (ins, circle_region_color(&x, &y, &circles).unwrap()))
                    })
                    .collect()
            })
            .collect();
        for i in 0..grid.len() {
            for j in 0..grid.len() {
                for (a, b) in [(i + 1, j), (i, j + 1)] {
                    let (Some((ia, ca)), Some(Some((ib, cb)))) = (&grid[i][j], grid.get(a).and_then(|r| r.get(b))) else {
                        continue;
                    };
                    let crossed = ia.iter().zip(ib).filter(|(x, y)| x != y).count();
                    assert_eq!(crossed % 2 == 1, ca != cb);
                }
            }
        }
    }
}
