use std::fmt;
use std::thread;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::num::{format_rational, Rational};

use super::{kruskal_mst, WeightedGraph};

/// Largest vertex count for [`brute_force_tour`].
pub const MAX_BRUTE_FORCE_TOUR: usize = 10;

/// Closed vertex sequence, first equal to last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tour {
    pub vertices: Vec<usize>,
    pub cost: Rational,
}

impl Tour {
    fn from_order(g: &WeightedGraph, mut order: Vec<usize>) -> Tour {
        order.push(order[0]);
        let cost = order
            .windows(2)
            .fold(Rational::zero(), |acc, w| acc + g.weight(w[0], w[1]).expect("complete graph"));
        Tour { vertices: order, cost }
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(usize::to_string).collect();
        write!(f, "{} (cost {})", vs.join(" "), format_rational(&self.cost))
    }
}

/// Walks around a minimum spanning tree in depth-first preorder from
/// `start`, children taken by vertex index, skipping repeated vertices.
pub fn tsp_tree_shortcut(g: &WeightedGraph, start: usize) -> Result<Tour> {
    g.require_complete()?;
    let n = g.n();
    if start >= n {
        return Err(invalid(format!("start vertex {start} out of range 0..{n}")));
    }
    let tree = kruskal_mst(g)?.tree;
    let adj = tree.neighbors();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        stack.extend(adj[v].iter().rev().filter(|&&w| !seen[w]));
    }
    Ok(Tour::from_order(g, order))
}

/// Cheapest Hamiltonian cycle starting at 0, by exhaustive search. Among
/// equal costs the lexicographically smallest vertex order wins, so the
/// answer does not depend on `workers`.
pub fn brute_force_tour(g: &WeightedGraph) -> Result<Tour> {
    brute_force_tour_with_workers(g, 1)
}

pub fn brute_force_tour_with_workers(g: &WeightedGraph, workers: usize) -> Result<Tour> {
    g.require_complete()?;
    let n = g.n();
    if n > MAX_BRUTE_FORCE_TOUR {
        return Err(Error::TooLarge { what: "brute-force tour vertex count", limit: MAX_BRUTE_FORCE_TOUR as u64 });
    }
    if n == 0 {
        return Err(invalid("a tour needs at least one vertex"));
    }
    if n <= 2 {
        return Ok(Tour::from_order(g, (0..n).collect()));
    }
    // Common-denominator integers keep the inner loop cheap.
    let denom = g.weights().iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let scaled: Vec<BigInt> = g.weights().iter().map(|w| (w * Rational::from_integer(denom.clone())).to_integer()).collect();
    let bound = i128::MAX / (n as i128 + 1);
    let mut table = vec![0i128; n * n];
    for (id, &(u, v)) in g.graph().edges().iter().enumerate() {
        let x = scaled[id]
            .to_i128()
            .filter(|x| x.abs() <= bound)
            .ok_or(Error::TooLarge { what: "scaled tour weight", limit: u64::MAX })?;
        table[u * n + v] = x;
        table[v * n + u] = x;
    }
    let prune = !g.has_negative_weight();
    let workers = workers.clamp(1, n - 1);
    let seconds: Vec<usize> = (1..n).collect();
    let best = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|k| {
                let mine: Vec<usize> = seconds.iter().copied().skip(k).step_by(workers).collect();
                let table = &table;
                s.spawn(move || {
                    let mut search = Search { n, table, prune, best: None };
                    for second in mine {
                        let mut used = vec![false; n];
                        used[0] = true;
                        used[second] = true;
                        let mut order = vec![0, second];
                        search.extend(&mut order, &mut used, table[second]);
                    }
                    search.best
                })
            })
            .collect();
        handles.into_iter().filter_map(|h| h.join().expect("search thread panicked")).min()
    });
    let (_, order) = best.expect("a complete graph on 3 or more vertices has a tour");
    Ok(Tour::from_order(g, order))
}

struct Search<'a> {
    n: usize,
    table: &'a [i128],
    prune: bool,
    best: Option<(i128, Vec<usize>)>,
}

impl Search<'_> {
    fn extend(&mut self, order: &mut Vec<usize>, used: &mut [bool], cost: i128) {
        if self.prune && self.best.as_ref().is_some_and(|(b, _)| cost >= *b) {
            return;
        }
        let last = *order.last().unwrap();
        if order.len() == self.n {
            let total = cost + self.table[last * self.n];
            if self.best.as_ref().is_none_or(|(b, o)| (total, &*order) < (*b, o)) {
                self.best = Some((total, order.clone()));
            }
            return;
        }
        for w in 1..self.n {
            if used[w] {
                continue;
            }
            used[w] = true;
            order.push(w);
            self.extend(order, used, cost + self.table[last * self.n + w]);
            order.pop();
            used[w] = false;
        }
    }
}
