use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;

use crate::error::{invalid, Error, Result};

/// Most edges a brute-force Ramsey search will enumerate colorings for.
pub const MAX_RAMSEY_EDGES: usize = 21;

/// A red/blue (0/1) coloring of the edges of `K_n`, listed in
/// lexicographic pair order `(0,1), (0,2), ..., (n-2,n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring2 {
    n: usize,
    colors: Vec<u8>,
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = (u.min(v), u.max(v));
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

impl EdgeColoring2 {
    pub fn new(n: usize, colors: Vec<u8>) -> Result<Self> {
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(invalid(format!("K_{n} has {} edges, got {} colors", n * n.saturating_sub(1) / 2, colors.len())));
        }
        if colors.iter().any(|&c| c > 1) {
            return Err(invalid("colors must be 0 or 1"));
        }
        Ok(EdgeColoring2 { n, colors })
    }

    pub fn from_fn(n: usize, mut color: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let colors = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>();
        Self::new(n, colors.into_iter().map(|(u, v)| color(u, v)).collect())
    }

    /// Bit `i` of `bits` colors pair number `i`.
    fn from_bits(n: usize, bits: u64) -> Self {
        let m = n * n.saturating_sub(1) / 2;
        EdgeColoring2 { n, colors: (0..m).map(|i| (bits >> i & 1) as u8).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> u8 {
        self.colors[pair_index(self.n, u, v)]
    }
}

impl fmt::Display for EdgeColoring2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.colors.iter().map(|c| char::from(b'0' + c)).collect();
        f.write_str(&s)
    }
}

/// `K_5` with the pentagon `i -- i+1` in color 0 and the pentagram in color 1.
pub fn pentagon_coloring() -> EdgeColoring2 {
    EdgeColoring2::from_fn(5, |u, v| if (v - u) % 5 == 1 || (v - u) % 5 == 4 { 0 } else { 1 }).unwrap()
}

/// First `m`-vertex clique (in lexicographic vertex order) whose edges all
/// have `color`. Cliques with fewer than two vertices have no edges and so
/// count for either color.
pub fn mono_clique(c: &EdgeColoring2, m: usize, color: u8) -> Option<Vec<usize>> {
    let mut pick = Vec::with_capacity(m);
    fn grow(c: &EdgeColoring2, m: usize, color: u8, from: usize, pick: &mut Vec<usize>) -> bool {
        if pick.len() == m {
            return true;
        }
        for v in from..c.n {
            if pick.iter().all(|&u| c.color(u, v) == color) {
                pick.push(v);
                if grow(c, m, color, v + 1, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    grow(c, m, color, 0, &mut pick).then_some(pick)
}

/// Edge masks of all `m`-cliques of `K_n`, bit `i` for pair number `i`.
fn clique_masks(n: usize, m: usize) -> Vec<u64> {
    fn go(n: usize, m: usize, from: usize, pick: &mut Vec<usize>, out: &mut Vec<u64>) {
        if pick.len() == m {
            let mut mask = 0u64;
            for (i, &u) in pick.iter().enumerate() {
                for &v in &pick[i + 1..] {
                    mask |= 1 << pair_index(n, u, v);
                }
            }
            out.push(mask);
            return;
        }
        for v in from..n {
            pick.push(v);
            go(n, m, v + 1, pick, out);
            pick.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, 0, &mut Vec::new(), &mut out);
    out
}

/// First coloring of `K_n` (counting colorings as binary numbers) with no
/// color-0 `m0`-clique and no color-1 `m1`-clique. Work is split into
/// `workers` contiguous ranges; the smallest witness is reported either way.
pub fn ramsey_counterexample(n: usize, m0: usize, m1: usize, workers: usize) -> Result<Option<EdgeColoring2>> {
    if m0 == 0 || m1 == 0 {
        return Err(invalid("clique sizes must be positive"));
    }
    let edges = n * n.saturating_sub(1) / 2;
    if edges > MAX_RAMSEY_EDGES {
        return Err(Error::TooLarge { what: "Ramsey search edge count", limit: MAX_RAMSEY_EDGES as u64 });
    }
    let (masks0, masks1) = (clique_masks(n, m0), clique_masks(n, m1));
    let avoids = |bits: u64| masks0.iter().all(|&k| bits & k != 0) && masks1.iter().all(|&k| bits & k != k);
    let total = 1u64 << edges;
    let workers = (workers.max(1) as u64).min(total);
    let best = AtomicU64::new(u64::MAX);
    thread::scope(|s| {
        for k in 0..workers {
            let (lo, hi) = (total * k / workers, total * (k + 1) / workers);
            let (avoids, best) = (&avoids, &best);
            s.spawn(move || {
                for bits in lo..hi {
                    if bits >= best.load(Ordering::Relaxed) {
                        return;
                    }
                    if avoids(bits) {
                        best.fetch_min(bits, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    let found = best.into_inner();
    Ok((found != u64::MAX).then(|| EdgeColoring2::from_bits(n, found)))
}

/// Every 2-coloring of `K_n` has a color-0 `m0`-clique or a color-1 `m1`-clique.
pub fn ramsey_holds(n: usize, m0: usize, m1: usize) -> Result<bool> {
    Ok(ramsey_counterexample(n, m0, m1, 1)?.is_none())
}

pub fn ramsey_holds_with_workers(n: usize, m0: usize, m1: usize, workers: usize) -> Result<bool> {
    Ok(ramsey_counterexample(n, m0, m1, workers)?.is_none())
}

/// Smallest `n <= cap` for which [`ramsey_holds`]; `CapExceeded` otherwise.
pub fn ramsey_number(m0: usize, m1: usize, cap: usize, workers: usize) -> Result<usize> {
    for n in 0..=cap {
        if ramsey_counterexample(n, m0, m1, workers)?.is_none() {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded(cap as u64))
}
