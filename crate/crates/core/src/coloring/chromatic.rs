use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::num::{Integer, Natural, Rational};
use crate::poly::Polynomial;

/// Most edges [`chromatic_polynomial`] will recurse over.
pub const MAX_DELETION_CONTRACTION_EDGES: usize = 18;

/// Largest `k^n` that [`count_colorings`] enumerates.
pub const MAX_BRUTE_FORCE_COLORINGS: u64 = 10_000_000;

/// Integer coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChromaticPolynomial {
    coeffs: Vec<Integer>,
}

impl ChromaticPolynomial {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ChromaticPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); n + 1];
        coeffs[n] = Integer::one();
        ChromaticPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * x + c)
    }

    /// Number of proper colorings from `k` colors.
    pub fn eval_u64(&self, k: u64) -> Integer {
        self.eval(&Integer::from(k))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Conventional form, e.g. `x^3 - 3*x^2 + 2*x`.
    pub fn expression(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.abs();
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            out.push_str(&match (k, a.is_one()) {
                (0, _) => a.to_string(),
                (_, true) => power,
                _ => format!("{a}*{power}"),
            });
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn sub(mut self, other: &ChromaticPolynomial) -> Self {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Integer::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Self::new(self.coeffs)
    }
}

/// Prints the coefficient list, lowest degree first.
impl fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(Integer::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Deletion-contraction: `P(G) = P(G - e) - P(G / e)`, down to edgeless
/// graphs where `P = x^n`. Contraction drops the parallel edges it creates.
pub fn chromatic_polynomial(g: &Graph) -> Result<ChromaticPolynomial> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if g.edge_count() > MAX_DELETION_CONTRACTION_EDGES {
        return Err(Error::TooLarge { what: "deletion-contraction edge count", limit: MAX_DELETION_CONTRACTION_EDGES as u64 });
    }
    Ok(delete_contract(g.n(), g.edges().iter().copied().collect()))
}

fn delete_contract(n: usize, mut edges: BTreeSet<(usize, usize)>) -> ChromaticPolynomial {
    let Some((u, v)) = edges.pop_last() else {
        return ChromaticPolynomial::x_pow(n);
    };
    let relabel = |x: usize| match x {
        x if x == v => u,
        x if x > v => x - 1,
        x => x,
    };
    let merged: BTreeSet<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            (a.min(b), a.max(b))
        })
        .collect();
    let contracted = delete_contract(n - 1, merged);
    delete_contract(n, edges).sub(&contracted)
}

/// Proper colorings of `g` from `k` colors, by trying all `k^n` assignments.
pub fn count_colorings(g: &Graph, k: u64) -> Result<Natural> {
    let n = g.n();
    let total = u32::try_from(n).ok().and_then(|n| k.checked_pow(n)).filter(|&t| t <= MAX_BRUTE_FORCE_COLORINGS);
    let Some(total) = total else {
        return Err(Error::TooLarge { what: "brute-force coloring count k^n", limit: MAX_BRUTE_FORCE_COLORINGS });
    };
    let mut colors = vec![0u64; n];
    let mut count = 0u64;
    for _ in 0..total {
        if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
            count += 1;
        }
        for c in colors.iter_mut() {
            *c += 1;
            if *c < k {
                break;
            }
            *c = 0;
        }
    }
    Ok(Natural::from(count))
}
