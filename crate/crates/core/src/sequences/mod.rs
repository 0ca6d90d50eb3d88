//! Recursively defined sequences: Fibonacci and Lucas numbers, staircases,
//! the Tower of Hanoi, plane regions, and general constant-coefficient linear
//! recurrences with their characteristic polynomials.

mod closed_form;

pub use closed_form::{solve_recurrence, ClosedForm, TAU_MATCH, TAU_ROOT};
pub(crate) use closed_form::polynomial_roots;

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::num::{nat, rat, Natural, Rational};
use crate::poly::Polynomial;

pub fn fibonacci(n: u64) -> Natural {
    let (mut a, mut b) = (Natural::zero(), Natural::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Lucas numbers, `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: u64) -> Natural {
    let (mut a, mut b) = (nat(2), Natural::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Largest index for which Binet's formula in double precision still
/// rounds to the exact Fibonacci number.
pub const BINET_MAX_N: u64 = 70;

/// `(φ^n - ψ^n)/√5` in double precision.
pub fn fibonacci_binet(n: u64) -> Result<f64> {
    if n > BINET_MAX_N {
        return Err(Error::TooLarge { what: "Binet index", limit: BINET_MAX_N });
    }
    let sqrt5 = 5f64.sqrt();
    let phi = (1.0 + sqrt5) / 2.0;
    let psi = (1.0 - sqrt5) / 2.0;
    Ok((phi.powi(n as i32) - psi.powi(n as i32)) / sqrt5)
}

/// Allowed step sizes for climbing a staircase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StairRule {
    steps: BTreeSet<u64>,
}

impl StairRule {
    pub fn new(steps: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for s in steps {
            if s == 0 {
                return Err(invalid("step sizes must be positive"));
            }
            if !set.insert(s) {
                return Err(invalid(format!("step size {s} repeated")));
            }
        }
        if set.is_empty() {
            return Err(invalid("at least one step size is required"));
        }
        Ok(StairRule { steps: set })
    }

    pub fn steps(&self) -> impl Iterator<Item = u64> + '_ {
        self.steps.iter().copied()
    }
}

/// Ordered compositions of `n` into the rule's step sizes. The empty climb
/// counts once, so `stair_ways(0, _) = 1`.
pub fn stair_ways(n: u64, rule: &StairRule) -> Natural {
    let n = n as usize;
    let mut ways: Vec<Natural> = vec![Natural::zero(); n + 1];
    ways[0] = Natural::one();
    for i in 1..=n {
        let mut total = Natural::zero();
        for s in rule.steps() {
            if let Some(j) = i.checked_sub(s as usize) {
                total += &ways[j];
            }
        }
        ways[i] = total;
    }
    ways.pop().unwrap()
}

/// `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` seeded with `a_s, ..., a_{s+d-1}`
/// where `s` is the start index (1 by default, 0 for zero-indexed seeds).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    coeffs: Vec<Rational>,
    initial: Vec<Rational>,
    start: u64,
}

impl LinearRecurrence {
    /// One-indexed recurrence: `initial[i]` is `a_{i+1}`.
    pub fn new(coeffs: Vec<Rational>, initial: Vec<Rational>) -> Result<Self> {
        Self::with_start(coeffs, initial, 1)
    }

    pub fn with_start(coeffs: Vec<Rational>, initial: Vec<Rational>, start: u64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("a recurrence needs order at least 1"));
        }
        if coeffs.last().unwrap().is_zero() {
            return Err(invalid("the last coefficient c_d must be nonzero"));
        }
        if initial.len() != coeffs.len() {
            return Err(invalid(format!(
                "order {} recurrence needs {} initial values, got {}",
                coeffs.len(),
                coeffs.len(),
                initial.len()
            )));
        }
        Ok(LinearRecurrence { coeffs, initial, start })
    }

    /// Integer convenience constructor.
    pub fn from_ints(coeffs: &[i64], initial: &[i64], start: u64) -> Result<Self> {
        Self::with_start(
            coeffs.iter().map(|&c| rat(c)).collect(),
            initial.iter().map(|&c| rat(c)).collect(),
            start,
        )
    }

    /// `F_0 = 0, F_1 = 1`.
    pub fn fibonacci() -> Self {
        Self::from_ints(&[1, 1], &[0, 1], 0).unwrap()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    /// Terms `a_start ..= a_last` by direct iteration.
    pub fn terms(&self, last: u64) -> Result<Vec<Rational>> {
        if last < self.start {
            return Err(invalid(format!("index {last} precedes the first term a_{}", self.start)));
        }
        let count = (last - self.start + 1) as usize;
        let mut out: Vec<Rational> = self.initial.iter().take(count).cloned().collect();
        while out.len() < count {
            let k = out.len();
            let next = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * &out[k - 1 - i])
                .fold(Rational::zero(), |acc, t| acc + t);
            out.push(next);
        }
        Ok(out)
    }

    /// `a_n` by iteration in exact arithmetic.
    pub fn iterate(&self, n: u64) -> Result<Rational> {
        Ok(self.terms(n)?.pop().unwrap())
    }

    /// `x^d - c_1 x^{d-1} - ... - c_d`
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let d = self.order();
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - 1 - i] = -c;
        }
        Polynomial::new(coeffs)
    }
}

pub fn iterate_recurrence(rec: &LinearRecurrence, n: u64) -> Result<Rational> {
    rec.iterate(n)
}

pub fn characteristic_polynomial(rec: &LinearRecurrence) -> Polynomial {
    rec.characteristic_polynomial()
}

/// Minimum number of moves for `n` disks, `2^n - 1`.
pub fn hanoi_count(n: u64) -> Natural {
    (Natural::one() << n) - Natural::one()
}

/// One move of the Tower of Hanoi: disk 1 is the smallest, pegs are 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HanoiMove {
    pub disk: u32,
    pub from: u8,
    pub to: u8,
}

pub const HANOI_MAX_LISTED: u32 = 12;

/// Optimal move sequence taking every disk from peg 0 to peg 2.
pub fn hanoi_moves(n: u32) -> Result<Vec<HanoiMove>> {
    if n > HANOI_MAX_LISTED {
        return Err(Error::TooLarge { what: "disk count for move listing", limit: HANOI_MAX_LISTED as u64 });
    }
    fn go(k: u32, from: u8, to: u8, via: u8, out: &mut Vec<HanoiMove>) {
        if k == 0 {
            return;
        }
        go(k - 1, from, via, to, out);
        out.push(HanoiMove { disk: k, from, to });
        go(k - 1, via, to, from, out);
    }
    let mut out = Vec::with_capacity((1usize << n) - 1);
    go(n, 0, 2, 1, &mut out);
    Ok(out)
}

/// Regions cut out of the plane by `n` lines in general position: `(n^2 + n + 2)/2`.
pub fn plane_regions(n: u64) -> Natural {
    (nat(n) * nat(n) + nat(n) + nat(2)) / nat(2)
}

/// Same count through `P_n = P_{n-1} + n`, `P_0 = 1`.
pub fn plane_regions_recursive(n: u64) -> Natural {
    (1..=n).fold(Natural::one(), |acc, k| acc + k)
}

/// Regions formed by `n ≥ 1` circles in general position: `n^2 - n + 2`.
pub fn circle_regions(n: u64) -> Result<Natural> {
    if n == 0 {
        return Err(invalid("circle_regions is defined for n >= 1"));
    }
    Ok(nat(n) * nat(n) - nat(n) + nat(2))
}
