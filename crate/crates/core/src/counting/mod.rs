//! Exact counting: factorials, binomials, selections, multinomials,
//! inclusion-exclusion, derangements, Catalan numbers.

mod divisors;
mod poker;

pub use divisors::{divisors, is_prime, mobius, sigma0, sigma1, DivisorProfile};
pub use poker::{poker_count, PokerHand};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::num::{nat, Natural, Rational};

pub fn factorial(n: u64) -> Natural {
    (2..=n).fold(Natural::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(Natural::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `alpha (alpha-1) ... (alpha-k+1) / k!` for any rational `alpha`.
pub fn generalized_binomial(alpha: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (alpha - Rational::from_integer(BigInt::from(i))) / Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Number of ordered selections of `k` distinct items from `n`: `n!/(n-k)!`.
pub fn falling_factorial(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(invalid(format!("falling factorial needs k <= n (got n={n}, k={k})")));
    }
    Ok((n - k + 1..=n).fold(Natural::one(), |acc, i| acc * i))
}

/// One cell of the ordered/unordered by repeats/no-repeats table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SelectionMode {
    pub ordered: bool,
    pub repeats: bool,
}

impl SelectionMode {
    pub const SEQUENCES: SelectionMode = SelectionMode { ordered: true, repeats: true };
    pub const ORDERED_SUBSETS: SelectionMode = SelectionMode { ordered: true, repeats: false };
    pub const SUBSETS: SelectionMode = SelectionMode { ordered: false, repeats: false };
    pub const MULTISETS: SelectionMode = SelectionMode { ordered: false, repeats: true };
}

/// Ways to choose `k` objects from `n` kinds under `mode`.
pub fn selection_count(n: u64, k: u64, mode: SelectionMode) -> Natural {
    match (mode.ordered, mode.repeats) {
        (true, true) => nat(n).pow(k as u32),
        (true, false) => falling_factorial(n, k).unwrap_or_else(|_| Natural::zero()),
        (false, false) => binomial(n, k),
        (false, true) => {
            if n == 0 {
                // Only the empty multiset draws from nothing.
                if k == 0 { Natural::one() } else { Natural::zero() }
            } else {
                binomial(n + k - 1, k)
            }
        }
    }
}

/// `(k1 + ... + km)! / (k1! ... km!)`
pub fn multinomial(parts: &[u64]) -> Natural {
    // Product of binomials avoids the large intermediate factorial.
    let mut total = 0u64;
    let mut acc = Natural::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Number of distinct rearrangements of the letters of `word`.
pub fn anagram_count(word: &str) -> Result<Natural> {
    if word.is_empty() {
        return Err(invalid("anagram_count needs a nonempty word"));
    }
    let mut counts: BTreeMap<char, u64> = BTreeMap::new();
    for c in word.chars() {
        *counts.entry(c).or_default() += 1;
    }
    let parts: Vec<u64> = counts.into_values().collect();
    Ok(multinomial(&parts))
}

pub fn subset_count(n: u64) -> Natural {
    Natural::one() << n
}

/// Subsets of an `n`-set with an even number of elements.
pub fn even_subset_count(n: u64) -> Natural {
    if n == 0 { Natural::one() } else { Natural::one() << (n - 1) }
}

/// Monotone lattice paths with `right` unit steps east and `up` steps north.
pub fn lattice_path_count(right: u64, up: u64) -> Natural {
    binomial(right + up, up)
}

/// Rows `0..=n_max` of Pascal's triangle, built by the addition recurrence.
pub fn pascal_rows(n_max: usize) -> Vec<Vec<Natural>> {
    let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Natural::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(Natural::one());
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(Natural::one());
        rows.push(row);
    }
    rows
}

/// Row `n` of Pascal's triangle reduced mod `m`.
pub fn pascal_row_mod(n: usize, m: u64) -> Result<Vec<u64>> {
    if m < 2 {
        return Err(invalid(format!("modulus must be at least 2 (got {m})")));
    }
    let mut row = vec![1 % m];
    for i in 1..=n {
        let mut next = vec![1 % m; i + 1];
        for k in 1..i {
            next[k] = (row[k - 1] + row[k]) % m;
        }
        row = next;
    }
    Ok(row)
}

/// `|A ∪ B| = |A| + |B| - |A ∩ B|`
pub fn union_count_2(a: u64, b: u64, ab: u64) -> Result<Natural> {
    signed_total(&[a as i128, b as i128, -(ab as i128)])
}

/// Three-set inclusion-exclusion. Arguments are `|A|, |B|, |C|, |A∩B|,
/// |A∩C|, |B∩C|, |A∩B∩C|`.
#[allow(clippy::too_many_arguments)]
pub fn union_count_3(a: u64, b: u64, c: u64, ab: u64, ac: u64, bc: u64, abc: u64) -> Result<Natural> {
    let terms = [a, b, c].map(i128::from);
    let pairs = [ab, ac, bc].map(|x| -i128::from(x));
    signed_total(&[terms[0], terms[1], terms[2], pairs[0], pairs[1], pairs[2], abc as i128])
}

fn signed_total(terms: &[i128]) -> Result<Natural> {
    let total: i128 = terms.iter().sum();
    u128::try_from(total)
        .map(Natural::from)
        .map_err(|_| Error::Inconsistent(total.to_string()))
}

/// Count of `1..=n` with no factor among `primes`, by inclusion-exclusion
/// over every subset of the primes. Each prime must divide `n`.
pub fn coprime_count(n: u64, primes: &[u64]) -> Result<Natural> {
    if n == 0 {
        return Err(invalid("coprime_count needs N >= 1"));
    }
    for (i, &p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(invalid(format!("{p} is not prime")));
        }
        if primes[..i].contains(&p) {
            return Err(invalid(format!("prime {p} listed twice")));
        }
        if !n.is_multiple_of(p) {
            return Err(invalid(format!("{p} does not divide {n}")));
        }
    }
    if primes.len() > 20 {
        return Err(Error::TooLarge { what: "prime list", limit: 20 });
    }
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << primes.len()) {
        let prod: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| *p)
            .product();
        let term = BigInt::from(n / prod);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total.to_biguint().expect("inclusion-exclusion over divisors is nonnegative"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerangementMethod {
    /// `D_n = (n-1)(D_{n-1} + D_{n-2})`
    ProductRecurrence,
    /// `D_n = n D_{n-1} + (-1)^n`
    AffineRecurrence,
    /// `D_n = n! Σ_{i=0..n} (-1)^i / i!`
    ClosedForm,
}

/// Permutations of `n` objects with no fixed point. `D_0 = 1`.
pub fn derangement(n: u64, method: DerangementMethod) -> Natural {
    match method {
        DerangementMethod::ProductRecurrence => {
            let (mut prev, mut cur) = (Natural::one(), Natural::zero());
            if n == 0 {
                return prev;
            }
            for k in 2..=n {
                let next = (&cur + &prev) * (k - 1);
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
        DerangementMethod::AffineRecurrence => {
            let mut d = BigInt::one();
            for k in 1..=n {
                d = d * k + if k % 2 == 0 { 1 } else { -1 };
            }
            d.to_biguint().expect("derangement counts are nonnegative")
        }
        DerangementMethod::ClosedForm => {
            // n!/i! is an integer, so the alternating sum stays integral.
            let mut total = BigInt::zero();
            let mut tail = BigInt::one(); // n!/i! for i = n
            for i in (0..=n).rev() {
                if i % 2 == 0 {
                    total += &tail;
                } else {
                    total -= &tail;
                }
                tail *= i.max(1);
            }
            total.to_biguint().expect("derangement counts are nonnegative")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanMethod {
    /// `C_{n+1} = Σ C_k C_{n-k}`
    Recursion,
    /// `C(2n, n) / (n+1)`
    ClosedForm,
}

pub fn catalan(n: u64, method: CatalanMethod) -> Natural {
    match method {
        CatalanMethod::ClosedForm => binomial(2 * n, n) / (n + 1),
        CatalanMethod::Recursion => catalan_table(n as usize).pop().unwrap(),
    }
}

/// `C_0 ..= C_n` by the convolution recursion.
pub fn catalan_table(n: usize) -> Vec<Natural> {
    let mut c: Vec<Natural> = vec![Natural::one()];
    for m in 1..=n {
        let next = (0..m).map(|k| &c[k] * &c[m - 1 - k]).sum();
        c.push(next);
    }
    c
}

/// `|D_n - n!/e| < 1/2`, checked with exact rationals. `1/e` is bracketed by
/// consecutive partial sums of `Σ (-1)^i / i!` taken well past `n`.
pub fn derangement_rounds_factorial_over_e(n: u64) -> bool {
    let terms = n + 30;
    let mut lower = Rational::zero();
    let mut upper = Rational::zero();
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    for i in 0..=terms {
        if i > 0 {
            term /= Rational::from_integer(BigInt::from(i));
        }
        if i % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        if i == terms - 1 {
            lower = sum.clone();
        }
        if i == terms {
            upper = sum.clone();
        }
    }
    if lower > upper {
        std::mem::swap(&mut lower, &mut upper);
    }
    let f = Rational::from_integer(BigInt::from(factorial(n)));
    let d = Rational::from_integer(BigInt::from(derangement(n, DerangementMethod::ClosedForm)));
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    (&d - &f * &lower).abs() < half && (&d - &f * &upper).abs() < half
}
