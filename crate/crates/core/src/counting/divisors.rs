use num_traits::One;

use crate::error::{invalid, Result};
use crate::num::{nat, Natural};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl DivisorProfile {
    /// Factors `n` by trial division. Rejects zero.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("divisor functions are undefined at 0"));
        }
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
            p += 1;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(DivisorProfile { n, factors })
    }

    /// Validates a caller-supplied factorization.
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut n = 1u64;
        for (i, &(p, e)) in factors.iter().enumerate() {
            if !is_prime(p) || e == 0 {
                return Err(invalid(format!("bad factor {p}^{e}")));
            }
            if i > 0 && factors[i - 1].0 >= p {
                return Err(invalid("primes must be strictly increasing"));
            }
            n = p
                .checked_pow(e)
                .and_then(|q| n.checked_mul(q))
                .ok_or_else(|| invalid("factorization overflows u64"))?;
        }
        Ok(DivisorProfile { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }
}

/// Number of positive divisors, `Π (e_i + 1)`.
pub fn sigma0(p: &DivisorProfile) -> Natural {
    p.factors.iter().map(|&(_, e)| nat(u64::from(e) + 1)).product()
}

/// Sum of positive divisors, `Π (p^(e+1) - 1)/(p - 1)`.
pub fn sigma1(p: &DivisorProfile) -> Natural {
    p.factors
        .iter()
        .map(|&(q, e)| (nat(q).pow(e + 1) - Natural::one()) / (q - 1))
        .product()
}

/// Möbius function: 0 if a square divides `n`, else `(-1)^(number of primes)`.
pub fn mobius(p: &DivisorProfile) -> i8 {
    if p.factors.iter().any(|&(_, e)| e >= 2) {
        0
    } else if p.factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
