use std::fmt;
use std::str::FromStr;


use crate::error::{invalid, Error, Result};
use crate::num::{rat_to_nat, Natural};
use crate::poly::Polynomial;

use super::series::TruncatedSeries;

/// Largest degree a finite coin polynomial may reach.
pub const MAX_COIN_DEGREE: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoinLimit {
    Count(u64),
    Unlimited,
}

/// A coin of some value, available up to `limit` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoinSpec {
    value: u64,
    limit: CoinLimit,
}

impl CoinSpec {
    pub fn new(value: u64, limit: CoinLimit) -> Result<Self> {
        if value == 0 {
            return Err(invalid("coin value must be positive"));
        }
        Ok(CoinSpec { value, limit })
    }

    pub fn limited(value: u64, count: u64) -> Result<Self> {
        Self::new(value, CoinLimit::Count(count))
    }

    pub fn unlimited(value: u64) -> Result<Self> {
        Self::new(value, CoinLimit::Unlimited)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn limit(&self) -> CoinLimit {
        self.limit
    }
}

/// `VALUExCOUNT`, with `inf` for an unlimited supply: `25x3`, `1xinf`.
impl FromStr for CoinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (v, c) = s
            .split_once('x')
            .ok_or_else(|| invalid(format!("coin {s:?} is not VALUExCOUNT")))?;
        let value = v.trim().parse().map_err(|_| invalid(format!("bad coin value {v:?}")))?;
        let limit = match c.trim() {
            "inf" => CoinLimit::Unlimited,
            c => CoinLimit::Count(c.parse().map_err(|_| invalid(format!("bad coin count {c:?}")))?),
        };
        Self::new(value, limit)
    }
}

impl fmt::Display for CoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.limit {
            CoinLimit::Count(c) => write!(f, "{}x{c}", self.value),
            CoinLimit::Unlimited => write!(f, "{}xinf", self.value),
        }
    }
}

/// Product of `1 + x^k + ... + x^{nk}` over the coins. Only for limited
/// coins; see [`coin_change_series`] otherwise.
pub fn coin_change_poly(coins: &[CoinSpec]) -> Result<Polynomial> {
    let mut degree = 0u64;
    for c in coins {
        let CoinLimit::Count(n) = c.limit else {
            return Err(invalid("unlimited coins need a truncation order"));
        };
        degree = c
            .value
            .checked_mul(n)
            .and_then(|d| d.checked_add(degree))
            .filter(|&d| d <= MAX_COIN_DEGREE)
            .ok_or(Error::TooLarge { what: "coin polynomial degree", limit: MAX_COIN_DEGREE })?;
    }
    Ok(coin_change_series(coins, degree as usize).to_polynomial())
}

/// The coin product truncated at `order`.
pub fn coin_change_series(coins: &[CoinSpec], order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for c in coins {
        let count = match c.limit {
            CoinLimit::Count(n) => Some(n),
            CoinLimit::Unlimited => None,
        };
        match usize::try_from(c.value) {
            Ok(k) if k <= order => s.mul_geometric_block(k, count),
            _ => {}
        }
    }
    s
}

/// Number of ways to pay exactly `amount`.
pub fn ways_to_pay(coins: &[CoinSpec], amount: usize) -> Natural {
    let s = coin_change_series(coins, amount);
    rat_to_nat(s.coeff(amount)).expect("coin counts are natural numbers")
}

/// `Π_{k=1..order} 1/(1-x^k)` through `x^order`.
pub fn partition_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_geometric_block(k, None);
    }
    s
}

/// Partitions of `n`, read from the product truncated at `order >= n`.
pub fn partition_count(n: usize, order: usize) -> Result<Natural> {
    if order < n {
        return Err(invalid(format!("truncation order {order} is below {n}")));
    }
    Ok(rat_to_nat(partition_series(order).coeff(n)).unwrap())
}

/// `Π (1 + x^k)`: partitions into distinct parts.
pub fn distinct_parts_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        s.mul_geometric_block(k, Some(1));
    }
    s
}

/// `Π_{k odd} 1/(1 - x^k)`: partitions into odd parts.
pub fn odd_parts_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in (1..=order).step_by(2) {
        s.mul_geometric_block(k, None);
    }
    s
}
