//! Truncated power series, rational generating functions, partial
//! fractions, coin products and partition counts.

mod coins;
mod rational;
mod series;

pub use crate::poly::Polynomial;
pub use coins::{
    coin_change_poly, coin_change_series, distinct_parts_series, odd_parts_series, partition_count,
    partition_series, ways_to_pay, CoinLimit, CoinSpec, MAX_COIN_DEGREE,
};
pub use rational::{expand_rational, partial_fractions, recurrence_to_gf, PartialFractions, RationalGF};
pub use series::{integer_coeffs, series_add, series_mul, series_sub, TruncatedSeries};

use crate::error::Result;
use crate::num::rat;

/// `(1 - sqrt(1 - 4x)) / (2x)` through `x^order`.
pub fn catalan_gf(order: usize) -> TruncatedSeries {
    let root = TruncatedSeries::from_ints(&[1, -4], order + 1)
        .sqrt()
        .expect("constant term is 1");
    let coeffs = root.coeffs()[1..].iter().map(|s| -s / rat(2)).collect();
    TruncatedSeries::new(coeffs, order)
}

pub fn series_sqrt(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::catalan_table;
    use crate::num::rat_from_nat;

    #[test]
    fn catalan_coefficients() {
        let c = catalan_gf(12);
        let want = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(*c.coeff(n), rat(*w));
        }
        assert_eq!(*c.coeff(12), rat(208012));
        for (n, v) in catalan_table(40).iter().enumerate() {
            assert_eq!(*catalan_gf(40).coeff(n), rat_from_nat(v));
        }
        assert_eq!(catalan_gf(0).coeffs(), &[rat(1)]);
    }
}
