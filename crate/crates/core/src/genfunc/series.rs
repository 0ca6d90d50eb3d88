use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::num::{format_rational, rat, Rational};
use crate::poly::Polynomial;

/// A formal power series known through `x^order`: exactly `order + 1`
/// exact coefficients `a_0 ..= a_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms so that exactly `order + 1` remain.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    /// `1 + x + x^2 + ... = 1/(1-x)`
    pub fn geometric(order: usize) -> Self {
        Self::new(vec![Rational::one(); order + 1], order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for n in k..=order {
            coeffs[n] = self.coeffs[n - k].clone();
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Term-by-term derivative `Σ (n+1) a_{n+1} x^n`, known one order less.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(invalid("the derivative of an order-0 series is unknown"));
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(n, a)| a * rat(n as i64 + 1))
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// `A(c x^m)`: coefficient of `x^{mn}` becomes `a_n c^n`, truncated at the
    /// same order.
    pub fn substitute_monomial(&self, c: &Rational, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(invalid("substituting a constant into a power series is not defined"));
        }
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut power = Rational::one();
        for (n, a) in self.coeffs.iter().enumerate() {
            let Some(target) = n.checked_mul(m).filter(|&t| t <= order) else { break };
            coeffs[target] = a * &power;
            power *= c;
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(invalid("series with zero constant term has no inverse"));
        }
        let order = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        out.push(Rational::one() / a0);
        for n in 1..=order {
            let acc = (1..=n).fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &out[n - i]);
            out.push(-acc / a0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// The square root with constant term `+1`; needs `a_0 = 1`.
    /// Coefficients follow from `2 s_n = a_n - Σ_{0<i<n} s_i s_{n-i}`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(invalid("series square root needs constant term 1"));
        }
        let two = rat(2);
        let mut s: Vec<Rational> = vec![Rational::one()];
        for n in 1..=self.order() {
            let cross = (1..n).fold(Rational::zero(), |acc, i| acc + &s[i] * &s[n - i]);
            s.push((&self.coeffs[n] - cross) / &two);
        }
        Ok(TruncatedSeries { coeffs: s })
    }

    /// Multiplies by `1 + x^k + x^{2k} + ... + x^{count k}` in place, or by
    /// `1/(1 - x^k)` when `count` is `None`.
    pub(crate) fn mul_geometric_block(&mut self, k: usize, count: Option<u64>) {
        let order = self.order();
        match count {
            None => {
                for n in k..=order {
                    let prev = self.coeffs[n - k].clone();
                    self.coeffs[n] += prev;
                }
            }
            Some(c) => {
                let src = self.coeffs.clone();
                for n in 0..=order {
                    let mut acc = Rational::zero();
                    let mut i = 0u64;
                    while i <= c {
                        let Some(off) = (i as usize).checked_mul(k).filter(|&o| o <= n) else { break };
                        acc += &src[n - off];
                        i += 1;
                    }
                    self.coeffs[n] = acc;
                }
            }
        }
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_order(b)?;
    Ok(TruncatedSeries { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() })
}

pub fn series_sub(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_order(b)?;
    Ok(TruncatedSeries { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() })
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_order(b)?;
    let order = a.order();
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs[..=order - i].iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    Ok(TruncatedSeries { coeffs })
}

/// Prints `a0 + a1*x + ... + aT*x^T + O(x^{T+1})` with every coefficient
/// through the order, signs folded into the separators.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            let body = format_rational(&c.abs());
            if n == 0 {
                write!(f, "{}{body}", if c.is_negative() { "-" } else { "" })?;
            } else {
                write!(f, " {} {body}", if c.is_negative() { '-' } else { '+' })?;
            }
            match n {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{n}")?,
            }
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Coefficients of a series known to be integral.
pub fn integer_coeffs(s: &TruncatedSeries) -> Option<Vec<BigInt>> {
    s.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{binomial, generalized_binomial};
    use crate::num::ratio;
    use proptest::prelude::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        integer_coeffs(s).unwrap().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn geometric_products() {
        let g = TruncatedSeries::geometric(6);
        let sq = series_mul(&g, &g).unwrap();
        assert_eq!(ints(&sq), vec![1, 2, 3, 4, 5, 6, 7]);
        let one_minus_x = TruncatedSeries::from_ints(&[1, -1], 6);
        assert_eq!(series_mul(&g, &one_minus_x).unwrap(), TruncatedSeries::one(6));
        assert_eq!(series_add(&g, &TruncatedSeries::zero(6)).unwrap(), g);
        assert_eq!(
            series_mul(&g, &TruncatedSeries::geometric(5)),
            Err(Error::OrderMismatch { left: 6, right: 5 })
        );
    }

    #[test]
    fn shift_and_scale() {
        let g = TruncatedSeries::geometric(5);
        assert_eq!(ints(&g.shift(1)), vec![0, 1, 1, 1, 1, 1]);
        assert_eq!(g.shift(0), g);
        assert_eq!(ints(&g.shift(2).scale(&rat(2))), vec![0, 0, 2, 2, 2, 2]);
        assert_eq!(ints(&g.shift(9)), vec![0; 6]);
    }

    #[test]
    fn derivatives() {
        let g = TruncatedSeries::geometric(8);
        let dg = g.derivative().unwrap();
        assert_eq!(dg.order(), 7);
        assert_eq!(ints(&dg), (1..=8).collect::<Vec<_>>());
        assert_eq!(ints(&TruncatedSeries::from_ints(&[5], 3).derivative().unwrap()), vec![0, 0, 0]);
        // d/dx (1-x)^-2 term by term: coefficient n is (n+1)(n+2)
        let d2 = dg.derivative().unwrap();
        for n in 0..d2.order() {
            assert_eq!(*d2.coeff(n), rat(((n + 1) * (n + 2)) as i64));
        }
        assert!(TruncatedSeries::one(0).derivative().is_err());
    }

    #[test]
    fn monomial_substitution() {
        let g = TruncatedSeries::geometric(5);
        assert_eq!(ints(&g.substitute_monomial(&rat(2), 1).unwrap()), vec![1, 2, 4, 8, 16, 32]);
        assert_eq!(ints(&g.substitute_monomial(&rat(1), 2).unwrap()), vec![1, 0, 1, 0, 1, 0]);
        assert_eq!(g.substitute_monomial(&rat(1), 1).unwrap(), g);
        assert!(g.substitute_monomial(&rat(1), 0).is_err());
        assert_eq!(ints(&g.substitute_monomial(&rat(3), 50).unwrap()), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn square_roots() {
        let s = TruncatedSeries::from_ints(&[1, -4], 10).sqrt().unwrap();
        assert_eq!(ints(&s)[..4], [1, -2, -2, -4]);
        for n in 0..=10u64 {
            let expect = generalized_binomial(&ratio(1, 2), n) * rat(-4).pow(n as i32);
            assert_eq!(*s.coeff(n as usize), expect);
        }
        assert_eq!(TruncatedSeries::one(4).sqrt().unwrap(), TruncatedSeries::one(4));
        assert!(TruncatedSeries::from_ints(&[4, 1], 3).sqrt().is_err());
    }

    #[test]
    fn inverse_of_one_minus_x_cubed() {
        let cube = TruncatedSeries::from_ints(&[1, -3, 3, -1], 12);
        let inv = cube.inverse().unwrap();
        for n in 0..=12u64 {
            assert_eq!(*inv.coeff(n as usize), crate::num::rat_from_nat(&binomial(n + 2, 2)));
        }
        assert!(TruncatedSeries::from_ints(&[0, 1], 3).inverse().is_err());
    }

    #[test]
    fn display_format() {
        let s = TruncatedSeries::new(vec![rat(1), rat(-2), ratio(1, 2), rat(0)], 3);
        assert_eq!(s.to_string(), "1 - 2*x + 1/2*x^2 + 0*x^3 + O(x^4)");
        assert_eq!(TruncatedSeries::from_ints(&[-3], 0).to_string(), "-3 + O(x^1)");
    }

    #[test]
    fn block_multipliers() {
        let mut s = TruncatedSeries::one(10);
        s.mul_geometric_block(3, Some(2));
        assert_eq!(ints(&s), vec![1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0]);
        let mut u = TruncatedSeries::one(6);
        u.mul_geometric_block(2, None);
        assert_eq!(ints(&u), vec![1, 0, 1, 0, 1, 0, 1]);
    }

    const ORDER: usize = 12;

    fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-20i64..=20, 1i64..=6), ORDER + 1)
            .prop_map(|v| TruncatedSeries::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect(), ORDER))
    }

    fn arb_unit_series() -> impl Strategy<Value = TruncatedSeries> {
        arb_series().prop_map(|s| {
            let mut c = s.coeffs().to_vec();
            c[0] = rat(1);
            TruncatedSeries::new(c, ORDER)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(series_add(&a, &b)?, series_add(&b, &a)?);
            prop_assert_eq!(series_mul(&a, &b)?, series_mul(&b, &a)?);
            prop_assert_eq!(series_add(&series_add(&a, &b)?, &c)?, series_add(&a, &series_add(&b, &c)?)?);
            prop_assert_eq!(series_mul(&series_mul(&a, &b)?, &c)?, series_mul(&a, &series_mul(&b, &c)?)?);
            prop_assert_eq!(
                series_mul(&a, &series_add(&b, &c)?)?,
                series_add(&series_mul(&a, &b)?, &series_mul(&a, &c)?)?
            );
        }

        #[test]
        fn product_rule(a in arb_series(), b in arb_series()) {
            let lhs = series_mul(&a, &b)?.derivative()?;
            let da = a.derivative()?;
            let db = b.derivative()?;
            let a_low = TruncatedSeries::new(a.coeffs().to_vec(), ORDER - 1);
            let b_low = TruncatedSeries::new(b.coeffs().to_vec(), ORDER - 1);
            let rhs = series_add(&series_mul(&a_low, &db)?, &series_mul(&b_low, &da)?)?;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sqrt_squares_back(a in arb_unit_series()) {
            let s = a.sqrt()?;
            prop_assert_eq!(series_mul(&s, &s)?, a);
        }
    }
}
