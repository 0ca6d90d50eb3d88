use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::num::{format_complex, format_rational, rat_to_f64, Rational};
use crate::poly::Polynomial;
use crate::sequences::LinearRecurrence;

use super::series::TruncatedSeries;

/// `numerator / denominator` with a denominator that does not vanish at 0,
/// so the quotient has a power series expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(invalid("denominator must have a nonzero constant term"));
        }
        Ok(RationalGF { numerator, denominator })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// The series `S` with `S * denominator = numerator` through `x^order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let d = self.denominator.coeffs();
        let d0 = &d[0];
        let mut s: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.numerator.coeff(n);
            for k in 1..d.len().min(n + 1) {
                acc -= &d[k] * &s[n - k];
            }
            s.push(acc / d0);
        }
        TruncatedSeries::new(s, order)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

pub fn expand_rational(r: &RationalGF, order: usize) -> TruncatedSeries {
    r.expand(order)
}

/// Generating function of a recurrence, with `a_n = 0` below its start index.
/// The denominator is the reversed characteristic polynomial and the
/// numerator collects the low-order corrections.
pub fn recurrence_to_gf(rec: &LinearRecurrence) -> RationalGF {
    let d = rec.order();
    let denominator = rec.characteristic_polynomial().reversed(d);
    let start = rec.start() as usize;
    let cut = start + d;
    let mut seq = vec![Rational::zero(); cut];
    for (i, a) in rec.initial().iter().enumerate() {
        seq[start + i] = a.clone();
    }
    let mut num = vec![Rational::zero(); cut];
    for (i, c) in denominator.coeffs().iter().enumerate() {
        for (j, a) in seq.iter().enumerate() {
            if i + j < cut {
                num[i + j] += c * a;
            }
        }
    }
    RationalGF { numerator: Polynomial::new(num), denominator }
}

/// One term `weight / (1 - root * x)`.
#[derive(Debug, Clone, PartialEq)]
pub enum PartialFractions {
    /// Every root is rational.
    Exact(Vec<(Rational, Rational)>),
    /// Some root is irrational; all terms are in floating point.
    Numeric(Vec<(Complex64, Complex64)>),
}

impl PartialFractions {
    pub fn len(&self) -> usize {
        match self {
            PartialFractions::Exact(t) => t.len(),
            PartialFractions::Numeric(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Σ z_i r_i^n` for `n = 0..=order`, exact terms converted.
    pub fn coefficients(&self, order: usize) -> Vec<Complex64> {
        let terms: Vec<(Complex64, Complex64)> = match self {
            PartialFractions::Exact(t) => t
                .iter()
                .map(|(z, r)| (Complex64::new(rat_to_f64(z), 0.0), Complex64::new(rat_to_f64(r), 0.0)))
                .collect(),
            PartialFractions::Numeric(t) => t.clone(),
        };
        (0..=order)
            .map(|n| terms.iter().map(|(z, r)| z * r.powu(n as u32)).sum())
            .collect()
    }

    /// Exact coefficients, available only when every root is rational.
    pub fn exact_coefficients(&self, order: usize) -> Option<TruncatedSeries> {
        let PartialFractions::Exact(terms) = self else { return None };
        let coeffs = (0..=order)
            .map(|n| {
                terms
                    .iter()
                    .fold(Rational::zero(), |acc, (z, r)| acc + z * r.pow(n as i32))
            })
            .collect();
        Some(TruncatedSeries::new(coeffs, order))
    }
}

impl fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartialFractions::Exact(terms) => {
                for (i, (z, r)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({})/(1 - ({})*x)", format_rational(z), format_rational(r))?;
                }
            }
            PartialFractions::Numeric(terms) => {
                for (i, (z, r)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({})/(1 - ({})*x)", format_complex(*z), format_complex(*r))?;
                }
            }
        }
        Ok(())
    }
}


/// Splits `N/D` into `Σ z_i / (1 - r_i x)`. Needs `deg N < deg D` and a
/// squarefree `D`. For a root `x_i = 1/r_i` of `D` the weight is
/// `z_i = -N(x_i) / (x_i D'(x_i))`.
pub fn partial_fractions(r: &RationalGF) -> Result<PartialFractions> {
    let dd = r.denominator.degree().unwrap_or(0);
    if let Some(nd) = r.numerator.degree() {
        if nd >= dd {
            return Err(invalid("partial fractions need deg numerator < deg denominator"));
        }
    }
    if dd > 0 && !r.denominator.is_squarefree() {
        return Err(Error::RepeatedFactor);
    }
    let deriv = r.denominator.derivative();
    if let Some(xs) = r.denominator.rational_roots().filter(|xs| xs.len() == dd) {
        let mut terms: Vec<(Rational, Rational)> = xs
            .iter()
            .map(|x| {
                let z = -r.numerator.eval(x) / (x * deriv.eval(x));
                (z, Rational::one() / x)
            })
            .collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        return Ok(PartialFractions::Exact(terms));
    }
    let ev = |p: &Polynomial, x: Complex64| {
        p.coeffs()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * x + rat_to_f64(c))
    };
    let mut terms: Vec<(Complex64, Complex64)> = r
        .denominator
        .complex_roots()
        .into_iter()
        .map(|x| (-ev(&r.numerator, x) / (x * ev(&deriv, x)), x.inv()))
        .collect();
    terms.sort_by(|a, b| b.1.re.total_cmp(&a.1.re).then(b.1.im.total_cmp(&a.1.im)));
    Ok(PartialFractions::Numeric(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfunc::series::integer_coeffs;
    use crate::num::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        integer_coeffs(s).unwrap().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn expansions() {
        let g = RationalGF::new(p(&[3]), p(&[1, -2])).unwrap();
        assert_eq!(ints(&g.expand(10)), (0..=10).map(|n| 3 << n).collect::<Vec<i64>>());
        let h = RationalGF::new(p(&[0, 1]), p(&[1, -3, 2])).unwrap();
        assert_eq!(ints(&h.expand(12)), (0..=12).map(|n| (1 << n) - 1).collect::<Vec<i64>>());
        let cube = RationalGF::new(p(&[1]), p(&[1, -3, 3, -1])).unwrap();
        assert_eq!(ints(&cube.expand(15)), (0..=15).map(|n| (n + 1) * (n + 2) / 2).collect::<Vec<i64>>());
        assert!(RationalGF::new(p(&[1]), p(&[0, 1])).is_err());
    }

    #[test]
    fn recurrence_gfs() {
        let fib = recurrence_to_gf(&LinearRecurrence::fibonacci());
        assert_eq!(fib.numerator(), &p(&[0, 1]));
        assert_eq!(fib.denominator(), &p(&[1, -1, -1]));
        let r = recurrence_to_gf(&LinearRecurrence::from_ints(&[5, -6], &[0, 1], 0).unwrap());
        assert_eq!((r.numerator(), r.denominator()), (&p(&[0, 1]), &p(&[1, -5, 6])));
        let r = recurrence_to_gf(&LinearRecurrence::from_ints(&[2], &[3], 0).unwrap());
        assert_eq!((r.numerator(), r.denominator()), (&p(&[3]), &p(&[1, -2])));
    }

    #[test]
    fn partial_fraction_examples() {
        let h = RationalGF::new(p(&[0, 1]), p(&[1, -3, 2])).unwrap();
        assert_eq!(
            partial_fractions(&h).unwrap(),
            PartialFractions::Exact(vec![(rat(-1), rat(1)), (rat(1), rat(2))])
        );
        let single = RationalGF::new(p(&[7]), Polynomial::new(vec![rat(1), ratio(-2, 3)])).unwrap();
        assert_eq!(
            partial_fractions(&single).unwrap(),
            PartialFractions::Exact(vec![(rat(7), ratio(2, 3))])
        );
        let fib = recurrence_to_gf(&LinearRecurrence::fibonacci());
        let PartialFractions::Numeric(terms) = partial_fractions(&fib).unwrap() else { panic!() };
        let s5 = 5f64.sqrt();
        assert!((terms[0].0.re - 1.0 / s5).abs() < 1e-12 && (terms[0].1.re - (1.0 + s5) / 2.0).abs() < 1e-12);
        assert!((terms[1].0.re + 1.0 / s5).abs() < 1e-12 && (terms[1].1.re - (1.0 - s5) / 2.0).abs() < 1e-12);
        let rep = RationalGF::new(p(&[1]), p(&[1, -2, 1])).unwrap();
        assert_eq!(partial_fractions(&rep), Err(Error::RepeatedFactor));
        let improper = RationalGF::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        assert!(partial_fractions(&improper).is_err());
    }

    fn random_rec(rng: &mut ChaCha8Rng, max_start: u64) -> LinearRecurrence {
        let d = rng.gen_range(1..=4);
        let mut coeffs: Vec<Rational> = (0..d).map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect();
        if coeffs[d - 1].is_zero() {
            coeffs[d - 1] = rat(1);
        }
        let init = (0..d).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        LinearRecurrence::with_start(coeffs, init, rng.gen_range(0..=max_start)).unwrap()
    }

    #[test]
    fn gf_expansion_matches_iteration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6f);
        for _ in 0..200 {
            let rec = random_rec(&mut rng, 2);
            let s = recurrence_to_gf(&rec).expand(30);
            for n in 0..=30u64 {
                let want = if n < rec.start() { Rational::zero() } else { rec.iterate(n).unwrap() };
                assert_eq!(s.coeff(n as usize), &want, "{rec:?} n={n}");
            }
        }
    }

    #[test]
    fn partial_fractions_recombine() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9f);
        let (mut exact, mut numeric) = (0, 0);
        for _ in 0..300 {
            let g = recurrence_to_gf(&random_rec(&mut rng, 0));
            let pf = match partial_fractions(&g) {
                Ok(pf) => pf,
                Err(Error::RepeatedFactor) => continue,
                Err(e) => panic!("{e}"),
            };
            let want = g.expand(30);
            if let Some(s) = pf.exact_coefficients(30) {
                assert_eq!(s, want);
                exact += 1;
            } else {
                let got = pf.coefficients(30);
                for (n, z) in got.iter().enumerate() {
                    let w = rat_to_f64(want.coeff(n));
                    let scale = w.abs().max(1.0);
                    assert!((z.re - w).abs() <= 1e-9 * scale && z.im.abs() <= 1e-9 * scale, "{g} n={n}: {z} vs {w}");
                }
                numeric += 1;
            }
        }
        assert!(exact > 10 && numeric > 10, "{exact} {numeric}");
    }
}
