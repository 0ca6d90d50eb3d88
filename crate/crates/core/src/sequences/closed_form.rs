//! Closed forms `a_n = Σ z_i r_i^n` for recurrences whose characteristic
//! polynomial has distinct roots. Roots come from Durand-Kerner iteration
//! followed by Newton polishing; weights from a complex linear solve.

use num_complex::Complex64;
use num_traits::Zero;

use super::LinearRecurrence;
use crate::error::{Error, Result};
use crate::num::rat_to_f64;

/// Relative separation below which two numeric roots count as repeated.
pub const TAU_ROOT: f64 = 1e-7;
/// Relative agreement required between closed form and exact iteration.
pub const TAU_MATCH: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub roots: Vec<Complex64>,
    pub weights: Vec<Complex64>,
    /// Index of the first seeded term; the weights fit `a_start .. a_{start+d-1}`.
    pub start: u64,
    /// Largest absolute residual of the weight system on the seeds.
    pub residual: f64,
}

impl ClosedForm {
    pub fn eval_complex(&self, n: u64) -> Complex64 {
        self.roots
            .iter()
            .zip(&self.weights)
            .map(|(r, z)| z * r.powi(n as i32))
            .sum()
    }

    /// `Σ |z_i| |r_i|^n`, the size of the individual terms before they cancel.
    pub fn magnitude(&self, n: u64) -> f64 {
        self.roots
            .iter()
            .zip(&self.weights)
            .map(|(r, z)| z.norm() * r.norm().powi(n as i32))
            .sum()
    }

    /// Real part of the closed form at `n`.
    pub fn eval(&self, n: u64) -> f64 {
        self.eval_complex(n).re
    }
}

/// Solves a recurrence with pairwise distinct characteristic roots.
pub fn solve_recurrence(rec: &LinearRecurrence) -> Result<ClosedForm> {
    let charpoly = rec.characteristic_polynomial();
    if !charpoly.is_squarefree() {
        return Err(Error::RepeatedRoots);
    }
    let coeffs: Vec<f64> = charpoly.coeffs().iter().map(rat_to_f64).collect();
    let roots = polynomial_roots(&coeffs);
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[..i] {
            let scale = 1f64.max(a.norm()).max(b.norm());
            if (a - b).norm() <= TAU_ROOT * scale {
                return Err(Error::RepeatedRoots);
            }
        }
    }

    let d = roots.len();
    let start = rec.start();
    let matrix: Vec<Vec<Complex64>> = (0..d)
        .map(|k| roots.iter().map(|r| r.powi((start + k as u64) as i32)).collect())
        .collect();
    let rhs: Vec<Complex64> = rec.initial().iter().map(|a| Complex64::new(rat_to_f64(a), 0.0)).collect();
    let mut weights = solve_linear(&matrix, &rhs).ok_or(Error::RepeatedRoots)?;

    // One round of iterative refinement.
    let resid = residual_vector(&matrix, &weights, &rhs);
    if let Some(delta) = solve_linear(&matrix, &resid) {
        for (w, e) in weights.iter_mut().zip(delta) {
            *w += e;
        }
    }
    let residual = residual_vector(&matrix, &weights, &rhs)
        .iter()
        .map(|r| r.norm())
        .fold(0.0, f64::max);

    Ok(ClosedForm { roots, weights, start, residual })
}

fn residual_vector(matrix: &[Vec<Complex64>], x: &[Complex64], rhs: &[Complex64]) -> Vec<Complex64> {
    matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| b - row.iter().zip(x).map(|(a, xi)| a * xi).sum::<Complex64>())
        .collect()
}

/// Gaussian elimination with partial pivoting. `None` if singular.
fn solve_linear(matrix: &[Vec<Complex64>], rhs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = rhs.len();
    let mut a: Vec<Vec<Complex64>> = matrix.to_vec();
    let mut b = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[pivot][col].norm() == 0.0 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                let sub = factor * a[col][k];
                a[row][k] -= sub;
            }
            let sub = factor * b[col];
            b[row] -= sub;
        }
    }
    let mut x = vec![Complex64::zero(); n];
    for row in (0..n).rev() {
        let tail: Complex64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Some(x)
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
}

/// All complex roots of the polynomial with the given coefficients (lowest
/// degree first, nonzero leading coefficient).
pub(crate) fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if degree == 0 {
        return Vec::new();
    }
    if degree == 1 {
        return vec![Complex64::new(-monic[0], 0.0)];
    }
    let bound = 1.0 + monic[..degree].iter().fold(0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree).map(|k| seed.powi(k as i32) * bound).collect();

    for _ in 0..2000 {
        let mut shift = 0f64;
        for k in 0..degree {
            let z = roots[k];
            let denom: Complex64 = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, r)| z - r)
                .product();
            if denom.norm() == 0.0 {
                roots[k] += Complex64::new(1e-9 * bound, 1e-9 * bound);
                shift = f64::INFINITY;
                continue;
            }
            let step = horner(&monic, z) / denom;
            roots[k] -= step;
            shift = shift.max(step.norm() / (1.0 + z.norm()));
        }
        if shift < 1e-15 {
            break;
        }
    }

    let derivative: Vec<f64> = monic.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect();
    for z in roots.iter_mut() {
        for _ in 0..4 {
            let dz = horner(&derivative, *z);
            if dz.norm() == 0.0 {
                break;
            }
            let step = horner(&monic, *z) / dz;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *z -= step;
        }
        if z.im.abs() <= 1e-12 * (1.0 + z.re.abs()) {
            z.im = 0.0;
        }
    }
    roots.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_to_f64, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    fn has_root(roots: &[Complex64], r: f64) -> Option<usize> {
        roots.iter().position(|z| close(*z, Complex64::new(r, 0.0), 1e-9))
    }

    #[test]
    fn fibonacci_closed_form() {
        let cf = solve_recurrence(&LinearRecurrence::fibonacci()).unwrap();
        let s5 = 5f64.sqrt();
        let i = has_root(&cf.roots, (1.0 + s5) / 2.0).unwrap();
        let j = has_root(&cf.roots, (1.0 - s5) / 2.0).unwrap();
        assert!(close(cf.weights[i], Complex64::new(1.0 / s5, 0.0), 1e-12));
        assert!(close(cf.weights[j], Complex64::new(-1.0 / s5, 0.0), 1e-12));
        // Weights are independent of the seed indexing.
        let one_indexed = LinearRecurrence::from_ints(&[1, 1], &[1, 1], 1).unwrap();
        let cf1 = solve_recurrence(&one_indexed).unwrap();
        assert!(close(cf1.weights[i], cf.weights[i], 1e-12));
    }

    #[test]
    fn three_to_the_n_minus_two_to_the_n() {
        let rec = LinearRecurrence::from_ints(&[5, -6], &[0, 1], 0).unwrap();
        let cf = solve_recurrence(&rec).unwrap();
        let i3 = has_root(&cf.roots, 3.0).unwrap();
        let i2 = has_root(&cf.roots, 2.0).unwrap();
        assert!(close(cf.weights[i3], Complex64::new(1.0, 0.0), 1e-12));
        assert!(close(cf.weights[i2], Complex64::new(-1.0, 0.0), 1e-12));
        assert_eq!(cf.weights[i3].re.round(), 1.0);
        assert_eq!(cf.weights[i2].re.round(), -1.0);
        for n in 0..=40u64 {
            let exact = rat_to_f64(&rec.iterate(n).unwrap());
            assert!((cf.eval(n) - exact).abs() / exact.max(1.0) < TAU_MATCH);
        }
        // Rounding is exact wherever the value fits in a double's mantissa.
        for n in 0..=30u32 {
            assert_eq!(cf.eval(n as u64).round(), 3f64.powi(n as i32) - 2f64.powi(n as i32));
        }
    }

    #[test]
    fn wasp_roots() {
        let rec = LinearRecurrence::from_ints(&[1, 20], &[1, 1], 1).unwrap();
        let cf = solve_recurrence(&rec).unwrap();
        assert!(has_root(&cf.roots, 5.0).is_some());
        assert!(has_root(&cf.roots, -4.0).is_some());
        assert!(cf.residual < 1e-12);
    }

    #[test]
    fn repeated_roots_rejected() {
        let rec = LinearRecurrence::from_ints(&[2, -1], &[1, 2], 1).unwrap();
        assert_eq!(solve_recurrence(&rec), Err(Error::RepeatedRoots));
        let cubic = LinearRecurrence::from_ints(&[3, -3, 1], &[1, 2, 3], 1).unwrap();
        assert_eq!(solve_recurrence(&cubic), Err(Error::RepeatedRoots));
    }

    #[test]
    fn complex_roots_give_real_values() {
        // a_n = a_{n-1} - a_{n-2} has period 6 with roots e^{±iπ/3}.
        let rec = LinearRecurrence::from_ints(&[1, -1], &[1, 1], 1).unwrap();
        let cf = solve_recurrence(&rec).unwrap();
        for n in 1..=40 {
            let exact = rat_to_f64(&rec.iterate(n).unwrap());
            assert!((cf.eval(n) - exact).abs() < 1e-9);
            assert!(cf.eval_complex(n).im.abs() < 1e-9);
        }
    }

    #[test]
    fn roots_of_known_polynomials() {
        // (x-1)(x+2)(x-3)(x+4) = x^4 + 2x^3 - 13x^2 - 14x + 24
        let roots = polynomial_roots(&[24.0, -14.0, -13.0, 2.0, 1.0]);
        for r in [1.0, -2.0, 3.0, -4.0] {
            assert!(has_root(&roots, r).is_some(), "missing {r}: {roots:?}");
        }
        let quad = polynomial_roots(&[1.0, 0.0, 1.0]);
        assert!(quad.iter().any(|z| close(*z, Complex64::new(0.0, 1.0), 1e-12)));
        assert!(quad.iter().any(|z| close(*z, Complex64::new(0.0, -1.0), 1e-12)));
    }

    fn min_separation(roots: &[Complex64]) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[..i] {
                best = best.min((a - b).norm());
            }
        }
        best
    }

    /// Random recurrences of order ≤ 4 with integer coefficients in [-5, 5]
    /// and rational seeds. Skipped: nearly colliding roots, and seeds that give
    /// some root a vanishing weight (the missing component is then rounding
    /// noise amplified by r^n).
    #[test]
    fn random_recurrences_match_iteration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 200 {
            let d = rng.gen_range(1..=4usize);
            let mut coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
            if coeffs[d - 1] == 0 {
                coeffs[d - 1] = 1;
            }
            let initial = (0..d)
                .map(|_| ratio(rng.gen_range(-50..=50), rng.gen_range(1..=9)))
                .collect();
            let rec = LinearRecurrence::with_start(coeffs.iter().map(|&c| crate::num::rat(c)).collect(), initial, 1)
                .unwrap();
            let Ok(cf) = solve_recurrence(&rec) else { continue };
            if min_separation(&cf.roots) < 1e-3 {
                continue;
            }
            let wmax = cf.weights.iter().map(|w| w.norm()).fold(0.0, f64::max);
            if cf.weights.iter().any(|w| w.norm() < 1e-6 * wmax) {
                continue;
            }
            for n in 1..=40 {
                let exact = rat_to_f64(&rec.iterate(n).unwrap());
                let err = (cf.eval(n) - exact).abs() / exact.abs().max(1.0);
                if err >= TAU_MATCH {
                    // Only tolerated where the terms cancel down to (nearly) nothing:
                    // then double precision can only be held to the size of the terms.
                    let scale = cf.magnitude(n);
                    assert!(exact.abs() < 1e-6 * scale, "coeffs {coeffs:?} n={n} err={err:e}");
                    assert!((cf.eval(n) - exact).abs() / scale < TAU_MATCH);
                }
            }
            checked += 1;
        }
    }
}
