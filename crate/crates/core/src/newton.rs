//! Damped Newton (Levenberg-Marquardt) iteration for `A^2 = B`.
//!
//! The residual map `F(A) = A A - B` is quadratic, so its Jacobian
//! `h -> A h + h A` is exact and assembled from the product table.

use nalgebra::{SMatrix, SVector};

use crate::algebra::{product_table, Multivector};

type Mat8 = SMatrix<f64, 8, 8>;
type Vec8 = SVector<f64, 8>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct NewtonOptions {
    pub target: f64,
    pub max_iters: usize,
    /// Iterates whose coefficients exceed this magnitude are abandoned.
    pub divergence: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Converged,
    Stalled,
    Diverged,
    IterationLimit,
}

fn residual_vec(a: &Multivector, b: &Multivector) -> Vec8 {
    let sq = a.square();
    let mut f = Vec8::zeros();
    for (k, (x, y)) in sq.coeffs().iter().zip(b.coeffs()).enumerate() {
        f[k] = x - y;
    }
    f
}

fn jacobian(a: &Multivector) -> Mat8 {
    let table = product_table(a.signature());
    let n = table.len();
    let c = a.coeffs();
    let mut j = Mat8::zeros();
    for col in 0..n {
        for (i, &ai) in c.iter().enumerate() {
            if ai == 0.0 {
                continue;
            }
            let (s1, k1) = table.entry(i, col);
            j[(k1, col)] += s1 * ai;
            let (s2, k2) = table.entry(col, i);
            j[(k2, col)] += s2 * ai;
        }
    }
    j
}

/// Runs the damped iteration from `start`; returns the final iterate, its
/// residual (infinity norm) and how the run ended.
pub(crate) fn solve(
    start: Multivector,
    b: &Multivector,
    opts: &NewtonOptions,
) -> (Multivector, f64, Outcome) {
    let n = b.signature().blade_count();
    let mut x = start;
    let mut f = residual_vec(&x, b);
    let mut cost = f.norm_squared();
    let mut lambda = 1e-3;
    for _ in 0..opts.max_iters {
        let res = f.amax();
        if res <= opts.target {
            return (x, res, Outcome::Converged);
        }
        let j = jacobian(&x);
        let jt = j.transpose();
        let h = jt * j;
        let g = jt * f;
        let floor = 1e-3 * h.trace() / n as f64 + 1e-12;
        let mut improved = false;
        for _ in 0..12 {
            let mut damped = h;
            for d in 0..8 {
                if d < n {
                    damped[(d, d)] += lambda * (h[(d, d)] + floor);
                } else {
                    damped[(d, d)] = 1.0;
                }
            }
            let Some(chol) = damped.cholesky() else {
                lambda *= 10.0;
                continue;
            };
            let step = chol.solve(&(-g));
            let mut trial = x;
            for (k, c) in trial.coeffs_mut().iter_mut().enumerate() {
                *c += step[k];
            }
            let tf = residual_vec(&trial, b);
            let tcost = tf.norm_squared();
            if tcost < cost {
                x = trial;
                f = tf;
                cost = tcost;
                lambda = (lambda / 5.0).max(1e-15);
                improved = true;
                break;
            }
            lambda *= 4.0;
        }
        if !improved {
            let res = f.amax();
            let outcome = if res <= opts.target {
                Outcome::Converged
            } else {
                Outcome::Stalled
            };
            return (x, res, outcome);
        }
        if x.norm_inf() > opts.divergence || !x.is_finite() {
            return (x, f.amax(), Outcome::Diverged);
        }
    }
    let res = f.amax();
    let outcome = if res <= opts.target {
        Outcome::Converged
    } else {
        Outcome::IterationLimit
    };
    (x, res, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;

    #[test]
    fn jacobian_matches_finite_differences() {
        for sig in Signature::ALL {
            let n = sig.blade_count();
            let coeffs: Vec<f64> = (0..n).map(|k| 0.3 * k as f64 - 0.7).collect();
            let a = Multivector::from_coeffs(sig, &coeffs).unwrap();
            let j = jacobian(&a);
            let h = 1e-6;
            for col in 0..n {
                let mut ap = a;
                ap.coeffs_mut()[col] += h;
                let mut am = a;
                am.coeffs_mut()[col] -= h;
                let d = (ap.square() - am.square()).scale(0.5 / h);
                for row in 0..n {
                    assert!((d[row] - j[(row, col)]).abs() < 1e-6, "{sig} {row} {col}");
                }
            }
        }
    }

    #[test]
    fn converges_to_a_quaternion_root() {
        let sig = Signature::CL30;
        let b = Multivector::from_coeffs(sig, &[1.0, 0.0, 0.0, 0.0, 1.0, -1.0, 1.0, 0.0]).unwrap();
        let start =
            Multivector::from_coeffs(sig, &[1.0, 0.1, 0.0, 0.2, 0.3, -0.2, 0.5, 0.0]).unwrap();
        let opts = NewtonOptions {
            target: 1e-13,
            max_iters: 100,
            divergence: 1e6,
        };
        let (x, res, outcome) = solve(start, &b, &opts);
        assert_eq!(outcome, Outcome::Converged);
        assert!(res <= 1e-13);
        assert!(x.square().approx_eq(&b, 1e-12));
    }
}
