//! Roots in Cl(1,0) and Cl(0,1): `A = s + v e1`.

use super::radical::{clamped_sqrt, half_root};
use super::Diagnostics;
use crate::algebra::Multivector;

/// Candidate roots of `B = b0 + b1 e1`, before residual filtering.
///
/// `A^2 = s^2 + g v^2 + 2 s v e1`, so `s^2 = (b0 +- sqrt(b0^2 - g b1^2)) / 2`
/// and `v = b1 / (2 s)`. When `b1 = 0` the branch `s = 0`, `v^2 = b0 / g`
/// contributes as well.
pub(crate) fn candidates(b: &Multivector, tol: f64, diag: &mut Diagnostics) -> Vec<Multivector> {
    let sig = b.signature();
    let g = sig.vector_square(1);
    let (b0, b1) = (b[0], b[1]);
    let mut out = Vec::new();
    for sigma in [1.0, -1.0] {
        let Some(s2) = half_root(b0, g * b1 * b1, sigma, tol) else {
            diag.reject(format!(
                "determinant {} < 0: no real s",
                b0 * b0 - g * b1 * b1
            ));
            break;
        };
        match clamped_sqrt(s2, tol) {
            Some(s) if s > 0.0 => {
                diag.branch(format!("s^2 = (b0 {} sqrt(det))/2 = {s2}", pm(sigma)));
                for s in [s, -s] {
                    out.push(mv(b, s, b1 / (2.0 * s)));
                }
            }
            Some(_) => {}
            None => diag.reject(format!("s^2 = (b0 {} sqrt(det))/2 = {s2} < 0", pm(sigma))),
        }
    }
    if b1.abs() <= tol {
        match clamped_sqrt(b0 / g, tol) {
            Some(v) => {
                diag.branch(format!("s = 0, v1 = +-sqrt(b0/{g})"));
                out.push(mv(b, 0.0, v));
                out.push(mv(b, 0.0, -v));
            }
            None => diag.reject(format!("s = 0 branch needs b0/{g} >= 0, got {}", b0 / g)),
        }
    }
    out
}

fn mv(b: &Multivector, s: f64, v: f64) -> Multivector {
    let mut a = Multivector::zero(b.signature());
    a.coeffs_mut().copy_from_slice(&[s, v]);
    a
}

pub(crate) fn pm(sigma: f64) -> char {
    if sigma > 0.0 {
        '+'
    } else {
        '-'
    }
}
