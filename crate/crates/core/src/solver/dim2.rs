//! Roots in Cl(2,0), Cl(1,1) and Cl(0,2): `A = s + v1 e1 + v2 e2 + S e12`.

use super::dim1::pm;
use super::family::ParametricFamily;
use super::radical::{clamped_sqrt, half_root};
use super::Diagnostics;
use crate::algebra::Multivector;

/// Candidate roots and, when the vector and bivector parts of `B` vanish, the
/// two `s = 0` families.
///
/// `A^2 = s^2 + g1 v1^2 + g2 v2^2 - g1 g2 S^2 + 2 s v + 2 s S e12`, so for
/// `s != 0` the scalar equation becomes a quadratic in `s^2`.
pub(crate) fn candidates(
    b: &Multivector,
    tol: f64,
    diag: &mut Diagnostics,
) -> (Vec<Multivector>, Vec<ParametricFamily>) {
    let sig = b.signature();
    let [g1, g2, _] = sig.metric();
    let c = b.coeffs();
    let q = g1 * c[1] * c[1] + g2 * c[2] * c[2] - g1 * g2 * c[3] * c[3];
    let mut out = Vec::new();
    for sigma in [1.0, -1.0] {
        let Some(s2) = half_root(c[0], q, sigma, tol) else {
            diag.reject(format!("determinant {} < 0: no real s", c[0] * c[0] - q));
            break;
        };
        match clamped_sqrt(s2, tol) {
            Some(s) if s > 0.0 => {
                diag.branch(format!("s^2 = (b0 {} sqrt(det))/2 = {s2}", pm(sigma)));
                for s in [s, -s] {
                    let k = 1.0 / (2.0 * s);
                    let a = Multivector::from_coeffs(sig, &[s, c[1] * k, c[2] * k, c[3] * k])
                        .expect("four coefficients");
                    out.push(a);
                }
            }
            Some(_) => {}
            None => diag.reject(format!("s^2 = (b0 {} sqrt(det))/2 = {s2} < 0", pm(sigma))),
        }
    }
    let mut families = Vec::new();
    if c[1].abs() <= tol && c[2].abs() <= tol && c[3].abs() <= tol {
        diag.branch("s = 0 with b1 = b2 = b12 = 0: two-parameter families".to_string());
        families.push(ParametricFamily::dim2(*b, 1.0));
        families.push(ParametricFamily::dim2(*b, -1.0));
    }
    (out, families)
}
