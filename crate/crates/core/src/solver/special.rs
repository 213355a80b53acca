//! Degenerate branches of three-dimensional algebras where the linear
//! recovery of `(v, V)` is singular and roots come in continua.
//!
//! With `A = s + v + (S + V) I` and `c` the vector with `c I` equal to the
//! bivector part of `B`, the grade-1 and grade-2 parts of `A^2 = B` read
//! `2 (s v + iota S V) = b` and `2 (s V + S v) = c`, where `iota = I^2`.
//! They are singular exactly when `s = S = 0`, or when `iota = +1` and
//! `s = +-S`.

use super::family::ParametricFamily;
use super::radical::{clamped_sqrt, half_root};
use super::Diagnostics;
use crate::algebra::{pseudoscalar_square, Multivector};

/// Coordinates of `B`'s vector part and of its bivector part's dual.
fn vector_and_dual(b: &Multivector) -> ([f64; 3], [f64; 3]) {
    let form = b.to_symmetric().expect("three-dimensional algebra");
    (form.vector, form.dual)
}

/// The parametric families of roots of `B` in a three-dimensional algebra.
pub fn special_case_roots(b: &Multivector, tol: f64) -> Vec<ParametricFamily> {
    special_cases(b, tol, &mut Diagnostics::default())
}

pub(crate) fn special_cases(
    b: &Multivector,
    tol: f64,
    diag: &mut Diagnostics,
) -> Vec<ParametricFamily> {
    let mut out = Vec::new();
    let sig = b.signature();
    if sig.dim() != 3 {
        return out;
    }
    let g = sig.metric();
    let iota = pseudoscalar_square(sig);
    let (bv, c) = vector_and_dual(b);
    let (b0, b123) = (b[0], b[7]);

    if bv.iter().chain(c.iter()).all(|x| x.abs() <= tol) {
        diag.branch("s = S = 0: grades 1 and 2 of B vanish, four-parameter families".into());
        if iota < 0.0 {
            for eps in [1.0, -1.0] {
                out.push(ParametricFamily::zero(*b, eps, 0.0));
            }
        } else {
            for eps_plus in [1.0, -1.0] {
                for eps_minus in [1.0, -1.0] {
                    out.push(ParametricFamily::zero(*b, eps_plus, eps_minus));
                }
            }
        }
    } else {
        diag.note("s = S = 0 impossible: B has grade-1 or grade-2 parts".into());
    }

    if iota < 0.0 {
        return out;
    }
    for sigma in [1.0, -1.0] {
        let name = if sigma > 0.0 { "s = S" } else { "s = -S" };
        if !(0..3).all(|i| (c[i] - sigma * bv[i]).abs() <= tol) {
            diag.note(format!("{name} != 0 incompatible with B"));
            continue;
        }
        // 16 s^4 - 4 m s^2 + Q(b) = 0
        let m = b0 + sigma * b123;
        let q: f64 = (0..3).map(|i| g[i] * bv[i] * bv[i]).sum();
        for inner in [1.0, -1.0] {
            let Some(h) = half_root(m, 4.0 * q, inner, tol) else {
                diag.reject(format!("{name}: m^2 - 4Q(b) = {} < 0", m * m - 4.0 * q));
                break;
            };
            // h = 4 s^2
            match clamped_sqrt(h / 4.0, tol) {
                Some(s) if s > tol && !out.iter().any(|f| same_branch(f, sigma, s, tol)) => {
                    diag.branch(format!("{name} = {s}: two-parameter families"));
                    for s in [s, -s] {
                        for eps in [1.0, -1.0] {
                            out.push(ParametricFamily::equal(*b, sigma, s, eps));
                        }
                    }
                }
                Some(_) => {}
                None => diag.reject(format!("{name}: s^2 = {} < 0", h / 4.0)),
            }
        }
    }
    out
}

fn same_branch(f: &ParametricFamily, sigma: f64, s: f64, tol: f64) -> bool {
    let tag_sigma = match f.case() {
        super::CaseTag::SsPlus => 1.0,
        super::CaseTag::SsMinus => -1.0,
        _ => return false,
    };
    tag_sigma == sigma && f.scalar_part().is_some_and(|x| (x.abs() - s).abs() <= tol)
}
