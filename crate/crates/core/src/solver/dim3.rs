//! The generic pipeline for three-dimensional algebras.
//!
//! Writing `A = s + v + (S + V) I`, the scalar and pseudoscalar equations of
//! `A^2 = B` reduce, after the substitution `t = s S` and `T = (S^2 - s^2)/2`
//! (or `T = (s^2 + S^2)/2` when `I^2 = +1`), to a system in `(t, T)` that is
//! solved first. Each `(t, T)` gives up to four `(s, S)`, and the vector
//! parts then follow from a linear system.

use serde::Serialize;

use super::dim1::pm;
use super::radical::{clamped_sqrt, half_root, sign_of};
use super::Diagnostics;
use crate::algebra::{
    invariants3, pseudoscalar_square, Invariants, Multivector, Signature, SymmetricForm,
};
use crate::error::{Error, Result};

/// A solution `(t, T)` of the reduced scalar system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TtPair {
    pub t: f64,
    #[serde(rename = "T")]
    pub big_t: f64,
}

/// A scalar and pseudoscalar pair `(s, S)` of a candidate root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SsPair {
    pub s: f64,
    #[serde(rename = "S")]
    pub big_s: f64,
}

fn elliptic(sig: Signature) -> bool {
    pseudoscalar_square(sig) < 0.0
}

fn push_unique<T: Copy>(list: &mut Vec<T>, item: T, same: impl Fn(&T, &T) -> bool) {
    if !list.iter().any(|x| same(x, &item)) {
        list.push(item);
    }
}

/// All `(t, T)` solving the reduced system for `B`.
pub fn solve_tt(b: &Multivector, tol: f64) -> Result<Vec<TtPair>> {
    let inv = invariants3(b)?;
    Ok(tt_pairs(b, &inv, tol, &mut Diagnostics::default()))
}

pub(crate) fn tt_pairs(
    b: &Multivector,
    inv: &Invariants,
    tol: f64,
    diag: &mut Diagnostics,
) -> Vec<TtPair> {
    if inv.det < -tol {
        return Vec::new();
    }
    let ell = elliptic(b.signature());
    let (b0, b123) = (b[0], b[7]);
    let (bs, bi) = (inv.bs, inv.bi);
    // x^2 -+ y^2 = bS and 2xy = bI, with x = b0 + 4T (elliptic) or 4T - b0
    // and y = 4t - b123
    let (a, c) = if ell { (-bs, -bi * bi) } else { (bs, bi * bi) };
    let mut xy = Vec::new();
    for sigma in [1.0, -1.0] {
        let label = if ell {
            format!("-bS {} sqrt(D)", pm(sigma))
        } else {
            format!("bS {} sqrt(D)", pm(sigma))
        };
        let Some(y2) = half_root(a, c, sigma, tol) else {
            continue;
        };
        if y2 > tol {
            let y = y2.sqrt();
            diag.branch(format!("{label} = {}", 2.0 * y2));
            for y in [y, -y] {
                xy.push((bi / (2.0 * y), y));
            }
        } else if y2 >= -tol {
            match clamped_sqrt(bs, tol) {
                Some(x) => {
                    diag.branch(format!("{label} = 0, x = +-sqrt(bS)"));
                    xy.push((x, 0.0));
                    xy.push((-x, 0.0));
                }
                None => diag.reject(format!("{label} = 0 but bS = {bs} < 0")),
            }
        } else {
            diag.reject(format!("{label} = {} < 0", 2.0 * y2));
        }
    }
    let mut pairs = Vec::new();
    for (x, y) in xy {
        let t = (y + b123) / 4.0;
        let big_t = if ell { (x - b0) / 4.0 } else { (x + b0) / 4.0 };
        push_unique(&mut pairs, TtPair { t, big_t }, |p, q| {
            (p.t - q.t).abs() <= tol && (p.big_t - q.big_t).abs() <= tol
        });
    }
    pairs
}

/// All `(s, S)` compatible with a `(t, T)` pair in the given algebra.
pub fn solve_ss(tt: TtPair, sig: Signature, tol: f64) -> Vec<SsPair> {
    ss_pairs(tt, sig, tol, &mut Diagnostics::default())
}

pub(crate) fn ss_pairs(
    tt: TtPair,
    sig: Signature,
    tol: f64,
    diag: &mut Diagnostics,
) -> Vec<SsPair> {
    let TtPair { t, big_t } = tt;
    let mut squares = Vec::new();
    if elliptic(sig) {
        // s^2 = -T + sqrt(T^2 + t^2), S^2 = T + sqrt(T^2 + t^2)
        let s2 = 2.0 * half_root(-big_t, -t * t, 1.0, tol).unwrap_or(0.0);
        let big_s2 = 2.0 * half_root(big_t, -t * t, 1.0, tol).unwrap_or(0.0);
        squares.push((s2, big_s2));
    } else {
        // s^2 = T +- sqrt(T^2 - t^2), S^2 = 2T - s^2
        if big_t < -tol {
            diag.reject(format!("T = {big_t} < 0"));
            return Vec::new();
        }
        for sigma in [1.0, -1.0] {
            match (
                half_root(big_t, t * t, sigma, tol),
                half_root(big_t, t * t, -sigma, tol),
            ) {
                (Some(s2), Some(big_s2)) => squares.push((2.0 * s2, 2.0 * big_s2)),
                _ => {
                    diag.reject(format!("T^2 - t^2 = {} < 0", big_t * big_t - t * t));
                    break;
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for (s2, big_s2) in squares {
        let (Some(s), Some(big_s)) = (clamped_sqrt(s2, tol), clamped_sqrt(big_s2, tol)) else {
            diag.reject(format!("s^2 = {s2}, S^2 = {big_s2}: negative"));
            continue;
        };
        // t = s S fixes the relative sign unless t vanishes
        let rel: &[f64] = if t.abs() <= tol {
            &[1.0, -1.0]
        } else {
            &[sign_of(t)]
        };
        for sign_s in [1.0, -1.0] {
            for &r in rel {
                let pair = SsPair {
                    s: sign_s * s,
                    big_s: r * sign_s * big_s,
                };
                push_unique(&mut pairs, pair, |p, q| {
                    (p.s - q.s).abs() <= tol && (p.big_s - q.big_s).abs() <= tol
                });
            }
        }
    }
    pairs
}

/// The vector parts `(v, V)` belonging to `(s, S)`, as a full candidate root.
///
/// Fails with [`Error::GenericInapplicable`] when `s^2 + S^2` (or `s^2 - S^2`
/// when `I^2 = +1`) is within `tol` of zero.
pub fn recover_vectors(b: &Multivector, ss: SsPair, tol: f64) -> Result<Multivector> {
    let sig = b.signature();
    if sig.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: sig,
        });
    }
    let SsPair { s, big_s: sb } = ss;
    let c = b.coeffs();
    let (b1, b2, b3, b12, b13, b23) = (c[1], c[2], c[3], c[4], c[5], c[6]);
    let den = if elliptic(sig) {
        s * s + sb * sb
    } else {
        s * s - sb * sb
    };
    if den.abs() <= tol {
        return Err(Error::GenericInapplicable { denominator: den });
    }
    let (v, big_v) = match (sig.p(), sig.q()) {
        (3, 0) => (
            [b1 * s + b23 * sb, b2 * s - b13 * sb, b3 * s + b12 * sb],
            [b23 * s - b1 * sb, -(b13 * s + b2 * sb), b12 * s - b3 * sb],
        ),
        (1, 2) => (
            [b1 * s + b23 * sb, b2 * s + b13 * sb, b3 * s - b12 * sb],
            [b23 * s - b1 * sb, b13 * s - b2 * sb, -(b12 * s + b3 * sb)],
        ),
        (0, 3) => (
            [b1 * s + b23 * sb, b2 * s - b13 * sb, b3 * s + b12 * sb],
            [
                -(b23 * s + b1 * sb),
                b13 * s - b2 * sb,
                -(b12 * s + b3 * sb),
            ],
        ),
        _ => (
            [b1 * s - b23 * sb, b2 * s + b13 * sb, b3 * s + b12 * sb],
            [
                b23 * s - b1 * sb,
                -(b13 * s + b2 * sb),
                -(b12 * s + b3 * sb),
            ],
        ),
    };
    let k = 1.0 / (2.0 * den);
    let form = SymmetricForm {
        scalar: s,
        vector: v.map(|x| x * k),
        pseudoscalar: sb,
        dual: big_v.map(|x| x * k),
    };
    form.to_multivector(sig)
}

/// Runs `(t, T) -> (s, S) -> (v, V)` and returns every candidate.
pub(crate) fn candidates(
    b: &Multivector,
    inv: &Invariants,
    tol: f64,
    diag: &mut Diagnostics,
) -> Vec<Multivector> {
    let sig = b.signature();
    let mut out = Vec::new();
    for tt in tt_pairs(b, inv, tol, diag) {
        for ss in ss_pairs(tt, sig, tol, diag) {
            match recover_vectors(b, ss, tol) {
                Ok(a) => out.push(a),
                Err(_) => diag.note(format!(
                    "(s, S) = ({}, {}): linear recovery singular, left to the special cases",
                    ss.s, ss.big_s
                )),
            }
        }
    }
    out
}

/// Closed forms for Cl(3,0) roots with `s = S` (`sigma = 1`) or `s = -S`
/// (`sigma = -1`).
///
/// These are specialisations of the generic pipeline; only candidates that
/// square back to `B` within `tol` are returned.
pub fn cl30_equal_parts(b: &Multivector, sigma: f64, tol: f64) -> Result<Vec<Multivector>> {
    if b.signature() != Signature::CL30 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: b.signature(),
        });
    }
    let inv = invariants3(b)?;
    let (b0, b123) = (b[0], b[7]);
    let mut s2 = Vec::new();
    if b0.abs() > tol {
        s2.push(sigma * (b123 + inv.bi / (2.0 * b0)) / 4.0);
    } else if let Some(r) = clamped_sqrt(-inv.bs, tol) {
        s2.push(sigma * (b123 + r) / 4.0);
        s2.push(sigma * (b123 - r) / 4.0);
    }
    let mut out = Vec::new();
    for q in s2 {
        let Some(s) = clamped_sqrt(q, tol) else {
            continue;
        };
        for s in [s, -s] {
            if let Ok(a) = recover_vectors(
                b,
                SsPair {
                    s,
                    big_s: sigma * s,
                },
                tol,
            ) {
                if (a.square() - *b).norm_inf() <= tol {
                    out.push(a);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1(sig: Signature) -> Multivector {
        Multivector::from_coeffs(sig, &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -2.0, 0.0]).unwrap()
    }

    fn has_pair(pairs: &[TtPair], t: f64, big_t: f64) -> bool {
        pairs
            .iter()
            .any(|p| (p.t - t).abs() < 1e-12 && (p.big_t - big_t).abs() < 1e-12)
    }

    #[test]
    fn tt_pairs_of_example_one() {
        let pairs = solve_tt(&example1(Signature::CL30), 1e-9).unwrap();
        assert!(has_pair(&pairs, 0.25, -0.5));
        assert!(has_pair(&pairs, -0.25, 0.5));
        let pairs = solve_tt(&example1(Signature::CL03), 1e-9).unwrap();
        assert!(has_pair(&pairs, 0.25, 0.5));
        assert!(has_pair(&pairs, -0.25, -0.5));
        assert!(solve_tt(&example1(Signature::CL21), 1e-9)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn degenerate_ss_pairs() {
        let pairs = solve_ss(TtPair { t: 0.0, big_t: 0.5 }, Signature::CL21, 1e-9);
        for (s, big_s) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)] {
            assert!(
                pairs
                    .iter()
                    .any(|p| (p.s - s).abs() < 1e-12 && (p.big_s - big_s).abs() < 1e-12),
                "missing ({s}, {big_s}) in {pairs:?}"
            );
        }
    }

    #[test]
    fn recover_rejects_singular_pairs() {
        let b = example1(Signature::CL03);
        let err = recover_vectors(&b, SsPair { s: 0.5, big_s: 0.5 }, 1e-9).unwrap_err();
        assert!(matches!(err, Error::GenericInapplicable { .. }));
        assert!(recover_vectors(&b, SsPair { s: 0.0, big_s: 0.0 }, 1e-9).is_err());
    }

    #[test]
    fn recover_zero_vectors() {
        for sig in [
            Signature::CL30,
            Signature::CL12,
            Signature::CL03,
            Signature::CL21,
        ] {
            let mut b = Multivector::scalar(sig, 3.0);
            b.coeffs_mut()[7] = -1.0;
            let a = recover_vectors(&b, SsPair { s: 0.7, big_s: 0.2 }, 1e-9).unwrap();
            assert_eq!(&a.coeffs()[1..7], &[0.0; 6]);
        }
    }
}
