//! Cancellation-free evaluation of the nested radicals used by the solver.

/// Evaluates `(a + sigma * sqrt(a^2 - c)) / 2` for `sigma = +-1`.
///
/// Returns `None` when `a^2 - c < -tol`; smaller negative discriminants are
/// clamped to zero. When `sigma * a < 0` the sum suffers cancellation, so the
/// conjugate form `c / (2 (a - sigma sqrt(a^2 - c)))` is used instead.
pub fn half_root(a: f64, c: f64, sigma: f64, tol: f64) -> Option<f64> {
    let disc = a * a - c;
    if disc < -tol {
        return None;
    }
    let r = disc.max(0.0).sqrt();
    if sigma * a < 0.0 {
        let den = a - sigma * r;
        if den == 0.0 {
            return Some(0.0);
        }
        Some(c / (2.0 * den))
    } else {
        Some(0.5 * (a + sigma * r))
    }
}

/// Square root of a radicand, clamping values in `[-tol, 0)` to zero.
pub fn clamped_sqrt(x: f64, tol: f64) -> Option<f64> {
    if x < -tol {
        None
    } else {
        Some(x.max(0.0).sqrt())
    }
}

/// `+1` or `-1` following the sign bit, so that `-0.0` maps to `-1`.
pub(crate) fn sign_of(x: f64) -> f64 {
    1.0f64.copysign(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_branches() {
        // roots of z^2 - 5z + 4: (5 +- 3) / 2
        assert_eq!(half_root(5.0, 16.0, 1.0, 1e-12), Some(4.0));
        assert_eq!(half_root(5.0, 16.0, -1.0, 1e-12), Some(1.0));
        assert_eq!(half_root(-5.0, 16.0, -1.0, 1e-12), Some(-4.0));
        assert_eq!(half_root(-5.0, 16.0, 1.0, 1e-12), Some(-1.0));
        assert_eq!(half_root(1.0, 2.0, 1.0, 1e-12), None);
        assert_eq!(half_root(0.0, 0.0, 1.0, 1e-12), Some(0.0));
        assert_eq!(half_root(0.0, 0.0, -1.0, 1e-12), Some(0.0));
    }

    #[test]
    fn small_branch_keeps_precision() {
        let c = 1e-20;
        let v = half_root(1.0, c, -1.0, 1e-12).unwrap();
        assert!((v - 0.25e-20).abs() < 1e-35);
    }

    #[test]
    fn clamps_tiny_negatives() {
        assert_eq!(clamped_sqrt(-1e-13, 1e-12), Some(0.0));
        assert_eq!(clamped_sqrt(-1e-11, 1e-12), None);
        assert_eq!(clamped_sqrt(4.0, 0.0), Some(2.0));
    }
}
