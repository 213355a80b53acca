//! Parametric families of square roots (continua of solutions).

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::radical::clamped_sqrt;
use crate::algebra::{pseudoscalar_square, Multivector, Signature, SymmetricForm};

/// Which degenerate branch of the case analysis produced a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    /// Two-dimensional algebras with vanishing scalar part.
    #[serde(rename = "dim2-s0")]
    Dim2S0,
    /// Three-dimensional algebras with `s = S != 0`.
    #[serde(rename = "sS-plus")]
    SsPlus,
    /// Three-dimensional algebras with `s = -S != 0`.
    #[serde(rename = "sS-minus")]
    SsMinus,
    /// Three-dimensional algebras with `s = S = 0`.
    #[serde(rename = "sS-zero")]
    SsZero,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Dim2S0 => "dim2-s0",
            CaseTag::SsPlus => "sS-plus",
            CaseTag::SsMinus => "sS-minus",
            CaseTag::SsZero => "sS-zero",
        }
    }

    /// Whether `a` satisfies this branch's defining constraint within `tol`.
    pub fn matches(self, a: &Multivector, tol: f64) -> bool {
        let c = a.coeffs();
        match self {
            CaseTag::Dim2S0 => a.signature().dim() == 2 && c[0].abs() <= tol,
            _ if a.signature().dim() != 3 => false,
            CaseTag::SsPlus => (c[0] - c[7]).abs() <= tol,
            CaseTag::SsMinus => (c[0] + c[7]).abs() <= tol,
            CaseTag::SsZero => c[0].abs() <= tol && c[7].abs() <= tol,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exact description of the set of parameters where a family is real.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feasibility {
    /// The valid parameters form a set of positive measure.
    Manifold,
    /// Valid parameters exist but form a set of measure zero, such as a point.
    Degenerate,
    /// No real parameter values are valid.
    Empty,
}

/// Classifies `{x : k + sum_i d_i x_i^2 >= 0}`.
pub(crate) fn classify_radicand(k: f64, d: &[f64], tol: f64) -> Feasibility {
    if d.iter().any(|&di| di > 0.0) || k > tol {
        Feasibility::Manifold
    } else if k >= -tol {
        Feasibility::Degenerate
    } else {
        Feasibility::Empty
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    /// `A = v1 e1 + v2 e2 + S e12`.
    Dim2 { b0: f64, eps: f64 },
    /// `s = sigma S`, `v = w - sigma V`, `g.U^2 = kappa` with `U = V - sigma w / 2`.
    Equal {
        sigma: f64,
        s: f64,
        w: [f64; 3],
        kappa: f64,
        eps: f64,
    },
    /// `s = S = 0` in an algebra with `I^2 = -1`.
    ZeroElliptic { b0: f64, b123: f64, eps: f64 },
    /// `s = S = 0` in an algebra with `I^2 = +1`.
    ZeroHyperbolic {
        b0: f64,
        b123: f64,
        eps_plus: f64,
        eps_minus: f64,
    },
}

/// A closed-form map from free parameters to square roots of a fixed `B`.
///
/// `evaluate` yields a root for every parameter vector passing `is_valid`;
/// the branch signs fixed for this member of the family are listed by
/// [`ParametricFamily::branch_signs`].
#[derive(Debug, Clone, PartialEq)]
pub struct ParametricFamily {
    target: Multivector,
    case: CaseTag,
    kind: Kind,
}

/// Result of evaluating a family on a parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbeSummary {
    pub samples: usize,
    pub feasible: usize,
    /// Largest `||A^2 - B||_inf` over the feasible samples.
    pub max_residual: f64,
    pub feasibility: Feasibility,
}

/// Parameter grid used to probe families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeConfig {
    pub lo: f64,
    pub hi: f64,
    /// Grid points per axis for two-parameter families.
    pub points_2d: usize,
    /// Grid points per axis for four-parameter families.
    pub points_4d: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            lo: -5.0,
            hi: 5.0,
            points_2d: 100,
            points_4d: 10,
        }
    }
}

impl ParametricFamily {
    pub(crate) fn dim2(target: Multivector, eps: f64) -> Self {
        ParametricFamily {
            case: CaseTag::Dim2S0,
            kind: Kind::Dim2 { b0: target[0], eps },
            target,
        }
    }

    pub(crate) fn equal(target: Multivector, sigma: f64, s: f64, eps: f64) -> Self {
        let c = target.coeffs();
        let w = [c[1] / (2.0 * s), c[2] / (2.0 * s), c[3] / (2.0 * s)];
        let kappa = (c[0] - sigma * c[7]) / 4.0;
        ParametricFamily {
            case: if sigma > 0.0 {
                CaseTag::SsPlus
            } else {
                CaseTag::SsMinus
            },
            kind: Kind::Equal {
                sigma,
                s,
                w,
                kappa,
                eps,
            },
            target,
        }
    }

    pub(crate) fn zero(target: Multivector, eps: f64, eps_minus: f64) -> Self {
        let (b0, b123) = (target[0], target[7]);
        let kind = if pseudoscalar_square(target.signature()) < 0.0 {
            Kind::ZeroElliptic { b0, b123, eps }
        } else {
            Kind::ZeroHyperbolic {
                b0,
                b123,
                eps_plus: eps,
                eps_minus,
            }
        };
        ParametricFamily {
            target,
            case: CaseTag::SsZero,
            kind,
        }
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn signature(&self) -> Signature {
        self.target.signature()
    }

    /// The multivector whose roots this family parametrises.
    pub fn target(&self) -> &Multivector {
        &self.target
    }

    /// Manifold dimension, equal to the number of free parameters.
    pub fn dimension(&self) -> usize {
        self.param_names().len()
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        match self.kind {
            Kind::Dim2 { .. } => &["v1", "v2"],
            Kind::Equal { .. } => &["V2", "V3"],
            Kind::ZeroElliptic { .. } | Kind::ZeroHyperbolic { .. } => &["v2", "v3", "V2", "V3"],
        }
    }

    /// The sign choices fixed for this family, by name.
    pub fn branch_signs(&self) -> Vec<(&'static str, f64)> {
        match self.kind {
            Kind::Dim2 { eps, .. } => vec![("S", eps)],
            Kind::Equal { sigma, s, eps, .. } => {
                vec![("sigma", sigma), ("s", s.signum()), ("V1", eps)]
            }
            Kind::ZeroElliptic { eps, .. } => vec![("v1+iV1", eps)],
            Kind::ZeroHyperbolic {
                eps_plus,
                eps_minus,
                ..
            } => vec![("v1+V1", eps_plus), ("v1-V1", eps_minus)],
        }
    }

    /// The fixed scalar part `s` (and `S = sigma s`) of an `s = +-S` family.
    pub fn scalar_part(&self) -> Option<f64> {
        match self.kind {
            Kind::Equal { s, .. } => Some(s),
            _ => None,
        }
    }

    /// Values that must be non-negative for `params` to give a real root.
    pub fn radicands(&self, params: &[f64]) -> Vec<f64> {
        assert_eq!(params.len(), self.dimension(), "wrong parameter count");
        let g = self.signature().metric();
        match self.kind {
            Kind::Dim2 { b0, .. } => {
                vec![g[1] * params[0] * params[0] + g[0] * params[1] * params[1] - g[0] * g[1] * b0]
            }
            Kind::Equal {
                sigma, w, kappa, ..
            } => {
                let u2 = params[0] - sigma * w[1] / 2.0;
                let u3 = params[1] - sigma * w[2] / 2.0;
                vec![g[0] * (kappa - g[1] * u2 * u2 - g[2] * u3 * u3)]
            }
            Kind::ZeroElliptic { .. } => Vec::new(),
            Kind::ZeroHyperbolic { b0, b123, .. } => {
                let (alpha, beta) = zero_rhs(b0, b123, g, 1.0, params);
                vec![g[0] * (alpha + beta), g[0] * (alpha - beta)]
            }
        }
    }

    pub fn is_valid(&self, params: &[f64], tol: f64) -> bool {
        self.radicands(params).iter().all(|&r| r >= -tol)
    }

    /// The root at `params`, or `None` outside the validity region.
    pub fn evaluate(&self, params: &[f64], tol: f64) -> Option<Multivector> {
        let radicands = self.radicands(params);
        let roots: Option<Vec<f64>> = radicands.iter().map(|&r| clamped_sqrt(r, tol)).collect();
        let roots = roots?;
        let sig = self.signature();
        let g = sig.metric();
        match self.kind {
            Kind::Dim2 { eps, .. } => {
                Multivector::from_coeffs(sig, &[0.0, params[0], params[1], eps * roots[0]]).ok()
            }
            Kind::Equal {
                sigma, s, w, eps, ..
            } => {
                let big_v = [eps * roots[0] + sigma * w[0] / 2.0, params[0], params[1]];
                let v = [
                    w[0] - sigma * big_v[0],
                    w[1] - sigma * big_v[1],
                    w[2] - sigma * big_v[2],
                ];
                let form = SymmetricForm {
                    scalar: s,
                    vector: v,
                    pseudoscalar: sigma * s,
                    dual: big_v,
                };
                form.to_multivector(sig).ok()
            }
            Kind::ZeroElliptic { b0, b123, eps } => {
                let (alpha, beta) = zero_rhs(b0, b123, g, -1.0, params);
                let z = eps * Complex64::new(g[0] * alpha, g[0] * beta).sqrt();
                zero_root(sig, z.re, z.im, params)
            }
            Kind::ZeroHyperbolic {
                eps_plus,
                eps_minus,
                ..
            } => {
                let plus = eps_plus * roots[0];
                let minus = eps_minus * roots[1];
                zero_root(sig, 0.5 * (plus + minus), 0.5 * (plus - minus), params)
            }
        }
    }

    /// Exact classification of the validity region.
    pub fn feasibility(&self, tol: f64) -> Feasibility {
        let g = self.signature().metric();
        match self.kind {
            Kind::Dim2 { b0, .. } => classify_radicand(-g[0] * g[1] * b0, &[g[1], g[0]], tol),
            Kind::Equal { kappa, .. } => {
                classify_radicand(g[0] * kappa, &[-g[0] * g[1], -g[0] * g[2]], tol)
            }
            Kind::ZeroElliptic { .. } => Feasibility::Manifold,
            Kind::ZeroHyperbolic { b0, b123, .. } => {
                // with p = v + V and m = v - V the two radicands decouple
                let d = [-g[0] * g[1], -g[0] * g[2]];
                let plus = classify_radicand(g[0] * (b0 + b123), &d, tol);
                let minus = classify_radicand(g[0] * (b0 - b123), &d, tol);
                match (plus, minus) {
                    (Feasibility::Empty, _) | (_, Feasibility::Empty) => Feasibility::Empty,
                    (Feasibility::Manifold, Feasibility::Manifold) => Feasibility::Manifold,
                    _ => Feasibility::Degenerate,
                }
            }
        }
    }

    /// Parameters at the centre of the validity region, if that point is valid.
    ///
    /// For families whose feasible set degenerates to a point this is the
    /// only root the family contributes.
    pub fn witness(&self, tol: f64) -> Option<Vec<f64>> {
        let params = match self.kind {
            Kind::Equal { sigma, w, .. } => vec![sigma * w[1] / 2.0, sigma * w[2] / 2.0],
            _ => vec![0.0; self.dimension()],
        };
        self.is_valid(&params, tol).then_some(params)
    }

    /// Evaluates the family on a uniform grid over `[lo, hi]^dimension`.
    pub fn probe(&self, cfg: &ProbeConfig, tol: f64) -> ProbeSummary {
        let dim = self.dimension();
        let per_axis = if dim <= 2 {
            cfg.points_2d
        } else {
            cfg.points_4d
        }
        .max(2);
        let axis: Vec<f64> = (0..per_axis)
            .map(|k| cfg.lo + (cfg.hi - cfg.lo) * k as f64 / (per_axis - 1) as f64)
            .collect();
        let samples = per_axis.pow(dim as u32);
        let mut params = vec![0.0; dim];
        let mut feasible = 0;
        let mut max_residual: f64 = 0.0;
        for idx in 0..samples {
            let mut rest = idx;
            for p in params.iter_mut() {
                *p = axis[rest % per_axis];
                rest /= per_axis;
            }
            if let Some(a) = self.evaluate(&params, tol) {
                feasible += 1;
                max_residual = max_residual.max((a.square() - self.target).norm_inf());
            }
        }
        ProbeSummary {
            samples,
            feasible,
            max_residual,
            feasibility: self.feasibility(tol),
        }
    }

    /// Draws up to `count` valid parameter vectors uniformly from
    /// `[lo, hi]^dimension` by rejection, falling back to the witness point
    /// when the valid set has measure zero.
    pub fn sample_params<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        count: usize,
        lo: f64,
        hi: f64,
        tol: f64,
    ) -> Vec<Vec<f64>> {
        let dim = self.dimension();
        let mut out = Vec::with_capacity(count);
        match self.feasibility(tol) {
            Feasibility::Empty => return out,
            Feasibility::Degenerate => {
                out.extend(self.witness(tol));
                return out;
            }
            Feasibility::Manifold => {}
        }
        let budget = 2000 * count.max(1);
        for _ in 0..budget {
            if out.len() == count {
                break;
            }
            let params: Vec<f64> = (0..dim).map(|_| rng.random_range(lo..=hi)).collect();
            if self.is_valid(&params, 0.0) {
                out.push(params);
            }
        }
        out
    }
}

/// Right-hand sides left for the `(v1, V1)` pair in the `s = S = 0` system.
fn zero_rhs(b0: f64, b123: f64, g: [f64; 3], iota: f64, params: &[f64]) -> (f64, f64) {
    let (v2, v3, big_v2, big_v3) = (params[0], params[1], params[2], params[3]);
    let alpha =
        b0 - g[1] * (v2 * v2 + iota * big_v2 * big_v2) - g[2] * (v3 * v3 + iota * big_v3 * big_v3);
    let beta = b123 - 2.0 * (g[1] * v2 * big_v2 + g[2] * v3 * big_v3);
    (alpha, beta)
}

fn zero_root(sig: Signature, v1: f64, big_v1: f64, params: &[f64]) -> Option<Multivector> {
    let form = SymmetricForm {
        scalar: 0.0,
        vector: [v1, params[0], params[1]],
        pseudoscalar: 0.0,
        dual: [big_v1, params[2], params[3]],
    };
    form.to_multivector(sig).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        assert_eq!(
            classify_radicand(1.0, &[-1.0, -1.0], 1e-9),
            Feasibility::Manifold
        );
        assert_eq!(
            classify_radicand(-1.0, &[-1.0, 1.0], 1e-9),
            Feasibility::Manifold
        );
        assert_eq!(
            classify_radicand(0.0, &[-1.0, -1.0], 1e-9),
            Feasibility::Degenerate
        );
        assert_eq!(
            classify_radicand(-1.0, &[-1.0, -1.0], 1e-9),
            Feasibility::Empty
        );
    }

    #[test]
    fn unit_disk_family_of_minus_one() {
        let b = Multivector::scalar(Signature::CL02, -1.0);
        let fam = ParametricFamily::dim2(b, 1.0);
        assert_eq!(fam.dimension(), 2);
        assert_eq!(fam.feasibility(1e-9), Feasibility::Manifold);
        let a = fam.evaluate(&[0.6, 0.0], 1e-9).unwrap();
        assert!(a.approx_eq(
            &Multivector::from_coeffs(Signature::CL02, &[0.0, 0.6, 0.0, 0.8]).unwrap(),
            1e-15
        ));
        assert!(fam.evaluate(&[1.0, 1.0], 1e-9).is_none());
        let probe = fam.probe(&ProbeConfig::default(), 1e-9);
        assert_eq!(probe.samples, 10_000);
        assert!(probe.feasible > 0 && probe.max_residual < 1e-12);
    }

    #[test]
    fn zero_families_square_to_target() {
        for sig in [
            Signature::CL30,
            Signature::CL12,
            Signature::CL03,
            Signature::CL21,
        ] {
            let mut c = [0.0; 8];
            c[0] = 2.0;
            c[7] = -0.5;
            let b = Multivector::from_coeffs(sig, &c).unwrap();
            for (e1, e2) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let fam = ParametricFamily::zero(b, e1, e2);
                for params in [
                    [0.1, -0.2, 0.3, 0.05],
                    [0.0, 0.0, 0.0, 0.0],
                    [1.5, 0.2, -0.7, 0.4],
                ] {
                    if let Some(a) = fam.evaluate(&params, 1e-9) {
                        assert!(a.square().approx_eq(&b, 1e-12), "{sig} {params:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn case_tag_constraints() {
        let sig = Signature::CL03;
        let a = Multivector::from_coeffs(sig, &[0.5, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5]).unwrap();
        assert!(CaseTag::SsPlus.matches(&a, 1e-9));
        assert!(!CaseTag::SsMinus.matches(&a, 1e-9));
        assert!(!CaseTag::SsZero.matches(&a, 1e-9));
        assert!(!CaseTag::Dim2S0.matches(&a, 1e-9));
        assert_eq!(CaseTag::SsMinus.to_string(), "sS-minus");
    }
}
