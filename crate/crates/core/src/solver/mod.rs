//! The square-root case analysis for every algebra with `p + q <= 3`.

mod dim1;
mod dim2;
mod dim3;
mod family;
mod radical;
mod special;

use serde::Serialize;

pub use dim3::{cl30_equal_parts, recover_vectors, solve_ss, solve_tt, SsPair, TtPair};
pub use family::{CaseTag, Feasibility, ParametricFamily, ProbeConfig, ProbeSummary};
pub use radical::{clamped_sqrt, half_root};
pub use special::special_case_roots;

use crate::algebra::{determinant, invariants3, Invariants, Multivector, Signature};
use crate::newton::{self, NewtonOptions};

/// Tolerances and probe settings for [`sqrt_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Branch conditions, radicand clamping and the residual filter.
    pub tol: f64,
    /// Isolated roots closer than this (infinity norm) are merged.
    pub dedup_radius: f64,
    /// Candidates with residual in `(tol, polish_window]` are refined by a
    /// few Newton steps before the residual filter is applied.
    pub polish_window: f64,
    pub probe: ProbeConfig,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-9,
            dedup_radius: 1e-6,
            polish_window: 1e-4,
            probe: ProbeConfig::default(),
        }
    }
}

impl SolverConfig {
    pub fn with_tol(tol: f64) -> Self {
        SolverConfig {
            tol,
            dedup_radius: tol.max(1e-6),
            ..Default::default()
        }
    }
}

/// How the solver arrived at its answer.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    /// `bS`, `bI` and `D` for three-dimensional algebras.
    pub invariants: Option<Invariants>,
    pub determinant: f64,
    /// Branches of the case analysis that produced candidates.
    pub branches: Vec<String>,
    /// Branches discarded because a radicand was negative.
    pub rejected: Vec<String>,
    /// Other remarks, including family feasibility.
    pub notes: Vec<String>,
    /// Grid probe of each family, parallel to [`RootSet::families`].
    pub probes: Vec<ProbeSummary>,
    pub candidates: usize,
    pub residual_failures: usize,
}

impl Diagnostics {
    pub(crate) fn branch(&mut self, msg: String) {
        self.branches.push(msg);
    }

    pub(crate) fn reject(&mut self, msg: String) {
        self.rejected.push(msg);
    }

    pub(crate) fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }

    /// All messages, branches first.
    pub fn messages(&self) -> Vec<String> {
        let mut out = Vec::new();
        out.extend(self.branches.iter().map(|m| format!("branch: {m}")));
        out.extend(self.rejected.iter().map(|m| format!("rejected: {m}")));
        out.extend(self.notes.iter().cloned());
        out
    }
}

/// Every square root of `B` found by the case analysis.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub input: Multivector,
    /// Residual-verified, deduplicated and closed under negation.
    pub isolated: Vec<Multivector>,
    pub families: Vec<ParametricFamily>,
    pub diagnostics: Diagnostics,
}

impl RootSet {
    pub fn signature(&self) -> Signature {
        self.input.signature()
    }

    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.families.is_empty()
    }

    /// `||A^2 - B||_inf` for each isolated root.
    pub fn residuals(&self) -> Vec<f64> {
        self.isolated
            .iter()
            .map(|a| (a.square() - self.input).norm_inf())
            .collect()
    }

    /// Whether some isolated root lies within `tol` of `a`.
    pub fn contains(&self, a: &Multivector, tol: f64) -> bool {
        self.isolated.iter().any(|r| r.approx_eq(a, tol))
    }
}

/// All square roots of `b` with the default configuration.
pub fn sqrt(b: &Multivector) -> RootSet {
    sqrt_with(b, &SolverConfig::default())
}

/// All square roots of `b`.
///
/// Isolated roots come from the closed-form branches; each candidate is kept
/// only if `||A^2 - B||_inf <= cfg.tol`. Parametric families are attached
/// whatever their feasibility, which is reported in the diagnostics.
pub fn sqrt_with(b: &Multivector, cfg: &SolverConfig) -> RootSet {
    let tol = cfg.tol;
    let mut diag = Diagnostics {
        determinant: determinant(b),
        ..Default::default()
    };
    let (candidates, families) = match b.signature().dim() {
        1 => (dim1::candidates(b, tol, &mut diag), Vec::new()),
        2 => dim2::candidates(b, tol, &mut diag),
        _ => {
            let inv = invariants3(b).expect("three-dimensional algebra");
            diag.invariants = Some(inv);
            if inv.det < -tol {
                diag.reject(format!(
                    "determinant negative: D = bS^2 - bI^2 = {} < 0, necessary condition violated",
                    inv.det
                ));
                (Vec::new(), Vec::new())
            } else {
                let cands = dim3::candidates(b, &inv, tol, &mut diag);
                let fams = special::special_cases(b, tol, &mut diag);
                (cands, fams)
            }
        }
    };
    if b.signature().dim() < 3 && diag.determinant < -tol {
        diag.note(format!(
            "determinant {} < 0: no real roots",
            diag.determinant
        ));
    }

    diag.candidates = candidates.len();
    let mut isolated: Vec<Multivector> = Vec::new();
    for a in candidates {
        let Some(a) = verify(a, b, cfg) else {
            diag.residual_failures += 1;
            continue;
        };
        for root in [a, -a] {
            if !isolated
                .iter()
                .any(|r| r.approx_eq(&root, cfg.dedup_radius))
            {
                isolated.push(root);
            }
        }
    }

    for fam in &families {
        let probe = fam.probe(&cfg.probe, tol);
        let tag = fam.case();
        match probe.feasibility {
            Feasibility::Empty => diag.note(format!(
                "family {tag} {:?}: no real parameters satisfy the validity condition",
                fam.branch_signs()
            )),
            Feasibility::Degenerate => {
                let witness = fam
                    .witness(tol)
                    .and_then(|p| fam.evaluate(&p, tol))
                    .map(|a| a.to_string())
                    .unwrap_or_else(|| "on a lower-dimensional set".into());
                diag.note(format!(
                    "family {tag} {:?}: feasible only on a measure-zero set, e.g. A = {witness}",
                    fam.branch_signs()
                ));
            }
            Feasibility::Manifold => {}
        }
        if probe.feasible == 0 {
            diag.note(format!(
                "family {tag} {:?}: no feasible sample among {} grid points",
                fam.branch_signs(),
                probe.samples
            ));
        }
        diag.probes.push(probe);
    }

    if isolated.is_empty() && families.is_empty() {
        diag.note("no real square roots".into());
    }

    RootSet {
        input: *b,
        isolated,
        families,
        diagnostics: diag,
    }
}

/// Accepts `a` if it squares to `b` within tolerance, after an optional
/// Newton refinement for near misses.
fn verify(a: Multivector, b: &Multivector, cfg: &SolverConfig) -> Option<Multivector> {
    if !a.is_finite() {
        return None;
    }
    let res = (a.square() - *b).norm_inf();
    if res <= cfg.tol {
        return Some(a);
    }
    if res > cfg.polish_window {
        return None;
    }
    let opts = NewtonOptions {
        target: cfg.tol * 1e-3,
        max_iters: 30,
        divergence: 1e12,
    };
    let (polished, res, _) = newton::solve(a, b, &opts);
    (res <= cfg.tol && polished.approx_eq(&a, cfg.polish_window.sqrt())).then_some(polished)
}
