//! Brute-force numerical search for square roots, used to cross-check the
//! closed-form solver.
//!
//! Seeded random starting points are driven to roots of `A^2 - B` by damped
//! Newton iteration, and converged points are clustered.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::newton::{self, NewtonOptions, Outcome};
use crate::solver::RootSet;

/// Settings of the multistart search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub n_starts: usize,
    pub seed: u64,
    /// Starting coefficients are drawn uniformly from `[box_lo, box_hi]`.
    pub box_lo: f64,
    pub box_hi: f64,
    /// Residual target, relative to `max(1, ||B||_inf)`.
    pub newton_tol: f64,
    pub max_iters: usize,
    pub cluster_radius: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            n_starts: 512,
            seed: 0,
            box_lo: -5.0,
            box_hi: 5.0,
            newton_tol: 1e-12,
            max_iters: 200,
            cluster_radius: 1e-6,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if self.n_starts == 0 {
            return bad("n_starts must be at least 1");
        }
        if self.cluster_radius.partial_cmp(&self.newton_tol) != Some(std::cmp::Ordering::Greater) {
            return bad("cluster_radius must exceed newton_tol");
        }
        if self.box_lo.partial_cmp(&self.box_hi) != Some(std::cmp::Ordering::Less) {
            return bad("empty sampling box");
        }
        Ok(())
    }
}

/// `||A A - B||_inf`.
pub fn residual(a: &Multivector, b: &Multivector) -> Result<f64> {
    a.geometric_product(a)?.distance_inf(b)
}

/// Largest number of isolated roots a multivector can have in `sig`.
pub fn isolated_root_bound(sig: Signature) -> usize {
    match (sig.p(), sig.q()) {
        (0, 1) => 2,
        (2, 1) => 16,
        _ => 4,
    }
}

/// Clustered numerical roots of `B`, sorted lexicographically by coefficient.
///
/// Start `i` draws its initial point from stream `i` of a ChaCha generator
/// seeded with `cfg.seed`, so the result depends only on `B` and `cfg`.
pub fn numeric_root_search(b: &Multivector, cfg: &OracleConfig) -> Vec<Multivector> {
    let sig = b.signature();
    let n = sig.blade_count();
    let opts = NewtonOptions {
        target: cfg.newton_tol * b.norm_inf().max(1.0),
        max_iters: cfg.max_iters,
        divergence: 1e8,
    };
    let mut converged = Vec::new();
    for i in 0..cfg.n_starts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(i as u64);
        let mut start = Multivector::zero(sig);
        for c in start.coeffs_mut().iter_mut().take(n) {
            *c = rng.random_range(cfg.box_lo..=cfg.box_hi);
        }
        let (x, _, outcome) = newton::solve(start, b, &opts);
        if outcome == Outcome::Converged {
            converged.push(x);
        }
    }
    cluster(converged, cfg.cluster_radius)
}

/// Sorts the points and merges each into the first earlier representative
/// within `radius`.
fn cluster(mut points: Vec<Multivector>, radius: f64) -> Vec<Multivector> {
    points.sort_by(|a, b| {
        a.coeffs()
            .iter()
            .zip(b.coeffs())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut reps: Vec<Multivector> = Vec::new();
    for p in points {
        if !reps.iter().any(|r| r.approx_eq(&p, radius)) {
            reps.push(p);
        }
    }
    reps
}

/// Agreement between the closed-form and the numerical root sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    /// Numerical roots explained neither by an isolated root nor by a family.
    pub unmatched_numeric: Vec<Vec<f64>>,
    /// Isolated roots the search did not reach; a sign of under-sampling.
    pub unmatched_isolated: Vec<Vec<f64>>,
    pub matched_isolated: usize,
    pub matched_by_family: usize,
    /// More clusters than the algebra admits isolated roots, times four.
    pub continuum_suspected: bool,
}

impl ComparisonReport {
    pub fn is_consistent(&self) -> bool {
        self.unmatched_numeric.is_empty()
    }
}

/// Matches every numerical root against the solver's answer.
///
/// A numerical root is explained by an isolated root within `tol`, or by a
/// family whose case constraint (`s = S`, `s = -S`, `s = S = 0` or `s = 0`)
/// it satisfies within `tol` while squaring to `B` within `tol`.
pub fn compare_root_sets(
    symbolic: &RootSet,
    numeric: &[Multivector],
    tol: f64,
) -> ComparisonReport {
    let b = &symbolic.input;
    let mut report = ComparisonReport {
        unmatched_numeric: Vec::new(),
        unmatched_isolated: Vec::new(),
        matched_isolated: 0,
        matched_by_family: 0,
        continuum_suspected: numeric.len() > 4 * isolated_root_bound(b.signature()),
    };
    for x in numeric {
        if symbolic.isolated.iter().any(|r| r.approx_eq(x, tol)) {
            report.matched_isolated += 1;
            continue;
        }
        let in_family = residual(x, b).is_ok_and(|r| r <= tol)
            && symbolic.families.iter().any(|f| {
                f.case().matches(x, tol) && f.scalar_part().is_none_or(|s| (s - x[0]).abs() <= tol)
            });
        if in_family {
            report.matched_by_family += 1;
        } else {
            report.unmatched_numeric.push(x.coeffs().to_vec());
        }
    }
    for r in &symbolic.isolated {
        if !numeric.iter().any(|x| x.approx_eq(r, tol)) {
            report.unmatched_isolated.push(r.coeffs().to_vec());
        }
    }
    report
}
