//! Output documents and their text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use mvsqrt::matrix::MismatchReport;
use mvsqrt::oracle::ComparisonReport;
use mvsqrt::solver::{CaseTag, ProbeSummary};
use mvsqrt::{determinant, format_mv, invariants3, Multivector, ParametricFamily, RootSet};
use serde::Serialize;

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Document {
    Sqrt(SqrtDoc),
    Verify(VerifyDoc),
    Sample(Vec<FamilySamples>),
    Oracle(OracleDoc),
    Matrix(MismatchReport),
}

#[derive(Debug, Serialize)]
pub struct RootDoc {
    pub coeffs: Vec<f64>,
    pub residual: f64,
    pub text: String,
}

impl RootDoc {
    fn new(a: &Multivector, b: &Multivector) -> Self {
        RootDoc {
            coeffs: a.coeffs().to_vec(),
            residual: (a.square() - *b).norm_inf(),
            text: format_mv(a),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyDoc {
    pub case: CaseTag,
    pub dimension: usize,
    pub params: Vec<&'static str>,
    pub signs: BTreeMap<&'static str, f64>,
    pub feasible_probe: ProbeSummary,
}

#[derive(Debug, Serialize)]
pub struct SqrtDoc {
    pub algebra: String,
    pub input: Vec<f64>,
    #[serde(rename = "bS")]
    pub bs: Option<f64>,
    #[serde(rename = "bI")]
    pub bi: Option<f64>,
    #[serde(rename = "D")]
    pub det: f64,
    pub isolated: Vec<RootDoc>,
    pub families: Vec<FamilyDoc>,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    input_text: String,
    #[serde(skip)]
    tol: f64,
}

impl SqrtDoc {
    pub fn new(roots: &RootSet, tol: f64) -> Self {
        let b = &roots.input;
        let inv = invariants3(b).ok();
        SqrtDoc {
            algebra: roots.signature().to_string(),
            input: b.coeffs().to_vec(),
            bs: inv.map(|i| i.bs),
            bi: inv.map(|i| i.bi),
            det: determinant(b),
            isolated: roots.isolated.iter().map(|a| RootDoc::new(a, b)).collect(),
            families: roots
                .families
                .iter()
                .zip(&roots.diagnostics.probes)
                .map(|(f, p)| FamilyDoc {
                    case: f.case(),
                    dimension: f.dimension(),
                    params: f.param_names().to_vec(),
                    signs: f.branch_signs().into_iter().collect(),
                    feasible_probe: *p,
                })
                .collect(),
            diagnostics: roots.diagnostics.messages(),
            input_text: format_mv(b),
            tol,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub algebra: String,
    pub input: Vec<f64>,
    pub candidate: Vec<f64>,
    pub residual: f64,
    pub is_root: bool,
}

impl VerifyDoc {
    pub fn new(b: &Multivector, a: &Multivector, residual: f64, tol: f64) -> Self {
        VerifyDoc {
            algebra: b.signature().to_string(),
            input: b.coeffs().to_vec(),
            candidate: a.coeffs().to_vec(),
            residual,
            is_root: residual <= tol,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SampledRoot {
    pub params: Vec<f64>,
    #[serde(flatten)]
    pub root: RootDoc,
}

impl SampledRoot {
    pub fn new(params: Vec<f64>, a: &Multivector, b: &Multivector) -> Self {
        SampledRoot {
            params,
            root: RootDoc::new(a, b),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilySamples {
    pub case: CaseTag,
    pub params: Vec<&'static str>,
    pub signs: BTreeMap<&'static str, f64>,
    pub roots: Vec<SampledRoot>,
}

impl FamilySamples {
    pub fn new(f: &ParametricFamily, roots: Vec<SampledRoot>) -> Self {
        FamilySamples {
            case: f.case(),
            params: f.param_names().to_vec(),
            signs: f.branch_signs().into_iter().collect(),
            roots,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OracleDoc {
    pub algebra: String,
    pub input: Vec<f64>,
    pub clusters: Vec<RootDoc>,
    pub comparison: ComparisonReport,
    pub consistent: bool,
}

impl OracleDoc {
    pub fn new(b: &Multivector, numeric: &[Multivector], comparison: ComparisonReport) -> Self {
        OracleDoc {
            algebra: b.signature().to_string(),
            input: b.coeffs().to_vec(),
            clusters: numeric.iter().map(|a| RootDoc::new(a, b)).collect(),
            consistent: comparison.is_consistent(),
            comparison,
        }
    }
}

fn signs(s: &BTreeMap<&str, f64>) -> String {
    s.iter()
        .map(|(k, v)| format!("{k}={}", if *v < 0.0 { '-' } else { '+' }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn complex(z: &[f64; 2]) -> String {
    format!("{}{:+}i", z[0], z[1])
}

impl Document {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Document::Sqrt(d) => sqrt_text(&mut out, d),
            Document::Verify(d) => {
                let _ = writeln!(out, "residual {:e}", d.residual);
                let _ = writeln!(
                    out,
                    "{}",
                    if d.is_root {
                        "is a square root"
                    } else {
                        "is not a square root"
                    }
                );
            }
            Document::Sample(fams) => {
                if fams.is_empty() {
                    out.push_str("no parametric families\n");
                }
                for f in fams {
                    let _ = writeln!(
                        out,
                        "family {} [{}] ({})",
                        f.case,
                        signs(&f.signs),
                        f.params.join(", ")
                    );
                    if f.roots.is_empty() {
                        out.push_str("  no valid parameter points found\n");
                    }
                    for r in &f.roots {
                        let _ = writeln!(
                            out,
                            "  {:?} -> {}   residual {:.2e}",
                            r.params, r.root.text, r.root.residual
                        );
                    }
                }
            }
            Document::Oracle(d) => {
                let _ = writeln!(out, "{} numerical root clusters", d.clusters.len());
                for c in &d.clusters {
                    let _ = writeln!(out, "  {}   residual {:.2e}", c.text, c.residual);
                }
                let r = &d.comparison;
                let _ = writeln!(
                    out,
                    "matched isolated {}, matched by family {}, unmatched numeric {}, isolated not reached {}",
                    r.matched_isolated,
                    r.matched_by_family,
                    r.unmatched_numeric.len(),
                    r.unmatched_isolated.len()
                );
                if r.continuum_suspected {
                    out.push_str("continuum suspected\n");
                }
                let _ = writeln!(
                    out,
                    "{}",
                    if d.consistent {
                        "consistent"
                    } else {
                        "inconsistent"
                    }
                );
            }
            Document::Matrix(r) => {
                for b in &r.branches {
                    let _ = writeln!(out, "branch eps1={:+} eps2={:+}", b.eps1, b.eps2);
                    if b.singular {
                        out.push_str("  singular\n");
                        continue;
                    }
                    let root: Vec<String> = b.root.iter().map(complex).collect();
                    let sq: Vec<String> = b.root_square.iter().map(complex).collect();
                    let _ = writeln!(out, "  A   = [{}]", root.join(", "));
                    let _ = writeln!(out, "  A^2 = [{}]", sq.join(", "));
                    let _ = writeln!(
                        out,
                        "  imaginary content {:.3}, |A^2 - B| {:.3}, |Re(A)^2 - B| {:.3}, matrix residual {:.1e}",
                        b.imaginary_content, b.square_deviation, b.real_part_deviation, b.matrix_residual
                    );
                    let _ = writeln!(
                        out,
                        "  real preimage {:?}, residual {:.1e}",
                        b.real_preimage, b.real_preimage_residual
                    );
                }
            }
        }
        out
    }
}

fn sqrt_text(out: &mut String, d: &SqrtDoc) {
    let _ = writeln!(out, "{}  B = {}", d.algebra, d.input_text);
    match (d.bs, d.bi) {
        (Some(bs), Some(bi)) => {
            let _ = writeln!(out, "bS = {bs}  bI = {bi}  D = {}", d.det);
        }
        _ => {
            let _ = writeln!(out, "D = {}", d.det);
        }
    }
    if d.isolated.is_empty() && d.families.is_empty() {
        out.push_str("no real square roots\n");
    }
    if !d.isolated.is_empty() {
        let _ = writeln!(out, "{} isolated roots:", d.isolated.len());
        for (k, r) in d.isolated.iter().enumerate() {
            let _ = writeln!(
                out,
                "  A{} = {}   residual {:.2e}",
                k + 1,
                r.text,
                r.residual
            );
        }
    }
    if !d.families.is_empty() {
        let _ = writeln!(out, "{} parametric families:", d.families.len());
        for f in &d.families {
            let p = &f.feasible_probe;
            let _ = writeln!(
                out,
                "  {} [{}] free ({}), dimension {}, {} ({} of {} grid points feasible)",
                f.case,
                signs(&f.signs),
                f.params.join(", "),
                f.dimension,
                match p.feasibility {
                    mvsqrt::solver::Feasibility::Manifold => "manifold",
                    mvsqrt::solver::Feasibility::Degenerate => "measure-zero",
                    mvsqrt::solver::Feasibility::Empty => "empty",
                },
                p.feasible,
                p.samples
            );
        }
    }
    if !d.diagnostics.is_empty() {
        out.push_str("diagnostics:\n");
        for m in d
            .diagnostics
            .iter()
            .filter(|m| m.as_str() != "no real square roots")
        {
            let _ = writeln!(out, "  {m}");
        }
    }
    let _ = writeln!(out, "tolerance {:e}", d.tol);
}
