//! `mvsqrt`: square roots of multivectors from the command line.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mvsqrt::matrix::demonstrate_mismatch;
use mvsqrt::oracle::{compare_root_sets, numeric_root_search, residual, OracleConfig};
use mvsqrt::{parse_mv, sqrt_with, Error, Multivector, Signature, SolverConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use report::{Document, FamilySamples, OracleDoc, SampledRoot, SqrtDoc, VerifyDoc};

#[derive(Debug, Parser)]
#[command(
    name = "mvsqrt",
    version,
    about = "Square roots of multivectors in Cl(p,q), p+q <= 3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All square roots of a multivector: isolated roots and families.
    Sqrt(Common),
    /// Residual of a candidate root.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Candidate root A; the residual is ||A^2 - B||_inf.
        #[arg(long, allow_hyphen_values = true)]
        candidate: String,
    },
    /// Roots drawn from each parametric family.
    Sample {
        #[command(flatten)]
        common: Common,
        /// Points drawn per family.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Multistart numerical search compared with the closed-form result.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random starts.
        #[arg(long, default_value_t = 512)]
        starts: usize,
    },
    /// Square roots via 2x2 complex matrices, mapped back to Cl(3,0).
    DemoMatrix(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Algebra as "p,q".
    #[arg(long)]
    algebra: Signature,
    /// The multivector B, e.g. "e1 - 2 e23".
    #[arg(allow_hyphen_values = true)]
    mv: String,
    /// Residual tolerance.
    #[arg(long, env = "MV_ROOT_TOL", default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A failure with the input text it refers to, if any.
struct Failure {
    error: Error,
    source: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            error,
            source: None,
        }
    }
}

impl Common {
    fn config(&self) -> Result<SolverConfig, Failure> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tol
            ))
            .into());
        }
        Ok(SolverConfig::with_tol(self.tol))
    }

    fn input(&self) -> Result<Multivector, Failure> {
        parse(&self.mv, self.algebra)
    }
}

fn parse(text: &str, sig: Signature) -> Result<Multivector, Failure> {
    parse_mv(text, sig).map_err(|error| Failure {
        error,
        source: Some(text.to_string()),
    })
}

fn run(cli: Cli) -> Result<(Document, Format), Failure> {
    match cli.command {
        Command::Sqrt(c) => {
            let cfg = c.config()?;
            let roots = sqrt_with(&c.input()?, &cfg);
            Ok((Document::Sqrt(SqrtDoc::new(&roots, cfg.tol)), c.format))
        }
        Command::Verify {
            common: c,
            candidate,
        } => {
            let tol = c.config()?.tol;
            let b = c.input()?;
            let a = parse(&candidate, c.algebra)?;
            let r = residual(&a, &b)?;
            Ok((Document::Verify(VerifyDoc::new(&b, &a, r, tol)), c.format))
        }
        Command::Sample {
            common: c,
            samples,
            seed,
        } => {
            let cfg = c.config()?;
            let roots = sqrt_with(&c.input()?, &cfg);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let families = roots
                .families
                .iter()
                .map(|f| {
                    let points = f
                        .sample_params(&mut rng, samples, cfg.probe.lo, cfg.probe.hi, cfg.tol)
                        .into_iter()
                        .filter_map(|p| {
                            let a = f.evaluate(&p, cfg.tol)?;
                            Some(SampledRoot::new(p, &a, &roots.input))
                        })
                        .collect();
                    FamilySamples::new(f, points)
                })
                .collect();
            Ok((Document::Sample(families), c.format))
        }
        Command::Oracle {
            common: c,
            seed,
            starts,
        } => {
            let cfg = c.config()?;
            let b = c.input()?;
            let oracle = OracleConfig {
                n_starts: starts,
                seed,
                ..OracleConfig::default()
            };
            oracle.validate()?;
            let roots = sqrt_with(&b, &cfg);
            let numeric = numeric_root_search(&b, &oracle);
            let report = compare_root_sets(&roots, &numeric, 1e-6);
            Ok((
                Document::Oracle(OracleDoc::new(&b, &numeric, report)),
                c.format,
            ))
        }
        Command::DemoMatrix(c) => {
            c.config()?;
            let report = demonstrate_mismatch(&c.input()?)?;
            Ok((Document::Matrix(report), c.format))
        }
    }
}

fn print_failure(f: &Failure) {
    eprintln!("error: {}", f.error);
    if let (Error::Parse { span, .. }, Some(text)) = (&f.error, &f.source) {
        let start = text[..span.start.min(text.len())].chars().count();
        let width = text
            .get(span.clone())
            .map_or(1, |s| s.chars().count().max(1));
        eprintln!("  {text}");
        eprintln!("  {}{}", " ".repeat(start), "^".repeat(width));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((doc, Format::Text)) => {
            print!("{}", doc.to_text());
            ExitCode::SUCCESS
        }
        Ok((doc, Format::Json)) => match serde_json::to_string_pretty(&doc) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Err(f) => {
            print_failure(&f);
            ExitCode::from(2)
        }
    }
}
