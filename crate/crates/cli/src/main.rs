use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;

use sheafcert::arith::FieldSpec;
use sheafcert::curves::{analyze_text, CurveReport, CurveStatus};
use sheafcert::projective::{bott_dimension, CohomologyQuery, CompleteIntersectionSpec};
use sheafcert::stability::{slope_report, Tri};
use sheafcert::vanish::{default_t_min, sweep_range, verify_vanishing, VanishingClaim, VanishingOutcome};
use sheafcert::Error;

mod survey;

#[derive(Parser)]
#[command(
    name = "sheafcert",
    version,
    about = "Cohomology, vanishing certificates, slope stability and splitting types"
)]
struct Cli {
    /// Characteristic of the base field for the curve commands (0 or a prime).
    #[arg(long = "char", global = true, value_name = "P")]
    characteristic: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// Dimension of the ambient projective space.
    #[arg(short = 'n')]
    n: u32,
    /// Comma-separated degrees of the defining equations; omit for P^n.
    #[arg(short = 'd', value_delimiter = ',')]
    degrees: Vec<u32>,
}

impl SpecArgs {
    fn spec(&self) -> Result<CompleteIntersectionSpec, Failure> {
        CompleteIntersectionSpec::normalized(self.n, self.degrees.clone(), FieldSpec::Rational).map_err(Failure::from)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of H^p(P^n, Ω^q(t)).
    #[command(allow_negative_numbers = true)]
    Bott {
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'q')]
        q: u32,
        #[arg(short = 't')]
        t: i64,
    },
    /// Certify H^p(X, Ω^q(t)) = 0, for one claim or the whole vanishing range.
    #[command(allow_negative_numbers = true)]
    Vanish {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short = 'p', requires_all = ["q", "t"])]
        p: Option<u32>,
        #[arg(short = 'q', requires_all = ["p", "t"])]
        q: Option<u32>,
        #[arg(short = 't', requires_all = ["p", "q"])]
        t: Option<i64>,
        /// Intermediate complete intersection X_level cut by the first `level` equations.
        #[arg(long)]
        level: Option<usize>,
        /// Check every claim of the vanishing range down to --tmin.
        #[arg(long, conflicts_with_all = ["p", "q", "t"])]
        sweep: bool,
        #[arg(long)]
        tmin: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Slope of the cotangent sheaf and the stability verdict.
    Stability {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        json: bool,
    },
    /// Splitting type of the pulled-back tangent bundle along each curve in FILE.
    Splitting {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Table over all normalized Fano multidegrees within the bounds.
    #[command(allow_negative_numbers = true)]
    Survey {
        #[arg(long)]
        nmax: u32,
        #[arg(long)]
        dmax: Option<u32>,
        #[arg(long)]
        cmax: Option<u32>,
        #[arg(long)]
        tmin: Option<i64>,
        /// Whether X is known to be separably uniruled (yes, no, unknown).
        #[arg(long, default_value = "unknown")]
        separably_uniruled: Tri,
        /// Whether N_1(X) is known to be generated by free curves (yes, no, unknown).
        #[arg(long, default_value = "unknown")]
        n1_free: Tri,
        #[arg(long)]
        json: bool,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Argument(_) | Error::Parse(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl Failure {
    fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) }
    }
}

type Outcome = Result<u8, Failure>;

/// Pretty JSON with keys in sorted order, so that parsing and re-serializing
/// reproduces the output byte for byte.
fn print_json<T: Serialize>(value: &T) {
    let v = serde_json::to_value(value).expect("reports serialize");
    println!("{}", serde_json::to_string_pretty(&v).expect("values serialize"));
}

/// Integers print bare and negative signs use U+2212.
fn pretty_rational(r: &BigRational) -> String {
    let s = if r.is_integer() { r.numer().to_string() } else { format!("{}/{}", r.numer(), r.denom()) };
    s.replace('-', "\u{2212}")
}

fn cmd_bott(n: u32, p: u32, q: u32, t: i64) -> Outcome {
    println!("{}", bott_dimension(n, CohomologyQuery::new(p, q, t)));
    Ok(0)
}

#[derive(Serialize)]
struct SweepSummary {
    spec: CompleteIntersectionSpec,
    t_min: i64,
    claims: usize,
    certified: usize,
    first_failure: Option<Failed>,
}

#[derive(Serialize)]
struct Failed {
    claim: VanishingClaim,
    reason: sheafcert::vanish::NotCertifiedReason,
}

fn cmd_vanish(
    spec: &SpecArgs,
    query: Option<(u32, u32, i64)>,
    level: Option<usize>,
    tmin: Option<i64>,
    json: bool,
) -> Outcome {
    let spec = spec.spec()?;
    match query {
        Some((p, q, t)) => {
            let level = level.unwrap_or(spec.codim() as usize);
            let claim = VanishingClaim::new(spec, level, CohomologyQuery::new(p, q, t))?;
            match verify_vanishing(&claim) {
                VanishingOutcome::Certified(cert) => {
                    if json {
                        print_json(&cert);
                    } else {
                        println!("certified: {} ({} nodes)", claim, cert.node_count());
                    }
                    Ok(0)
                }
                VanishingOutcome::NotCertified(reason) => {
                    if json {
                        print_json(&Failed { claim, reason });
                    } else {
                        println!("not certified: {reason}");
                    }
                    Ok(1)
                }
            }
        }
        None => {
            if level.is_some_and(|l| l != spec.codim() as usize) {
                return Err(Failure { code: 2, message: "--level applies to single claims only".into() });
            }
            let t_min = tmin.unwrap_or_else(|| default_t_min(&spec));
            let results = sweep_range(&spec, t_min)?;
            let certified = results.iter().filter(|(_, o)| o.is_certified()).count();
            let first_failure = results.iter().find_map(|(q, o)| match o {
                VanishingOutcome::NotCertified(reason) => {
                    Some(Failed { claim: VanishingClaim::top(spec.clone(), *q), reason: *reason })
                }
                VanishingOutcome::Certified(_) => None,
            });
            let code = u8::from(first_failure.is_some());
            let summary = SweepSummary { spec: spec.clone(), t_min, claims: results.len(), certified, first_failure };
            if json {
                print_json(&summary);
            } else {
                match &summary.first_failure {
                    None => println!("all {} claims certified", summary.claims),
                    Some(f) => println!(
                        "{} of {} claims certified; first failure: {} ({})",
                        summary.certified, summary.claims, f.claim, f.reason
                    ),
                }
            }
            Ok(code)
        }
    }
}

fn cmd_stability(spec: &SpecArgs, json: bool) -> Outcome {
    let report = slope_report(&spec.spec()?);
    if json {
        print_json(&report);
    } else {
        println!("{}: {}", report.spec, report.verdict_text());
        println!("μ(Ω_X) = {}", pretty_rational(&report.mu_omega));
        println!("subsheaf slope bound = {}", pretty_rational(&report.subsheaf_slope_bound));
    }
    Ok(0)
}

fn describe(curve: &CurveReport) -> String {
    match (&curve.splitting, curve.status) {
        (Some(s), _) if s.is_free() => format!("{s}; free; positive rank ≥ {}", s.positive_count()),
        (Some(s), _) => format!("{s}; not free"),
        (None, CurveStatus::NotOnHypersurface) => "curve does not lie on the hypersurface".into(),
        (None, _) => "degenerate gradient along curve".into(),
    }
}

fn cmd_splitting(file: &std::path::Path, characteristic: Option<u32>, json: bool) -> Outcome {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::io(file, e))?;
    let report = analyze_text(&text, characteristic)?;
    let bad: Vec<&CurveReport> = report.curves.iter().filter(|c| c.status != CurveStatus::Ok).collect();
    if json {
        print_json(&report);
    } else if report.curves.len() == 1 && bad.is_empty() {
        println!("{}", describe(&report.curves[0]));
    } else {
        for c in report.curves.iter().filter(|c| c.status == CurveStatus::Ok) {
            println!("curve {}: {}", c.index, describe(c));
        }
        if bad.len() < report.curves.len() && report.curves.len() > 1 {
            println!(
                "positive rank ≥ {}; separably uniruled: {}",
                report.positive_rank_lower_bound, report.separably_uniruled
            );
        }
    }
    for c in &bad {
        eprintln!("error: curve {}: {}", c.index, describe(c));
    }
    Ok(u8::from(!bad.is_empty()))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Bott { n, p, q, t } => cmd_bott(n, p, q, t),
        Command::Vanish { spec, p, q, t, level, sweep: _, tmin, json } => {
            let query = match (p, q, t) {
                (Some(p), Some(q), Some(t)) => Some((p, q, t)),
                _ => None,
            };
            cmd_vanish(&spec, query, level, tmin, json)
        }
        Command::Stability { spec, json } => cmd_stability(&spec, json),
        Command::Splitting { file, json } => cmd_splitting(&file, cli.characteristic, json),
        Command::Survey { nmax, dmax, cmax, tmin, separably_uniruled, n1_free, json } => {
            let bounds = survey::Bounds { nmax, dmax: dmax.unwrap_or(nmax), cmax: cmax.unwrap_or(nmax), tmin };
            let rows = survey::survey(&bounds, separably_uniruled, n1_free)?;
            if json {
                print_json(&rows);
            } else {
                survey::print_table(&rows);
            }
            Ok(u8::from(rows.iter().any(|r| r.first_failure.is_some())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
