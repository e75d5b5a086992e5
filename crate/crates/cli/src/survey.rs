use rayon::prelude::*;
use serde::Serialize;

use sheafcert::arith::FieldSpec;
use sheafcert::projective::CompleteIntersectionSpec;
use sheafcert::stability::{implication_verdict, slope_report, ImplicationInput, SlopeReport, Tri, Verdict};
use sheafcert::vanish::{default_t_min, sweep_range, VanishingOutcome};
use sheafcert::Result;

use crate::pretty_rational;

pub struct Bounds {
    pub nmax: u32,
    pub dmax: u32,
    pub cmax: u32,
    pub tmin: Option<i64>,
}

#[derive(Debug, Serialize)]
pub struct SurveyRow {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub dim: u32,
    pub fano: bool,
    pub verdict: String,
    #[serde(flatten)]
    pub slope: SlopeFields,
    pub t_min: i64,
    pub sweep_claims: usize,
    pub sweep_status: &'static str,
    pub first_failure: Option<String>,
    pub src: Tri,
    pub src_rule: Option<sheafcert::stability::ImplicationRule>,
}

#[derive(Debug, Serialize)]
pub struct SlopeFields {
    pub degree: String,
    pub canonical_twist: i64,
    pub mu_omega: String,
    pub subsheaf_slope_bound: String,
    pub exceptional: sheafcert::stability::Exceptional,
}

impl From<&SlopeReport> for SlopeFields {
    fn from(r: &SlopeReport) -> Self {
        SlopeFields {
            degree: r.degree.to_string(),
            canonical_twist: r.canonical_twist,
            mu_omega: sheafcert::stability::render_rational(&r.mu_omega),
            subsheaf_slope_bound: sheafcert::stability::render_rational(&r.subsheaf_slope_bound),
            exceptional: r.exceptional,
        }
    }
}

/// Nondecreasing degree lists in `2..=dmax` of length at most `cmax` with
/// sum at most `n` and fewer than `n` entries.
fn fano_multidegrees(n: u32, dmax: u32, cmax: u32) -> Vec<Vec<u32>> {
    fn extend(n: u32, dmax: u32, cmax: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(current.clone());
        if current.len() as u32 >= cmax || current.len() as u32 + 1 >= n {
            return;
        }
        let lo = current.last().copied().unwrap_or(2);
        let sum: u32 = current.iter().sum();
        for d in lo..=dmax {
            if sum + d > n {
                break;
            }
            current.push(d);
            extend(n, dmax, cmax, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, dmax, cmax, &mut Vec::new(), &mut out);
    out
}

fn row(spec: CompleteIntersectionSpec, tmin: Option<i64>, su: Tri, n1: Tri) -> Result<SurveyRow> {
    let report = slope_report(&spec);
    let t_min = tmin.unwrap_or_else(|| default_t_min(&spec));
    let sweep = sweep_range(&spec, t_min)?;
    let first_failure = sweep.iter().find_map(|(q, o)| match o {
        VanishingOutcome::NotCertified(r) => Some(format!("{q}: {r}")),
        VanishingOutcome::Certified(_) => None,
    });
    let stable = if report.verdict == Verdict::Stable { Tri::Yes } else { Tri::Unknown };
    let verdict = implication_verdict(&ImplicationInput {
        // Lefschetz: complete intersections of dimension at least 3, and P^n itself.
        picard_rank_one: spec.dim() >= 3 || spec.codim() == 0,
        separably_uniruled: su,
        tangent_stable: stable,
        tangent_semistable: stable,
        fano: report.fano,
        n1_generated_by_free: n1,
    })?;
    Ok(SurveyRow {
        n: spec.ambient_dim(),
        degrees: spec.degrees().to_vec(),
        dim: spec.dim(),
        fano: report.fano,
        verdict: report.verdict_text(),
        slope: SlopeFields::from(&report),
        t_min,
        sweep_claims: sweep.len(),
        sweep_status: if first_failure.is_none() { "all-certified" } else { "first-failure" },
        first_failure,
        src: verdict.src,
        src_rule: verdict.justification.map(|j| j.rule),
    })
}

/// One row per normalized Fano multidegree, sorted by `(n, degrees)`.
pub fn survey(bounds: &Bounds, su: Tri, n1: Tri) -> Result<Vec<SurveyRow>> {
    let mut specs = Vec::new();
    for n in 1..=bounds.nmax {
        for d in fano_multidegrees(n, bounds.dmax, bounds.cmax) {
            specs.push(CompleteIntersectionSpec::new(n, d, FieldSpec::Rational)?);
        }
    }
    specs.sort_by(|a, b| (a.ambient_dim(), a.degrees()).cmp(&(b.ambient_dim(), b.degrees())));
    specs.into_par_iter().map(|s| row(s, bounds.tmin, su, n1)).collect()
}

pub fn print_table(rows: &[SurveyRow]) {
    println!("{:<4}{:<12}{:<5}{:<9}{:<28}{:<26}src", "n", "degrees", "dim", "μ(Ω_X)", "verdict", "sweep");
    for r in rows {
        let degrees = if r.degrees.is_empty() {
            "-".to_string()
        } else {
            r.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        };
        let mu = pretty_rational(&parse_rational(&r.slope.mu_omega));
        let sweep = match &r.first_failure {
            None => format!("all {} certified", r.sweep_claims),
            Some(f) => format!("failed at {f}"),
        };
        println!("{:<4}{:<12}{:<5}{:<9}{:<28}{:<26}{}", r.n, degrees, r.dim, mu, r.verdict, sweep, r.src);
    }
}

fn parse_rational(s: &str) -> num_rational::BigRational {
    s.parse().expect("rendered rationals parse back")
}
