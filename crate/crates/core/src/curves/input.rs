//! Plain-text input for hypersurfaces and curves.
//!
//! ```text
//! # comments and blank lines are ignored
//! F: x0^3+x1^3+x2^3+x3^3 @ char 0
//! phi: (s, -s, t, -t)
//! ```
//!
//! Any number of `phi:` lines may follow. Without an `F:` line the curves
//! are taken in `P^n` itself. A `char: p` line may replace the `@ char p`
//! suffix.

use serde::Serialize;

use crate::arith::{BinaryForm, Field, FieldSpec, PrimeField, Rationals};
use crate::curves::evidence::{bound_from, evidence_from};
use crate::curves::poly::{max_x_index, parse_poly};
use crate::curves::splitting::{splitting_of_pullback_tangent, splitting_of_pullback_tangent_pn, SplittingType};
use crate::curves::variety::{on_curve_check, singularity_probe_along, HypersurfaceForm, Probe, RationalCurveMap};
use crate::error::{Error, Result};
use crate::stability::Tri;

#[derive(Debug, Clone)]
pub struct Problem<K: Field> {
    pub ambient_dim: usize,
    pub hypersurface: Option<HypersurfaceForm<K>>,
    pub curves: Vec<RationalCurveMap<K>>,
}

#[derive(Debug, Clone)]
pub enum CurveProblem {
    Rational(Problem<Rationals>),
    Prime(Problem<PrimeField>),
}

impl CurveProblem {
    pub fn field(&self) -> FieldSpec {
        match self {
            CurveProblem::Rational(_) => FieldSpec::Rational,
            CurveProblem::Prime(p) => p.curves.first().map_or(FieldSpec::Rational, |c| c.field().spec()),
        }
    }
}

struct RawInput {
    equation: Option<String>,
    curves: Vec<Vec<String>>,
    characteristic: Option<u32>,
}

fn parse_char(s: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| Error::Parse(format!("invalid characteristic {:?}", s.trim())))
}

fn split_tuple(src: &str) -> Result<Vec<String>> {
    let s = src.trim();
    let inner = match (s.strip_prefix('('), s.ends_with(')')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        _ => s,
    };
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            parts.push(current.trim().to_string());
            current.clear();
        } else {
            current.push(c);
        }
    }
    parts.push(current.trim().to_string());
    if depth != 0 || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Parse(format!("malformed curve tuple {src:?}")));
    }
    Ok(parts)
}

fn read_raw(text: &str) -> Result<RawInput> {
    let mut raw = RawInput { equation: None, curves: Vec::new(), characteristic: None };
    let set_char = |raw: &mut RawInput, c: u32| -> Result<()> {
        match raw.characteristic {
            Some(old) if old != c => Err(Error::Parse(format!("conflicting characteristics {old} and {c}"))),
            _ => {
                raw.characteristic = Some(c);
                Ok(())
            }
        }
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) =
            line.split_once(':').ok_or_else(|| Error::Parse(format!("line {}: expected `key: value`", lineno + 1)))?;
        match key.trim() {
            "F" => {
                if raw.equation.is_some() {
                    return Err(Error::Parse("more than one F line".into()));
                }
                let (eq, ch) = match value.split_once('@') {
                    Some((eq, suffix)) => {
                        let ch = suffix
                            .trim()
                            .strip_prefix("char")
                            .ok_or_else(|| Error::Parse(format!("expected `@ char p`, got {:?}", suffix.trim())))?;
                        (eq, Some(parse_char(ch)?))
                    }
                    None => (value, None),
                };
                if let Some(c) = ch {
                    set_char(&mut raw, c)?;
                }
                raw.equation = Some(eq.trim().to_string());
            }
            "phi" => raw.curves.push(split_tuple(value)?),
            "char" => {
                let c = parse_char(value)?;
                set_char(&mut raw, c)?;
            }
            other => return Err(Error::Parse(format!("line {}: unknown key {other:?}", lineno + 1))),
        }
    }
    Ok(raw)
}

fn build<K: Field>(field: &K, raw: &RawInput) -> Result<Problem<K>> {
    let from_curves = raw.curves.first().map(|c| c.len() - 1);
    let from_equation = raw.equation.as_deref().and_then(max_x_index);
    let ambient_dim = match (from_curves, from_equation) {
        (Some(n), Some(m)) if m > n => {
            return Err(Error::Argument(format!("F uses x{m} but curves map to P^{n}")));
        }
        (Some(n), _) => n,
        (None, Some(m)) => m,
        (None, None) => return Err(Error::Parse("input has neither an F line nor a phi line".into())),
    };
    let hypersurface = match &raw.equation {
        Some(src) => {
            let resolve = |name: &str| name.strip_prefix('x')?.parse().ok().filter(|&i: &usize| i <= ambient_dim);
            Some(HypersurfaceForm::new(ambient_dim, parse_poly(field, ambient_dim + 1, src, &resolve)?)?)
        }
        None => None,
    };
    let st = |name: &str| match name {
        "s" => Some(0),
        "t" => Some(1),
        _ => None,
    };
    let mut curves = Vec::new();
    for comps in &raw.curves {
        if comps.len() != ambient_dim + 1 {
            return Err(Error::Argument(format!("curve has {} components, expected {}", comps.len(), ambient_dim + 1)));
        }
        let polys = comps.iter().map(|c| parse_poly(field, 2, c, &st)).collect::<Result<Vec<_>>>()?;
        let mut e = None;
        for p in polys.iter().filter(|p| !p.is_zero()) {
            let d =
                p.homogeneous_degree().ok_or_else(|| Error::Argument("curve component is not homogeneous".into()))?;
            if e.is_some_and(|e| e != d) {
                return Err(Error::Argument("curve components have different degrees".into()));
            }
            e = Some(d);
        }
        let e = e.ok_or_else(|| Error::Argument("all curve components are zero".into()))? as usize;
        let forms = polys
            .iter()
            .map(|p| {
                let mut coeffs = vec![field.zero(); e + 1];
                for (exp, c) in p.terms() {
                    coeffs[exp[0] as usize] = c.clone();
                }
                BinaryForm::from_coeffs(field, coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        curves.push(RationalCurveMap::new(forms)?);
    }
    Ok(Problem { ambient_dim, hypersurface, curves })
}

/// Parses the text format; `default_char` applies when the text names none,
/// and must agree with it otherwise.
pub fn parse_problem(text: &str, default_char: Option<u32>) -> Result<CurveProblem> {
    let raw = read_raw(text)?;
    let characteristic = match (raw.characteristic, default_char) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Argument(format!("input says char {a} but char {b} was requested")));
        }
        (Some(a), _) => a,
        (None, b) => b.unwrap_or(0),
    };
    match FieldSpec::new(characteristic)? {
        FieldSpec::Rational => Ok(CurveProblem::Rational(build(&Rationals, &raw)?)),
        FieldSpec::Prime(p) => Ok(CurveProblem::Prime(build(&PrimeField::new(p)?, &raw)?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveStatus {
    Ok,
    NotOnHypersurface,
    DegenerateGradient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub index: usize,
    pub components: Vec<String>,
    pub curve_degree: usize,
    pub status: CurveStatus,
    pub splitting: Option<SplittingType>,
    pub rank: Option<usize>,
    pub degree: Option<i64>,
    pub free: Option<bool>,
    pub positive_count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub characteristic: u32,
    pub ambient_dim: usize,
    pub hypersurface: Option<String>,
    pub hypersurface_degree: Option<u32>,
    pub curves: Vec<CurveReport>,
    pub positive_rank_lower_bound: usize,
    pub separably_uniruled: Tri,
}

fn analyze<K: Field>(problem: &Problem<K>) -> Result<AnalysisReport> {
    let mut reports = Vec::new();
    let mut found = Vec::new();
    for (index, phi) in problem.curves.iter().enumerate() {
        let (status, splitting) = match &problem.hypersurface {
            None => (CurveStatus::Ok, Some(splitting_of_pullback_tangent_pn(problem.ambient_dim, phi)?)),
            Some(x) if !on_curve_check(x, phi)? => (CurveStatus::NotOnHypersurface, None),
            Some(x) if singularity_probe_along(x, phi)? == Probe::Degenerate => (CurveStatus::DegenerateGradient, None),
            Some(x) => (CurveStatus::Ok, Some(splitting_of_pullback_tangent(x, phi)?)),
        };
        reports.push(CurveReport {
            index,
            components: phi.components().iter().map(|c| c.to_string()).collect(),
            curve_degree: phi.degree(),
            status,
            rank: splitting.as_ref().map(|s| s.rank()),
            degree: splitting.as_ref().map(|s| s.degree()),
            free: splitting.as_ref().map(|s| s.is_free()),
            positive_count: splitting.as_ref().map(|s| s.positive_count()),
            splitting: splitting.clone(),
        });
        found.push(splitting);
    }
    let characteristic = problem
        .hypersurface
        .as_ref()
        .map(|x| x.field().characteristic())
        .or_else(|| problem.curves.first().map(|c| c.field().characteristic()))
        .unwrap_or(0);
    Ok(AnalysisReport {
        characteristic,
        ambient_dim: problem.ambient_dim,
        hypersurface: problem.hypersurface.as_ref().map(|x| x.equation().render(&|i| format!("x{i}"))),
        hypersurface_degree: problem.hypersurface.as_ref().map(|x| x.degree()),
        curves: reports,
        positive_rank_lower_bound: bound_from(&found).value,
        separably_uniruled: evidence_from(&found).separably_uniruled,
    })
}

/// Parses and analyzes every curve in `text`. Curves that are not on the
/// hypersurface, or along which it is singular, are reported with a status
/// instead of a splitting.
pub fn analyze_text(text: &str, default_char: Option<u32>) -> Result<AnalysisReport> {
    match parse_problem(text, default_char)? {
        CurveProblem::Rational(p) => analyze(&p),
        CurveProblem::Prime(p) => analyze(&p),
    }
}
