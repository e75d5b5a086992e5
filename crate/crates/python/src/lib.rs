//! Python bindings. Errors surface as `ValueError`.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sheafcert::arith::FieldSpec;
use sheafcert::projective::{self, CohomologyQuery, CompleteIntersectionSpec};
use sheafcert::stability::{self, ImplicationInput, Tri};
use sheafcert::vanish::{self, VanishingCertificate, VanishingClaim, VanishingOutcome};

fn value_error(e: sheafcert::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &num_rational::BigRational) -> PyResult<Bound<'py, PyAny>> {
    let (n, d): (BigInt, BigInt) = (r.numer().clone(), r.denom().clone());
    py.import("fractions")?.getattr("Fraction")?.call1((n, d))
}

fn kebab<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

/// Binomial coefficient `C(a, b)`, zero when `a < b` or `a < 0`.
#[pyfunction]
fn binom(a: i64, b: u64) -> BigUint {
    sheafcert::arith::binom(a, b)
}

/// `dim H^p(P^n, Ω^q(t))`.
#[pyfunction]
fn bott_dimension(n: u32, p: u32, q: u32, t: i64) -> BigUint {
    projective::bott_dimension(n, CohomologyQuery::new(p, q, t))
}

/// Replays a certificate given as JSON.
#[pyfunction]
fn check_certificate(json: &str) -> PyResult<bool> {
    let cert = VanishingCertificate::from_json(json).map_err(value_error)?;
    vanish::check_certificate(&cert).map_err(value_error)
}

/// Analyzes a hypersurface-and-curves text and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (text, characteristic=None))]
fn splitting_from_text(text: &str, characteristic: Option<u32>) -> PyResult<String> {
    let report = sheafcert::curves::analyze_text(text, characteristic).map_err(value_error)?;
    Ok(serde_json::to_string(&report).expect("reports serialize"))
}

/// Returns `(verdict, rule, premises)`; `rule` is `None` when nothing fires.
#[pyfunction]
#[pyo3(signature = (*, picard_rank_one=false, separably_uniruled="unknown", tangent_stable="unknown",
                    tangent_semistable="unknown", fano=false, n1_generated_by_free="unknown"))]
fn implication_verdict(
    picard_rank_one: bool,
    separably_uniruled: &str,
    tangent_stable: &str,
    tangent_semistable: &str,
    fano: bool,
    n1_generated_by_free: &str,
) -> PyResult<(String, Option<String>, Vec<String>)> {
    let tri = |s: &str| s.parse::<Tri>().map_err(value_error);
    let input = ImplicationInput {
        picard_rank_one,
        separably_uniruled: tri(separably_uniruled)?,
        tangent_stable: tri(tangent_stable)?,
        tangent_semistable: tri(tangent_semistable)?,
        fano,
        n1_generated_by_free: tri(n1_generated_by_free)?,
    };
    let v = stability::implication_verdict(&input).map_err(value_error)?;
    let (rule, premises) = match v.justification {
        Some(j) => (Some(kebab(&j.rule)), j.premises.iter().map(kebab).collect()),
        None => (None, Vec::new()),
    };
    Ok((v.src.to_string(), rule, premises))
}

type SweepEntry = ((u32, u32, i64), bool);

/// A complete intersection `X(d_1, ..., d_c) ⊂ P^n`; degrees are sorted.
#[pyclass(name = "CompleteIntersection", frozen)]
struct PyCompleteIntersection {
    spec: CompleteIntersectionSpec,
}

#[pymethods]
impl PyCompleteIntersection {
    #[new]
    #[pyo3(signature = (n, degrees=Vec::new()))]
    fn new(n: u32, degrees: Vec<u32>) -> PyResult<Self> {
        let spec = CompleteIntersectionSpec::normalized(n, degrees, FieldSpec::Rational).map_err(value_error)?;
        Ok(PyCompleteIntersection { spec })
    }

    #[getter]
    fn n(&self) -> u32 {
        self.spec.ambient_dim()
    }

    #[getter]
    fn degrees(&self) -> Vec<u32> {
        self.spec.degrees().to_vec()
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.spec.dim()
    }

    #[getter]
    fn degree(&self) -> BigUint {
        self.spec.degree()
    }

    fn hilbert_h0(&self, t: i64) -> BigUint {
        projective::hilbert_h0(&self.spec, t)
    }

    fn line_bundle_cohomology(&self, p: u32, t: i64) -> BigUint {
        projective::line_bundle_cohomology(&self.spec, p, t)
    }

    /// Certificate JSON for `H^p(X_level, Ω^q(t)) = 0`, or `None`.
    #[pyo3(signature = (p, q, t, level=None))]
    fn verify_vanishing(&self, p: u32, q: u32, t: i64, level: Option<usize>) -> PyResult<Option<String>> {
        let level = level.unwrap_or(self.spec.codim() as usize);
        let claim =
            VanishingClaim::new(self.spec.clone(), level, CohomologyQuery::new(p, q, t)).map_err(value_error)?;
        Ok(match vanish::verify_vanishing(&claim) {
            VanishingOutcome::Certified(c) => Some(c.to_json()),
            VanishingOutcome::NotCertified(_) => None,
        })
    }

    /// `[((p, q, t), certified), ...]` over the vanishing range down to `t_min`.
    #[pyo3(signature = (t_min=None))]
    fn sweep(&self, t_min: Option<i64>) -> PyResult<Vec<SweepEntry>> {
        let t_min = t_min.unwrap_or_else(|| vanish::default_t_min(&self.spec));
        let rows = vanish::sweep_range(&self.spec, t_min).map_err(value_error)?;
        Ok(rows.into_iter().map(|(q, o)| ((q.p, q.q, q.t), o.is_certified())).collect())
    }

    fn mu_omega<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &stability::mu_omega(&self.spec))
    }

    /// The slope report as JSON.
    fn slope_report(&self) -> String {
        serde_json::to_string(&stability::slope_report(&self.spec)).expect("reports serialize")
    }

    fn subsheaf_slope_ceiling<'py>(&self, py: Python<'py>, r: u32) -> PyResult<Bound<'py, PyAny>> {
        let c = stability::subsheaf_slope_ceiling(&self.spec, r).map_err(value_error)?;
        fraction(py, &c.ceiling)
    }

    fn __repr__(&self) -> String {
        format!("CompleteIntersection(n={}, degrees={:?})", self.spec.ambient_dim(), self.spec.degrees())
    }

    fn __str__(&self) -> String {
        self.spec.to_string()
    }
}

#[pymodule(name = "sheafcert")]
fn sheafcert_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCompleteIntersection>()?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(bott_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(check_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(splitting_from_text, m)?)?;
    m.add_function(wrap_pyfunction!(implication_verdict, m)?)?;
    Ok(())
}
