//! Rational curves on hypersurfaces: pulled-back tangent bundles, freeness
//! and lower bounds for the positive rank.

mod evidence;
mod input;
mod poly;
mod splitting;
mod variety;

pub use evidence::{positive_rank_lower_bound, uniruledness_evidence, PositiveRankBound, UnirulednessEvidence};
pub use input::{analyze_text, parse_problem, AnalysisReport, CurveProblem, CurveReport, CurveStatus, Problem};
pub use poly::{parse_poly, Poly};
pub use splitting::{
    kernel_of_row, pullback_tangent_computation, splitting_of_pullback_tangent, splitting_of_pullback_tangent_pn,
    Generator, KernelBundle, SplittingType, TangentComputation,
};
pub use variety::{
    compose, gradient_along, on_curve_check, singularity_probe_along, HypersurfaceForm, Probe, RationalCurveMap,
};
