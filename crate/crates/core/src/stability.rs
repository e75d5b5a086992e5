//! Slope data of `Ω_X` for complete intersections and the implication
//! rules that turn stability and uniruledness into separable rational
//! connectedness.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::projective::{CohomologyQuery, CompleteIntersectionSpec};
use crate::vanish::{verify_vanishing, VanishingCertificate, VanishingClaim, VanishingOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exceptional {
    None,
    Linear,
    Quadric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Stable,
    ExcludedExceptional,
    NotApplicable,
}

/// Renders an exact rational as `"p/q"`, always with an explicit denominator.
pub fn render_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn serialize_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render_rational(r))
}

fn serialize_decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeReport {
    pub spec: CompleteIntersectionSpec,
    #[serde(serialize_with = "serialize_decimal")]
    pub degree: BigUint,
    pub fano: bool,
    pub exceptional: Exceptional,
    pub canonical_twist: i64,
    #[serde(serialize_with = "serialize_rational")]
    pub mu_omega: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub subsheaf_slope_bound: BigRational,
    pub verdict: Verdict,
    /// `H^0(Ω^r(t)) = 0` for `1 <= r < dim X`, `-1 <= t < r`; filled only
    /// for a stable verdict.
    pub certificates: Vec<VanishingCertificate>,
}

impl SlopeReport {
    /// Short human-readable verdict, e.g. `"excluded: quadric"`.
    pub fn verdict_text(&self) -> String {
        match self.verdict {
            Verdict::Stable => "stable".into(),
            Verdict::ExcludedExceptional => match self.exceptional {
                Exceptional::Quadric => "excluded: quadric".into(),
                _ => "excluded: linear".into(),
            },
            Verdict::NotApplicable if !self.fano => "not-applicable: not Fano".into(),
            Verdict::NotApplicable => "not-applicable: dim < 3".into(),
        }
    }
}

fn classify(spec: &CompleteIntersectionSpec) -> Exceptional {
    match spec.degrees() {
        [] => Exceptional::Linear,
        [2] => Exceptional::Quadric,
        _ => Exceptional::None,
    }
}

/// `μ(Ω_X) = deg X · (Σ d_i - n - 1) / dim X` against `H = O(1)`.
pub fn mu_omega(spec: &CompleteIntersectionSpec) -> BigRational {
    let degree = BigInt::from(spec.degree());
    BigRational::new(degree * spec.canonical_twist(), BigInt::from(spec.dim()))
}

pub fn slope_report(spec: &CompleteIntersectionSpec) -> SlopeReport {
    let degree = spec.degree();
    let fano = spec.degree_sum() <= spec.ambient_dim() as i64;
    let exceptional = classify(spec);
    let verdict = if !fano || spec.dim() < 3 {
        Verdict::NotApplicable
    } else if exceptional != Exceptional::None {
        Verdict::ExcludedExceptional
    } else {
        debug_assert!(spec.degree_sum() - 1 - spec.codim() as i64 > 0);
        Verdict::Stable
    };
    let mut certificates = Vec::new();
    if verdict == Verdict::Stable {
        for r in 1..spec.dim() {
            let ceiling = subsheaf_slope_ceiling(spec, r).expect("rank in range");
            certificates.extend(ceiling.certificates);
        }
    }
    SlopeReport {
        spec: spec.clone(),
        degree: degree.clone(),
        fano,
        exceptional,
        canonical_twist: spec.canonical_twist(),
        mu_omega: mu_omega(spec),
        subsheaf_slope_bound: BigRational::from_integer(-BigInt::from(degree)),
        verdict,
        certificates,
    }
}

/// The slope ceiling for rank-`r` reflexive subsheaves of `Ω_X`, with the
/// vanishing certificates it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeCeiling {
    pub rank: u32,
    pub ceiling: BigRational,
    pub certificates: Vec<VanishingCertificate>,
}

/// If `det F ≅ O_X(k)` for `F ⊂ Ω_X` of rank `r`, then `H^0(Ω^r(-k)) ≠ 0`;
/// vanishing for every `t < r` forces `k <= -r`, so `μ(F) <= -deg X`.
pub fn subsheaf_slope_ceiling(spec: &CompleteIntersectionSpec, r: u32) -> Result<SlopeCeiling> {
    if r == 0 || r >= spec.dim() {
        return Err(Error::Argument(format!("subsheaf rank must satisfy 1 <= r < dim X = {}, got {r}", spec.dim())));
    }
    let mut certificates = Vec::new();
    for t in (-1..r as i64).rev() {
        let claim = VanishingClaim::top(spec.clone(), CohomologyQuery::new(0, r, t));
        match verify_vanishing(&claim) {
            VanishingOutcome::Certified(c) => certificates.push(c),
            VanishingOutcome::NotCertified(reason) => {
                return Err(Error::Internal(format!("{claim} was not certified: {reason}")));
            }
        }
    }
    let degree = BigInt::from(spec.degree());
    Ok(SlopeCeiling { rank: r, ceiling: BigRational::new(-degree * BigInt::from(r), BigInt::from(r)), certificates })
}

/// Three-valued truth for premises that may be unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    #[default]
    Unknown,
}

impl Tri {
    pub const ALL: [Tri; 3] = [Tri::Yes, Tri::No, Tri::Unknown];
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

impl std::str::FromStr for Tri {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yes" | "true" => Ok(Tri::Yes),
            "no" | "false" => Ok(Tri::No),
            "unknown" => Ok(Tri::Unknown),
            _ => Err(Error::Argument(format!("expected yes, no or unknown, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ImplicationInput {
    pub picard_rank_one: bool,
    pub separably_uniruled: Tri,
    pub tangent_stable: Tri,
    pub tangent_semistable: Tri,
    pub fano: bool,
    pub n1_generated_by_free: Tri,
}

/// One premise of a fired rule, as it held in the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Premise {
    PicardRankOne,
    Fano,
    SeparablyUniruled,
    NotSeparablyUniruled,
    TangentStable,
    TangentSemistable,
    N1GeneratedByFree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImplicationRule {
    /// Picard rank one, separably uniruled, tangent sheaf not unstable
    /// (stable or semistable) ⟹ separably rationally connected.
    PicardOneStability,
    /// Fano, separably uniruled, `N_1(X)_Q` generated by free curves,
    /// tangent sheaf semistable ⟹ separably rationally connected.
    FreeCurveGeneration,
    /// Fano of Picard rank one with stable tangent sheaf: separably
    /// rationally connected ⟺ separably uniruled.
    FanoEquivalence,
}

impl ImplicationRule {
    pub const ALL: [ImplicationRule; 3] =
        [ImplicationRule::PicardOneStability, ImplicationRule::FreeCurveGeneration, ImplicationRule::FanoEquivalence];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuleTrace {
    pub rule: ImplicationRule,
    pub premises: Vec<Premise>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ImplicationVerdict {
    pub src: Tri,
    pub justification: Option<RuleTrace>,
}

impl ImplicationInput {
    fn check(&self) -> Result<()> {
        if self.tangent_stable == Tri::Yes && self.tangent_semistable == Tri::No {
            return Err(Error::Argument("a stable tangent sheaf cannot fail to be semistable".into()));
        }
        Ok(())
    }
}

/// Evaluates a single rule. Returns the conclusion and its trace when every
/// premise holds.
pub fn evaluate_rule(rule: ImplicationRule, input: &ImplicationInput) -> Result<Option<(Tri, RuleTrace)>> {
    input.check()?;
    let uniruled = input.separably_uniruled == Tri::Yes;
    let fired = |premises: Vec<Premise>, src: Tri| Some((src, RuleTrace { rule, premises }));
    Ok(match rule {
        ImplicationRule::PicardOneStability => {
            let not_unstable = if input.tangent_semistable == Tri::Yes {
                Some(Premise::TangentSemistable)
            } else if input.tangent_stable == Tri::Yes {
                Some(Premise::TangentStable)
            } else {
                None
            };
            match not_unstable {
                Some(s) if input.picard_rank_one && uniruled => {
                    fired(vec![Premise::PicardRankOne, Premise::SeparablyUniruled, s], Tri::Yes)
                }
                _ => None,
            }
        }
        ImplicationRule::FreeCurveGeneration => {
            if input.fano && uniruled && input.n1_generated_by_free == Tri::Yes && input.tangent_semistable == Tri::Yes
            {
                fired(
                    vec![
                        Premise::Fano,
                        Premise::SeparablyUniruled,
                        Premise::N1GeneratedByFree,
                        Premise::TangentSemistable,
                    ],
                    Tri::Yes,
                )
            } else {
                None
            }
        }
        ImplicationRule::FanoEquivalence => {
            if !(input.fano && input.picard_rank_one && input.tangent_stable == Tri::Yes) {
                None
            } else {
                let base = [Premise::Fano, Premise::PicardRankOne, Premise::TangentStable];
                match input.separably_uniruled {
                    Tri::Yes => fired([&base[..], &[Premise::SeparablyUniruled]].concat(), Tri::Yes),
                    Tri::No => fired([&base[..], &[Premise::NotSeparablyUniruled]].concat(), Tri::No),
                    Tri::Unknown => None,
                }
            }
        }
    })
}

/// Applies the rules in the order of [`ImplicationRule::ALL`]; the first
/// that fires decides. No rule firing gives `unknown` with no trace.
pub fn implication_verdict(input: &ImplicationInput) -> Result<ImplicationVerdict> {
    for rule in ImplicationRule::ALL {
        if let Some((src, trace)) = evaluate_rule(rule, input)? {
            return Ok(ImplicationVerdict { src, justification: Some(trace) });
        }
    }
    Ok(ImplicationVerdict { src: Tri::Unknown, justification: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldSpec;

    fn ci(n: u32, d: &[u32]) -> CompleteIntersectionSpec {
        CompleteIntersectionSpec::new(n, d.to_vec(), FieldSpec::Rational).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cubic_threefold() {
        let r = slope_report(&ci(4, &[3]));
        assert_eq!(r.degree, 3u32.into());
        assert!(r.fano);
        assert_eq!(r.exceptional, Exceptional::None);
        assert_eq!(r.mu_omega, rat(-2, 1));
        assert_eq!(r.subsheaf_slope_bound, rat(-3, 1));
        assert_eq!(r.verdict, Verdict::Stable);
        // ranks 1, 2 with twists {0, -1} and {1, 0, -1}
        assert_eq!(r.certificates.len(), 5);
    }

    #[test]
    fn quadric_threefold_is_excluded() {
        let r = slope_report(&ci(4, &[2]));
        assert_eq!(r.exceptional, Exceptional::Quadric);
        assert_eq!(r.verdict, Verdict::ExcludedExceptional);
        assert_eq!(r.verdict_text(), "excluded: quadric");
        assert!(r.certificates.is_empty());
    }

    #[test]
    fn two_quadrics_in_p5() {
        let r = slope_report(&ci(5, &[2, 2]));
        assert_eq!(r.degree, 4u32.into());
        assert_eq!(r.mu_omega, rat(-8, 3));
        assert_eq!(r.subsheaf_slope_bound, rat(-4, 1));
        assert_eq!(r.verdict, Verdict::Stable);
    }

    #[test]
    fn gates() {
        assert_eq!(slope_report(&ci(3, &[3])).verdict_text(), "not-applicable: dim < 3");
        assert_eq!(slope_report(&ci(4, &[5])).verdict_text(), "not-applicable: not Fano");
        let pn = slope_report(&ci(4, &[]));
        assert_eq!(pn.exceptional, Exceptional::Linear);
        assert_eq!(pn.verdict, Verdict::ExcludedExceptional);
    }

    #[test]
    fn json_rationals() {
        let v = serde_json::to_value(slope_report(&ci(5, &[2, 2]))).unwrap();
        assert_eq!(v["mu_omega"], "-8/3");
        assert_eq!(v["subsheaf_slope_bound"], "-4/1");
        assert_eq!(v["verdict"], "stable");
        assert_eq!(v["spec"]["degrees"], serde_json::json!([2, 2]));
    }

    #[test]
    fn ceiling_examples() {
        let c = subsheaf_slope_ceiling(&ci(4, &[3]), 2).unwrap();
        assert_eq!(c.ceiling, rat(-3, 1));
        let twists: Vec<i64> = c.certificates.iter().map(|c| c.claim.query().t).collect();
        assert_eq!(twists, vec![1, 0, -1]);
        assert!(c.certificates.iter().all(|c| c.claim.query().p == 0 && c.claim.query().q == 2));
        assert_eq!(subsheaf_slope_ceiling(&ci(5, &[2, 2]), 1).unwrap().ceiling, rat(-4, 1));
        assert!(matches!(subsheaf_slope_ceiling(&ci(4, &[3]), 3), Err(Error::Argument(_))));
        assert!(subsheaf_slope_ceiling(&ci(4, &[3]), 0).is_err());
    }

    #[test]
    fn permutation_invariance() {
        let a = slope_report(&ci(7, &[2, 3, 2]));
        let b = slope_report(&ci(7, &[3, 2, 2]));
        assert_eq!(a.mu_omega, b.mu_omega);
        assert_eq!(a.subsheaf_slope_bound, b.subsheaf_slope_bound);
        assert_eq!(a.verdict, b.verdict);
        assert_eq!(a.exceptional, b.exceptional);
    }

    #[test]
    fn implication_examples() {
        let one = ImplicationInput {
            picard_rank_one: true,
            separably_uniruled: Tri::Yes,
            tangent_stable: Tri::Yes,
            ..Default::default()
        };
        let v = implication_verdict(&one).unwrap();
        assert_eq!(v.src, Tri::Yes);
        assert_eq!(v.justification.unwrap().rule, ImplicationRule::PicardOneStability);

        let two = ImplicationInput {
            fano: true,
            separably_uniruled: Tri::Yes,
            n1_generated_by_free: Tri::Yes,
            tangent_semistable: Tri::Yes,
            ..Default::default()
        };
        let v = implication_verdict(&two).unwrap();
        assert_eq!(v.src, Tri::Yes);
        assert_eq!(v.justification.unwrap().rule, ImplicationRule::FreeCurveGeneration);

        let none = implication_verdict(&ImplicationInput::default()).unwrap();
        assert_eq!(none, ImplicationVerdict { src: Tri::Unknown, justification: None });

        let not_uniruled = ImplicationInput {
            fano: true,
            picard_rank_one: true,
            tangent_stable: Tri::Yes,
            separably_uniruled: Tri::No,
            ..Default::default()
        };
        let v = implication_verdict(&not_uniruled).unwrap();
        assert_eq!(v.src, Tri::No);
        assert_eq!(v.justification.unwrap().rule, ImplicationRule::FanoEquivalence);
    }

    #[test]
    fn inconsistent_input() {
        let bad = ImplicationInput { tangent_stable: Tri::Yes, tangent_semistable: Tri::No, ..Default::default() };
        assert!(matches!(implication_verdict(&bad), Err(Error::Argument(_))));
    }
}
