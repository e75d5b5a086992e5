//! Certificates for `H^p(X, Ω_X^q(t)) = 0` on a complete intersection.
//!
//! A certificate is a tree whose leaves are line-bundle facts and whose
//! internal nodes are long-exact-sequence steps:
//!
//! * `EulerPowerSeq` on `P^n`, from `0 → Ω^q → ∧^q V ⊗ O(-q) → Ω^{q-1} → 0`;
//! * `RestrictionSeq`, from `0 → Ω_X^q(-d) → Ω_X^q → Ω_X^q|_Y → 0`;
//! * `ConormalPowerSeq`, from `0 → Ω_Y^{q-1}(-d) → Ω_X^q|_Y → Ω_Y^q → 0`.
//!
//! The claim carried by a `RestrictionSeq` node is about the restricted
//! ambient sheaf `Ω_X^q(t)|_Y` on `Y = X_level`; every other node speaks
//! about `Ω^q` of its own level.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::FieldSpec;
use crate::error::{Error, Result};
use crate::projective::{bott_dimension, line_bundle_cohomology, CohomologyQuery, CompleteIntersectionSpec};

/// `H^p(X_level, Ω^q(t)) = 0` for the tower member cut out by the first
/// `level` degrees of `spec`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ClaimRecord", into = "ClaimRecord")]
pub struct VanishingClaim {
    spec: CompleteIntersectionSpec,
    level: usize,
    query: CohomologyQuery,
}

#[derive(Serialize, Deserialize)]
struct ClaimRecord {
    n: u32,
    degrees: Vec<u32>,
    level: usize,
    p: u32,
    q: u32,
    t: i64,
}

impl TryFrom<ClaimRecord> for VanishingClaim {
    type Error = Error;
    fn try_from(r: ClaimRecord) -> Result<Self> {
        let spec = CompleteIntersectionSpec::new(r.n, r.degrees, FieldSpec::Rational)?;
        VanishingClaim::new(spec, r.level, CohomologyQuery::new(r.p, r.q, r.t))
    }
}

impl From<VanishingClaim> for ClaimRecord {
    fn from(c: VanishingClaim) -> Self {
        ClaimRecord {
            n: c.spec.ambient_dim(),
            degrees: c.spec.degrees().to_vec(),
            level: c.level,
            p: c.query.p,
            q: c.query.q,
            t: c.query.t,
        }
    }
}

impl VanishingClaim {
    pub fn new(spec: CompleteIntersectionSpec, level: usize, query: CohomologyQuery) -> Result<Self> {
        if level > spec.degrees().len() {
            return Err(Error::Argument(format!("level {level} exceeds codimension {}", spec.degrees().len())));
        }
        Ok(VanishingClaim { spec, level, query })
    }

    /// The claim about `X` itself, the last member of the tower.
    pub fn top(spec: CompleteIntersectionSpec, query: CohomologyQuery) -> Self {
        let level = spec.degrees().len();
        VanishingClaim { spec, level, query }
    }

    pub fn spec(&self) -> &CompleteIntersectionSpec {
        &self.spec
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn query(&self) -> CohomologyQuery {
        self.query
    }

    /// Dimension of `X_level`.
    pub fn dim(&self) -> u32 {
        self.spec.ambient_dim() - self.level as u32
    }

    fn at(&self, level: usize, p: u32, q: u32, t: i64) -> Self {
        VanishingClaim { spec: self.spec.clone(), level, query: CohomologyQuery::new(p, q, t) }
    }

    fn member(&self) -> CompleteIntersectionSpec {
        self.spec.prefix(self.level).expect("level checked at construction")
    }

    /// Degree of the hypersurface cutting `X_level` out of `X_{level-1}`.
    fn cut_degree(&self) -> Option<i64> {
        self.level.checked_sub(1).map(|i| self.spec.degrees()[i] as i64)
    }
}

impl fmt::Display for VanishingClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let member = self.member();
        let CohomologyQuery { p, q, t } = self.query;
        write!(f, "H^{p}({member}, Ω^{q}({t})) = 0")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    LineBundleBase,
    EulerPowerSeq,
    RestrictionSeq,
    ConormalPowerSeq,
}

/// A derivation tree for a vanishing claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingCertificate {
    pub claim: VanishingClaim,
    pub rule: Rule,
    pub premises: Vec<VanishingCertificate>,
}

#[derive(Serialize, Deserialize)]
struct CertificateRecord {
    claim: VanishingClaim,
    rule: Rule,
    premises: Vec<CertificateRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dimension: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
}

impl From<&VanishingCertificate> for CertificateRecord {
    fn from(c: &VanishingCertificate) -> Self {
        let leaf = c.rule == Rule::LineBundleBase;
        CertificateRecord {
            claim: c.claim.clone(),
            rule: c.rule,
            premises: c.premises.iter().map(CertificateRecord::from).collect(),
            dimension: leaf.then_some(0),
            source: leaf.then(|| "line-bundle".to_string()),
        }
    }
}

impl From<CertificateRecord> for VanishingCertificate {
    fn from(r: CertificateRecord) -> Self {
        VanishingCertificate {
            claim: r.claim,
            rule: r.rule,
            premises: r.premises.into_iter().map(VanishingCertificate::from).collect(),
        }
    }
}

impl Serialize for VanishingCertificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRecord::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VanishingCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        CertificateRecord::deserialize(deserializer).map(VanishingCertificate::from)
    }
}

impl VanishingCertificate {
    fn leaf(claim: VanishingClaim) -> Self {
        VanishingCertificate { claim, rule: Rule::LineBundleBase, premises: Vec::new() }
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(|p| p.node_count()).sum::<usize>()
    }

    pub fn leaves(&self) -> Vec<&VanishingCertificate> {
        if self.premises.is_empty() {
            vec![self]
        } else {
            self.premises.iter().flat_map(|p| p.leaves()).collect()
        }
    }

    /// Visits every node mutably, depth first, premises in order.
    pub fn for_each_node_mut(&mut self, f: &mut impl FnMut(&mut VanishingCertificate)) {
        f(self);
        for p in &mut self.premises {
            p.for_each_node_mut(f);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotCertifiedReason {
    OutOfRange,
    RecursionFailed,
}

impl fmt::Display for NotCertifiedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotCertifiedReason::OutOfRange => write!(f, "out of range"),
            NotCertifiedReason::RecursionFailed => write!(f, "recursion failed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishingOutcome {
    Certified(VanishingCertificate),
    NotCertified(NotCertifiedReason),
}

impl VanishingOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, VanishingOutcome::Certified(_))
    }

    pub fn certificate(&self) -> Option<&VanishingCertificate> {
        match self {
            VanishingOutcome::Certified(c) => Some(c),
            VanishingOutcome::NotCertified(_) => None,
        }
    }
}

/// Exact dimension where one is available, a certified zero, or neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyResult {
    Dimension(num_bigint::BigUint),
    CertifiedZero(VanishingCertificate),
    NotCertified(NotCertifiedReason),
}

/// On `P^n` and for line bundles the dimension is computed directly;
/// otherwise the vanishing engine is asked for a certificate.
pub fn query_cohomology(claim: &VanishingClaim) -> CohomologyResult {
    let CohomologyQuery { p, q, t } = claim.query;
    if claim.level == 0 {
        return CohomologyResult::Dimension(bott_dimension(claim.spec.ambient_dim(), claim.query));
    }
    if q == 0 {
        return CohomologyResult::Dimension(line_bundle_cohomology(&claim.member(), p, t));
    }
    match verify_vanishing(claim) {
        VanishingOutcome::Certified(c) => CohomologyResult::CertifiedZero(c),
        VanishingOutcome::NotCertified(r) => CohomologyResult::NotCertified(r),
    }
}

fn line_bundle_vanishes(claim: &VanishingClaim) -> bool {
    let CohomologyQuery { p, t, .. } = claim.query;
    line_bundle_cohomology(&claim.member(), p, t) == num_bigint::BigUint::from(0u32)
}

/// Runs the inductive argument for `claim` and returns a certificate when
/// every branch closes.
pub fn verify_vanishing(claim: &VanishingClaim) -> VanishingOutcome {
    if !claim.query.in_vanishing_range(claim.dim()) {
        return VanishingOutcome::NotCertified(NotCertifiedReason::OutOfRange);
    }
    match prove(claim) {
        Some(cert) => VanishingOutcome::Certified(cert),
        None => VanishingOutcome::NotCertified(NotCertifiedReason::RecursionFailed),
    }
}

fn prove_premise(parent: &VanishingClaim, premise: VanishingClaim) -> Option<VanishingCertificate> {
    let measure = |c: &VanishingClaim| (c.level, c.query.q);
    assert!(measure(&premise) < measure(parent), "recursion measure must decrease: {} -> {}", parent, premise);
    if !premise.query.in_vanishing_range(premise.dim()) {
        return None;
    }
    prove(&premise)
}

fn prove(claim: &VanishingClaim) -> Option<VanishingCertificate> {
    let CohomologyQuery { p, q, t } = claim.query;
    if q == 0 {
        return line_bundle_vanishes(claim).then(|| VanishingCertificate::leaf(claim.clone()));
    }
    let level = claim.level;
    match claim.cut_degree() {
        None => {
            // H^{p-1}(Ω^{q-1}(t)) → H^p(Ω^q(t)) → H^p(∧^q V ⊗ O(t-q))
            let mut premises = Vec::with_capacity(2);
            if p > 0 {
                premises.push(prove_premise(claim, claim.at(0, p - 1, q - 1, t))?);
            }
            let base = claim.at(0, p, 0, t - q as i64);
            if !line_bundle_vanishes(&base) {
                return None;
            }
            premises.push(VanishingCertificate::leaf(base));
            Some(VanishingCertificate { claim: claim.clone(), rule: Rule::EulerPowerSeq, premises })
        }
        Some(d) => {
            let ambient_dim = claim.dim() + 1;
            if !((p + 1) + q < ambient_dim && t - d < q as i64 - (p as i64 + 1)) {
                return None;
            }
            // H^p(X, Ω_X^q(t)) → H^p(Y, Ω_X^q(t)|_Y) → H^{p+1}(X, Ω_X^q(t-d))
            let restricted = VanishingCertificate {
                claim: claim.clone(),
                rule: Rule::RestrictionSeq,
                premises: vec![
                    prove_premise(claim, claim.at(level - 1, p, q, t))?,
                    prove_premise(claim, claim.at(level - 1, p + 1, q, t - d))?,
                ],
            };
            // H^p(Y, Ω_X^q(t)|_Y) → H^p(Y, Ω_Y^q(t)) → H^{p+1}(Y, Ω_Y^{q-1}(t-d))
            let cotangent = prove_premise(claim, claim.at(level, p + 1, q - 1, t - d))?;
            Some(VanishingCertificate {
                claim: claim.clone(),
                rule: Rule::ConormalPowerSeq,
                premises: vec![restricted, cotangent],
            })
        }
    }
}

/// Replays a certificate independently of the search that produced it.
///
/// Returns `Ok(false)` when a leaf fact, a side condition or a premise claim
/// does not re-verify, and a structural error when a node has the wrong
/// number of premises for its rule.
pub fn check_certificate(cert: &VanishingCertificate) -> Result<bool> {
    let root = &cert.claim;
    check_node(cert, root.spec.ambient_dim(), root.spec.degrees())
}

fn check_node(node: &VanishingCertificate, n: u32, degrees: &[u32]) -> Result<bool> {
    let c = &node.claim;
    let CohomologyQuery { p, q, t } = c.query;
    let expect_premises = |count: usize| -> Result<()> {
        if node.premises.len() != count {
            return Err(Error::Structural(format!(
                "{:?} node for {} has {} premises, expected {count}",
                node.rule,
                c,
                node.premises.len()
            )));
        }
        Ok(())
    };
    let matches = |cert: &VanishingCertificate, level: usize, p: u32, q: u32, t: i64| {
        cert.claim.level == level && cert.claim.query == CohomologyQuery::new(p, q, t)
    };
    if c.spec.ambient_dim() != n || c.spec.degrees() != degrees {
        return Ok(false);
    }
    let local = match node.rule {
        Rule::LineBundleBase => {
            expect_premises(0)?;
            return Ok(q == 0 && c.query.in_vanishing_range(c.dim()) && line_bundle_vanishes(c));
        }
        Rule::EulerPowerSeq => {
            let count = if p == 0 { 1 } else { 2 };
            expect_premises(count)?;
            let base = node.premises.last().unwrap();
            c.level == 0
                && q >= 1
                && c.query.in_vanishing_range(c.dim())
                && base.rule == Rule::LineBundleBase
                && matches(base, 0, p, 0, t - q as i64)
                && (p == 0 || matches(&node.premises[0], 0, p - 1, q - 1, t))
        }
        Rule::RestrictionSeq => {
            expect_premises(2)?;
            match c.cut_degree() {
                None => false,
                Some(d) => {
                    let l = c.level - 1;
                    q >= 1
                        && c.query.in_vanishing_range(c.dim())
                        && matches(&node.premises[0], l, p, q, t)
                        && matches(&node.premises[1], l, p + 1, q, t - d)
                        && node.premises.iter().all(|pr| pr.rule != Rule::RestrictionSeq)
                }
            }
        }
        Rule::ConormalPowerSeq => {
            expect_premises(2)?;
            match c.cut_degree() {
                None => false,
                Some(d) => {
                    q >= 1
                        && c.query.in_vanishing_range(c.dim())
                        && (p + 1) + q < c.dim() + 1
                        && t - d < q as i64 - (p as i64 + 1)
                        && node.premises[0].rule == Rule::RestrictionSeq
                        && matches(&node.premises[0], c.level, p, q, t)
                        && node.premises[1].rule != Rule::RestrictionSeq
                        && matches(&node.premises[1], c.level, p + 1, q - 1, t - d)
                }
            }
        }
    };
    if !local {
        return Ok(false);
    }
    for premise in &node.premises {
        if !check_node(premise, n, degrees)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `-(n + max d_i + 5)`.
pub fn default_t_min(spec: &CompleteIntersectionSpec) -> i64 {
    let max_d = spec.degrees().iter().copied().max().unwrap_or(0) as i64;
    -(spec.ambient_dim() as i64 + max_d + 5)
}

/// All queries with `p + q < dim X` and `t_min <= t < q - p`, ordered by
/// `(p, q, t)`.
pub fn sweep_queries(dim: u32, t_min: i64) -> Vec<CohomologyQuery> {
    let mut out = Vec::new();
    for p in 0..dim {
        for q in 0..dim - p {
            for t in t_min..(q as i64 - p as i64) {
                out.push(CohomologyQuery::new(p, q, t));
            }
        }
    }
    out
}

/// Verifies every claim of the vanishing range on `X` with `t >= t_min`.
pub fn sweep_range(spec: &CompleteIntersectionSpec, t_min: i64) -> Result<Vec<(CohomologyQuery, VanishingOutcome)>> {
    if t_min > -1 {
        return Err(Error::Argument(format!("t_min must be at most -1, got {t_min}")));
    }
    let queries = sweep_queries(spec.dim(), t_min);
    Ok(queries
        .into_par_iter()
        .map(|query| {
            let claim = VanishingClaim::top(spec.clone(), query);
            (query, verify_vanishing(&claim))
        })
        .collect())
}
