//! Cohomology of `Ω^q(t)` on projective space and of line bundles on
//! complete intersections.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binom, FieldSpec};
use crate::error::{Error, Result};

/// A complete intersection `X ⊂ P^n` of multidegree `(d_1, ..., d_c)`.
///
/// The degrees are kept in the order given; that order fixes the tower
/// `P^n ⊃ X_1 ⊃ ... ⊃ X_c = X` used by the vanishing engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecRecord", into = "SpecRecord")]
pub struct CompleteIntersectionSpec {
    ambient_dim: u32,
    degrees: Vec<u32>,
    field: FieldSpec,
}

#[derive(Serialize, Deserialize)]
struct SpecRecord {
    n: u32,
    degrees: Vec<u32>,
    #[serde(default)]
    characteristic: u32,
}

impl TryFrom<SpecRecord> for CompleteIntersectionSpec {
    type Error = Error;
    fn try_from(r: SpecRecord) -> Result<Self> {
        CompleteIntersectionSpec::new(r.n, r.degrees, FieldSpec::new(r.characteristic)?)
    }
}

impl From<CompleteIntersectionSpec> for SpecRecord {
    fn from(s: CompleteIntersectionSpec) -> Self {
        SpecRecord { n: s.ambient_dim, degrees: s.degrees, characteristic: s.field.characteristic() }
    }
}

impl CompleteIntersectionSpec {
    pub fn new(ambient_dim: u32, degrees: Vec<u32>, field: FieldSpec) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::Argument("ambient dimension must be positive".into()));
        }
        if degrees.len() as u32 >= ambient_dim {
            return Err(Error::Argument(format!(
                "{} equations in P^{ambient_dim} leave no positive-dimensional complete intersection",
                degrees.len()
            )));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            let hint = if d == 1 {
                format!("a degree-1 equation cuts out a hyperplane; drop it and use P^{} instead", ambient_dim - 1)
            } else {
                "degree-0 equations are not allowed".to_string()
            };
            return Err(Error::Argument(format!("all degrees must be at least 2 ({hint})")));
        }
        Ok(CompleteIntersectionSpec { ambient_dim, degrees, field })
    }

    /// Projective space `P^n` itself.
    pub fn projective_space(n: u32) -> Result<Self> {
        Self::new(n, Vec::new(), FieldSpec::Rational)
    }

    /// Like [`new`](Self::new) with the degrees sorted ascending.
    pub fn normalized(ambient_dim: u32, mut degrees: Vec<u32>, field: FieldSpec) -> Result<Self> {
        degrees.sort_unstable();
        Self::new(ambient_dim, degrees, field)
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn codim(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn dim(&self) -> u32 {
        self.ambient_dim - self.codim()
    }

    /// `deg X = ∏ d_i`.
    pub fn degree(&self) -> BigUint {
        self.degrees.iter().map(|&d| BigUint::from(d)).product()
    }

    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64).sum()
    }

    /// `ω_X = O_X(Σ d_i - n - 1)`.
    pub fn canonical_twist(&self) -> i64 {
        self.degree_sum() - self.ambient_dim as i64 - 1
    }

    /// The member `X_level` of the tower, cut out by the first `level` degrees.
    pub fn prefix(&self, level: usize) -> Result<Self> {
        if level > self.degrees.len() {
            return Err(Error::Argument(format!("level {level} exceeds codimension {}", self.degrees.len())));
        }
        Ok(CompleteIntersectionSpec {
            ambient_dim: self.ambient_dim,
            degrees: self.degrees[..level].to_vec(),
            field: self.field,
        })
    }
}

impl fmt::Display for CompleteIntersectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            write!(f, "P^{}", self.ambient_dim)
        } else {
            let ds: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
            write!(f, "X({}) ⊂ P^{}", ds.join(","), self.ambient_dim)
        }
    }
}

/// A cohomology group `H^p(Ω^q(t))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CohomologyQuery {
    pub p: u32,
    pub q: u32,
    pub t: i64,
}

impl CohomologyQuery {
    pub fn new(p: u32, q: u32, t: i64) -> Self {
        CohomologyQuery { p, q, t }
    }

    /// Whether `p + q < dim` and `t < q - p`.
    pub fn in_vanishing_range(&self, dim: u32) -> bool {
        self.p + self.q < dim && self.t < self.q as i64 - self.p as i64
    }
}

impl fmt::Display for CohomologyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H^{}(Ω^{}({}))", self.p, self.q, self.t)
    }
}

/// `h^p(P^n, Ω^q(t))` by Bott's closed form.
pub fn bott_dimension(n: u32, query: CohomologyQuery) -> BigUint {
    let CohomologyQuery { p, q, t } = query;
    if q > n || p > n {
        return BigUint::zero();
    }
    let (n, p, q) = (n as i64, p as i64, q as i64);
    if p == 0 && t > q {
        binom(t + n - q, t as u64) * binom(t - 1, q as u64)
    } else if p == q && t == 0 {
        BigUint::from(1u32)
    } else if p == n && t < q - n {
        binom(-t + q, (-t) as u64) * binom(-t - 1, (n - q) as u64)
    } else {
        BigUint::zero()
    }
}

/// `h^0(X, O_X(t))`, the Hilbert function of the complete intersection.
pub fn hilbert_h0(spec: &CompleteIntersectionSpec, t: i64) -> BigUint {
    if t < 0 {
        return BigUint::zero();
    }
    let n = spec.ambient_dim() as i64;
    let ds = spec.degrees();
    let mut total = BigInt::zero();
    for mask in 0u64..(1 << ds.len()) {
        let shift: i64 = ds.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d as i64).sum();
        let term = BigInt::from_biguint(Sign::Plus, binom(n + t - shift, n as u64));
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("Hilbert function is nonnegative")
}

/// `h^p(X, O_X(t))`, using Serre duality with `ω_X = O_X(Σ d_i - n - 1)`.
pub fn line_bundle_cohomology(spec: &CompleteIntersectionSpec, p: u32, t: i64) -> BigUint {
    let dim = spec.dim();
    if p == 0 {
        hilbert_h0(spec, t)
    } else if p != dim {
        BigUint::zero()
    } else {
        hilbert_h0(spec, spec.canonical_twist() - t)
    }
}
