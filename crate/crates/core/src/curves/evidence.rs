use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Field;
use crate::curves::splitting::{splitting_of_pullback_tangent, SplittingType};
use crate::curves::variety::{HypersurfaceForm, RationalCurveMap};
use crate::error::Result;
use crate::stability::Tri;

/// A lower bound for the positive rank, with the curve that realizes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositiveRankBound {
    pub value: usize,
    /// Index into the supplied curve list and that curve's splitting.
    pub witness: Option<(usize, SplittingType)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnirulednessEvidence {
    pub separably_uniruled: Tri,
    pub witness: Option<(usize, SplittingType)>,
}

fn splittings<K: Field>(x: &HypersurfaceForm<K>, curves: &[RationalCurveMap<K>]) -> Result<Vec<SplittingType>> {
    curves.par_iter().map(|phi| splitting_of_pullback_tangent(x, phi)).collect()
}

pub(crate) fn bound_from(splittings: &[Option<SplittingType>]) -> PositiveRankBound {
    let mut best = PositiveRankBound { value: 0, witness: None };
    for (i, s) in splittings.iter().enumerate() {
        let Some(s) = s else { continue };
        if s.is_free() && (best.witness.is_none() || s.positive_count() > best.value) {
            best = PositiveRankBound { value: s.positive_count(), witness: Some((i, s.clone())) };
        }
    }
    best
}

pub(crate) fn evidence_from(splittings: &[Option<SplittingType>]) -> UnirulednessEvidence {
    let witness =
        splittings.iter().enumerate().find_map(|(i, s)| s.as_ref().filter(|s| s.is_free()).map(|s| (i, s.clone())));
    UnirulednessEvidence { separably_uniruled: if witness.is_some() { Tri::Yes } else { Tri::Unknown }, witness }
}

/// Maximum number of positive summands over the free curves supplied.
///
/// Every curve must lie on `X` with `X` smooth along it.
pub fn positive_rank_lower_bound<K: Field>(
    x: &HypersurfaceForm<K>,
    curves: &[RationalCurveMap<K>],
) -> Result<PositiveRankBound> {
    let s: Vec<_> = splittings(x, curves)?.into_iter().map(Some).collect();
    Ok(bound_from(&s))
}

/// `yes` with the first free curve among `curves`, otherwise `unknown`.
pub fn uniruledness_evidence<K: Field>(
    x: &HypersurfaceForm<K>,
    curves: &[RationalCurveMap<K>],
) -> Result<UnirulednessEvidence> {
    let s: Vec<_> = splittings(x, curves)?.into_iter().map(Some).collect();
    Ok(evidence_from(&s))
}
