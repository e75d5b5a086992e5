//! Splitting types of bundles on `P^1` presented as kernels of graded rows.
//!
//! For a surjection `⊕_j O(u_j) → O(v)` given by forms `c_j`, the kernel
//! `E ≅ ⊕ O(a_i)` has `h^0(E(m)) = Σ_i max(0, a_i + m + 1)`, so the second
//! difference `h(m) - 2h(m-1) + h(m-2)` counts the summands with `a_i = -m`.
//! Sections are computed twist by twist as nullspaces; minimal generators
//! are the sections in each twist not spanned by earlier generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{nullspace_by_degree, solve, BinaryForm, Field, FormMatrix, Span};
use crate::curves::variety::{gradient_along, singularity_probe_along, HypersurfaceForm, Probe, RationalCurveMap};
use crate::error::{Error, Result};

/// The multiset `a_1 >= ... >= a_m` of `E ≅ ⊕ O(a_i)` on `P^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType {
    summands: Vec<i64>,
}

impl From<Vec<i64>> for SplittingType {
    fn from(v: Vec<i64>) -> Self {
        SplittingType::new(v)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(s: SplittingType) -> Self {
        s.summands
    }
}

impl SplittingType {
    pub fn new(mut summands: Vec<i64>) -> Self {
        summands.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { summands }
    }

    pub fn summands(&self) -> &[i64] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn degree(&self) -> i64 {
        self.summands.iter().sum()
    }

    /// All summands nonnegative.
    pub fn is_free(&self) -> bool {
        self.summands.iter().all(|&a| a >= 0)
    }

    pub fn positive_count(&self) -> usize {
        self.summands.iter().filter(|&&a| a > 0).count()
    }

    pub fn dual(&self) -> Self {
        SplittingType::new(self.summands.iter().map(|a| -a).collect())
    }

    /// `h^0(E(m))`.
    pub fn sections(&self, m: i64) -> i64 {
        self.summands.iter().map(|a| (a + m + 1).max(0)).sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|&a| if a < 0 { format!("O(\u{2212}{})", -a) } else { format!("O({a})") })
            .collect();
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

/// A minimal generator: a section of `E(twist)` spanning the summand
/// `O(-twist)`. Entries of negative degree are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator<K: Field> {
    pub twist: i64,
    pub components: Vec<Option<BinaryForm<K>>>,
}

#[derive(Debug, Clone)]
pub struct KernelBundle<K: Field> {
    pub splitting: SplittingType,
    pub generators: Vec<Generator<K>>,
    /// `(m, h^0(E(m)))` for every twist examined, in increasing order.
    pub section_counts: Vec<(i64, usize)>,
}

/// Twists examined beyond closure to confirm no further generators appear.
const CLOSURE_MARGIN: i64 = 2;

struct RowKernel<'a, K: Field> {
    field: &'a K,
    matrix: FormMatrix<K>,
    source: Vec<i64>,
}

impl<K: Field> RowKernel<'_, K> {
    fn active(&self, m: i64) -> Vec<usize> {
        (0..self.source.len()).filter(|&j| self.source[j] + m >= 0).collect()
    }

    fn sections(&self, m: i64) -> (Vec<usize>, Vec<Vec<BinaryForm<K>>>) {
        let active = self.active(m);
        if active.is_empty() {
            return (active, Vec::new());
        }
        let sub = self.matrix.select_columns(&active);
        (active.clone(), nullspace_by_degree(&sub, m))
    }

    fn flatten(&self, m: i64, active: &[usize], comps: &[Option<BinaryForm<K>>]) -> Vec<K::Elem> {
        let mut out = Vec::new();
        for &j in active {
            let deg = (self.source[j] + m) as usize;
            match &comps[j] {
                Some(f) => {
                    debug_assert_eq!(f.degree(), deg);
                    out.extend(f.lex_coeffs().cloned());
                }
                None => out.extend(std::iter::repeat_n(self.field.zero(), deg + 1)),
            }
        }
        out
    }

    /// `s^(k-a) t^a · g` for every `a`, as elements of `E(g.twist + k)`.
    fn multiples(&self, g: &Generator<K>, k: i64) -> Vec<Vec<Option<BinaryForm<K>>>> {
        (0..=k as usize)
            .map(|a| g.components.iter().map(|c| c.as_ref().map(|f| f.shift(k as usize - a, a))).collect())
            .collect()
    }
}

/// Splits the kernel of `(c_0, ..., c_m): ⊕ O(source_j) → O(target)`.
///
/// The row must be surjective (no common zero of the nonzero entries);
/// otherwise the reconstructed degree does not close and an internal error
/// is returned.
pub fn kernel_of_row<K: Field>(
    field: &K,
    row: &[BinaryForm<K>],
    source: &[i64],
    target: i64,
) -> Result<KernelBundle<K>> {
    if row.len() != source.len() || row.is_empty() {
        return Err(Error::Structural(format!("row of length {} with {} source degrees", row.len(), source.len())));
    }
    let matrix = FormMatrix::row(field, row.to_vec(), source, target)?;
    let rank = row.len() - 1;
    let degree: i64 = source.iter().sum::<i64>() - target;
    let kernel = RowKernel { field, matrix, source: source.to_vec() };

    let umax = *source.iter().max().unwrap();
    // every summand of a subbundle of ⊕ O(u_j) has degree <= max u_j, and
    // the smallest one is at least degree - (rank - 1) max u_j
    let first = -umax;
    let last = if rank == 0 { first } else { (rank as i64 - 1) * umax - degree };
    let mut generators: Vec<Generator<K>> = Vec::new();
    let mut counts: Vec<(i64, usize)> = vec![(first - 2, 0), (first - 1, 0)];
    let mut closed_at = None;
    let mut m = first;
    loop {
        if closed_at.is_none() && m > last + 1 {
            return Err(Error::Internal(format!(
                "kernel splitting did not close by twist {m}: found {:?} of rank {rank}, degree {degree}",
                generators.iter().map(|g| -g.twist).collect::<Vec<_>>()
            )));
        }
        let (active, basis) = kernel.sections(m);
        let h = basis.len();
        let n = counts.len();
        let second_diff = h as i64 - 2 * counts[n - 1].1 as i64 + counts[n - 2].1 as i64;
        counts.push((m, h));

        let dim: usize = active.iter().map(|&j| (source[j] + m) as usize + 1).sum();
        let mut span = Span::new(field, dim);
        for g in &generators {
            for mult in kernel.multiples(g, m - g.twist) {
                span.insert(&kernel.flatten(m, &active, &mult));
            }
        }
        let mut fresh = 0;
        for sol in basis {
            let mut comps: Vec<Option<BinaryForm<K>>> = vec![None; source.len()];
            for (&j, f) in active.iter().zip(sol) {
                comps[j] = Some(f);
            }
            if span.insert(&kernel.flatten(m, &active, &comps)) {
                fresh += 1;
                if closed_at.is_none() {
                    generators.push(Generator { twist: m, components: comps });
                }
            }
        }
        if fresh as i64 != second_diff {
            return Err(Error::Internal(format!(
                "twist {m}: {fresh} new generators but the section counts predict {second_diff}"
            )));
        }
        if let Some(c) = closed_at {
            if fresh > 0 {
                return Err(Error::Internal(format!("new generators at twist {m} after closure at {c}")));
            }
            if m >= c + CLOSURE_MARGIN {
                break;
            }
        } else if generators.len() == rank {
            closed_at = Some(m);
        }
        m += 1;
    }

    let splitting = SplittingType::new(generators.iter().map(|g| -g.twist).collect());
    if splitting.degree() != degree {
        return Err(Error::Internal(format!(
            "kernel splitting {splitting} has degree {} but the presentation has degree {degree}",
            splitting.degree()
        )));
    }
    Ok(KernelBundle { splitting, generators, section_counts: counts.split_off(2) })
}

/// `φ^* T_{P^n}`, the dual of `ker(O(-e)^{n+1} → O)` with entries `φ_i`.
pub fn splitting_of_pullback_tangent_pn<K: Field>(n: usize, phi: &RationalCurveMap<K>) -> Result<SplittingType> {
    if phi.ambient_dim() != n {
        return Err(Error::Argument(format!("curve maps to P^{}, not P^{n}", phi.ambient_dim())));
    }
    let e = phi.degree() as i64;
    let source = vec![-e; n + 1];
    let cotangent = kernel_of_row(phi.field(), phi.components(), &source, 0)?;
    debug_assert_eq!(cotangent.splitting.rank(), n);
    Ok(cotangent.splitting.dual())
}

/// Intermediate data of the hypersurface computation.
#[derive(Debug, Clone)]
pub struct TangentComputation<K: Field> {
    /// `K = ker(O(e)^{n+1} → O(de))`, the pullback of `T_{P^n}|_X` extended by `O`.
    pub euler_kernel: KernelBundle<K>,
    /// Coordinates of the Euler section in the generators of `K`; `None`
    /// for generators of negative degree.
    pub euler_coordinates: Vec<Option<BinaryForm<K>>>,
    pub cotangent: SplittingType,
    pub tangent: SplittingType,
}

/// Full computation of `φ^* T_X` for a hypersurface `X ⊂ P^n`.
pub fn pullback_tangent_computation<K: Field>(
    x: &HypersurfaceForm<K>,
    phi: &RationalCurveMap<K>,
) -> Result<TangentComputation<K>> {
    if singularity_probe_along(x, phi)? == Probe::Degenerate {
        return Err(Error::Precondition("degenerate gradient along curve".into()));
    }
    let field = phi.field();
    let n = x.ambient_dim();
    let e = phi.degree() as i64;
    let d = x.degree() as i64;

    let grad = gradient_along(x, phi);
    let euler_kernel = kernel_of_row(field, &grad, &vec![e; n + 1], d * e)?;
    if euler_kernel.splitting.rank() != n {
        return Err(Error::Internal(format!("Euler kernel has rank {}, expected {n}", euler_kernel.splitting.rank())));
    }

    // the Euler section v = (φ_i) lies in H^0(K) because Σ φ_i ∂_i F = d F(φ) = 0
    let active: Vec<usize> = (0..=n).collect();
    let rk = RowKernel {
        field,
        matrix: FormMatrix::row(field, grad.clone(), &vec![e; n + 1], d * e)?,
        source: vec![e; n + 1],
    };
    let mut columns: Vec<(usize, Vec<K::Elem>)> = Vec::new();
    for (i, g) in euler_kernel.generators.iter().enumerate() {
        if g.twist > 0 {
            continue;
        }
        for mult in rk.multiples(g, -g.twist) {
            columns.push((i, rk.flatten(0, &active, &mult)));
        }
    }
    let target: Vec<K::Elem> = rk.flatten(0, &active, &phi.components().iter().cloned().map(Some).collect::<Vec<_>>());
    let nrows = target.len();
    let rows: Vec<Vec<K::Elem>> = (0..nrows).map(|r| columns.iter().map(|(_, c)| c[r].clone()).collect()).collect();
    let coords = solve(field, &rows, &target, columns.len())
        .ok_or_else(|| Error::Internal("Euler section is not a section of the gradient kernel".into()))?;

    let mut euler_coordinates: Vec<Option<BinaryForm<K>>> = Vec::with_capacity(n);
    let mut pos = 0;
    for g in &euler_kernel.generators {
        if g.twist > 0 {
            euler_coordinates.push(None);
            continue;
        }
        let b = (-g.twist) as usize;
        // multiple a is s^(b-a) t^a, i.e. the coefficient of s^(b-a)
        let mut coeffs = vec![field.zero(); b + 1];
        for a in 0..=b {
            coeffs[b - a] = coords[pos + a].clone();
        }
        pos += b + 1;
        euler_coordinates.push(Some(BinaryForm::from_coeffs(field, coeffs)?));
    }

    // φ^*Ω_X = ker(⊕ O(-b_i) → O) with entries the coordinates above
    let row: Vec<BinaryForm<K>> =
        euler_coordinates.iter().map(|c| c.clone().unwrap_or_else(|| BinaryForm::zero(field, 0))).collect();
    let source: Vec<i64> = euler_kernel.generators.iter().map(|g| g.twist).collect();
    let cotangent = kernel_of_row(field, &row, &source, 0)?.splitting;
    let tangent = cotangent.dual();

    if tangent.rank() != n - 1 || tangent.degree() != e * (n as i64 + 1 - d) {
        return Err(Error::Internal(format!("tangent splitting {tangent} violates rank/degree conservation")));
    }
    // 0 → O → K → φ^*T_X → 0 gives h^0(T(m)) = h^0(K(m)) - (m + 1) for m >= -1
    for m in -1..=tangent.summands()[0].max(0) + 1 {
        if tangent.sections(m) != euler_kernel.splitting.sections(m) - (m + 1) {
            return Err(Error::Internal(format!("tangent and Euler kernel disagree on sections at twist {m}")));
        }
    }
    Ok(TangentComputation { euler_kernel, euler_coordinates, cotangent, tangent })
}

/// `φ^* T_X` for a hypersurface `X` smooth along `φ`.
pub fn splitting_of_pullback_tangent<K: Field>(
    x: &HypersurfaceForm<K>,
    phi: &RationalCurveMap<K>,
) -> Result<SplittingType> {
    pullback_tangent_computation(x, phi).map(|c| c.tangent)
}
