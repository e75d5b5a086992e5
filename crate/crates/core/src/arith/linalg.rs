use crate::arith::{BinaryForm, Field};
use crate::error::{Error, Result};

/// Reduces `rows` to reduced row echelon form in place and returns the pivot
/// columns. Pivots are the first nonzero entry, scanning columns left to
/// right and rows top to bottom.
fn rref<K: Field>(k: &K, rows: &mut [Vec<K::Elem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !k.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = k.inv(&rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = k.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || k.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = k.sub(x, &k.mul(&factor, p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Basis of `{x : A x = 0}` for a dense `rows × ncols` matrix, one vector per
/// free column with that coordinate set to one.
pub fn nullspace<K: Field>(k: &K, rows: &[Vec<K::Elem>], ncols: usize) -> Vec<Vec<K::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(k, &mut m, ncols);
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); ncols];
        v[free] = k.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = k.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` and returns one solution (free coordinates zero), or
/// `None` if the system is inconsistent.
pub fn solve<K: Field>(k: &K, rows: &[Vec<K::Elem>], rhs: &[K::Elem], ncols: usize) -> Option<Vec<K::Elem>> {
    let mut m: Vec<Vec<K::Elem>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(k, &mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![k.zero(); ncols];
    for (row, &pc) in m.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// An incrementally grown subspace of `K^dim`, kept in echelon form.
#[derive(Debug, Clone)]
pub struct Span<K: Field> {
    field: K,
    dim: usize,
    // (pivot column, row with a one at the pivot)
    rows: Vec<(usize, Vec<K::Elem>)>,
}

impl<K: Field> Span<K> {
    pub fn new(field: &K, dim: usize) -> Self {
        Span { field: field.clone(), dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            if k.is_zero(&v[*pc]) {
                continue;
            }
            let factor = v[*pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = k.sub(x, &k.mul(&factor, r));
            }
        }
        v
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[K::Elem]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length does not match span dimension");
        let k = self.field.clone();
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&r[pc]).expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = k.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if k.is_zero(&row[pc]) {
                continue;
            }
            let factor = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                *x = k.sub(x, &k.mul(&factor, y));
            }
        }
        self.rows.push((pc, r));
        true
    }
}

/// A graded homogeneous matrix of binary forms.
///
/// Columns stand for free generators of degrees `col_degrees[j]`, rows for
/// generators of degrees `row_degrees[i]`; a nonzero entry `(i, j)` must have
/// degree `col_degrees[j] - row_degrees[i]`. A solution in degree `twist` has
/// `j`-th entry of degree `twist - col_degrees[j]`.
#[derive(Debug, Clone)]
pub struct FormMatrix<K: Field> {
    field: K,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<Vec<BinaryForm<K>>>,
}

impl<K: Field> FormMatrix<K> {
    pub fn new(
        field: &K,
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        entries: Vec<Vec<BinaryForm<K>>>,
    ) -> Result<Self> {
        if entries.len() != row_degrees.len() {
            return Err(Error::Structural(format!(
                "{} rows given but {} row degrees",
                entries.len(),
                row_degrees.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degrees.len() {
                return Err(Error::Structural(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    col_degrees.len()
                )));
            }
            for (j, e) in row.iter().enumerate() {
                let expected = col_degrees[j] - row_degrees[i];
                if !e.is_zero() && e.degree() as i64 != expected {
                    return Err(Error::Structural(format!(
                        "entry ({i}, {j}) has degree {} but the grading requires {expected}",
                        e.degree()
                    )));
                }
            }
        }
        Ok(FormMatrix { field: field.clone(), row_degrees, col_degrees, entries })
    }

    /// A single-row matrix `(c_0, ..., c_m)` mapping `⊕ O(source_j)` to `O(target)`.
    pub fn row(field: &K, entries: Vec<BinaryForm<K>>, source: &[i64], target: i64) -> Result<Self> {
        Self::new(field, vec![-target], source.iter().map(|u| -u).collect(), vec![entries])
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn entry(&self, i: usize, j: usize) -> &BinaryForm<K> {
        &self.entries[i][j]
    }

    /// Keeps only the listed columns.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        FormMatrix {
            field: self.field.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: cols.iter().map(|&j| self.col_degrees[j]).collect(),
            entries: self.entries.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect(),
        }
    }

    /// The coefficient matrix of `g -> M g` in degree `twist`, with unknowns
    /// ordered by column and then lexicographically (`s^d` first). Returns
    /// `None` when some solution entry would have negative degree.
    pub fn coefficient_matrix(&self, twist: i64) -> Option<(Vec<Vec<K::Elem>>, usize)> {
        let k = &self.field;
        let sol_degrees: Vec<i64> = self.col_degrees.iter().map(|c| twist - c).collect();
        if sol_degrees.iter().any(|&d| d < 0) {
            return None;
        }
        let offsets: Vec<usize> = sol_degrees
            .iter()
            .scan(0usize, |acc, &d| {
                let o = *acc;
                *acc += d as usize + 1;
                Some(o)
            })
            .collect();
        let nunknowns: usize = sol_degrees.iter().map(|&d| d as usize + 1).sum();
        let mut rows = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            let out_degree = twist - self.row_degrees[i];
            if out_degree < 0 {
                continue;
            }
            let out_degree = out_degree as usize;
            let mut block = vec![vec![k.zero(); nunknowns]; out_degree + 1];
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let gd = sol_degrees[j] as usize;
                // unknown at lex position l is the coefficient of s^(gd-l) t^l
                for l in 0..=gd {
                    let s_exp_g = gd - l;
                    for (a, c) in entry.coeffs().iter().enumerate() {
                        if k.is_zero(c) {
                            continue;
                        }
                        let s_exp = a + s_exp_g;
                        let lex_row = out_degree - s_exp;
                        let cell = &mut block[lex_row][offsets[j] + l];
                        *cell = k.add(cell, c);
                    }
                }
            }
            rows.extend(block);
        }
        Some((rows, nunknowns))
    }

    pub(crate) fn solution_degrees(&self, twist: i64) -> Vec<i64> {
        self.col_degrees.iter().map(|c| twist - c).collect()
    }
}

/// Unflattens a coefficient vector into forms of the given degrees.
pub(crate) fn split_solution<K: Field>(k: &K, v: &[K::Elem], degrees: &[i64]) -> Vec<BinaryForm<K>> {
    let mut out = Vec::with_capacity(degrees.len());
    let mut pos = 0;
    for &d in degrees {
        let len = d as usize + 1;
        out.push(BinaryForm::from_lex_coeffs(k, v[pos..pos + len].to_vec()).expect("nonempty"));
        pos += len;
    }
    out
}

/// Basis of the solutions `g` of `M g = 0` in degree `twist`, each a tuple of
/// forms with `deg g_j = twist - col_degrees[j]`.
///
/// If any of those degrees is negative the basis is empty by convention;
/// callers that need mixed-sign degrees drop those columns first.
pub fn nullspace_by_degree<K: Field>(m: &FormMatrix<K>, twist: i64) -> Vec<Vec<BinaryForm<K>>> {
    let Some((rows, n)) = m.coefficient_matrix(twist) else {
        return Vec::new();
    };
    let degrees = m.solution_degrees(twist);
    nullspace(&m.field, &rows, n).iter().map(|v| split_solution(&m.field, v, &degrees)).collect()
}
