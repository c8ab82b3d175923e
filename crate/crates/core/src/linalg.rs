//! Exact sparse row echelon over ℚ(ζ_m).
//!
//! Columns are ordered so that the leftmost column has pivot priority. Callers
//! exploit this by placing coordinates they want eliminated first (the
//! "priority block") at low column indices: after insertion, the rows whose
//! pivot lies past the block span exactly the vectors with a zero priority
//! part. This single device gives kernels, subspace intersections and the
//! radical oracle.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse vector: `(column, value)` pairs, strictly increasing columns, no
/// zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// `a + c·b`.
pub fn sparse_axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((cb, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Shift all columns by `offset`.
pub fn sparse_shift(v: &SparseVec, offset: usize) -> SparseVec {
    v.iter().map(|(i, x)| (i + offset, x.clone())).collect()
}

/// Entries with column in `range`, re-based to start at zero.
pub fn sparse_window(v: &SparseVec, range: std::ops::Range<usize>) -> SparseVec {
    v.iter()
        .filter(|(i, _)| range.contains(i))
        .map(|(i, x)| (i - range.start, x.clone()))
        .collect()
}

/// Incrementally built echelon basis of a subspace of 𝕜^ncols.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut from = 0usize;
        loop {
            let next = acc.range(from..).next().map(|(c, _)| *c);
            let Some(c) = next else { break };
            if let Some(&r) = self.pivots.get(&c) {
                let coef = acc.remove(&c).unwrap();
                for (j, x) in self.rows[r].iter().skip(1) {
                    let e = acc.entry(*j).or_default();
                    *e -= &(&coef * x);
                    if e.is_zero() {
                        acc.remove(j);
                    }
                }
            }
            from = c + 1;
        }
        acc.into_iter().collect()
    }

    /// Insert `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        if r.is_empty() {
            return false;
        }
        let piv = r[0].0;
        debug_assert!(piv < self.ncols, "column {piv} out of range");
        let inv = r[0].1.inv().expect("pivot is nonzero");
        let row = sparse_scale(&r, &inv);
        self.pivots.insert(piv, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Rows in insertion order (echelon, not necessarily reduced).
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Canonical reduced row echelon form: rows sorted by pivot, pivots equal
    /// to one, every pivot column zero outside its row.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut out: Vec<SparseVec> = Vec::with_capacity(self.rows.len());
        // Process pivots from the right so each row only needs reducing
        // against rows that are already fully reduced.
        let mut reduced = Echelon::new(self.ncols);
        for (&_col, &r) in self.pivots.iter().rev() {
            let row = &self.rows[r];
            let head = row[0].clone();
            let tail: SparseVec = row[1..].to_vec();
            let tail = reduced.reduce(&tail);
            let mut full = vec![head];
            full.extend(tail);
            reduced.pivots.insert(full[0].0, reduced.rows.len());
            reduced.rows.push(full.clone());
            out.push(full);
        }
        out.reverse();
        out
    }

    /// Rows whose pivot column is at least `start`, i.e. a basis of the
    /// subspace of vectors vanishing on columns `0..start`.
    pub fn rows_with_pivot_from(&self, start: usize) -> Vec<SparseVec> {
        self.pivots
            .range(start..)
            .map(|(_, &r)| self.rows[r].clone())
            .collect()
    }

    pub fn count_pivots_from(&self, start: usize) -> usize {
        self.pivots.range(start..).count()
    }

    /// Merge another echelon basis of the same ambient space.
    pub fn extend_from(&mut self, other: &Echelon) {
        for r in other.rows.iter() {
            self.insert(r.clone());
        }
    }
}

/// Kernel of the linear map whose `i`-th column is `columns[i]` (vectors of
/// length `nrows`); returned as vectors of length `columns.len()`.
pub fn kernel(columns: &[SparseVec], nrows: usize) -> Vec<SparseVec> {
    let n = columns.len();
    let mut e = Echelon::new(nrows + n);
    for (i, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        v.push((nrows + i, Scalar::one()));
        e.insert(v);
    }
    let rows: Vec<SparseVec> = e
        .rows_with_pivot_from(nrows)
        .into_iter()
        .map(|r| sparse_window(&r, nrows..nrows + n))
        .collect();
    Echelon::from_rows(n, rows).rref()
}

/// Intersection of two subspaces of 𝕜^n given by spanning rows.
pub fn intersect(a: &[SparseVec], b: &[SparseVec], n: usize) -> Vec<SparseVec> {
    // Zassenhaus: rows (u | u) and (w | 0); rows with zero left part span U ∩ W.
    let mut e = Echelon::new(2 * n);
    for u in a {
        let mut v = u.clone();
        v.extend(sparse_shift(u, n));
        e.insert(v);
    }
    for w in b {
        e.insert(w.clone());
    }
    let rows: Vec<SparseVec> = e
        .rows_with_pivot_from(n)
        .into_iter()
        .map(|r| sparse_window(&r, n..2 * n))
        .collect();
    Echelon::from_rows(n, rows).rref()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> SparseVec {
        sparse_from_dense(&v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_membership() {
        let e = Echelon::from_rows(3, [s(&[1, 2, 3]), s(&[2, 4, 6]), s(&[0, 1, 1])]);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&s(&[1, 3, 4])));
        assert!(!e.contains(&s(&[0, 0, 1])));
    }

    #[test]
    fn rref_is_canonical() {
        let a = Echelon::from_rows(3, [s(&[1, 2, 3]), s(&[0, 1, 1])]).rref();
        let b = Echelon::from_rows(3, [s(&[1, 3, 4]), s(&[2, 5, 7])]).rref();
        assert_eq!(a, b);
        assert_eq!(a, vec![s(&[1, 0, 1]), s(&[0, 1, 1])]);
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // columns (1,1), (2,2), (0,0)
        let cols = vec![s(&[1, 1]), s(&[2, 2]), Vec::new()];
        let k = kernel(&cols, 2);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mut img = vec![Scalar::zero(); 2];
            for (i, x) in v {
                for (r, y) in &cols[*i] {
                    img[*r] += &(x * y);
                }
            }
            assert!(img.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn intersection() {
        let a = vec![s(&[1, 0, 0]), s(&[0, 1, 0])];
        let b = vec![s(&[1, 1, 1]), s(&[0, 1, 0])];
        assert_eq!(intersect(&a, &b, 3), vec![s(&[0, 1, 0])]);
        assert!(intersect(&a, &[], 3).is_empty());
    }
}
