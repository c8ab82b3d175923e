//! Degree-wise subspaces of a graded algebra, stored as canonical echelon
//! bases.

use rayon::prelude::*;

use crate::algebra::{AlgElement, GradedAlgebra};
use crate::linalg::{intersect, Echelon, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Oracle,
    Constructive,
    User,
    Derived,
}

/// For each degree `d ≤ D`, the reduced row echelon basis of a subspace of
/// `R_d` in the coordinates of the algebra's normal-word basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdealTable {
    ambient: Vec<usize>,
    rows: Vec<Vec<SparseVec>>,
    provenance: Provenance,
}

impl GradedIdealTable {
    pub fn zero(alg: &GradedAlgebra, max_degree: u32, provenance: Provenance) -> Self {
        let ambient: Vec<usize> = (0..=max_degree).map(|d| alg.dim(d)).collect();
        let rows = vec![Vec::new(); ambient.len()];
        GradedIdealTable {
            ambient,
            rows,
            provenance,
        }
    }

    /// Whole algebra in every degree.
    pub fn full(alg: &GradedAlgebra, max_degree: u32, provenance: Provenance) -> Self {
        let mut t = Self::zero(alg, max_degree, provenance);
        for d in 0..t.ambient.len() {
            t.rows[d] = (0..t.ambient[d])
                .map(|i| vec![(i, crate::scalar::Scalar::one())])
                .collect();
        }
        t
    }

    /// Canonicalise arbitrary spanning sets, one per degree.
    pub fn from_spans(
        alg: &GradedAlgebra,
        spans: Vec<Vec<SparseVec>>,
        provenance: Provenance,
    ) -> Self {
        let ambient: Vec<usize> = (0..spans.len() as u32).map(|d| alg.dim(d)).collect();
        let rows = spans
            .into_iter()
            .zip(&ambient)
            .map(|(s, &n)| Echelon::from_rows(n, s).rref())
            .collect();
        GradedIdealTable {
            ambient,
            rows,
            provenance,
        }
    }

    /// Span of the homogeneous components of `elems`, degree by degree.
    pub fn span_of(
        alg: &GradedAlgebra,
        elems: &[AlgElement],
        max_degree: u32,
        provenance: Provenance,
    ) -> Self {
        let mut spans = vec![Vec::new(); max_degree as usize + 1];
        for e in elems {
            for d in e.degrees() {
                if d <= max_degree {
                    spans[d as usize].push(alg.coords(e, d));
                }
            }
        }
        Self::from_spans(alg, spans, provenance)
    }

    /// Two-sided ideal generated by `gens`, degree by degree:
    /// `I_d = span(gens_d) + Σ_x (x·I_{d-1} + I_{d-1}·x)`.
    pub fn ideal_closure(
        alg: &GradedAlgebra,
        gens: &[AlgElement],
        max_degree: u32,
        provenance: Provenance,
    ) -> Self {
        let base = Self::span_of(alg, gens, max_degree, provenance);
        base.two_sided_closure(alg)
    }

    /// Smallest two-sided ideal containing this table.
    pub fn two_sided_closure(&self, alg: &GradedAlgebra) -> Self {
        let letters = alg.gens();
        let mut out = Self::zero(alg, self.max_degree(), self.provenance);
        for d in 0..self.ambient.len() {
            let mut e = Echelon::from_rows(self.ambient[d], self.rows[d].iter().cloned());
            if d > 0 {
                let prev = out.elements(alg, d as u32 - 1);
                let products: Vec<SparseVec> = prev
                    .par_iter()
                    .flat_map_iter(|p| {
                        letters.iter().flat_map(move |x| {
                            [
                                alg.coords(&alg.mul_unchecked(x, p), d as u32),
                                alg.coords(&alg.mul_unchecked(p, x), d as u32),
                            ]
                        })
                    })
                    .collect();
                for v in products {
                    e.insert(v);
                }
            }
            out.rows[d] = e.rref();
        }
        out
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn max_degree(&self) -> u32 {
        self.ambient.len() as u32 - 1
    }

    pub fn ambient_dim(&self, d: u32) -> usize {
        self.ambient[d as usize]
    }

    pub fn dim(&self, d: u32) -> usize {
        self.rows[d as usize].len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn rows(&self, d: u32) -> &[SparseVec] {
        &self.rows[d as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn echelon(&self, d: u32) -> Echelon {
        Echelon::from_rows(self.ambient[d as usize], self.rows[d as usize].iter().cloned())
    }

    /// Basis elements of the degree-`d` component.
    pub fn elements(&self, alg: &GradedAlgebra, d: u32) -> Vec<AlgElement> {
        self.rows[d as usize]
            .iter()
            .map(|r| alg.from_coords(d, r))
            .collect()
    }

    /// Membership of every homogeneous component of `f` (degrees above the
    /// table's bound count as unknown and fail).
    pub fn contains(&self, alg: &GradedAlgebra, f: &AlgElement) -> bool {
        f.degrees().into_iter().all(|d| {
            d <= self.max_degree() && self.echelon(d).contains(&alg.coords(f, d))
        })
    }

    /// Degree-wise inclusion `self ⊆ other` up to the common bound.
    pub fn is_subset(&self, other: &GradedIdealTable) -> bool {
        let top = self.max_degree().min(other.max_degree());
        (0..=top).all(|d| {
            let e = other.echelon(d);
            self.rows(d).iter().all(|r| e.contains(r))
        })
    }

    /// Degrees `≤ min bound` where the two tables differ.
    pub fn differing_degrees(&self, other: &GradedIdealTable) -> Vec<u32> {
        let top = self.max_degree().min(other.max_degree());
        (0..=top).filter(|&d| self.rows(d) != other.rows(d)).collect()
    }

    pub fn same_subspaces(&self, other: &GradedIdealTable) -> bool {
        self.max_degree() == other.max_degree() && self.differing_degrees(other).is_empty()
    }

    /// Degree-wise sum.
    pub fn merge(&self, other: &GradedIdealTable) -> GradedIdealTable {
        let mut out = self.clone();
        for d in 0..self.ambient.len().min(other.ambient.len()) {
            let mut e = self.echelon(d as u32);
            for r in other.rows(d as u32) {
                e.insert(r.clone());
            }
            out.rows[d] = e.rref();
        }
        out
    }

    /// Degree-wise intersection.
    pub fn intersect(&self, other: &GradedIdealTable) -> GradedIdealTable {
        let top = self.ambient.len().min(other.ambient.len());
        let rows = (0..top)
            .map(|d| intersect(&self.rows[d], &other.rows[d], self.ambient[d]))
            .collect();
        GradedIdealTable {
            ambient: self.ambient[..top].to_vec(),
            rows,
            provenance: Provenance::Derived,
        }
    }

    /// Drop degrees above `d`.
    pub fn truncate(&self, d: u32) -> GradedIdealTable {
        let k = (d as usize + 1).min(self.ambient.len());
        GradedIdealTable {
            ambient: self.ambient[..k].to_vec(),
            rows: self.rows[..k].to_vec(),
            provenance: self.provenance,
        }
    }

    /// Minimal generators as a two-sided ideal: degree-`d` rows not already
    /// produced from lower degrees.
    pub fn minimal_generators(&self, alg: &GradedAlgebra) -> Vec<AlgElement> {
        let letters = alg.gens();
        let mut gens = Vec::new();
        for d in 0..self.ambient.len() {
            let mut e = Echelon::new(self.ambient[d]);
            if d > 0 {
                for p in self.elements(alg, d as u32 - 1) {
                    for x in &letters {
                        e.insert(alg.coords(&alg.mul_unchecked(x, &p), d as u32));
                        e.insert(alg.coords(&alg.mul_unchecked(&p, x), d as u32));
                    }
                }
            }
            for r in &self.rows[d] {
                if e.insert(r.clone()) {
                    gens.push(alg.from_coords(d as u32, r));
                }
            }
        }
        gens
    }

    /// Per degree, rendered basis polynomials.
    pub fn dump(&self, alg: &GradedAlgebra) -> Vec<Vec<String>> {
        (0..=self.max_degree())
            .map(|d| {
                self.elements(alg, d)
                    .iter()
                    .map(|e| alg.render(e))
                    .collect()
            })
            .collect()
    }

    /// `dim R_d − dim I_d` for each degree.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.ambient
            .iter()
            .zip(&self.rows)
            .map(|(n, r)| n - r.len())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_commutative;

    #[test]
    fn closure_of_a_variable() {
        let r = make_commutative(2, 5).unwrap();
        let t = GradedIdealTable::ideal_closure(&r, &[r.gen(0)], 5, Provenance::User);
        assert_eq!(t.dims(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(t.quotient_dims(), vec![1; 6]);
        let gens = t.minimal_generators(&r);
        assert_eq!(gens, vec![r.gen(0)]);
    }

    #[test]
    fn intersection_and_merge() {
        let r = make_commutative(2, 4).unwrap();
        let a = GradedIdealTable::ideal_closure(&r, &[r.gen(0)], 4, Provenance::User);
        let b = GradedIdealTable::ideal_closure(&r, &[r.gen(1)], 4, Provenance::User);
        let i = a.intersect(&b);
        assert_eq!(i.dims(), vec![0, 0, 1, 2, 3]);
        let m = a.merge(&b);
        assert_eq!(m.dims(), vec![0, 2, 3, 4, 5]);
        assert!(i.is_subset(&a) && a.is_subset(&m));
        let z = GradedIdealTable::zero(&r, 4, Provenance::User);
        assert!(a.intersect(&z).is_zero());
    }
}
