//! The skew group algebra `R*G`, its integral idempotent, and the
//! brute-force radical `R ∩ BeB`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::action::FiniteGroup;
use crate::algebra::{AlgElement, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{sparse_shift, sparse_window, Echelon, SparseVec};
use crate::scalar::Scalar;
use crate::table::{GradedIdealTable, Provenance};

/// `Σ r_g ⊗ g`, keyed by group-element index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkewElement {
    components: BTreeMap<usize, AlgElement>,
}

impl SkewElement {
    pub fn zero() -> Self {
        SkewElement::default()
    }

    /// `r ⊗ 1`.
    pub fn from_ring(r: AlgElement) -> Self {
        SkewElement::term(r, 0)
    }

    /// `r ⊗ g`.
    pub fn term(r: AlgElement, g: usize) -> Self {
        let mut s = SkewElement::zero();
        s.add_term(g, &r);
        s
    }

    /// The integral `e = (1/|G|) Σ_g 1 ⊗ g`.
    pub fn integral(alg: &GradedAlgebra, group: &FiniteGroup) -> Self {
        let c = Scalar::from_ratio(1, group.order() as i64);
        let mut s = SkewElement::zero();
        for g in 0..group.order() {
            s.add_term(g, &alg.constant(c.clone()));
        }
        s
    }

    pub fn components(&self) -> &BTreeMap<usize, AlgElement> {
        &self.components
    }

    pub fn component(&self, g: usize) -> AlgElement {
        self.components.get(&g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add_term(&mut self, g: usize, r: &AlgElement) {
        let cur = self.component(g).add(r);
        if cur.is_zero() {
            self.components.remove(&g);
        } else {
            self.components.insert(g, cur);
        }
    }

    pub fn add(&self, other: &SkewElement) -> SkewElement {
        let mut s = self.clone();
        for (g, r) in &other.components {
            s.add_term(*g, r);
        }
        s
    }
}

/// `(r⊗g)(s⊗h) = r·(g·s) ⊗ gh`, extended bilinearly.
pub fn skew_mul(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    u: &SkewElement,
    v: &SkewElement,
) -> Result<SkewElement> {
    let mut out = SkewElement::zero();
    for (&g, r) in &u.components {
        for (&h, s) in &v.components {
            let p = alg.mul(r, &group.act(g, s))?;
            out.add_term(group.mul(g, h), &p);
        }
    }
    Ok(out)
}

/// Degree-wise `𝔯(R,G) = R ∩ ReR`, for every degree up to `max_degree`.
///
/// For a pair of basis words `(a, b)` the row is the concatenation of
/// `a·(g·b)` over `g ≠ 1`, followed by `a·b`. Echelon rows with pivots in
/// the final block are exactly the combinations whose `g ≠ 1` parts vanish,
/// and their final blocks span `𝔯_d`.
pub fn oracle_radical(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
) -> Result<GradedIdealTable> {
    if max_degree > alg.max_degree() {
        return Err(Error::TruncationExceeded {
            degree: max_degree,
            bound: alg.max_degree(),
        });
    }
    // g·b for every basis word b, by degree
    let images: Vec<Vec<Vec<AlgElement>>> = (0..group.order())
        .map(|g| {
            (0..=max_degree)
                .map(|q| {
                    (0..alg.dim(q))
                        .map(|i| group.act(g, &alg.basis_element(q, i)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let spans: Vec<Vec<SparseVec>> = (0..=max_degree)
        .into_par_iter()
        .map(|d| oracle_degree(alg, group, &images, d))
        .collect();
    Ok(GradedIdealTable::from_spans(alg, spans, Provenance::Oracle))
}

fn oracle_degree(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    images: &[Vec<Vec<AlgElement>>],
    d: u32,
) -> Vec<SparseVec> {
    let n = alg.dim(d);
    if n == 0 {
        return Vec::new();
    }
    let k = group.order();
    let tail = (k - 1) * n;
    let mut e = Echelon::new(k * n);
    'outer: for p in 0..=d {
        let q = d - p;
        for ai in 0..alg.dim(p) {
            let a = alg.basis_element(p, ai);
            for bi in 0..alg.dim(q) {
                let mut row = SparseVec::new();
                for g in 1..k {
                    let v = alg.coords(&alg.mul_unchecked(&a, &images[g][q as usize][bi]), d);
                    row.extend(sparse_shift(&v, (g - 1) * n));
                }
                let v = alg.coords(&alg.mul_unchecked(&a, &images[0][q as usize][bi]), d);
                row.extend(sparse_shift(&v, tail));
                if e.insert(row) && e.count_pivots_from(tail) == n {
                    break 'outer;
                }
            }
        }
    }
    e.rows_with_pivot_from(tail)
        .iter()
        .map(|r| sparse_window(r, tail..tail + n))
        .collect()
}

/// `𝔞 = 𝔯 ∩ A`, degree by degree.
pub fn intersect_with_invariants(
    table: &GradedIdealTable,
    invariants: &GradedIdealTable,
) -> GradedIdealTable {
    table.intersect(invariants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{group_generate, LinearAuto};
    use crate::algebra::{make_commutative, make_quantum_affine};

    fn skew_plane(d: u32) -> GradedAlgebra {
        let m1 = -Scalar::one();
        make_quantum_affine(
            &[vec![Scalar::one(), m1.clone()], vec![m1, Scalar::one()]],
            d,
        )
        .unwrap()
    }

    #[test]
    fn integral_is_idempotent() {
        let r = make_commutative(2, 3).unwrap();
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        let e = SkewElement::integral(&r, &g);
        assert_eq!(skew_mul(&r, &g, &e, &e).unwrap(), e);
        let s = SkewElement::term(r.one(), 1);
        assert_eq!(skew_mul(&r, &g, &s, &e).unwrap(), e);
        let x = SkewElement::from_ring(r.gen(0));
        let y = SkewElement::from_ring(r.gen(1));
        assert_eq!(
            skew_mul(&r, &g, &x, &y).unwrap(),
            SkewElement::from_ring(r.mul(&r.gen(0), &r.gen(1)).unwrap())
        );
    }

    #[test]
    fn swap_on_plane() {
        let r = make_commutative(2, 6).unwrap();
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        let t = oracle_radical(&r, &g, 6).unwrap();
        assert_eq!(t.dims(), vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(t.contains(&r, &r.gen(0).sub(&r.gen(1))));
    }

    #[test]
    fn swap_on_skew_plane() {
        let r = skew_plane(5);
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        let t = oracle_radical(&r, &g, 5).unwrap();
        assert_eq!(t.quotient_dims(), vec![1, 1, 0, 0, 0, 0]);
        assert!(t.contains(&r, &r.gen(0).sub(&r.gen(1))));
    }
}
