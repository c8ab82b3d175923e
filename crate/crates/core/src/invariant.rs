//! The invariant subalgebra `A = R^G`, cofinality of `𝔯` and `𝔞 = 𝔯 ∩ A`,
//! and normality tests.

use rayon::prelude::*;
use serde::Serialize;

use crate::action::FiniteGroup;
use crate::algebra::{AlgElement, GradedAlgebra};
use crate::error::Result;
use crate::linalg::{kernel, sparse_shift, Echelon, SparseVec};
use crate::scalar::Scalar;
use crate::skew::{intersect_with_invariants, oracle_radical};
use crate::table::{GradedIdealTable, Provenance};

#[derive(Clone, Debug)]
pub struct InvariantRing {
    /// `A_d` inside `R_d`, for `d ≤ D`.
    pub basis: GradedIdealTable,
    /// Minimal up to degree D.
    pub generators: Vec<AlgElement>,
}

/// Fixed space of `R_d`: the kernel of the stacked maps `g − id`.
pub fn fixed_space(alg: &GradedAlgebra, group: &FiniteGroup, d: u32) -> Vec<SparseVec> {
    let n = alg.dim(d);
    let k = group.order();
    let columns: Vec<SparseVec> = (0..n)
        .map(|i| {
            let b = alg.basis_element(d, i);
            let mut col = SparseVec::new();
            for g in 1..k {
                let diff = group.act(g, &b).sub(&b);
                col.extend(sparse_shift(&alg.coords(&diff, d), (g - 1) * n));
            }
            col
        })
        .collect();
    kernel(&columns, (k - 1) * n)
}

pub fn invariants_basis(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
) -> InvariantRing {
    let spans: Vec<Vec<SparseVec>> = (0..=max_degree)
        .into_par_iter()
        .map(|d| fixed_space(alg, group, d))
        .collect();
    let basis = GradedIdealTable::from_spans(alg, spans, Provenance::Derived);
    let mut generators: Vec<AlgElement> = Vec::new();
    for d in 1..=max_degree {
        let mut e = Echelon::new(alg.dim(d));
        for g in &generators {
            let gd = g.degree();
            for b in basis.elements(alg, d - gd) {
                e.insert(alg.coords(&alg.mul_unchecked(g, &b), d));
            }
        }
        for r in basis.rows(d) {
            if e.insert(r.clone()) {
                generators.push(alg.from_coords(d, r));
            }
        }
    }
    InvariantRing { basis, generators }
}

/// `(1/|G|) Σ_g trace(g | R_d)`.
pub fn molien_count(alg: &GradedAlgebra, group: &FiniteGroup, d: u32) -> Scalar {
    let mut t = Scalar::zero();
    for g in 0..group.order() {
        t += &group.trace(alg, g, d);
    }
    t.scale(&num_rational::BigRational::new(1.into(), (group.order() as i64).into()))
}

/// `(S·R)_d = Σ_i S_i · R_{d−i}` (or `R·S` when `left` is false).
pub fn one_sided_ideal(alg: &GradedAlgebra, s: &GradedIdealTable, right: bool) -> GradedIdealTable {
    let top = s.max_degree();
    let spans: Vec<Vec<SparseVec>> = (0..=top)
        .into_par_iter()
        .map(|d| {
            let mut e = Echelon::new(alg.dim(d));
            for i in 0..=d {
                let elems = s.elements(alg, i);
                if elems.is_empty() {
                    continue;
                }
                for j in 0..alg.dim(d - i) {
                    let b = alg.basis_element(d - i, j);
                    for a in &elems {
                        let p = if right {
                            alg.mul_unchecked(a, &b)
                        } else {
                            alg.mul_unchecked(&b, a)
                        };
                        e.insert(alg.coords(&p, d));
                    }
                }
            }
            e.rref()
        })
        .collect();
    GradedIdealTable::from_spans(alg, spans, Provenance::Derived)
}

/// `(S·T)_d = Σ_i S_i · T_{d−i}`.
pub fn product_span(alg: &GradedAlgebra, s: &GradedIdealTable, t: &GradedIdealTable) -> GradedIdealTable {
    let top = s.max_degree().min(t.max_degree());
    let spans: Vec<Vec<SparseVec>> = (0..=top)
        .into_par_iter()
        .map(|d| {
            let mut e = Echelon::new(alg.dim(d));
            for i in 0..=d {
                let left = s.elements(alg, i);
                if left.is_empty() {
                    continue;
                }
                let right = t.elements(alg, d - i);
                for a in &left {
                    for b in &right {
                        e.insert(alg.coords(&alg.mul_unchecked(a, b), d));
                    }
                }
            }
            e.rref()
        })
        .collect();
    GradedIdealTable::from_spans(alg, spans, Provenance::Derived)
}

/// `𝔯^n`, given `𝔯^{n−1}` and the minimal generators of `𝔯`: the right ideal
/// generated by `𝔯^{n−1}·g` over generators `g`.
fn next_power(
    alg: &GradedAlgebra,
    prev: &GradedIdealTable,
    gens: &[AlgElement],
) -> GradedIdealTable {
    let top = prev.max_degree();
    let letters = alg.gens();
    let mut spans: Vec<Vec<SparseVec>> = Vec::with_capacity(top as usize + 1);
    for d in 0..=top {
        let mut e = Echelon::new(alg.dim(d));
        for g in gens {
            let gd = g.degree();
            if gd > d {
                continue;
            }
            for u in prev.elements(alg, d - gd) {
                e.insert(alg.coords(&alg.mul_unchecked(&u, g), d));
            }
        }
        if d > 0 {
            for r in &spans[d as usize - 1] {
                let u = alg.from_coords(d - 1, r);
                for x in &letters {
                    e.insert(alg.coords(&alg.mul_unchecked(&u, x), d));
                }
            }
        }
        spans.push(e.rref());
    }
    GradedIdealTable::from_spans(alg, spans, Provenance::Derived)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "n")]
pub enum CofinalityEntry {
    Found(u32),
    NotFound,
    /// Every power tried is zero up to D, so containment says nothing.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CofinalityCertificate {
    pub a_r_eq_r_a: bool,
    pub table: Vec<(u32, CofinalityEntry)>,
    pub checked_upto: u32,
    pub n_cap: u32,
}

/// Tables computed on the way to a cofinality certificate.
#[derive(Clone, Debug)]
pub struct CofinalityData {
    pub radical: GradedIdealTable,
    pub invariants: InvariantRing,
    pub a: GradedIdealTable,
    pub certificate: CofinalityCertificate,
}

pub fn cofinality_check(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
    s_max: u32,
    n_cap: u32,
) -> Result<CofinalityData> {
    let radical = oracle_radical(alg, group, max_degree)?;
    let invariants = invariants_basis(alg, group, max_degree);
    let a = intersect_with_invariants(&radical, &invariants.basis);
    let ar = one_sided_ideal(alg, &a, true);
    let ra = one_sided_ideal(alg, &a, false);
    let a_r_eq_r_a = ar.same_subspaces(&ra);

    let mut table = Vec::new();
    if radical.is_zero() {
        for s in 1..=s_max {
            table.push((s, CofinalityEntry::Found(1)));
        }
    } else {
        let gens = radical.minimal_generators(alg);
        let mut powers = vec![radical.clone()];
        let mut a_s_r = ar.clone();
        let mut start = 1u32;
        for s in 1..=s_max {
            if s > 1 {
                a_s_r = product_span(alg, &a, &a_s_r);
            }
            let mut entry = CofinalityEntry::NotFound;
            let mut n = start;
            while n <= n_cap {
                while powers.len() < n as usize {
                    let p = next_power(alg, powers.last().unwrap(), &gens);
                    powers.push(p);
                }
                let p = &powers[n as usize - 1];
                if p.is_subset(&a_s_r) {
                    entry = if p.is_zero() {
                        CofinalityEntry::Inconclusive
                    } else {
                        CofinalityEntry::Found(n)
                    };
                    break;
                }
                n += 1;
            }
            if let CofinalityEntry::Found(n) = entry {
                start = n;
            }
            table.push((s, entry));
        }
    }
    Ok(CofinalityData {
        radical,
        invariants,
        a,
        certificate: CofinalityCertificate {
            a_r_eq_r_a,
            table,
            checked_upto: max_degree,
            n_cap,
        },
    })
}

/// `a·S_d = S_d·a` inside `R_{deg a + d}` for every `d` with
/// `deg a + d ≤ D`, where `S` is the given subspace table.
fn normal_in(alg: &GradedAlgebra, a: &AlgElement, s: &GradedIdealTable, max_degree: u32) -> bool {
    let k = a.degree();
    (0..=max_degree.saturating_sub(k)).all(|d| {
        let elems = s.elements(alg, d);
        let n = alg.dim(d + k);
        let left = Echelon::from_rows(n, elems.iter().map(|b| alg.coords(&alg.mul_unchecked(a, b), d + k)));
        let right = Echelon::from_rows(n, elems.iter().map(|b| alg.coords(&alg.mul_unchecked(b, a), d + k)));
        left.rref() == right.rref()
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityVerdict {
    pub poly: String,
    pub in_r: bool,
    /// `None` when the element is not invariant.
    pub in_a: Option<bool>,
}

pub fn normality_check(
    alg: &GradedAlgebra,
    group: Option<&FiniteGroup>,
    elements: &[AlgElement],
    max_degree: u32,
) -> Vec<NormalityVerdict> {
    let full = GradedIdealTable::full(alg, max_degree, Provenance::Derived);
    let inv = group.map(|g| invariants_basis(alg, g, max_degree));
    elements
        .iter()
        .map(|a| {
            let in_r = normal_in(alg, a, &full, max_degree);
            let in_a = match (group, &inv) {
                (Some(g), Some(inv)) if g.is_invariant(a) => {
                    Some(normal_in(alg, a, &inv.basis, max_degree))
                }
                _ => None,
            };
            NormalityVerdict {
                poly: alg.render(a),
                in_r,
                in_a,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{group_generate, LinearAuto};
    use crate::algebra::make_commutative;

    #[test]
    fn sign_action_invariants() {
        let r = make_commutative(2, 6).unwrap();
        let m1 = -Scalar::one();
        let g = group_generate(&r, &[LinearAuto::diagonal(vec![m1.clone(), m1])], 64).unwrap();
        let inv = invariants_basis(&r, &g, 6);
        assert_eq!(inv.basis.dims(), vec![1, 0, 3, 0, 5, 0, 7]);
        let degs: Vec<u32> = inv.generators.iter().map(|x| x.degree()).collect();
        assert_eq!(degs, vec![2, 2, 2]);
        for d in 0..=6 {
            assert_eq!(molien_count(&r, &g, d), Scalar::from_int(inv.basis.dim(d) as i64));
        }
    }

    #[test]
    fn sign_action_cofinality() {
        let r = make_commutative(2, 8).unwrap();
        let m1 = -Scalar::one();
        let g = group_generate(&r, &[LinearAuto::diagonal(vec![m1.clone(), m1])], 64).unwrap();
        let c = cofinality_check(&r, &g, 8, 2, 8).unwrap();
        assert!(c.certificate.a_r_eq_r_a);
        assert_eq!(c.certificate.table[0], (1, CofinalityEntry::Found(2)));
        assert_eq!(c.a.dim(2), 3);
    }

    #[test]
    fn central_is_normal() {
        let r = make_commutative(2, 4).unwrap();
        let v = normality_check(&r, None, &[r.gen(0)], 4);
        assert!(v[0].in_r);
        assert_eq!(v[0].in_a, None);
    }
}
