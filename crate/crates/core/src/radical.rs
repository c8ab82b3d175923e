//! Pertinent pairs: verification, closure moves and the constructive
//! radical generators.

use rand::Rng;

use crate::action::{eigenspace, eigenvalue, FiniteGroup};
use crate::algebra::{AlgElement, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::kernel;
use crate::scalar::{Conductor, Scalar};
use crate::skew::oracle_radical;
use crate::table::{GradedIdealTable, Provenance};

/// Cap on the number of factors in subset-indexed constructions.
pub const MAX_SUBSET_FACTORS: usize = 12;

/// Two sequences with `Σ a_i (g·b_i) = 0` for every `g ≠ 1`.
///
/// Values of this type are only produced by [`verify_pertinent`] or by moves
/// that preserve the property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PertinentPair {
    left: Vec<AlgElement>,
    right: Vec<AlgElement>,
}

impl PertinentPair {
    pub fn left(&self) -> &[AlgElement] {
        &self.left
    }

    pub fn right(&self) -> &[AlgElement] {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    /// `Σ a_i b_i`.
    pub fn value(&self, alg: &GradedAlgebra) -> Result<AlgElement> {
        let mut acc = AlgElement::zero();
        for (a, b) in self.left.iter().zip(&self.right) {
            acc = acc.add(&alg.mul(a, b)?);
        }
        Ok(acc)
    }
}

/// `Σ a_i (g·b_i)` for group element `g`.
pub fn pairing(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    a: &[AlgElement],
    b: &[AlgElement],
    g: usize,
) -> Result<AlgElement> {
    let mut acc = AlgElement::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&alg.mul(x, &group.act(g, y))?);
    }
    Ok(acc)
}

/// First non-identity element with a nonzero pairing, and the residue.
pub fn find_violation(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    a: &[AlgElement],
    b: &[AlgElement],
) -> Result<Option<(usize, AlgElement)>> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::BadPair(format!(
            "sequences have lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    for g in 1..group.order() {
        let r = pairing(alg, group, a, b, g)?;
        if !r.is_zero() {
            return Ok(Some((g, r)));
        }
    }
    Ok(None)
}

pub fn verify_pertinent(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    a: Vec<AlgElement>,
    b: Vec<AlgElement>,
) -> Result<PertinentPair> {
    match find_violation(alg, group, &a, &b)? {
        None => Ok(PertinentPair { left: a, right: b }),
        Some((g, r)) => Err(Error::NotPertinent {
            element: g,
            residue: alg.render(&r),
        }),
    }
}

/// `(a ∨ a') ∼ (b ∨ b')`.
pub fn pair_concat(p: &PertinentPair, q: &PertinentPair) -> PertinentPair {
    let mut left = p.left.clone();
    left.extend(q.left.iter().cloned());
    let mut right = p.right.clone();
    right.extend(q.right.iter().cloned());
    PertinentPair { left, right }
}

/// `(h·a_i) ∼ (h·b_i)`.
pub fn pair_translate(group: &FiniteGroup, h: usize, p: &PertinentPair) -> PertinentPair {
    PertinentPair {
        left: p.left.iter().map(|x| group.act(h, x)).collect(),
        right: p.right.iter().map(|x| group.act(h, x)).collect(),
    }
}

/// `(a·a_i) ∼ (b_i·b)`.
pub fn pair_scale(
    alg: &GradedAlgebra,
    a: &AlgElement,
    b: &AlgElement,
    p: &PertinentPair,
) -> Result<PertinentPair> {
    Ok(PertinentPair {
        left: p.left.iter().map(|x| alg.mul(a, x)).collect::<Result<_>>()?,
        right: p.right.iter().map(|x| alg.mul(x, b)).collect::<Result<_>>()?,
    })
}

/// From `(a_i) ∼ (c_i b_i)` with invariant `c_i`, produce `(a_i c_i) ∼ (b_i)`.
pub fn pair_transfer(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    p: &PertinentPair,
    c: &[AlgElement],
    b: &[AlgElement],
) -> Result<PertinentPair> {
    if c.len() != p.len() || b.len() != p.len() {
        return Err(Error::BadPair("transfer lists must match the pair length".into()));
    }
    for (i, ci) in c.iter().enumerate() {
        if !group.is_invariant(ci) {
            return Err(Error::BadInput(format!(
                "transfer coefficient {} is not invariant",
                alg.render(ci)
            )));
        }
        if alg.mul(ci, &b[i])? != p.right[i] {
            return Err(Error::BadPair(format!(
                "right entry {i} is not {} times {}",
                alg.render(ci),
                alg.render(&b[i])
            )));
        }
    }
    Ok(PertinentPair {
        left: p
            .left
            .iter()
            .zip(c)
            .map(|(a, ci)| alg.mul(a, ci))
            .collect::<Result<_>>()?,
        right: b.to_vec(),
    })
}

/// Merge entries with equal right parts (summing the left parts), then
/// entries with equal left parts, and drop entries with a zero side.
pub fn pair_simplify(p: &PertinentPair) -> PertinentPair {
    let mut left: Vec<AlgElement> = Vec::new();
    let mut right: Vec<AlgElement> = Vec::new();
    for (a, b) in p.left.iter().zip(&p.right) {
        match right.iter().position(|x| x == b) {
            Some(i) => left[i] = left[i].add(a),
            None => {
                left.push(a.clone());
                right.push(b.clone());
            }
        }
    }
    let mut l2: Vec<AlgElement> = Vec::new();
    let mut r2: Vec<AlgElement> = Vec::new();
    for (a, b) in left.into_iter().zip(right) {
        match l2.iter().position(|x| *x == a) {
            Some(i) => r2[i] = r2[i].add(&b),
            None => {
                l2.push(a);
                r2.push(b);
            }
        }
    }
    let (mut left, mut right): (Vec<_>, Vec<_>) = l2
        .into_iter()
        .zip(r2)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .unzip();
    if left.is_empty() {
        left.push(AlgElement::zero());
        right.push(AlgElement::zero());
    }
    PertinentPair { left, right }
}

/// Eigenvector products: if `σ·a_i = ξ a_i` for a primitive `n`-th root `ξ`
/// with `n = a.len()`, the pair `((1, a_1, a_1a_2, …), (a_1⋯a_n, a_2⋯a_n, …, a_n))`.
pub fn gen_eigen_product(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    sigma: usize,
    a: &[AlgElement],
) -> Result<PertinentPair> {
    let n = a.len();
    if n == 0 {
        return Err(Error::BadInput("eigen product needs at least one element".into()));
    }
    let mut xi: Option<Scalar> = None;
    for x in a {
        let l = eigenvalue(group, sigma, x)
            .ok_or_else(|| Error::NotEigen(alg.render(x)))?;
        match &xi {
            None => xi = Some(l),
            Some(prev) if *prev == l => {}
            Some(_) => {
                return Err(Error::NotEigen(format!(
                    "{} has a different eigenvalue",
                    alg.render(x)
                )))
            }
        }
    }
    let xi = xi.unwrap();
    if xi.root_order(n as u32) != Some(n as u32) {
        return Err(Error::NotEigen(format!(
            "eigenvalue {xi} is not a primitive root of order {n}"
        )));
    }
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 0..n {
        left.push(alg.product(&a[..i])?);
        right.push(alg.product(&a[i..])?);
    }
    verify_pertinent(alg, group, left, right)
}

/// Subsets of `0..k`, by size and then lexicographically.
fn subsets(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..=k {
        let mut comb: Vec<usize> = (0..s).collect();
        loop {
            out.push(comb.clone());
            // next combination
            let mut i = s;
            while i > 0 && comb[i - 1] == k - s + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..s {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    out
}

fn check_central(alg: &GradedAlgebra, a: &[AlgElement]) -> Result<()> {
    for x in a {
        if !alg.is_central(x)? {
            return Err(Error::NotCentral(alg.render(x)));
        }
    }
    Ok(())
}

fn subset_cap(k: usize) -> Result<()> {
    if k > MAX_SUBSET_FACTORS {
        return Err(Error::BadInput(format!(
            "{k} factors exceed the subset cap of {MAX_SUBSET_FACTORS}"
        )));
    }
    Ok(())
}

/// Inclusion–exclusion pair for central `a_1, …, a_{n-1}` with `n = |G|`,
/// pairing `a_i` with the non-identity element `g_i` (group index `i`).
/// Its value is `Π (g_i(a_i) − a_i)`.
pub fn gen_translate_product(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    a: &[AlgElement],
) -> Result<PertinentPair> {
    let k = group.order() - 1;
    if a.len() != k {
        return Err(Error::BadInput(format!(
            "translate product needs {k} elements, got {}",
            a.len()
        )));
    }
    subset_cap(k)?;
    check_central(alg, a)?;
    let translated: Vec<AlgElement> = (0..k).map(|i| group.act(i + 1, &a[i])).collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for s in subsets(k) {
        let l: Vec<&AlgElement> = (0..k).filter(|i| !s.contains(i)).map(|i| &translated[i]).collect();
        let r: Vec<&AlgElement> = s.iter().map(|&i| &a[i]).collect();
        left.push(alg.product(l)?);
        let sign = if s.len() % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        right.push(alg.product(r)?.scale(&sign));
    }
    verify_pertinent(alg, group, left, right)
}

/// Ratio `q` with `a·b = q·(b·a)`, when it exists.
fn commutation_ratio(alg: &GradedAlgebra, a: &AlgElement, b: &AlgElement) -> Result<Option<Scalar>> {
    let ab = alg.mul(a, b)?;
    let ba = alg.mul(b, a)?;
    if ba.is_zero() {
        return Ok(ab.is_zero().then(Scalar::one));
    }
    let (w, c) = ba.poly().leading().unwrap();
    let q = &ab.poly().coeff(w) * &c.inv()?;
    Ok((ab == ba.scale(&q)).then_some(q))
}

/// q-weighted inclusion–exclusion pair for `a_1, …, a_{n-1}` that every
/// group element scales and that satisfy `a_i a_j = q_ij a_j a_i` (`i < j`).
/// When `q` is `None` the ratios are read off the elements.
pub fn gen_qcommuting_product(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    a: &[AlgElement],
    q: Option<&[Vec<Scalar>]>,
) -> Result<PertinentPair> {
    let k = group.order() - 1;
    if a.len() != k {
        return Err(Error::BadInput(format!(
            "q-commuting product needs {k} elements, got {}",
            a.len()
        )));
    }
    subset_cap(k)?;
    for x in a {
        for g in 1..group.order() {
            if eigenvalue(group, g, x).is_none() {
                return Err(Error::NotEigen(format!(
                    "group element {g} does not scale {}",
                    alg.render(x)
                )));
            }
        }
    }
    let mut qm = vec![vec![Scalar::one(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let ab = alg.mul(&a[i], &a[j])?;
            let ba = alg.mul(&a[j], &a[i])?;
            let qij = match q {
                Some(q) => q[i][j].clone(),
                None => commutation_ratio(alg, &a[i], &a[j])?.ok_or_else(|| {
                    Error::NotQCommuting(format!(
                        "{} and {}",
                        alg.render(&a[i]),
                        alg.render(&a[j])
                    ))
                })?,
            };
            if ab != ba.scale(&qij) {
                return Err(Error::NotQCommuting(format!(
                    "{} * {} is not ({qij}) times the reversed product",
                    alg.render(&a[i]),
                    alg.render(&a[j])
                )));
            }
            qm[i][j] = qij;
        }
    }
    let translated: Vec<AlgElement> = (0..k).map(|i| group.act(i + 1, &a[i])).collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for s in subsets(k) {
        let l: Vec<&AlgElement> = (0..k).filter(|i| !s.contains(i)).map(|i| &translated[i]).collect();
        let r: Vec<&AlgElement> = s.iter().map(|&i| &a[i]).collect();
        let mut coef = if s.len() % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        for &ik in &s {
            for j in ik + 1..k {
                if !s.contains(&j) {
                    coef = &coef * &qm[ik][j];
                }
            }
        }
        left.push(alg.product(l)?);
        right.push(alg.product(r)?.scale(&coef));
    }
    verify_pertinent(alg, group, left, right)
}

fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, even: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if cur.len() == n {
            out.push((cur.clone(), even));
            return;
        }
        // placing j flips parity once per larger unused index already skipped
        let mut skipped = 0;
        for j in 0..n {
            if used[j] {
                continue;
            }
            used[j] = true;
            cur.push(j);
            rec(cur, used, even ^ (skipped % 2 == 1), out);
            cur.pop();
            used[j] = false;
            skipped += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], true, &mut out);
    out
}

/// Leibniz expansion with entries multiplied in row order.
fn determinant(alg: &GradedAlgebra, m: &[Vec<AlgElement>]) -> Result<AlgElement> {
    let n = m.len();
    let mut acc = AlgElement::zero();
    for (perm, even) in permutations_with_sign(n) {
        let factors: Vec<&AlgElement> = (0..n).map(|i| &m[i][perm[i]]).collect();
        let t = alg.product(factors)?;
        acc = if even { acc.add(&t) } else { acc.sub(&t) };
    }
    Ok(acc)
}

/// `δ_G(a_1,…,a_n) = det[g_i(a_j)]` (row 0 is the identity) for central
/// `a_j`, together with the pair `((a_j), (A_j))` of first-row cofactors.
pub fn gen_determinant(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    a: &[AlgElement],
) -> Result<(AlgElement, PertinentPair)> {
    let n = group.order();
    if a.len() != n {
        return Err(Error::BadInput(format!(
            "determinant needs {n} elements, got {}",
            a.len()
        )));
    }
    check_central(alg, a)?;
    let m: Vec<Vec<AlgElement>> = (0..n)
        .map(|i| a.iter().map(|x| group.act(i, x)).collect())
        .collect();
    let det = determinant(alg, &m)?;
    let mut cof = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<AlgElement>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let d = if n == 1 { alg.one() } else { determinant(alg, &minor)? };
        cof.push(if j % 2 == 0 { d } else { d.neg() });
    }
    let pair = verify_pertinent(alg, group, a.to_vec(), cof)?;
    debug_assert_eq!(pair.value(alg)?, det);
    Ok((det, pair))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    EigenProduct,
    TranslateProduct,
    QcommutingProduct,
    Determinant,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::EigenProduct,
        Strategy::TranslateProduct,
        Strategy::QcommutingProduct,
        Strategy::Determinant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::EigenProduct => "eigen_product",
            Strategy::TranslateProduct => "translate_product",
            Strategy::QcommutingProduct => "qcommuting_product",
            Strategy::Determinant => "determinant",
        }
    }

    pub fn parse(s: &str) -> Option<Strategy> {
        Strategy::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct ConstructiveOptions {
    pub strategies: Vec<Strategy>,
    /// Field used to look for eigenvectors.
    pub conductor: Conductor,
    pub pairs: Vec<PertinentPair>,
    /// Cap on the input tuples tried per strategy.
    pub max_tuples: usize,
}

impl Default for ConstructiveOptions {
    fn default() -> Self {
        ConstructiveOptions {
            strategies: Strategy::ALL.to_vec(),
            conductor: Conductor::new(1).unwrap(),
            pairs: Vec::new(),
            max_tuples: 256,
        }
    }
}

/// A value produced by one of the constructions.
#[derive(Clone, Debug)]
pub struct ConstructiveValue {
    pub strategy: Option<Strategy>,
    pub value: AlgElement,
}

/// Tuples of length `k` over `0..m`: with repetition, or strictly
/// increasing when `increasing` is set. At most `cap` are returned.
fn tuples(m: usize, k: usize, increasing: bool, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, inc: bool, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if out.len() >= cap {
            return;
        }
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let start = if inc { cur.last().map_or(0, |&x| x + 1) } else { 0 };
        for i in start..m {
            cur.push(i);
            rec(m, k, inc, cap, cur, out);
            cur.pop();
        }
    }
    if m > 0 || k == 0 {
        rec(m, k, increasing, cap, &mut cur, &mut out);
    }
    out
}

/// Degree-one central elements, as a basis.
fn central_degree_one(alg: &GradedAlgebra) -> Vec<AlgElement> {
    if alg.max_degree() < 2 {
        return Vec::new();
    }
    let n = alg.dim(1);
    let gens = alg.gens();
    let dim2 = alg.dim(2);
    let columns: Vec<_> = (0..n)
        .map(|i| {
            let b = alg.basis_element(1, i);
            let mut col = Vec::new();
            for (j, x) in gens.iter().enumerate() {
                let c = alg.mul_unchecked(&b, x).sub(&alg.mul_unchecked(x, &b));
                col.extend(crate::linalg::sparse_shift(&alg.coords(&c, 2), j * dim2));
            }
            col
        })
        .collect();
    kernel(&columns, dim2 * gens.len())
        .iter()
        .map(|v| alg.from_coords(1, v))
        .collect()
}

/// Degree-one elements scaled by every group element.
fn joint_eigenvectors(alg: &GradedAlgebra, group: &FiniteGroup, conductor: Conductor) -> Vec<AlgElement> {
    let mut out: Vec<AlgElement> = alg
        .gens()
        .into_iter()
        .filter(|x| (1..group.order()).all(|g| eigenvalue(group, g, x).is_some()))
        .collect();
    if out.len() < alg.ngens() {
        // a cyclic group diagonalises over a large enough field
        if let Some(s) = (1..group.order()).find(|&s| group.is_cyclic_generated_by(s)) {
            let ev = eigenvectors(alg, group, s, conductor);
            if ev.len() == alg.dim(1) {
                out = ev.into_iter().map(|(_, v)| v).collect();
            }
        }
    }
    out
}

/// Degree-one eigenvectors of `sigma`, for eigenvalues in the field.
fn eigenvectors(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    sigma: usize,
    conductor: Conductor,
) -> Vec<(usize, AlgElement)> {
    let n = group.element_order(sigma) as u32;
    let Ok(zeta) = conductor.primitive_root(n) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut lambda = Scalar::one();
    for k in 0..n as usize {
        for v in eigenspace(alg, group, sigma, 1, &lambda) {
            out.push((k, v));
        }
        lambda = &lambda * &zeta;
    }
    out
}

/// Values of every selected construction on automatically chosen inputs,
/// plus the values of user pairs.
pub fn constructive_values(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
    opts: &ConstructiveOptions,
) -> Result<Vec<ConstructiveValue>> {
    let mut out = Vec::new();
    let mut push = |strategy: Option<Strategy>, v: Result<AlgElement>| -> Result<()> {
        match v {
            Ok(v) if v.is_zero() || v.degree() > max_degree => Ok(()),
            Ok(v) => {
                out.push(ConstructiveValue { strategy, value: v });
                Ok(())
            }
            Err(Error::TruncationExceeded { .. }) => Ok(()),
            Err(e) => Err(e),
        }
    };
    for p in &opts.pairs {
        push(None, p.value(alg))?;
    }
    let k = group.order();
    for &s in &opts.strategies {
        match s {
            Strategy::EigenProduct => {
                for sigma in (1..k).filter(|&s| group.is_cyclic_generated_by(s)) {
                    let ev = eigenvectors(alg, group, sigma, opts.conductor);
                    let n = group.element_order(sigma);
                    // eigenvalue ζ^j is primitive when gcd(j, n) = 1
                    for j in (1..n).filter(|&j| num_integer::gcd(j, n) == 1) {
                        let vs: Vec<&AlgElement> =
                            ev.iter().filter(|(e, _)| *e == j).map(|(_, v)| v).collect();
                        for t in tuples(vs.len(), n, false, opts.max_tuples) {
                            let a: Vec<AlgElement> = t.iter().map(|&i| vs[i].clone()).collect();
                            match gen_eigen_product(alg, group, sigma, &a) {
                                Ok(p) => push(Some(s), p.value(alg))?,
                                Err(Error::TruncationExceeded { .. }) => {}
                                Err(e) => return Err(e),
                            }
                        }
                    }
                }
            }
            Strategy::TranslateProduct | Strategy::Determinant => {
                let central = central_degree_one(alg);
                if s == Strategy::TranslateProduct {
                    for t in tuples(central.len(), k - 1, false, opts.max_tuples) {
                        let a: Vec<AlgElement> = t.iter().map(|&i| central[i].clone()).collect();
                        match gen_translate_product(alg, group, &a) {
                            Ok(p) => push(Some(s), p.value(alg))?,
                            Err(Error::TruncationExceeded { .. }) => {}
                            Err(e) => return Err(e),
                        }
                    }
                } else {
                    let mut pool = vec![alg.one()];
                    pool.extend(central.iter().cloned());
                    for t in tuples(pool.len(), k, true, opts.max_tuples) {
                        let a: Vec<AlgElement> = t.iter().map(|&i| pool[i].clone()).collect();
                        match gen_determinant(alg, group, &a) {
                            Ok((d, _)) => push(Some(s), Ok(d))?,
                            Err(Error::TruncationExceeded { .. }) => {}
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
            Strategy::QcommutingProduct => {
                let cand = joint_eigenvectors(alg, group, opts.conductor);
                for t in tuples(cand.len(), k - 1, false, opts.max_tuples) {
                    let a: Vec<AlgElement> = t.iter().map(|&i| cand[i].clone()).collect();
                    match gen_qcommuting_product(alg, group, &a, None) {
                        Ok(p) => push(Some(s), p.value(alg))?,
                        Err(Error::TruncationExceeded { .. }) | Err(Error::NotQCommuting(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Two-sided ideal generated by the constructive values and their
/// translates, degree by degree up to `max_degree`.
pub fn radical_constructive(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
    opts: &ConstructiveOptions,
) -> Result<GradedIdealTable> {
    let values = constructive_values(alg, group, max_degree, opts)?;
    let mut gens = Vec::new();
    for v in &values {
        for g in 0..group.order() {
            gens.push(group.act(g, &v.value));
        }
    }
    Ok(GradedIdealTable::ideal_closure(
        alg,
        &gens,
        max_degree,
        Provenance::Constructive,
    ))
}

/// Random nonzero combination of `basis` with coefficients in `-2..=2`.
fn random_combination<R: Rng>(rng: &mut R, basis: &[AlgElement]) -> Option<AlgElement> {
    if basis.is_empty() {
        return None;
    }
    for _ in 0..8 {
        let mut acc = AlgElement::zero();
        for b in basis {
            acc = acc.add(&b.scale(&Scalar::from_int(rng.gen_range(-2..=2))));
        }
        if !acc.is_zero() {
            return Some(acc);
        }
    }
    Some(basis[rng.gen_range(0..basis.len())].clone())
}

/// A pair from a randomly chosen applicable construction on random
/// inputs, followed by up to three random moves. `None` when nothing
/// applies or the degrees overflow the truncation.
pub fn random_pair<R: Rng>(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    conductor: Conductor,
    rng: &mut R,
) -> Result<Option<(Strategy, PertinentPair)>> {
    let k = group.order();
    let central = central_degree_one(alg);
    let mut eigen: Vec<(usize, Vec<AlgElement>)> = Vec::new();
    for sigma in (1..k).filter(|&s| group.is_cyclic_generated_by(s)) {
        let ev = eigenvectors(alg, group, sigma, conductor);
        let n = group.element_order(sigma);
        for j in (1..n).filter(|&j| num_integer::gcd(j, n) == 1) {
            let vs: Vec<AlgElement> = ev.iter().filter(|(e, _)| *e == j).map(|(_, v)| v.clone()).collect();
            if !vs.is_empty() {
                eigen.push((sigma, vs));
            }
        }
    }
    let joint = joint_eigenvectors(alg, group, conductor);
    let mut choices = Vec::new();
    if !eigen.is_empty() {
        choices.push(Strategy::EigenProduct);
    }
    if !central.is_empty() {
        choices.push(Strategy::TranslateProduct);
        choices.push(Strategy::Determinant);
    }
    if !joint.is_empty() {
        choices.push(Strategy::QcommutingProduct);
    }
    if choices.is_empty() {
        return Ok(None);
    }
    let s = choices[rng.gen_range(0..choices.len())];
    let built = match s {
        Strategy::EigenProduct => {
            let (sigma, vs) = &eigen[rng.gen_range(0..eigen.len())];
            let n = group.element_order(*sigma);
            let a: Vec<AlgElement> = (0..n).map(|_| random_combination(rng, vs).unwrap()).collect();
            gen_eigen_product(alg, group, *sigma, &a)
        }
        Strategy::TranslateProduct => {
            let a: Vec<AlgElement> = (1..k).map(|_| random_combination(rng, &central).unwrap()).collect();
            gen_translate_product(alg, group, &a)
        }
        Strategy::Determinant => {
            let mut a = vec![alg.one()];
            a.extend((1..k).map(|_| random_combination(rng, &central).unwrap()));
            gen_determinant(alg, group, &a).map(|(_, p)| p)
        }
        Strategy::QcommutingProduct => {
            let a: Vec<AlgElement> = (1..k).map(|_| joint[rng.gen_range(0..joint.len())].clone()).collect();
            gen_qcommuting_product(alg, group, &a, None)
        }
    };
    let mut pair = match built {
        Ok(p) => p,
        Err(Error::TruncationExceeded { .. }) | Err(Error::NotQCommuting(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let letters = alg.gens();
    for _ in 0..rng.gen_range(0..=3) {
        let next = match rng.gen_range(0..3) {
            0 => Ok(pair_translate(group, rng.gen_range(0..k), &pair)),
            1 => {
                let a = &letters[rng.gen_range(0..letters.len())];
                let b = &letters[rng.gen_range(0..letters.len())];
                pair_scale(alg, a, b, &pair)
            }
            _ => Ok(pair_concat(&pair, &pair_translate(group, rng.gen_range(0..k), &pair))),
        };
        match next {
            Ok(p) => pair = p,
            Err(Error::TruncationExceeded { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(Some((s, pair)))
}

/// Outcome of [`is_semisimple_upto`].
#[derive(Clone, Debug)]
pub struct SemisimpleReport {
    pub semisimple: bool,
    pub checked_upto: u32,
    /// A nonzero radical element of least degree.
    pub witness: Option<AlgElement>,
}

pub fn is_semisimple_upto(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    max_degree: u32,
) -> Result<SemisimpleReport> {
    let t = oracle_radical(alg, group, max_degree)?;
    let witness = (0..=max_degree)
        .find(|&d| t.dim(d) > 0)
        .map(|d| t.elements(alg, d).remove(0));
    Ok(SemisimpleReport {
        semisimple: witness.is_none(),
        checked_upto: max_degree,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{group_generate, LinearAuto};
    use crate::algebra::{make_commutative, make_quantum_affine};

    #[test]
    fn subset_order() {
        assert_eq!(
            subsets(2),
            vec![vec![], vec![0], vec![1], vec![0, 1]]
        );
        assert_eq!(subsets(4).len(), 16);
    }

    #[test]
    fn permutation_signs() {
        let p = permutations_with_sign(3);
        assert_eq!(p.len(), 6);
        let even = p.iter().filter(|(_, e)| *e).count();
        assert_eq!(even, 3);
        assert!(p.contains(&(vec![1, 0, 2], false)));
        assert!(p.contains(&(vec![1, 2, 0], true)));
    }

    #[test]
    fn plane_swap_pairs() {
        let r = make_commutative(2, 4).unwrap();
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        let (x, y) = (r.gen(0), r.gen(1));
        let p = verify_pertinent(&r, &g, vec![x.clone(), y.clone()], vec![x.clone(), y.neg()]).unwrap();
        assert_eq!(p.len(), 2);
        let bad = verify_pertinent(&r, &g, vec![x.clone()], vec![y.clone()]);
        assert!(matches!(bad, Err(Error::NotPertinent { element: 1, .. })));
        let t = gen_translate_product(&r, &g, &[x.clone()]).unwrap();
        assert_eq!(t.value(&r).unwrap(), y.sub(&x));
    }

    #[test]
    fn sign_action_determinant() {
        let r = make_commutative(2, 4).unwrap();
        let m1 = -Scalar::one();
        let g = group_generate(&r, &[LinearAuto::diagonal(vec![m1.clone(), m1])], 64).unwrap();
        let (x, y) = (r.gen(0), r.gen(1));
        let (d, _) = gen_determinant(&r, &g, &[x.clone(), y.clone()]).unwrap();
        assert!(d.is_zero());
        let (d, p) = gen_determinant(&r, &g, &[r.one(), x.clone()]).unwrap();
        assert_eq!(d, x.scale(&Scalar::from_int(-2)));
        assert_eq!(p.value(&r).unwrap(), d);
        let (d, _) = gen_determinant(&r, &g, &[x.clone(), x.clone()]).unwrap();
        assert!(d.is_zero());
        let t = gen_translate_product(&r, &g, &[x.clone()]).unwrap();
        assert_eq!(t.value(&r).unwrap(), x.scale(&Scalar::from_int(-2)));
    }

    #[test]
    fn simplify_moves() {
        let r = make_commutative(2, 4).unwrap();
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        let (x, y) = (r.gen(0), r.gen(1));
        let base = verify_pertinent(&r, &g, vec![x.clone(), y.clone()], vec![x.clone(), y.neg()])
            .unwrap();
        let p = pair_concat(&base, &base);
        let s = pair_simplify(&p);
        assert_eq!(s.len(), 2);
        assert_eq!(s.value(&r).unwrap(), p.value(&r).unwrap());
        let ones = vec![r.one(); p.len()];
        let same = pair_transfer(&r, &g, &p, &ones, p.right()).unwrap();
        assert_eq!(same, p);
    }

    #[test]
    fn skew_diagonal_qcommuting() {
        let m1 = -Scalar::one();
        let q: Vec<Vec<Scalar>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { Scalar::one() } else { m1.clone() }).collect())
            .collect();
        let r = make_quantum_affine(&q, 6).unwrap();
        let w = Scalar::root_of_unity(3, 1);
        let g = group_generate(
            &r,
            &[LinearAuto::diagonal(vec![Scalar::one(), w.clone(), &w * &w])],
            64,
        )
        .unwrap();
        let p = gen_qcommuting_product(&r, &g, &[r.gen(1), r.gen(2)], None).unwrap();
        let t = oracle_radical(&r, &g, 4).unwrap();
        assert!(t.contains(&r, &p.value(&r).unwrap()));
    }
}
