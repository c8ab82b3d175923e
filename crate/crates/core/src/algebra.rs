//! Connected graded algebras given by a presentation, truncated at degree D.

use std::fmt;

use crate::error::{Error, Result};
use crate::free::{Alphabet, FreePoly, Word};
use crate::gb::{gb_complete, gb_complete_allowing_linear, QuotientBasis, TruncatedGB};
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

/// Default truncation degree.
pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// An element of a [`GradedAlgebra`], always stored in normal form.
///
/// Elements do not point back to their algebra; arithmetic goes through the
/// algebra (`alg.mul(&a, &b)`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgElement(FreePoly);

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement(FreePoly::zero())
    }

    pub(crate) fn from_normal(p: FreePoly) -> Self {
        AlgElement(p)
    }

    pub fn poly(&self) -> &FreePoly {
        &self.0
    }

    pub fn into_poly(self) -> FreePoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    pub fn component(&self, d: u32) -> AlgElement {
        AlgElement(self.0.homogeneous_component(d))
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.0.terms().map(|(w, _)| w.degree()).collect();
        ds.dedup();
        ds
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        AlgElement(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        AlgElement(self.0.sub(&other.0))
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement(self.0.neg())
    }

    pub fn scale(&self, c: &Scalar) -> AlgElement {
        AlgElement(self.0.scale(c))
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    alphabet: Alphabet,
    presentation: Vec<FreePoly>,
    gb: TruncatedGB,
    basis: QuotientBasis,
    known_gkdim: Option<u32>,
}

impl GradedAlgebra {
    /// Algebra from an arbitrary homogeneous presentation.
    pub fn from_presentation(
        alphabet: Alphabet,
        relations: Vec<FreePoly>,
        max_degree: u32,
    ) -> Result<Self> {
        let gb = gb_complete(&alphabet, &relations, max_degree)?;
        Ok(Self::assemble(alphabet, relations, gb, None))
    }

    fn assemble(
        alphabet: Alphabet,
        presentation: Vec<FreePoly>,
        gb: TruncatedGB,
        known_gkdim: Option<u32>,
    ) -> Self {
        let basis = gb.quotient_basis();
        GradedAlgebra {
            alphabet,
            presentation,
            gb,
            basis,
            known_gkdim,
        }
    }

    /// Record an exact GK-dimension supplied by the user.
    pub fn with_known_gkdim(mut self, k: u32) -> Self {
        self.known_gkdim = Some(k);
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn presentation(&self) -> &[FreePoly] {
        &self.presentation
    }

    pub fn gb(&self) -> &TruncatedGB {
        &self.gb
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn known_gkdim(&self) -> Option<u32> {
        self.known_gkdim
    }

    pub fn max_degree(&self) -> u32 {
        self.gb.complete_upto()
    }

    pub fn ngens(&self) -> usize {
        self.alphabet.len()
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis.dim(d)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.dims()
    }

    pub fn one(&self) -> AlgElement {
        AlgElement(FreePoly::one())
    }

    pub fn gen(&self, i: usize) -> AlgElement {
        self.word_element(&self.alphabet.word(&[i as u8]))
    }

    pub fn gens(&self) -> Vec<AlgElement> {
        (0..self.ngens()).map(|i| self.gen(i)).collect()
    }

    pub fn constant(&self, c: Scalar) -> AlgElement {
        AlgElement(FreePoly::constant(c))
    }

    /// Normal form of a free-algebra polynomial.
    pub fn element(&self, f: &FreePoly) -> Result<AlgElement> {
        Ok(AlgElement(self.gb.normal_form(f)?))
    }

    /// Image of a word of degree at most D.
    pub fn word_element(&self, w: &Word) -> AlgElement {
        AlgElement((*self.gb.nf_word(w)).clone())
    }

    /// The `i`-th basis word of degree `d` as an element.
    pub fn basis_element(&self, d: u32, i: usize) -> AlgElement {
        AlgElement(FreePoly::monomial(
            self.basis.words(d)[i].clone(),
            Scalar::one(),
        ))
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        if a.is_zero() || b.is_zero() {
            return Ok(AlgElement::zero());
        }
        let d = a.degree() + b.degree();
        if d > self.max_degree() {
            return Err(Error::TruncationExceeded {
                degree: d,
                bound: self.max_degree(),
            });
        }
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut acc = FreePoly::zero();
        for (u, c) in a.0.terms() {
            for (v, e) in b.0.terms() {
                acc.add_scaled(&self.gb.nf_word(&u.concat(v)), &(c * e));
            }
        }
        AlgElement(acc)
    }

    /// Product of a list, left to right; the empty product is 1.
    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a AlgElement>) -> Result<AlgElement> {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &AlgElement, k: u32) -> Result<AlgElement> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Coordinates of the degree-`d` component in the basis of `R_d`.
    pub fn coords(&self, a: &AlgElement, d: u32) -> SparseVec {
        let mut v: SparseVec = a
            .0
            .terms()
            .filter(|(w, _)| w.degree() == d)
            .map(|(w, c)| {
                let i = self
                    .basis
                    .position(w)
                    .expect("element is in normal form");
                (i, c.clone())
            })
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Homogeneous element of degree `d` with the given coordinates.
    pub fn from_coords(&self, d: u32, v: &SparseVec) -> AlgElement {
        let words = self.basis.words(d);
        AlgElement(FreePoly::from_terms(
            v.iter().map(|(i, c)| (words[*i].clone(), c.clone())),
        ))
    }

    pub fn render(&self, a: &AlgElement) -> String {
        a.0.render(&self.alphabet)
    }

    /// Whether `a` commutes with every generator, for all products within D.
    pub fn is_central(&self, a: &AlgElement) -> Result<bool> {
        for x in self.gens() {
            if !self.commutator(a, &x)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Polynomial ring on `n` degree-one generators.
pub fn make_commutative(n: usize, max_degree: u32) -> Result<GradedAlgebra> {
    let q = vec![vec![Scalar::one(); n]; n];
    let mut r = make_quantum_affine(&q, max_degree)?;
    r.known_gkdim = Some(n as u32);
    Ok(r)
}

/// Quantum affine space with relations `x_j x_i = q_ij x_i x_j` for `i < j`.
pub fn make_quantum_affine(q: &[Vec<Scalar>], max_degree: u32) -> Result<GradedAlgebra> {
    let n = q.len();
    if n == 0 {
        return Err(Error::BadInput("quantum affine space needs a generator".into()));
    }
    for (i, row) in q.iter().enumerate() {
        if row.len() != n {
            return Err(Error::BadQMatrix(format!("row {i} has length {}", row.len())));
        }
        if !row[i].is_one() {
            return Err(Error::BadQMatrix(format!("q[{i}][{i}] = {} is not 1", row[i])));
        }
        for j in i + 1..n {
            if row[j].is_zero() || !(&row[j] * &q[j][i]).is_one() {
                return Err(Error::BadQMatrix(format!(
                    "q[{i}][{j}] * q[{j}][{i}] = {} * {} is not 1",
                    row[j], q[j][i]
                )));
            }
        }
    }
    let alphabet = Alphabet::standard(n)?;
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (i8, j8) = (i as u8, j as u8);
            rels.push(FreePoly::from_terms([
                (alphabet.word(&[j8, i8]), Scalar::one()),
                (alphabet.word(&[i8, j8]), -&q[i][j]),
            ]));
        }
    }
    let gb = gb_complete(&alphabet, &rels, max_degree)?;
    Ok(GradedAlgebra::assemble(alphabet, rels, gb, Some(n as u32)))
}

/// Down-up algebra on `x, y` with parameters `alpha`, `beta`.
pub fn make_downup(alpha: &Scalar, beta: &Scalar, max_degree: u32) -> Result<GradedAlgebra> {
    let alphabet = Alphabet::uniform(["x", "y"])?;
    let w = |l: &[u8]| alphabet.word(l);
    let r1 = FreePoly::from_terms([
        (w(&[0, 0, 1]), Scalar::one()),
        (w(&[0, 1, 0]), -alpha),
        (w(&[1, 0, 0]), -beta),
    ]);
    let r2 = FreePoly::from_terms([
        (w(&[0, 1, 1]), Scalar::one()),
        (w(&[1, 0, 1]), -alpha),
        (w(&[1, 1, 0]), -beta),
    ]);
    let rels = vec![r1, r2];
    let gb = gb_complete(&alphabet, &rels, max_degree)?;
    Ok(GradedAlgebra::assemble(alphabet, rels, gb, Some(3)))
}

/// `R / (gens)`, truncated at `max_degree`.
pub fn quotient_by_ideal(
    r: &GradedAlgebra,
    gens: &[AlgElement],
    max_degree: u32,
) -> Result<GradedAlgebra> {
    let mut rels = r.presentation.clone();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        for d in g.degrees() {
            if d == 0 {
                return Err(Error::DegenerateQuotient);
            }
            rels.push(g.component(d).into_poly());
        }
    }
    let gb = gb_complete_allowing_linear(&r.alphabet, &rels, max_degree)?;
    Ok(GradedAlgebra::assemble(r.alphabet.clone(), rels, gb, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn commutative_dims() {
        assert_eq!(make_commutative(2, 8).unwrap().dims(), (1..=9).collect::<Vec<_>>());
        assert_eq!(make_commutative(1, 4).unwrap().dims(), vec![1; 5]);
        let r = make_commutative(3, 3).unwrap();
        assert_eq!(r.dim(3), 10);
        let r = make_commutative(4, 6).unwrap();
        for d in 0..=6 {
            assert_eq!(r.dim(d), binom(d as usize + 3, 3));
        }
    }

    #[test]
    fn skew_three_space() {
        let m1 = -Scalar::one();
        let q = vec![
            vec![Scalar::one(), m1.clone(), m1.clone()],
            vec![m1.clone(), Scalar::one(), m1.clone()],
            vec![m1.clone(), m1, Scalar::one()],
        ];
        let r = make_quantum_affine(&q, 5).unwrap();
        assert_eq!(r.dims(), vec![1, 3, 6, 10, 15, 21]);
        let (x, y) = (r.gen(0), r.gen(1));
        let yx = r.mul(&y, &x).unwrap();
        assert_eq!(yx, r.mul(&x, &y).unwrap().neg());
    }

    #[test]
    fn bad_q_matrix() {
        let q = vec![
            vec![Scalar::one(), Scalar::from_int(2)],
            vec![Scalar::from_int(2), Scalar::one()],
        ];
        assert!(matches!(make_quantum_affine(&q, 3), Err(Error::BadQMatrix(_))));
    }

    #[test]
    fn downup_relations_vanish() {
        let (a, b) = (Scalar::from_int(2), Scalar::from_int(-1));
        let r = make_downup(&a, &b, 6).unwrap();
        for rel in r.presentation() {
            assert!(r.element(rel).unwrap().is_zero());
        }
        assert_eq!(r.dims(), vec![1, 2, 4, 6, 9, 12, 16]);
    }

    #[test]
    fn quotient_examples() {
        let m1 = -Scalar::one();
        let q = vec![
            vec![Scalar::one(), m1.clone(), m1.clone()],
            vec![m1.clone(), Scalar::one(), m1.clone()],
            vec![m1.clone(), m1, Scalar::one()],
        ];
        let r = make_quantum_affine(&q, 6).unwrap();
        let (y, z) = (r.gen(1), r.gen(2));
        let k = quotient_by_ideal(&r, &[y.clone(), z.clone()], 6).unwrap();
        assert_eq!(k.dims(), vec![1; 7]);
        let gens = [
            r.mul(&y, &y).unwrap(),
            r.mul(&z, &z).unwrap(),
            r.mul(&y, &z).unwrap(),
        ];
        let k = quotient_by_ideal(&r, &gens, 6).unwrap();
        assert_eq!(k.dims(), vec![1, 3, 3, 3, 3, 3, 3]);
        let same = quotient_by_ideal(&r, &[], 6).unwrap();
        assert_eq!(same.dims(), r.dims());
        assert_eq!(
            quotient_by_ideal(&r, &[r.one()], 6).unwrap_err(),
            Error::DegenerateQuotient
        );
    }

    #[test]
    fn coords_round_trip() {
        let r = make_commutative(2, 4).unwrap();
        let (x, y) = (r.gen(0), r.gen(1));
        let f = r.mul(&x.add(&y), &x.sub(&y)).unwrap();
        let v = r.coords(&f, 2);
        assert_eq!(r.from_coords(2, &v), f);
    }
}
