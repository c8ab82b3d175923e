//! Finite groups of linear automorphisms acting on a graded algebra.
//!
//! Row `i` of a matrix holds the image of generator `i`. With that
//! convention the composite `g∘h` (apply `h` first) has matrix `H·G`.

use std::collections::{HashMap, VecDeque};

use crate::algebra::{AlgElement, GradedAlgebra};
use crate::error::{Error, Result};
use crate::free::{FreePoly, Word};
use crate::linalg::{kernel, sparse_from_dense, Echelon, SparseVec};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearAuto {
    matrix: Vec<Vec<Scalar>>,
}

impl LinearAuto {
    pub fn new(matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::BadInput("automorphism matrix must be square".into()));
        }
        Ok(LinearAuto { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearAuto::diagonal((0..n).map(|_| Scalar::one()).collect())
    }

    pub fn diagonal(d: Vec<Scalar>) -> Self {
        let n = d.len();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, x) in d.into_iter().enumerate() {
            m[i][i] = x;
        }
        LinearAuto { matrix: m }
    }

    /// Permutation sending generator `i` to generator `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, &j) in perm.iter().enumerate() {
            m[i][j] = Scalar::one();
        }
        LinearAuto { matrix: m }
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearAuto::identity(self.size())
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &LinearAuto) -> LinearAuto {
        let n = self.size();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let h = &other.matrix[i][j];
                if h.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let g = &self.matrix[j][k];
                    if !g.is_zero() {
                        m[i][k] += &(h * g);
                    }
                }
            }
        }
        LinearAuto { matrix: m }
    }

    pub fn is_invertible(&self) -> bool {
        let rows = self.matrix.iter().map(|r| sparse_from_dense(r));
        Echelon::from_rows(self.size(), rows).rank() == self.size()
    }

    /// Image of a free-algebra polynomial under the substitution.
    fn substitute(&self, alg: &GradedAlgebra, f: &FreePoly) -> FreePoly {
        let images: Vec<FreePoly> = (0..self.size())
            .map(|i| {
                FreePoly::from_terms(self.matrix[i].iter().enumerate().filter_map(|(j, c)| {
                    (!c.is_zero()).then(|| (alg.alphabet().word(&[j as u8]), c.clone()))
                }))
            })
            .collect();
        let mut acc = FreePoly::zero();
        for (w, c) in f.terms() {
            let mut t = FreePoly::constant(c.clone());
            for &l in w.letters() {
                t = t.mul(&images[l as usize]);
            }
            acc.add_scaled(&t, &Scalar::one());
        }
        acc
    }

    /// Checks invertibility and that every defining relation within the
    /// truncation maps into the ideal.
    pub fn verify(&self, alg: &GradedAlgebra) -> Result<()> {
        if self.size() != alg.ngens() {
            return Err(Error::BadInput(format!(
                "matrix is {0}x{0} but the algebra has {1} generators",
                self.size(),
                alg.ngens()
            )));
        }
        if alg.alphabet().degrees().iter().any(|&d| d != 1) {
            return Err(Error::BadInput(
                "linear actions need all generators in degree one".into(),
            ));
        }
        if !self.is_invertible() {
            return Err(Error::NotAnAutomorphism("matrix is singular".into()));
        }
        for rel in alg.presentation() {
            if rel.degree() > alg.max_degree() {
                continue;
            }
            let img = alg.element(&self.substitute(alg, rel))?;
            if !img.is_zero() {
                return Err(Error::NotAnAutomorphism(format!(
                    "relation {} maps to {}",
                    rel.render(alg.alphabet()),
                    alg.render(&img)
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for LinearAuto {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// A finite group of automorphisms together with its action tables on the
/// normal words of an algebra, up to the algebra's truncation degree.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<LinearAuto>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    images: Vec<HashMap<Word, AlgElement>>,
}

/// Close `gens` under composition. Elements come out identity first, then
/// in breadth-first order from the generators.
pub fn group_generate(
    alg: &GradedAlgebra,
    gens: &[LinearAuto],
    max_order: usize,
) -> Result<FiniteGroup> {
    for g in gens {
        g.verify(alg)?;
    }
    let n = alg.ngens();
    let mut elements = vec![LinearAuto::identity(n)];
    let mut index: HashMap<LinearAuto, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for s in gens {
            let p = s.compose(&elements[e]);
            if index.contains_key(&p) {
                continue;
            }
            if elements.len() == max_order {
                return Err(Error::NotFiniteWithinBound(max_order));
            }
            index.insert(p.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(p);
        }
    }
    if elements.len() == 1 {
        return Err(Error::TrivialGroupRejected);
    }
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|g| elements.iter().map(|h| index[&g.compose(h)]).collect())
        .collect();
    let inverse = (0..elements.len())
        .map(|i| table[i].iter().position(|&k| k == 0).unwrap())
        .collect();
    let images = elements.iter().map(|g| action_images(alg, g)).collect();
    Ok(FiniteGroup {
        elements,
        table,
        inverse,
        images,
    })
}

/// Images of all normal words, built degree by degree: a normal word is a
/// normal prefix times its last letter.
fn action_images(alg: &GradedAlgebra, g: &LinearAuto) -> HashMap<Word, AlgElement> {
    let n = alg.ngens();
    let gens: Vec<AlgElement> = (0..n)
        .map(|i| {
            let f = FreePoly::from_terms(g.matrix[i].iter().enumerate().filter_map(|(j, c)| {
                (!c.is_zero()).then(|| (alg.alphabet().word(&[j as u8]), c.clone()))
            }));
            alg.element(&f).expect("degree one is within truncation")
        })
        .collect();
    let mut out: HashMap<Word, AlgElement> = HashMap::new();
    out.insert(Word::empty(), alg.one());
    for d in 1..=alg.max_degree() {
        for w in alg.basis().words(d) {
            let k = w.len();
            let prefix = w.slice(0..k - 1, alg.alphabet());
            let last = w.letters()[k - 1] as usize;
            let img = alg.mul_unchecked(&out[&prefix], &gens[last]);
            out.insert(w.clone(), img);
        }
    }
    out
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[LinearAuto] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &LinearAuto {
        &self.elements[i]
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.table[i][cur];
            k += 1;
        }
        k
    }

    pub fn index_of(&self, g: &LinearAuto) -> Option<usize> {
        self.elements.iter().position(|h| h == g)
    }

    pub fn is_cyclic_generated_by(&self, i: usize) -> bool {
        self.element_order(i) == self.order()
    }

    /// `g·f` for the element with index `g`.
    pub fn act(&self, g: usize, f: &AlgElement) -> AlgElement {
        let mut acc = FreePoly::zero();
        for (w, c) in f.poly().terms() {
            let img = self.images[g]
                .get(w)
                .expect("element is in normal form within truncation");
            acc.add_scaled(img.poly(), c);
        }
        acc_element(acc)
    }

    /// Average over the group.
    pub fn reynolds(&self, f: &AlgElement) -> AlgElement {
        let mut acc = AlgElement::zero();
        for g in 0..self.order() {
            acc = acc.add(&self.act(g, f));
        }
        acc.scale(&Scalar::from_ratio(1, self.order() as i64))
    }

    pub fn is_invariant(&self, f: &AlgElement) -> bool {
        (1..self.order()).all(|g| self.act(g, f) == *f)
    }

    /// Rows: images of the basis of `R_d` under `g`, in coordinates.
    pub fn action_matrix(&self, alg: &GradedAlgebra, g: usize, d: u32) -> Vec<SparseVec> {
        (0..alg.dim(d))
            .map(|i| alg.coords(&self.act(g, &alg.basis_element(d, i)), d))
            .collect()
    }

    pub fn trace(&self, alg: &GradedAlgebra, g: usize, d: u32) -> Scalar {
        let mut t = Scalar::zero();
        for w in alg.basis().words(d) {
            t += &self.images[g][w].poly().coeff(w);
        }
        t
    }
}

// images are already normal, so any sum of them is too
/// Basis of `{v ∈ R_d : g·v = λv}`.
pub fn eigenspace(
    alg: &GradedAlgebra,
    group: &FiniteGroup,
    g: usize,
    d: u32,
    lambda: &Scalar,
) -> Vec<AlgElement> {
    let n = alg.dim(d);
    let columns: Vec<SparseVec> = (0..n)
        .map(|i| {
            let b = alg.basis_element(d, i);
            let img = group.act(g, &b).sub(&b.scale(lambda));
            alg.coords(&img, d)
        })
        .collect();
    kernel(&columns, n)
        .iter()
        .map(|v| {
            let mut acc = AlgElement::zero();
            for (i, c) in v {
                acc = acc.add(&alg.basis_element(d, *i).scale(c));
            }
            acc
        })
        .collect()
}

/// If `g·a = λa`, returns `λ`.
pub fn eigenvalue(group: &FiniteGroup, g: usize, a: &AlgElement) -> Option<Scalar> {
    let (w, c) = a.poly().leading()?;
    let img = group.act(g, a);
    let lambda = &img.poly().coeff(w) * &c.inv().ok()?;
    (img == a.scale(&lambda)).then_some(lambda)
}

fn acc_element(p: FreePoly) -> AlgElement {
    AlgElement::from_normal(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_commutative, make_quantum_affine};

    fn skew(n: usize, d: u32) -> GradedAlgebra {
        let q: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Scalar::one() } else { -Scalar::one() })
                    .collect()
            })
            .collect();
        make_quantum_affine(&q, d).unwrap()
    }

    #[test]
    fn swap_on_plane() {
        let r = make_commutative(2, 4).unwrap();
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        assert_eq!(g.order(), 2);
        let (x, y) = (r.gen(0), r.gen(1));
        let xy = r.mul(&x, &y).unwrap();
        assert_eq!(g.act(1, &xy), xy);
        let avg = g.reynolds(&x);
        assert_eq!(avg, x.add(&y).scale(&Scalar::from_ratio(1, 2)));
    }

    #[test]
    fn diagonal_orders() {
        let r = skew(3, 4);
        let m1 = -Scalar::one();
        let g = LinearAuto::diagonal(vec![Scalar::one(), m1.clone(), m1]);
        assert_eq!(group_generate(&r, &[g], 64).unwrap().order(), 2);
        let w = Scalar::root_of_unity(3, 1);
        let g = LinearAuto::diagonal(vec![Scalar::one(), w.clone(), &w * &w]);
        let grp = group_generate(&r, &[g], 64).unwrap();
        assert_eq!(grp.order(), 3);
        assert_eq!(grp.element_order(1), 3);
    }

    #[test]
    fn swap_on_skew_plane() {
        let r = skew(2, 3);
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
        assert_eq!(g.act(1, &r.gen(0)), r.gen(1));
    }

    #[test]
    fn rejections() {
        let r = make_commutative(2, 3).unwrap();
        assert_eq!(
            group_generate(&r, &[LinearAuto::identity(2)], 64).unwrap_err(),
            Error::TrivialGroupRejected
        );
        let two = LinearAuto::diagonal(vec![Scalar::from_int(2), Scalar::one()]);
        assert_eq!(
            group_generate(&r, &[two], 64).unwrap_err(),
            Error::NotFiniteWithinBound(64)
        );
        // x ↦ x, y ↦ x+y does not preserve xy = -yx
        let s = skew(2, 3);
        let shear = LinearAuto::new(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::one(), Scalar::one()],
        ])
        .unwrap();
        assert!(matches!(
            group_generate(&s, &[shear], 64),
            Err(Error::NotAnAutomorphism(_))
        ));
    }

    #[test]
    fn composition_matches_table() {
        let r = skew(3, 3);
        let g = group_generate(&r, &[LinearAuto::permutation(&[1, 2, 0])], 64).unwrap();
        let f = r.mul(&r.gen(0), &r.gen(1)).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.act(a, &g.act(b, &f)), g.act(g.mul(a, b), &f));
            }
        }
    }
}
