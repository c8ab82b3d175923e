//! Words and noncommutative polynomials in the free algebra 𝕜⟨x₁,…,x_g⟩.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Generator names and their (positive) degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl Alphabet {
    pub fn new(names: Vec<String>, degrees: Vec<u32>) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::BadInput("one degree per generator".into()));
        }
        if names.is_empty() || names.len() > u8::MAX as usize {
            return Err(Error::BadInput(format!(
                "alphabet size {} out of range",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::BadInput(format!("duplicate generator {n}")));
            }
        }
        if degrees.contains(&0) {
            return Err(Error::BadInput("generator degrees must be positive".into()));
        }
        Ok(Alphabet { names, degrees })
    }

    /// All generators in degree one.
    pub fn uniform<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let degrees = vec![1; names.len()];
        Alphabet::new(names, degrees)
    }

    /// `x, y, z` for up to three generators, `x1, …, xn` beyond.
    pub fn standard(n: usize) -> Result<Self> {
        if n <= 3 {
            Alphabet::uniform(["x", "y", "z"].into_iter().take(n))
        } else {
            Alphabet::uniform((1..=n).map(|i| format!("x{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.names[letter as usize]
    }

    pub fn degree(&self, letter: u8) -> u32 {
        self.degrees[letter as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(1)
    }

    pub fn index_of(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn word(&self, letters: &[u8]) -> Word {
        Word::new(letters, self)
    }

    pub fn gen(&self, letter: u8) -> FreePoly {
        FreePoly::monomial(self.word(&[letter]), Scalar::one())
    }
}

/// A monomial of the free algebra. The derived ordering is degree-lexicographic:
/// first by (weighted) degree, then left-lexicographic on generator indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    deg: u32,
    letters: SmallVec<[u8; 16]>,
}

impl Word {
    pub fn new(letters: &[u8], alphabet: &Alphabet) -> Word {
        let deg = letters.iter().map(|&l| alphabet.degree(l)).sum();
        Word {
            deg,
            letters: SmallVec::from_slice(letters),
        }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            deg: self.deg + other.deg,
            letters,
        }
    }

    /// Letters `range` as a word; degrees looked up in `alphabet`.
    pub fn slice(&self, range: std::ops::Range<usize>, alphabet: &Alphabet) -> Word {
        Word::new(&self.letters[range], alphabet)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(alphabet.name(l));
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters.as_slice())
    }
}

/// Total deglex comparison of two words.
pub fn word_cmp_deglex(u: &Word, v: &Word) -> std::cmp::Ordering {
    u.cmp(v)
}

/// A polynomial of the free algebra; terms are kept sorted by the monomial
/// order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, Scalar>,
}

impl FreePoly {
    pub fn zero() -> FreePoly {
        FreePoly::default()
    }

    pub fn one() -> FreePoly {
        FreePoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> FreePoly {
        FreePoly::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: Scalar) -> FreePoly {
        let mut p = FreePoly::zero();
        p.add_term(w, &c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> FreePoly {
        let mut p = FreePoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Largest degree of a term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.keys().map(Word::degree).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_component(&self, d: u32) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &FreePoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, x) in other.terms.iter() {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero();
        }
        FreePoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::one());
        r
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::from_int(-1));
        r
    }

    pub fn neg(&self) -> FreePoly {
        self.scale(&Scalar::from_int(-1))
    }

    /// Product in the free algebra (concatenation of words).
    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut r = FreePoly::zero();
        for (u, a) in self.terms.iter() {
            for (v, b) in other.terms.iter() {
                r.add_term(u.concat(v), &(a * b));
            }
        }
        r
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> FreePoly {
        match self.leading() {
            None => FreePoly::zero(),
            Some((_, c)) => {
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        Rendered(self, alphabet).to_string()
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Display adapter producing the canonical text form, e.g.
/// `-2*x*y + (z3)*y*x`.
pub struct Rendered<'a>(pub &'a FreePoly, pub &'a Alphabet);

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Rendered(p, alphabet) = self;
        if p.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in p.terms().enumerate() {
            let word = if w.is_empty() {
                None
            } else {
                Some(w.render(alphabet))
            };
            if c.is_rational() {
                let neg = c.is_negative_rational();
                let abs = if neg { -c } else { c.clone() };
                match (i, neg) {
                    (0, true) => write!(f, "-")?,
                    (0, false) => {}
                    (_, true) => write!(f, " - ")?,
                    (_, false) => write!(f, " + ")?,
                }
                match word {
                    Some(w) if abs.is_one() => write!(f, "{w}")?,
                    Some(w) => write!(f, "{abs}*{w}")?,
                    None => write!(f, "{abs}")?,
                }
            } else {
                if i > 0 {
                    write!(f, " + ")?;
                }
                match word {
                    Some(w) => write!(f, "({c})*{w}")?,
                    None => write!(f, "({c})")?,
                }
            }
        }
        Ok(())
    }
}
