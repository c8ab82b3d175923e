//! Degree-truncated two-sided Gröbner bases in the free algebra.
//!
//! Completion follows Buchberger–Mora: ambiguities (overlaps of leading
//! words) are resolved in increasing degree, with a deglex-then-FIFO queue
//! inside each degree. Presentations are homogeneous, so after processing
//! every ambiguity of degree at most `D` the basis is exact for all
//! components of degree at most `D`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::free::{Alphabet, FreePoly, Word};
use crate::scalar::Scalar;

/// A monic basis element together with its leading word.
#[derive(Clone, Debug)]
struct Rule {
    lead: Word,
    poly: FreePoly,
}

pub struct TruncatedGB {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    lead_index: HashMap<Box<[u8]>, usize>,
    max_lead_len: usize,
    truncation: u32,
    complete_upto: u32,
    cache: Mutex<HashMap<Word, Arc<FreePoly>>>,
}

impl Clone for TruncatedGB {
    fn clone(&self) -> Self {
        TruncatedGB {
            alphabet: self.alphabet.clone(),
            rules: self.rules.clone(),
            lead_index: self.lead_index.clone(),
            max_lead_len: self.max_lead_len,
            truncation: self.truncation,
            complete_upto: self.complete_upto,
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for TruncatedGB {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TruncatedGB")
            .field("relations", &self.dump())
            .field("complete_upto", &self.complete_upto)
            .finish()
    }
}

/// Complete `relations` up to degree `max_degree`.
///
/// Relations must be homogeneous of degree at least two.
pub fn gb_complete(
    alphabet: &Alphabet,
    relations: &[FreePoly],
    max_degree: u32,
) -> Result<TruncatedGB> {
    for r in relations {
        if r.is_zero() {
            continue;
        }
        if !r.is_homogeneous() {
            return Err(Error::NotGraded(r.render(alphabet)));
        }
        if r.degree() == 0 {
            return Err(Error::DegenerateQuotient);
        }
        if r.degree() == 1 {
            return Err(Error::RedundantGenerator(r.render(alphabet)));
        }
    }
    complete(alphabet, relations, max_degree)
}

/// Like [`gb_complete`] but accepting linear relations, as produced when
/// quotienting by an ideal that contains generators.
pub(crate) fn gb_complete_allowing_linear(
    alphabet: &Alphabet,
    relations: &[FreePoly],
    max_degree: u32,
) -> Result<TruncatedGB> {
    for r in relations {
        if r.is_zero() {
            continue;
        }
        if !r.is_homogeneous() {
            return Err(Error::NotGraded(r.render(alphabet)));
        }
        if r.degree() == 0 {
            return Err(Error::DegenerateQuotient);
        }
    }
    complete(alphabet, relations, max_degree)
}

struct Builder<'a> {
    alphabet: &'a Alphabet,
    rules: Vec<Rule>,
    lead_index: HashMap<Box<[u8]>, usize>,
    max_lead_len: usize,
}

impl<'a> Builder<'a> {
    /// Leftmost occurrence of a leading word inside `w`.
    fn find(&self, w: &Word) -> Option<(usize, usize)> {
        find_rule(&self.lead_index, self.max_lead_len, w)
    }

    /// Full reduction without memoisation; used while the rule set changes.
    fn reduce(&self, f: &FreePoly) -> FreePoly {
        let mut p = f.clone();
        let mut done = FreePoly::zero();
        while let Some((w, c)) = p.leading().map(|(w, c)| (w.clone(), c.clone())) {
            match self.find(&w) {
                None => {
                    done.add_term(w.clone(), &c);
                    p.add_term(w, &(-&c));
                }
                Some((pos, r)) => {
                    let rule = &self.rules[r];
                    let u = w.slice(0..pos, self.alphabet);
                    let v = w.slice(pos + rule.lead.len()..w.len(), self.alphabet);
                    for (t, tc) in rule.poly.terms() {
                        let word = u.concat(t).concat(&v);
                        p.add_term(word, &(-(&c * tc)));
                    }
                }
            }
        }
        done
    }

    fn insert(&mut self, poly: FreePoly) -> usize {
        let poly = poly.monic();
        let lead = poly.leading().unwrap().0.clone();
        let idx = self.rules.len();
        self.lead_index
            .insert(lead.letters().to_vec().into_boxed_slice(), idx);
        self.max_lead_len = self.max_lead_len.max(lead.len());
        self.rules.push(Rule { lead, poly });
        // Inter-reduce tails of rules of the same degree.
        let d = self.rules[idx].lead.degree();
        for j in 0..idx {
            if self.rules[j].lead.degree() != d {
                continue;
            }
            let p = self.rules[j].poly.clone();
            let lead_j = self.rules[j].lead.clone();
            let lc = p.coeff(&lead_j);
            let tail = p.sub(&FreePoly::monomial(lead_j.clone(), lc.clone()));
            let tail = self.reduce(&tail);
            let mut np = FreePoly::monomial(lead_j, lc);
            np.add_scaled(&tail, &Scalar::one());
            self.rules[j].poly = np;
        }
        idx
    }
}

fn find_rule(
    index: &HashMap<Box<[u8]>, usize>,
    max_len: usize,
    w: &Word,
) -> Option<(usize, usize)> {
    let letters = w.letters();
    for start in 0..letters.len() {
        let end_max = (start + max_len).min(letters.len());
        for end in start + 1..=end_max {
            if let Some(&r) = index.get(&letters[start..end]) {
                return Some((start, r));
            }
        }
    }
    None
}

/// Overlap ambiguities between the leading words `u` (of rule `i`) and `v`
/// (of rule `j`): a proper suffix of `u` equal to a proper prefix of `v`.
fn overlaps(u: &Word, v: &Word) -> Vec<usize> {
    let (a, b) = (u.letters(), v.letters());
    let max = a.len().min(b.len());
    (1..max)
        .filter(|&k| a[a.len() - k..] == b[..k])
        .collect()
}

fn complete(alphabet: &Alphabet, relations: &[FreePoly], max_degree: u32) -> Result<TruncatedGB> {
    let mut b = Builder {
        alphabet,
        rules: Vec::new(),
        lead_index: HashMap::new(),
        max_lead_len: 0,
    };
    // Queue keyed by (degree, ambiguity word, sequence number).
    let mut queue: BTreeMap<(u32, Word, usize), FreePoly> = BTreeMap::new();
    let mut seq = 0usize;
    for r in relations {
        if r.is_zero() || r.degree() > max_degree {
            continue;
        }
        let lead = r.leading().unwrap().0.clone();
        queue.insert((r.degree(), lead, seq), r.clone());
        seq += 1;
    }
    while let Some(((_, _, _), poly)) = queue.pop_first() {
        let red = b.reduce(&poly);
        if red.is_zero() {
            continue;
        }
        if red.degree() == 0 {
            return Err(Error::DegenerateQuotient);
        }
        let idx = b.insert(red);
        // New ambiguities with every rule, including itself.
        let new_lead = b.rules[idx].lead.clone();
        for j in 0..b.rules.len() {
            let other = b.rules[j].lead.clone();
            let mut pairs = vec![(&new_lead, &other, idx, j)];
            if j != idx {
                pairs.push((&other, &new_lead, j, idx));
            }
            for (first, second, fi, si) in pairs {
                for k in overlaps(first, second) {
                    let deg = first.degree() + second.degree()
                        - second.slice(0..k, alphabet).degree();
                    if deg > max_degree {
                        continue;
                    }
                    // w = first · s = p · second
                    let s = second.slice(k..second.len(), alphabet);
                    let p = first.slice(0..first.len() - k, alphabet);
                    let sp = b.rules[fi]
                        .poly
                        .mul(&FreePoly::monomial(s, Scalar::one()))
                        .sub(&FreePoly::monomial(p, Scalar::one()).mul(&b.rules[si].poly));
                    let w = first.concat(&second.slice(k..second.len(), alphabet));
                    queue.insert((deg, w, seq), sp);
                    seq += 1;
                }
            }
        }
    }
    let Builder {
        rules,
        lead_index,
        max_lead_len,
        ..
    } = b;
    Ok(TruncatedGB {
        alphabet: alphabet.clone(),
        rules,
        lead_index,
        max_lead_len,
        truncation: max_degree,
        complete_upto: max_degree,
        cache: Mutex::new(HashMap::new()),
    })
}

impl TruncatedGB {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn truncation_degree(&self) -> u32 {
        self.truncation
    }

    pub fn complete_upto(&self) -> u32 {
        self.complete_upto
    }

    /// The monic, inter-reduced basis elements in insertion order.
    pub fn relations(&self) -> impl Iterator<Item = &FreePoly> {
        self.rules.iter().map(|r| &r.poly)
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().map(|r| &r.lead)
    }

    /// One rendered relation per line.
    pub fn dump(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| r.poly.render(&self.alphabet))
            .collect()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        find_rule(&self.lead_index, self.max_lead_len, w).is_none()
    }

    /// Normal form of a single word; the word's degree must be within the
    /// completion bound.
    pub(crate) fn nf_word(&self, w: &Word) -> Arc<FreePoly> {
        if let Some(p) = self.cache.lock().unwrap().get(w) {
            return p.clone();
        }
        let res = match find_rule(&self.lead_index, self.max_lead_len, w) {
            None => FreePoly::monomial(w.clone(), Scalar::one()),
            Some((pos, r)) => {
                let rule = &self.rules[r];
                let u = w.slice(0..pos, &self.alphabet);
                let v = w.slice(pos + rule.lead.len()..w.len(), &self.alphabet);
                let mut acc = FreePoly::zero();
                for (t, c) in rule.poly.terms() {
                    if *t == rule.lead {
                        continue;
                    }
                    let word = u.concat(t).concat(&v);
                    acc.add_scaled(&self.nf_word(&word), &(-c));
                }
                acc
            }
        };
        let res = Arc::new(res);
        self.cache
            .lock()
            .unwrap()
            .insert(w.clone(), res.clone());
        res
    }

    pub fn normal_form(&self, f: &FreePoly) -> Result<FreePoly> {
        let d = f.degree();
        if d > self.complete_upto {
            return Err(Error::TruncationExceeded {
                degree: d,
                bound: self.complete_upto,
            });
        }
        Ok(self.nf_unchecked(f))
    }

    pub(crate) fn nf_unchecked(&self, f: &FreePoly) -> FreePoly {
        let mut acc = FreePoly::zero();
        for (w, c) in f.terms() {
            acc.add_scaled(&self.nf_word(w), c);
        }
        acc
    }

    /// Normal words of each degree `0..=D`, largest first.
    pub fn quotient_basis(&self) -> QuotientBasis {
        let d_max = self.truncation as usize;
        let mut words: Vec<Vec<Word>> = vec![Vec::new(); d_max + 1];
        words[0].push(Word::empty());
        for d in 1..=d_max {
            let mut cur = Vec::new();
            for l in 0..self.alphabet.len() as u8 {
                let ld = self.alphabet.degree(l) as usize;
                if ld > d {
                    continue;
                }
                for prefix in &words[d - ld] {
                    let w = prefix.concat(&self.alphabet.word(&[l]));
                    if self.suffix_normal(&w) {
                        cur.push(w);
                    }
                }
            }
            cur.sort_by(|a, b| b.cmp(a));
            words[d] = cur;
        }
        QuotientBasis::new(words)
    }

    /// Checks only subwords ending at the last letter; the prefix is known
    /// to be normal.
    fn suffix_normal(&self, w: &Word) -> bool {
        let letters = w.letters();
        let n = letters.len();
        let lo = n.saturating_sub(self.max_lead_len);
        (lo..n).all(|s| !self.lead_index.contains_key(&letters[s..n]))
    }
}

/// Normal words of each degree; column `i` of degree `d` is `words[d][i]`,
/// ordered from the largest word down so pivots sit on leading words.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    words: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
}

impl QuotientBasis {
    fn new(words: Vec<Vec<Word>>) -> Self {
        let index = words
            .iter()
            .map(|ws| ws.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect())
            .collect();
        QuotientBasis { words, index }
    }

    pub fn max_degree(&self) -> u32 {
        self.words.len() as u32 - 1
    }

    pub fn dim(&self, d: u32) -> usize {
        self.words.get(d as usize).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    pub fn words(&self, d: u32) -> &[Word] {
        &self.words[d as usize]
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index
            .get(w.degree() as usize)
            .and_then(|m| m.get(w).copied())
    }
}
