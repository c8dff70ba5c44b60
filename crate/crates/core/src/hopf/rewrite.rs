//! Noncommutative words over the generator list and the rewriting engine
//! that brings them into PBW normal form (letters in non-decreasing
//! position order).
//!
//! A rewrite step at an inversion `X_hi X_lo` (hi > lo) replaces the word by
//! the swapped word plus the words of the stored commutator `[X_hi, X_lo]`
//! spliced in place. Termination: the swap lowers the inversion count; a
//! commutator word of length <= 1 shortens the word; longer commutator words
//! carry a coefficient of z-order >= 1 (a construction invariant), and the
//! truncation order bounds how often the z-order can rise.

use std::collections::BTreeMap;

use crate::coeff::ZSeries;
use crate::liealg::BasisLabel;

use super::QuantumAlgebraData;

/// A product of generators by position index; the empty word is the unit.
pub type Word = Vec<usize>;

pub(crate) fn word_is_sorted(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// Renders a word with exponent grouping, e.g. `X01*X02^2`; unit word -> `1`.
pub fn render_word(w: &[usize], labels: &[BasisLabel]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut run = 1;
        while i + run < w.len() && w[i + run] == w[i] {
            run += 1;
        }
        if run == 1 {
            parts.push(labels[w[i]].to_string());
        } else {
            parts.push(format!("{}^{}", labels[w[i]], run));
        }
        i += run;
    }
    parts.join("*")
}

/// Which inversion a rewrite step attacks first. Both strategies reach the
/// same normal form; exposing the choice makes that testable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RewriteStrategy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

fn find_inversion(w: &[usize], strategy: RewriteStrategy) -> Option<usize> {
    let positions = 0..w.len().saturating_sub(1);
    match strategy {
        RewriteStrategy::LeftmostFirst => positions.into_iter().find(|&i| w[i] > w[i + 1]),
        RewriteStrategy::RightmostFirst => {
            positions.into_iter().rev().find(|&i| w[i] > w[i + 1])
        }
    }
}

/// A linear combination of words with truncated-series coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, ZSeries>,
}

pub(crate) fn accumulate(map: &mut BTreeMap<Word, ZSeries>, word: Word, coef: ZSeries) {
    if coef.is_zero() {
        return;
    }
    match map.get_mut(&word) {
        Some(slot) => {
            *slot = slot.add(&coef);
            if slot.is_zero() {
                map.remove(&word);
            }
        }
        None => {
            map.insert(word, coef);
        }
    }
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn unit(order: u32) -> Self {
        AlgebraElement::monomial(Vec::new(), ZSeries::one(order))
    }

    pub fn generator(g: usize, order: u32) -> Self {
        AlgebraElement::monomial(vec![g], ZSeries::one(order))
    }

    pub fn monomial(word: Word, coef: ZSeries) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, word, coef);
        AlgebraElement { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Word, ZSeries)>) -> Self {
        let mut terms = BTreeMap::new();
        for (w, c) in iter {
            accumulate(&mut terms, w, c);
        }
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ZSeries)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[usize]) -> Option<&ZSeries> {
        self.terms.get(word)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        AlgebraElement { terms }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    /// Multiplies every coefficient by a scalar series (with truncation).
    pub fn scale(&self, s: &ZSeries) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c.mul(s))))
    }

    /// Applies `f` to every coefficient, dropping terms that map to zero.
    pub fn map_coefficients(&self, mut f: impl FnMut(&ZSeries) -> ZSeries) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// True when every stored word is PBW-ordered.
    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|w| word_is_sorted(w))
    }

    pub fn render(&self, labels: &[BasisLabel]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("({})*{}", c, render_word(w, labels)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The rewriting worklist. Each popped term is either PBW-ordered (and
/// accumulated into the result) or split at one inversion.
pub(crate) fn normal_form_terms(
    q: &QuantumAlgebraData,
    input: Vec<(Word, ZSeries)>,
    strategy: RewriteStrategy,
) -> AlgebraElement {
    let mut out: BTreeMap<Word, ZSeries> = BTreeMap::new();
    let mut stack = input;
    while let Some((word, coef)) = stack.pop() {
        if coef.is_zero() {
            continue;
        }
        match find_inversion(&word, strategy) {
            None => accumulate(&mut out, word, coef),
            Some(i) => {
                let (hi, lo) = (word[i], word[i + 1]);
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                if let Some(rel) = q.relation(hi, lo) {
                    for (rw, rc) in rel.terms() {
                        let mut w = Vec::with_capacity(word.len() - 2 + rw.len());
                        w.extend_from_slice(&word[..i]);
                        w.extend_from_slice(rw);
                        w.extend_from_slice(&word[i + 2..]);
                        let c = coef.mul(rc);
                        if !c.is_zero() {
                            stack.push((w, c));
                        }
                    }
                }
                stack.push((swapped, coef));
            }
        }
    }
    AlgebraElement { terms: out }
}
