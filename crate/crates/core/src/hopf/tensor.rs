//! Tensor powers of the algebra: linear combinations of leg tuples
//! `w1 (x) ... (x) wr` with series coefficients. Legs multiply
//! componentwise with no braiding and no signs.

use std::collections::BTreeMap;

use crate::coeff::ZSeries;
use crate::liealg::BasisLabel;

use super::rewrite::{normal_form_terms, render_word, word_is_sorted, RewriteStrategy, Word};
use super::QuantumAlgebraData;

/// An element of the rank-`r` tensor power. Zero coefficients are never
/// stored; all legs refer to one generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    rank: usize,
    terms: BTreeMap<Vec<Word>, ZSeries>,
}

fn accumulate(map: &mut BTreeMap<Vec<Word>, ZSeries>, legs: Vec<Word>, coef: ZSeries) {
    if coef.is_zero() {
        return;
    }
    match map.get_mut(&legs) {
        Some(slot) => {
            *slot = slot.add(&coef);
            if slot.is_zero() {
                map.remove(&legs);
            }
        }
        None => {
            map.insert(legs, coef);
        }
    }
}

impl TensorElement {
    pub fn zero(rank: usize) -> Self {
        TensorElement { rank, terms: BTreeMap::new() }
    }

    /// The unit `1 (x) ... (x) 1`.
    pub fn unit(rank: usize, order: u32) -> Self {
        TensorElement::monomial(vec![Vec::new(); rank], ZSeries::one(order))
    }

    pub fn monomial(legs: Vec<Word>, coef: ZSeries) -> Self {
        let rank = legs.len();
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, legs, coef);
        TensorElement { rank, terms }
    }

    pub fn from_terms(rank: usize, iter: impl IntoIterator<Item = (Vec<Word>, ZSeries)>) -> Self {
        let mut terms = BTreeMap::new();
        for (legs, c) in iter {
            assert_eq!(legs.len(), rank, "tensor term leg count does not match rank");
            accumulate(&mut terms, legs, c);
        }
        TensorElement { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &ZSeries)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, legs: &[Word]) -> Option<&ZSeries> {
        self.terms.get(legs)
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        let mut terms = self.terms.clone();
        for (legs, c) in &other.terms {
            accumulate(&mut terms, legs.clone(), c.clone());
        }
        TensorElement { rank: self.rank, terms }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &ZSeries) -> TensorElement {
        TensorElement::from_terms(
            self.rank,
            self.terms.iter().map(|(l, c)| (l.clone(), c.mul(s))),
        )
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&ZSeries) -> ZSeries) -> TensorElement {
        TensorElement::from_terms(
            self.rank,
            self.terms.iter().map(|(l, c)| (l.clone(), f(c))),
        )
    }

    pub fn render(&self, labels: &[BasisLabel]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(legs, c)| {
                let body = legs
                    .iter()
                    .map(|w| render_word(w, labels))
                    .collect::<Vec<_>>()
                    .join("\u{2297}");
                format!("({})*{}", c, body)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Brings every leg of every term into PBW normal form and merges.
pub(crate) fn normalize_tensor_terms(
    q: &QuantumAlgebraData,
    rank: usize,
    raw: Vec<(Vec<Word>, ZSeries)>,
    strategy: RewriteStrategy,
) -> TensorElement {
    let mut out = BTreeMap::new();
    for (legs, coef) in raw {
        if coef.is_zero() {
            continue;
        }
        assert_eq!(legs.len(), rank, "tensor term leg count does not match rank");
        // Expand one leg at a time; sorted legs pass through unchanged.
        let mut partial: Vec<(Vec<Word>, ZSeries)> = vec![(Vec::with_capacity(rank), coef)];
        for leg in legs {
            if word_is_sorted(&leg) {
                for (built, _) in &mut partial {
                    built.push(leg.clone());
                }
                continue;
            }
            let order = partial[0].1.order();
            let nf = normal_form_terms(q, vec![(leg, ZSeries::one(order))], strategy);
            let mut next = Vec::with_capacity(partial.len() * nf.num_terms().max(1));
            for (built, c) in &partial {
                for (w, rc) in nf.terms() {
                    let product = c.mul(rc);
                    if product.is_zero() {
                        continue;
                    }
                    let mut extended = built.clone();
                    extended.push(w.clone());
                    next.push((extended, product));
                }
            }
            partial = next;
        }
        for (legs, c) in partial {
            accumulate(&mut out, legs, c);
        }
    }
    TensorElement { rank, terms: out }
}
