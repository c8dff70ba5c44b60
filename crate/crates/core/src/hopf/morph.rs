//! Structure transport: diagonal basis rescaling (with the matching
//! rescaling of the deformation parameter), index permutations of the
//! orthogonal generator labels, and dual-unit contraction of a complete
//! Hopf structure.

use std::collections::BTreeMap;

use crate::coeff::{
    DualSemantics, Evaluated, GaussianRational, JAssignment, JMonomial, SemanticsWarning,
    SingularityError, ZSeries,
};
use crate::liealg::BasisLabel;

use super::rewrite::{normal_form_terms, AlgebraElement, RewriteStrategy};
use super::tensor::{normalize_tensor_terms, TensorElement};
use super::{QuantumAlgebraData, Word};

/// Rescales the presentation along `X_old_g = m_g^{-1} X_new_g` together
/// with `z_old = z_multiplier * z_new`: each map value gains the multiplier
/// of its source generator, every word letter gains an inverse multiplier,
/// and z powers gain powers of the z multiplier. Multipliers must be
/// invertible Laurent monomials (nonzero coefficient).
pub fn transform_hopf(
    q: &QuantumAlgebraData,
    multipliers: &BTreeMap<BasisLabel, JMonomial>,
    z_multiplier: &JMonomial,
) -> QuantumAlgebraData {
    assert!(!z_multiplier.is_zero(), "z multiplier must be invertible");
    let per_gen: Vec<&JMonomial> = q
        .generators()
        .iter()
        .map(|l| {
            let m = multipliers.get(l).unwrap_or_else(|| {
                panic!("no multiplier provided for generator {l}")
            });
            assert!(!m.is_zero(), "multiplier for {l} must be invertible");
            m
        })
        .collect();

    let word_factor = |w: &Word| -> JMonomial {
        w.iter().fold(JMonomial::one(), |acc, &g| acc.mul(&per_gen[g].inverse()))
    };
    let rescale = |c: &ZSeries, outer: JMonomial| -> ZSeries {
        c.substitute_z_monomial(z_multiplier).mul_monomial(&outer)
    };

    let mut out = q.clone();
    out.relations.clear();
    for (hi, lo) in q.relation_keys() {
        let rel = q.relation(hi, lo).expect("key comes from the table");
        let outer = per_gen[hi].mul(per_gen[lo]);
        let rhs = AlgebraElement::from_terms(
            rel.terms().map(|(w, c)| (w.clone(), rescale(c, outer.mul(&word_factor(w))))),
        );
        out.set_relation(hi, lo, rhs);
    }
    for g in 0..q.dim() {
        let outer = per_gen[g];
        out.coproduct[g] = TensorElement::from_terms(
            2,
            q.coproduct_of(g).terms().map(|(legs, c)| {
                let factor = outer.mul(&word_factor(&legs[0])).mul(&word_factor(&legs[1]));
                (legs.clone(), rescale(c, factor))
            }),
        );
        out.counit[g] = rescale(q.counit_of(g), outer.clone());
        out.antipode[g] = AlgebraElement::from_terms(
            q.antipode_of(g)
                .terms()
                .map(|(w, c)| (w.clone(), rescale(c, outer.mul(&word_factor(w))))),
        );
    }
    out
}

/// Relabels the pair-indexed generators along a permutation of the
/// underlying point indices `0..=n`, normalizing `X_ba = -X_ab` and
/// re-sorting the generator list so it remains the PBW order.
///
/// Every generator label must be an index pair, and `sigma` must be a
/// permutation of `0..sigma.len()` covering all label indices.
pub fn permute_indices(q: &QuantumAlgebraData, sigma: &[u32]) -> QuantumAlgebraData {
    let mut seen = vec![false; sigma.len()];
    for &v in sigma {
        assert!((v as usize) < sigma.len() && !seen[v as usize], "sigma is not a permutation");
        seen[v as usize] = true;
    }
    // Map each old generator to its relabeled pair and orientation sign.
    let mut mapped: Vec<(BasisLabel, i64)> = Vec::with_capacity(q.dim());
    for l in q.generators() {
        let (mu, nu) = match l {
            BasisLabel::Pair(mu, nu) => (*mu, *nu),
            BasisLabel::Named(_) => panic!("permutation needs pair-indexed generators, got {l}"),
        };
        assert!((nu as usize) < sigma.len(), "sigma does not cover index {nu}");
        let (a, b) = (sigma[mu as usize], sigma[nu as usize]);
        if a < b {
            mapped.push((BasisLabel::pair(a, b), 1));
        } else {
            mapped.push((BasisLabel::pair(b, a), -1));
        }
    }
    let mut generators: Vec<BasisLabel> = mapped.iter().map(|(l, _)| l.clone()).collect();
    generators.sort();
    let position: Vec<usize> = mapped
        .iter()
        .map(|(l, _)| generators.binary_search(l).expect("relabeled generators are distinct"))
        .collect();
    let sign = |g: usize| GaussianRational::from_integer(mapped[g].1);

    let map_terms = |terms: Vec<(Word, ZSeries)>| -> Vec<(Word, ZSeries)> {
        terms
            .into_iter()
            .map(|(w, c)| {
                let total = w.iter().fold(GaussianRational::one(), |acc, &g| &acc * &sign(g));
                let nw: Word = w.iter().map(|&g| position[g]).collect();
                (nw, c.scale(&total))
            })
            .collect()
    };

    let mut out = QuantumAlgebraData::new(generators, q.order());
    out.z_dimension = q.z_dimension.clone();
    // First pass: install raw relation entries (words may be unsorted).
    let mut raw_relations: BTreeMap<(usize, usize), Vec<(Word, ZSeries)>> = BTreeMap::new();
    for (hi, lo) in q.relation_keys() {
        let rel = q.relation(hi, lo).expect("key comes from the table");
        let pair_sign = &sign(hi) * &sign(lo);
        let mut terms = map_terms(
            rel.terms().map(|(w, c)| (w.clone(), c.scale(&pair_sign))).collect(),
        );
        let (p, r) = (position[hi], position[lo]);
        let key = if p > r {
            (p, r)
        } else {
            for (_, c) in &mut terms {
                *c = c.neg();
            }
            (r, p)
        };
        raw_relations.insert(key, terms);
    }
    out.relations = raw_relations
        .iter()
        .map(|(&key, terms)| {
            (key, AlgebraElement::from_terms(terms.iter().cloned()))
        })
        .collect();
    // Second pass: normalize each entry against the completed table. For
    // single-generator-power data this is the identity.
    for (key, terms) in raw_relations {
        let nf = normal_form_terms(&out, terms, RewriteStrategy::default());
        if nf.is_zero() {
            out.relations.remove(&key);
        } else {
            out.relations.insert(key, nf);
        }
    }
    for g in 0..q.dim() {
        let s = sign(g);
        let raw: Vec<(Vec<Word>, ZSeries)> = q
            .coproduct_of(g)
            .terms()
            .map(|(legs, c)| {
                let mut total = s.clone();
                let new_legs: Vec<Word> = legs
                    .iter()
                    .map(|w| {
                        for &letter in w {
                            total = &total * &sign(letter);
                        }
                        w.iter().map(|&letter| position[letter]).collect()
                    })
                    .collect();
                (new_legs, c.scale(&total))
            })
            .collect();
        out.coproduct[position[g]] = normalize_tensor_terms(&out, 2, raw, RewriteStrategy::default());
        out.counit[position[g]] = q.counit_of(g).scale(&s);
        out.antipode[position[g]] = normal_form_terms(
            &out,
            map_terms(q.antipode_of(g).terms().map(|(w, c)| (w.clone(), c.scale(&s))).collect()),
            RewriteStrategy::default(),
        );
    }
    out
}

fn evaluate_series(
    s: &ZSeries,
    assignment: &JAssignment,
    mode: DualSemantics,
    location: &dyn Fn() -> String,
    warnings: &mut Vec<SemanticsWarning>,
) -> Result<ZSeries, SingularityError> {
    match s.evaluate(assignment, mode) {
        Ok(ev) => {
            warnings.extend(ev.warnings);
            Ok(ev.value)
        }
        Err(e) => {
            let inner = e.location.clone();
            Err(e.with_location(format!("{}, {}", location(), inner)))
        }
    }
}

/// Evaluates the contraction parameters in every coefficient of the
/// structure. Singular limits abort with the map and term that diverged;
/// strict-mode warnings are collected across all maps.
pub fn contract_hopf(
    q: &QuantumAlgebraData,
    assignment: &JAssignment,
    mode: DualSemantics,
) -> Result<Evaluated<QuantumAlgebraData>, SingularityError> {
    let mut warnings = Vec::new();
    let mut out = q.clone();
    out.relations.clear();
    for (hi, lo) in q.relation_keys() {
        let rel = q.relation(hi, lo).expect("key comes from the table");
        let mut terms = Vec::new();
        for (w, c) in rel.terms() {
            let loc = || format!("relation [{}, {}]", q.label(hi), q.label(lo));
            terms.push((w.clone(), evaluate_series(c, assignment, mode, &loc, &mut warnings)?));
        }
        out.set_relation(hi, lo, AlgebraElement::from_terms(terms));
    }
    for g in 0..q.dim() {
        let mut raw = Vec::new();
        for (legs, c) in q.coproduct_of(g).terms() {
            let loc = || format!("coproduct({})", q.label(g));
            raw.push((legs.clone(), evaluate_series(c, assignment, mode, &loc, &mut warnings)?));
        }
        out.coproduct[g] = TensorElement::from_terms(2, raw);
        let loc = || format!("counit({})", q.label(g));
        out.counit[g] = evaluate_series(q.counit_of(g), assignment, mode, &loc, &mut warnings)?;
        let mut terms = Vec::new();
        for (w, c) in q.antipode_of(g).terms() {
            let loc = || format!("antipode({})", q.label(g));
            terms.push((w.clone(), evaluate_series(c, assignment, mode, &loc, &mut warnings)?));
        }
        out.antipode[g] = AlgebraElement::from_terms(terms);
    }
    Ok(Evaluated { value: out, warnings })
}
