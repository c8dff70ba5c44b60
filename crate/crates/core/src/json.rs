//! Stable JSON forms of the public structures. Rationals travel as
//! strings (`"3/4"`, `"-2"`), Gaussian rationals as `{"re", "im"}`
//! objects, exponent tables keyed by the variable index, and monomial
//! words as `[generator, exponent]` pairs. Readers return descriptive
//! errors instead of panicking on malformed input.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bialg::CocommutatorData;
use crate::catalog::AssignmentVerdict;
use crate::coeff::{GaussianRational, JExponents, JMonomial, JPolynomial, ZSeries};
use crate::hopf::{AlgebraElement, QuantumAlgebraData, TensorElement, Word};
use crate::liealg::{BasisLabel, GradingData, LieAlgebraData, LinearTerm};

fn is_zero_string(s: &str) -> bool {
    s == "0"
}

fn zero_string() -> String {
    "0".to_string()
}

fn rational_from_str(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaussianDto {
    pub re: String,
    #[serde(default = "zero_string", skip_serializing_if = "is_zero_string")]
    pub im: String,
}

pub fn gaussian_to_dto(c: &GaussianRational) -> GaussianDto {
    GaussianDto { re: c.re().to_string(), im: c.im().to_string() }
}

pub fn gaussian_from_dto(d: &GaussianDto) -> Result<GaussianRational, String> {
    Ok(GaussianRational::new(rational_from_str(&d.re)?, rational_from_str(&d.im)?))
}

/// One Laurent monomial in the contraction parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonomialDto {
    pub coef: GaussianDto,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub j: BTreeMap<u32, i64>,
}

pub fn polynomial_to_dto(p: &JPolynomial) -> Vec<MonomialDto> {
    p.terms()
        .map(|m| MonomialDto {
            coef: gaussian_to_dto(&m.coefficient),
            j: m.exponents.iter().collect(),
        })
        .collect()
}

pub fn polynomial_from_dto(d: &[MonomialDto]) -> Result<JPolynomial, String> {
    let mut terms = Vec::with_capacity(d.len());
    for m in d {
        let coef = gaussian_from_dto(&m.coef)?;
        let exps = JExponents::from_pairs(m.j.iter().map(|(&k, &e)| (k, e)));
        terms.push(JMonomial::new(coef, exps));
    }
    Ok(JPolynomial::from_terms(terms))
}

/// A series truncated at order `N`, with coefficients keyed by the power
/// of the deformation parameter.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeriesDto {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub z: BTreeMap<u32, Vec<MonomialDto>>,
}

pub fn series_to_dto(s: &ZSeries) -> SeriesDto {
    SeriesDto {
        n: s.order(),
        z: s.iter().map(|(k, p)| (k, polynomial_to_dto(p))).collect(),
    }
}

pub fn series_from_dto(d: &SeriesDto) -> Result<ZSeries, String> {
    let mut terms = Vec::new();
    for (&k, p) in &d.z {
        if k > d.n {
            return Err(format!("series coefficient at z^{k} exceeds the truncation order {}", d.n));
        }
        terms.push((k, polynomial_from_dto(p)?));
    }
    Ok(ZSeries::from_terms(d.n, terms))
}

fn parse_label(name: &str) -> Result<BasisLabel, String> {
    BasisLabel::parse(name.trim()).ok_or_else(|| format!("unparseable generator name {name:?}"))
}

fn parse_basis(names: &[String]) -> Result<Vec<BasisLabel>, String> {
    if names.is_empty() {
        return Err("the basis list is empty".to_string());
    }
    let labels: Vec<BasisLabel> = names
        .iter()
        .map(|n| parse_label(n))
        .collect::<Result<_, _>>()?;
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(format!("duplicate generator {l}"));
        }
    }
    Ok(labels)
}

fn label_index(labels: &[BasisLabel], name: &str) -> Result<usize, String> {
    let label = parse_label(name)?;
    labels
        .iter()
        .position(|l| *l == label)
        .ok_or_else(|| format!("unknown generator {name}"))
}

fn split_pair_key(key: &str) -> Result<(&str, &str), String> {
    key.split_once(',')
        .ok_or_else(|| format!("key {key:?} is not a comma-separated generator pair"))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketTermDto {
    pub basis: String,
    pub coef: SeriesDto,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LieAlgebraDto {
    pub basis: Vec<String>,
    pub order: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub brackets: BTreeMap<String, Vec<BracketTermDto>>,
}

pub fn lie_to_dto(alg: &LieAlgebraData) -> LieAlgebraDto {
    let brackets = alg
        .entries()
        .map(|((a, b), term)| {
            let key = format!("{},{}", alg.label(a), alg.label(b));
            let value = term
                .iter()
                .map(|(&k, s)| BracketTermDto {
                    basis: alg.label(k).to_string(),
                    coef: series_to_dto(s),
                })
                .collect();
            (key, value)
        })
        .collect();
    LieAlgebraDto {
        basis: alg.basis().iter().map(|l| l.to_string()).collect(),
        order: alg.order(),
        brackets,
    }
}

pub fn lie_from_dto(d: &LieAlgebraDto) -> Result<LieAlgebraData, String> {
    let labels = parse_basis(&d.basis)?;
    let mut alg = LieAlgebraData::new(labels.clone(), d.order);
    for (key, terms) in &d.brackets {
        let (a_name, b_name) = split_pair_key(key)?;
        let a = label_index(&labels, a_name)?;
        let b = label_index(&labels, b_name)?;
        if a >= b {
            return Err(format!("bracket key {key:?} must list the lower generator first"));
        }
        let mut value = LinearTerm::new();
        for t in terms {
            let idx = label_index(&labels, &t.basis)?;
            let s = series_from_dto(&t.coef)?;
            if s.order() != d.order {
                return Err(format!(
                    "coefficient in {key:?} has truncation order {}, the algebra declares {}",
                    s.order(),
                    d.order
                ));
            }
            value.insert(idx, s);
        }
        alg.set_bracket(a, b, value);
    }
    Ok(alg)
}

/// A grade is a tuple over the cyclic factors; rank-one gradings are
/// written as plain numbers.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradeDto {
    Scalar(u64),
    Vector(Vec<u64>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradingDto {
    pub group: Vec<u64>,
    pub grades: BTreeMap<String, GradeDto>,
}

pub fn grading_to_dto(g: &GradingData) -> GradingDto {
    let grades = g
        .grades
        .iter()
        .map(|(label, v)| {
            let grade = if g.group.len() == 1 {
                GradeDto::Scalar(v[0])
            } else {
                GradeDto::Vector(v.clone())
            };
            (label.to_string(), grade)
        })
        .collect();
    GradingDto { group: g.group.clone(), grades }
}

pub fn grading_from_dto(d: &GradingDto) -> Result<GradingData, String> {
    if d.group.is_empty() {
        return Err("the grading group has no cyclic factors".to_string());
    }
    let mut grades = BTreeMap::new();
    for (name, grade) in &d.grades {
        let label = parse_label(name)?;
        let v = match grade {
            GradeDto::Scalar(x) => {
                if d.group.len() != 1 {
                    return Err(format!(
                        "grade of {name} is a scalar but the group has {} factors",
                        d.group.len()
                    ));
                }
                vec![*x]
            }
            GradeDto::Vector(v) => v.clone(),
        };
        grades.insert(label, v);
    }
    Ok(GradingData { group: d.group.clone(), grades })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WedgeTermDto {
    pub wedge: [String; 2],
    pub coef: SeriesDto,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocommutatorDto {
    pub eta: BTreeMap<String, Vec<WedgeTermDto>>,
}

pub fn cocommutator_to_dto(eta: &CocommutatorData, labels: &[BasisLabel]) -> CocommutatorDto {
    let mut out = BTreeMap::new();
    for a in 0..eta.dim() {
        let row = eta.row(a);
        if row.is_empty() {
            continue;
        }
        let terms = row
            .iter()
            .map(|(&(b, c), s)| WedgeTermDto {
                wedge: [labels[b].to_string(), labels[c].to_string()],
                coef: series_to_dto(s),
            })
            .collect();
        out.insert(labels[a].to_string(), terms);
    }
    CocommutatorDto { eta: out }
}

pub fn cocommutator_from_dto(
    d: &CocommutatorDto,
    labels: &[BasisLabel],
) -> Result<CocommutatorData, String> {
    let mut eta = CocommutatorData::zero(labels.len());
    for (name, terms) in &d.eta {
        let a = label_index(labels, name)?;
        for t in terms {
            let b = label_index(labels, &t.wedge[0])?;
            let c = label_index(labels, &t.wedge[1])?;
            eta.add_wedge(a, b, c, series_from_dto(&t.coef)?);
        }
    }
    Ok(eta)
}

/// One monomial word as `[generator, exponent]` pairs in normal order.
pub type WordDto = Vec<(String, u32)>;

fn word_to_dto(w: &[usize], labels: &[BasisLabel]) -> WordDto {
    let mut out: WordDto = Vec::new();
    for &g in w {
        let name = labels[g].to_string();
        match out.last_mut() {
            Some((last, e)) if *last == name => *e += 1,
            _ => out.push((name, 1)),
        }
    }
    out
}

fn word_from_dto(pairs: &[(String, u32)], labels: &[BasisLabel]) -> Result<Word, String> {
    let mut w = Word::new();
    for (name, e) in pairs {
        let idx = label_index(labels, name)?;
        w.extend(std::iter::repeat(idx).take(*e as usize));
    }
    Ok(w)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementTermDto {
    pub word: WordDto,
    pub coef: SeriesDto,
}

pub type ElementDto = Vec<ElementTermDto>;

pub fn element_to_dto(e: &AlgebraElement, labels: &[BasisLabel]) -> ElementDto {
    e.terms()
        .map(|(w, c)| ElementTermDto { word: word_to_dto(w, labels), coef: series_to_dto(c) })
        .collect()
}

pub fn element_from_dto(d: &ElementDto, labels: &[BasisLabel]) -> Result<AlgebraElement, String> {
    let mut terms = Vec::with_capacity(d.len());
    for t in d {
        terms.push((word_from_dto(&t.word, labels)?, series_from_dto(&t.coef)?));
    }
    Ok(AlgebraElement::from_terms(terms))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorTermDto {
    pub legs: Vec<WordDto>,
    pub coef: SeriesDto,
}

pub type TensorDto = Vec<TensorTermDto>;

pub fn tensor_to_dto(t: &TensorElement, labels: &[BasisLabel]) -> TensorDto {
    t.terms()
        .map(|(legs, c)| TensorTermDto {
            legs: legs.iter().map(|w| word_to_dto(w, labels)).collect(),
            coef: series_to_dto(c),
        })
        .collect()
}

pub fn tensor_from_dto(
    d: &TensorDto,
    rank: usize,
    labels: &[BasisLabel],
) -> Result<TensorElement, String> {
    let mut terms = Vec::with_capacity(d.len());
    for t in d {
        if t.legs.len() != rank {
            return Err(format!("tensor term has {} legs, expected {rank}", t.legs.len()));
        }
        let legs: Vec<Word> = t
            .legs
            .iter()
            .map(|w| word_from_dto(w, labels))
            .collect::<Result<_, _>>()?;
        terms.push((legs, series_from_dto(&t.coef)?));
    }
    Ok(TensorElement::from_terms(rank, terms))
}

/// The serialized quantum algebra. Relations are keyed `"Xhi,Xlo"` with
/// the higher generator first (the stored orientation); coproduct, counit
/// and antipode are keyed by generator name and default to the
/// undeformed maps when omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuantumAlgebraDto {
    pub generators: Vec<String>,
    pub order: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_dimension: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub relations: BTreeMap<String, ElementDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coproduct: BTreeMap<String, TensorDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counit: BTreeMap<String, SeriesDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub antipode: BTreeMap<String, ElementDto>,
}

pub fn quantum_to_dto(q: &QuantumAlgebraData) -> QuantumAlgebraDto {
    let labels = q.generators();
    let relations = q
        .relation_keys()
        .map(|(hi, lo)| {
            let key = format!("{},{}", q.label(hi), q.label(lo));
            (key, element_to_dto(q.relation(hi, lo).expect("key from the table"), labels))
        })
        .collect();
    QuantumAlgebraDto {
        generators: labels.iter().map(|l| l.to_string()).collect(),
        order: q.order(),
        z_dimension: q.z_dimension().map(str::to_string),
        relations,
        coproduct: (0..q.dim())
            .map(|g| (q.label(g).to_string(), tensor_to_dto(q.coproduct_of(g), labels)))
            .collect(),
        counit: (0..q.dim())
            .map(|g| (q.label(g).to_string(), series_to_dto(q.counit_of(g))))
            .collect(),
        antipode: (0..q.dim())
            .map(|g| (q.label(g).to_string(), element_to_dto(q.antipode_of(g), labels)))
            .collect(),
    }
}

pub fn quantum_from_dto(d: &QuantumAlgebraDto) -> Result<QuantumAlgebraData, String> {
    let labels = parse_basis(&d.generators)?;
    let mut q = QuantumAlgebraData::new(labels.clone(), d.order);
    q.set_z_dimension(d.z_dimension.clone());
    for (key, rel) in &d.relations {
        let (hi_name, lo_name) = split_pair_key(key)?;
        let hi = label_index(&labels, hi_name)?;
        let lo = label_index(&labels, lo_name)?;
        if lo >= hi {
            return Err(format!("relation key {key:?} must list the higher generator first"));
        }
        let elem = element_from_dto(rel, &labels)?;
        if !elem.is_zero() {
            q.relations.insert((hi, lo), elem);
        }
    }
    for (name, t) in &d.coproduct {
        let g = label_index(&labels, name)?;
        q.coproduct[g] = tensor_from_dto(t, 2, &labels)?;
    }
    for (name, s) in &d.counit {
        let g = label_index(&labels, name)?;
        q.counit[g] = series_from_dto(s)?;
    }
    for (name, e) in &d.antipode {
        let g = label_index(&labels, name)?;
        q.antipode[g] = element_from_dto(e, &labels)?;
    }
    q.validate()?;
    Ok(q)
}

/// One enumeration verdict: the dual/unit assignment, whether the
/// contraction is allowed, and whether that was decided exactly or by
/// the configured model.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictDto {
    pub assignment: BTreeMap<String, String>,
    pub verdict: String,
    pub basis: String,
}

pub fn verdict_to_dto(v: &AssignmentVerdict) -> VerdictDto {
    let assignment = v
        .assignment
        .values()
        .iter()
        .enumerate()
        .map(|(i, value)| (format!("j{}", i + 1), value.name().to_string()))
        .collect();
    VerdictDto {
        assignment,
        verdict: v.verdict.name().to_string(),
        basis: v.basis.name().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_entry, catalog_names};
    use crate::coeff::{JAssignment, JValue};
    use crate::liealg::ck_orthogonal;

    #[test]
    fn gaussian_strings_round_trip_and_accept_integers() {
        let c = GaussianRational::ratio(3, 4).mul_i_power(1);
        let dto = gaussian_to_dto(&c);
        assert_eq!(gaussian_from_dto(&dto).unwrap(), c);
        let short: GaussianDto = serde_json::from_str(r#"{"re":"3"}"#).unwrap();
        assert_eq!(gaussian_from_dto(&short).unwrap(), GaussianRational::from_integer(3));
        let bad = GaussianDto { re: "x".into(), im: "0".into() };
        assert!(gaussian_from_dto(&bad).is_err());
    }

    #[test]
    fn series_round_trip_preserves_laurent_exponents() {
        let m = JMonomial::var(1).mul(&JMonomial::var(2).pow(-3));
        let s = ZSeries::term(6, 2, JPolynomial::from_monomial(m));
        let text = serde_json::to_string(&series_to_dto(&s)).unwrap();
        let back: SeriesDto = serde_json::from_str(&text).unwrap();
        assert_eq!(series_from_dto(&back).unwrap(), s);
    }

    #[test]
    fn series_rejects_powers_beyond_the_order() {
        let text = r#"{"N":2,"z":{"5":[{"coef":{"re":"1"}}]}}"#;
        let dto: SeriesDto = serde_json::from_str(text).unwrap();
        assert!(series_from_dto(&dto).unwrap_err().contains("truncation order"));
    }

    #[test]
    fn lie_algebra_round_trips() {
        let alg = ck_orthogonal(2, 4);
        let text = serde_json::to_string(&lie_to_dto(&alg)).unwrap();
        let back: LieAlgebraDto = serde_json::from_str(&text).unwrap();
        assert_eq!(lie_from_dto(&back).unwrap(), alg);
    }

    #[test]
    fn quantum_catalog_entries_round_trip() {
        for name in catalog_names() {
            let q = catalog_entry(&name, 3).unwrap();
            let text = serde_json::to_string(&quantum_to_dto(&q)).unwrap();
            let back: QuantumAlgebraDto = serde_json::from_str(&text).unwrap();
            assert_eq!(quantum_from_dto(&back).unwrap(), q, "{name}");
        }
    }

    #[test]
    fn quantum_reader_rejects_misordered_relation_keys() {
        let q = catalog_entry("galilei:X01", 3).unwrap();
        let mut dto = quantum_to_dto(&q);
        let rel = dto.relations.remove("X12,X01").unwrap();
        dto.relations.insert("X01,X12".to_string(), rel);
        let err = quantum_from_dto(&dto).unwrap_err();
        assert!(err.contains("higher generator first"), "{err}");
    }

    #[test]
    fn grading_rank_one_serializes_as_scalars() {
        let grading = GradingData {
            group: vec![2],
            grades: [
                (BasisLabel::pair(0, 1), vec![1]),
                (BasisLabel::pair(0, 2), vec![0]),
                (BasisLabel::pair(1, 2), vec![1]),
            ]
            .into_iter()
            .collect(),
        };
        let value = serde_json::to_value(grading_to_dto(&grading)).unwrap();
        assert_eq!(value["grades"]["X02"], serde_json::json!(0));
        let back: GradingDto = serde_json::from_value(value).unwrap();
        assert_eq!(grading_from_dto(&back).unwrap(), grading);
        let vector_form: GradingDto =
            serde_json::from_str(r#"{"group":[2,2],"grades":{"A":[1,0]}}"#).unwrap();
        assert_eq!(grading_from_dto(&vector_form).unwrap().grades.len(), 1);
    }

    #[test]
    fn cocommutator_round_trips_through_wedge_terms() {
        let labels =
            vec![BasisLabel::pair(0, 1), BasisLabel::pair(0, 2), BasisLabel::pair(1, 2)];
        let mut eta = CocommutatorData::zero(3);
        eta.add_wedge(0, 0, 1, ZSeries::one(4));
        eta.add_wedge(2, 2, 1, ZSeries::one(4));
        let text = serde_json::to_string(&cocommutator_to_dto(&eta, &labels)).unwrap();
        let back: CocommutatorDto = serde_json::from_str(&text).unwrap();
        assert_eq!(cocommutator_from_dto(&back, &labels).unwrap(), eta);
    }

    #[test]
    fn verdicts_serialize_with_named_parameters() {
        let v = AssignmentVerdict {
            assignment: JAssignment::new(vec![JValue::Unit, JValue::Dual]),
            verdict: crate::catalog::Verdict::Allowed,
            basis: crate::catalog::VerdictBasis::Exact,
        };
        let text = serde_json::to_string(&verdict_to_dto(&v)).unwrap();
        assert_eq!(
            text,
            r#"{"assignment":{"j1":"unit","j2":"dual"},"verdict":"allowed","basis":"exact"}"#
        );
    }
}
