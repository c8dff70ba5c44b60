//! Hopf axiom verification up to the truncation order.
//!
//! Checked on every generator: coassociativity, the counit property, and
//! the antipode (convolution) axiom in two readings that are reported
//! separately: agreement of the two convolution sides, and each side equal
//! to `u(a) 1`. The structure maps are additionally checked to be
//! (anti-)homomorphic against the commutator table.

use crate::coeff::ZSeries;
use crate::liealg::{lin_add, LieAlgebraData};

use super::rewrite::AlgebraElement;
use super::tensor::TensorElement;
use super::{QuantumAlgebraData, Word};

/// One failed identity: where it failed and the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub location: String,
    pub residual: String,
}

/// Violations per axiom family; empty lists mean the family passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfAxiomReport {
    /// `(Delta (x) id) Delta = (id (x) Delta) Delta` per generator.
    pub coassociativity: Vec<AxiomViolation>,
    /// `(id (x) u) Delta = (u (x) id) Delta` per generator.
    pub counit_property: Vec<AxiomViolation>,
    /// The two convolution sides `m((id (x) gamma) Delta)` and
    /// `m((gamma (x) id) Delta)` agree.
    pub antipode_agreement: Vec<AxiomViolation>,
    /// Each convolution side equals `u(a) 1`.
    pub antipode_identity: Vec<AxiomViolation>,
    /// Delta and u are homomorphisms and gamma an anti-homomorphism on
    /// every stored commutator.
    pub homomorphism: Vec<AxiomViolation>,
}

impl HopfAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.sections().iter().all(|(_, v)| v.is_empty())
    }

    pub fn sections(&self) -> [(&'static str, &[AxiomViolation]); 5] {
        [
            ("coassociativity", &self.coassociativity),
            ("counit property", &self.counit_property),
            ("antipode agreement", &self.antipode_agreement),
            ("antipode identity", &self.antipode_identity),
            ("homomorphism", &self.homomorphism),
        ]
    }

    /// One line per section plus a final verdict line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (name, violations) in self.sections() {
            if violations.is_empty() {
                out.push_str(&format!("{name}: pass\n"));
            } else {
                out.push_str(&format!("{name}: FAIL\n"));
                for v in violations {
                    out.push_str(&format!("  {}: residual {}\n", v.location, v.residual));
                }
            }
        }
        out.push_str(if self.all_pass() { "all checks passed" } else { "verification failed" });
        out
    }
}

/// Applies the coproduct to one leg of a rank-2 tensor, yielding rank 3.
fn coproduct_on_leg(q: &QuantumAlgebraData, t: &TensorElement, leg: usize) -> TensorElement {
    let mut out = TensorElement::zero(3);
    for (legs, c) in t.terms() {
        let expanded = q.coproduct_of_word(&legs[leg]);
        for (inner, ci) in expanded.terms() {
            let new_legs: Vec<Word> = if leg == 0 {
                vec![inner[0].clone(), inner[1].clone(), legs[1].clone()]
            } else {
                vec![legs[0].clone(), inner[0].clone(), inner[1].clone()]
            };
            out = out.add(&TensorElement::monomial(new_legs, c.mul(ci)));
        }
    }
    out
}

/// Collapses one leg of a rank-2 tensor through the counit.
fn counit_on_leg(q: &QuantumAlgebraData, t: &TensorElement, leg: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (legs, c) in t.terms() {
        let scalar = q.counit_of_word(&legs[leg]);
        let kept = legs[1 - leg].clone();
        out = out.add(&AlgebraElement::monomial(kept, c.mul(&scalar)));
    }
    out
}

/// `m((id (x) gamma) Delta)` when `gamma_leg == 1`, else
/// `m((gamma (x) id) Delta)`.
fn convolution_side(q: &QuantumAlgebraData, t: &TensorElement, gamma_leg: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (legs, c) in t.terms() {
        let (plain, mapped) = (&legs[1 - gamma_leg], q.antipode_of_word(&legs[gamma_leg]));
        let product = if gamma_leg == 1 {
            q.multiply(&AlgebraElement::monomial(plain.clone(), c.clone()), &mapped)
        } else {
            q.multiply(&mapped.scale(c), &AlgebraElement::monomial(plain.clone(), ZSeries::one(q.order())))
        };
        out = out.add(&product);
    }
    out
}

pub fn check_hopf_axioms(q: &QuantumAlgebraData) -> HopfAxiomReport {
    let mut report = HopfAxiomReport::default();
    let labels = q.generators();
    for g in 0..q.dim() {
        let t = q.coproduct_of(g);

        let lhs = coproduct_on_leg(q, t, 0);
        let rhs = coproduct_on_leg(q, t, 1);
        let residual = lhs.sub(&rhs);
        if !residual.is_zero() {
            report.coassociativity.push(AxiomViolation {
                location: format!("coassociativity({})", labels[g]),
                residual: residual.render(labels),
            });
        }

        let left = counit_on_leg(q, t, 1);
        let right = counit_on_leg(q, t, 0);
        let residual = left.sub(&right);
        if !residual.is_zero() {
            report.counit_property.push(AxiomViolation {
                location: format!("counit({})", labels[g]),
                residual: residual.render(labels),
            });
        }

        let side_right = convolution_side(q, t, 1);
        let side_left = convolution_side(q, t, 0);
        let residual = side_right.sub(&side_left);
        if !residual.is_zero() {
            report.antipode_agreement.push(AxiomViolation {
                location: format!("antipode_agreement({})", labels[g]),
                residual: residual.render(labels),
            });
        }
        let expected = AlgebraElement::monomial(Vec::new(), q.counit_of(g).clone());
        for (side_name, side) in [("right", &side_right), ("left", &side_left)] {
            let residual = side.sub(&expected);
            if !residual.is_zero() {
                report.antipode_identity.push(AxiomViolation {
                    location: format!("antipode_identity({}, {side_name} side)", labels[g]),
                    residual: residual.render(labels),
                });
            }
        }
    }

    for (hi, lo) in q.relation_keys() {
        let rel = q.relation(hi, lo).expect("key comes from the table");
        let pair = format!("[{}, {}]", labels[hi], labels[lo]);

        let lhs = q.extend_coproduct(rel);
        let dhi = q.coproduct_of(hi);
        let dlo = q.coproduct_of(lo);
        let rhs = q.tensor_multiply(dhi, dlo).sub(&q.tensor_multiply(dlo, dhi));
        let residual = lhs.sub(&rhs);
        if !residual.is_zero() {
            report.homomorphism.push(AxiomViolation {
                location: format!("coproduct_hom({pair})"),
                residual: residual.render(labels),
            });
        }

        let residual = q.extend_counit(rel);
        if !residual.is_zero() {
            report.homomorphism.push(AxiomViolation {
                location: format!("counit_hom({pair})"),
                residual: residual.to_string(),
            });
        }

        let lhs = q.extend_antipode(rel);
        let ghi = q.antipode_of(hi);
        let glo = q.antipode_of(lo);
        let rhs = q.multiply(glo, ghi).sub(&q.multiply(ghi, glo));
        let residual = lhs.sub(&rhs);
        if !residual.is_zero() {
            report.homomorphism.push(AxiomViolation {
                location: format!("antipode_hom({pair})"),
                residual: residual.render(labels),
            });
        }
    }
    report
}

/// The squared antipode on each generator, with the involutivity verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeSquareReport {
    pub squares: Vec<AlgebraElement>,
    pub involutive: bool,
}

pub fn antipode_square_report(q: &QuantumAlgebraData) -> AntipodeSquareReport {
    let squares: Vec<AlgebraElement> =
        (0..q.dim()).map(|g| q.extend_antipode(q.antipode_of(g))).collect();
    let involutive = squares
        .iter()
        .enumerate()
        .all(|(g, e)| *e == AlgebraElement::generator(g, q.order()));
    AntipodeSquareReport { squares, involutive }
}

/// The z^0 part of the commutator table as a Lie algebra (coefficients at
/// truncation order 0). Errors when the z^0 part of some commutator is not
/// a linear combination of generators.
pub fn classical_limit(q: &QuantumAlgebraData) -> Result<LieAlgebraData, String> {
    let mut alg = LieAlgebraData::new(q.generators().to_vec(), 0);
    for (hi, lo) in q.relation_keys() {
        let rel = q.relation(hi, lo).expect("key comes from the table");
        let mut lin = crate::liealg::LinearTerm::new();
        for (w, c) in rel.terms() {
            let head = c.coefficient(0);
            if head.is_zero() {
                continue;
            }
            match w.len() {
                1 => lin_add(&mut lin, w[0], &ZSeries::constant(0, head).neg()),
                0 => {
                    return Err(format!(
                        "commutator [{}, {}] has a constant z^0 term",
                        q.label(hi),
                        q.label(lo)
                    ))
                }
                _ => {
                    return Err(format!(
                        "commutator [{}, {}] has a nonlinear z^0 term",
                        q.label(hi),
                        q.label(lo)
                    ))
                }
            }
        }
        // Stored as [X_hi, X_lo]; the Lie table wants [X_lo, X_hi].
        alg.set_bracket(lo, hi, lin);
    }
    Ok(alg)
}
