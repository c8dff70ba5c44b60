//! Evaluation of contraction parameters and limit semantics for dual units.
//!
//! Each parameter `jk` is independently assigned one of: the unit `1`, a
//! dual (Study) unit, the imaginary unit, or left symbolic. A dual unit is
//! evaluated as a limit: after symbolic cancellation, a term carrying a
//! positive power of a dual parameter vanishes and a term carrying a
//! negative power is singular. The strict semantics additionally flags
//! surviving odd positive dual powers, where the limit reading (the term
//! vanishes) and the order-2 nilpotent reading (a degree-one dual factor
//! survives) disagree; the returned value is the limit in both modes.

use std::fmt;

use super::{JPolynomial, ZSeries};

/// Value assigned to a single contraction parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JValue {
    Unit,
    Dual,
    Imaginary,
    Symbolic,
}

impl JValue {
    pub fn parse(s: &str) -> Option<JValue> {
        match s.trim() {
            "unit" | "1" => Some(JValue::Unit),
            "dual" | "iota" => Some(JValue::Dual),
            "imaginary" | "i" => Some(JValue::Imaginary),
            "symbolic" | "j" => Some(JValue::Symbolic),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            JValue::Unit => "unit",
            JValue::Dual => "dual",
            JValue::Imaginary => "imaginary",
            JValue::Symbolic => "symbolic",
        }
    }
}

/// Assignment of values to `j1..jn`, indexed from 1. Parameters beyond the
/// assignment's length stay symbolic, so a shorter assignment is a partial
/// evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JAssignment(Vec<JValue>);

impl JAssignment {
    pub fn new(values: Vec<JValue>) -> Self {
        JAssignment(values)
    }

    /// All of `j1..jn` set to the same value.
    pub fn uniform(n: u32, v: JValue) -> Self {
        JAssignment(vec![v; n as usize])
    }

    /// Parses a comma-separated list such as `dual,unit,imaginary`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let mut values = Vec::new();
        for part in s.split(',') {
            match JValue::parse(part) {
                Some(v) => values.push(v),
                None => {
                    return Err(format!(
                        "unknown parameter value '{}' (expected unit, dual, imaginary, or symbolic)",
                        part.trim()
                    ))
                }
            }
        }
        Ok(JAssignment(values))
    }

    pub fn len(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: u32) -> JValue {
        if k == 0 {
            return JValue::Symbolic;
        }
        self.0
            .get((k - 1) as usize)
            .copied()
            .unwrap_or(JValue::Symbolic)
    }

    pub fn values(&self) -> &[JValue] {
        &self.0
    }
}

impl fmt::Display for JAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|v| v.name()).collect();
        write!(f, "{}", names.join(","))
    }
}

/// How surviving odd positive dual powers are treated during evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DualSemantics {
    /// Pure limit semantics: positive dual powers vanish silently.
    #[default]
    Limit,
    /// Limit value, but flag odd positive dual powers whose vanishing
    /// depends on the limit reading rather than on nilpotency of order 2.
    Strict,
}

/// A term whose vanishing depended on the limit reading of a dual unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemanticsWarning {
    pub monomial: String,
    pub index: u32,
}

impl fmt::Display for SemanticsWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term {} carries an odd positive power of dual j{}; dropped under limit semantics",
            self.monomial, self.index
        )
    }
}

/// A contraction limit that diverges: a negative power of a vanishing
/// parameter survives all symbolic cancellation.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("singular limit in {location}: term {monomial} has a negative power of {parameter}")]
pub struct SingularityError {
    /// The parameter whose limit diverges, e.g. `j1` or `eps`.
    pub parameter: String,
    /// Canonical rendering of the offending term.
    pub monomial: String,
    /// Where the term was encountered, for reports spanning whole maps.
    pub location: String,
}

impl SingularityError {
    pub fn new(parameter: impl Into<String>, monomial: impl Into<String>) -> Self {
        SingularityError {
            parameter: parameter.into(),
            monomial: monomial.into(),
            location: "coefficient".to_string(),
        }
    }

    pub fn with_location(mut self, location: impl Into<String>) -> Self {
        self.location = location.into();
        self
    }
}

/// An evaluation result together with any strict-mode warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluated<T> {
    pub value: T,
    pub warnings: Vec<SemanticsWarning>,
}

impl<T> Evaluated<T> {
    pub fn clean(value: T) -> Self {
        Evaluated { value, warnings: Vec::new() }
    }
}

impl JPolynomial {
    /// Substitutes assigned parameters term by term. Negative dual powers
    /// are singular; positive dual powers drop the term; imaginary units
    /// fold into the Gaussian coefficient; units disappear.
    pub fn evaluate(
        &self,
        assignment: &JAssignment,
        mode: DualSemantics,
    ) -> Result<Evaluated<JPolynomial>, SingularityError> {
        let mut out = JPolynomial::zero();
        let mut warnings = Vec::new();
        for term in self.terms() {
            // Negative dual powers anywhere in the term diverge, regardless
            // of other factors: each dual parameter has its own limit.
            for (k, e) in term.exponents.iter() {
                if assignment.get(k) == JValue::Dual && e < 0 {
                    return Err(SingularityError::new(format!("j{}", k), term.to_string()));
                }
            }
            let mut coef = term.coefficient.clone();
            let mut kept = Vec::new();
            let mut dropped = false;
            for (k, e) in term.exponents.iter() {
                match assignment.get(k) {
                    JValue::Symbolic => kept.push((k, e)),
                    JValue::Unit => {}
                    JValue::Imaginary => coef = coef.mul_i_power(e),
                    JValue::Dual => {
                        dropped = true;
                        if mode == DualSemantics::Strict && e % 2 == 1 {
                            warnings.push(SemanticsWarning {
                                monomial: term.to_string(),
                                index: k,
                            });
                        }
                    }
                }
            }
            if !dropped {
                out.insert_term(super::JExponents::from_pairs(kept), coef);
            }
        }
        Ok(Evaluated { value: out, warnings })
    }
}

impl ZSeries {
    pub fn evaluate(
        &self,
        assignment: &JAssignment,
        mode: DualSemantics,
    ) -> Result<Evaluated<ZSeries>, SingularityError> {
        let mut out = ZSeries::zero(self.order());
        let mut warnings = Vec::new();
        for (k, p) in self.iter() {
            let ev = p
                .evaluate(assignment, mode)
                .map_err(|e| e.with_location(format!("z^{} coefficient", k)))?;
            warnings.extend(ev.warnings);
            out = out.add(&ZSeries::term(self.order(), k, ev.value));
        }
        Ok(Evaluated { value: out, warnings })
    }
}

/// Applies the limit `eps -> 0` to a coefficient that acquired a net power
/// `eps^net`: positive powers vanish, zero powers survive, and negative
/// powers on a nonzero coefficient diverge.
pub fn epsilon_limit_poly(p: &JPolynomial, net: i64) -> Result<JPolynomial, SingularityError> {
    if p.is_zero() || net > 0 {
        return Ok(JPolynomial::zero());
    }
    if net < 0 {
        return Err(SingularityError::new("eps", format!("eps^{}*({})", net, p)));
    }
    Ok(p.clone())
}

/// Epsilon limit of a series whose parameter also scales: the coefficient
/// of `z^k` acquires `eps^(net + k*z_exponent)`.
pub fn epsilon_limit_series(
    s: &ZSeries,
    net: i64,
    z_exponent: i64,
) -> Result<ZSeries, SingularityError> {
    let mut out = ZSeries::zero(s.order());
    for (k, p) in s.iter() {
        let kept = epsilon_limit_poly(p, net + k as i64 * z_exponent)
            .map_err(|e| e.with_location(format!("z^{} coefficient", k)))?;
        out = out.add(&ZSeries::term(s.order(), k, kept));
    }
    Ok(out)
}
