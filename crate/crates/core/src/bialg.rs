//! Lie bialgebras: a Lie algebra together with a cocommutator
//! `eta: L -> L wedge L` satisfying the 1-cocycle condition, with the dual
//! Jacobi identity read off the transposed structure constants.
//!
//! Contraction of the cocommutator admits two routes: rescale only the
//! cocommutator legs, or rescale the legs with one map and the argument
//! with the other. Both are computed and compared; they must agree whenever
//! the two scalings coincide.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{epsilon_limit_series, JPolynomial, SingularityError, ZSeries};
use crate::hopf::{render_word, QuantumAlgebraData, Word};
use crate::liealg::{
    check_jacobi, contract_bracket, BasisLabel, EpsilonScaling, JacobiViolation, LieAlgebraData,
    LinearTerm,
};

/// `eta(X_a)` expressed over wedge products: key `(b, c)` with `b < c`
/// stands for `X_b wedge X_c = X_b (x) X_c - X_c (x) X_b`.
pub type WedgeRow = BTreeMap<(usize, usize), ZSeries>;

/// The cocommutator table: one wedge row per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocommutatorData {
    rows: Vec<WedgeRow>,
}

impl CocommutatorData {
    pub fn zero(dim: usize) -> Self {
        CocommutatorData { rows: vec![WedgeRow::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Accumulates `coef * (X_b wedge X_c)` into `eta(X_a)`, normalizing
    /// the wedge order. `b == c` contributes nothing.
    pub fn add_wedge(&mut self, a: usize, b: usize, c: usize, coef: ZSeries) {
        if b == c || coef.is_zero() {
            return;
        }
        let (key, coef) = if b < c { ((b, c), coef) } else { ((c, b), coef.neg()) };
        let row = &mut self.rows[a];
        match row.get_mut(&key) {
            Some(slot) => {
                *slot = slot.add(&coef);
                if slot.is_zero() {
                    row.remove(&key);
                }
            }
            None => {
                row.insert(key, coef);
            }
        }
    }

    pub fn row(&self, a: usize) -> &WedgeRow {
        &self.rows[a]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn render_row(&self, a: usize, labels: &[BasisLabel]) -> String {
        if self.rows[a].is_empty() {
            return "0".to_string();
        }
        self.rows[a]
            .iter()
            .map(|(&(b, c), s)| format!("({})*{}\u{2227}{}", s, labels[b], labels[c]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A Lie algebra with a candidate cocommutator over the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    pub algebra: LieAlgebraData,
    pub cocommutator: CocommutatorData,
}

impl BialgebraData {
    pub fn new(algebra: LieAlgebraData, cocommutator: CocommutatorData) -> Self {
        assert_eq!(
            algebra.dim(),
            cocommutator.dim(),
            "cocommutator dimension does not match the algebra"
        );
        BialgebraData { algebra, cocommutator }
    }
}

/// A plain element of `L (x) L`, used while verifying the cocycle
/// condition; no wedge normalization is imposed.
type TensorSquare = BTreeMap<(usize, usize), ZSeries>;

fn tensor_add(acc: &mut TensorSquare, key: (usize, usize), s: &ZSeries) {
    if s.is_zero() {
        return;
    }
    match acc.get_mut(&key) {
        Some(slot) => {
            *slot = slot.add(s);
            if slot.is_zero() {
                acc.remove(&key);
            }
        }
        None => {
            acc.insert(key, s.clone());
        }
    }
}

fn wedge_to_tensor(row: &WedgeRow) -> TensorSquare {
    let mut out = TensorSquare::new();
    for (&(b, c), s) in row {
        tensor_add(&mut out, (b, c), s);
        tensor_add(&mut out, (c, b), &s.neg());
    }
    out
}

/// `[t, 1 (x) Y + Y (x) 1] = sum c * (p (x) [q, Y] + [p, Y] (x) q)`.
fn adjoint_mixed(alg: &LieAlgebraData, t: &TensorSquare, y: usize) -> TensorSquare {
    let mut out = TensorSquare::new();
    for (&(p, q), c) in t {
        for (r, s) in alg.bracket(q, y) {
            tensor_add(&mut out, (p, r), &s.mul(c));
        }
        for (r, s) in alg.bracket(p, y) {
            tensor_add(&mut out, (r, q), &s.mul(c));
        }
    }
    out
}

fn render_tensor(t: &TensorSquare, labels: &[BasisLabel]) -> String {
    if t.is_empty() {
        return "0".to_string();
    }
    t.iter()
        .map(|(&(p, q), s)| format!("({})*{}\u{2297}{}", s, labels[p], labels[q]))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleViolation {
    pub pair: [String; 2],
    pub residual: String,
}

impl fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cocycle([{},{}]) residual: {}", self.pair[0], self.pair[1], self.residual)
    }
}

/// Checks the 1-cocycle condition on every basis pair:
/// `eta([X,Y]) = [eta(X), 1(x)Y + Y(x)1] + [1(x)X + X(x)1, eta(Y)]`.
pub fn check_cocycle(b: &BialgebraData) -> Vec<CocycleViolation> {
    let alg = &b.algebra;
    let eta = &b.cocommutator;
    let mut violations = Vec::new();
    for x in 0..alg.dim() {
        for y in (x + 1)..alg.dim() {
            // eta applied linearly to [X, Y].
            let mut lhs = TensorSquare::new();
            for (c, coef) in alg.bracket(x, y) {
                for (&key, s) in &wedge_to_tensor(eta.row(c)) {
                    tensor_add(&mut lhs, key, &s.mul(&coef));
                }
            }
            // Adjoint action of each argument on the other's cocommutator;
            // the second term carries the sign from swapping the bracket.
            let mut rhs = adjoint_mixed(alg, &wedge_to_tensor(eta.row(x)), y);
            for (&key, s) in &adjoint_mixed(alg, &wedge_to_tensor(eta.row(y)), x) {
                tensor_add(&mut rhs, key, &s.neg());
            }
            let mut residual = lhs;
            for (&key, s) in &rhs {
                tensor_add(&mut residual, key, &s.neg());
            }
            if !residual.is_empty() {
                violations.push(CocycleViolation {
                    pair: [alg.label(x).to_string(), alg.label(y).to_string()],
                    residual: render_tensor(&residual, alg.basis()),
                });
            }
        }
    }
    violations
}

/// The transpose of the cocommutator as a bracket on the dual space:
/// `[xi^b, xi^c]* = sum_a eta^{bc}_a xi^a`. Labels are reused for the dual
/// basis, so violation reports read in the same names.
pub fn dual_algebra(b: &BialgebraData) -> LieAlgebraData {
    let alg = &b.algebra;
    let mut dual = LieAlgebraData::new(alg.basis().to_vec(), alg.order());
    let mut table: BTreeMap<(usize, usize), LinearTerm> = BTreeMap::new();
    for a in 0..alg.dim() {
        for (&(p, q), s) in b.cocommutator.row(a) {
            let entry = table.entry((p, q)).or_default();
            crate::liealg::lin_add(entry, a, s);
        }
    }
    for ((p, q), value) in table {
        dual.set_bracket(p, q, value);
    }
    dual
}

/// Co-Jacobi: the Jacobi identity of the dual bracket.
pub fn check_cojacobi(b: &BialgebraData) -> Vec<JacobiViolation> {
    check_jacobi(&dual_algebra(b))
}

/// Contracts a cocommutator with output legs scaled by `out_scaling` and
/// the argument scaled by `in_scaling`: the coefficient of
/// `X_p wedge X_q` in `eta(X_a)` carries `eps^(e_out(p) + e_out(q) - e_in(a))`.
fn contract_eta(
    alg: &LieAlgebraData,
    eta: &CocommutatorData,
    out_scaling: &EpsilonScaling,
    in_scaling: &EpsilonScaling,
) -> Result<CocommutatorData, SingularityError> {
    let e_out: Vec<i64> = alg.basis().iter().map(|l| out_scaling.exponent_of(l)).collect();
    let e_in: Vec<i64> = alg.basis().iter().map(|l| in_scaling.exponent_of(l)).collect();
    let mut out = CocommutatorData::zero(alg.dim());
    for a in 0..alg.dim() {
        for (&(p, q), s) in eta.row(a) {
            let net = e_out[p] + e_out[q] - e_in[a];
            let limited =
                epsilon_limit_series(s, net, out_scaling.z_exponent).map_err(|err| {
                    err.with_location(format!(
                        "eta({}) -> {}\u{2227}{}",
                        alg.label(a),
                        alg.label(p),
                        alg.label(q)
                    ))
                })?;
            out.add_wedge(a, p, q, limited);
        }
    }
    Ok(out)
}

/// Cocommutator contraction along a single scaling.
pub fn contract_cocommutator(
    b: &BialgebraData,
    psi: &EpsilonScaling,
) -> Result<CocommutatorData, SingularityError> {
    contract_eta(&b.algebra, &b.cocommutator, psi, psi)
}

/// Verification results for a contracted bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraChecks {
    pub cocycle: Vec<CocycleViolation>,
    pub cojacobi: Vec<JacobiViolation>,
}

impl BialgebraChecks {
    pub fn all_pass(&self) -> bool {
        self.cocycle.is_empty() && self.cojacobi.is_empty()
    }
}

/// The full record of a bialgebra contraction: the bracket limit along
/// `phi`, the cocommutator limit along `psi` alone, the mixed-route limit
/// (legs along `psi`, argument along `phi`), whether the two routes agree,
/// and re-verification of the contracted structure when it exists.
#[derive(Clone, Debug)]
pub struct BialgebraContraction {
    pub algebra: Result<LieAlgebraData, SingularityError>,
    pub direct: Result<CocommutatorData, SingularityError>,
    pub mixed: Result<CocommutatorData, SingularityError>,
    pub consistent: bool,
    pub checks: Option<BialgebraChecks>,
}

impl BialgebraContraction {
    /// The contracted bialgebra when every limit converged.
    pub fn contracted(&self) -> Option<BialgebraData> {
        match (&self.algebra, &self.direct) {
            (Ok(alg), Ok(eta)) => Some(BialgebraData::new(alg.clone(), eta.clone())),
            _ => None,
        }
    }
}

/// Contracts bracket and cocommutator together. The two cocommutator routes
/// are computed independently and compared: `consistent` means they produce
/// equal tables, or fail with the same singularity.
pub fn contract_bialgebra(
    b: &BialgebraData,
    phi: &EpsilonScaling,
    psi: &EpsilonScaling,
) -> BialgebraContraction {
    let algebra = contract_bracket(&b.algebra, phi);
    let direct = contract_eta(&b.algebra, &b.cocommutator, psi, psi);
    let mixed = contract_eta(&b.algebra, &b.cocommutator, psi, phi);
    let consistent = match (&direct, &mixed) {
        (Ok(a), Ok(c)) => a == c,
        (Err(a), Err(c)) => a == c,
        _ => false,
    };
    let checks = match (&algebra, &direct) {
        (Ok(alg), Ok(eta)) => {
            let contracted = BialgebraData::new(alg.clone(), eta.clone());
            Some(BialgebraChecks {
                cocycle: check_cocycle(&contracted),
                cojacobi: check_cojacobi(&contracted),
            })
        }
        _ => None,
    };
    BialgebraContraction { algebra, direct, mixed, consistent, checks }
}

/// The cocommutator induced by a deformed coproduct: the coefficient of
/// `z^1` in `Delta - Delta^op`, read off in wedge coordinates. Errors when
/// that coefficient involves anything but single generators on both legs.
pub fn first_order_cocommutator(q: &QuantumAlgebraData) -> Result<CocommutatorData, String> {
    let mut eta = CocommutatorData::zero(q.dim());
    for g in 0..q.dim() {
        let mut antisym: BTreeMap<(Word, Word), JPolynomial> = BTreeMap::new();
        let mut record = |key: (Word, Word), p: JPolynomial| {
            let entry = antisym.entry(key).or_insert_with(JPolynomial::zero);
            *entry = entry.add(&p);
        };
        for (legs, c) in q.coproduct_of(g).terms() {
            let p = c.coefficient(1);
            if p.is_zero() {
                continue;
            }
            record((legs[0].clone(), legs[1].clone()), p.clone());
            record((legs[1].clone(), legs[0].clone()), p.neg());
        }
        for ((w0, w1), p) in antisym {
            if p.is_zero() {
                continue;
            }
            if w0.len() != 1 || w1.len() != 1 {
                return Err(format!(
                    "first-order cocommutator of {}: z^1 term {} (x) {} is not a product of single generators",
                    q.label(g),
                    render_word(&w0, q.generators()),
                    render_word(&w1, q.generators()),
                ));
            }
            if w0[0] < w1[0] {
                eta.add_wedge(g, w0[0], w1[0], ZSeries::constant(q.order(), p));
            }
        }
    }
    Ok(eta)
}
