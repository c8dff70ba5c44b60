//! The concrete catalog: the quantum orthogonal algebra on three
//! generators, its three Cayley-Klein couplings (one per primitive
//! generator), their dual-dual (Galilei-type) contractions, primitive-set
//! enumeration for higher rank, the allowed-contraction analysis, and
//! isomorphism distinguishers.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::coeff::{
    series_apply, DualSemantics, GaussianRational, JAssignment, JMonomial, JPolynomial, JValue,
    TaylorFunction, ZSeries,
};
use crate::hopf::{
    antipode_square_report, classical_limit, contract_hopf, permute_indices, primitive_coproduct,
    transform_hopf, AlgebraElement, QuantumAlgebraData, TensorElement,
};
use crate::liealg::{interval_monomial, BasisLabel};

fn ratio_poly(r: BigRational) -> JPolynomial {
    JPolynomial::constant(GaussianRational::from_rational(r))
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// `z/2` as a series.
fn half_z(order: u32) -> ZSeries {
    ZSeries::term(order, 1, ratio_poly(half()))
}

/// `sinh(z X_g)/z`: words `X_g^m` (odd m) with coefficients `z^{m-1}/m!`.
fn sinh_over_z(g: usize, order: u32) -> AlgebraElement {
    let mut terms = Vec::new();
    let mut m = 1u32;
    while m <= order + 1 {
        let c = TaylorFunction::Sinh.coefficient(m);
        terms.push((vec![g; m as usize], ZSeries::term(order, m - 1, ratio_poly(c))));
        m += 2;
    }
    AlgebraElement::from_terms(terms)
}

/// `X_g (x) e^{(z/2) X_p} + e^{-(z/2) X_p} (x) X_g`.
fn exponential_coproduct(g: usize, p: usize, order: u32) -> TensorElement {
    let mut raw = Vec::new();
    for k in 0..=order {
        let base = TaylorFunction::Exp.coefficient(k) * half().pow(k as i32);
        let plus = ratio_poly(base.clone());
        let minus = ratio_poly(if k % 2 == 0 { base } else { -base });
        raw.push((vec![vec![g], vec![p; k as usize]], ZSeries::term(order, k, plus)));
        raw.push((vec![vec![p; k as usize], vec![g]], ZSeries::term(order, k, minus)));
    }
    TensorElement::from_terms(2, raw)
}

/// `-X_g cos(z/2) + sign * X_partner sin(z/2)`.
fn rotated_antipode(g: usize, partner: usize, sign: i64, order: u32) -> AlgebraElement {
    let cos = series_apply(TaylorFunction::Cos, &half_z(order)).expect("z/2 has no constant term");
    let sin = series_apply(TaylorFunction::Sin, &half_z(order)).expect("z/2 has no constant term");
    AlgebraElement::from_terms([
        (vec![g], cos.neg()),
        (vec![partner], sin.scale(&GaussianRational::from_integer(sign))),
    ])
}

/// The seed quantum algebra on generators `X01 < X02 < X12` with `X02`
/// primitive: commutators `[X01,X02]=X12`, `[X02,X12]=X01`,
/// `[X12,X01]=sinh(z X02)/z`, counit zero, and the rotation antipode.
pub fn quantum_so3_seed(order: u32) -> QuantumAlgebraData {
    let labels =
        vec![BasisLabel::pair(0, 1), BasisLabel::pair(0, 2), BasisLabel::pair(1, 2)];
    let mut q = QuantumAlgebraData::new(labels, order);
    q.set_relation(1, 0, AlgebraElement::generator(2, order).neg());
    q.set_relation(2, 1, AlgebraElement::generator(0, order).neg());
    q.set_relation(2, 0, sinh_over_z(1, order));
    q.set_coproduct(0, exponential_coproduct(0, 1, order));
    q.set_coproduct(2, exponential_coproduct(2, 1, order));
    q.set_antipode(0, rotated_antipode(0, 2, 1, order));
    q.set_antipode(2, rotated_antipode(2, 0, -1, order));
    q
}

/// The full table of interval multipliers `J_{mu nu}` for rank `n`.
pub fn ck_multipliers(n: u32) -> BTreeMap<BasisLabel, JMonomial> {
    let mut out = BTreeMap::new();
    for mu in 0..n {
        for nu in (mu + 1)..=n {
            out.insert(BasisLabel::pair(mu, nu), interval_monomial(mu, nu));
        }
    }
    out
}

/// Which generator of the three-generator family is primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum So3Primitive {
    X01,
    X02,
    X12,
}

impl So3Primitive {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "X01" => Some(So3Primitive::X01),
            "X02" => Some(So3Primitive::X02),
            "X12" => Some(So3Primitive::X12),
            _ => None,
        }
    }

    pub fn label(self) -> BasisLabel {
        match self {
            So3Primitive::X01 => BasisLabel::pair(0, 1),
            So3Primitive::X02 => BasisLabel::pair(0, 2),
            So3Primitive::X12 => BasisLabel::pair(1, 2),
        }
    }

    /// The point-index permutation carrying the seed primitive X02 to this
    /// choice.
    pub fn sigma(self) -> [u32; 3] {
        match self {
            So3Primitive::X02 => [0, 1, 2],
            So3Primitive::X01 => [0, 2, 1],
            So3Primitive::X12 => [1, 0, 2],
        }
    }

    /// The deformation-parameter multiplier: the interval multiplier of the
    /// primitive generator.
    pub fn z_multiplier(self) -> JMonomial {
        let (mu, nu) = match self.label() {
            BasisLabel::Pair(mu, nu) => (mu, nu),
            BasisLabel::Named(_) => unreachable!(),
        };
        interval_monomial(mu, nu)
    }

    fn galilei_tag(self) -> Option<&'static str> {
        match self {
            So3Primitive::X01 => Some("sec"),
            So3Primitive::X12 => Some("cm/sec"),
            So3Primitive::X02 => None,
        }
    }

    pub fn descriptor(self) -> CouplingDescriptor {
        CouplingDescriptor::new(2, self.sigma().to_vec(), self.galilei_tag().map(str::to_string))
    }
}

impl std::fmt::Display for So3Primitive {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The coupling of one primitive choice: rank, Weyl permutation, the
/// permuted primitive set, and the induced deformation-parameter
/// multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingDescriptor {
    pub n: u32,
    pub sigma: Vec<u32>,
    pub primitive_set: PrimitiveSet,
    pub z_multiplier: JMonomial,
    pub z_dimension_tag: Option<String>,
}

impl CouplingDescriptor {
    /// Builds the descriptor from the permutation: the primitive set is the
    /// sigma-image of the canonical set and the z multiplier is the product
    /// of the interval multipliers over its pairs.
    pub fn new(n: u32, sigma: Vec<u32>, z_dimension_tag: Option<String>) -> Self {
        assert_eq!(sigma.len() as u32, n + 1, "sigma must permute 0..=n");
        let canonical = canonical_primitive_set(n);
        let pairs: Vec<(u32, u32)> = canonical
            .pairs()
            .iter()
            .map(|&(mu, nu)| {
                let (a, b) = (sigma[mu as usize], sigma[nu as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        let primitive_set = PrimitiveSet::new(n, pairs).expect("image of a valid set is valid");
        let z_multiplier = primitive_set.z_multiplier();
        CouplingDescriptor { n, sigma, primitive_set, z_multiplier, z_dimension_tag }
    }
}

/// The published coupling: permute the seed and apply the interval
/// rescaling together with the matching z rescaling, keeping j symbolic.
pub fn build_so_z3(primitive: So3Primitive, order: u32) -> QuantumAlgebraData {
    let seed = quantum_so3_seed(order);
    let permuted = permute_indices(&seed, &primitive.sigma());
    transform_hopf(&permuted, &ck_multipliers(2), &primitive.z_multiplier())
}

/// The dual-dual contraction of the chosen coupling, with the physical
/// dimension tag of the deformation parameter attached where one is known.
pub fn galilei(primitive: So3Primitive, order: u32) -> QuantumAlgebraData {
    let full = build_so_z3(primitive, order);
    let contracted = contract_hopf(&full, &JAssignment::uniform(2, JValue::Dual), DualSemantics::Limit)
        .expect("the dual-dual limit of every coupling is regular");
    let mut q = contracted.value;
    q.set_z_dimension(primitive.galilei_tag().map(str::to_string));
    q
}

/// An ordered set of pairwise-disjoint index pairs from `{0,..,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveSet {
    n: u32,
    pairs: Vec<(u32, u32)>,
}

impl PrimitiveSet {
    pub fn new(n: u32, pairs: Vec<(u32, u32)>) -> Result<Self, String> {
        let k = pairs.len() as u32;
        if 2 * k > n + 1 {
            return Err(format!("{k} pairs do not fit in {} indices", n + 1));
        }
        let mut used = vec![false; (n + 1) as usize];
        for &(mu, nu) in &pairs {
            if mu >= nu || nu > n {
                return Err(format!("({mu}, {nu}) is not an index pair with mu < nu <= n"));
            }
            for idx in [mu, nu] {
                if used[idx as usize] {
                    return Err(format!("index {idx} appears in two pairs"));
                }
                used[idx as usize] = true;
            }
        }
        Ok(PrimitiveSet { n, pairs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn labels(&self) -> Vec<BasisLabel> {
        self.pairs.iter().map(|&(mu, nu)| BasisLabel::pair(mu, nu)).collect()
    }

    /// Product of the interval multipliers over the pairs.
    pub fn z_multiplier(&self) -> JMonomial {
        self.pairs
            .iter()
            .fold(JMonomial::one(), |acc, &(mu, nu)| acc.mul(&interval_monomial(mu, nu)))
    }
}

impl std::fmt::Display for PrimitiveSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// The nested set `{(0,n), (1,n-1), ..}` of size `floor((n+1)/2)`.
pub fn canonical_primitive_set(n: u32) -> PrimitiveSet {
    let k = (n + 1) / 2;
    let pairs = (0..k).map(|i| (i, n - i)).collect();
    PrimitiveSet::new(n, pairs).expect("nested pairs are disjoint")
}

/// All ordered k-tuples of pairwise-disjoint index pairs; the count is
/// `(n+1)! / (2^k (n+1-2k)!)`.
pub fn enumerate_primitive_sets(n: u32, k: u32) -> Vec<PrimitiveSet> {
    assert!(2 * k <= n + 1, "2k must not exceed n+1");
    let mut out = Vec::new();
    let mut current: Vec<(u32, u32)> = Vec::with_capacity(k as usize);
    let mut used = vec![false; (n + 1) as usize];
    fn recurse(
        n: u32,
        k: u32,
        current: &mut Vec<(u32, u32)>,
        used: &mut Vec<bool>,
        out: &mut Vec<PrimitiveSet>,
    ) {
        if current.len() as u32 == k {
            out.push(PrimitiveSet { n, pairs: current.clone() });
            return;
        }
        for mu in 0..n {
            if used[mu as usize] {
                continue;
            }
            for nu in (mu + 1)..=n {
                if used[nu as usize] {
                    continue;
                }
                used[mu as usize] = true;
                used[nu as usize] = true;
                current.push((mu, nu));
                recurse(n, k, current, used, out);
                current.pop();
                used[mu as usize] = false;
                used[nu as usize] = false;
            }
        }
    }
    recurse(n, k, &mut current, &mut used, &mut out);
    out
}

/// A rule predicting which dual/unit assignments contract regularly for a
/// given primitive set when the full Hopf structure is not available.
pub trait CoproductModel {
    fn name(&self) -> &'static str;
    fn is_allowed(&self, set: &PrimitiveSet, assignment: &JAssignment) -> bool;
}

/// The default model. The primitive set induces an involution `tau` on the
/// point indices; the structure maps mix each generator `X_g` with its
/// conjugate `X_tau(g)` through coefficients
/// `J_g * J_tau(g)^{-1} * J_p^m` (odd `m >= 1`, `J_p` the product of the
/// interval multipliers over the primitive pairs). The assignment is
/// allowed iff every such coefficient has nonnegative dual exponents in
/// both orientations; since `J_p` has nonnegative exponents, `m = 1` is
/// binding.
pub struct PairMixingModel;

impl CoproductModel for PairMixingModel {
    fn name(&self) -> &'static str {
        "pair-mixing"
    }

    fn is_allowed(&self, set: &PrimitiveSet, assignment: &JAssignment) -> bool {
        let n = set.n();
        let mut tau: Vec<u32> = (0..=n).collect();
        for &(mu, nu) in set.pairs() {
            tau.swap(mu as usize, nu as usize);
        }
        let jp = set.z_multiplier().exponents;
        let duals: Vec<u32> =
            (1..=n).filter(|&k| assignment.get(k) == JValue::Dual).collect();
        for mu in 0..n {
            for nu in (mu + 1)..=n {
                let (a, b) = (tau[mu as usize], tau[nu as usize]);
                let conjugate = (a.min(b), a.max(b));
                if conjugate <= (mu, nu) {
                    continue; // fixed generator or pair already visited
                }
                let jg = interval_monomial(mu, nu).exponents;
                let jc = interval_monomial(conjugate.0, conjugate.1).exponents;
                for (x, y) in [(&jg, &jc), (&jc, &jg)] {
                    let mixing = x.mul(&y.inverse()).mul(&jp);
                    if duals.iter().any(|&k| mixing.exponent(k) < 0) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Looks up a coproduct model by CLI-facing name.
pub fn model_by_name(name: &str) -> Option<Box<dyn CoproductModel>> {
    match name {
        "pair-mixing" => Some(Box::new(PairMixingModel)),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Allowed,
    Singular,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Allowed => "allowed",
            Verdict::Singular => "singular",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictBasis {
    Exact,
    Model,
}

impl VerdictBasis {
    pub fn name(self) -> &'static str {
        match self {
            VerdictBasis::Exact => "exact",
            VerdictBasis::Model => "model",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AssignmentVerdict {
    pub assignment: JAssignment,
    pub verdict: Verdict,
    pub basis: VerdictBasis,
}

fn so3_primitive_of_pair(pair: (u32, u32)) -> Option<So3Primitive> {
    match pair {
        (0, 1) => Some(So3Primitive::X01),
        (0, 2) => Some(So3Primitive::X02),
        (1, 2) => Some(So3Primitive::X12),
        _ => None,
    }
}

/// Verdicts over all `2^n` dual/unit assignments, in binary counting order
/// (`j1` is the least significant digit, unit before dual).
///
/// For `n = 2` the verdict is exact: the full Hopf structure is built and
/// contracted. For higher rank the supplied model decides, and the verdict
/// is tagged accordingly.
pub fn allowed_contractions(
    set: &PrimitiveSet,
    model: &dyn CoproductModel,
) -> Vec<AssignmentVerdict> {
    let n = set.n();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let values: Vec<JValue> = (0..n)
            .map(|k| if mask & (1 << k) != 0 { JValue::Dual } else { JValue::Unit })
            .collect();
        let assignment = JAssignment::new(values);
        let (verdict, basis) = if n == 2 && set.len() == 1 {
            let primitive = so3_primitive_of_pair(set.pairs()[0]).expect("validated n=2 pair");
            let q = build_so_z3(primitive, 4);
            let verdict = match contract_hopf(&q, &assignment, DualSemantics::Limit) {
                Ok(_) => Verdict::Allowed,
                Err(_) => Verdict::Singular,
            };
            (verdict, VerdictBasis::Exact)
        } else {
            let verdict = if model.is_allowed(set, &assignment) {
                Verdict::Allowed
            } else {
                Verdict::Singular
            };
            (verdict, VerdictBasis::Model)
        };
        out.push(AssignmentVerdict { assignment, verdict, basis });
    }
    out
}

/// One compared invariant; `agree` is true when the values match or when
/// either side could not be computed (an unknown can never witness
/// non-isomorphism).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantComparison {
    pub invariant: String,
    pub left: String,
    pub right: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguisherReport {
    pub comparisons: Vec<InvariantComparison>,
}

impl DistinguisherReport {
    /// The first invariant that witnesses non-isomorphism, if any.
    pub fn distinguished_by(&self) -> Option<&InvariantComparison> {
        self.comparisons.iter().find(|c| !c.agree)
    }

    pub fn distinguished(&self) -> bool {
        self.distinguished_by().is_some()
    }
}

const NOT_COMPUTED: &str = "not computed";

fn compare(invariant: &str, left: String, right: String) -> InvariantComparison {
    let agree = left == right || left == NOT_COMPUTED || right == NOT_COMPUTED;
    InvariantComparison { invariant: invariant.to_string(), left, right, agree }
}

/// Numeric structure constants `c[a][b][k]` of the classical limit, when
/// every coefficient is a plain Gaussian rational.
fn numeric_constants(q: &QuantumAlgebraData) -> Option<Vec<Vec<Vec<GaussianRational>>>> {
    let alg = classical_limit(q).ok()?;
    let d = alg.dim();
    let mut c = vec![vec![vec![GaussianRational::zero(); d]; d]; d];
    for a in 0..d {
        for b in 0..d {
            for (k, s) in alg.bracket(a, b) {
                c[a][b][k] = s.coefficient(0).constant_value()?;
            }
        }
    }
    Some(c)
}

/// Row rank over the Gaussian rationals by elimination.
fn rank(mut rows: Vec<Vec<GaussianRational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        rows[rank] = rows[rank].iter().map(|v| v * &inv).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                rows[r] = rows[r]
                    .iter()
                    .zip(&rows[rank])
                    .map(|(v, p)| v - &(p * &factor))
                    .collect();
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn bracket_vector(
    c: &[Vec<Vec<GaussianRational>>],
    u: &[GaussianRational],
    v: &[GaussianRational],
) -> Vec<GaussianRational> {
    let d = c.len();
    let mut out = vec![GaussianRational::zero(); d];
    for a in 0..d {
        if u[a].is_zero() {
            continue;
        }
        for b in 0..d {
            if v[b].is_zero() {
                continue;
            }
            let scale = &u[a] * &v[b];
            for (k, out_k) in out.iter_mut().enumerate() {
                if !c[a][b][k].is_zero() {
                    *out_k = &*out_k + &(&c[a][b][k] * &scale);
                }
            }
        }
    }
    out
}

/// Reduced row-echelon basis of the span of the given vectors.
fn echelon_basis(rows: Vec<Vec<GaussianRational>>) -> Vec<Vec<GaussianRational>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rows = rows;
    let mut kept = 0;
    for col in 0..width {
        let Some(pivot) = (kept..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(kept, pivot);
        let inv = rows[kept][col].inverse().expect("pivot is nonzero");
        rows[kept] = rows[kept].iter().map(|v| v * &inv).collect();
        for r in 0..rows.len() {
            if r != kept && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                rows[r] = rows[r]
                    .iter()
                    .zip(rows[kept].clone().iter())
                    .map(|(v, p)| v - &(p * &factor))
                    .collect();
            }
        }
        kept += 1;
    }
    rows.truncate(kept);
    rows
}

/// Dimensions of the derived series `L, [L,L], [[L,L],[L,L]], ..` until
/// the dimension stabilizes.
fn derived_series_dims(c: &[Vec<Vec<GaussianRational>>]) -> Vec<usize> {
    let d = c.len();
    let mut basis: Vec<Vec<GaussianRational>> = (0..d)
        .map(|i| {
            let mut v = vec![GaussianRational::zero(); d];
            v[i] = GaussianRational::one();
            v
        })
        .collect();
    let mut dims = vec![d];
    loop {
        let mut products = Vec::new();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let w = bracket_vector(c, &basis[i], &basis[j]);
                if w.iter().any(|v| !v.is_zero()) {
                    products.push(w);
                }
            }
        }
        let next = echelon_basis(products);
        let dim = next.len();
        dims.push(dim);
        if dim == *dims[dims.len() - 2..].first().unwrap() || dim == 0 {
            break;
        }
        basis = next;
    }
    dims
}

fn center_dim(c: &[Vec<Vec<GaussianRational>>]) -> usize {
    let d = c.len();
    let rows: Vec<Vec<GaussianRational>> = (0..d)
        .map(|a| {
            let mut row = Vec::with_capacity(d * d);
            for b in 0..d {
                for k in 0..d {
                    row.push(c[a][b][k].clone());
                }
            }
            row
        })
        .collect();
    d - rank(rows)
}

/// Compares computable Hopf invariants of two presentations and reports
/// any witness of non-isomorphism. Never claims isomorphism: agreement of
/// every invariant is reported as "not distinguished".
pub fn isomorphism_distinguishers(
    q1: &QuantumAlgebraData,
    q2: &QuantumAlgebraData,
) -> DistinguisherReport {
    assert_eq!(q1.dim(), q2.dim(), "comparing algebras of different dimension");
    let mut comparisons = Vec::new();

    let inv = |q: &QuantumAlgebraData| antipode_square_report(q).involutive.to_string();
    comparisons.push(compare("antipode square involutive", inv(q1), inv(q2)));

    let derived = |q: &QuantumAlgebraData| {
        numeric_constants(q)
            .map(|c| format!("{:?}", derived_series_dims(&c)))
            .unwrap_or_else(|| NOT_COMPUTED.to_string())
    };
    comparisons.push(compare("classical derived series dimensions", derived(q1), derived(q2)));

    let center = |q: &QuantumAlgebraData| {
        numeric_constants(q)
            .map(|c| center_dim(&c).to_string())
            .unwrap_or_else(|| NOT_COMPUTED.to_string())
    };
    comparisons.push(compare("classical center dimension", center(q1), center(q2)));

    let kernel = |q: &QuantumAlgebraData| {
        (0..q.dim()).filter(|&g| q.counit_of(g).is_zero()).count().to_string()
    };
    comparisons.push(compare("counit kernel generator count", kernel(q1), kernel(q2)));

    let primitive = |q: &QuantumAlgebraData| {
        (0..q.dim())
            .filter(|&g| *q.coproduct_of(g) == primitive_coproduct(g, q.order()))
            .count()
            .to_string()
    };
    comparisons.push(compare("primitive generator count", primitive(q1), primitive(q2)));

    DistinguisherReport { comparisons }
}

/// Parses a CLI-facing catalog name such as `so_z3:X02` or `galilei:X01`.
pub fn catalog_entry(name: &str, order: u32) -> Option<QuantumAlgebraData> {
    let (family, primitive) = name.split_once(':')?;
    let primitive = So3Primitive::parse(primitive)?;
    match family {
        "so_z3" => Some(build_so_z3(primitive, order)),
        "galilei" => Some(galilei(primitive, order)),
        _ => None,
    }
}

/// The catalog names accepted by [`catalog_entry`].
pub fn catalog_names() -> Vec<String> {
    let mut out = Vec::new();
    for family in ["so_z3", "galilei"] {
        for p in ["X01", "X02", "X12"] {
            out.push(format!("{family}:{p}"));
        }
    }
    out
}
