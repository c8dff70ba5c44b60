//! Laurent polynomials in the contraction parameters `j1..jn`.
//!
//! Exponents may be negative. The canonical term order is lexicographic on
//! the exponent vector with the `j1` slot compared first; maps keyed by
//! [`JExponents`] therefore iterate in a stable, reproducible order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::GaussianRational;

/// An exponent vector `j1^e1 * j2^e2 * ...` with zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct JExponents(BTreeMap<u32, i64>);

impl JExponents {
    /// The empty vector, i.e. the constant monomial `1`.
    pub fn one() -> Self {
        JExponents::default()
    }

    /// The single variable `jk`. Indices are 1-based.
    pub fn var(k: u32) -> Self {
        assert!(k >= 1, "contraction parameters are indexed from 1");
        let mut m = BTreeMap::new();
        m.insert(k, 1);
        JExponents(m)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, e) in pairs {
            assert!(k >= 1, "contraction parameters are indexed from 1");
            let slot = out.entry(k).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.remove(&k);
            }
        }
        JExponents(out)
    }

    pub fn exponent(&self, k: u32) -> i64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    /// Largest variable index present, or 0 for the constant monomial.
    pub fn max_index(&self) -> u32 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &JExponents) -> JExponents {
        let mut out = self.0.clone();
        for (&k, &e) in &other.0 {
            let slot = out.entry(k).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.remove(&k);
            }
        }
        JExponents(out)
    }

    pub fn inverse(&self) -> JExponents {
        JExponents(self.0.iter().map(|(&k, &e)| (k, -e)).collect())
    }

    /// Raises every exponent by the integer factor `m`.
    pub fn pow(&self, m: i64) -> JExponents {
        if m == 0 {
            return JExponents::one();
        }
        JExponents(self.0.iter().map(|(&k, &e)| (k, e * m)).collect())
    }
}

impl Ord for JExponents {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter();
        let mut b = other.0.iter();
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb) {
                (None, None) => return Ordering::Equal,
                (Some((_, &ea)), None) => return ea.cmp(&0),
                (None, Some((_, &eb))) => return 0.cmp(&eb),
                (Some((&ka, &ea)), Some((&kb, &eb))) => match ka.cmp(&kb) {
                    // The side with the smaller index holds a nonzero
                    // exponent where the other side has an implicit zero.
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            na = a.next();
                            nb = b.next();
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for JExponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&k, &e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "j{}", k)?;
            } else {
                write!(f, "j{}^{}", k, e)?;
            }
        }
        Ok(())
    }
}

/// A single Laurent term: coefficient times an exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JMonomial {
    pub coefficient: GaussianRational,
    pub exponents: JExponents,
}

impl JMonomial {
    pub fn new(coefficient: GaussianRational, exponents: JExponents) -> Self {
        JMonomial { coefficient, exponents }
    }

    pub fn one() -> Self {
        JMonomial::new(GaussianRational::one(), JExponents::one())
    }

    /// `jk` with coefficient 1.
    pub fn var(k: u32) -> Self {
        JMonomial::new(GaussianRational::one(), JExponents::var(k))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn mul(&self, other: &JMonomial) -> JMonomial {
        JMonomial::new(
            &self.coefficient * &other.coefficient,
            self.exponents.mul(&other.exponents),
        )
    }

    /// Inverse as a Laurent monomial; panics on zero coefficient.
    pub fn inverse(&self) -> JMonomial {
        JMonomial::new(
            self.coefficient.inverse().expect("monomial with zero coefficient"),
            self.exponents.inverse(),
        )
    }

    pub fn pow(&self, m: i64) -> JMonomial {
        JMonomial::new(self.coefficient.powi(m), self.exponents.pow(m))
    }
}

impl fmt::Display for JMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_one() {
            return write!(f, "{}", self.coefficient);
        }
        if self.coefficient.is_one() {
            return write!(f, "{}", self.exponents);
        }
        if (-&self.coefficient).is_one() {
            return write!(f, "-{}", self.exponents);
        }
        write!(f, "{}*{}", self.coefficient, self.exponents)
    }
}

/// A Laurent polynomial in `j1..jn` with Gaussian-rational coefficients,
/// kept in canonical form: terms merged, zero coefficients removed, keys in
/// the canonical exponent order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JPolynomial(BTreeMap<JExponents, GaussianRational>);

impl JPolynomial {
    pub fn zero() -> Self {
        JPolynomial::default()
    }

    pub fn one() -> Self {
        JPolynomial::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = JPolynomial::zero();
        p.insert_term(JExponents::one(), c);
        p
    }

    pub fn integer(n: i64) -> Self {
        JPolynomial::constant(GaussianRational::from_integer(n))
    }

    /// The variable `jk`.
    pub fn var(k: u32) -> Self {
        JPolynomial::from_monomial(JMonomial::var(k))
    }

    pub fn from_monomial(m: JMonomial) -> Self {
        let mut p = JPolynomial::zero();
        p.insert_term(m.exponents, m.coefficient);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = JMonomial>) -> Self {
        let mut p = JPolynomial::zero();
        for t in terms {
            p.insert_term(t.exponents, t.coefficient);
        }
        p
    }

    /// Adds a term into the canonical form, merging and dropping zeros.
    pub fn insert_term(&mut self, exps: JExponents, coef: GaussianRational) {
        if coef.is_zero() {
            return;
        }
        match self.0.get_mut(&exps) {
            Some(slot) => {
                *slot = &*slot + &coef;
                if slot.is_zero() {
                    self.0.remove(&exps);
                }
            }
            None => {
                self.0.insert(exps, coef);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    /// The value as a constant, if the polynomial has no `j` dependence.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        match self.0.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (exps, coef) = self.0.iter().next().unwrap();
                exps.is_one().then(|| coef.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = JMonomial> + '_ {
        self.0
            .iter()
            .map(|(e, c)| JMonomial::new(c.clone(), e.clone()))
    }

    pub fn add(&self, other: &JPolynomial) -> JPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &JPolynomial) -> JPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> JPolynomial {
        JPolynomial(self.0.iter().map(|(e, c)| (e.clone(), -c)).collect())
    }

    pub fn mul(&self, other: &JPolynomial) -> JPolynomial {
        let mut out = JPolynomial::zero();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &other.0 {
                out.insert_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &JMonomial) -> JPolynomial {
        let mut out = JPolynomial::zero();
        for (e, c) in &self.0 {
            out.insert_term(e.mul(&m.exponents), c * &m.coefficient);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> JPolynomial {
        if c.is_zero() {
            return JPolynomial::zero();
        }
        let mut out = JPolynomial::zero();
        for (e, old) in &self.0 {
            out.insert_term(e.clone(), old * c);
        }
        out
    }
}

impl fmt::Display for JPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for term in self.terms() {
            let (sign, magnitude) = if term.coefficient.is_display_negative() {
                ("-", JMonomial::new(-&term.coefficient, term.exponents.clone()))
            } else {
                ("+", term.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-{}", magnitude)?;
                } else {
                    write!(f, "{}", magnitude)?;
                }
                first = false;
            } else {
                write!(f, " {} {}", sign, magnitude)?;
            }
        }
        Ok(())
    }
}
