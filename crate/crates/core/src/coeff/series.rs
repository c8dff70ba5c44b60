//! Power series in the deformation parameter `z`, truncated at a fixed
//! order, with Laurent-polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{GaussianRational, JMonomial, JPolynomial};

/// `sum_k c_k(j) z^k` for `0 <= k <= order`; terms beyond `order` are
/// discarded by every operation. Binary operations on series of different
/// orders produce the smaller order, since higher coefficients of the result
/// would depend on discarded data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    order: u32,
    coeffs: BTreeMap<u32, JPolynomial>,
}

impl ZSeries {
    pub fn zero(order: u32) -> Self {
        ZSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        ZSeries::constant(order, JPolynomial::one())
    }

    pub fn constant(order: u32, p: JPolynomial) -> Self {
        ZSeries::term(order, 0, p)
    }

    pub fn from_gaussian(order: u32, c: GaussianRational) -> Self {
        ZSeries::constant(order, JPolynomial::constant(c))
    }

    pub fn integer(order: u32, n: i64) -> Self {
        ZSeries::constant(order, JPolynomial::integer(n))
    }

    /// The bare deformation parameter `z`.
    pub fn z(order: u32) -> Self {
        ZSeries::term(order, 1, JPolynomial::one())
    }

    /// A single term `p(j) * z^k`.
    pub fn term(order: u32, k: u32, p: JPolynomial) -> Self {
        let mut s = ZSeries::zero(order);
        s.insert_term(k, p);
        s
    }

    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (u32, JPolynomial)>) -> Self {
        let mut s = ZSeries::zero(order);
        for (k, p) in terms {
            s.insert_term(k, p);
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The coefficient of `z^k` (zero when absent or beyond the order).
    pub fn coefficient(&self, k: u32) -> JPolynomial {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &JPolynomial)> + '_ {
        self.coeffs.iter().map(|(&k, p)| (k, p))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest power of `z` with a nonzero coefficient.
    pub fn min_z_power(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    fn insert_term(&mut self, k: u32, p: JPolynomial) {
        if k > self.order || p.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(slot) => {
                *slot = slot.add(&p);
                if slot.is_zero() {
                    self.coeffs.remove(&k);
                }
            }
            None => {
                self.coeffs.insert(k, p);
            }
        }
    }

    /// Drops every term above `order`. The new order must not exceed the
    /// current one: raising it would invent coefficients that were never
    /// computed.
    pub fn truncate(&self, order: u32) -> ZSeries {
        assert!(
            order <= self.order,
            "cannot raise truncation order from {} to {}",
            self.order,
            order
        );
        let mut s = ZSeries::zero(order);
        for (&k, p) in &self.coeffs {
            s.insert_term(k, p.clone());
        }
        s
    }

    pub fn add(&self, other: &ZSeries) -> ZSeries {
        let mut s = ZSeries::zero(self.order.min(other.order));
        for (&k, p) in &self.coeffs {
            s.insert_term(k, p.clone());
        }
        for (&k, p) in &other.coeffs {
            s.insert_term(k, p.clone());
        }
        s
    }

    pub fn sub(&self, other: &ZSeries) -> ZSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ZSeries {
        ZSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(&k, p)| (k, p.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        let order = self.order.min(other.order);
        let mut s = ZSeries::zero(order);
        for (&ka, pa) in &self.coeffs {
            if ka > order {
                break;
            }
            for (&kb, pb) in &other.coeffs {
                if ka + kb > order {
                    break;
                }
                s.insert_term(ka + kb, pa.mul(pb));
            }
        }
        s
    }

    pub fn scale_poly(&self, p: &JPolynomial) -> ZSeries {
        let mut s = ZSeries::zero(self.order);
        for (&k, c) in &self.coeffs {
            s.insert_term(k, c.mul(p));
        }
        s
    }

    pub fn scale(&self, c: &GaussianRational) -> ZSeries {
        let mut s = ZSeries::zero(self.order);
        for (&k, p) in &self.coeffs {
            s.insert_term(k, p.scale(c));
        }
        s
    }

    pub fn mul_monomial(&self, m: &JMonomial) -> ZSeries {
        let mut s = ZSeries::zero(self.order);
        for (&k, p) in &self.coeffs {
            s.insert_term(k, p.mul_monomial(m));
        }
        s
    }

    /// Substitutes `z -> m * z` for an invertible Laurent monomial `m`: the
    /// coefficient of `z^k` picks up a factor `m^k`.
    pub fn substitute_z_monomial(&self, m: &JMonomial) -> ZSeries {
        let mut s = ZSeries::zero(self.order);
        for (&k, p) in &self.coeffs {
            s.insert_term(k, p.mul_monomial(&m.pow(k as i64)));
        }
        s
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&JPolynomial) -> JPolynomial) -> ZSeries {
        let mut s = ZSeries::zero(self.order);
        for (&k, p) in &self.coeffs {
            s.insert_term(k, f(p));
        }
        s
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, p) in &self.coeffs {
            let z_part = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{}", k),
            };
            // Single-term coefficients join the z power inline; sums are
            // parenthesized so the rendering stays unambiguous.
            let (sign, body) = render_coefficient(p, &z_part);
            if first {
                if sign == '-' {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
                first = false;
            } else {
                write!(f, " {} {}", sign, body)?;
            }
        }
        Ok(())
    }
}

fn render_coefficient(p: &JPolynomial, z_part: &str) -> (char, String) {
    if p.num_terms() == 1 {
        let term = p.terms().next().unwrap();
        let (sign, mag) = if term.coefficient.is_display_negative() {
            ('-', JMonomial::new(-&term.coefficient, term.exponents.clone()))
        } else {
            ('+', term)
        };
        let body = if z_part.is_empty() {
            mag.to_string()
        } else if mag.coefficient.is_one() && mag.exponents.is_one() {
            z_part.to_string()
        } else {
            format!("{}*{}", mag, z_part)
        };
        (sign, body)
    } else if z_part.is_empty() {
        ('+', p.to_string())
    } else {
        ('+', format!("({})*{}", p, z_part))
    }
}

/// Analytic functions whose exact Taylor coefficients are available for
/// composition with a series that has zero constant term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaylorFunction {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Exp,
}

impl TaylorFunction {
    /// The exact rational Taylor coefficient of `x^m` at the origin.
    pub fn coefficient(self, m: u32) -> BigRational {
        let fact = factorial(m);
        let inv_fact = BigRational::new(BigInt::one(), fact);
        match self {
            TaylorFunction::Exp => inv_fact,
            TaylorFunction::Sin => {
                if m % 2 == 1 {
                    sign_alternating((m - 1) / 2) * inv_fact
                } else {
                    BigRational::zero()
                }
            }
            TaylorFunction::Cos => {
                if m % 2 == 0 {
                    sign_alternating(m / 2) * inv_fact
                } else {
                    BigRational::zero()
                }
            }
            TaylorFunction::Sinh => {
                if m % 2 == 1 {
                    inv_fact
                } else {
                    BigRational::zero()
                }
            }
            TaylorFunction::Cosh => {
                if m % 2 == 0 {
                    inv_fact
                } else {
                    BigRational::zero()
                }
            }
        }
    }
}

fn factorial(m: u32) -> BigInt {
    (1..=m as u64).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn sign_alternating(half: u32) -> BigRational {
    if half % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Composition `f(arg)` requires `arg` to vanish at `z = 0`; otherwise
    /// the result would need the full analytic value of `f` at a nonzero
    /// point, which is not exactly representable here.
    #[error("series argument has nonzero constant term: {0}")]
    NonzeroConstantTerm(String),
}

/// Composes the Taylor expansion of `f` with `arg`, exactly, up to the
/// truncation order of `arg`.
pub fn series_apply(f: TaylorFunction, arg: &ZSeries) -> Result<ZSeries, SeriesError> {
    let c0 = arg.coefficient(0);
    if !c0.is_zero() {
        return Err(SeriesError::NonzeroConstantTerm(c0.to_string()));
    }
    let order = arg.order();
    let mut result = ZSeries::constant(
        order,
        JPolynomial::constant(GaussianRational::from_rational(f.coefficient(0))),
    );
    let mut power = ZSeries::one(order);
    for m in 1..=order {
        power = power.mul(arg);
        if power.is_zero() {
            break;
        }
        let c = f.coefficient(m);
        if !c.is_zero() {
            result = result.add(&power.scale(&GaussianRational::from_rational(c)));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_of_j1_z_truncates_exactly() {
        let arg = ZSeries::term(4, 1, JPolynomial::var(1));
        let s = series_apply(TaylorFunction::Sin, &arg).unwrap();
        // j1*z - 1/6*j1^3*z^3
        let mut expected = ZSeries::term(4, 1, JPolynomial::var(1));
        let cubic = JPolynomial::var(1)
            .mul(&JPolynomial::var(1))
            .mul(&JPolynomial::var(1))
            .scale(&GaussianRational::ratio(-1, 6));
        expected = expected.add(&ZSeries::term(4, 3, cubic));
        assert_eq!(s, expected);
    }

    #[test]
    fn composition_rejects_nonzero_constant_term() {
        let arg = ZSeries::one(4);
        assert!(matches!(
            series_apply(TaylorFunction::Exp, &arg),
            Err(SeriesError::NonzeroConstantTerm(_))
        ));
    }

    #[test]
    fn multiplication_respects_truncation() {
        // (z + z^5)^2 at order 6 keeps z^2 and z^6, drops z^10.
        let s = ZSeries::z(6).add(&ZSeries::term(6, 5, JPolynomial::one()));
        let sq = s.mul(&s);
        assert_eq!(sq.coefficient(2), JPolynomial::one());
        assert_eq!(sq.coefficient(6), JPolynomial::integer(2));
        assert_eq!(sq.min_z_power(), Some(2));
    }

    #[test]
    fn mixed_order_product_takes_smaller_order() {
        let a = ZSeries::z(8);
        let b = ZSeries::z(4);
        assert_eq!(a.mul(&b).order(), 4);
    }

    #[test]
    fn display_renders_series_terms() {
        let s = ZSeries::one(6)
            .sub(&ZSeries::term(
                6,
                2,
                JPolynomial::var(1).mul(&JPolynomial::var(1)).scale(&GaussianRational::ratio(1, 8)),
            ));
        assert_eq!(s.to_string(), "1 - 1/8*j1^2*z^2");
    }
}
