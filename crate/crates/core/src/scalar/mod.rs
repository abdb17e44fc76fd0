//! Exact coefficients: rational functions in named parameters over the rationals.
//!
//! Every identity checked by this crate is decided by [`Scalar::is_zero`] on a
//! reduced fraction, never by sampling parameter values.

mod parse;
pub mod poly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use poly::{Monomial, Polynomial};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter `{0}` is not bound")]
    UnboundParameter(String),
    #[error("denominator vanishes under the given bindings")]
    DenominatorVanishes,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// An element of `Q(p1, ..., pn)`, kept as a reduced fraction with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(q: Rational) -> Self {
        Scalar {
            num: Polynomial::constant(q),
            den: Polynomial::one(),
        }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::from_rational(Rational::new(n.into(), d.into()))
    }

    pub fn param(name: &str) -> Self {
        Scalar {
            num: Polynomial::var(name),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// Builds `num / den` in reduced form.
    pub fn from_fraction(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip();
            return Scalar {
                num: num.scale(&inv),
                den: Polynomial::one(),
            };
        }
        let g = poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient().recip();
        Scalar {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value if no parameters occur.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.num
            .variables()
            .union(&self.den.variables())
            .map(|v| v.to_string())
            .collect()
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        Ok(Self::reduce(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Evaluates every parameter; fails if one is left unbound or the
    /// denominator evaluates to zero.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rational>) -> Result<Scalar, ScalarError> {
        if let Some(v) = self.variables().into_iter().find(|v| !bindings.contains_key(v)) {
            return Err(ScalarError::UnboundParameter(v));
        }
        self.substitute_partial(bindings)
    }

    /// Evaluates only the parameters present in `bindings`.
    pub fn substitute_partial(
        &self,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Scalar, ScalarError> {
        let den = self.den.substitute(bindings);
        if den.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        Ok(Self::reduce(self.num.substitute(bindings), den))
    }

    fn add_ref(&self, other: &Scalar) -> Scalar {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar {
                num: self.num.add(&other.num),
                den: Polynomial::one(),
            };
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar {
                num: self.num.mul(&other.num),
                den: Polynomial::one(),
            };
        }
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn neg_ref(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$inner(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

impl Scalar {
    fn sub_ref(&self, other: &Scalar) -> Scalar {
        self.add_ref(&other.neg_ref())
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.sub_ref(&rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_scalar(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn bind(pairs: &[(&str, i64)]) -> BTreeMap<String, Rational> {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), Rational::from_integer((*v).into())))
            .collect()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
    }

    #[test]
    fn parameter_times_inverse_is_one() {
        let b = Scalar::param("b");
        assert!((&b * b.inv().unwrap()).is_one());
    }

    #[test]
    fn substitution_evaluates_products() {
        let x = s("l1*l2p");
        let y = x.substitute(&bind(&[("l1", 2), ("l2p", 3)])).unwrap();
        assert_eq!(y, Scalar::from_int(6));
        let y = x.substitute(&bind(&[("l1", 2), ("l2p", 5)])).unwrap();
        assert_eq!(y, Scalar::from_int(10));
        assert_eq!(s("2*b").substitute(&bind(&[("b", 3)])).unwrap(), Scalar::from_int(6));
    }

    #[test]
    fn substitution_errors() {
        assert_eq!(
            s("1/b").substitute(&bind(&[("b", 0)])),
            Err(ScalarError::DenominatorVanishes)
        );
        assert_eq!(
            s("b + c").substitute(&bind(&[("b", 0)])),
            Err(ScalarError::UnboundParameter("c".into()))
        );
        assert_eq!(
            s("b + c").substitute_partial(&bind(&[("b", 1)])).unwrap(),
            s("c + 1")
        );
    }

    #[test]
    fn zero_tests() {
        assert!(s("0/1").is_zero());
        assert!((Scalar::param("b") - Scalar::param("b")).is_zero());
        assert!(!s("l1*l2p - l1p*l2").is_zero());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn fractions_reduce() {
        let x = s("(b^2 - 1)/(b + 1)");
        assert_eq!(x, s("b - 1"));
        assert_eq!(x.to_string(), "b - 1");
        let y = s("(2*b)/(4*b^2 + 2)");
        assert_eq!(y.to_string(), "(1/2*b)/(b^2 + 1/2)");
        assert_eq!(s("(l1*l2p)/2").to_string(), "1/2*l1*l2p");
    }

    #[test]
    fn rational_functions_in_several_parameters() {
        let a = s("(x + y)/(x - y)");
        let b = s("(x - y)/(x*y + 1)");
        assert_eq!(&a * &b, s("(x + y)/(x*y + 1)"));
        let sum = &a + &b - &a;
        assert_eq!(sum, b);
    }
}
