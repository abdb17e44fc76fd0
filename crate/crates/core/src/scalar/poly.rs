//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are named; a monomial is a sorted list of `(name, exponent)`
//! pairs with positive exponents. The global variable order is alphabetical
//! and terms are kept in graded-lexicographic order, so two equal
//! polynomials always have identical term maps.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

pub type Var = Arc<str>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: &str) -> u32 {
        self.0
            .iter()
            .find(|(name, _)| &**name == v)
            .map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(n, e)| (&**n, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (name, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *name {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *name {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((name.clone(), e - d)),
                }
            } else {
                out.push((name.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let mut j = 0;
        for (name, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < *name {
                j += 1;
            }
            if j < other.0.len() && other.0[j].0 == *name {
                out.push((name.clone(), (*e).min(other.0[j].1)));
            }
        }
        Monomial(out)
    }

    fn without(&self, v: &str) -> Monomial {
        Monomial(self.0.iter().filter(|(n, _)| &**n != v).cloned().collect())
    }

    fn with_power(&self, v: &str, e: u32) -> Monomial {
        if e == 0 {
            return self.clone();
        }
        self.mul(&Monomial(vec![(Arc::from(v), e)]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lex: the first variable (alphabetically) where exponents differ decides.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((a, ea)), Some((b, eb))) => match a.cmp(b) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (name, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(name: &str) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Monomial::one()))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the greatest monomial down.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading().map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(n, _)| n.clone()))
            .collect()
    }

    pub fn degree_in(&self, v: &str) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.mul(m), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.checked_div(lm)?;
            let qc = c / lc;
            rem = rem.sub(&divisor.mul_term(&qc, &qm));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    fn coeff_in(&self, v: &str, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.degree_in(v) == k {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    fn coeffs_in(&self, v: &str) -> Vec<Polynomial> {
        let d = self.degree_in(v);
        (0..=d).map(|k| self.coeff_in(v, k)).collect()
    }

    fn times_var_power(&self, v: &str, e: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_power(v, e), c.clone()))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Evaluate the bound variables, leaving the rest symbolic.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rational>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (name, e) in &m.0 {
                match bindings.get(&**name) {
                    Some(val) => coeff *= num_traits::pow(val.clone(), *e as usize),
                    None => rest.push((name.clone(), *e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Least common multiple of coefficient denominators times gcd-normalised
    /// numerators; used to keep PRS coefficients small.
    fn rational_primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        let mut factor = Rational::new(lcm, g);
        if self.leading_coefficient().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// Greatest common divisor, normalised to be monic (zero if both inputs are zero).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    gcd_inner(a, b).monic()
}

fn gcd_inner(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a.num_terms() == 1 || b.num_terms() == 1 {
        let mut m: Option<Monomial> = None;
        for k in a.terms.keys().chain(b.terms.keys()) {
            m = Some(match m {
                None => k.clone(),
                Some(acc) => acc.gcd(k),
            });
        }
        return Polynomial::term(Rational::one(), m.unwrap_or_default());
    }
    let vars: BTreeSet<Var> = a.variables().union(&b.variables()).cloned().collect();
    let v = vars.iter().next().expect("non-constant polynomial has a variable");
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    if da == 0 {
        return gcd_inner(a, &content_in(b, v));
    }
    if db == 0 {
        return gcd_inner(&content_in(a, v), b);
    }
    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let c = gcd_inner(&ca, &cb);

    let (mut f, mut g) = if da >= db { (pa, pb) } else { (pb, pa) };
    let g_prim = loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break g;
        }
        if r.degree_in(v) == 0 {
            break Polynomial::one();
        }
        f = g;
        g = primitive_part_in(&r, v);
    };
    c.mul(&primitive_part_in(&g_prim, v))
}

fn content_in(p: &Polynomial, v: &str) -> Polynomial {
    let mut acc = Polynomial::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_inner(&acc, &c);
        if acc.is_constant() {
            return Polynomial::one();
        }
    }
    acc.monic()
}

fn primitive_part_in(p: &Polynomial, v: &str) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, v);
    p.exact_div(&c)
        .expect("content divides")
        .rational_primitive()
}

fn pseudo_rem(f: &Polynomial, g: &Polynomial, v: &str) -> Polynomial {
    let dg = g.degree_in(v);
    let lcg = g.coeff_in(v, dg);
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(v) >= dg {
        let dr = r.degree_in(v);
        let lcr = r.coeff_in(v, dr);
        r = lcg
            .mul(&r)
            .sub(&lcr.mul(&g.times_var_power(v, dr - dg)));
        r = r.rational_primitive();
    }
    r
}

fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                fmt_rational(&mag, f)?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                fmt_rational(&mag, f)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x() -> Polynomial {
        Polynomial::var("x")
    }

    fn y() -> Polynomial {
        Polynomial::var("y")
    }

    #[test]
    fn grlex_order() {
        let x2 = Monomial::var("x").mul(&Monomial::var("x"));
        let xy = Monomial::var("x").mul(&Monomial::var("y"));
        let y2 = Monomial::var("y").mul(&Monomial::var("y"));
        let z = Monomial::var("z");
        assert!(x2 > xy && xy > y2 && y2 > z && z > Monomial::one());
        assert!(Monomial::var("a") > Monomial::var("b"));
    }

    #[test]
    fn monomial_division() {
        let xy = Monomial::var("x").mul(&Monomial::var("y"));
        assert_eq!(xy.checked_div(&Monomial::var("y")), Some(Monomial::var("x")));
        assert_eq!(Monomial::var("x").checked_div(&Monomial::var("y")), None);
        assert_eq!(Monomial::var("y").checked_div(&xy), None);
    }

    #[test]
    fn exact_division_and_failure() {
        let a = x().add(&y());
        let b = x().sub(&y());
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert_eq!(p.exact_div(&x()), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let common = x().mul(&y()).add(&Polynomial::constant(q(3)));
        let a = common.mul(&x().add(&Polynomial::one()));
        let b = common.mul(&y().pow(2).sub(&x()));
        assert_eq!(gcd(&a, &b), common.monic());
        assert!(gcd(&x().add(&Polynomial::one()), &x().sub(&Polynomial::one())).is_one());
    }

    #[test]
    fn gcd_with_monomial() {
        let a = x().pow(2).mul(&y());
        let b = x().mul(&y()).add(&x().pow(3));
        assert_eq!(gcd(&a, &b), x());
    }

    #[test]
    fn display_is_canonical() {
        let p = x()
            .pow(2)
            .scale(&Rational::new(3.into(), 2.into()))
            .sub(&y())
            .add(&Polynomial::constant(q(-4)));
        assert_eq!(p.to_string(), "3/2*x^2 - y - 4");
    }
}
