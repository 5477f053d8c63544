//! Exact sparse multivariate polynomials with big-integer coefficients.
//!
//! A [`MultiPoly`] is a map from [`Monomial`] to a nonzero [`BigInt`]. The map
//! is kept canonical (no zero coefficients), so two polynomials are equal iff
//! their term maps are equal, and the text form is a faithful serialization:
//!
//! ```
//! use qsum::MultiPoly;
//! let p: MultiPoly = "1 + 2*a1 + a1^2*z1".parse().unwrap();
//! assert_eq!(p.to_string(), "1 + 2*a1 + a1^2*z1");
//! ```

mod monomial;
mod parse;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use monomial::{Monomial, Symbol};
pub use parse::ParsePolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("term {monomial} has degree {z_degree} in z{color} but only {a_degree} in a{color}")]
    StrictLimitPrecondition { monomial: String, color: u32, a_degree: u32, z_degree: u32 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(s: Symbol) -> Self {
        Self::term(1, Monomial::var(s))
    }

    pub fn term<C: Into<BigInt>>(c: C, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Sum of `(coefficient, monomial)` pairs; like terms are merged.
    pub fn from_terms<I: IntoIterator<Item = (BigInt, Monomial)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in print order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: &Monomial, c: &BigInt) {
        match self.terms.get_mut(m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(m.clone(), c.clone());
                }
            }
        }
    }

    /// `self += factor * other`, the inner step of every convolution.
    pub fn add_mul(&mut self, factor: &MultiPoly, other: &MultiPoly) {
        for (m1, c1) in &factor.terms {
            for (m2, c2) in &other.terms {
                self.add_term(m1.mul(m2), c1 * c2);
            }
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> MultiPoly {
        let c = c.into();
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * &c)).collect() }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        if m.is_one() {
            return self.clone();
        }
        MultiPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces each bound symbol by its integer value; unbound symbols stay.
    pub fn substitute(&self, bindings: &BTreeMap<Symbol, BigInt>) -> MultiPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (bound, rest) = m.split(|s| bindings.contains_key(&s));
            let mut value = c.clone();
            for (s, e) in bound {
                value *= num_traits::pow(bindings[&s].clone(), e as usize);
                if value.is_zero() {
                    break;
                }
            }
            out.add_term(rest, value);
        }
        out
    }

    /// Degree of `s` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    /// Every symbol that occurs in some term, in symbol order.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut v: Vec<Symbol> = self.terms.keys().flat_map(|m| m.iter().map(|(s, _)| s)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Substitutes `a_i -> a_i / z_i` and lets every `z_i` tend to infinity.
    ///
    /// Only terms whose `z_i`-degree equals their `a_i`-degree for every color
    /// survive, and the surviving `z_i` are set to 1. A term with
    /// `deg z_i > deg a_i` would diverge and is rejected.
    pub fn strict_limit(&self) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut keep = true;
            for (s, ze) in m.iter() {
                if let Symbol::Z(i) = s {
                    let ae = m.exponent(Symbol::A(i));
                    if ze > ae {
                        return Err(PolyError::StrictLimitPrecondition {
                            monomial: m.to_string(),
                            color: i,
                            a_degree: ae,
                            z_degree: ze,
                        });
                    }
                }
            }
            for (s, ae) in m.iter() {
                if let Symbol::A(i) = s {
                    if m.exponent(Symbol::Z(i)) != ae {
                        keep = false;
                        break;
                    }
                }
            }
            if keep {
                let (_, rest) = m.split(|s| matches!(s, Symbol::Z(_)));
                out.add_term(rest, c.clone());
            }
        }
        Ok(out)
    }

    /// Maps every monomial through `f` and re-collects like terms.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Symbol> for MultiPoly {
    fn from(s: Symbol) -> Self {
        MultiPoly::var(s)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(m, c);
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
