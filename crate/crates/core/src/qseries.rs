//! Power series in `q` with [`MultiPoly`] coefficients, truncated at an
//! exclusive order `T`: a series of order `T` is exact for exponents
//! `0..T` and says nothing about `q^T` and beyond.
//!
//! Every product in the identity catalog is assembled from the builders here:
//! finite and infinite q-Pochhammer products with a caller-supplied
//! coefficient and arithmetic progression of exponents, geometric inverses
//! `1/(1 - c q^e)`, and inversion of series with constant term 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::polyring::{MultiPoly, PolyError, Symbol};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("{op} needs a positive exponent offset, got 0")]
    ZeroOffset { op: &'static str },
    #[error("series is not a unit: constant term is {constant}, expected 1")]
    NonUnit { constant: String },
    #[error("comparison order {requested} exceeds operand order {available}")]
    OrderExceeded { requested: usize, available: usize },
    #[error("at q^{exponent}: {source}")]
    Coefficient {
        exponent: usize,
        #[source]
        source: PolyError,
    },
}

/// First exponent at which two series differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Match,
    Mismatch(Mismatch),
}

impl Comparison {
    pub fn is_match(&self) -> bool {
        matches!(self, Comparison::Match)
    }

    pub fn mismatch(&self) -> Option<&Mismatch> {
        match self {
            Comparison::Match => None,
            Comparison::Mismatch(m) => Some(m),
        }
    }
}

/// A truncated power series; `coeffs[n]` is the coefficient of `q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<MultiPoly>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![MultiPoly::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(MultiPoly::one(), 0, order)
    }

    /// `c * q^e`, truncated at `order`.
    pub fn monomial(c: MultiPoly, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e < order {
            s.coeffs[e] = c;
        }
        s
    }

    /// `1 + c * q^e`.
    pub fn binomial(c: MultiPoly, e: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if e < order {
            s.coeffs[e] += &c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        QSeries { coeffs }
    }

    /// Series with integer coefficients, e.g. `[1, -1, -1]` for `1 - q - q^2`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QSeries { coeffs: coeffs.iter().map(|&c| MultiPoly::constant(c)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Smallest exponent with a nonzero coefficient, if any below the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().take(order).cloned().collect() }
    }

    /// Coefficientwise sum; the result has the smaller of the two orders.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        QSeries { coeffs: (0..order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect() }
    }

    pub fn add_assign(&mut self, other: &QSeries) {
        self.coeffs.truncate(other.order());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        QSeries { coeffs: (0..order).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect() }
    }

    pub fn neg(&self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Truncated Cauchy product; the result has the smaller of the two orders.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let mut out = vec![MultiPoly::zero(); order];
        for (i, f) in self.coeffs.iter().enumerate().take(order) {
            if f.is_zero() {
                continue;
            }
            for (j, g) in other.coeffs.iter().enumerate().take(order - i) {
                if !g.is_zero() {
                    out[i + j].add_mul(f, g);
                }
            }
        }
        QSeries { coeffs: out }
    }

    /// Multiplies every coefficient by the constant-in-`q` polynomial `c`.
    pub fn mul_poly(&self, c: &MultiPoly) -> QSeries {
        if c.is_one() {
            return self.clone();
        }
        QSeries { coeffs: self.coeffs.iter().map(|f| f * c).collect() }
    }

    /// Multiplies by `q^e`, keeping the order.
    pub fn shift(&self, e: usize) -> QSeries {
        let order = self.order();
        let mut coeffs = vec![MultiPoly::zero(); order];
        if e < order {
            coeffs[e..].clone_from_slice(&self.coeffs[..order - e]);
        }
        QSeries { coeffs }
    }

    /// `self * (1 + c q^e)`.
    pub fn mul_binomial(&self, c: &MultiPoly, e: usize) -> QSeries {
        let mut coeffs = self.coeffs.clone();
        for (dst, src) in coeffs.iter_mut().skip(e).zip(&self.coeffs) {
            if !src.is_zero() {
                dst.add_mul(c, src);
            }
        }
        QSeries { coeffs }
    }

    /// `self / (1 - c q^e)` for `e >= 1`, by the recurrence `g[n] = f[n] + c g[n-e]`.
    pub fn div_geometric(&self, c: &MultiPoly, e: usize) -> Result<QSeries, SeriesError> {
        if e == 0 {
            return Err(SeriesError::ZeroOffset { op: "div_geometric" });
        }
        let mut coeffs = self.coeffs.clone();
        for n in e..self.order() {
            let (lo, hi) = coeffs.split_at_mut(n);
            if !lo[n - e].is_zero() {
                hi[0].add_mul(c, &lo[n - e]);
            }
        }
        Ok(QSeries { coeffs })
    }

    /// `prod_{k=0}^{n-1} (1 + c q^{e0 + k*step})`, truncated at `order`.
    ///
    /// The sign is carried by `c`: `(a q; q)_n` is `poch_finite(-a, 1, 1, n, T)`.
    pub fn poch_finite(c: &MultiPoly, e0: usize, step: usize, n: usize, order: usize) -> QSeries {
        let mut acc = QSeries::one(order);
        for k in 0..n {
            let e = e0 + k * step;
            if e >= order {
                // all later factors are 1 + O(q^order) when step > 0
                if step > 0 {
                    break;
                }
                continue;
            }
            acc = acc.mul_binomial(c, e);
        }
        acc
    }

    /// `prod_{k>=0} (1 + c q^{e0 + k*step})`, truncated at `order`.
    pub fn poch_infinite(c: &MultiPoly, e0: usize, step: usize, order: usize) -> Result<QSeries, SeriesError> {
        if e0 == 0 || step == 0 {
            return Err(SeriesError::ZeroOffset { op: "poch_infinite" });
        }
        let factors = if order > e0 { (order - e0).div_ceil(step) } else { 0 };
        Ok(Self::poch_finite(c, e0, step, factors, order))
    }

    /// `sum_{m>=0} c^m q^{e m}`, i.e. `1/(1 - c q^e)`.
    pub fn geom_inv(c: &MultiPoly, e: usize, order: usize) -> Result<QSeries, SeriesError> {
        if e == 0 {
            return Err(SeriesError::ZeroOffset { op: "geom_inv" });
        }
        let mut s = QSeries::zero(order);
        let mut power = MultiPoly::one();
        for n in (0..order).step_by(e) {
            s.coeffs[n] = power.clone();
            power = &power * c;
        }
        Ok(s)
    }

    /// Multiplicative inverse of a series with constant term exactly 1, via
    /// `g[0] = 1`, `g[n] = -sum_{k=1}^{n} f[k] g[n-k]`.
    pub fn unit_inv(&self) -> Result<QSeries, SeriesError> {
        let order = self.order();
        if order == 0 {
            return Ok(QSeries::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnit { constant: self.coeffs[0].to_string() });
        }
        let mut g: Vec<MultiPoly> = Vec::with_capacity(order);
        g.push(MultiPoly::one());
        for n in 1..order {
            let mut acc = MultiPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !g[n - k].is_zero() {
                    acc.add_mul(&self.coeffs[k], &g[n - k]);
                }
            }
            g.push(-acc);
        }
        Ok(QSeries { coeffs: g })
    }

    /// Compares coefficients `0..t`. Fails if `t` exceeds either order, so a
    /// short series can never pass vacuously.
    pub fn equal_upto(&self, other: &QSeries, t: usize) -> Result<Comparison, SeriesError> {
        let available = self.order().min(other.order());
        if t > available {
            return Err(SeriesError::OrderExceeded { requested: t, available });
        }
        for n in 0..t {
            if self.coeffs[n] != other.coeffs[n] {
                return Ok(Comparison::Mismatch(Mismatch {
                    exponent: n,
                    lhs: self.coeffs[n].to_string(),
                    rhs: other.coeffs[n].to_string(),
                }));
            }
        }
        Ok(Comparison::Match)
    }

    pub fn map_coeffs<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn substitute(&self, bindings: &BTreeMap<Symbol, BigInt>) -> QSeries {
        self.map_coeffs(|c| c.substitute(bindings))
    }

    /// Coefficient table rows `(n, text form of coeffs[n])`.
    pub fn table(&self) -> Vec<(usize, String)> {
        self.coeffs.iter().enumerate().map(|(n, c)| (n, c.to_string())).collect()
    }
}
