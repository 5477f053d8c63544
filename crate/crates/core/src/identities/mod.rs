//! Both sides of every identity in the catalog, built as truncated series.
//!
//! Each builder returns an [`IdentitySides`] whose `lhs` is the product side
//! and whose `rhs` is the summation side. The summation sides are finite
//! below any truncation order: the `N`-th outer term is divisible by
//! `q^{N^2}` (`q^{2N^2-N}` for the ped family), so builders stop at the last
//! `N` whose weight is below the order. The per-`N` terms are exposed
//! separately so they can be checked against Durfee-stratified enumeration.

mod classical;
mod multi;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::polyring::{MultiPoly, Symbol};
use crate::qseries::{QSeries, SeriesError};

pub use classical::{
    cauchy_classical, dousse_kim_term, pentagonal_bilateral, sylvester_term, theta_gauss_sum, theta_jacobi_sum,
};
pub use multi::{
    alladi_term, alladi_y_term, cauchy_multi_term, overpartition_product, overpartition_term, ped_term, strict_product,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    UnknownName(String),
    #[error("number of colors must be at least 1")]
    NoColors,
    #[error("truncation order must be at least 2, got {0}")]
    OrderTooSmall(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityName {
    Sylvester,
    Pentagonal,
    ThetaGauss,
    ThetaJacobi,
    Alladi,
    OverpartitionCft,
    CauchyMulti,
    DousseKim,
    Ped,
    AlladiY,
}

impl IdentityName {
    pub const ALL: [IdentityName; 10] = [
        IdentityName::Sylvester,
        IdentityName::Pentagonal,
        IdentityName::ThetaGauss,
        IdentityName::ThetaJacobi,
        IdentityName::Alladi,
        IdentityName::OverpartitionCft,
        IdentityName::CauchyMulti,
        IdentityName::DousseKim,
        IdentityName::Ped,
        IdentityName::AlladiY,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::Sylvester => "sylvester",
            IdentityName::Pentagonal => "pentagonal",
            IdentityName::ThetaGauss => "theta_gauss",
            IdentityName::ThetaJacobi => "theta_jacobi",
            IdentityName::Alladi => "alladi",
            IdentityName::OverpartitionCft => "overpartition_cft",
            IdentityName::CauchyMulti => "cauchy_multi",
            IdentityName::DousseKim => "dousse_kim",
            IdentityName::Ped => "ped",
            IdentityName::AlladiY => "alladi_y",
        }
    }

    pub fn entry(self) -> &'static CatalogEntry {
        CATALOG.iter().find(|e| e.name == self).expect("every name is registered")
    }

    /// Single-variable identities always run with one color.
    pub fn is_multi_color(self) -> bool {
        self.entry().term.is_some()
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| IdentityError::UnknownName(s.to_string()))
    }
}

impl Serialize for IdentityName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Which identity to build, with how many colors, to which order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentitySpec {
    pub name: IdentityName,
    pub colors: usize,
    pub order: usize,
}

impl IdentitySpec {
    /// Validates the spec; `colors` is forced to 1 for single-variable identities.
    pub fn new(name: IdentityName, colors: usize, order: usize) -> Result<Self, IdentityError> {
        if colors == 0 {
            return Err(IdentityError::NoColors);
        }
        if order < 2 {
            return Err(IdentityError::OrderTooSmall(order));
        }
        let colors = if name.is_multi_color() { colors } else { 1 };
        Ok(IdentitySpec { name, colors, order })
    }

    pub fn build(&self) -> IdentitySides {
        (self.name.entry().build)(self.colors, self.order)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySides {
    pub lhs: QSeries,
    pub rhs: QSeries,
    /// Number of outer-sum terms summed into `rhs`, excluding the leading 1.
    pub terms_built: usize,
}

impl IdentitySides {
    pub fn substitute(&self, bindings: &BTreeMap<Symbol, BigInt>) -> IdentitySides {
        IdentitySides {
            lhs: self.lhs.substitute(bindings),
            rhs: self.rhs.substitute(bindings),
            terms_built: self.terms_built,
        }
    }
}

/// Builder signature: `(colors, order)`.
pub type BuildFn = fn(usize, usize) -> IdentitySides;
/// Outer-term signature: `(colors, n, order)`.
pub type TermFn = fn(usize, usize, usize) -> QSeries;

/// One row of the identity registry.
pub struct CatalogEntry {
    pub name: IdentityName,
    pub build: BuildFn,
    /// `N`-th outer term of the summation side, for the multi-color builders.
    pub term: Option<TermFn>,
    /// q-exponent of the leading factor of the `N`-th outer term.
    pub term_weight: fn(usize) -> usize,
}

impl CatalogEntry {
    /// Largest `N` whose outer term can contribute below `order`.
    pub fn last_term(&self, order: usize) -> usize {
        let mut n = 0;
        while (self.term_weight)(n + 1) < order {
            n += 1;
        }
        n
    }
}

pub(crate) fn square_weight(n: usize) -> usize {
    n * n
}

pub(crate) fn ped_weight(n: usize) -> usize {
    (2 * n * n).saturating_sub(n)
}

pub(crate) fn pentagonal_weight(k: usize) -> usize {
    (3 * k * k).saturating_sub(k) / 2
}

pub static CATALOG: [CatalogEntry; 10] = [
    CatalogEntry {
        name: IdentityName::Sylvester,
        build: |_, t| classical::build_sylvester(t),
        term: None,
        term_weight: pentagonal_weight,
    },
    CatalogEntry {
        name: IdentityName::Pentagonal,
        build: |_, t| classical::build_pentagonal(t),
        term: None,
        term_weight: pentagonal_weight,
    },
    CatalogEntry {
        name: IdentityName::ThetaGauss,
        build: |_, t| classical::build_theta_gauss(t),
        term: None,
        term_weight: square_weight,
    },
    CatalogEntry {
        name: IdentityName::ThetaJacobi,
        build: |_, t| classical::build_theta_jacobi(t),
        term: None,
        term_weight: ped_weight,
    },
    CatalogEntry {
        name: IdentityName::Alladi,
        build: multi::build_alladi,
        term: Some(multi::alladi_term),
        term_weight: square_weight,
    },
    CatalogEntry {
        name: IdentityName::OverpartitionCft,
        build: multi::build_overpartition_cft,
        term: Some(multi::overpartition_term),
        term_weight: square_weight,
    },
    CatalogEntry {
        name: IdentityName::CauchyMulti,
        build: multi::build_cauchy_multi,
        term: Some(multi::cauchy_multi_term),
        term_weight: square_weight,
    },
    CatalogEntry {
        name: IdentityName::DousseKim,
        build: |_, t| classical::build_dousse_kim(t),
        term: None,
        term_weight: square_weight,
    },
    CatalogEntry {
        name: IdentityName::Ped,
        build: multi::build_ped,
        term: Some(multi::ped_term),
        term_weight: ped_weight,
    },
    CatalogEntry {
        name: IdentityName::AlladiY,
        build: multi::build_alladi_y,
        term: Some(multi::alladi_y_term),
        term_weight: square_weight,
    },
];

/// `1 + sum_{N=1}^{last} term(N)`, with the outer terms built in parallel.
pub(crate) fn sum_outer_terms<F>(last: usize, order: usize, term: F) -> QSeries
where
    F: Fn(usize) -> QSeries + Sync + Send,
{
    let tail = (1..=last).into_par_iter().map(term).reduce(|| QSeries::zero(order), |x, y| x.add(&y));
    QSeries::one(order).add(&tail)
}

/// Embeds a series computed to `order - shift` as `q^shift * f` at `order`.
pub(crate) fn shifted_into(f: &QSeries, shift: usize, order: usize) -> QSeries {
    let mut coeffs = vec![MultiPoly::zero(); order];
    for (n, c) in f.coeffs().iter().enumerate() {
        if n + shift < order {
            coeffs[n + shift] = c.clone();
        }
    }
    QSeries::from_coeffs(coeffs)
}

/// All `(i_1, ..., i_r)` of nonnegative integers summing to `total`, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for i in 0..=left {
            prefix.push(i);
            go(left - i, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Applies the `a_i -> a_i/z_i, z_i -> infinity` limit to every coefficient.
pub fn strict_limit_series(f: &QSeries) -> Result<QSeries, SeriesError> {
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(exponent, c)| c.strict_limit().map_err(|source| SeriesError::Coefficient { exponent, source }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QSeries::from_coeffs(coeffs))
}

/// Bindings setting every listed symbol to `value`.
pub fn bind_all<I: IntoIterator<Item = Symbol>>(symbols: I, value: i64) -> BTreeMap<Symbol, BigInt> {
    symbols.into_iter().map(|s| (s, BigInt::from(value))).collect()
}

pub fn a_symbols(r: usize) -> impl Iterator<Item = Symbol> {
    (1..=r as u32).map(Symbol::A)
}

pub fn z_symbols(r: usize) -> impl Iterator<Item = Symbol> {
    (1..=r as u32).map(Symbol::Z)
}
