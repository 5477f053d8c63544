//! Colored strict partitions and colored overpartitions as explicit objects.
//!
//! Parts are ordered by the generalized order `1_{a1} < 1_{a2} < ... <
//! 1_{ar} < 2_{a1} < ...`, i.e. by `(size, color)`, and a partition lists its
//! parts from largest to smallest. In an overpartition only the last copy of
//! each `(size, color)` run may carry an overline.
//!
//! Everything here is brute force on purpose: these are the oracles the
//! series builders are checked against.

mod decompose;
mod enumerate;
mod lemmas;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::polyring::{Monomial, Symbol};

pub use decompose::{durfee_decompose, durfee_size, recompose, Block2Row, BlockDecomposition};
pub use enumerate::{durfee_stratified_poly, enum_over, enum_strict, enumerate, gen_poly};
pub use lemmas::{enum_single_over, verify_over_lemmas, Lemma, LemmaReport, LemmaRow, PartCount};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionKind {
    Strict,
    Over,
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionKind::Strict => "strict",
            PartitionKind::Over => "over",
        })
    }
}

impl FromStr for PartitionKind {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(PartitionKind::Strict),
            "over" => Ok(PartitionKind::Over),
            other => Err(PartitionError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("unknown partition kind {0:?} (expected strict or over)")]
    UnknownKind(String),
    #[error("malformed part {token:?}: expected size[color] with an optional trailing ~")]
    Syntax { token: String },
    #[error("part {index} has size 0")]
    ZeroSize { index: usize },
    #[error("part {index} has color 0; colors start at 1")]
    ZeroColor { index: usize },
    #[error("part {index} breaks the decreasing generalized order")]
    NotSorted { index: usize },
    #[error("part {size}[{color}] repeats in a strict partition")]
    RepeatedStrictPart { size: u32, color: u32 },
    #[error("part {index} is overlined in a strict partition")]
    OverlineInStrict { index: usize },
    #[error("overline on {size}[{color}] is not on the last copy of that part")]
    OverlineNotLast { size: u32, color: u32 },
    #[error("the empty partition has no Durfee square")]
    Empty,
    #[error("inconsistent blocks: {0}")]
    InconsistentBlocks(String),
}

/// One part `size_{a_color}`, possibly overlined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPart {
    pub size: u32,
    pub color: u32,
    pub overlined: bool,
}

impl ColoredPart {
    pub fn new(size: u32, color: u32, overlined: bool) -> Self {
        ColoredPart { size, color, overlined }
    }

    /// Position in the generalized order.
    pub fn key(&self) -> (u32, u32) {
        (self.size, self.color)
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]{}", self.size, self.color, if self.overlined { "~" } else { "" })
    }
}

impl FromStr for ColoredPart {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || PartitionError::Syntax { token: s.to_string() };
        let t = s.trim();
        let (body, overlined) = match t.strip_suffix('~') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let (size, rest) = body.split_once('[').ok_or_else(syntax)?;
        let color = rest.strip_suffix(']').ok_or_else(syntax)?;
        let size = size.trim().parse().map_err(|_| syntax())?;
        let color = color.trim().parse().map_err(|_| syntax())?;
        Ok(ColoredPart { size, color, overlined })
    }
}

/// A validated colored partition, parts in decreasing generalized order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
    kind: PartitionKind,
}

impl ColoredPartition {
    pub fn empty(kind: PartitionKind) -> Self {
        ColoredPartition { parts: Vec::new(), kind }
    }

    /// Checks ordering, positivity and the strict/overline rules.
    pub fn new(kind: PartitionKind, parts: Vec<ColoredPart>) -> Result<Self, PartitionError> {
        for (index, p) in parts.iter().enumerate() {
            if p.size == 0 {
                return Err(PartitionError::ZeroSize { index });
            }
            if p.color == 0 {
                return Err(PartitionError::ZeroColor { index });
            }
            if kind == PartitionKind::Strict && p.overlined {
                return Err(PartitionError::OverlineInStrict { index });
            }
        }
        for (index, w) in parts.windows(2).enumerate() {
            let (prev, next) = (w[0], w[1]);
            if prev.key() < next.key() {
                return Err(PartitionError::NotSorted { index: index + 1 });
            }
            if prev.key() == next.key() {
                if kind == PartitionKind::Strict {
                    return Err(PartitionError::RepeatedStrictPart { size: prev.size, color: prev.color });
                }
                if prev.overlined {
                    return Err(PartitionError::OverlineNotLast { size: prev.size, color: prev.color });
                }
            }
        }
        Ok(ColoredPartition { parts, kind })
    }

    /// Parses a comma-separated literal such as `2[2]~,2[1],1[2]~,1[1],1[1]~`.
    pub fn parse(kind: PartitionKind, literal: &str) -> Result<Self, PartitionError> {
        let literal = literal.trim();
        if literal.is_empty() {
            return Ok(Self::empty(kind));
        }
        let parts = literal.split(',').map(str::parse).collect::<Result<Vec<ColoredPart>, _>>()?;
        Self::new(kind, parts)
    }

    pub(crate) fn from_sorted_unchecked(kind: PartitionKind, parts: Vec<ColoredPart>) -> Self {
        debug_assert!(Self::new(kind, parts.clone()).is_ok());
        ColoredPartition { parts, kind }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.size).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.size)
    }

    /// `prod_j a_j^{#parts of color j} z_j^{#overlined parts of color j}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(self.parts.iter().flat_map(|p| {
            let a = (Symbol::A(p.color), 1);
            let z = (Symbol::Z(p.color), u32::from(p.overlined));
            [a, z]
        }))
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses as an overpartition, the weaker of the two rule sets.
impl FromStr for ColoredPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(PartitionKind::Over, s)
    }
}
