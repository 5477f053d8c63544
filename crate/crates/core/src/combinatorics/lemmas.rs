//! Single-color overpartition counting lemmas, checked by enumeration.
//!
//! With `z` marking overlined parts:
//!
//! - at most `i` parts, no zeros: `(-zq;q)_i / (q;q)_i`
//! - exactly `i` parts, no zeros: `q^i (-z;q)_i / (q;q)_i`
//! - exactly `i` parts, zeros allowed: `(-z;q)_i / (q;q)_i`
//!
//! Each lemma also has an alternative closed form; those are compared
//! against the primary one after clearing denominators.

use serde::Serialize;

use crate::polyring::{Monomial, MultiPoly, Symbol};
use crate::qseries::{Mismatch, QSeries};

use super::ColoredPart;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PartCount {
    AtMost(u32),
    Exactly(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    AtMostPositive,
    ExactlyPositive,
    ExactlyWithZero,
}

impl Lemma {
    pub const ALL: [Lemma; 3] = [Lemma::AtMostPositive, Lemma::ExactlyPositive, Lemma::ExactlyWithZero];

    fn regime(self, i: u32) -> (u32, PartCount) {
        match self {
            Lemma::AtMostPositive => (1, PartCount::AtMost(i)),
            Lemma::ExactlyPositive => (1, PartCount::Exactly(i)),
            Lemma::ExactlyWithZero => (0, PartCount::Exactly(i)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub lemma: Lemma,
    pub parts: u32,
    /// First exponent where enumeration and closed form disagree.
    pub mismatch: Option<Mismatch>,
    pub alternative_form_agrees: bool,
}

impl LemmaRow {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.alternative_form_agrees
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub max_parts: u32,
    pub order: usize,
    pub rows: Vec<LemmaRow>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(LemmaRow::passed)
    }
}

/// Single-color overpartitions of `n` with parts `>= min_part` (0 or 1) and
/// the given part-count constraint. Zero parts follow the same overline rule
/// as any other size.
pub fn enum_single_over(min_part: u32, count: PartCount, n: u32) -> Vec<Vec<ColoredPart>> {
    let max_parts = match count {
        PartCount::AtMost(i) | PartCount::Exactly(i) => i,
    };
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, min_part, n, max_parts, &mut current, &mut out);
    out.retain(|p| match count {
        PartCount::AtMost(_) => true,
        PartCount::Exactly(i) => p.len() == i as usize,
    });
    out
}

fn descend(
    size: u32,
    min_part: u32,
    remaining: u32,
    slots: u32,
    current: &mut Vec<ColoredPart>,
    out: &mut Vec<Vec<ColoredPart>>,
) {
    if size < min_part || (size == 0 && remaining > 0) {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    // multiplicity 0 for this size
    match size.checked_sub(1) {
        Some(next) => descend(next, min_part, remaining, slots, current, out),
        None => {
            if remaining == 0 {
                out.push(current.clone());
            }
        }
    }
    let max_mult = remaining.checked_div(size).map_or(slots, |m| slots.min(m));
    for mult in 1..=max_mult {
        for last_overlined in [false, true] {
            let before = current.len();
            for m in 0..mult {
                current.push(ColoredPart::new(size, 1, last_overlined && m + 1 == mult));
            }
            let rest = remaining - mult * size;
            match size.checked_sub(1) {
                Some(next) => descend(next, min_part, rest, slots - mult, current, out),
                None => {
                    if rest == 0 {
                        out.push(current.clone());
                    }
                }
            }
            current.truncate(before);
        }
    }
}

fn enumerated_series(min_part: u32, count: PartCount, order: usize) -> QSeries {
    let coeffs = (0..order as u32)
        .map(|n| {
            MultiPoly::from_terms(enum_single_over(min_part, count, n).into_iter().map(|p| {
                let overlines = p.iter().filter(|q| q.overlined).count() as u32;
                (1.into(), Monomial::pow_of(Symbol::Z(1), overlines))
            }))
        })
        .collect();
    QSeries::from_coeffs(coeffs)
}

fn z() -> MultiPoly {
    MultiPoly::var(Symbol::Z(1))
}

fn inv_qfactorial(i: u32, order: usize) -> QSeries {
    QSeries::poch_finite(&MultiPoly::constant(-1), 1, 1, i as usize, order).unit_inv().expect("constant term is 1")
}

/// `(-zq;q)_i / (q;q)_i`.
fn at_most_closed(i: u32, order: usize) -> QSeries {
    QSeries::poch_finite(&z(), 1, 1, i as usize, order).mul(&inv_qfactorial(i, order))
}

/// `(-z;q)_i / (q;q)_i`.
fn with_zero_closed(i: u32, order: usize) -> QSeries {
    QSeries::poch_finite(&z(), 0, 1, i as usize, order).mul(&inv_qfactorial(i, order))
}

/// `q^i (-z;q)_i / (q;q)_i`.
fn exactly_closed(i: u32, order: usize) -> QSeries {
    with_zero_closed(i, order).shift(i as usize)
}

fn alternative_agrees(lemma: Lemma, i: u32, order: usize) -> bool {
    let one_plus_z = &MultiPoly::one() + &z();
    match lemma {
        // (1 + z) (-zq;q)_i = (1 + z q^i) (-z;q)_i
        Lemma::AtMostPositive => {
            let lhs = QSeries::poch_finite(&z(), 1, 1, i as usize, order).mul_poly(&one_plus_z);
            let rhs = QSeries::poch_finite(&z(), 0, 1, i as usize, order).mul_binomial(&z(), i as usize);
            lhs == rhs
        }
        // difference of consecutive at-most series
        Lemma::ExactlyPositive => {
            let prev = if i == 0 { QSeries::zero(order) } else { at_most_closed(i - 1, order) };
            at_most_closed(i, order).sub(&prev) == exactly_closed(i, order)
        }
        // zeros either present (one fewer positive part, (1+z) for the zero run) or absent
        Lemma::ExactlyWithZero => {
            if i == 0 {
                return with_zero_closed(0, order) == QSeries::one(order);
            }
            let zeros = at_most_closed(i - 1, order).mul_poly(&one_plus_z);
            zeros.add(&exactly_closed(i, order)) == with_zero_closed(i, order)
        }
    }
}

/// Runs all three lemmas for `i = 1..=max_parts`, comparing coefficients below `order`.
pub fn verify_over_lemmas(max_parts: u32, order: usize) -> LemmaReport {
    let mut rows = Vec::new();
    for lemma in Lemma::ALL {
        for i in 1..=max_parts {
            let (min_part, count) = lemma.regime(i);
            let enumerated = enumerated_series(min_part, count, order);
            let closed = match lemma {
                Lemma::AtMostPositive => at_most_closed(i, order),
                Lemma::ExactlyPositive => exactly_closed(i, order),
                Lemma::ExactlyWithZero => with_zero_closed(i, order),
            };
            let mismatch = enumerated
                .equal_upto(&closed, order)
                .expect("both series have the requested order")
                .mismatch()
                .cloned();
            rows.push(LemmaRow {
                lemma,
                parts: i,
                mismatch,
                alternative_form_agrees: alternative_agrees(lemma, i, order),
            });
        }
    }
    LemmaReport { max_parts, order, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn literal(p: &[ColoredPart]) -> String {
        p.iter().map(|q| format!("{}{}", q.size, if q.overlined { "~" } else { "" })).collect::<Vec<_>>().join(",")
    }

    #[test]
    fn one_part_positive() {
        let got: Vec<String> = enum_single_over(1, PartCount::Exactly(1), 3).iter().map(|p| literal(p)).collect();
        assert_eq!(got, vec!["3", "3~"]);
        // q(1+z)/(1-q)
        let s = enumerated_series(1, PartCount::Exactly(1), 4);
        let expect = QSeries::from_coeffs(vec![
            MultiPoly::zero(),
            "1 + z1".parse().unwrap(),
            "1 + z1".parse().unwrap(),
            "1 + z1".parse().unwrap(),
        ]);
        assert_eq!(s, expect);
        assert_eq!(exactly_closed(1, 4), expect);
    }

    #[test]
    fn one_part_with_zero() {
        let got: Vec<String> = enum_single_over(0, PartCount::Exactly(1), 0).iter().map(|p| literal(p)).collect();
        assert_eq!(got, vec!["0", "0~"]);
        let s = enumerated_series(0, PartCount::Exactly(1), 4);
        assert!(s.coeffs().iter().all(|c| c == &"1 + z1".parse::<MultiPoly>().unwrap()));
        assert_eq!(with_zero_closed(1, 4), s);
    }

    #[test]
    fn two_parts_with_zero_listing() {
        let got: Vec<String> = enum_single_over(0, PartCount::Exactly(2), 1).iter().map(|p| literal(p)).collect();
        assert_eq!(got, vec!["1,0", "1,0~", "1~,0", "1~,0~"]);
        let got: Vec<String> = enum_single_over(0, PartCount::Exactly(2), 0).iter().map(|p| literal(p)).collect();
        assert_eq!(got, vec!["0,0", "0,0~"]);
    }

    #[test]
    fn at_most_counts() {
        // at most 2 parts of weight 2: 2, 2~, 1+1, 1+1~
        assert_eq!(enum_single_over(1, PartCount::AtMost(2), 2).len(), 4);
        assert_eq!(enum_single_over(1, PartCount::AtMost(1), 0).len(), 1);
    }

    #[test]
    fn small_report_passes() {
        let report = verify_over_lemmas(3, 8);
        assert_eq!(report.rows.len(), 9);
        assert!(report.passed(), "{report:?}");
    }
}
