//! Verification runner: builds identity sides, compares them, and runs the
//! enumeration oracles. Rendering of the reports lives in [`render`].

pub mod render;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::combinatorics::{enumerate, PartitionKind};
use crate::identities::{overpartition_product, strict_product, IdentityName, IdentitySides, IdentitySpec};
use crate::polyring::MultiPoly;
use crate::qseries::Mismatch;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_ORDER: usize = 30;
pub const DEFAULT_COLORS: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: IdentitySpec,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub message: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub terms_built: usize,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }

    fn error(identity: IdentitySpec, message: String) -> Self {
        VerifyReport {
            identity,
            status: Status::Error,
            first_mismatch: None,
            message: Some(message),
            elapsed: Duration::ZERO,
            terms_built: 0,
        }
    }
}

/// Builds both sides of `spec` and compares them up to its order.
pub fn run_verify(spec: &IdentitySpec) -> VerifyReport {
    run_verify_with(spec, IdentitySpec::build)
}

/// [`run_verify`] with a caller-supplied builder, e.g. to inject a fault.
pub fn run_verify_with<F>(spec: &IdentitySpec, build: F) -> VerifyReport
where
    F: FnOnce(&IdentitySpec) -> IdentitySides,
{
    let spec = match IdentitySpec::new(spec.name, spec.colors, spec.order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::error(*spec, e.to_string()),
    };
    let start = Instant::now();
    let sides = build(&spec);
    let cmp = sides.lhs.equal_upto(&sides.rhs, spec.order);
    let elapsed = start.elapsed();
    match cmp {
        Ok(c) => VerifyReport {
            identity: spec,
            status: if c.is_match() { Status::Match } else { Status::Mismatch },
            first_mismatch: c.mismatch().cloned(),
            message: None,
            elapsed,
            terms_built: sides.terms_built,
        },
        Err(e) => VerifyReport { elapsed, ..VerifyReport::error(spec, e.to_string()) },
    }
}

/// Runs every catalog identity in name order, stopping after the first report
/// that is not a match.
pub fn run_all(colors: usize, order: usize) -> Vec<VerifyReport> {
    let mut names = IdentityName::ALL.to_vec();
    names.sort_by_key(|n| n.as_str());
    let mut out = Vec::new();
    for name in names {
        let report = match IdentitySpec::new(name, colors, order) {
            Ok(spec) => run_verify(&spec),
            Err(e) => VerifyReport::error(IdentitySpec { name, colors, order }, e.to_string()),
        };
        let stop = !report.is_match();
        out.push(report);
        if stop {
            break;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub n: u32,
    pub count: usize,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub kind: PartitionKind,
    pub colors: usize,
    pub max_n: u32,
    pub rows: Vec<OracleRow>,
    pub first_mismatch: Option<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the enumerated generating polynomial with the product-side
/// coefficient of `q^n` for every `n <= max_n`.
pub fn run_oracle(kind: PartitionKind, colors: usize, max_n: u32) -> OracleReport {
    let order = max_n as usize + 1;
    let product = match kind {
        PartitionKind::Strict => strict_product(colors, order),
        PartitionKind::Over => overpartition_product(colors, order),
    };
    let mut rows = Vec::new();
    let mut first_mismatch = None;
    for n in 0..=max_n {
        let all = enumerate(kind, colors, n);
        let poly = MultiPoly::from_terms(all.iter().map(|p| (1.into(), p.monomial())));
        let expected = product.coeff(n as usize);
        let matched = &poly == expected;
        if !matched && first_mismatch.is_none() {
            first_mismatch = Some(Mismatch { exponent: n as usize, lhs: expected.to_string(), rhs: poly.to_string() });
        }
        rows.push(OracleRow { n, count: all.len(), matched });
    }
    OracleReport { kind, colors, max_n, rows, first_mismatch }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::QSeries;

    #[test]
    fn small_verify_matches() {
        let spec = IdentitySpec::new(IdentityName::Alladi, 2, 8).unwrap();
        let r = run_verify(&spec);
        assert_eq!(r.status, Status::Match);
        assert_eq!(r.terms_built, 2);
        assert!(r.first_mismatch.is_none());
    }

    #[test]
    fn injected_fault_is_reported() {
        let spec = IdentitySpec::new(IdentityName::Pentagonal, 1, 10).unwrap();
        let r = run_verify_with(&spec, |s| {
            let mut sides = s.build();
            sides.lhs = sides.lhs.add(&QSeries::monomial(MultiPoly::one(), 3, s.order));
            sides
        });
        assert_eq!(r.status, Status::Mismatch);
        let m = r.first_mismatch.unwrap();
        assert_eq!((m.exponent, m.lhs.as_str(), m.rhs.as_str()), (3, "1", "0"));
    }

    #[test]
    fn invalid_spec_is_an_error_report() {
        let spec = IdentitySpec { name: IdentityName::Alladi, colors: 0, order: 10 };
        let r = run_verify(&spec);
        assert_eq!(r.status, Status::Error);
        assert!(r.message.unwrap().contains("colors"));
    }

    #[test]
    fn oracle_trivial_and_small() {
        let r = run_oracle(PartitionKind::Strict, 1, 0);
        assert!(r.passed());
        assert_eq!(r.rows, vec![OracleRow { n: 0, count: 1, matched: true }]);
        let r = run_oracle(PartitionKind::Over, 1, 5);
        assert!(r.passed());
        assert_eq!(r.rows.iter().map(|x| x.count).collect::<Vec<_>>(), vec![1, 2, 4, 8, 14, 24]);
    }

    #[test]
    fn run_all_is_sorted_and_complete() {
        let reports = run_all(2, 6);
        let names: Vec<&str> = reports.iter().map(|r| r.identity.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(reports.len(), IdentityName::ALL.len());
        assert!(reports.iter().all(VerifyReport::is_match));
    }
}
