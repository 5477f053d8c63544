//! Text, JSON and CSV renderings of the harness reports.
//!
//! JSON documents carry `"schema": 1`. In deterministic mode no timing is
//! emitted, so identical invocations produce identical bytes.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combinatorics::{BlockDecomposition, ColoredPartition, LemmaReport};
use crate::qseries::QSeries;

use super::{OracleReport, Status, VerifyReport, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected table, json or csv)")),
        }
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Match => "match",
        Status::Mismatch => "mismatch",
        Status::Error => "error",
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn verify_reports(reports: &[VerifyReport], format: Format, deterministic: bool) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("report serializes");
                    if !deterministic {
                        v["elapsed_ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
                    }
                    v
                })
                .collect();
            pretty(&json!({ "schema": SCHEMA_VERSION, "reports": items }))
        }
        Format::Csv => {
            let mut out = String::from("identity,colors,order,status,terms_built,mismatch_exponent,lhs,rhs");
            if !deterministic {
                out.push_str(",elapsed_ms");
            }
            out.push('\n');
            for r in reports {
                let (e, l, rh) = match &r.first_mismatch {
                    Some(m) => (m.exponent.to_string(), csv_field(&m.lhs), csv_field(&m.rhs)),
                    None => Default::default(),
                };
                write!(
                    out,
                    "{},{},{},{},{},{e},{l},{rh}",
                    r.identity.name,
                    r.identity.colors,
                    r.identity.order,
                    status_str(r.status),
                    r.terms_built
                )
                .unwrap();
                if !deterministic {
                    write!(out, ",{:.3}", r.elapsed.as_secs_f64() * 1e3).unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{:<18} {:>6} {:>5} {:>8} {:>5}{}\n",
                "identity",
                "colors",
                "order",
                "status",
                "terms",
                if deterministic { "" } else { "  elapsed" }
            );
            for r in reports {
                write!(
                    out,
                    "{:<18} {:>6} {:>5} {:>8} {:>5}",
                    r.identity.name.as_str(),
                    r.identity.colors,
                    r.identity.order,
                    status_str(r.status),
                    r.terms_built
                )
                .unwrap();
                if !deterministic {
                    write!(out, "  {:>8.3}s", r.elapsed.as_secs_f64()).unwrap();
                }
                out.push('\n');
                if let Some(m) = &r.first_mismatch {
                    writeln!(out, "  first mismatch at q^{}:\n    lhs: {}\n    rhs: {}", m.exponent, m.lhs, m.rhs)
                        .unwrap();
                }
                if let Some(msg) = &r.message {
                    writeln!(out, "  error: {msg}").unwrap();
                }
            }
            out
        }
    }
}

pub fn oracle_report(r: &OracleReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(r).expect("report serializes");
            v["schema"] = json!(SCHEMA_VERSION);
            v["passed"] = json!(r.passed());
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("n,count,matched\n");
            for row in &r.rows {
                writeln!(out, "{},{},{}", row.n, row.count, row.matched).unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = format!("oracle kind={} colors={} max_n={}\n", r.kind, r.colors, r.max_n);
            writeln!(out, "{:>4} {:>10} {:>8}", "n", "count", "status").unwrap();
            for row in &r.rows {
                writeln!(out, "{:>4} {:>10} {:>8}", row.n, row.count, if row.matched { "pass" } else { "FAIL" })
                    .unwrap();
            }
            if let Some(m) = &r.first_mismatch {
                writeln!(out, "first mismatch at n={}:\n  product: {}\n  enumerated: {}", m.exponent, m.lhs, m.rhs)
                    .unwrap();
            }
            writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
            out
        }
    }
}

pub fn lemma_report(r: &LemmaReport, format: Format) -> String {
    let lemma_name = |l| serde_json::to_value(l).unwrap().as_str().unwrap().to_string();
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(r).expect("report serializes");
            v["schema"] = json!(SCHEMA_VERSION);
            v["passed"] = json!(r.passed());
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("lemma,parts,enumeration_matches,alternative_form_agrees\n");
            for row in &r.rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    lemma_name(row.lemma),
                    row.parts,
                    row.mismatch.is_none(),
                    row.alternative_form_agrees
                )
                .unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = format!("overpartition lemmas, parts <= {}, order {}\n", r.max_parts, r.order);
            for row in &r.rows {
                writeln!(
                    out,
                    "{:<18} i={:<3} {}",
                    lemma_name(row.lemma),
                    row.parts,
                    if row.passed() { "pass" } else { "FAIL" }
                )
                .unwrap();
                if let Some(m) = &row.mismatch {
                    writeln!(out, "  q^{}: enumerated {} vs closed form {}", m.exponent, m.lhs, m.rhs).unwrap();
                }
            }
            writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
            out
        }
    }
}

pub fn decomposition(p: &ColoredPartition, d: &BlockDecomposition, format: Format) -> String {
    let parts = |v: &[crate::combinatorics::ColoredPart]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    match format {
        Format::Json | Format::Csv => {
            let rows: Vec<Value> = d
                .block2
                .iter()
                .map(|r| json!({ "length": r.length, "color": r.color, "overlined": r.overlined }))
                .collect();
            pretty(&json!({
                "schema": SCHEMA_VERSION,
                "partition": p.to_string(),
                "kind": p.kind(),
                "weight": p.weight(),
                "durfee": d.durfee,
                "block1_weight": d.block1_weight(),
                "block2": rows,
                "block2_weight": d.block2_weight(),
                "block3": parts(&d.block3),
                "block3_weight": d.block3_weight(),
                "block4": d.block4.to_string(),
                "block4_weight": d.block4_weight(),
                "monomial": p.monomial().to_string(),
            }))
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "partition  {p}  (weight {}, monomial {})", p.weight(), p.monomial()).unwrap();
            writeln!(out, "Block I    Durfee square {0}x{0}, weight {1}", d.durfee, d.block1_weight()).unwrap();
            writeln!(out, "Block II   weight {}", d.block2_weight()).unwrap();
            for (i, r) in d.block2.iter().enumerate() {
                writeln!(
                    out,
                    "  row {}: length {} color a{}{}",
                    i + 1,
                    r.length,
                    r.color,
                    if r.overlined { " overlined" } else { "" }
                )
                .unwrap();
            }
            writeln!(out, "Block III  [{}]  weight {}", parts(&d.block3), d.block3_weight()).unwrap();
            writeln!(out, "Block IV   [{}]  weight {}", d.block4, d.block4_weight()).unwrap();
            writeln!(
                out,
                "total      {} + {} + {} + {} = {}",
                d.block1_weight(),
                d.block2_weight(),
                d.block3_weight(),
                d.block4_weight(),
                d.weight()
            )
            .unwrap();
            out
        }
    }
}

/// Coefficient table: one row per exponent `n = 0..order`.
pub fn series_table(f: &QSeries, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = f.table().into_iter().map(|(n, c)| json!({ "n": n, "coefficient": c })).collect();
            pretty(&json!({ "schema": SCHEMA_VERSION, "order": f.order(), "coefficients": rows }))
        }
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (n, c) in f.table() {
                writeln!(out, "{n},{}", csv_field(&c)).unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for (n, c) in f.table() {
                writeln!(out, "q^{n:<4} {c}").unwrap();
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::durfee_decompose;
    use crate::harness::run_verify;
    use crate::identities::{IdentityName, IdentitySpec};

    #[test]
    fn deterministic_json_has_no_timing() {
        let spec = IdentitySpec::new(IdentityName::Sylvester, 1, 10).unwrap();
        let r = run_verify(&spec);
        let out = verify_reports(std::slice::from_ref(&r), Format::Json, true);
        assert!(!out.contains("elapsed"));
        assert!(out.contains("\"schema\": 1"));
        assert!(out.contains("\"status\": \"match\""));
        let again = verify_reports(&[run_verify(&spec)], Format::Json, true);
        assert_eq!(out, again);
        assert!(verify_reports(&[r], Format::Json, false).contains("elapsed_ms"));
    }

    #[test]
    fn series_csv() {
        let f = QSeries::from_coeffs(vec!["1".parse().unwrap(), "a1 + a1*z1".parse().unwrap()]);
        assert_eq!(series_table(&f, Format::Csv), "n,coefficient\n0,1\n1,a1 + a1*z1\n");
    }

    #[test]
    fn decomposition_table_mentions_blocks() {
        let p: ColoredPartition = "2[2]~,2[1],1[2]~,1[1],1[1]~".parse().unwrap();
        let d = durfee_decompose(&p).unwrap();
        let out = decomposition(&p, &d, Format::Table);
        assert!(out.contains("Durfee square 2x2"));
        assert!(out.contains("total      4 + 0 + 0 + 3 = 7"));
    }
}
