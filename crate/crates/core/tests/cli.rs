use std::process::{Command, Output};

fn qsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn verify_json_matches_golden() {
    let args =
        ["verify", "--identity", "alladi", "--colors", "2", "--order", "30", "--format", "json", "--deterministic"];
    let o = qsum(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("verify_alladi_r2_t30.json"));
    assert_eq!(stdout(&qsum(&args)), stdout(&o));
}

#[test]
fn verify_all_matches_golden() {
    let o = qsum(&["verify", "--all", "--order", "12", "--deterministic"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("verify_all_t12.txt"));
}

#[test]
fn nondeterministic_mode_reports_time() {
    let o = qsum(&["verify", "--identity", "pentagonal", "--order", "20", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("identity,colors,order,status,terms_built,mismatch_exponent,lhs,rhs,elapsed_ms\n"));
}

#[test]
fn oracle_passes() {
    let o = qsum(&["oracle", "--kind", "over", "--colors", "2", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.ends_with("PASS\n"));
    assert!(out.contains("   8       1356     pass"));
}

#[test]
fn decompose_weight_seven_example() {
    let o = qsum(&["decompose", "--partition", "2[2]~,2[1],1[2]~,1[1],1[1]~"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("decompose_weight7.txt"));
}

#[test]
fn decompose_json() {
    let o = qsum(&["decompose", "--partition", "3[1],2[2],2[1],1[2]", "--kind", "strict", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["durfee"], 2);
    assert_eq!(v["block3"], "2[1]");
    assert_eq!(v["block4"], "1[2]");
    assert_eq!(
        v["block1_weight"].as_u64().unwrap()
            + v["block2_weight"].as_u64().unwrap()
            + v["block3_weight"].as_u64().unwrap()
            + v["block4_weight"].as_u64().unwrap(),
        8
    );
}

#[test]
fn series_dump_writes_file() {
    let path = std::env::temp_dir().join(format!("qsum-series-{}.csv", std::process::id()));
    let o = qsum(&[
        "series",
        "--identity",
        "overpartition_cft",
        "--colors",
        "1",
        "--order",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text, "n,coefficient\n0,1\n1,a1 + a1*z1\n2,a1 + a1^2 + a1*z1 + a1^2*z1\n");
}

#[test]
fn lemmas_pass() {
    let o = qsum(&["lemmas", "--max-parts", "3", "--order", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 10);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--identity", "nope"][..],
        &["verify"],
        &["verify", "--identity", "alladi", "--colors", "0"],
        &["verify", "--identity", "alladi", "--order", "1"],
        &["verify", "--identity", "alladi", "--format", "xml"],
        &["oracle", "--kind", "weak", "--max-n", "3"],
        &["decompose", "--partition", "1[1]~,1[1]~"],
        &["decompose", "--partition", "1[1],1[1]", "--kind", "strict"],
        &["decompose", "--partition", "2[0]"],
        &["frobnicate"],
    ] {
        let o = qsum(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
