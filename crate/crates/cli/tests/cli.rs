use std::process::{Command, Output};

fn nog4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nog4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_text() {
    let o = nog4(&["invariants", "6", "5"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("σ(p,q) = 16"), "{s}");
    assert!(s.contains("Arf = 1"));
    assert!(s.contains("υ = -6"));
    assert!(s.contains("= 6 (closed form), 6 (Alexander) ✓"));
}

#[test]
fn invariants_unknot_and_ascii() {
    let o = nog4(&["--ascii", "invariants", "1", "9"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("unknot"));
    assert!(
        s.contains("sigma(p,q) = 0") && s.contains("upsilon = 0"),
        "{s}"
    );
    assert!(s.is_ascii());
}

#[test]
fn invalid_input_exits_two() {
    let o = nog4(&["invariants", "4", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("coprime"));
    assert_eq!(nog4(&["bounds", "0", "3"]).status.code(), Some(2));
    assert_eq!(nog4(&["bounds", "-2", "3"]).status.code(), Some(2));
    assert_eq!(nog4(&["table", "1", "1", "5"]).status.code(), Some(2));
    assert_eq!(nog4(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn dump_alexander_lines() {
    let o = nog4(&[
        "invariants",
        "3",
        "4",
        "--format",
        "csv",
        "--dump-alexander",
    ]);
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "p,q,sigma,arf,upsilon,d,d_oracle,d_agree");
    assert_eq!(lines[1], "3,4,6,1,-2,2,2,true");
    assert_eq!(&lines[2..], ["-3\t1", "-2\t-1", "0\t1", "2\t-1", "3\t1"]);
}

#[test]
fn invariants_json_round_trip() {
    let o = nog4(&[
        "invariants",
        "6",
        "13",
        "--format",
        "json",
        "--dump-alexander",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sigma"], 36);
    assert_eq!(v["upsilon"], -18);
    assert_eq!(v["d"], 18);
    assert_eq!(v["d_oracle"], 18);
    assert_eq!(v["alexander"].as_array().unwrap().len() % 2, 1);
}

#[test]
fn bounds_text() {
    let s = stdout(&nog4(&["bounds", "5", "6"]));
    assert!(s.contains("γ₄ = 2 (exact)"), "{s}");
    assert!(s.contains("pinch-theorem") && s.contains("sigma+4arf"));
    let s = stdout(&nog4(&["bounds", "6", "13"]));
    assert!(s.contains("γ₄ ∈ [1, 2]"), "{s}");
    assert!(s.contains("curated") && s.contains("band-move"));
    let s = stdout(&nog4(&["bounds", "6", "35"]));
    assert!(s.contains("γ₄ ∈ [2, 3]"), "{s}");
    let s = stdout(&nog4(&["--ascii", "bounds", "7", "10"]));
    assert!(s.contains("g4 in [1, ?]"), "{s}");
}

#[test]
fn bounds_json_fields() {
    let v: serde_json::Value =
        serde_json::from_slice(&nog4(&["bounds", "6", "7", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["lower"], 2);
    assert_eq!(v["upper"], 3);
    assert_eq!(v["exact"], false);
    assert!(v["provenance"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["citation"].is_string()));
}

#[test]
fn table_five_matches_sigma_arf_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t5.csv");
    let o = nog4(&["table", "5", "1", "41", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "q,residue_2p,sigma,arf,sigma_arf_mod8,upsilon,ups_sigma_abs,d,batson,g4_lower,g4_upper,exact"
    );
    let mut qs = Vec::new();
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let q: i64 = f[0].parse().unwrap();
        qs.push(q);
        let expected = if matches!(q % 10, 4 | 6) { "4" } else { "0" };
        assert_eq!(f[4], expected, "{line}");
    }
    assert!(qs.windows(2).all(|w| w[0] < w[1]));
    assert!(!qs.contains(&5) && !qs.contains(&40));
}

#[test]
fn table_six_columns() {
    let s = stdout(&nog4(&["table", "6", "5", "29"]));
    for line in s.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (mod8, batson) = match f[0].parse::<i64>().unwrap() % 12 {
            1 => ("0", "0"),
            5 => ("4", "2"),
            7 => ("2", "-3"),
            11 => ("6", "-1"),
            _ => unreachable!(),
        };
        assert_eq!((f[4], f[8]), (mod8, batson), "{line}");
    }
}

#[test]
fn table_output_is_deterministic() {
    let a = nog4(&["table", "6", "1", "200", "--format", "json"]);
    let b = nog4(&["table", "6", "1", "200", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["q"], 1);
    assert!(rows.iter().all(|r| r["g4_lower"].as_i64().unwrap() >= 0));
    let c1 = nog4(&["table", "5", "2", "60"]);
    let c2 = nog4(&["table", "5", "2", "60"]);
    assert_eq!(c1.stdout, c2.stdout);
}

#[test]
fn table_unwritable_path() {
    let o = nog4(&["table", "5", "1", "10", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.tsv");
    let o = nog4(&[
        "verify",
        "--p-max",
        "2",
        "--q-max",
        "3",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(
        report
            .lines()
            .any(|l| l == "d_formula_vs_alexander\t1\t0\t-"),
        "{report}"
    );
    assert!(report.lines().all(|l| l.split('\t').count() == 4));
}

#[test]
fn verify_default_sweep_passes() {
    let o = nog4(&["verify", "--p-max", "8", "--q-max", "80"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_catches_mutations() {
    for m in [
        "truncating-division",
        "upsilon-index-up",
        "upsilon-index-down",
    ] {
        let o = nog4(&["verify", "--p-max", "8", "--q-max", "80", "--mutation", m]);
        assert_eq!(o.status.code(), Some(1), "{m}");
        let report = stdout(&o);
        let failing = report
            .lines()
            .find(|l| l.split('\t').nth(2) != Some("0"))
            .unwrap_or_else(|| panic!("{m}: no failing line"));
        assert!(
            failing.split('\t').nth(3).unwrap().starts_with("T("),
            "{failing}"
        );
    }
}

#[test]
fn verify_rejects_bad_ranges() {
    assert_eq!(
        nog4(&["verify", "--p-max", "1", "--q-max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nog4(&["verify", "--p-max", "9", "--q-max", "3"])
            .status
            .code(),
        Some(2)
    );
}
