use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> schubert::Outcome {
    let mut full = vec!["schubert"];
    full.extend_from_slice(args);
    schubert::run(full)
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a stored file; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap();
    assert_eq!(out.stdout, stored, "{name} drifted");
}

#[test]
fn golden_worked_example() {
    assert_golden("groth_25314.json", &["groth", "25314", "--json"]);
    assert_golden("diagram_25314.json", &["diagram", "25314", "--json"]);
    assert_golden("ideal_25314.json", &["ideal", "25314", "--expand", "--json"]);
    assert_golden("ideal_25314_effective.json", &["ideal", "25314", "--effective", "--json"]);
    assert_golden("hilbert_25314_full.json", &["hilbert", "25314", "--json"]);
    assert_golden("hilbert_25314_effective.json", &["hilbert", "25314", "--effective", "--json"]);
}

#[test]
fn worked_example_values() {
    let g = json(&["groth", "25314", "--json"]);
    assert_eq!(g["degree"], 6);
    assert_eq!(g["min_degree"], 5);

    let full = json(&["hilbert", "25314", "--json"]);
    assert_eq!(full["variable_count"], 25);
    assert_eq!(full["postulation"], -19);
    assert_eq!(full["regularity"], 1);
    assert_eq!(full["hilbertian"], true);

    let eff = json(&["hilbert", "25314", "--effective", "--json"]);
    assert_eq!(eff["variable_count"], 9);
    assert_eq!(eff["postulation"], -3);
    assert_eq!(eff["regularity"], 1);

    let ideal = json(&["ideal", "25314", "--json"]);
    let shapes: BTreeSet<(Vec<u64>, Vec<u64>)> = ideal["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| {
            let idx = |v: &Value| v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (idx(&m["rows"]), idx(&m["cols"]))
        })
        .collect();
    let mut expected: BTreeSet<(Vec<u64>, Vec<u64>)> =
        [(vec![1], vec![1]), (vec![2], vec![1]), (vec![3], vec![1])].into_iter().collect();
    for a in 1..=4 {
        for b in a + 1..=4 {
            expected.insert((vec![1, 2], vec![a, b]));
        }
    }
    assert_eq!(shapes, expected);
}

#[test]
fn groth_text_and_engines() {
    assert_eq!(run(&["groth", "132"]).stdout, "x1 + x2 - x1*x2\n");
    assert_eq!(run(&["groth", "1"]).stdout, "1\n");
    for w in ["2143", "3412", "25314"] {
        let a = json(&["groth", w, "--json"]);
        let b = json(&["groth", w, "--engine", "pipedream", "--json"]);
        assert_eq!(a["terms"], b["terms"], "{w}");
    }
}

#[test]
fn verify_reports_counts() {
    let out = run(&["verify", "--n", "4", "--checks", "degree-bound"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("24/24 permutations pass\n"), "{}", out.stdout);

    let out = run(&["verify", "--n", "3", "--checks", "engine-agreement,oracle,length-diagram", "--jobs", "2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("6/6 permutations pass"));
}

#[test]
fn json_is_stable_across_thread_counts() {
    let one = run(&["verify", "--n", "4", "--jobs", "1", "--json"]);
    let many = run(&["verify", "--n", "4", "--jobs", "4", "--json"]);
    assert_eq!(one.code, 0, "{}", one.stdout);
    assert_eq!(one.stdout, many.stdout);
    let doc: Value = serde_json::from_str(&one.stdout).unwrap();
    assert_eq!(doc["passing"], 24);
    assert_eq!(doc["dominant"], 14);
}

#[test]
fn oracle_subcommand() {
    let out = run(&["oracle", "132", "--k-max", "3"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.ends_with("PASS\n"));
    let doc = json(&["oracle", "2143", "--effective", "--k-max", "3", "--json"]);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["groth", "122"][..],
        &["groth", "abc"],
        &["hilbert", "25314", "--effective", "--n", "5"],
        &["hilbert", "25314", "--n", "3"],
        &["hilbert", "1", "--effective"],
        &["verify", "--n", "3", "--checks", "nonsense"],
        &["frobnicate"],
        &[],
    ] {
        let out = run(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn binary_honours_monomial_guard() {
    let bin = env!("CARGO_BIN_EXE_schubert");
    let out = Command::new(bin)
        .args(["oracle", "132", "--k-max", "3"])
        .env("SCHUBERT_MAX_MONOMIALS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too large"));

    let out = Command::new(bin).args(["groth", "132"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "x1 + x2 - x1*x2\n");
}
