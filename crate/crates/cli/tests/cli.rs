use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn mutvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutvis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn structured(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--output", "structured"]);
    let out = mutvis(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn coefficients(doc: &Value) -> Vec<String> {
    doc["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

fn strs(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn poly_examples() {
    let doc = structured(&["poly", "--family", "petersen", "--variant", "outer"]);
    assert_eq!(coefficients(&doc), strs(&["1", "10", "30", "30", "5"]));
    assert_eq!(doc["provenance"], "exhaustive");
    assert_eq!(doc["kind"], "polynomial");

    let doc = structured(&["poly", "--family", "path", "--params", "5", "--variant", "dual"]);
    assert_eq!(coefficients(&doc), strs(&["1", "2", "3"]));

    let dir = tempfile::tempdir().unwrap();
    let k2 = dir.path().join("k2.txt");
    fs::write(&k2, "2 1\n0 1\n").unwrap();
    let doc = structured(&["poly", "--input", k2.to_str().unwrap(), "--variant", "mv"]);
    assert_eq!(coefficients(&doc), strs(&["1", "2", "1"]));
    assert!(doc["input"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn spectrum_examples() {
    let c = |args: &[&str]| coefficients(&structured(args));
    assert_eq!(c(&["spectrum", "--family", "cycle", "--params", "4"]), strs(&["1", "4", "4", "4"]));
    assert_eq!(c(&["spectrum", "--family", "g_n", "--params", "2"]), strs(&["1", "0", "4"]));
    assert_eq!(c(&["spectrum", "--family", "cycle", "--params", "8"]), strs(&["1"]));
}

#[test]
fn check_examples() {
    let v = |args: &[&str]| structured(args)["value"].as_bool().unwrap();
    assert!(v(&["check", "--family", "cycle", "--params", "6", "--variant", "dual", "--set", "0,1"]));
    let doc = structured(&["check", "--family", "cycle", "--params", "7", "--variant", "total", "--set", "0,1"]);
    assert_eq!(doc["value"], false);
    assert_eq!(doc["report"]["naive"], false);
    assert_eq!(doc["report"]["distance_two"], false);
    for variant in ["mv", "dual", "outer", "total"] {
        assert!(v(&["check", "--family", "petersen", "--variant", variant, "--set", ""]));
    }
}

#[test]
fn analyze_examples() {
    let r = |args: &[&str]| structured(args)["report"].clone();
    let p = r(&["analyze", "--family", "petersen"]);
    assert_eq!(p["geodetic"], true);
    assert_eq!(p["simplicial"], serde_json::json!([]));
    assert_eq!(p["bypass"], serde_json::json!([]));
    assert_eq!(p["mu_t"], 0);

    let p6 = r(&["analyze", "--family", "path", "--params", "6"]);
    assert_eq!(p6["simplicial"], serde_json::json!([0, 5]));
    assert_eq!(p6["bypass"], serde_json::json!([0, 5]));

    let k4 = r(&["analyze", "--family", "complete", "--params", "4"]);
    assert_eq!(k4["geodetic"], true);
    assert_eq!(k4["simplicial"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(k4["mu_t"], 4);

    let c4 = r(&["analyze", "--family", "cycle", "--params", "4"]);
    assert_eq!(c4["geodetic"], false);
    assert!(c4.get("mu_t").is_none());
}

#[test]
fn construct_then_parse_gives_identical_results() {
    let dir = tempfile::tempdir().unwrap();
    for (family, params) in [("petersen", ""), ("g_n", "3"), ("f_one_ell", "1"), ("complete_bipartite", "3,3")] {
        let mut args = vec!["construct", "--family", family];
        if !params.is_empty() {
            args.extend(["--params", params]);
        }
        let out = mutvis(&args);
        assert!(out.status.success());
        let file = dir.path().join(format!("{family}.txt"));
        fs::write(&file, &out.stdout).unwrap();
        let file = file.to_str().unwrap();
        for variant in ["mv", "dual", "outer", "total"] {
            let mut from_family = args.clone();
            from_family[0] = "poly";
            from_family.extend(["--variant", variant]);
            let a = structured(&from_family);
            let b = structured(&["poly", "--input", file, "--variant", variant]);
            for key in ["variant", "kind", "coefficients", "value", "provenance"] {
                assert_eq!(a[key], b[key], "{family} {variant} {key}");
            }
        }
    }
}

#[test]
fn construct_writes_exact_edge_list() {
    let out = mutvis(&["construct", "--family", "path", "--params", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "# path(3): 3 vertices, 2 edges\n3 2\n0 1\n1 2\n");
    let doc = structured(&["construct", "--family", "g_n", "--params", "2"]);
    assert_eq!(doc["report"]["n"], 8);
    assert_eq!(doc["report"]["names"]["u"], 0);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(mutvis(&["poly"]).status.code(), Some(2));
    assert_eq!(mutvis(&["poly", "--family", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        mutvis(&["check", "--family", "cycle", "--params", "4", "--set", "7"]).status.code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 2\n0 1\n").unwrap();
    assert_eq!(mutvis(&["poly", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
    let disconnected = dir.path().join("disc.txt");
    fs::write(&disconnected, "4 2\n0 1\n2 3\n").unwrap();
    assert_eq!(
        mutvis(&["analyze", "--input", disconnected.to_str().unwrap()]).status.code(),
        Some(2)
    );

    // resource limit
    let big = mutvis(&["poly", "--family", "cycle", "--params", "30"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&big.stderr).contains("--max-n"));
    let big = mutvis(&["spectrum", "--family", "cycle", "--params", "30"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&big.stderr).contains("lemma-assisted"));
}

#[test]
fn large_inputs_use_closed_forms_or_lemma_assisted_search() {
    let doc = structured(&["poly", "--family", "path", "--params", "40", "--variant", "mv"]);
    assert_eq!(doc["provenance"], "closed-form");
    assert_eq!(coefficients(&doc), strs(&["1", "40", "780"]));

    let doc = structured(&["spectrum", "--family", "f_t", "--params", "2,1", "--lemma-assisted"]);
    assert_eq!(doc["provenance"], "lemma-assisted");
    assert_eq!(coefficients(&doc), strs(&["1", "0", "1"]));
}

#[test]
fn verify_paper_with_small_limit_skips_and_passes() {
    let out = mutvis(&["verify-paper", "--max-n", "10"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("skipped"));
    assert!(text.contains("0 of 10 criteria failed"));
    assert!(!text.contains("[FAIL]"));

    let doc = structured(&["verify-paper", "--max-n", "10"]);
    assert_eq!(doc["value"], true);
    let criteria = doc["report"].as_array().unwrap();
    assert_eq!(criteria.len(), 10);
    assert!(criteria
        .iter()
        .flat_map(|c| c["checks"].as_array().unwrap())
        .any(|check| check["status"] == "SKIPPED"));
}
