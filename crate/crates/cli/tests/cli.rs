use std::process::{Command, Output};

use serde_json::Value;

fn amalgam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amalgam")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn report_squarefree_modulus() {
    let out = amalgam(&["report", "Z/6", "--ideal", "2", "--props", "vnr,reduced", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["dup"], "dup(Z/6; 2)");
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    for r in results {
        assert_eq!(r["report"]["verdict"], true, "{r}");
    }
}

#[test]
fn report_vnr_witness() {
    let out = amalgam(&["report", "Z/4", "--props", "vnr", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let rep = &doc["results"][0]["report"];
    assert_eq!(rep["verdict"], false);
    assert_eq!(rep["witness"], "2");
}

#[test]
fn report_steinitz_example_table() {
    let out = amalgam(&["report", "GF(2)[x]/(x^2)", "--ideal", "x", "--props", "steinitz"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("dup(GF(2)[x]/(x^2); x)")).unwrap();
    assert!(row.contains("steinitz") && row.contains("true"), "{row}");
}

#[test]
fn report_all_properties_by_default() {
    let out = amalgam(&["report", "Z/8", "--ideal", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"].as_array().unwrap().len(), 16);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["report", "Z/1"],
        vec!["report", "Q"],
        vec!["report", "Z/6", "--props", "shiny"],
        vec!["report", "Z/6", "--ideal", "1"],
        vec!["spectrum", "Z/6", "--ideal", "7x"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--format", "xml"],
    ] {
        let out = amalgam(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn spectrum_of_z6_along_two() {
    let out = amalgam(&["spectrum", "Z/6", "--ideal", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let sc = json(&out);
    assert_eq!(sc["dup_primes"], 3);
    assert_eq!(sc["expected_primes"], 3);
    assert_eq!(sc["sets_equal"], true);
    assert_eq!(sc["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn spectrum_of_local_ring_with_zero_ideal() {
    let out = amalgam(&["spectrum", "Z/4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("|Spec(R ⋈ I)| = 1, expected 1"), "{text}");
}

#[test]
fn spectrum_beyond_cap_is_a_check_failure() {
    let out = amalgam(&["spectrum", "Z/30", "--ideal", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = amalgam(&["spectrum", "Z", "--ideal", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zero_samples_mark_sampled_checks_skipped() {
    let out = amalgam(&["verify", "--samples", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["samples"], 0);
    for r in doc["resolutions"].as_array().unwrap() {
        assert_eq!(r["report"]["ker_u_equals_o2"]["status"], "Skipped", "{r}");
        assert_eq!(r["report"]["pd_verdict"], "Inconclusive");
    }
    let skipped = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["criterion"] == 3 && c["status"] == "Skipped")
        .count();
    assert!(skipped > 0);
}
