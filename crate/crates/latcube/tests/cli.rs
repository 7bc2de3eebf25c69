//! End-to-end checks of the command-line surface: exit codes, output
//! determinism, and JSON round-trips.

use latcube::cli::run_with_output;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with_output(args.iter().map(|s| s.to_string()), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("latcube-test-{name}-{}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

const BOOL4: &str = r#"{"elements": ["0", "a", "b", "1"],
    "leq": [["0","a"], ["0","b"], ["a","1"], ["b","1"]]}"#;

const CHAIN3: &str = r#"{"elements": ["0", "m", "1"],
    "leq": [["0","m"], ["m","1"]]}"#;

#[test]
fn normalize_idempotent_join() {
    let (code, out, _) = run(&["normalize", "-n", "2", "(x0 v x1) ^ (x0 v x1)"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x0 v x1\n");
}

#[test]
fn normalize_de_morgan() {
    let (code, out, _) = run(&["normalize", "-n", "2", "~(x0 v x1)", "--theory", "dm"]);
    assert_eq!(code, 0);
    assert_eq!(out, "~x0 ^ ~x1\n");
}

#[test]
fn normalize_rejects_negation_in_dl() {
    let (code, _, err) = run(&["normalize", "-n", "1", "~x0"]);
    assert_eq!(code, 2);
    assert!(err.contains("De Morgan"));
}

#[test]
fn normalize_out_of_range_generator() {
    let (code, _, _) = run(&["normalize", "-n", "1", "x5"]);
    assert_eq!(code, 2);
}

#[test]
fn enumerate_counts() {
    let (code, out, _) = run(&["enumerate", "-n", "3", "--count"]);
    assert_eq!(code, 0);
    assert_eq!(out, "20\n");
    let (code, out, _) = run(&["enumerate", "-n", "1", "--count", "--theory", "dm"]);
    assert_eq!(code, 0);
    assert_eq!(out, "6\n");
    let (code, out, _) = run(&["enumerate", "-n", "2", "--count", "--theory", "bipointed"]);
    assert_eq!(code, 0);
    assert_eq!(out, "4\n");
}

#[test]
fn enumerate_over_capacity() {
    let (code, _, err) = run(&["enumerate", "-n", "5", "--count"]);
    assert_eq!(code, 3);
    assert!(err.contains("capacity"));
}

#[test]
fn hom_counts() {
    let (code, out, _) = run(&["hom", "-m", "2", "-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "36\n");
    let (code, out, _) = run(&["hom", "-m", "2", "-n", "1", "--theory", "bipointed"]);
    assert_eq!(code, 0);
    assert_eq!(out, "4\n");
}

#[test]
fn flat_refutes_boolean_four() {
    let path = write_temp("bool4", BOOL4);
    let (code, out, _) = run(&[
        "flat",
        "--lattice",
        path.to_str().unwrap(),
        "--bounds",
        "1,2,2",
    ]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["status"], "refuted");
    assert_eq!(report["counterexample"]["alpha"], "cube 2 -> 1 : [x0 v x1]");
    assert_eq!(report["counterexample"]["beta"], "cube 2 -> 1 : [1]");
    assert_eq!(report["counterexample"]["point"][0], "a");
    assert_eq!(report["counterexample"]["point"][1], "b");
}

#[test]
fn flat_passes_the_chain() {
    let path = write_temp("chain3", CHAIN3);
    let (code, out, _) = run(&[
        "flat",
        "--lattice",
        path.to_str().unwrap(),
        "--bounds",
        "2,2,3",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["status"], "flat_up_to_bounds");
    assert_eq!(report["inhabited"], true);
    assert_eq!(report["transitive"], true);
}

#[test]
fn disjunction_exit_codes() {
    let path = write_temp("bool4-disj", BOOL4);
    let (code, out, _) = run(&["disjunction", "--lattice", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("counterexample"));
    let path = write_temp("chain3-disj", CHAIN3);
    let (code, out, _) = run(&["disjunction", "--lattice", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("pass"));
}

#[test]
fn dual_roundtrips_through_its_own_output() {
    let path = write_temp("bool4-dual", BOOL4);
    let (code, out, _) = run(&["dual", "--lattice", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    // the output is itself a poset description
    let poset_path = write_temp("bool4-dual-poset", &out);
    let (code, out2, _) = run(&["dual", "--poset", poset_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    // downsets of the 2-antichain: back to a 4-element lattice
    let report: serde_json::Value = serde_json::from_str(&out2).unwrap();
    assert_eq!(report["elements"].as_array().unwrap().len(), 4);
    // and that lattice is again valid input
    let lattice_path = write_temp("bool4-dual-lattice", &out2);
    let (code, _, _) = run(&["dual", "--lattice", lattice_path.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn realize_is_byte_identical_across_runs() {
    let (code, off1, _) = run(&["realize", "--input", "torus", "--samples", "3"]);
    assert_eq!(code, 0);
    let (_, off2, _) = run(&["realize", "--input", "torus", "--samples", "3"]);
    assert_eq!(off1, off2);
    assert!(off1.starts_with("OFF\n"));
}

#[test]
fn flat_reports_are_byte_identical_despite_parallel_search() {
    let path = write_temp("bool4-det", BOOL4);
    let (_, first, _) = run(&[
        "flat",
        "--lattice",
        path.to_str().unwrap(),
        "--bounds",
        "1,2,2",
    ]);
    for _ in 0..3 {
        let (_, again, _) = run(&[
            "flat",
            "--lattice",
            path.to_str().unwrap(),
            "--bounds",
            "1,2,2",
        ]);
        assert_eq!(first, again);
    }
}

#[test]
fn realize_json_reports_euler() {
    let (code, out, _) = run(&["realize", "--input", "torus", "--format", "json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["euler_characteristic"], 0);
    assert_eq!(report["points"].as_array().unwrap().len(), 4);
}

#[test]
fn realize_reads_presentation_files() {
    let circle = r#"{"dims": 1, "cells": {"0": ["v"], "1": ["e"]},
                     "faces": {"e": {"d0-": "v", "d0+": "v"}}}"#;
    let path = write_temp("circle-pres", circle);
    let (code, out, _) = run(&[
        "realize",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--samples",
        "4",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["euler_characteristic"], 0);
}

#[test]
fn triangulate_builtin_counts() {
    let (code, out, _) = run(&["triangulate", "--input", "cube-boundary"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["euler_characteristic"], 2);
    assert_eq!(report["counts_per_dim"][0], 8);
    assert_eq!(report["counts_per_dim"][1], 18);
    assert_eq!(report["counts_per_dim"][2], 12);
}

#[test]
fn moore_validates_and_reverses() {
    let (code, out, _) = run(&[
        "moore",
        "--input",
        "two-cycle",
        "--edges",
        "e,f,e",
        "--reverse",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["source"], "u");
    assert_eq!(report["target"], "w");
    assert_eq!(report["reversed"]["source"], "w");
    assert_eq!(report["reversed"]["edges"][0], "f");
}

#[test]
fn moore_rejects_non_composable_edges() {
    let (code, _, err) = run(&["moore", "--input", "chain3", "--edges", "g1,g3"]);
    assert_eq!(code, 2);
    assert!(err.contains("compose"));
}

#[test]
fn moore_contract_reports_the_staircase() {
    let (code, out, _) = run(&[
        "moore",
        "--input",
        "chain3",
        "--edges",
        "g1,g2,g3",
        "--contract",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = report["staircase"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].as_array().unwrap().len(), 3);
}

#[test]
fn compare_bipointed_shows_missing_connections() {
    let (code, out, _) = run(&["compare-bipointed", "-m", "2", "-n", "1"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["image_count"], 4);
    assert_eq!(report["cube_count"], 6);
    assert_eq!(report["faithful"], true);
    assert_eq!(report["full"], false);
}

#[test]
fn unknown_flags_exit_two() {
    let (code, _, _) = run(&["normalize", "--frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_builtin_is_an_input_error() {
    let (code, _, _) = run(&["triangulate", "--input", "klein-bottle"]);
    assert_eq!(code, 2);
}
