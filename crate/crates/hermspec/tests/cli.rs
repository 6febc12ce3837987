//! Golden tests for the command-line interface: stable schemas, exact
//! output strings, and the documented exit codes (0 success, 1 failed
//! verification, 2 usage or parse errors).

use std::path::Path;
use std::process::{Command, Output};

fn hermspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn hermspec_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermspec"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

// --- analyze ---------------------------------------------------------------------

#[test]
fn analyze_reports_the_arc_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "arc.txt", "n=2\n1 > 2\n");
    let json = stdout_json(&hermspec(&["analyze", &path]));
    assert_eq!(json["det_w"], "-2i");
    assert_eq!(json["reduced"], "-i");
    assert_eq!(json["condition"], true);
    assert_eq!(json["self_converse"], true);
    assert_eq!(json["rank_1pi"], 1);
    assert_eq!(json["snf"], serde_json::json!(["1", "2"]));
    assert_eq!(json["charpoly_a"], serde_json::json!([-1, 0, 1]));
    assert_eq!(json["charpoly_c"], serde_json::json!([-2, 0, 1]));
}

#[test]
fn analyze_reports_the_undirected_edge() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "k2.txt", "n=2\n1 - 2\n");
    let json = stdout_json(&hermspec(&["analyze", &path]));
    assert_eq!(json["det_w"], "0");
    assert_eq!(json["condition"], false);
    assert_eq!(json["self_converse"], true);
}

#[test]
fn analyze_rejects_malformed_input_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.txt", "n=2\nbogus\n");
    let out = hermspec(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr names the line: {stderr}");
}

#[test]
fn analyze_rejects_missing_files() {
    let out = hermspec(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

// --- compare ---------------------------------------------------------------------

#[test]
fn compare_relabeled_copies_is_level_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "n=3\n1 > 2\n2 - 3\n");
    let h = write(dir.path(), "h.txt", "n=3\n3 > 1\n1 - 2\n");
    let json = stdout_json(&hermspec(&["compare", &g, &h]));
    assert_eq!(json["r_cospectral"], true);
    assert_eq!(json["isomorphic"], true);
    assert_eq!(json["level"], "1");
    assert_eq!(json["level_in_{1,1+i}"], true);
}

#[test]
fn compare_the_five_vertex_pair() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g.txt",
        "n=5\n1 - 4\n1 > 5\n2 > 3\n2 > 4\n2 > 5\n3 - 4\n4 > 5\n",
    );
    let h = write(
        dir.path(),
        "h.txt",
        "n=5\n1 - 4\n1 > 5\n2 - 3\n2 > 5\n3 > 4\n3 > 5\n4 > 5\n",
    );
    let json = stdout_json(&hermspec(&["compare", &g, &h]));
    assert_eq!(json["r_cospectral"], true);
    assert_eq!(json["isomorphic"], false);
    assert_eq!(json["level"], "4+1i");
    assert_eq!(json["level_in_{1,1+i}"], false);
    let unitary = json["unitary"].as_array().unwrap();
    assert_eq!(unitary.len(), 5);
    assert_eq!(unitary[0][0], "1");
}

#[test]
fn compare_without_cospectrality_has_no_unitary_section() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "n=3\n1 > 2\n2 - 3\n");
    let h = write(dir.path(), "h.txt", "n=3\n1 - 2\n");
    let json = stdout_json(&hermspec(&["compare", &g, &h]));
    assert_eq!(json["r_cospectral"], false);
    assert_eq!(json["isomorphic"], false);
    assert!(json.get("unitary").is_none());
    assert!(json.get("level").is_none());
}

#[test]
fn compare_singular_pairs_report_undetermined() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "n=4\n1 > 3\n4 > 1\n2 > 3\n4 > 2\n3 > 4\n");
    let h = write(dir.path(), "h.txt", "n=4\n1 > 3\n4 > 1\n3 > 2\n2 > 4\n3 > 4\n");
    let json = stdout_json(&hermspec(&["compare", &g, &h]));
    assert_eq!(json["r_cospectral"], true);
    assert_eq!(json["isomorphic"], false);
    assert_eq!(json["unitary"], "undetermined");
    assert!(json.get("level").is_none());
}

#[test]
fn compare_rejects_size_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "n=3\n1 > 2\n");
    let h = write(dir.path(), "h.txt", "n=4\n1 > 2\n");
    let out = hermspec(&["compare", &g, &h]);
    assert_eq!(out.status.code(), Some(2));
}

// --- snf -------------------------------------------------------------------------

#[test]
fn snf_prints_divisors_and_unimodularity() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.txt", "1,0\n0,1\n");
    let out = hermspec(&["snf", &id]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1,1\nunimodular: true\n");

    let diag = write(dir.path(), "diag.txt", "1+1i,0\n0,1-1i\n");
    let out = hermspec(&["snf", &diag]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1+1i,1+1i\nunimodular: true\n");

    let walk = write(dir.path(), "walk.txt", "1,i\n1,-i\n");
    let out = hermspec(&["snf", &walk]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1,2\nunimodular: true\n");
}

#[test]
fn snf_rejects_malformed_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.txt", "1,2\n3\n");
    let out = hermspec(&["snf", &path]);
    assert_eq!(out.status.code(), Some(2));
}

// --- census ----------------------------------------------------------------------

#[test]
fn census_row_is_golden() {
    let out = hermspec(&["census", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "10,1.000,0.100\n");
}

#[test]
fn census_json_row_is_machine_readable() {
    let json = stdout_json(&hermspec(&["census", "2", "--format", "json"]));
    assert_eq!(json["n"], 2);
    assert_eq!(json["classes"], 3);
    assert_eq!(json["dgs_fraction"], "1.000");
    assert_eq!(json["condition_fraction"], "0.333");
}

#[test]
fn census_writes_artifact_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("row.csv");
    let out = hermspec(&["census", "4", "--out", csv.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "n,classes,dgs_fraction,condition_fraction\n4,70,0.914,0.086\n"
    );

    let json_path = dir.path().join("buckets.json");
    let out = hermspec(&["census", "3", "--format", "json", "--out", json_path.to_str().unwrap()]);
    assert!(out.status.success());
    let buckets: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let members: usize = buckets
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["members"].as_array().unwrap().len())
        .sum();
    assert_eq!(members, 10, "every class appears in exactly one bucket");
}

#[test]
fn census_range_and_long_run_guards() {
    assert_eq!(hermspec(&["census", "1"]).status.code(), Some(2));
    assert_eq!(hermspec(&["census", "7"]).status.code(), Some(2));
    let out = hermspec(&["census", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("long-run"), "stderr explains the guard: {stderr}");
}

#[test]
fn census_respects_the_jobs_environment_variable() {
    let out = hermspec_env(&["census", "3"], "HERMSPEC_JOBS", "3");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "10,1.000,0.100\n");
}

// --- find-mates ------------------------------------------------------------------

#[test]
fn find_mates_lists_shared_spectra() {
    let out = hermspec(&["find-mates", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[]");

    let json = stdout_json(&hermspec(&["find-mates", "4"]));
    let buckets = json.as_array().unwrap();
    assert_eq!(buckets.len(), 3, "three shared spectra on four vertices");
    for bucket in buckets {
        assert_eq!(bucket["members"].as_array().unwrap().len(), 2);
        assert!(bucket.get("charpoly_a").is_some());
        assert!(bucket.get("charpoly_c").is_some());
    }
}

#[test]
fn unknown_subcommands_exit_with_usage_error() {
    let out = hermspec(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
