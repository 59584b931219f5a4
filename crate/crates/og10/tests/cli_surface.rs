//! End-to-end checks against the compiled binary: exit codes, stdout
//! contracts, and the environment-variable cap for the brute-force path.

use std::io::Write;
use std::process::{Command, Output};

fn og10(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_og10"))
        .args(args)
        .env_remove("OG10_MAX_BRUTE_NODES")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn og10_euler_prints_the_total() {
    let output = og10(&["og10-euler"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "176904\n");
}

#[test]
fn count_tangent_json_degree_four() {
    let output = og10(&["count-tangent", "--degree", "4", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(v["result"]["count"], "19541289824");
    assert_eq!(v["artifact_version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let output = og10(&["count-tangent", "--degrees", "3"]);
    assert_eq!(output.status.code(), Some(2));
    let output = og10(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let output = og10(&["prym-euler", "--nodes", "3", "--genus", "0"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("error:"));
}

#[test]
fn brute_force_cap_env_lowers_the_cap() {
    let output = Command::new(env!("CARGO_BIN_EXE_og10"))
        .args(["prym-euler", "--nodes", "5", "--genus", "1", "--brute-force"])
        .env("OG10_MAX_BRUTE_NODES", "4")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("cap"));

    let output = Command::new(env!("CARGO_BIN_EXE_og10"))
        .args(["prym-euler", "--nodes", "5", "--genus", "1", "--brute-force"])
        .env("OG10_MAX_BRUTE_NODES", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("OG10_MAX_BRUTE_NODES"));
}

#[test]
fn betti_check_round_trips_a_search_result() {
    let search = og10(&["betti", "search", "--limit", "1", "--json"]);
    assert_eq!(search.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&search)).unwrap();
    let vector = v["result"]["vectors"][0].clone();

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{vector}").unwrap();

    let check = og10(&["betti", "check", "--file", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(check.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(report["result"]["all_pass"], true);
    assert_eq!(report["result"]["euler"]["value"], "176904");
}

#[test]
fn betti_check_rejects_malformed_vectors() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"n":5,"b":[1,0,24]}}"#).unwrap();
    let check = og10(&["betti", "check", "--file", file.path().to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));

    let missing = og10(&["betti", "check", "--file", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn betti_check_reports_violations_without_failing() {
    // A duality-respecting vector with the wrong b_2: the command still
    // succeeds, the report carries the verdicts.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"n":5,"b":[1,0,23,0,300,0,2600,0,23346,0,124362,0,23346,0,2600,0,300,0,23,0,1]}}"#
    )
    .unwrap();
    let check = og10(&["betti", "check", "--file", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(check.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(report["result"]["b2_is_24"], false);
    assert_eq!(report["result"]["duality_holds"], true);
    assert_eq!(report["result"]["all_pass"], false);
}
