use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use gegenlab::integrals::transcribed_operator;

fn gegenlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gegenlab")).args(args).env_remove("GEGENLAB_CACHE").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = gegenlab(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out).trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    gegenlab(args).status.code().expect("exit code")
}

#[test]
fn gen_latex_matches_appendix_entry() {
    assert_eq!(ok(&["gen", "--rank", "3", "--weight", "1,0,1", "--format", "latex"]), r"z_1 z_3 - \frac{4}{1+3\kappa}");
}

#[test]
fn gen_vacuum_is_one() {
    assert_eq!(ok(&["gen", "--rank", "2", "--weight", "0,0"]), "1");
}

#[test]
fn gen_at_numeric_kappa() {
    assert_eq!(ok(&["gen", "--rank", "3", "--weight", "2,0,0", "--kappa", "1/2", "--format", "text"]), "z1^2 - 4/3 z2");
    // recurrence route substitutes into the symbolic result and must agree
    let args = ["gen", "--rank", "3", "--weight", "2,0,0", "--kappa", "1/2", "--method", "recurrence"];
    assert_eq!(ok(&args), "z1^2 - 4/3 z2");
}

#[test]
fn gen_json_schema_and_term_order() {
    let text = ok(&["gen", "--rank", "3", "--weight", "0,2,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["rank"], 3);
    assert_eq!(v["weight"], serde_json::json!([0, 2, 0]));
    let monos: Vec<Vec<u64>> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["mono"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect();
    assert_eq!(monos, vec![vec![1, 0, 1], vec![0, 2, 0], vec![0, 0, 0]]);
    // constant term 2(1-κ)/((1+κ)(1+2κ))
    assert_eq!(v["terms"][2]["num"], serde_json::json!(["2", "-2"]));
    assert_eq!(v["terms"][2]["den"], serde_json::json!(["1", "3", "2"]));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["table", "--rank", "3", "--max-degree", "2", "--format", "json"];
    assert_eq!(gegenlab(&args).stdout, gegenlab(&args).stdout);
    let args = ["verify", "--suite", "sigma", "--rank", "2", "--format", "json"];
    assert_eq!(gegenlab(&args).stdout, gegenlab(&args).stdout);
}

#[test]
fn eval_examples() {
    assert_eq!(ok(&["eval", "--rank", "3", "--weight", "1,0,0", "--kappa", "5/3", "--point", "-7/2,1,9"]), "-7/2");
    assert_eq!(ok(&["eval", "--rank", "3", "--weight", "1,0,1", "--kappa", "1", "--point", "2,0,1"]), "1");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["eval", "--rank", "3", "--weight", "2,0,0", "--kappa", "-1", "--point", "1,1,1"]), 3);
    assert_eq!(code(&["gen", "--rank", "3", "--weight", "2,0,0", "--kappa", "-1"]), 3);
    assert_eq!(code(&["gen", "--rank", "3", "--weight", "1,0"]), 2);
    assert_eq!(code(&["gen", "--rank", "3", "--weight", "1,-1,0"]), 2);
    assert_eq!(code(&["gen", "--rank", "4", "--weight", "1,0,0,0", "--method", "recurrence"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["verify", "--suite", "appendix", "--rank", "2"]), 2);
    assert_eq!(code(&["operators", "--rank", "2", "--order", "5"]), 2);
    assert_eq!(code(&["eval", "--rank", "2", "--weight", "1,0", "--kappa", "sym", "--point", "1,1"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn verify_appendix_passes() {
    let text = ok(&["verify", "--suite", "appendix", "--rank", "3"]);
    assert!(text.ends_with("appendix (rank 3): 19/19 pass, 0 fail, 0 adjudicated"), "{text}");
}

#[test]
fn verify_commutators_rank_two() {
    ok(&["verify", "--suite", "commutators", "--rank", "2", "--max-degree", "4"]);
}

#[test]
fn verify_sigma_rank_two_includes_vacuum_step() {
    let text = ok(&["verify", "--suite", "sigma", "--rank", "2", "--max-components", "2"]);
    assert!(text.contains("PASS sigma S(1,0) at (0,0)"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_sigma_rank_three_reports_the_disputed_rows() {
    let out = gegenlab(&["verify", "--suite", "sigma", "--rank", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let flagged: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] != "pass")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(!flagged.is_empty());
    assert!(
        flagged.iter().all(|n| n.starts_with("sigma S(1,0,-1)") || n.starts_with("sigma S(-1,0,1)")),
        "{flagged:?}"
    );
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn operators_second_order_a2() {
    assert!(ok(&["operators", "--rank", "2", "--order", "2"]).contains("(z1 z2 - 9) d/dz1 d/dz2"));
}

#[test]
fn operators_third_order_a2_is_the_printed_one() {
    let printed = transcribed_operator(3, 3).unwrap().to_text();
    assert_eq!(ok(&["operators", "--rank", "2", "--order", "3"]), printed);
}

#[test]
fn operators_second_order_a3() {
    let text = ok(&["operators", "--rank", "3", "--order", "2"]);
    assert!(text.starts_with("1/2 {(3 z1^2 - 8 z2) d2/dz1^2"), "{text}");
    assert_eq!(text, transcribed_operator(4, 2).unwrap().to_text());
}

#[test]
fn table_lists_every_weight() {
    let text = ok(&["table", "--rank", "2", "--max-degree", "2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"P(1,1) = z1 z2 - 3/(1 + 2κ)"));
}

fn cache_file(dir: &Path) -> std::path::PathBuf {
    dir.join("p_rank3_0-2-0.json")
}

#[test]
fn cache_hit_reuses_the_stored_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache", d, "--verbose", "gen", "--rank", "3", "--weight", "0,2,0", "--format", "json"];
    let first = gegenlab(&args);
    assert!(stderr(&first).contains("generated P(0,2,0)"));
    assert!(cache_file(dir.path()).exists());
    let second = gegenlab(&args);
    assert!(stderr(&second).contains("cache hit for P(0,2,0)"), "{}", stderr(&second));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn corrupt_and_stale_entries_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache", d, "--verbose", "gen", "--rank", "3", "--weight", "0,2,0"];
    let clean = ok(&args);
    let original = fs::read_to_string(cache_file(dir.path())).unwrap();

    fs::write(cache_file(dir.path()), original.replace("\"-2\"", "\"-5\"")).unwrap();
    let out = gegenlab(&args);
    assert!(stderr(&out).contains("checksum mismatch"), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim_end(), clean);
    // regenerated and rewritten
    assert_eq!(fs::read_to_string(cache_file(dir.path())).unwrap(), original);

    fs::write(cache_file(dir.path()), original.replace("\"version\":1", "\"version\":99")).unwrap();
    let out = gegenlab(&args);
    assert!(stderr(&out).contains("version 99"), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim_end(), clean);
}

#[test]
fn environment_overrides_cache_flag() {
    let flag_dir = tempfile::tempdir().unwrap();
    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_gegenlab"))
        .args(["--cache", flag_dir.path().to_str().unwrap(), "gen", "--rank", "3", "--weight", "0,2,0"])
        .env("GEGENLAB_CACHE", env_dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(cache_file(env_dir.path()).exists());
    assert!(!cache_file(flag_dir.path()).exists());
}
