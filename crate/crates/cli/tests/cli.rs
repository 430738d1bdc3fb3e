use std::process::{Command, Output};

fn hookchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookchar"))
        .args(args)
        .output()
        .expect("spawn hookchar")
}

fn stdout(args: &[&str]) -> String {
    let out = hookchar(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn expand_golden() {
    assert_eq!(stdout(&["expand", "--mu", "1,1,1,1"]), "s[6] + s[4,1] + s[3,1] + s[1,1,1]\n");
    assert_eq!(stdout(&["expand", "--mu", "3,1"]), "s[3] + s[2] + s[1]\n");
    assert_eq!(stdout(&["expand", "--mu", "4"]), "1\n");
}

#[test]
fn status_banner_on_stderr() {
    let out = hookchar(&["expand", "--mu", "2,1,1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stderr), "status: proven\n");
    let out = hookchar(&["expand", "--mu", "2,2"]);
    assert_eq!(String::from_utf8_lossy(&out.stderr), "status: conjectural\n");
}

#[test]
fn expand_json_parses() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "expand", "--mu", "3,1"])).unwrap();
    assert_eq!(v["status"], "proven");
    let lambdas: Vec<_> = v["terms"].as_array().unwrap().iter().map(|t| t["lambda"].clone()).collect();
    assert_eq!(lambdas, vec![serde_json::json!([3]), serde_json::json!([2]), serde_json::json!([1])]);
}

#[test]
fn fixtures_listing() {
    let out = stdout(&["fixtures", "--mu", "1,1,1,1"]);
    assert_eq!(out, "<E_{4,4}, s[1,1,1,1]> = s[6] + s[4,1] + s[3,1] + s[1,1,1]\n");
    assert_eq!(stdout(&["fixtures"]).lines().count(), 5);
}

#[test]
fn pieri_single_path() {
    let out = stdout(&["pieri", "--n", "10", "--k", "2", "--path", "NENEENEE"]);
    assert!(out.contains("e+ Des(τ')={6,8} NNENEE hook=(21,1,1,1)"), "{out}");
    assert!(out.contains("e- Des(τ')={1,8} NEENEE hook=(20,1,1,1,1)"), "{out}");
}

#[test]
fn gf_small() {
    // (1 + qz)(1 + q^2 z)
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "gf", "--n", "4"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn verify_exit_codes() {
    let ok = hookchar(&["verify", "--suite", "gf,bijections", "--max-n", "6"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8_lossy(&ok.stdout);
    assert!(text.contains("gf: 5 pass, 0 fail"), "{text}");
    assert_eq!(hookchar(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    let out = hookchar(&["expand", "--mu", "1,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    assert_eq!(hookchar(&["pieri", "--n", "5", "--k", "4"]).status.code(), Some(2));
    assert_eq!(hookchar(&["fixtures", "--mu", "3,3"]).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["--json", "verify", "--suite", "restriction2", "--max-n", "5"];
    assert_eq!(hookchar(&args).stdout, hookchar(&args).stdout);
    let args = ["pieri", "--n", "7", "--k", "1"];
    assert_eq!(stdout(&args), stdout(&args));
}
