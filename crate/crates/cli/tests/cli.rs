use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionkit")).args(args).env_remove("FUSIONKIT_LEDGER").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn fuse_prints_the_product() {
    let out = run(&["fuse", "V-", "V-"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "V+0 + V+1 + V+2 + 2·V-");
    let json: serde_json::Value = serde_json::from_slice(&run(&["fuse", "3", "3", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["product"][3], 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["fuse", "nope", "V-"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verlinde_refuses_escaping_products() {
    let out = run(&["verlinde", "6", "12"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside K₀"));
    let out = run(&["verlinde", "W_s1^0", "W_s1^0"]);
    assert_eq!(stdout(&out).trim(), "W_ss1^0 + W_ss1^1 + W_ss1^2 + W_ss2^0");
    assert_eq!(stdout(&run(&["verlinde", "6", "6", "12"])).trim(), "1");
    assert_eq!(run(&["verlinde", "3", "3", "1"]).status.code(), Some(1));
}

#[test]
fn smatrix_normalizations() {
    let scaled = stdout(&run(&["smatrix"]));
    assert!(scaled.lines().nth(1).unwrap().starts_with(" 0: 1/4  1/4"));
    let normalized = stdout(&run(&["smatrix", "--normalized"]));
    assert!(normalized.lines().nth(1).unwrap().starts_with(" 0: √2/24  √2/24"));
    let json: serde_json::Value = serde_json::from_slice(&run(&["smatrix", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["entries"][0][0]["sqrt18_s"], "1/4");
    assert_eq!(json["entries"][0][0]["exact"]["conductor"], 72);
}

#[test]
fn output_is_deterministic() {
    for args in [&["catalog", "--format", "json"][..], &["smatrix", "--format", "latex"], &["lattice", "--half-norm", "2"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn bad_ledger_fails_verification() {
    let dir = std::env::temp_dir().join(format!("fusionkit-ledger-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.json");
    std::fs::write(&path, r#"{"entries": []}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(["verify", "--suite", "appendix"])
        .env("FUSIONKIT_LEDGER", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[fail] appendix.typo.10-9"));
    std::fs::remove_dir_all(&dir).unwrap();
}
