//! Runs the built binary on the documented command lines.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expander-lab"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn bound_reports() {
    let out = run(&["bound", "--field", "13", "--a", "6", "--b", "4", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["bound"], 6);
    assert_eq!(report["admissible_k"], serde_json::json!([3, 4, 5]));

    let out = run(&["bound", "--field", "inf", "--a", "1", "--b", "5", "--d", "3"]);
    assert_eq!(json(&out)["bound"], 5);

    let out = run(&["bound", "--field", "4", "--a", "1", "--b", "5", "--d", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not prime"));
}

#[test]
fn image_sizes() {
    let out = run(&[
        "image", "--field", "5", "--g", "x^2", "--h", "x", "--A", "1,2,3,4", "--B", "0..4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["size"], 5);

    let out = run(&[
        "image", "--field", "5", "--g", "x^2", "--h", "x", "--A", "0,1", "--B", "0..4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("root 0 of h"));

    let out = run(&[
        "image",
        "--field",
        "3^2",
        "--g",
        "x^2",
        "--h",
        "x",
        "--A",
        "1,2",
        "--B",
        "subfield:1",
        "--format",
        "json",
    ]);
    let report = json(&out);
    assert_eq!(report["size"], 3);
    assert_eq!(report["image"], serde_json::json!(["0", "1", "2"]));
}

#[test]
fn certify() {
    let base = [
        "certify", "--field", "5", "--g", "x^2", "--h", "x", "--A", "1,2,3,4", "--B", "0,1,2",
    ];
    let out = run(&[&base[..], &["--C", "0,1,4"]].concat());
    assert_eq!(out.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["predicted"], "3");
    assert_eq!(cert["identity_holds"], true);
    assert!(stderr(&out).starts_with("PASS"));

    let out = run(&[&base[..], &["--k", "3", "--seed", "4"]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["C"].as_array().unwrap().len(), 3);

    let out = run(&[&base[..], &["--k", "4"]].concat());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("range"));

    // b - 1 = 3 and k = 5: binom(5, 3) = 10 is even.
    let out = run(&[
        "certify", "--field", "2^4", "--g", "x^2", "--h", "x", "--A", "1..5", "--B", "0..3", "--k", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Lucas"));
}

#[test]
fn search_and_subfield() {
    let out = run(&[
        "search", "--field", "5", "--g", "x^2", "--h", "x", "--a", "1..4", "--b", "1..5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = csv.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("field,g,h,a,b,image_size,theorem_bound,slack"));
    assert!(lines.all(|l| !l.split(',').nth(7).unwrap().starts_with('-')));
    assert!(stderr(&out).contains("min slack 0"));

    let again = run(&[
        "search", "--field", "5", "--g", "x^2", "--h", "x", "--a", "1..4", "--b", "1..5",
    ]);
    assert_eq!(again.stdout, out.stdout);

    let out = run(&[
        "subfield",
        "--field",
        "3^2",
        "--g",
        "x^2",
        "--h",
        "x",
        "--m",
        "2",
        "--c-fraction",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "subfield",
        "--field",
        "3^2",
        "--g",
        "x^2",
        "--h",
        "x",
        "--m",
        "1",
        "--c-fraction",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("f(A,B) = B: true"));
}

#[test]
fn budget_from_environment_and_flag() {
    let args = [
        "search", "--field", "5", "--g", "x^2", "--h", "x", "--a", "1..4", "--b", "1..5",
    ];
    let out = Command::new(env!("CARGO_BIN_EXE_expander-lab"))
        .args(args)
        .env("EXPANDER_LAB_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_expander-lab"))
        .args(args)
        .args(["--budget", "1000"])
        .env("EXPANDER_LAB_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    std::fs::write(
        &path,
        "subcommand = \"bound\"\nfield = \"13\"\na = \"6\"\nb = \"4\"\nd = 2\nformat = \"json\"\n",
    )
    .unwrap();
    let config = path.to_str().unwrap();
    assert_eq!(json(&run(&["--config", config]))["bound"], 6);
    // Flags override the file.
    assert_eq!(json(&run(&["--config", config, "--a", "1"]))["bound"], 4);

    std::fs::write(&path, "subcommand = \"bound\"\nwidth = 3\n").unwrap();
    assert_eq!(run(&["--config", config]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}
