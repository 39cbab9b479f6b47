use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conic-bundles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_text() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().last(),
        Some("THEOREM: degree ∈ {4, 5} — VERIFIED")
    );
}

#[test]
fn verify_json_schema() {
    let o = run(&["verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["bounds", "leaves", "summary", "version"]);
    assert_eq!(v["bounds"]["d_max"], 42);
    assert_eq!(v["bounds"]["delta_max"], 31);
    assert_eq!(
        v["summary"]["admissible_degrees"],
        serde_json::json!([4, 5])
    );
    assert_eq!(v["summary"]["all_passed"], true);
    for leaf in v["leaves"].as_array().unwrap() {
        for field in [
            "id",
            "section",
            "method",
            "status",
            "parameters",
            "witnesses",
            "expected",
            "passed",
        ] {
            assert!(leaf.get(field).is_some(), "missing {field}");
        }
        assert!(leaf["parameters"].is_object());
        assert!(leaf["witnesses"].is_array());
        assert!(leaf["expected"].is_object());
    }
}

#[test]
fn verify_writes_file() {
    let dir = std::env::temp_dir().join(format!("conic-bundles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let o = run(&["verify", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&["verify", "--json"]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_failure_exit_code() {
    let o = run(&["verify", "--delta-max", "25"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  quartic-scroll "));
    assert!(stdout(&o).trim_end().ends_with("NOT VERIFIED"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "quadric"]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "p5-span", "--delta-max", "13"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["bounds", "gp", "--degree", "10", "--surface", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["bounds", "castelnuovo", "--degree", "2", "--ambient", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn enumerate_tables() {
    let o = run(&["enumerate", "quartic-scroll"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("2 survivor(s)"));
    assert!(out.contains("3E-F") && out.contains("6E+2F"));

    for case in ["cubic-scroll", "veronese", "p5-span"] {
        let o = run(&["enumerate", case]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("0 survivor(s)"), "{case}");
    }

    let o = run(&["enumerate", "endgame"]);
    assert!(stdout(&o).contains("3 survivor(s)"));

    let o = run(&["enumerate", "cone", "--delta-max", "34"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[outside certified region]"));

    let o = run(&["enumerate", "elliptic-cone"]);
    assert!(stdout(&o).contains("alpha=1"));
}

#[test]
fn bounds_printing() {
    assert_eq!(
        stdout(&run(&[
            "bounds",
            "castelnuovo",
            "--degree",
            "24",
            "--ambient",
            "3"
        ])),
        "121\n"
    );
    assert_eq!(
        stdout(&run(&["bounds", "gp", "--degree", "18", "--surface", "5"])),
        "39\n"
    );
    assert_eq!(
        stdout(&run(&["bounds", "gp", "--degree", "13", "--surface", "6"])),
        "325/12\n"
    );
    assert_eq!(
        stdout(&run(&["bounds", "degree-max"])),
        "d_max 42\ndelta_max 31\n"
    );
}
