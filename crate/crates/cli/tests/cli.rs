use std::path::Path;
use std::process::{Command, Output};

fn spotflat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spotflat")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn pair_queries() {
    let out = spotflat(&["farey", "dist", "0/1", "34/55"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "5");

    let out = spotflat(&["farey", "geodesic", "0/1", "2/5"]);
    assert_eq!(stdout(&out).split_whitespace().collect::<Vec<_>>(), ["0/1", "1/2", "2/5"]);

    assert_eq!(stdout(&spotflat(&["omega", "dist", "0/1@0", "1/2@5"])).trim(), "5");
    assert_eq!(stdout(&spotflat(&["sphere", "dist", "0/1@0:sph", "inf@-2:sph"])).trim(), "2");
    assert_eq!(stdout(&spotflat(&["intersect", "annular", "0", "3"])).trim(), "4");
    assert_eq!(stdout(&spotflat(&["intersect", "annular", "-1", "0"])).trim(), "0");
    assert_eq!(stdout(&spotflat(&["sphere", "circles", "0", "3"])).trim(), "2");
}

#[test]
fn push_both_forms() {
    assert_eq!(stdout(&spotflat(&["push", "0/1@1:half", "1"])).trim(), "0/1@3:half");
    assert_eq!(stdout(&spotflat(&["push", "0/1@1:full", "-2"])).trim(), "0/1@-1:full");
    assert_eq!(stdout(&spotflat(&["push", "2/3@4", "-1"])).trim(), "2/3@3");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&spotflat(&["farey", "dist", "0/0", "1/2"])), 2);
    assert_eq!(code(&spotflat(&["farey", "dist", "banana", "1/2"])), 2);
    assert_eq!(code(&spotflat(&["suite", "nope"])), 2);
    assert_eq!(code(&spotflat(&["suite", "omega", "--inject", "nope"])), 2);
    assert_eq!(code(&spotflat(&["export", "--graph", "nope", "--center", "0/1", "--radius", "1"])), 2);
    assert_eq!(code(&spotflat(&["frobnicate"])), 2);
}

#[test]
fn budget_errors_exit_3() {
    let out = spotflat(&["farey", "dist", "0/1", "34/55", "--max-visited", "10"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn distance_cap_gives_lower_bound() {
    let out = spotflat(&["farey", "dist", "0/1", "34/55", "--cap", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), ">=3");
    assert_eq!(code(&spotflat(&["farey", "geodesic", "0/1", "34/55", "--cap", "2"])), 3);
}

#[test]
fn suites() {
    let out = spotflat(&["suite", "arc"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("PASS arc/")));
    assert!(!text.contains("FAIL"));

    let out = spotflat(&["suite", "omega", "--inject", "annular-offset"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL omega/"));
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn certify_writes_stable_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let out = spotflat(&["certify-flat", "--n", "2", "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    }
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());

    let cert = read_json(&first);
    assert_eq!(cert["schema"], "flatcert/1");
    assert_eq!(cert["success"], true);
    assert_eq!(cert["ray"].as_array().unwrap().len(), 3);

    let sphere = dir.path().join("s.json");
    let out = spotflat(&[
        "certify-flat", "--n", "1", "--model", "sphere", "--seed", "1/2,1/3",
        "--out", sphere.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(read_json(&sphere)["graph"], "sphere(g=2)");

    assert_eq!(code(&spotflat(&["certify-flat", "--n", "1", "--seed", "0/1,2/3"])), 2);
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ball.json");
    let out = spotflat(&[
        "export", "--graph", "farey", "--center", "0/1", "--radius", "1",
        "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc = read_json(&path);
    assert_eq!(doc["graph"], "farey");
    assert_eq!(doc["vertices"][0], "0/1");

    let out = spotflat(&[
        "--height-cap", "3", "export", "--graph", "omega(g=2)", "--center", "0/1@0",
        "--radius", "1", "--format", "dot",
    ]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph \"omega(g=2)\" {"));
    assert!(dot.contains(" -- "));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spotflat.toml");
    std::fs::write(&path, "cap = 2\n").unwrap();
    let config = path.to_str().unwrap();

    let out = spotflat(&["--config", config, "farey", "dist", "0/1", "34/55"]);
    assert_eq!(stdout(&out).trim(), ">=3");
    let out = spotflat(&["--config", config, "--cap", "8", "farey", "dist", "0/1", "34/55"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "5");

    std::fs::write(&path, "colour = \"blue\"\n").unwrap();
    assert_eq!(code(&spotflat(&["--config", config, "farey", "dist", "0/1", "1/2"])), 2);
}
