use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn coxmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxmat"))
        .args(args)
        .env_remove("COXMAT_CACHE")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn group_summaries() {
    for (g, order, roots) in [("A3", 24, 6), ("I2(7)", 14, 7), ("H3", 120, 15)] {
        let o = coxmat(&["group", g]);
        assert_eq!(code(&o), 0);
        let v = json(&o);
        assert_eq!(v["order"], order);
        assert_eq!(v["positiveRoots"], roots);
        assert_eq!(v["reflections"], roots);
        assert_eq!(v["longestLength"], roots);
    }
    let v = json(&coxmat(&["group", "A2", "--roots"]));
    assert_eq!(v["roots"].as_array().unwrap().len(), 3);
}

#[test]
fn diagram_files() {
    let dir = tempfile::tempdir().unwrap();
    let ok = dir.path().join("g2.json");
    std::fs::write(&ok, r#"{"rank": 2, "m": [[1, 6], [6, 1]]}"#).unwrap();
    let v = json(&coxmat(&["group", ok.to_str().unwrap()]));
    assert_eq!(v["order"], 12);

    let affine = dir.path().join("affine.json");
    std::fs::write(&affine, r#"{"rank": 3, "m": [[1, 3, 3], [3, 1, 3], [3, 3, 1]]}"#).unwrap();
    assert_eq!(code(&coxmat(&["group", affine.to_str().unwrap()])), 3);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"rank": 2, "m": [[1, 2], [3, 1]]}"#).unwrap();
    assert_eq!(code(&coxmat(&["group", bad.to_str().unwrap()])), 2);
    std::fs::write(&bad, r#"{"rank": 3, "m": [[1, 2], [2, 1]]}"#).unwrap();
    assert_eq!(code(&coxmat(&["group", bad.to_str().unwrap()])), 2);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(code(&coxmat(&["group", bad.to_str().unwrap()])), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&coxmat(&["group", "Q7"])), 2);
    assert_eq!(code(&coxmat(&["frobnicate"])), 2);
    assert_eq!(code(&coxmat(&["check", "A2", "no-such-theorem"])), 2);
    assert_eq!(code(&coxmat(&["polytope", "A2", "s7", "e"])), 2);
    assert_eq!(code(&coxmat(&["group", "A2", "--eps-lp", "-1"])), 2);
    assert_eq!(code(&coxmat(&["group", "A2", "--jobs", "0"])), 2);
}

fn counts(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn polytope_counts() {
    let o = coxmat(&["polytope", "A2", "e", "w0"]);
    assert_eq!(code(&o), 0);
    assert!(counts(&o).starts_with("6 vertices, 6 edges"), "{}", counts(&o));
    assert!(counts(&o).contains("dim 2"));
    assert_eq!(json(&o)["vertices"].as_array().unwrap().len(), 6);

    let o = coxmat(&["polytope", "A3", "e", "s1"]);
    assert!(counts(&o).starts_with("2 vertices"));
    assert!(counts(&o).contains("dim 1"));

    let o = coxmat(&["polytope", "A3", "e", "w0", "--j", "s1 s2"]);
    assert!(counts(&o).starts_with("4 vertices"));
    assert_eq!(json(&o)["dim"], 3);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.off");
    let o = coxmat(&["polytope", "A3", "e", "w0", "--format", "off", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("24 vertices, 36 edges"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("OFF\n24 14 36\n"));
}

#[test]
fn polytope_errors() {
    assert_eq!(code(&coxmat(&["polytope", "A3", "s1", "s2"])), 4);
    assert_eq!(code(&coxmat(&["polytope", "A3", "w0", "e"])), 4);
    // s1 W_{s1} is the bottom coset, so it cannot lie above s2 W_{s1}.
    assert_eq!(code(&coxmat(&["polytope", "A3", "s2", "s1", "--j", "1"])), 4);
    assert_eq!(code(&coxmat(&["polytope", "A3", "s1", "s1s2", "--j", "1"])), 0);
    assert_eq!(code(&coxmat(&["polytope", "A2", "e", "w0", "--j", "12"])), 2);
    let o = coxmat(&["polytope", "A2", "e", "w0", "--j", "12", "--allow-degenerate"]);
    assert_eq!(code(&o), 0);
    assert!(counts(&o).starts_with("1 vertices"));
    assert_eq!(code(&coxmat(&["polytope", "A4", "e", "w0", "--format", "off"])), 2);
}

#[test]
fn interval_command() {
    let v = json(&coxmat(&["interval", "A3", "2143", "2341"]));
    assert_eq!(v["u"], "s1s3");
    assert_eq!(v["v"], "s1s2s3");
    assert_eq!(v["covers"].as_array().unwrap().len(), 1);
    assert_eq!(code(&coxmat(&["interval", "A3", "s1", "s2"])), 4);
}

#[test]
fn check_summaries_and_exit_codes() {
    let o = coxmat(&["check", "A3", "glp"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "A3 glp: PASS 189/189");

    let dir = tempfile::tempdir().unwrap();
    let o = coxmat(&["check", "B3", "glp", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("glp.json")).unwrap()).unwrap();
    assert!(r["stats"]["withoutWitness"].as_u64().unwrap() >= 1);
    assert_eq!(r["failureCount"], 0);
    for key in ["theorem", "group", "scope", "casesChecked", "failures", "witnesses", "seed", "elapsed"] {
        assert!(r.get(key).is_some(), "{key}");
    }

    let o = coxmat(&["check", "A2", "matroid", "--random-subsets", "500"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS 519/519"), "{}", stdout(&o));

    // The literal coset statement has counterexamples.
    let o = coxmat(&["check", "A2", "parabolic-faces"]);
    assert_eq!(code(&o), 1);
    let line = stdout(&o);
    assert!(line.starts_with("A2 parabolic-faces: FAIL "), "{line}");
    assert!(line.contains("first witness"));
}

#[test]
fn checks_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for (k, jobs) in ["1", "3"].iter().enumerate() {
        let path = dir.path().join(format!("{k}.json"));
        let o = coxmat(&["check", "B3", "lemmas", "--seed", "9", "--jobs", jobs, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("elapsed");
        reports.push(v);
    }
    assert_eq!(reports[0], reports[1]);
}

fn run_suite(config: &Path, out: &Path) -> Output {
    coxmat(&["suite", config.to_str().unwrap(), "--out", out.to_str().unwrap()])
}

#[test]
fn suite_configs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"groups": ["A2", "I2(5)"], "theorems": ["glp", "diamonds"], "seed": 3}"#).unwrap();
    let out = dir.path().join("out");
    let o = run_suite(&cfg, &out);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let index: Value = serde_json::from_str(&std::fs::read_to_string(out.join("index.json")).unwrap()).unwrap();
    assert_eq!(index["entries"].as_array().unwrap().len(), 4);
    assert_eq!(index["passed"], true);
    assert!(index.get("elapsed").is_none());
    assert!(out.join("I2_5/diamonds.json").is_file());

    for bad in [
        r#"{"groups": ["A2"], "theorems": []}"#,
        r#"{"groups": [], "theorems": ["glp"]}"#,
        r#"{"groups": ["A2"], "theorems": ["glp"], "tolerances": {"lp": 0}}"#,
        r#"{"groups": ["A2"], "theorems": ["nonsense"]}"#,
        r#"{"groups": ["A2"], "theorems": ["glp"], "colour": "red"}"#,
    ] {
        std::fs::write(&cfg, bad).unwrap();
        assert_eq!(code(&run_suite(&cfg, &out)), 2, "{bad}");
    }

    std::fs::write(&cfg, r#"{"groups": ["A2"], "theorems": ["parabolic-faces", "glp"]}"#).unwrap();
    let o = run_suite(&cfg, &out);
    assert_eq!(code(&o), 1);
    let index: Value = serde_json::from_str(&std::fs::read_to_string(out.join("index.json")).unwrap()).unwrap();
    assert_eq!(index["passed"], false);
    assert_eq!(index["entries"][1]["passed"], true);
}

#[test]
fn group_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_coxmat"))
            .args(["check", "H3", "diamonds"])
            .env("COXMAT_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(code(&first), 0);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run();
    assert_eq!(stdout(&first), stdout(&second));
    // A corrupt entry is ignored and rebuilt.
    let path = files[0].as_ref().unwrap().path();
    std::fs::write(&path, "{").unwrap();
    let third = run();
    assert_eq!(stdout(&first), stdout(&third));
    assert!(std::fs::read_to_string(&path).unwrap().len() > 100);
}
