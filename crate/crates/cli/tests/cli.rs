use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_convexica"))
        .args(args)
        .env_remove("CONVEXICA_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn poset_info_reports_length_and_csi() {
    let o = run(&["poset-info", &data("chain4.txt")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("length: 3"));
    assert!(out.contains("tree-like: true"));
    assert!(out.contains("{a,b}"));

    let o = run(&["poset-info", &data("pij22.txt"), "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["length"], 2);
}

#[test]
fn malformed_input_exits_2() {
    let o = run(&["poset-info", &data("malformed.txt")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"));
    let o = run(&["check", "no-such-file.txt", "--identity", "L2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn check_l2_on_four_chain_fails_with_witness() {
    let o = run(&["check", &data("chain4.txt"), "--identity", "L2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness: L2 fails at"));
}

#[test]
fn structural_h3_on_four_chain_holds() {
    let o = run(&[
        "check",
        &data("chain4.txt"),
        "--identity",
        "H:3",
        "--method",
        "structural",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn hmn_on_five_chain_gives_bi_track() {
    let o = run(&[
        "check",
        &data("chain5.txt"),
        "--identity",
        "Hmn:2,2",
        "--json",
    ]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"]["kind"], "bi-track");
}

#[test]
fn identity_file_on_pentagon() {
    let o = run(&[
        "check",
        &data("pentagon.txt"),
        "--identity",
        &data("distributive.txt"),
    ]);
    assert_eq!(code(&o), 1);
    let o = run(&[
        "check",
        &data("square.txt"),
        "--identity",
        &data("distributive.txt"),
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn replay_round_trip() {
    let o = run(&["check", &data("chain4.txt"), "--identity", "L2", "--json"]);
    assert_eq!(code(&o), 1);
    let report = tmp("l2-chain4.json");
    std::fs::write(&report, stdout(&o)).unwrap();
    let o = run(&[
        "check",
        &data("chain4.txt"),
        "--identity",
        "L2",
        "--replay",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness confirmed"));

    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    for pair in v["witness"]["assignment"].as_array_mut().unwrap() {
        pair[1] = serde_json::Value::from("{}");
    }
    let tampered = tmp("l2-chain4-tampered.json");
    std::fs::write(&tampered, v.to_string()).unwrap();
    let o = run(&[
        "check",
        &data("chain4.txt"),
        "--identity",
        "L2",
        "--replay",
        tampered.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("does not hold"));
}

#[test]
fn subn_replay_round_trip() {
    let o = run(&["subn", &data("example.txt"), "2", "--json"]);
    assert_eq!(code(&o), 1);
    let report = tmp("sub2-example.json");
    std::fs::write(&report, stdout(&o)).unwrap();
    let o = run(&[
        "subn",
        &data("example.txt"),
        "2",
        "--replay",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness confirmed"));
}

#[test]
fn subn_on_example_presentation() {
    let o = run(&["subn", &data("example.txt"), "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = run(&["subn", &data("example.txt"), "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness: track"));
    let o = run(&["sub2", &data("example.txt")]);
    assert_eq!(code(&o), 1);
    let o = run(&["subn", &data("example.txt"), "0"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sub_on_small_lattices() {
    assert_eq!(code(&run(&["sub", &data("pentagon.txt")])), 0);
    assert_eq!(code(&run(&["sub", &data("square.txt")])), 0);
}

#[test]
fn embed_exported_co_lattice() {
    let o = run(&["co-export", &data("pij11.txt")]);
    assert_eq!(code(&o), 0);
    let exported = tmp("co-pij11.txt");
    std::fs::write(&exported, stdout(&o)).unwrap();
    let o = run(&["embed-sub2", exported.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("embedding: true"));
    assert!(out.contains("atom preserving: true"));
    let elements = out.lines().next().unwrap();
    assert_eq!(elements.split_whitespace().count(), 4);

    let o = run(&["embed-sub2", &data("chain5.txt")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("not in SUB2"));
}

#[test]
fn canonical_form_of_square() {
    let o = run(&["canonical", &data("square.txt"), "--gens", "a", "b"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("within bound: true"));
    assert!(out.contains("diagonal injective: true"));
    let o = run(&["canonical", &data("square.txt"), "--gens", "a"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn corpus_passes_and_empty_filter_warns() {
    let o = run(&["corpus", "--filter", "chain"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = run(&["corpus", "--filter", "nothing"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("no corpus entry"));
}

#[test]
fn experiment_with_candidate_and_broken_template() {
    let o = run(&["experiment", "--k-max", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("[CANDIDATE]"));
    assert!(out.contains("generated=12"));
    let o = run(&[
        "experiment",
        "--reconstruction",
        &data("nonconvex_template.txt"),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("INVALID"));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_convexica"))
        .args([
            "check",
            &data("chain5.txt"),
            "--identity",
            "L2",
            "--method",
            "naive",
        ])
        .env("CONVEXICA_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--method structural"));

    let o = Command::new(env!("CARGO_BIN_EXE_convexica"))
        .args([
            "check",
            &data("chain5.txt"),
            "--identity",
            "L2",
            "--method",
            "naive",
            "--budget",
            "100000000",
        ])
        .env("CONVEXICA_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);

    let o = Command::new(env!("CARGO_BIN_EXE_convexica"))
        .args(["check", &data("chain5.txt"), "--identity", "L2"])
        .env("CONVEXICA_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1, "auto falls back to structural: {}", stderr(&o));
}
