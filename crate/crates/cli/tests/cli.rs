use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(format!("{name}.schema.json"))
}

/// Parse stdout as JSON and validate it against the shipped schema.
fn validated(schema: &str, stdout: &str) -> Value {
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path(schema)).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let doc: Value = serde_json::from_str(stdout).expect("stdout is JSON");
    if let Err(errors) = compiled.validate(&doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}");
    }
    doc
}

#[test]
fn enumerate_021_avoiders() {
    let doc = validated(
        "enumerate",
        &ok_stdout(&["enumerate", "--universe", "invseq", "--n", "3", "--avoid", "021"]),
    );
    assert_eq!(doc["count"], 6);
    assert_eq!(doc["objects"][5], serde_json::json!([0, 1, 2]));
}

#[test]
fn enumerate_baxter_permutations() {
    let doc = validated(
        "enumerate",
        &ok_stdout(&[
            "enumerate",
            "--universe",
            "perm",
            "--n",
            "4",
            "--avoid",
            "2_41_3,3_14_2",
        ]),
    );
    assert_eq!(doc["count"], 22);
}

#[test]
fn enumerate_triple_and_distribution() {
    let doc = validated(
        "enumerate",
        &ok_stdout(&[
            "enumerate",
            "--universe",
            "invseq",
            "--n",
            "5",
            "--avoid",
            ">=,-,>=",
            "--stats",
            "dist",
        ]),
    );
    assert_eq!(doc["total"], 42);
    // dist over the triple class against des over S_5(123)
    let perms = validated(
        "enumerate",
        &ok_stdout(&[
            "enumerate",
            "--universe",
            "perm",
            "--n",
            "5",
            "--avoid",
            "123",
            "--stats",
            "des",
        ]),
    );
    assert_eq!(doc["distribution"], perms["distribution"]);
}

#[test]
fn enumerate_set_statistics_in_csv() {
    let out = ok_stdout(&[
        "enumerate",
        "--universe",
        "perm",
        "--n",
        "3",
        "--stats",
        "des,DES",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "des,DES,count\n0,,1\n1,1,2\n1,2,2\n2,1 2,1\n");
}

#[test]
fn enumerate_objects_in_csv() {
    let out = ok_stdout(&["enumerate", "--universe", "invseq", "--n", "2", "--format", "csv"]);
    assert_eq!(out, "e1,e2\n0,0\n0,1\n");
}

#[test]
fn enumerate_empty_length() {
    let out = run(&["enumerate", "--universe", "invseq", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn triangle_rows_and_sums() {
    let csv = ok_stdout(&["triangle", "--family", "catalan", "--max-n", "5"]);
    let row5: Vec<&str> = csv
        .lines()
        .filter(|l| l.starts_with("5,"))
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(row5, ["1", "4", "9", "14", "14"]);

    let bax = validated(
        "triangle",
        &ok_stdout(&["triangle", "--family", "baxter", "--max-n", "6", "--format", "json"]),
    );
    assert_eq!(bax["row_sums"], serde_json::json!(["1", "2", "6", "22", "92", "422"]));

    let sch = validated(
        "triangle",
        &ok_stdout(&["triangle", "--family", "schroder", "--max-n", "5", "--format", "json"]),
    );
    assert_eq!(sch["row_sums"], serde_json::json!(["1", "2", "6", "22", "90"]));

    let bfile = ok_stdout(&["triangle", "--family", "catalan", "--max-n", "3", "--format", "bfile"]);
    assert_eq!(bfile, "1 1\n2 1\n3 1\n4 1\n5 2\n6 2\n");
}

#[test]
fn check_reports() {
    for (theorem, n) in [("thm3.1", "8"), ("thm4.1", "8"), ("thm2.2", "1")] {
        let doc = validated("check", &ok_stdout(&["check", "--theorem", theorem, "--max-n", n]));
        assert_eq!(doc["passed"], true);
        assert_eq!(doc["theorem"], theorem);
    }
    let timed = validated(
        "check",
        &ok_stdout(&["check", "--theorem", "eq1", "--max-n", "3", "--timings"]),
    );
    assert!(timed["sizes"][0]["millis"].is_u64());
}

#[test]
fn scan_finds_the_nine_pairs() {
    let doc = validated(
        "scan-schroder-pairs",
        &ok_stdout(&["scan-schroder-pairs", "--max-n", "8"]),
    );
    let pairs = doc["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 9);
    for want in [["4321", "3421"], ["4231", "3421"]] {
        assert!(pairs.iter().any(|p| p == &serde_json::json!(want)), "{want:?}");
    }
}

#[test]
fn series_checks() {
    for (id, order) in [("kernel-root", "10"), ("baxter-fe", "8"), ("dist-ogf", "9")] {
        let doc = validated(
            "series-check",
            &ok_stdout(&["series-check", "--identity", id, "--order", order]),
        );
        assert_eq!(doc["passed"], true);
        let digests = doc["reports"][0]["digests"].as_array().unwrap();
        assert_eq!(digests.len(), order.parse::<usize>().unwrap() + 1);
    }
    let all = validated("series-check", &ok_stdout(&["series-check"]));
    assert_eq!(all["reports"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["enumerate", "--universe", "invseq", "--n", "3", "--avoid", "0x1"],
        &["enumerate", "--universe", "invseq", "--n", "3", "--avoid", ">=,-"],
        &["enumerate", "--universe", "invseq", "--n", "3", "--stats", "nosuch"],
        &["enumerate", "--universe", "invseq", "--n", "3", "--stats", "des"],
        &["enumerate", "--universe", "invseq", "--n", "4", "--stats", "EXPO"],
        &["enumerate", "--universe", "words", "--n", "3"],
        &["triangle", "--family", "motzkin"],
        &["check", "--theorem", "thm9.9"],
        &["check", "--theorem", "cor4.2", "--max-n", "1"],
        &["scan-schroder-pairs", "--max-n", "3"],
        &["series-check", "--identity", "kernel-root", "--order", "0"],
        &["series-check", "--identity", "nosuch"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &[
            "enumerate",
            "--universe",
            "perm",
            "--n",
            "6",
            "--avoid",
            "2_41_3,3_14_2",
            "--stats",
            "lma,rma,DES",
        ],
        &["triangle", "--family", "baxter", "--max-n", "9", "--format", "json"],
        &["check", "--theorem", "thm5.2", "--max-n", "7"],
        &["series-check", "--identity", "main-identity", "--order", "5"],
    ];
    for args in cases {
        assert_eq!(ok_stdout(args), ok_stdout(args), "{args:?}");
    }
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("invseq-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["triangle", "--family", "catalan", "--max-n", "3", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, ok_stdout(&["triangle", "--family", "catalan", "--max-n", "3"]));

    let bad = run(&["triangle", "--family", "catalan", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(bad.status.code(), Some(2));
}
