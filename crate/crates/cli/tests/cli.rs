use std::io::Write;
use std::process::{Command, Output, Stdio};

use lrkit::enumeration::enum_ssyt;
use lrkit::{Partition, SkewShape};
use serde_json::{json, Value};

fn lrkit(args: &[&str], stdin: &str) -> Output {
    lrkit_env(args, stdin, &[])
}

fn lrkit_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lrkit"));
    cmd.args(args)
        .env_remove("LRKIT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(o));
    serde_json::from_str(&stdout(o)).unwrap()
}

const SUNDARAM: &str = r#"{"outer":[4,3,2,2,1],"inner":[3,1],"rows":[[1],[1,2],[1,2],[2,3],[4]]}"#;

#[test]
fn map_two_by_two() {
    let out = json_out(&lrkit(
        &["map", "--n", "2"],
        r#"{"outer":[2,2],"rows":[[1,1],[2,2]]}"#,
    ));
    assert_eq!(out["p"]["outer"], json!([]));
    assert_eq!(out["q"]["outer"], json!([2, 2]));
    assert_eq!(out["q"]["rows"], json!([[2, 1], [2, 1]]));
    assert_eq!(out["q"]["kind"], json!("rec"));
    assert_eq!(out["chain"], json!([[2, 2], [1, 1], []]));
    assert_eq!(out["steps"], json!(2));
}

#[test]
fn map_symplectic_is_fixed() {
    let input = r#"{"outer":[2,1],"inner":[],"rows":[[1,2],[3]]}"#;
    let out = json_out(&lrkit(&["map", "--n", "2"], input));
    assert_eq!(out["p"]["rows"], json!([[1, 2], [3]]));
    assert_eq!(out["q"]["inner"], json!([2, 1]));
    assert_eq!(out["q"]["rows"], json!([[], []]));
    assert_eq!(out["steps"], json!(0));
}

#[test]
fn invalid_input_exits_2() {
    let o = lrkit(&["map", "--n", "1"], r#"{"outer":["#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("malformed"));

    // not semistandard
    let o = lrkit(&["map", "--n", "1"], r#"{"outer":[2],"rows":[[2,1]]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("semistandard"), "{}", stderr(&o));

    // entry above 2n
    let o = lrkit(&["map", "--n", "1"], r#"{"outer":[1],"rows":[[3]]}"#);
    assert_eq!(o.status.code(), Some(2));

    // row lengths disagree with the shape
    let o = lrkit(&["map", "--n", "1"], r#"{"outer":[2],"rows":[[1]]}"#);
    assert_eq!(o.status.code(), Some(2));

    // recorded n disagrees with --n
    let o = lrkit(&["map", "--n", "2"], r#"{"outer":[1],"rows":[[1]],"n":1}"#);
    assert_eq!(o.status.code(), Some(2));

    // --n is mandatory
    let o = lrkit(&["map"], r#"{"outer":[1],"rows":[[1]]}"#);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invert_examples() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.json");
    let q = dir.path().join("q.json");
    std::fs::write(&p, r#"{"outer":[],"rows":[]}"#).unwrap();
    std::fs::write(&q, r#"{"outer":[1,1],"rows":[[1],[1]]}"#).unwrap();
    let out = json_out(&lrkit(
        &[
            "invert",
            "--n",
            "1",
            "--p",
            p.to_str().unwrap(),
            "--q",
            q.to_str().unwrap(),
        ],
        "",
    ));
    assert_eq!(out["rows"], json!([[1], [2]]));
    assert_eq!(out["kind"], json!("ssyt"));

    // s with empty Q
    std::fs::write(&p, r#"{"outer":[2,1],"rows":[[1,2],[3]]}"#).unwrap();
    std::fs::write(&q, r#"{"outer":[2,1],"inner":[2,1],"rows":[[],[]]}"#).unwrap();
    let out = json_out(&lrkit(
        &[
            "invert",
            "--n",
            "2",
            "--p",
            p.to_str().unwrap(),
            "--q",
            q.to_str().unwrap(),
        ],
        "",
    ));
    assert_eq!(out["rows"], json!([[1, 2], [3]]));

    // non-symplectic P
    std::fs::write(&p, r#"{"outer":[1,1],"rows":[[1],[2]]}"#).unwrap();
    std::fs::write(&q, r#"{"outer":[1,1],"inner":[1,1],"rows":[[],[]]}"#).unwrap();
    let o = lrkit(
        &[
            "invert",
            "--n",
            "2",
            "--p",
            p.to_str().unwrap(),
            "--q",
            q.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("symplectic"));

    // Q failing (R3)
    std::fs::write(&p, r#"{"outer":[],"rows":[]}"#).unwrap();
    std::fs::write(&q, r#"{"outer":[1,1,1],"rows":[[1],[1],[1]]}"#).unwrap();
    let o = lrkit(
        &[
            "invert",
            "--n",
            "2",
            "--p",
            p.to_str().unwrap(),
            "--q",
            q.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("R3"), "{}", stderr(&o));
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.json");
    let mapped = dir.path().join("m.json");
    let back = dir.path().join("t2.json");
    std::fs::write(&input, r#"{"outer":[2,2],"rows":[[1,1],[2,2]]}"#).unwrap();
    let s = |p: &std::path::Path| p.to_str().unwrap().to_string();
    let o = lrkit(
        &["map", "--n", "2", "--in", &s(&input), "--out", &s(&mapped)],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = lrkit(
        &[
            "invert",
            "--n",
            "2",
            "--in",
            &s(&mapped),
            "--out",
            &s(&back),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&back).unwrap()).unwrap();
    assert_eq!(doc["rows"], json!([[1, 1], [2, 2]]));
}

/// `map` piped into `invert` reproduces the input document exactly, and
/// every emitted document parses back to itself.
#[test]
fn map_then_invert_is_identity() {
    let n = 2;
    for lam in Partition::all_up_to(5, 4) {
        for t in enum_ssyt(&SkewShape::straight(lam), 4) {
            let doc = json!({
                "outer": t.outer().parts(),
                "inner": t.inner().parts(),
                "rows": t.rows(),
                "n": n,
                "kind": "ssyt",
            });
            let text = serde_json::to_string(&doc).unwrap() + "\n";
            let mapped = lrkit(&["map", "--n", "2"], &text);
            let mapped_text = stdout(&mapped);
            for key in ["p", "q"] {
                let v: Value = serde_json::from_str(&mapped_text).unwrap();
                let reparsed = serde_json::to_string(&v[key]).unwrap();
                assert!(mapped_text.contains(&reparsed));
            }
            let back = lrkit(&["invert", "--n", "2"], &mapped_text);
            assert_eq!(stdout(&back), text);
        }
    }
}

#[test]
fn verify_examples() {
    let o = lrkit(&["verify", "--n", "1", "--lambda", "2,2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "λ=(2,2) n=1 lhs=1 rhs=1 OK");

    let o = lrkit(&["verify", "--n", "1", "--lambda", "(1,1)"], "");
    assert_eq!(o.status.code(), Some(0));

    let o = lrkit(&["verify", "--n", "1", "--lambda", "1,1,1"], "");
    assert_eq!(o.status.code(), Some(2));

    let o = lrkit(&["verify", "--n", "1", "--lambda", "1,2"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_sweep_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = lrkit(
        &["verify", "--n", "2", "--out", report.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 27);
    let reports: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 27);
    assert_eq!(reports[0]["lambda"], json!([]));
    assert!(reports[0]["roundtrip_failures"]
        .as_array()
        .unwrap()
        .is_empty());

    // the environment sets the budget, a flag overrides it
    let o = lrkit_env(&["verify", "--n", "1"], "", &[("LRKIT_BUDGET", "2")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = lrkit_env(
        &["verify", "--n", "1", "--budget", "3"],
        "",
        &[("LRKIT_BUDGET", "2")],
    );
    assert_eq!(stdout(&o).lines().count(), 6);

    // larger sweeps need to be asked for
    let o = lrkit_env(&["verify", "--n", "1"], "", &[("LRKIT_BUDGET", "7")]);
    assert_eq!(o.status.code(), Some(2));
    let o = lrkit(&["verify", "--n", "3", "--budget", "2"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = lrkit(
        &["verify", "--n", "3", "--budget", "2", "--allow-large"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn enumerate_examples() {
    let o = lrkit(
        &[
            "enumerate",
            "--kind",
            "rec",
            "--outer",
            "1,1,1,1",
            "--n",
            "2",
        ],
        "",
    );
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 1);
    let doc: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(doc["rows"], json!([[1], [1], [1], [1]]));

    let o = lrkit(
        &[
            "enumerate",
            "--kind",
            "spt",
            "--outer",
            "1,1",
            "--n",
            "2",
            "--count",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), "5");
    let o = lrkit(
        &[
            "enumerate",
            "--kind",
            "lrs",
            "--outer",
            "1",
            "--n",
            "1",
            "--count",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), "0");
    let o = lrkit(
        &[
            "enumerate",
            "--kind",
            "ssyt",
            "--outer",
            "2,1",
            "--m",
            "4",
            "--count",
        ],
        "",
    );
    assert_eq!(stdout(&o).trim(), "20");

    // deterministic order
    let args = [
        "enumerate",
        "--kind",
        "ssyt",
        "--outer",
        "3,2",
        "--inner",
        "1",
        "--n",
        "2",
    ];
    assert_eq!(lrkit(&args, "").stdout, lrkit(&args, "").stdout);

    let o = lrkit(
        &[
            "enumerate",
            "--kind",
            "spt",
            "--outer",
            "2",
            "--inner",
            "1",
            "--n",
            "2",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    let o = lrkit(&["enumerate", "--kind", "lrs", "--outer", "2"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn symmetry_examples() {
    let out = json_out(&lrkit(
        &["symmetry", "--n", "3", "--rows", "5", "--cols", "4"],
        SUNDARAM,
    ));
    assert_eq!(
        out["lozenge"]["rows"],
        json!([[1], [2, 1], [3, 2], [3, 1], [1]])
    );
    assert_eq!(out["blacklozenge"]["outer"], json!([5, 4, 4, 3]));
    assert_eq!(out["blacklozenge"]["inner"], json!([4, 3, 1]));
    assert_eq!(
        out["blacklozenge"]["rows"],
        json!([[1], [1], [1, 2, 2], [1, 3, 3]])
    );

    let out = json_out(&lrkit(
        &["symmetry", "--n", "1"],
        r#"{"outer":[],"rows":[]}"#,
    ));
    assert_eq!(out["lozenge"]["outer"], json!([]));
    assert_eq!(out["blacklozenge"]["outer"], json!([]));

    let o = lrkit(&["symmetry", "--n", "1"], r#"{"outer":[1],"rows":[[1]]}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("EvenWeight"), "{}", stderr(&o));

    let o = lrkit(
        &["symmetry", "--n", "3", "--rows", "4", "--cols", "4"],
        SUNDARAM,
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn render_grids() {
    let o = lrkit(&["render"], SUNDARAM);
    assert_eq!(stdout(&o), ". . . 1\n. 1 2\n1 2\n2 3\n4\n");

    let mapped = stdout(&lrkit(
        &["map", "--n", "2"],
        r#"{"outer":[2,2],"rows":[[1,1],[2,2]]}"#,
    ));
    let o = lrkit(&["render"], &mapped);
    assert_eq!(stdout(&o), "p:\n(empty)\n\nq:\n2 1\n2 1\n");

    let o = lrkit(&["render"], r#"{"outer":[2],"inner":[1],"rows":[[12]]}"#);
    assert_eq!(stdout(&o), ".  12\n");

    // a stream of documents
    let stream = stdout(&lrkit(
        &["enumerate", "--kind", "ssyt", "--outer", "1", "--m", "2"],
        "",
    ));
    assert_eq!(stdout(&lrkit(&["render"], &stream)), "1\n\n2\n");
}
