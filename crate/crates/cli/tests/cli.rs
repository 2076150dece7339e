use std::process::{Command, Output};

use quandle_cocycle::invariant::InvariantReport;
use serde_json::Value;

fn qcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcc")).args(args).output().expect("qcc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = qcc(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn trefoil_has_nine_r3_colorings() {
    let v = json(&["colorings", "--knot", "3_1", "--quandle", "dihedral:3"]);
    assert_eq!(v["total"], 9);
    assert_eq!(v["trivial"], 3);
}

#[test]
fn negative_letters_parse_as_a_braid() {
    let v = json(&["colorings", "--braid", "1 -2 1 -2", "--quandle", "dihedral:5"]);
    assert_eq!(v["total"], 25);
}

#[test]
fn table_rows_pass() {
    for t in ["1", "5", "7"] {
        let o = qcc(&["table", t, "--only", "3_1"]);
        assert_eq!(o.status.code(), Some(0), "table {t}: {}", stdout(&o));
        assert!(stdout(&o).contains("3_1    PASS"));
    }
}

#[test]
fn failing_row_exits_one() {
    let o = qcc(&["table", "5", "--only", "8_19"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn module_report_round_trips() {
    let v = json(&["module-invariant", "--knot", "8_18", "--quandle", "dihedral:3"]);
    let report: InvariantReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
    assert_eq!(report.modules().unwrap().total(), 27);
}

#[test]
fn hopf_conjugacy_pair() {
    let o = qcc(&["conj-invariant", "--braid", "1 1", "--quandle", "transpositions:5", "--beta", "builtin:s5-section"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("([(3 4)], [(3 4)])"), "{}", stdout(&o));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["colorings", "--knot", "no_such_knot"][..],
        &["colorings", "--braid", "1 x 2"],
        &["colorings", "--quandle", "dihedral:zero", "--knot", "3_1"],
        &["table", "9"],
        &["quandle", "show", "/no/such/file.json"],
        &["twistspin", "--knot", "3_1", "--bind", "q7=1"],
    ] {
        assert_eq!(qcc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["cocycle", "search", "--q", "3", "--degree", "2", "--sample", "--seed", "11"];
    assert_eq!(stdout(&qcc(&args)), stdout(&qcc(&args)));
    let args = ["report", "invertibility", "--knots", "3_1,8_18,8_20"];
    assert_eq!(stdout(&qcc(&args)), stdout(&qcc(&args)));
}

#[test]
fn quandle_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("qcc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r5.json");
    let p = path.to_str().unwrap();
    assert!(qcc(&["quandle", "make", "dihedral:5", "--out", p]).status.success());
    assert!(stdout(&qcc(&["quandle", "verify", p])).contains("ok"));
    let a = json(&["colorings", "--knot", "4_1", "--quandle", p]);
    let b = json(&["colorings", "--knot", "4_1", "--quandle", "dihedral:5"]);
    assert_eq!(a["total"], b["total"]);

    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    file["op"][0][0] = Value::from(1);
    std::fs::write(&path, file.to_string()).unwrap();
    assert_eq!(qcc(&["quandle", "verify", p]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}
