use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn sympow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympow")).args(args).output().expect("binary runs")
}

fn scenarios() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn tetrahedron_scan_reports_first_failure_at_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = sympow(&["run", scenarios().join("tetrahedron-scan.scn").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&o.stdout);
    assert!(stdout.contains("summary: first failure n=2"), "{stdout}");
    let v = read_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "scan");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["summary"]["kind"], "first-failure");
    assert_eq!(v["result"]["entries"][1]["report"]["witness"], "x*y*z*w");
}

#[test]
fn default_report_path_sits_next_to_the_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(scenarios().join("hankel-profile.scn")).unwrap();
    let p = write(dir.path(), "h.scn", &text);
    let o = sympow(&["run", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&dir.path().join("h.report.json"));
    assert_eq!(v["command"], "profile");
}

#[test]
fn same_scenario_gives_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    let scn = scenarios().join("binomial-probe.scn");
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = sympow(&["run", scn.to_str().unwrap(), "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v = read_json(&a);
    assert_eq!(v["result"]["confirms_prediction"], true);
}

#[test]
fn guard_abort_exits_two_with_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = sympow(&["run", scenarios().join("pentagon-guarded.scn").to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v = read_json(&out);
    assert_eq!(v["status"], "guard-abort");
    let entries = v["result"]["entries"].as_array().unwrap();
    assert_eq!(entries[0]["report"]["equal"], true);
    assert_eq!(entries[1]["guard_abort"], true);
    assert_eq!(v["result"]["summary"]["kind"], "incomplete");
}

#[test]
fn guard_flag_overrides_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = sympow(&[
        "--guard-degree",
        "40",
        "run",
        scenarios().join("pentagon-guarded.scn").to_str().unwrap(),
        "--json",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_json(&out)["result"]["summary"]["kind"], "first-failure");
}

#[test]
fn unknown_task_exits_one_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.scn", "ring = QQ[x,y]\nideal = x, y\ntask = dance\n");
    let o = sympow(&["run", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3, column 8"), "{err}");
    let v = read_json(&dir.path().join("bad.report.json"));
    assert_eq!(v["status"], "input-error");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn polynomial_syntax_error_points_into_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.scn", "ring = QQ[x,y]\nideal = x^2, q\ntask = profile\n");
    let o = sympow(&["run", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 14"));
}

#[test]
fn invalid_strategy_is_an_input_error() {
    let o = sympow(&[
        "compare",
        "--ring",
        "QQ[x,y,z,w]",
        "--ideal",
        "yzw, xzw, xyw, xyz",
        "--n",
        "2",
        "--strategy",
        "saturation-at-irrelevant",
        "--justification",
        "dim1-radical",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn subcommands_run() {
    let o = sympow(&["resolve", "--ring", "QQ[a,b,c,d,e]", "--ideal", "ac,ad,be,bd,ce"]);
    assert_eq!(o.status.code(), Some(0));
    let o = sympow(&["classify", "--ring", "QQ[x1,x2,x3,x4]", "--ideal", "x1*x3, x2*x4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = sympow(&["cremona", "verify", "--ring", "QQ[x,y,z]", "--forms", "x^2, x*y, y*z", "--inverse", "x*y, y^2, x*z"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn repro_all_passes() {
    let o = sympow(&["repro", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("9/9 cases passed"));
    assert_eq!(sympow(&["repro", "nonsense"]).status.code(), Some(1));
}

#[test]
fn bad_arguments_exit_one() {
    assert_eq!(sympow(&["compare", "--ring", "QQ[x]"]).status.code(), Some(1));
    assert_eq!(sympow(&["--help"]).status.code(), Some(0));
}
