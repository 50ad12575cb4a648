use std::fs;
use std::path::Path;
use std::process::Command;

use clap::Parser;
use quandle_cli::{run, Cli, ExitStatus};

const TREFOIL: &str = "gens: a b c;\nrels: a^b = c; b^c = a; c^a = b;\n";

fn invoke(args: &[&str]) -> (ExitStatus, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("quandle").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(&cli, &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn enumerate_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "trefoil.q", TREFOIL);
    let (status, out, _) = invoke(&["enumerate", &f]);
    assert_eq!(status, ExitStatus::Success);
    assert_eq!(out.trim(), "size=3 components=[3]");
}

#[test]
fn small_budget_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "trefoil.q", TREFOIL);
    let (status, _, err) = invoke(&["enumerate", &f, "--max-elements", "2"]);
    assert_eq!(status, ExitStatus::BudgetExceeded);
    assert!(err.contains("budget exceeded"));
}

#[test]
fn json_export_is_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "trefoil.q", TREFOIL);
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for target in [&a, &b] {
        let (status, _, _) = invoke(&["enumerate", &f, "--json", target.to_str().unwrap()]);
        assert_eq!(status, ExitStatus::Success);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["size"], 3);
}

#[test]
fn parse_errors_carry_locations() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.q", "gens: a b c;\nrels: a^d = a;\n");
    let (status, _, err) = invoke(&["enumerate", &f]);
    assert_eq!(status, ExitStatus::Usage);
    assert!(err.contains("2:9"), "{err}");
}

#[test]
fn family_verify_passes_for_worked_example() {
    let (status, out, _) = invoke(&["family", "3", "3", "5", "--verify"]);
    assert_eq!(status, ExitStatus::Success, "{out}");
    assert!(out.contains("size=130"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn family_raw_and_reduced_are_compared() {
    let (status, out, _) = invoke(&["family", "3", "3", "5", "--raw", "--reduced"]);
    assert_eq!(status, ExitStatus::Success);
    assert!(out.contains("raw and reduced: isomorphic"), "{out}");
}

#[test]
fn family_rejects_trivial_tangle() {
    let (status, _, err) = invoke(&["family", "1", "0", "2"]);
    assert_eq!(status, ExitStatus::Usage);
    assert!(err.contains("divisible"), "{err}");
    let (status, _, _) = invoke(&["family", "1", "2", "4"]);
    assert_eq!(status, ExitStatus::Usage);
}

#[test]
fn family_accepts_negative_parameters() {
    let (status, out, _) = invoke(&["family", "-2", "2", "5"]);
    assert_eq!(status, ExitStatus::Success);
    assert!(out.contains("size=130"));
}

#[test]
fn sweep_writes_rows_in_parameter_order() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("rows.csv");
    let (_, _, _) = invoke(&[
        "sweep",
        "--q-max",
        "3",
        "--k-min",
        "0",
        "--k-max",
        "1",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    let text = fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "k,p,q,d,size,components,formula_size,match,elapsed_ms"
    );
    assert_eq!(lines.len(), 7);
    assert!(lines[2].starts_with("1,1,2,1,8,4|4,8,"), "{}", lines[2]);
}

#[test]
fn empty_sweep_is_header_only() {
    let (status, out, _) = invoke(&["sweep", "--q-max", "1", "--k-min", "0", "--k-max", "3"]);
    assert_eq!(status, ExitStatus::Success);
    assert_eq!(
        out,
        "k,p,q,d,size,components,formula_size,match,elapsed_ms\n"
    );
}

#[test]
fn iso_finds_mirror_images() {
    let dir = tempfile::tempdir().unwrap();
    let fp = quandle_core::FamilyParams::normalize(3, 3, 5).unwrap();
    let a = write(
        dir.path(),
        "a.q",
        &quandle_core::family::reduced_presentation(&fp).serialize(),
    );
    let b = write(
        dir.path(),
        "b.q",
        &quandle_core::family::reduced_presentation(&fp.mirror()).serialize(),
    );
    let (status, out, _) = invoke(&["iso", &a, &b]);
    assert_eq!(status, ExitStatus::Success);
    assert!(out.starts_with("isomorphic"), "{out}");
    let t = write(dir.path(), "t.q", TREFOIL);
    let (_, out, _) = invoke(&["iso", &a, &t]);
    assert!(out.starts_with("not isomorphic"), "{out}");
}

#[test]
fn pd_codes() {
    let (_, out, _) = invoke(&["pd", "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"]);
    assert_eq!(out.trim(), "size=3 components=[3]");
    let (_, out, _) = invoke(&["pd", "X(1,3,2,4),X(3,1,4,2)"]);
    assert_eq!(out.trim(), "size=2 components=[1, 1]");
    let (status, _, _) = invoke(&["pd", "X(1,2,3,4)"]);
    assert_eq!(status, ExitStatus::Usage);
}

#[test]
fn dot_export_marks_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    invoke(&["family", "1", "1", "2", "--dot", dot.to_str().unwrap()]);
    let text = fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("graph quandle {"));
    assert_eq!(text.matches("penwidth=2").count(), 3);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_quandle");
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "trefoil.q", TREFOIL);
    let code = |args: &[&str], env: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(args).env_remove("QUANDLE_MAX_ELEMENTS");
        if let Some(v) = env {
            cmd.env("QUANDLE_MAX_ELEMENTS", v);
        }
        cmd.output().unwrap().status.code()
    };
    assert_eq!(code(&["enumerate", &f], None), Some(0));
    assert_eq!(code(&["enumerate", &f], Some("2")), Some(2));
    assert_eq!(code(&["no-such-command"], None), Some(1));
    assert_eq!(code(&["enumerate", "/nonexistent/file"], None), Some(1));
}
