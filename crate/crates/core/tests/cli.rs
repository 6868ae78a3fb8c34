//! The `arith-tutte` binary on the shipped fixtures.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arith-tutte"))
        .args(args)
        .env_remove("ARITH_TUTTE_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim().to_string()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn check_theorems_passes_on_every_fixture() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let out = run(&["check-theorems", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", path.display(), String::from_utf8_lossy(&out.stdout));
        let doc = json(&out);
        assert_eq!(doc["passed"], Value::Bool(true));
        assert_eq!(doc["failed"], Value::from(0));
        seen += 1;
    }
    assert!(seen >= 5);
}

#[test]
fn non_fano_arithmetic_tutte_has_nonnegative_integer_coefficients() {
    let out = run(&["arith-tutte", fixture("non-fano.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let terms = doc["polynomial"]["terms"].as_array().unwrap();
    let mut at_one = 0i64;
    for t in terms {
        let c = t["coeff"].as_str().unwrap();
        let (num, den) = c.split_once('/').unwrap();
        assert_eq!(den, "1", "{c}");
        let num: i64 = num.parse().unwrap();
        assert!(num >= 0, "{c}");
        at_one += num;
    }
    // M(1, 1) sums basis multiplicities: 29 bases, one of multiplicity 2.
    assert_eq!(at_one, 30);
}

#[test]
fn text_outputs() {
    let two = fixture("two-in-z.json");
    let two = two.to_str().unwrap();
    assert_eq!(text(&run(&["tutte", two, "--format", "text"])), "x");
    assert_eq!(text(&run(&["arith-tutte", two, "--format", "text"])), "x + 1");
    let k3 = fixture("triangle.json");
    let k3 = k3.to_str().unwrap();
    assert_eq!(text(&run(&["chromatic", k3, "--q", "3", "--format", "text"])), "6");
    assert_eq!(text(&run(&["flow-count", k3, "--q", "3", "--format", "text"])), "2");
    let empty = fixture("empty-z4.json");
    assert_eq!(text(&run(&["potts", empty.to_str().unwrap(), "--q", "2", "--format", "text"])), "2");
    let empty = fixture("empty-z2-z2.json");
    assert_eq!(text(&run(&["potts", empty.to_str().unwrap(), "--H", "2", "--format", "text"])), "4");
    let planar = fixture("planar-zonotope.json");
    let planar = planar.to_str().unwrap();
    assert_eq!(
        text(&run(&["ehrhart", planar, "--format", "text"])),
        "1 + 3*v1 + 2*v2 + v3 + 6*v1*v2 + 3*v1*v3 + 2*v2*v3"
    );
    assert_eq!(text(&run(&["ehrhart", planar, "--at", "2,1,3", "--format", "text"])), "48 (lattice points: 48)");
}

#[test]
fn json_outputs_have_the_documented_shapes() {
    let mixed = fixture("mixed-torsion.json");
    let mixed = mixed.to_str().unwrap();
    let quasi = json(&run(&["quasi", mixed]));
    let period = quasi["period"].as_u64().unwrap();
    assert_eq!(quasi["constituents"].as_array().unwrap().len() as u64, period);
    let z = json(&run(&["multivariate", mixed]));
    assert_eq!(z["expansion"]["terms"].as_array().unwrap().len(), 16);
    let crapo = json(&run(&["crapo", mixed]));
    assert!(!crapo["terms"].as_array().unwrap().is_empty());
    let act = json(&run(&["activities", mixed]));
    assert!(act["bases"].as_array().unwrap().iter().all(|b| b["external_polynomial"]["terms"].is_array()));
    let flow = json(&run(&["flow", mixed, "--q", "4", "--v", "1/2,-1,2,3"]));
    assert!(flow["value"].as_str().unwrap().contains('/'));
    let axioms = json(&run(&["check-axioms", mixed]));
    assert_eq!(axioms["passed"], Value::Bool(true));
}

#[test]
fn minors_and_duals_are_valid_inputs() {
    let dir = tempfile::tempdir().unwrap();
    for (fixture_name, args) in [
        ("mixed-torsion.json", vec!["contract", "--e", "1"]),
        ("mixed-torsion.json", vec!["delete", "--e", "4"]),
        ("triangle.json", vec!["delete", "--e", "2"]),
        ("triangle.json", vec!["contract", "--e", "2"]),
        ("uniform-tables.json", vec!["dual"]),
        ("non-fano.json", vec!["dual"]),
    ] {
        let path = fixture(fixture_name);
        let mut full = vec![args[0], path.to_str().unwrap()];
        full.extend(&args[1..]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{fixture_name} {args:?}");
        let written = write_temp(&dir, "minor.json", &String::from_utf8(out.stdout).unwrap());
        let check = run(&["check-axioms", &written]);
        assert_eq!(check.status.code(), Some(0), "{fixture_name} {args:?}: {}", String::from_utf8_lossy(&check.stdout));
    }
}

#[test]
fn standard_input_is_accepted() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arith-tutte"))
        .args(["arith-tutte", "-", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"group": {"free_rank": 1}, "vectors": [[3]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(text(&out), "x + 2");
}

#[test]
fn exit_codes_and_messages() {
    let dir = tempfile::tempdir().unwrap();
    let bad_vertex = write_temp(&dir, "a.json", r#"{"graph": {"vertices": 2, "edges": [{"tail": 1, "head": 3}]}}"#);
    let out = run(&["tutte", &bad_vertex]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph.edges[0].head"));

    let bad_axioms = write_temp(
        &dir,
        "b.json",
        r#"{"tables": {"ranks": [0, 1, 1, 1], "multiplicities": [1, 1, 1, 2], "kind": "arithmetic"}}"#,
    );
    assert_eq!(run(&["check-axioms", &bad_axioms]).status.code(), Some(4));
    assert_eq!(run(&["check-theorems", &bad_axioms]).status.code(), Some(4));

    let two = fixture("two-in-z.json");
    let out = run(&["contract", two.to_str().unwrap(), "--e", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("element 3"));

    let out = Command::new(env!("CARGO_BIN_EXE_arith-tutte"))
        .args(["flow-count", fixture("non-fano.json").to_str().unwrap(), "--q", "20"])
        .env("ARITH_TUTTE_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let renormalized = write_temp(&dir, "c.json", r#"{"group": {"free_rank": 0, "torsion": [2, 3]}, "vectors": [[1, 1]]}"#);
    let out = run(&["arith-tutte", &renormalized, "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));

    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
