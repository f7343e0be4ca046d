//! The command-line contract: round trips, determinism, exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bmscheme::catalog;
use bmscheme::io::{dump_catalog, load_scheme};
use bmscheme::Error;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmscheme")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn dump_then_load_round_trips_every_entry() {
    let dir = tempfile::tempdir().unwrap();
    for entry in catalog::reference_entries() {
        let path = dir.path().join(format!("{}.json", entry.name.replace([':', ','], "_")));
        dump_catalog(&entry.name, &path).unwrap();
        let loaded = load_scheme(&path).unwrap();
        assert_eq!(loaded.table, entry.table, "{}", entry.name);
        assert_eq!(loaded.name.as_deref(), Some(entry.name.as_str()));
    }
}

#[test]
fn dump_names() {
    let dir = tempfile::tempdir().unwrap();
    let cube = dir.path().join("cube.json");
    dump_catalog("hamming:3,2", &cube).unwrap();
    assert_eq!(load_scheme(&cube).unwrap().table, catalog::hamming(3, 2).unwrap().table);
    assert_eq!(dump_catalog("nope", dir.path().join("x.json")), Err(Error::UnknownName("nope".into())));
}

#[test]
fn fixtures_load() {
    let petersen = load_scheme(fixture("petersen_graph.json")).unwrap();
    assert_eq!(petersen.table, catalog::petersen().table);
    let pentagon = load_scheme(fixture("pentagon.json")).unwrap();
    assert_eq!(pentagon.table, catalog::cycle(5).unwrap().table);
    assert!(matches!(load_scheme(fixture("bad_entry.json")), Err(Error::Parse { .. })));
    assert!(matches!(load_scheme(fixture("path_p3.json")), Err(Error::NotAScheme { .. })));
}

#[test]
fn machine_reports_are_byte_identical() {
    let path = fixture("petersen_graph.json");
    let args = ["analyze", path.to_str().unwrap(), "--catalog", "icosahedron", "--format", "machine"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0, "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let doc: serde_json::Value = serde_json::Deserializer::from_str(&text)
        .into_iter::<serde_json::Value>()
        .next()
        .unwrap()
        .unwrap();
    assert_eq!(doc["name"], "petersen");
    assert_eq!(doc["qpoly_es"], serde_json::json!([1, 2]));
    assert_eq!(doc["per_e"][0]["q_ratio"]["l_witness"], 2);
    assert_eq!(doc["per_e"][0]["q_ratio"]["k"], serde_json::json!([2.0, -1.0]));
}

#[test]
fn seed_changes_only_the_seed_fields() {
    let a = run(&["analyze", "--catalog", "cube", "--format", "machine"]);
    let b = run(&["analyze", "--catalog", "cube", "--format", "machine", "--seed", "7"]);
    // float noise (residuals, minimum entries) may differ; rounded data and
    // verdicts may not
    let stable = |o: &Output| {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let per_e: Vec<_> = v["per_e"]
            .as_array()
            .unwrap()
            .iter()
            .map(|b| (b["theta_star"].clone(), b["q_ratio"]["k"].clone(), b["q_witness"].clone(), b["p_witness"].clone()))
            .collect();
        (v["eigenmatrix_p"].clone(), v["eigenmatrix_q"].clone(), v["qpoly_es"].clone(), v["ppoly_es"].clone(), per_e)
    };
    assert_eq!(stable(&a), stable(&b));
}

#[test]
fn exit_code_success() {
    let out = run(&["analyze", fixture("pentagon.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status          ok"), "{text}");
    assert!(text.contains("m_1 = 2 excluded"), "{text}");
}

#[test]
fn exit_code_discrepancy() {
    // a huge component threshold blinds the filtration but not the other routes
    let out = run(&["analyze", fixture("petersen_graph.json").to_str().unwrap(), "--tol", "0.9"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stdout).unwrap().contains("DISCREPANCY"));
}

#[test]
fn exit_code_input_errors() {
    for name in ["bad_entry.json", "path_p3.json", "missing.json"] {
        let out = run(&["analyze", fixture(name).to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{name}");
    }
    let bad = run(&["analyze", fixture("bad_entry.json").to_str().unwrap()]);
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("line 5") && err.contains("rows[0][1] = 7"), "{err}");
    assert_eq!(code(&run(&["analyze", "--catalog", "nope"])), 2);
    assert_eq!(code(&run(&["analyze", "--catalog", "cube", "--e", "9"])), 2);
    assert_eq!(code(&run(&["dump", "nope", "/tmp/never-written.json"])), 2);
}

#[test]
fn exit_code_preconditions() {
    let out = run(&["analyze", fixture("triangle.json").to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8(out.stderr).unwrap().contains("class d >= 2 required"));
    let out = run(&["analyze", fixture("cube_graph.json").to_str().unwrap(), "--e", "2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn worst_code_wins_across_inputs() {
    let out = run(&[
        "analyze",
        fixture("pentagon.json").to_str().unwrap(),
        fixture("triangle.json").to_str().unwrap(),
        fixture("bad_entry.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    // the good input still reports
    assert!(String::from_utf8(out.stdout).unwrap().contains("pentagon"));
}

#[test]
fn list_names() {
    let out = run(&["list"]);
    assert_eq!(code(&out), 0);
    let names = String::from_utf8(out.stdout).unwrap();
    assert_eq!(names.lines().count(), catalog::reference_names().len());
}
