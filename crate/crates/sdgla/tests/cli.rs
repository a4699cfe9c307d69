use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sdgla::format::OutputDocument;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn sdgla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdgla")).args(args).output().expect("binary runs")
}

fn doc(out: &Output) -> OutputDocument {
    serde_json::from_slice(&out.stdout).expect("stdout is an output document")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fixture_files_match_the_generator() {
    for (name, text) in sdgla::generate::fixture_files() {
        let on_disk = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(on_disk, text, "{name} is stale; rerun the gen_fixtures example");
    }
}

#[test]
fn validate_exit_codes() {
    assert_eq!(sdgla(&["validate", path(&fixture("crossed_module.json"))]).status.code(), Some(0));
    let bad = sdgla(&["validate", path(&fixture("non_jacobi.json"))]);
    assert_eq!(bad.status.code(), Some(1));
    let d = doc(&bad);
    assert_eq!(d.validation[0].law, "d:lie-jacobi");
    assert_eq!(d.validation[0].witness, vec![0, 1, 2]);
    assert_eq!(sdgla(&["validate", path(&fixture("bad_rational.json"))]).status.code(), Some(2));
    assert_eq!(sdgla(&["validate", "/nonexistent/input.json"]).status.code(), Some(2));
}

#[test]
fn dgla_output_is_deterministic_and_rechecks() {
    let input = fixture("peiffer.json");
    let a = sdgla(&["dgla", path(&input)]);
    let b = sdgla(&["dgla", path(&input)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let d = doc(&a);
    let bracket = d.dgla.as_ref().unwrap().brackets.iter().find(|t| t.degrees == [1, 1]).unwrap();
    assert_eq!(bracket.table.entries, vec!["-2"]);
    assert!(d.reports.as_ref().unwrap().sign_table.iter().any(|e| e.n == 2));

    let dir = std::env::temp_dir().join(format!("sdgla-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("peiffer-out.json");
    assert_eq!(sdgla(&["dgla", path(&input), "--out", path(&out)]).status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), a.stdout);
    let re = sdgla(&["dgla", "--recheck", path(&out)]);
    assert_eq!(re.status.code(), Some(0));

    // d_2 = 1 breaks Leibniz on the pair of degree-1 generators.
    let mut v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    v["dgla"]["differential"][1]["entries"][0] = "1".into();
    let bad = dir.join("peiffer-bad.json");
    std::fs::write(&bad, serde_json::to_vec(&v).unwrap()).unwrap();
    assert_eq!(sdgla(&["dgla", "--recheck", path(&bad)]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn direct_length_three_input() {
    let out = sdgla(&["dgla", path(&fixture("abelian_length3.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let d = doc(&out);
    assert_eq!(d.dgla.as_ref().unwrap().top, 3);
    assert!(d.dgla.as_ref().unwrap().brackets.iter().all(|b| b.table.entries.iter().all(|e| e == "0")));
    let signs = &d.reports.as_ref().unwrap().sign_table;
    assert!(signs.iter().any(|e| e.n == 2) && signs.iter().any(|e| e.n == 3));
}

#[test]
fn moore_and_truncation() {
    let out = sdgla(&["moore", path(&fixture("crossed_module.json")), "--truncation", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let m = doc(&out).moore.unwrap();
    assert_eq!(m.dims, vec![2, 1, 0]);
    assert_eq!(m.level_dims, vec![2, 3, 4]);
    assert_eq!(m.deltas[0].entries, vec!["0", "1"]);
    let out = sdgla(&["moore", path(&fixture("crossed_module.json")), "--truncation", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_tables_and_level_errors() {
    let out = sdgla(&["oracle", path(&fixture("crossed_module.json")), "--level", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let o = doc(&out).oracle.unwrap();
    assert_eq!(o.linear[0].0, 1);
    assert_eq!(o.linear[0].1.entries, vec!["0", "-1"]);
    let out = sdgla(&["oracle", path(&fixture("crossed_module.json")), "--level", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(doc(&out).error.unwrap().contains("Moore length 1"));
    let out = sdgla(&["oracle", path(&fixture("abelian_two_crossed.json")), "--level", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(doc(&out).oracle.unwrap().brackets.iter().all(|b| b.table.entries.iter().all(|e| e == "0")));
}

#[test]
fn text_format() {
    let out = sdgla(&["dgla", path(&fixture("crossed_module.json")), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("d_1: L-1 -> L0 [0 -1]"));
    assert!(s.contains("oracle discrepancies: 0"));
}
