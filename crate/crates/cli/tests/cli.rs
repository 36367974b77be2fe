use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fuzzy_closure::document;
use fuzzy_closure_core::corpus::{build_example, Example, ExampleId};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn fcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcs")).args(args).output().unwrap()
}

fn fcs_path(args: &[&str], path: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcs")).args(args).arg(path).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixtures_match_the_corpus() {
    for id in ExampleId::ALL {
        let text = std::fs::read_to_string(fixture(&format!("{}.json", id.name()))).unwrap();
        let expected = match build_example(id, 3, id.default_denominator()).unwrap() {
            Example::Space(s) => document::serialize_space(&s),
            Example::Map(m) => document::serialize_map(&m),
        };
        assert_eq!(text, expected, "{}", id.name());
    }
}

#[test]
fn example_command_prints_the_fixture() {
    let o = fcs(&["example", "--name", "cycle3_xyz"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("cycle3_xyz.json")).unwrap());
    assert_eq!(fcs(&["example", "--name", "nope"]).status.code(), Some(2));
}

#[test]
fn closure_and_interior() {
    let cycle = fixture("cycle3_xyz.json");
    let o = fcs_path(&["closure", "--set", "x=1/2"], &cycle);
    assert_eq!(stdout(&o).trim(), "{x, y}");
    let o = fcs_path(&["interior", "--set", "{q,r}"], &fixture("pqr_interior.json"));
    assert_eq!(stdout(&o).trim(), "{r}");
    let o = fcs_path(&["closure", "--set", "w=1"], &cycle);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_reports_every_axiom() {
    let o = fcs_path(&["classify"], &fixture("discrete.json"));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 10);
    assert!(out.lines().all(|l| l.ends_with(": true")));

    let out = stdout(&fcs_path(&["classify"], &fixture("shift_cycle.json")));
    assert!(out.contains("normal: true"));
    assert!(out.lines().any(|l| l.starts_with("regular: false (")));
}

#[test]
fn topology_of_the_three_cycle_is_trivial() {
    let out = stdout(&fcs_path(&["topology"], &fixture("cycle3_xyz.json")));
    assert!(out.starts_with("opens: 2\n"));
    assert!(out.contains("ft0: false"));
}

#[test]
fn map_commands() {
    let rotation = fixture("cycle4_pqrs.json");
    let o = fcs_path(&["continuity"], &rotation);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("preimage_preserves_open: true"));
    assert_eq!(fcs_path(&["homeo"], &rotation).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(&rotation).unwrap();
    let swapped = text.replace(
        "\"p\": \"q\",\n    \"q\": \"r\",\n    \"r\": \"s\",\n    \"s\": \"p\"",
        "\"p\": \"q\",\n    \"q\": \"p\",\n    \"r\": \"r\",\n    \"s\": \"s\"",
    );
    assert_ne!(swapped, text, "map layout changed");
    let path = dir.path().join("swap.json");
    std::fs::write(&path, swapped).unwrap();
    let o = fcs_path(&["continuity"], &path);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("continuous: false ("));
}

#[test]
fn constructions_emit_valid_documents() {
    let dir = tempfile::tempdir().unwrap();
    let sub = fcs(&[
        "subspace",
        fixture("cycle3_xyz.json").to_str().unwrap(),
        "--elements",
        "x,y",
    ]);
    assert_eq!(sub.status.code(), Some(0));
    let sub_path = dir.path().join("sub.json");
    std::fs::write(&sub_path, &sub.stdout).unwrap();
    assert_eq!(fcs_path(&["validate"], &sub_path).status.code(), Some(0));

    let product = fcs(&[
        "product",
        sub_path.to_str().unwrap(),
        sub_path.to_str().unwrap(),
    ]);
    assert_eq!(product.status.code(), Some(0));
    let space = document::parse_space(&stdout(&product)).unwrap();
    assert_eq!(space.carrier().len(), 4);

    let clash = fcs(&["sum", sub_path.to_str().unwrap(), sub_path.to_str().unwrap()]);
    assert_eq!(clash.status.code(), Some(2));
    let sum = fcs(&[
        "sum",
        sub_path.to_str().unwrap(),
        fixture("pqr_interior.json").to_str().unwrap(),
    ]);
    assert_eq!(sum.status.code(), Some(0));
    assert_eq!(document::parse_space(&stdout(&sum)).unwrap().carrier().len(), 5);
}

#[test]
fn invalid_documents_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let shrinking = r#"{
  "format": 1,
  "universe": ["a"],
  "denominator": 2,
  "operator": {
    "kind": "table",
    "entries": [
      {"set": {}, "closure": {}},
      {"set": {"a": "1/2"}, "closure": {}},
      {"set": {"a": "1"}, "closure": {"a": "1"}}
    ]
  }
}
"#;
    let path = dir.path().join("shrinking.json");
    std::fs::write(&path, shrinking).unwrap();
    let o = fcs_path(&["validate"], &path);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).is_empty());

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"format\": 1,\n  \"universe\": [\n").unwrap();
    let o = fcs_path(&["validate"], &broken);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    assert_eq!(fcs_path(&["classify"], &dir.path().join("missing.json")).status.code(), Some(2));
}

#[test]
fn enumeration_budget_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_fcs"))
        .env("FCS_MAX_CARRIER", "10")
        .arg("classify")
        .arg(fixture("cycle3_xyz.json"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_and_suite() {
    let o = fcs(&["search", "--property", "t0_not_t1", "--max-n", "2", "--max-d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(document::parse_space(&stdout(&o)).is_ok());
    let o = fcs(&["search", "--property", "t1_not_t2", "--max-n", "2", "--max-d", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(fcs(&["search", "--property", "nope"]).status.code(), Some(2));

    let small = [
        "suite", "--exhaustive-n", "2", "--exhaustive-d", "1", "--random-n", "3", "--random-d", "2", "--samples", "5",
    ];
    assert_eq!(fcs(&small).status.code(), Some(0));
    let mut mutated = small.to_vec();
    mutated.extend(["--mutation", "cft1_always_holds", "--theorem", "t1_equivalences"]);
    let o = fcs(&mutated);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL t1_equivalences"));
}
