use std::fs;
use std::process::{Command, Output};

use bihom::catalog::{catalog_names, catalog_text};

fn bihom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bihom")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn every_catalog_entry_passes_all_suites() {
    for name in catalog_names() {
        let out = bihom(&["check", "--catalog", name]);
        assert_eq!(out.status.code(), Some(0), "{name}:\n{}", stdout(&out));
    }
}

#[test]
fn print_reproduces_catalog_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in catalog_names() {
        let text = catalog_text(name).unwrap();
        assert_eq!(stdout(&bihom(&["print", "--catalog", name])), text);
        let path = dir.path().join(format!("{name}.json"));
        fs::write(&path, text).unwrap();
        assert_eq!(stdout(&bihom(&["print", path.to_str().unwrap()])), text, "{name}");
    }
}

#[test]
fn validation_errors_exit_2_with_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = catalog_text("example24").unwrap().replace("[1, 0, 1, \"-1\"]", "[1, 0, 7, \"-1\"]");
    fs::write(&path, text).unwrap();
    let out = bihom(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("26:9: mult entry [1, 0, 7, \"-1\"]"), "{err}");
    assert!(err.contains("34:9: reference_bracket entry"), "{err}");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(bihom(&["check", "--catalog", "no-such-entry"]).status.code(), Some(2));
    assert_eq!(bihom(&["check", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(bihom(&["check", "--catalog", "example24", "--set", "q=1"]).status.code(), Some(2));
    assert_eq!(bihom(&["check", "--catalog", "example24", "--set", "b"]).status.code(), Some(2));
}

#[test]
fn singular_beta_is_refused_with_exit_3() {
    let out = bihom(&["construct", "commutator", "--catalog", "example24", "--set", "b=0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("not bijective"), "{}", stderr(&out));
}

#[test]
fn substituted_parameters_still_pass() {
    for b in ["2", "-1/3"] {
        let set = format!("b={b}");
        let out = bihom(&["check", "--catalog", "example24", "--set", &set, "--suite", "bihom-lie"]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    }
}

#[test]
fn failing_ideal_check_exits_1() {
    let args = [
        "structure", "ideal-check", "--catalog", "example25-heisenberg", "--object", "heisenberg", "--basis", "x1",
    ];
    let out = bihom(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[x1, x2] = x3"));
}

#[test]
fn constructed_files_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    for (what, entry, object) in [
        ("commutator", "example24", "example24"),
        ("twist", "example25-heisenberg", "heisenberg"),
        ("commutator", "cross-product-classical", "matrix-algebra"),
    ] {
        let path = dir.path().join(format!("{entry}-{what}.json"));
        let p = path.to_str().unwrap();
        let out = bihom(&["construct", what, "--catalog", entry, "--object", object, "--output", p]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let check = bihom(&["check", p, "--suite", "bihom-lie"]);
        assert_eq!(check.status.code(), Some(0), "{entry}:\n{}", stdout(&check));
        let printed = stdout(&bihom(&["print", p]));
        assert_eq!(printed, fs::read_to_string(&path).unwrap());
    }
}

#[test]
fn twist_output_has_the_twisted_structure_constants() {
    let out = bihom(&["construct", "twist", "--catalog", "example25-heisenberg", "--object", "heisenberg"]);
    let text = stdout(&out);
    assert!(text.contains("[0, 1, 2, \"l1*l2p\"]"), "{text}");
    assert!(text.contains("[1, 0, 2, \"l1p*l2\"]"), "{text}");
}

#[test]
fn catalog_lists_every_entry() {
    let listed = stdout(&bihom(&["catalog"]));
    assert_eq!(listed.lines().collect::<Vec<_>>(), catalog_names());
}
