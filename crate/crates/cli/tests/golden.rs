//! JSON reports compared byte-for-byte against checked-in files.
//! Run with `UPDATE_GOLDEN=1` to rewrite them after an intended change.

use std::path::PathBuf;
use std::process::Command;

use bihom::catalog::catalog_names;

struct Case {
    name: String,
    args: Vec<String>,
    exit: i32,
}

fn case(name: &str, args: &[&str], exit: i32) -> Case {
    Case {
        name: name.to_string(),
        args: args.iter().map(|s| s.to_string()).collect(),
        exit,
    }
}

fn cases() -> Vec<Case> {
    let mut out: Vec<Case> = catalog_names()
        .into_iter()
        .map(|n| case(&format!("check-all-{n}"), &["check", "--catalog", n, "--suite", "all", "--json"], 0))
        .collect();
    let heis = ["--catalog", "example25-heisenberg", "--object", "heisenberg", "--json"];
    let with = |op: &str, extra: &[&str]| -> Vec<String> {
        let mut v = vec!["structure".to_string(), op.to_string()];
        v.extend(heis.iter().chain(extra).map(|s| s.to_string()));
        v
    };
    for (name, args, exit) in [
        ("heisenberg-center", with("center", &[]), 0),
        ("heisenberg-derived-series", with("derived-series", &[]), 0),
        ("heisenberg-lcs-derived", with("lcs", &["--vector", "0,0,1"]), 0),
        ("heisenberg-certificate", with("certificate", &[]), 0),
        ("heisenberg-ideal-check-x3", with("ideal-check", &["--basis", "x3"]), 0),
        ("heisenberg-ideal-check-x1", with("ideal-check", &["--basis", "x1"]), 1),
        ("heisenberg-closure-x1", with("closure", &["--basis", "x1"]), 0),
    ] {
        out.push(Case {
            name: name.to_string(),
            args,
            exit,
        });
    }
    out.push(case(
        "example24-certificate",
        &["structure", "certificate", "--catalog", "example24", "--json"],
        0,
    ));
    out
}

#[test]
fn reports_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for c in cases() {
        let out = Command::new(env!("CARGO_BIN_EXE_bihom")).args(&c.args).output().unwrap();
        assert_eq!(out.status.code(), Some(c.exit), "{}: {}", c.name, String::from_utf8_lossy(&out.stderr));
        let path = dir.join(format!("{}.json", c.name));
        let actual = String::from_utf8(out.stdout).unwrap();
        if update {
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if expected != actual {
            mismatched.push(c.name);
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch (rerun with UPDATE_GOLDEN=1 if intended): {mismatched:?}");
}
