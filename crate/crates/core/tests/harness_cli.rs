use std::io::Write;
use std::process::{Command, Output};

fn psigroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psigroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn psi_of_labels_and_families() {
    let o = psigroup(&["psi", "A5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "211");
    assert_eq!(stdout(&psigroup(&["psi", "dihedral", "6"])).trim(), "13");
    assert_eq!(
        stdout(&psigroup(&["psi", "abelian", "2", "2", "2"])).trim(),
        "15"
    );
    assert_eq!(psigroup(&["psi", "NoSuchGroup"]).status.code(), Some(2));
}

#[test]
fn psi_cyclic_closed_form() {
    assert_eq!(stdout(&psigroup(&["psi-cyclic", "12"])).trim(), "77");
    assert_eq!(psigroup(&["psi-cyclic", "0"]).status.code(), Some(2));
}

#[test]
fn table_of_the_catalog() {
    let o = psigroup(&["table", "--format", "csv", "--max-order", "16"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(rows.len() >= 42);
    assert!(rows.contains(&"Q8,8,false,27,43,27,43,true"));

    let o = psigroup(&["table", "--format", "json", "--max-order", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["label"] == "S3"));
}

#[test]
fn table_to_file_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = psigroup(&["table", "--max-order", "12", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_with_a_corpus_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        r#"{{"label": "S3", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}}"#
    )
    .unwrap();
    writeln!(f).unwrap();
    writeln!(
        f,
        r#"{{"label": "V4", "degree": 4, "generators": [[1, 0, 3, 2], [2, 3, 0, 1]]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();

    let o = psigroup(&["verify", "--theorem", "T1", "--corpus", path, "-v"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2 entries"), "{text}");
    assert!(text.contains("equality: V4"), "{text}");
}

#[test]
fn malformed_corpus_is_an_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        r#"{{"label": "S3", "degree": 3, "generators": [[1, 2, 0]]}}"#
    )
    .unwrap();
    writeln!(
        f,
        r#"{{"label": "bad", "degree": 3, "generators": [[0, 0, 1]]}}"#
    )
    .unwrap();
    let o = psigroup(&["verify", "--corpus", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        psigroup(&["verify", "--theorem", "T1", "--max-order", "40"])
            .status
            .code(),
        Some(0)
    );
    // the case split fails for non-cyclic p-groups such as C2 x C2
    let o = psigroup(&["verify", "--theorem", "T6", "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample C2xC2"));
    assert_eq!(
        psigroup(&["verify", "--theorem", "T99"]).status.code(),
        Some(2)
    );
}

#[test]
fn family_description() {
    let o = psigroup(&["family", "semidirect", "7", "3", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("order      21"), "{text}");
    assert!(text.contains("psi        85"), "{text}");
}
