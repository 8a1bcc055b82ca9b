use std::path::Path;
use std::process::Command;

fn steenrod(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_steenrod")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn outputs_match_golden_files() {
    let cases: &[(&str, &[&str])] = &[
        ("hilbert_tilde_3.txt", &["hilbert", "--family", "tilde", "--n", "3"]),
        ("frobenius_classical_3.txt", &["frobenius", "--family", "classical", "--n", "3"]),
        ("regseq_not_regular.txt", &["regseq", "--n", "2", "--a", "1,-1"]),
        ("diagonal_2.txt", &["diagonal", "--n", "2", "--a", "1,1"]),
        ("wood_basis_3.txt", &["wood-basis", "--n", "3"]),
        ("psi_basis_2.txt", &["psi-basis", "--n", "2", "--k", "1", "--cap", "3"]),
    ];
    for (file, args) in cases {
        let (code, out, err) = steenrod(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(out, golden(file), "{args:?}");
    }
}

#[test]
fn json_reports_carry_a_schema_version() {
    let (code, out, _) = steenrod(&["hilbert", "--family", "classical", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["hilbert"]["coefficients"], serde_json::json!([1, 1, 0]));
    assert_eq!(v["hilbert"]["exact_beyond_cap"], true);
}

#[test]
fn out_flag_writes_the_same_text() {
    let path = std::env::temp_dir().join(format!("steenrod_cli_{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = steenrod(&["hilbert", "--family", "tilde", "--n", "3", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("hilbert_tilde_3.txt"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["hilbert", "--family", "bogus"][..],
        &["hilbert", "--q", "1/0"],
        &["hilbert", "--cap", "500"],
        &["regseq", "--a", "1,x"],
    ] {
        let (code, _, err) = steenrod(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(err.starts_with("error:"), "{args:?}: {err}");
    }
}
