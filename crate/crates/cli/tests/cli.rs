use std::path::PathBuf;
use std::process::{Command, Output};

fn indpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

/// Compares JSON output with the stored golden file. Set `UPDATE_GOLDEN=1`
/// to rewrite the file instead.
fn check_golden(name: &str, args: &[&str]) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = indpoly(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stdout, want, "golden mismatch for {name}");
}

#[test]
fn golden_analyze() {
    check_golden("analyze", &["analyze", "zykov(K(127), rep(3,K(7)))"]);
}

#[test]
fn golden_poly() {
    check_golden("poly", &["poly", "zykov(rep(3,K(10)), Kmulti(3*120))"]);
}

#[test]
fn golden_oracle() {
    check_golden("oracle", &["oracle", "P(5)"]);
}

#[test]
fn golden_verify() {
    check_golden("verify", &["verify", "centipede-even", "--n-max", "8"]);
}

#[test]
fn golden_search() {
    check_golden("search", &["search", "trees", "--n-max", "4"]);
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "--format", "json", "search", "star-trees", "--n-max", "12", "--mode", "sample",
        "--seed", "7", "--samples", "15", "--property", "log-concave",
    ];
    let a = indpoly(&args);
    let b = indpoly(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(indpoly(&["poly", "K(3"]).status.code(), Some(2));
    assert_eq!(indpoly(&["poly", "frob(3)"]).status.code(), Some(2));
    assert_eq!(indpoly(&["oracle", "P(27)"]).status.code(), Some(3));
    assert_eq!(
        indpoly(&["oracle", "P(12)", "--max-oracle-vertices", "10"]).status.code(),
        Some(3)
    );
    assert_eq!(indpoly(&["analyze", "P(65)"]).status.code(), Some(3));
    assert_eq!(indpoly(&["verify", "bogus", "--n-max", "3"]).status.code(), Some(1));
    assert_eq!(indpoly(&["search", "trees", "--n-max", "10"]).status.code(), Some(1));
    assert_eq!(indpoly(&["analyze", "S(3)"]).status.code(), Some(0));
}

#[test]
fn json_errors_carry_a_code() {
    let out = indpoly(&["--format", "json", "poly", "K("]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "parse");
    assert!(v["error"]["message"].as_str().unwrap().contains("1:3"));
}

#[test]
fn text_reports() {
    let out = indpoly(&["analyze", "S(3)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all_roots_real: false"));
    assert!(text.contains("log_concave: true"));

    let out = indpoly(&["poly", "star(graph{1;})"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[1, 2]\n");

    let out = indpoly(&["analyze", "ej(Tri(1), 1, K(2), 0)"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("vertices: 5"));
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("indpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c4.txt");
    std::fs::write(&path, "4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let expr = format!("file(\"{}\")", path.display());
    let out = indpoly(&["poly", &expr]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[1, 4, 2]\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
