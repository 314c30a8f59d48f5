use std::path::PathBuf;
use std::process::{Command, Output};

use cklein_cli::export::BallRow;
use cklein_cli::report::{AuditSummary, MoveReport, OrbitReport};
use cklein_core::element::Element;

fn cklein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cklein"))
        .args(args)
        .output()
        .expect("run cklein")
}

fn stdout(args: &[&str]) -> String {
    let out = cklein(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    cklein(args).status.code().unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "a b a^-1 b"]), "(1,0,0)\n");
    assert_eq!(stdout(&["eval", ""]), "(0,0,0)\n");
    assert_eq!(stdout(&["eval", "a b^-1 a^2 b^-2"]), "(-3,3,3)\n");
    assert_eq!(stdout(&["eval", "a b^-3 a^2"]), "(-3,3,3)\n");
}

#[test]
fn eval_json_round_trips() {
    let text = stdout(&["eval", "b^-2 a b^-4 a^3", "--json"]);
    let g: Element = serde_json::from_str(&text).unwrap();
    assert_eq!(g, Element::new(-4, 2, 4));
    assert_eq!(text.trim(), r#"{"k":-4,"m":2,"n":4}"#);
}

#[test]
fn geodesic_queries() {
    assert_eq!(stdout(&["std", "(2,1,4)"]), "b^3 a b^2 a^3\n");
    assert_eq!(stdout(&["std", "(-4,2,4)"]), "b^-2 a b^-4 a^3\n");
    assert_eq!(stdout(&["len", "(3,0,0)"]), "8\n");
    assert_eq!(stdout(&["continuations", "(0,0,0)"]), "a a^-1 b b^-1\n");
    assert_eq!(stdout(&["is-geodesic", "a b A b"]), "true\n");
    assert_eq!(stdout(&["is-geodesic", "a b B"]), "false\n");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&["eval", "a c"]), 2);
    assert_eq!(code(&["eval", "a^"]), 2);
    assert_eq!(code(&["len", "(1,2)"]), 2);
    assert_eq!(code(&["std", "1,2,3"]), 2);
    assert_eq!(code(&["orbit", "a A"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    let err = String::from_utf8(cklein(&["eval", "ab x"]).stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");
}

#[test]
fn orbit_reports() {
    let text = stdout(&["orbit", "b^3"]);
    assert!(text.starts_with("element (0,3,0)\nwords 1\n"), "{text}");
    let report: OrbitReport = serde_json::from_str(&stdout(&["orbit", "a b^-1 a^2 b^-2", "--json"])).unwrap();
    assert_eq!(report.element, Element::new(-3, 3, 3));
    assert!(report.words.contains(&"a b^-3 a^2".to_string()));
    assert!(report.edges.iter().all(|e| e.kind == "EVEN_CASTLING"
        || e.kind == "DETOWERING"
        || e.kind == "CLIPPING"));
}

#[test]
fn check_connectivity_reports() {
    let json = stdout(&["check-theorem2", "(-1,3,4)", "--json"]);
    let report: MoveReport = serde_json::from_str(&json).unwrap();
    assert!(report.connected && report.contains_std_rep);
    assert!(report.geodesic_count >= 2);
    assert_eq!(report.orbit_size, report.geodesic_count);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["element", "geodesic_count", "orbit_size", "connected", "edges"] {
        assert!(value.get(key).is_some(), "{key}");
    }
    // the two mirror halves of a loop element are not linked by any move
    let out = cklein(&["check-theorem2", "(2,0,0)", "--json"]);
    assert_eq!(out.status.code(), Some(5));
    let report: MoveReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((report.geodesic_count, report.orbit_size), (6, 3));
}

#[test]
fn ball_summaries_and_exports() {
    assert_eq!(stdout(&["ball", "1", "--model", "ck"]), "model ck radius 1 states 5\nlevels 1 4\n");
    assert!(stdout(&["ball", "10", "--model", "z2"]).starts_with("model z2 radius 10 states 221\n"));
    let csv = stdout(&["ball", "2", "--export", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,m,n,length"));
    assert_eq!(lines.next(), Some("0,0,0,0"));
    assert_eq!(csv.lines().count(), 1 + 17);
    let jsonl = stdout(&["ball", "2", "--model", "klein", "--export", "jsonl"]);
    let rows: Vec<BallRow> = jsonl.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r.k == 0 && r.length <= 2));
}

#[test]
fn ball_writes_files_and_reports_budget() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ball.csv");
    stdout(&["ball", "4", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("k,m,n,length\n"));
    assert_eq!(code(&["ball", "12", "--max-states", "50"]), 3);
    let missing = dir.path().join("no/such/dir/ball.csv");
    assert_eq!(code(&["ball", "2", "--out", missing.to_str().unwrap()]), 4);
}

#[test]
fn audits() {
    let out = cklein(&["audit", "--radius", "10", "--model", "z2"]);
    assert_eq!(out.status.code(), Some(0));
    let summary: AuditSummary = serde_json::from_slice(&out.stdout).unwrap();
    assert!(summary.passed());
    let out = cklein(&["audit", "--radius", "8", "--language", "broken"]);
    assert_eq!(out.status.code(), Some(5));
    let summary: AuditSummary = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!summary.standard_language.prefix_failures.is_empty());
    // cK: everything but the continuation claims on the n = 0 line passes
    let out = cklein(&["audit", "--radius", "10"]);
    let summary: AuditSummary = serde_json::from_slice(&out.stdout).unwrap();
    assert!(summary.no_dead_ends.passed() && summary.standard_language.passed());
    assert!(summary.last_letter.violations.is_empty());
    let c = summary.continuations.unwrap();
    assert!(c.violations.iter().all(|v| v.element.n == 0));
}

#[test]
fn render_matches_goldens() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str], &str); 5] = [
        ("b^-2 a b^-4 a^3", &[], "std_-4_2_4.svg"),
        ("b^-2 a b^-4 a^3", &["--young", "--cells"], "std_-4_2_4_young_cells.svg"),
        ("b^3 a b^2 a^3", &[], "std_2_1_4.svg"),
        ("b^3 a b^2 a^3", &["--young", "--cells"], "std_2_1_4_young_cells.svg"),
        ("", &[], "empty.svg"),
    ];
    for (word, flags, name) in cases {
        let out = dir.path().join(name);
        let mut args = vec!["render", word, "--out", out.to_str().unwrap()];
        args.extend_from_slice(flags);
        stdout(&args);
        let got = std::fs::read(&out).unwrap();
        assert_eq!(got, std::fs::read(golden(name)).unwrap(), "{name}");
    }
}

#[test]
fn render_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.svg");
    let out = out.to_str().unwrap();
    assert_eq!(code(&["render", "a^", "--out", out]), 2);
    // not in the quadrant m, n >= 0
    assert_eq!(code(&["render", "A", "--out", out, "--young"]), 2);
    assert_eq!(code(&["render", "a b B", "--out", out, "--young"]), 2);
    assert_eq!(code(&["render", "a^5000", "--out", out]), 3);
    assert_eq!(code(&["render", "a", "--out", "/nonexistent/dir/x.svg"]), 4);
}
