use std::path::PathBuf;
use std::process::Command;

use rankjump::analysis::{Analyzer, DegreeBox};
use rankjump::cli::{self, AnalysisReport, DegreeReport, EXIT_INPUT, EXIT_OK, SKIPPED_NOT_SIMPLEX};
use rankjump::fixtures;
use rankjump::Error;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn rankjump(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rankjump"))
        .args(args)
        .env_remove("RANKJUMP_CACHE_DIR")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn analyze_f3_verifies() {
    let f3 = fixture("f3.json");
    let (code, stdout, _) = rankjump(&["analyze", "--matrix", f3.to_str().unwrap(), "--box=-2:4,-2:4"]);
    assert_eq!(code, EXIT_OK);
    let report: AnalysisReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.verified());
    assert_eq!(report.exceptional, vec![vec![1, 2]]);
    assert_eq!(report.theorem_verdict, "pass");
    assert_eq!(report.normalized_volume, 4);
}

#[test]
fn analyze_non_simplex_is_skipped_not_failed() {
    let p4 = fixture("p4.json");
    let (code, stdout, _) = rankjump(&["analyze", "--matrix", p4.to_str().unwrap(), "--box=-1:2,-1:2,-1:2", "--margin", "1"]);
    assert_eq!(code, EXIT_OK);
    let report: AnalysisReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.theorem_verdict, SKIPPED_NOT_SIMPLEX);
    assert!(report.rank_jumping.is_none());
    assert!(report.exceptional.is_empty());
}

#[test]
fn malformed_input_exits_with_input_error() {
    let bad = fixture("bad.json");
    let (code, stdout, stderr) = rankjump(&["analyze", "--matrix", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(stdout.is_empty());
    assert!(!stderr.is_empty());
    let (code, _, _) = rankjump(&["analyze", "--matrix", "/nonexistent/matrix.json"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn degree_dimension_mismatch_is_an_input_error() {
    let f3 = fixture("f3.json");
    let (code, _, stderr) = rankjump(&["degree", "--matrix", f3.to_str().unwrap(), "--beta", "1,2,3"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!stderr.is_empty());
}

#[test]
fn degree_report_round_trips() {
    let f3 = fixture("f3.json");
    let (code, stdout, _) = rankjump(&["degree", "--matrix", f3.to_str().unwrap(), "--beta", "1,2"]);
    assert_eq!(code, EXIT_OK);
    let report: DegreeReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.cohomology, vec![0, 1, 0]);
    assert!(report.exceptional);
    assert_eq!(report.rank_jumping, Some(true));
    assert_eq!(report.nabla, vec![vec![1], vec![4], vec![1, 2, 3, 4]]);
    let again: DegreeReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
    assert_eq!(report, cli::degree(&fixtures::f3(), &[1, 2]).unwrap());
}

#[test]
fn negative_degree_and_table_format() {
    let f1 = fixture("f1.json");
    let (code, stdout, _) = rankjump(&["degree", "--matrix", f1.to_str().unwrap(), "--beta", "-2,-1", "--format", "table"]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("cohomology  [0, 0, 1]"));
    assert!(stdout.contains("rank jump   false"));
}

#[test]
fn csv_and_json_inputs_agree() {
    let csv = cli::read_matrix(&fixture("f3.csv"), true).unwrap();
    let json = cli::read_matrix(&fixture("f3.json"), false).unwrap();
    assert_eq!(csv, json);
    let f3 = fixture("f3.csv");
    let (code, stdout, _) = rankjump(&["degree", "--matrix", f3.to_str().unwrap(), "--csv", "--beta", "1,2"]);
    assert_eq!(code, EXIT_OK);
    let report: DegreeReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.exceptional);
}

#[test]
fn analysis_report_round_trips() {
    let region = DegreeBox::parse("-2:4,-2:4", 2).unwrap();
    let report = cli::analyze(&fixtures::f3(), &region, Some(7)).unwrap();
    let back: AnalysisReport = serde_json::from_str(&report.canonical_json().unwrap()).unwrap();
    assert_eq!(back.canonical_json().unwrap(), report.canonical_json().unwrap());
    assert_eq!(report.spot_check.as_ref().unwrap().samples, 64);
    assert!(report.spot_check.as_ref().unwrap().disagreements.is_empty());
}

#[test]
fn cached_rerun_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let f3 = fixture("f3.json");
    let args = |out: &str| {
        vec![
            "analyze".to_string(),
            "--matrix".into(),
            f3.to_str().unwrap().into(),
            "--box=-2:4,-2:4".into(),
            "--cache".into(),
            dir.path().to_str().unwrap().into(),
            "--output".into(),
            dir.path().join(out).to_str().unwrap().into(),
        ]
    };
    let a: Vec<String> = args("a.json");
    let b: Vec<String> = args("b.json");
    assert_eq!(rankjump(&a.iter().map(String::as_str).collect::<Vec<_>>()).0, EXIT_OK);
    assert_eq!(rankjump(&b.iter().map(String::as_str).collect::<Vec<_>>()).0, EXIT_OK);
    let first: AnalysisReport = serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.json")).unwrap()).unwrap();
    let second: AnalysisReport = serde_json::from_str(&std::fs::read_to_string(dir.path().join("b.json")).unwrap()).unwrap();
    assert!(!first.timing.cached);
    assert!(second.timing.cached);
    assert_eq!(first.canonical_json().unwrap(), second.canonical_json().unwrap());
}

#[test]
fn plot_requires_two_dimensions() {
    let p4 = fixture("p4.json");
    let (code, _, stderr) = rankjump(&["plot", "--matrix", p4.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!stderr.is_empty());
    let analyzer = Analyzer::from_rows(&fixtures::p4()).unwrap();
    let region = DegreeBox::parse("-1:1,-1:1,-1:1", 1).unwrap();
    let report = cli::analyze(&fixtures::p4(), &region, None).unwrap();
    assert!(matches!(
        cli::render_svg(&analyzer, &report),
        Err(Error::UnsupportedDimension(3))
    ));
}

#[test]
fn f3_plot_marks_the_hole() {
    let f3 = fixture("f3.json");
    let (code, svg, _) = rankjump(&["plot", "--matrix", f3.to_str().unwrap(), "--box=-2:4,-2:4"]);
    assert_eq!(code, EXIT_OK);
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    let group = |id: &str| {
        let start = svg.find(&format!("<g id=\"{id}\"")).expect("group present");
        let end = start + svg[start..].find("</g>").unwrap();
        svg[start..end].matches("<circle").count()
    };
    assert_eq!(group("exceptional"), 1);
    assert_eq!(group("rank-jumping"), 1);
}
