use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn zagreb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

const K23: &str = "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";

#[test]
fn generate_emits_parseable_edge_list() {
    let out = zagreb(&["generate", "cycle", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# cycle 5\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 5);
}

#[test]
fn generate_rejects_unknown_family_and_bad_arity() {
    let out = zagreb(&["generate", "moebius", "5"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("unknown family"));
    let out = zagreb(&["generate", "kbip", "3"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("parameters"));
}

#[test]
fn generate_is_seed_deterministic() {
    let a = zagreb(&["generate", "random", "12", "20", "--seed", "7"]);
    let b = zagreb(&["generate", "random", "12", "20", "--seed", "7"]);
    let c = zagreb(&["generate", "random", "12", "20", "--seed", "8"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn invariants_text_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "k23.edges", K23);
    let out = zagreb(&["invariants", &path]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("M1 = 30"));
    assert!(text.contains("M2 = 36"));
    assert!(text.contains("H = 12/5"));
    let out = zagreb(&["invariants", "--format", "csv", &path]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("graph,n,m,"));
    assert!(text.contains("k23,5,6,2,3,30,36,78,"));
}

#[test]
fn invariants_reports_parse_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.edges", "0 1\n1\n");
    let out = zagreb(&["invariants", &path]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn classify_tags() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "s5.edges", "0 1\n0 2\n0 3\n0 4\n0 5\n");
    let out = zagreb(&["classify", &star]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("star(6)"));
    assert!(text.contains("complete-split"));
}

#[test]
fn verify_files_only_writes_full_audit() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "k23.edges", K23);
    let csv = dir.path().join("audit.csv");
    let out = zagreb(&[
        "verify",
        &path,
        "--no-families",
        "--corpus-random",
        "0",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph-id,check-id,lhs,rhs,slack,holds,equality,expected-equality,applicable"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() > 50);
    assert!(rows.iter().all(|r| r.starts_with("k23,")));
    let eq2 = rows.iter().find(|r| r.contains(",EQ2,")).unwrap();
    assert!(eq2.contains("78,72,6,true,false,false,true"));
}

#[test]
fn verify_corpus_passes() {
    let out = zagreb(&["verify", "--corpus-random", "20"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("relation failures: 0"));
    assert!(text.contains("sufficiency violations: 0"));
}

#[test]
fn verify_injected_defect_fails() {
    let out = zagreb(&[
        "verify",
        "--corpus-random",
        "0",
        "--inject-defect",
    ]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("relation failures: 1"));
    assert!(stderr(&out).contains("inject-defect"));
}

#[test]
fn fullerene_report_schema_and_values() {
    let dir = tempfile::tempdir().unwrap();
    let spirals = write(
        dir.path(),
        "cages.spi",
        "c20 20 1 2 3 4 5 6 7 8 9 10 11 12\nc60-ih 60 1 7 9 11 13 15 18 20 22 24 26 32\n",
    );
    let csv = dir.path().join("report.csv");
    let out = zagreb(&[
        "fullerene",
        "--spirals",
        &spirals,
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "label,k,np,irld,irmd_exact,irmd_3dp,eq16,eq17,eq18"
    );
    assert_eq!(lines.next().unwrap(), "c20,20,30,0,0,0.000,true,true,true");
    assert_eq!(
        lines.next().unwrap(),
        "c60-ih,60,0,60,1035/32,32.344,true,true,true"
    );
}

#[test]
fn fullerene_rejects_impossible_spiral() {
    let dir = tempfile::tempdir().unwrap();
    let spirals = write(dir.path(), "bad.spi", "c22 22 1 2 3 4 5 6 7 8 9 10 11 12\n");
    let out = zagreb(&["fullerene", "--spirals", &spirals]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("c22"));
}

#[test]
fn fullerene_scatter_files() {
    let dir = tempfile::tempdir().unwrap();
    let spirals = write(
        dir.path(),
        "cages.spi",
        "c20 20 1 2 3 4 5 6 7 8 9 10 11 12\nc24 24 2 3 4 5 6 7 8 9 10 11 12 13\nc26 26 1 2 3 4 5 7 9 11 12 13 14 15\n",
    );
    let energies = write(dir.path(), "e.csv", "label,energy\nc20,0.1\nc24,3.9\nc26,5.2\n");
    let scatter = dir.path().join("scatter");
    let out = zagreb(&[
        "fullerene",
        "--spirals",
        &spirals,
        "--energies",
        &energies,
        "--scatter-dir",
        scatter.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let base = fs::read_to_string(scatter.join("irld-vs-irmd.csv")).unwrap();
    assert!(base.starts_with("# regression: slope="));
    assert!(base.contains("label,irld,irmd"));
    for name in ["irld-vs-energy.csv", "irmd-vs-energy.csv"] {
        let text = fs::read_to_string(scatter.join(name)).unwrap();
        assert!(text.starts_with("# regression: slope="), "{name}");
        assert_eq!(text.lines().count(), 5, "{name}");
    }
}

#[test]
fn correlate_prints_fit() {
    let dir = tempfile::tempdir().unwrap();
    let index = write(dir.path(), "i.csv", "a,1\nb,2\nc,3\nd,4\n");
    let response = write(dir.path(), "r.csv", "a,3\nb,5\nc,7\nd,9\n");
    let out = zagreb(&["correlate", &index, &response]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pairs = 4"));
    assert!(text.contains("slope = 2"));
    assert!(text.contains("intercept = 1"));
    assert!(text.contains("r2 = 1"));
}

#[test]
fn correlate_rejects_degenerate_input() {
    let dir = tempfile::tempdir().unwrap();
    let index = write(dir.path(), "i.csv", "a,1\nb,1\nc,1\n");
    let response = write(dir.path(), "r.csv", "a,3\nb,5\nc,7\n");
    let out = zagreb(&["correlate", &index, &response]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("constant"));
}
