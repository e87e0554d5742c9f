use std::path::PathBuf;
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veerkit"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn validate_reports_veering() {
    let out = stdout(&["validate", "fig8.vrt"]);
    assert!(out.contains("veering"), "{out}");
}

#[test]
fn validate_broken_exits_one() {
    let out = run(&["validate", "broken.vrt"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("involution violation at tet 0 face 3"),
        "{err}"
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["weights"]).status.code(), Some(2));
}

#[test]
fn mutate_prints_the_regluing_and_mutant() {
    let out = stdout(&["mutate", "fig8.vrt", "--weights", "q0.wts", "--aut", "rs"]);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert!(
        rows.contains(&vec!["f+", "|", "f2+", "f5+", "f7+", "f11+"]),
        "{out}"
    );
    assert!(
        rows.contains(&vec!["r(f+)", "|", "f7-", "f11-", "f2-", "f5-"]),
        "{out}"
    );
    let sig = stdout(&["signature", "mutant-rs.vrt"]);
    assert!(out.contains(sig.trim()), "{out}");
}

#[test]
fn weights_lists_the_four_surfaces() {
    let out = stdout(&[
        "weights",
        "fig8.vrt",
        "--cap",
        "1",
        "--connected",
        "--emit-wts",
    ]);
    let shipped = std::fs::read_to_string(data_dir().join("fig8-cap1.wts")).unwrap();
    let mut a: Vec<&str> = out.lines().collect();
    let mut b: Vec<&str> = shipped.lines().filter(|l| !l.starts_with('#')).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn pachner_connect_finds_length_four() {
    let out = stdout(&["pachner-connect", "fig8.vrt", "mutant-rs.vrt"]);
    assert!(out.starts_with("path of length 4"), "{out}");
    assert_eq!(out.matches("2-3 at").count(), 2);
    assert_eq!(out.matches("3-2 at").count(), 2);
    let out = stdout(&[
        "pachner-connect",
        "fig8.vrt",
        "mutant-rs.vrt",
        "--max-depth",
        "3",
    ]);
    assert!(out.contains("not found within depth 3"), "{out}");
}

#[test]
fn report_figure7_states_exclusions() {
    let out = stdout(&["report-figure7"]);
    assert!(out.ends_with(veerkit::data::FIGURE7_EXCLUSIONS), "{out}");
    assert!(out.contains("V and V^rs have the same taut signature: no"));
}

#[test]
fn reconstruct_check_is_clean() {
    let out = stdout(&["reconstruct", "--check", "."]);
    assert!(out.contains("11 files up to date"), "{out}");
}

#[test]
fn invariants_commands() {
    assert!(stdout(&["homology", "mutant-r.vrt"]).contains("Z^2"));
    assert!(stdout(&["edge-orient", "mutant-r.vrt"]).starts_with("not edge-orientable"));
    assert!(stdout(&["classify", "fig8.vrt"]).contains("measurable"));
}
