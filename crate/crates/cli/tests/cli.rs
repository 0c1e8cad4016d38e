use std::path::Path;
use std::process::{Command, Output};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e510"))
        .args(args)
        .env("E510_CACHE_DIR", cache)
        .current_dir(cache)
        .output()
        .expect("spawn e510")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_reports_pass_and_zero_maps() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["verify", "nabla", "C", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: pass"));

    let o = run(dir.path(), &["verify", "t_AB", "4", "--full"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree: 4"));

    let o = run(dir.path(), &["verify", "nabla", "A", "3", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("zero map: yes"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "nabla_XY", "1"][..],
        &["verify", "t_AB", "2"],
        &["verify", "nabla", "D", "1", "1"],
        &["compose", "nabla C 0 0", "nabla C 0 0"],
        &["sweep", "--degree", "0", "--grid", "1"],
        &["frobnicate"],
    ] {
        assert_eq!(run(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn compose_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.txt");
    let o = run(
        dir.path(),
        &[
            "compose",
            "nabla C 0 0",
            "t_AB 3",
            "--out",
            out.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("report: e510\n"));
    assert!(text.contains("source: (3,0,0,0)\n"));
    assert!(text.contains("target: (0,0,1,0)\n"));
    assert!(text.contains("degree: 5\n"));
    assert!(text.contains("zero map: no\n"));
}

#[test]
fn sweep_is_resumable_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("r1.txt");
    let out2 = dir.path().join("r2.txt");
    let args = |out: &Path| {
        vec![
            "sweep".to_string(),
            "--degree".into(),
            "1".into(),
            "--grid".into(),
            "1".into(),
            "--out".into(),
            out.to_str().unwrap().into(),
        ]
    };
    let a1 = args(&out1);
    let o = run(
        dir.path(),
        &a1.iter().map(String::as_str).collect::<Vec<_>>(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("matches Theorem 4.2 list: yes"));
    let log = std::fs::read_to_string(dir.path().join("sweep.log")).unwrap();
    let lines: Vec<&str> = log.lines().collect();
    assert!(!lines.is_empty());
    for l in &lines {
        assert_eq!(l.split(';').count(), 5, "{l}");
    }
    assert!(lines
        .iter()
        .any(|l| l.starts_with("1,0,0,0;0,0,0,1;1;1;ok:")));

    let a2 = args(&out2);
    let o = run(
        dir.path(),
        &a2.iter().map(String::as_str).collect::<Vec<_>>(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains(&format!("resumed: {}", lines.len())));
    // nothing appended, and the two reports agree apart from the echoed --out
    assert_eq!(
        std::fs::read_to_string(dir.path().join("sweep.log")).unwrap(),
        log
    );
    let strip = |p: &Path| {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with("args: "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&out1), strip(&out2));
}

#[test]
fn sweep_grid_zero_finds_one_cell() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["sweep", "--degree", "1", "--grid", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let cells: Vec<&str> = s.lines().filter(|l| l.starts_with("cell: ")).collect();
    assert_eq!(cells.len(), 1);
    assert!(cells[0].starts_with("cell: 0,0,0,0;0,0,1,0;1;1;ok:"));
}

#[test]
fn infeasible_cells_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["sweep", "--degree", "1", "--grid", "1", "--cap", "1"],
    );
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains(";-;infeasible"));
}

#[test]
fn diagram_edges() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["diagram", "--bound", "-1"]);
    assert_eq!(stdout(&o), "digraph e510 {\n  rankdir=LR;\n}\n");

    let o = run(dir.path(), &["diagram", "--bound", "4"]);
    let s = stdout(&o);
    assert!(s.contains("M0_2_0_0 -> M0_1_0_0 [label=\"∇_A\", degree=1];"));
    assert!(s.contains("M2_0_0_1 -> M1_0_0_2 [label=\"∇_B\", degree=1];"));
    assert!(s.contains("M0_0_1_2 -> M0_0_2_2 [label=\"∇_C\", degree=1];"));
    assert!(s.contains("M3_0_0_0 -> M0_0_0_0 [label=\"t_AB\", degree=4];"));
    assert!(s.contains("M4_0_0_0 -> M1_0_0_0 [label=\"t_AB\", degree=4];"));
    // t_AB sources start at n = 3
    for l in s.lines().filter(|l| l.contains("t_AB")) {
        assert!(l.starts_with("  M3_") || l.starts_with("  M4_"), "{l}");
    }
}

#[test]
fn selftest_subset() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["selftest", "--only", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("criterion 1 (bracket table): pass"));
    assert!(s.contains("criterion 2 (Jacobi identity): pass"));
    assert!(s.contains("verdict: pass"));
}

#[test]
fn corrupted_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("F_0_0_1_0.txt");
    std::fs::write(&file, "garbage\n").unwrap();
    let o = run(dir.path(), &["verify", "nabla", "C", "0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_ne!(std::fs::read_to_string(&file).unwrap(), "garbage\n");
}
