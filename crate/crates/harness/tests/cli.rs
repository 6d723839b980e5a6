use std::process::Command;

fn dualpivot() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dualpivot"));
    cmd.env_remove("DUALPIVOT_OUT_DIR");
    cmd
}

fn stdout(args: &[&str]) -> String {
    let out = dualpivot().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sort_prints_frequencies_and_costs() {
    let text = stdout(&["sort", "--keys", "3,1,2", "--m", "1"]);
    for line in ["A = 1", "R = 4", "S1 = 1", "cmps = 2", "swaps = 3", "writes = 6"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn predict_and_optimal_m() {
    let v: f64 = stdout(&["predict", "--measure", "cmps", "--m", "1", "--n", "4", "--mode", "recurrence"]).trim().parse().unwrap();
    assert!((v - 65.0 / 12.0).abs() < 1e-12);
    assert!(stdout(&["optimal-m", "--measure", "writes"]).starts_with("M = 5"));
}

#[test]
fn experiment_writes_to_the_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let status = dualpivot()
        .env("DUALPIVOT_OUT_DIR", dir.path())
        .args(["experiment", "--sizes", "30,60", "--trials", "20", "--measures", "cmps,swaps"])
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(dir.path().join("experiment.csv")).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("n,mean_cmps,"));
}

#[test]
fn distribution_modes() {
    let dir = tempfile::tempdir().unwrap();
    let exact = dir.path().join("exact.csv");
    let args = ["distribution", "--measure", "cmps", "--m", "1", "--n", "3", "--mode", "exact", "--out"];
    assert!(dualpivot().args(args).arg(&exact).status().unwrap().success());
    assert_eq!(std::fs::read_to_string(&exact).unwrap().lines().count(), 4);
    let fix = dir.path().join("fix.csv");
    let args = ["distribution", "--measure", "swaps", "--mode", "fixpoint", "--depth", "12", "--samples", "5000", "--bins", "25", "--out"];
    assert!(dualpivot().args(args).arg(&fix).status().unwrap().success());
    assert_eq!(std::fs::read_to_string(&fix).unwrap().lines().count(), 26);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| dualpivot().args(args).output().unwrap().status.code();
    assert_eq!(code(&["experiment", "--sizes", "1"]), Some(1));
    assert_eq!(code(&["experiment", "--trials", "0"]), Some(1));
    assert_eq!(code(&["distribution", "--measure", "writes", "--mode", "fixpoint"]), Some(1));
    assert_eq!(code(&["no-such-command"]), Some(1));
    assert_eq!(code(&["experiment", "--sizes", "10", "--trials", "2", "--out", "/nonexistent/dir/x.csv"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}
