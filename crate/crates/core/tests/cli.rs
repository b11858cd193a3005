use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepchoose")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// A fresh fixture directory holding `files`.
fn fixture_dir(tag: &str, files: &[(&str, &str)]) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sepchoose-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    for (rel, text) in files {
        let p = dir.join(rel);
        std::fs::create_dir_all(p.parent().unwrap()).unwrap();
        std::fs::write(p, text).unwrap();
    }
    dir
}

#[test]
fn records_are_byte_stable() {
    let a = run(&["--format", "record", "audit-discharging"]);
    let b = run(&["--format", "record", "audit-discharging"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("audit-discharging\tcc6/case/cc6-K3\tpass\t0/1\t\n"));
    assert!(text.contains("audit-discharging\tdcc67/case/dcc67-f5\tpass\t2/9\t"));
    assert!(text.contains("audit-discharging\tcc7/lp/integer-min\tpass\t17/4\t"));
    assert!(text.lines().all(|l| l.split('\t').count() == 5));
}

#[test]
fn find_at_exit_codes() {
    let c4 = run(&["find-at", "c4"]);
    assert_eq!(code(&c4), 0);
    assert!(stdout(&c4).contains("EE=2 EO=0"));
    let c3 = run(&["--format", "record", "find-at", "c3"]);
    assert_eq!(code(&c3), 1);
    assert_eq!(stdout(&c3), "find-at\tc3\tfail\t\tnone\n");
    assert_eq!(code(&run(&["find-at", "cycle25"])), 3);
    assert_eq!(code(&run(&["find-at", "k4", "--f", "4"])), 0);
    assert_eq!(code(&run(&["find-at", "k4", "--f", "3,3"])), 2);
    assert_eq!(code(&run(&["find-at", "nosuch"])), 2);
    let d2 = run(&["find-at", "d2"]);
    assert_eq!(code(&d2), 0);
    assert!(stdout(&d2).contains("d2/stored"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["--fixtures", "/nonexistent/fixtures", "verify-catalog"])), 2);
    assert_eq!(code(&run(&["audit-discharging", "--variant", "c9"])), 2);
    assert_eq!(code(&run(&["verify-merges", "--forbidden-len", "3"])), 2);
    assert_eq!(code(&run(&["verify-catalog", "nosuch"])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
}

#[test]
fn small_runs_pass() {
    let o = run(&["verify-catalog", "cycle4", "diamond1", "d2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("3 items, 0 not passing"));
    let m = run(&["--format", "record", "verify-merges", "d1"]);
    assert_eq!(code(&m), 0);
    assert!(stdout(&m).contains("verify-merges\td1/merge 3-6\tpass\t\texhaustive,"));
}

#[test]
fn budget_exhaustion_exits_three() {
    let o = run(&["--budget", "10", "verify-catalog", "d9"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("budget"));
}

#[test]
fn injected_bad_catalog_entry_fails() {
    let bad = "config tri\nvertices 3\nedge 0 1\nedge 1 2\nedge 2 0\nx 0 1 2\nex 0 2\nex 1 2\nex 2 2\nend\n";
    let dir = fixture_dir("catalog", &[("catalog.cfg", bad)]);
    let o = run(&["--fixtures", dir.to_str().unwrap(), "--format", "record", "verify-catalog"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "verify-catalog\ttri\tfail\t\tnot reducible; witness {0,1} {0,1} {0,1}\n");
    let garbled = fixture_dir("garbled", &[("catalog.cfg", "config x\nvertices two\nend\n")]);
    assert_eq!(code(&run(&["--fixtures", garbled.to_str().unwrap(), "verify-catalog"])), 2);
}

#[test]
fn perturbed_ledger_fails() {
    let text = include_str!("../fixtures/ledgers/dcc67.led").replacen("gain -1/9 x 4 via R1b", "gain -1/9 x 5 via R1b", 1);
    let dir = fixture_dir("ledger", &[("ledgers/dcc67.led", &text)]);
    let o = run(&["--fixtures", dir.to_str().unwrap(), "--format", "record", "audit-discharging", "--variant", "dcc67"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("dcc67/case/dcc67-f5\tfail\t1/9\t"));
}
