use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rearrange::step::{oracle_rearrange, three_level_example};

const BIN: &str = env!("CARGO_BIN_EXE_rearrange");

const EXAMPLE: &str = "# three levels\nkind: step\npiece 0 2 1\npiece 3 4 2\npiece 5 5.5 3\n";

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("REARRANGE_QUAD_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_spec(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn column(table: &(Vec<String>, Vec<Vec<f64>>), name: &str) -> Vec<f64> {
    let idx = table.0.iter().position(|h| h == name).unwrap();
    table.1.iter().map(|r| r[idx]).collect()
}

fn norm_value(o: &Output) -> f64 {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix("value: "))
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn example_spec_matches_the_built_in() {
    assert_eq!(
        rearrange::spec_file::parse(EXAMPLE).unwrap(),
        rearrange::spec_file::FunctionSpec::Step(three_level_example())
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "oracle", "--trials", "0"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(run(&["figures", "9", "--out", out]).status.code(), Some(2));
    let spec = write_spec(dir.path(), "f.spec", EXAMPLE);
    let spec = spec.to_str().unwrap();
    assert_eq!(run(&["norm", spec, "--p", "0"]).status.code(), Some(2));
    assert_eq!(run(&["rearrange", spec, "--grid", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_report_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_spec(dir.path(), "bad.spec", "kind: step\npiece 0 1 1\npiece 2 x 1\n");
    let o = run(&["norm", bad.to_str().unwrap(), "--p", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let overlap = write_spec(dir.path(), "overlap.spec", "kind: step\npiece 0 2 1\npiece 1 3 1\n");
    let o = run(&["rearrange", overlap.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn io_errors_exit_4() {
    assert_eq!(run(&["norm", "/nonexistent/f.spec", "--p", "2"]).status.code(), Some(4));
    let dir = tempfile::tempdir().unwrap();
    let blocker = write_spec(dir.path(), "file", "");
    let out = blocker.join("sub");
    let o = run(&["figures", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    let spec = write_spec(dir.path(), "f.spec", EXAMPLE);
    let o = run(&["rearrange", spec.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_single_row() {
    let o = run(&["verify", "hardy_littlewood", "--seed", "42", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "name,trials,violations,min_margin,empirical_constant");
    assert!(lines[1].starts_with("hardy_littlewood,1,0,"));
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify", "all", "--trials", "20", "--details"]);
    let b = run(&["verify", "all", "--trials", "20", "--details"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    assert_ne!(a.stdout, run(&["verify", "all", "--trials", "20", "--seed", "7"]).stdout);
}

#[test]
fn rearrange_matches_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "f.spec", EXAMPLE);
    let o = run(&["rearrange", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let table = parse_csv(&stdout(&o));
    assert_eq!(table.0, ["t", "f", "mu_f", "f_sharp", "f_starstar"]);
    assert_eq!(table.1.len(), 100);
    let f = three_level_example();
    for (t, fs) in column(&table, "t").into_iter().zip(column(&table, "f_sharp")) {
        assert_eq!(fs, oracle_rearrange(&f, t).unwrap(), "t = {t}");
    }
    // f** is the running average of f#.
    let ss = column(&table, "f_starstar");
    assert_eq!(ss[0], 3.0);
    assert!(ss.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn rearrange_writes_breakpoints() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "f.spec", EXAMPLE);
    let out = dir.path().join("out");
    let o = run(&["rearrange", spec.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let breaks = std::fs::read_to_string(out.join("rearrange.breaks.csv")).unwrap();
    let sharp: Vec<&str> = breaks.lines().filter(|l| l.starts_with("f_sharp,")).collect();
    assert_eq!(sharp, ["f_sharp,0,0.5,3,0", "f_sharp,0.5,1.5,2,0", "f_sharp,1.5,3.5,1,0"]);
    assert!(breaks.contains("mu_f,0,1,3.5,0"));
    // f** = 2 + 0.5/t on [0.5, 1.5).
    assert!(breaks.contains("f_starstar,0.5,1.5,2,0.5"), "{breaks}");
    assert!(out.join("rearrange.csv").exists());
}

#[test]
fn empty_step_gives_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "zero.spec", "kind: step\n");
    let o = run(&["rearrange", spec.to_str().unwrap(), "--grid", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let table = parse_csv(&stdout(&o));
    assert_eq!(table.1.len(), 5);
    for name in ["f", "mu_f", "f_sharp", "f_starstar"] {
        assert!(column(&table, name).iter().all(|&x| x == 0.0), "{name}");
    }
    for which in ["lp", "quasi", "triple"] {
        let o = run(&["norm", spec.to_str().unwrap(), "--p", "2", "--which", which]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(norm_value(&o), 0.0);
    }
}

#[test]
fn singular_profile_rearrangement() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "half.spec", "kind: bertrand\nalpha 0.5\nbeta 0\n");
    let o = run(&["rearrange", spec.to_str().unwrap(), "--grid", "41"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let table = parse_csv(&stdout(&o));
    let ts = column(&table, "t");
    assert_eq!(*ts.last().unwrap(), 2.0);
    for (t, fs) in ts.into_iter().zip(column(&table, "f_sharp")) {
        if t > 0.0 && t < 2.0 {
            let want = (t / 2.0).powf(-0.5);
            assert!(((fs - want) / want).abs() < 1e-7, "t = {t}: {fs} vs {want}");
        }
    }
}

#[test]
fn norms_of_the_example() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "f.spec", EXAMPLE);
    let spec = spec.to_str().unwrap();
    let o = run(&["norm", spec, "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("method: exact-closed-form"));
    assert!((norm_value(&o) - 10.5f64.sqrt()).abs() < 1e-10);
    let weak = run(&["norm", spec, "--p", "1", "--q", "inf"]);
    assert_eq!(weak.status.code(), Some(0));
    assert!((norm_value(&weak) - 3.5).abs() < 1e-10, "{}", stdout(&weak));
    let triple = run(&["norm", spec, "--p", "2", "--q", "3", "--which", "triple"]);
    assert_eq!(triple.status.code(), Some(0));
    assert!(norm_value(&triple) >= norm_value(&run(&["norm", spec, "--p", "2", "--q", "3"])));
}

#[test]
fn triple_norm_needs_a_step() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "b.spec", "kind: bertrand\nalpha 0.5\nbeta 0\n");
    let o = run(&["norm", spec.to_str().unwrap(), "--p", "2", "--which", "triple"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn divergent_norm_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "h.spec", "kind: bertrand\nalpha 1\nbeta 0\n");
    let o = run(&["norm", spec.to_str().unwrap(), "--p", "1", "--which", "lp"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("value: inf"));
    assert!(stdout(&o).contains("divergence: "));
}

#[test]
fn figure_3_matches_rearrange() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "f.spec", EXAMPLE);
    let out = dir.path().join("figs");
    let o = run(&["figures", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let fig = parse_csv(&std::fs::read_to_string(out.join("figure3.csv")).unwrap());
    let table = parse_csv(&stdout(&run(&["rearrange", spec.to_str().unwrap(), "--grid", "201"])));
    for name in ["t", "f_sharp", "f_starstar"] {
        assert_eq!(column(&fig, name), column(&table, name), "{name}");
    }
}

#[test]
fn figures_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let o = run(&["figures", "all", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).lines().count(), 8);
    }
    for id in 1..=8 {
        let name = format!("figure{id}.csv");
        let x = std::fs::read(a.path().join(&name)).unwrap();
        assert_eq!(x, std::fs::read(b.path().join(&name)).unwrap(), "{name}");
    }
}

#[test]
fn quadrature_tolerance_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "half.spec", "kind: bertrand\nalpha 0.5\nbeta 0\n");
    let args = ["norm", spec.to_str().unwrap(), "--p", "1", "--which", "lp"];
    let loose = Command::new(BIN)
        .args(args)
        .env("REARRANGE_QUAD_TOL", "1e-3")
        .output()
        .unwrap();
    assert_eq!(loose.status.code(), Some(0));
    let value = norm_value(&loose);
    assert!((value - 4.0).abs() < 4e-3, "{value}");
    assert!((norm_value(&run(&args)) - 4.0).abs() < 4e-6);
}
