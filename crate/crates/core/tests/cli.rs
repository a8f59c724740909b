//! End-to-end runs of the `homalg` binary: exit codes, report format, file outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

use homalg::report::Report;
use homalg::scalar::{parse_scalar, ParamSet};

fn homalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homalg")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Report {
    Report::from_json(&String::from_utf8_lossy(&o.stdout)).expect("stdout is a report")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const IDEMPOTENTS: &str = "algebra split\nbasis e1 e2\nmu\n  e1 e1 : e1 = 1\n  e2 e2 : e2 = 1\nend\nalpha identity\n";
const SWAP: &str = "map swap\nbasis e1 e2\nf\n  e1 : e2 = 1\n  e2 : e1 = 1\nend\n";

#[test]
fn passing_law_exits_zero_with_empty_witnesses() {
    let o = homalg(&["--format", "json", "check", "catalog:hom_assoc_3d", "--law", "hom-assoc"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert!(r.results[0].holds && r.results[0].witnesses.is_empty());
}

#[test]
fn failing_law_exits_one_with_canonical_witness() {
    let o = homalg(&["--format", "json", "check", "catalog:hom_assoc_3d_untwisted", "--law", "hom-assoc"]);
    assert_eq!(code(&o), 1);
    let r = json(&o);
    let w = r.results[0].witnesses.iter().find(|w| w.indices == [0, 0, 2]).expect("witness at (x1,x1,x3)");
    let mut ps = ParamSet::new();
    ps.declare("a", false).unwrap();
    ps.declare("b", false).unwrap();
    assert_eq!(w.value, parse_scalar("(a - b)*b", &ps).unwrap().to_string());
    assert_eq!(w.labels, ["x1", "x1", "x3"]);
}

#[test]
fn laurent_jacobi_window_five_holds() {
    let o = homalg(&["sigma", "laurent", "--q", "q", "--s", "1", "--k", "0", "--window", "5", "--check", "jacobi"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["--format", "json", "check", "catalog:hom_lie_3d_untwisted", "--law", "hom-lie", "--law", "g5"];
    let mut a = json(&homalg(&args));
    let mut b = json(&homalg(&args));
    a.ms = 0;
    b.ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(Report::from_json(&a.to_json()).unwrap(), a);
}

#[test]
fn thread_count_does_not_change_reports() {
    let args = ["--format", "json", "check", "catalog:jackson_sl2", "--law", "hom-lie"];
    let one = Command::new(env!("CARGO_BIN_EXE_homalg")).args(args).env("HOMALG_THREADS", "1").output().unwrap();
    let mut a = json(&one);
    let mut b = json(&homalg(&args));
    a.ms = 0;
    b.ms = 0;
    assert_eq!(a, b);
}

#[test]
fn window_skips_are_counted_not_failed() {
    let o = homalg(&["--format", "json", "virasoro", "--window", "2"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert!(r.results.iter().any(|x| x.skipped > 0 && x.holds));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&homalg(&["frobnicate"])), 2);
    assert_eq!(code(&homalg(&["check", "/nonexistent/x.homdef", "--law", "hom-assoc"])), 2);
    assert_eq!(code(&homalg(&["check", "catalog:hom_assoc_3d", "--law", "no-such-law"])), 2);
    assert_eq!(code(&homalg(&["sigma", "truncated", "--n", "2", "--sigma", "1,1", "--psi", "1"])), 2);
}

#[test]
fn undeclared_label_is_named() {
    let p = scratch("undeclared.homdef", "algebra z\nbasis x\nmu\n  x w : x = 1\nend\nalpha identity\n");
    let o = homalg(&["check", p.to_str().unwrap(), "--law", "hom-assoc"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("'w'"));
}

#[test]
fn empty_product_is_the_zero_algebra() {
    let p = scratch("zero.homdef", "algebra z\nbasis x y\nmu\nend\nalpha identity\n");
    assert_eq!(code(&homalg(&["check", p.to_str().unwrap(), "--law", "hom-assoc", "--law", "hom-lie"])), 0);
}

#[test]
fn twist_writes_a_hom_associative_file() {
    let a = scratch("split.homdef", IDEMPOTENTS);
    let e = scratch("swap.homdef", SWAP);
    let out = a.with_file_name("split_twisted.homdef");
    let o = homalg(&["twist", a.to_str().unwrap(), "--endo", e.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let c = homalg(&["check", out.to_str().unwrap(), "--law", "hom-assoc"]);
    assert_eq!(code(&c), 0);
}

#[test]
fn dual_of_dual_reproduces_the_input() {
    let first = scratch("assoc_dual.homdef", "");
    let second = first.with_file_name("assoc_dual_dual.homdef");
    assert_eq!(code(&homalg(&["dual", "catalog:hom_assoc_3d", "--out", first.to_str().unwrap()])), 0);
    assert_eq!(code(&homalg(&["check", first.to_str().unwrap(), "--law", "hom-coassoc"])), 0);
    assert_eq!(code(&homalg(&["dual", first.to_str().unwrap(), "--out", second.to_str().unwrap()])), 0);
    let o = homalg(&["check", second.to_str().unwrap(), "--law", "hom-assoc"]);
    assert_eq!(code(&o), 0);
    let orig = homalg::catalog::load("hom_assoc_3d").unwrap();
    let back = homalg::homdef::read_definition(&second).unwrap();
    let (homalg::homdef::Definition::Algebra(x), homalg::homdef::Definition::Algebra(y)) = (orig, back) else { panic!("algebras expected") };
    assert_eq!((x.mu, x.alpha), (y.mu, y.alpha));
}

#[test]
fn antipode_reports_the_inverse_map() {
    let o = homalg(&["--format", "json", "antipode", "catalog:group_z3"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert!(r.results.iter().any(|x| x.law == "antipode" && x.data.is_some()));
    assert_eq!(code(&homalg(&["antipode", "catalog:matrix_coords_2_1"])), 1);
}

#[test]
fn text_format_names_each_law() {
    let o = homalg(&["check", "catalog:group_z3", "--law", "bialgebra"]);
    assert_eq!(code(&o), 0);
    let t = String::from_utf8_lossy(&o.stdout);
    assert!(t.contains("compatibility") && t.contains("HOLDS"));
}
