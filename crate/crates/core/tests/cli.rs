//! The command line through `cli::run`: outputs and exit statuses.

use std::path::PathBuf;

use conespec::cli::{run, Outcome, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};
use conespec::fixtures;
use conespec::io::emit_native;
use conespec::{LocalBranch, SingularPoint};

fn fixture(rel: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(rel);
    p.to_string_lossy().into_owned()
}

fn conespec(args: &[&str]) -> Outcome {
    run(std::iter::once("conespec").chain(args.iter().copied()))
}

fn temp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("conespec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn reduced_examples() {
    let cases = [
        ("cuspidal_cubic.red", "spectrum: 4/3:1, 5/3:1\n"),
        ("conic_squared.red", "spectrum: 3/2:1\npower 2: 5/4:1, 7/4:1, 5/2:1\n"),
        ("fermat_cubic.red", "spectrum: 1:1, 4/3:3, 5/3:3, 2:1\n"),
    ];
    for (file, head) in cases {
        let out = conespec(&["reduced", &fixture(file)]);
        assert_eq!(out.code, EXIT_OK, "{file}: {}", out.stderr);
        assert!(out.stdout.starts_with(head), "{file}: {}", out.stdout);
        assert!(out.stdout.contains("chi(U)="), "{file}");
    }
    let out = conespec(&["reduced", &fixture("nodal_quartic_surface.red")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("spectrum: 1:1, 5/4:4, 3/2:10, 7/4:14, 2:17,"));
    assert!(!out.stdout.contains("e=0"), "no plane table for n=3");
}

#[test]
fn reduced_accepts_a_uniform_thickening() {
    let out = conespec(&["reduced", &fixture("cuspidal_cubic_double.conf")]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("spectrum: 4/3:1, 5/3:1\npower 2: "), "{}", out.stdout);
    let out = conespec(&["reduced", &fixture("tangent_conics.conf")]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn verify_and_oracle_pass_on_fixtures() {
    for file in ["cubic_pencil_matrix.conf", "cuspidal_cubic_double.conf", "tangent_conics.conf"] {
        let out = conespec(&["verify", &fixture(file)]);
        assert_eq!(out.code, EXIT_OK, "{file}: {}", out.stdout);
        assert!(out.stdout.contains("checks passed"));
    }
    let out = conespec(&[
        "oracle",
        &fixture("cubic_pencil.sing"),
        "--param",
        "a=3",
        "--param",
        "b=2",
        "--param",
        "c=2",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("PASS theorem2 rows 0/2 = reference"));
    assert!(out.stdout.contains("PASS corollary2 row 1 = reference"));
}

#[test]
fn mutated_fixture_is_a_mismatch() {
    let text = fixtures::CUBIC_PENCIL_MATRIX.replace("2 2 2 1 1", "2 2 1 1 1");
    let path = temp_file("corrupt.conf", &text);
    let out = conespec(&["verify", &path]);
    assert_eq!(out.code, EXIT_MISMATCH, "{}", out.stdout);
    assert!(out.stdout.contains("FAIL incidence"));
    assert!(out.stdout.contains("components 1 and 3"));

    let json = conespec(&["verify", &path, "--json"]);
    assert_eq!(json.code, EXIT_MISMATCH);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    // the corrupted matrix also changes the incidence form of the middle row
    assert!(!failed.is_empty(), "{}", json.stdout);
    assert!(failed[0].starts_with("incidence"));

    // an extra branch breaks the incidence form of the middle row
    let mut cfg = fixtures::PENCIL_OF_CONICS_252.config().unwrap();
    let mut branches = cfg.points[0].branches().to_vec();
    branches.push(LocalBranch::new(1, 1));
    cfg.points[0] = SingularPoint::new((1, 1), branches).unwrap();
    let out = conespec(&["oracle", &temp_file("extra_branch.conf", &emit_native(&cfg))]);
    assert_eq!(out.code, EXIT_MISMATCH, "{}{}\n{}", out.stdout, out.stderr, emit_native(&cfg));
    assert!(out.stdout.contains("FAIL corollary2 row 1 = theorem2 row 1"), "{}", out.stdout);
}

#[test]
fn input_errors_exit_2() {
    let cases: Vec<Vec<String>> = vec![
        vec!["compute".into(), "/nonexistent/file.conf".into()],
        vec!["compute".into(), fixture("five_lines.sing")],
        vec!["compute".into(), fixture("tangent_conics.conf"), "--middle".into(), "cor2".into()],
        vec!["compute".into(), fixture("cuspidal_cubic.red")],
        vec!["oracle".into(), fixture("conic_squared.red")],
        vec!["compute".into(), temp_file("bad.conf", "component degree=0 mult=1\n")],
        vec!["compute".into(), temp_file("derived.conf", "component degree=2 mult=1\ndegree 2\n")],
        vec!["scan".into(), fixture("five_lines.sing"), "--range".into(), "a=1..".into()],
        vec!["frobnicate".into()],
    ];
    for args in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = conespec(&refs);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = conespec(&["compute", &fixture("five_lines.sing")]);
    assert!(out.stderr.contains("unbound parameter"), "{}", out.stderr);
}

#[test]
fn native_errors_carry_line_numbers() {
    let path = temp_file("line3.conf", "# comment\ncomponent degree=2 mult=1\npoint weights=1,1 branches=(1:0)\n");
    let out = conespec(&["compute", &path]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn csv_format() {
    let out = conespec(&[
        "compute",
        &fixture("five_lines.sing"),
        "--param",
        "a=4",
        "--param",
        "b=2",
        "--param",
        "c=0",
        "--format",
        "csv",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "i,alpha,e,value");
    assert_eq!(lines[1], "1,1/9,0,0");
    assert!(lines.contains(&"9,1,0,4"), "{}", out.stdout);
    assert!(lines.contains(&"9,2,1,-4"), "{}", out.stdout);
}

#[test]
fn scan_csv() {
    let out = conespec(&[
        "scan",
        &fixture("five_lines.sing"),
        "--range",
        "a=4..5",
        "--range",
        "b=1..2",
        "--param",
        "c=0",
        "--predicate",
        "n3d_zero",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "a,b,d,dprime,n_3_over_d,chi_u,flags\n\
         4,1,8,5,0,1,n3d_zero|chi_nonzero\n\
         4,2,9,5,0,1,n3d_zero|chi_nonzero\n\
         5,1,9,5,0,1,n3d_zero|chi_nonzero\n\
         5,2,10,5,0,1,n3d_zero|chi_nonzero\n"
    );

    let empty = conespec(&["scan", &fixture("five_lines.sing"), "--range", "a=3..2", "--range", "b=1..5", "--param", "c=0"]);
    assert_eq!(empty.code, EXIT_OK);
    assert_eq!(empty.stdout, "a,b,d,dprime,n_3_over_d,chi_u,flags\n");

    let capped = conespec(&["scan", &fixture("five_lines.sing"), "--range", "a=1..100", "--range", "b=1..100", "--param", "c=0", "--cap", "50"]);
    assert_eq!(capped.code, EXIT_INPUT);
}

#[test]
fn help_and_version_exit_0() {
    for flag in ["--help", "--version"] {
        let out = conespec(&[flag]);
        assert_eq!(out.code, EXIT_OK);
        assert!(!out.stdout.is_empty());
    }
}
