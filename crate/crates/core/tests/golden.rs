//! `compute` output for the bundled templates, byte for byte.

use std::path::PathBuf;

use conespec::cli::run;
use conespec::fixtures::{self, Template};

fn path(rel: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(rel);
    p.to_string_lossy().into_owned()
}

fn file_of(t: &Template) -> &'static str {
    match t.text {
        s if s == fixtures::PENCIL_OF_CONICS => "pencil_of_conics.sing",
        s if s == fixtures::CUBIC_PENCIL => "cubic_pencil.sing",
        s if s == fixtures::QUARTIC_PENCIL => "quartic_pencil.sing",
        s if s == fixtures::SEXTIC_PENCIL => "sextic_pencil.sing",
        s if s == fixtures::FIVE_LINES => "five_lines.sing",
        _ => "lines_and_conic.sing",
    }
}

fn golden_name(t: &Template) -> String {
    let digits: String = t.params.iter().map(|(_, v)| v.to_string()).collect();
    let stem = t.name.trim_end_matches(&format!("_{digits}")[..]);
    format!("golden/{stem}_{digits}.rows")
}

fn compute(t: &Template, middle: &str) -> String {
    let mut args = vec!["conespec".to_string(), "compute".into(), path(file_of(t))];
    for (k, v) in t.params {
        args.push("--param".into());
        args.push(format!("{k}={v}"));
    }
    args.push("--middle".into());
    args.push(middle.into());
    let out = run(args);
    assert_eq!(out.code, 0, "{}: {}", t.name, out.stderr);
    out.stdout
}

#[test]
fn compute_matches_golden_files() {
    for t in fixtures::TEMPLATES {
        let expected = std::fs::read_to_string(path(&golden_name(&t))).unwrap();
        assert_eq!(compute(&t, "thm2"), expected, "{} with the theorem2 middle row", t.name);
        assert_eq!(compute(&t, "cor2"), expected, "{} with the incidence middle row", t.name);
    }
}
