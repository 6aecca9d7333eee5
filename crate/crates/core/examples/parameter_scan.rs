//! Sweep the conic-pencil template and list where n_{f,3/d} vanishes.

use conespec::scan::{run_scan, Predicate, ScanSpec, ScanTemplate};
use conespec::{fixtures, Result};

fn main() -> Result<()> {
    let spec = ScanSpec::new(ScanTemplate::parse(fixtures::LINES_AND_CONIC)?)
        .range("a", 1, 5)
        .range("b", 1, 5)
        .range("c", 0, 4)
        .predicate(Predicate::N3dZero);
    let result = run_scan(&spec)?;
    print!("{}", result.to_csv());
    eprintln!("{} of {} grid points", result.rows.len(), spec.grid_size().unwrap_or(0));
    Ok(())
}
