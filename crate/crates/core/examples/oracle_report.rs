//! Differential check of the closed formulas against the brute-force
//! reference, then the full invariant report for a weighted configuration.

use conespec::oracle::cross_check;
use conespec::verify::verify_curve;
use conespec::{fixtures, Result};

fn main() -> Result<()> {
    let cfg = fixtures::QUARTIC_PENCIL_322.config()?;
    let report = cross_check(&cfg)?;
    println!("{report}");

    let tangent = fixtures::native_curve(fixtures::TANGENT_CONICS)?;
    println!("{}", verify_curve(&tangent)?);
    println!("{}", report.to_json());
    Ok(())
}
