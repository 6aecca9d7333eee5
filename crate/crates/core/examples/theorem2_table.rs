//! Spectrum table of a non-reduced plane curve built in code: three
//! concurrent lines with multiplicities 2, 3, 1 and a fourth reduced line in
//! general position.

use conespec::io::{emit_table, TableFormat};
use conespec::{
    corollary2_row, theorem2_table, CurveConfig, GlobalComponent, Incidence, Result, SingularPoint,
};

fn main() -> Result<()> {
    let cfg = CurveConfig::new(
        vec![
            GlobalComponent::new(1, 2),
            GlobalComponent::new(1, 3),
            GlobalComponent::new(1, 1),
            GlobalComponent::new(1, 1),
        ],
        vec![SingularPoint::ordinary(&[2, 3, 1])?],
        3,
        // three branches at the triple point, two at each node, all transversal
        Some(Incidence::Multiset(vec![(9, 1)])),
    )?;
    println!("d = {}, d' = {}", cfg.degree(), cfg.reduced_degree());
    let table = theorem2_table(&cfg)?;
    print!("{}", emit_table(&table, TableFormat::Rows));

    // the incidence form of the middle row gives the same numbers
    assert_eq!(corollary2_row(&cfg)?, table.rows[1]);
    Ok(())
}
