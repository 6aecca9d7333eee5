//! Reading the GlCmp/Si/OD/LG vector format with template parameters, and
//! writing the same curve in the native format.

use conespec::io::singular::load_singular;
use conespec::io::{emit_native, Binding};
use conespec::{fixtures, theorem2_table, Result};

fn main() -> Result<()> {
    let text = fixtures::FIVE_LINES;
    println!("{text}");
    for (a, b) in [(4, 2), (5, 1), (3, 3)] {
        let binding: Binding = [("a", a), ("b", b), ("c", 0)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let cfg = load_singular(text, &binding)?;
        let t = theorem2_table(&cfg)?;
        println!("a={a} b={b}: d={} n_3/d={} chi(U)={}", t.d, t.get(3, 0), t.chi_u);
        if (a, b) == (4, 2) {
            print!("{}", emit_native(&cfg));
        }
    }
    Ok(())
}
