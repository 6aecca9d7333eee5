use std::fmt::Write as _;
use std::str::FromStr;

use crate::cone::ConeSpectrumTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    /// Four lines in the printed layout, the `e=2` row stopping at `i = d - 1`,
    /// then a `#` note.
    #[default]
    Rows,
    /// `i,alpha,e,value` for all `3d` cells.
    Csv,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rows" => Ok(TableFormat::Rows),
            "csv" => Ok(TableFormat::Csv),
            other => Err(format!("unknown format {other:?}; expected rows or csv")),
        }
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn emit_table(t: &ConeSpectrumTable, format: TableFormat) -> String {
    let d = t.d as usize;
    let mut out = String::new();
    match format {
        TableFormat::Rows => {
            let _ = writeln!(out, "e=0: {}", join(&t.rows[0]));
            let _ = writeln!(out, "e=1: {}", join(&t.rows[1]));
            let _ = writeln!(out, "e=2: {}", join(&t.rows[2][..d.saturating_sub(1)]));
            let _ = writeln!(out, "chi(U)={}", t.chi_u);
            let _ = writeln!(
                out,
                "# e=2 at i=d is {} (not printed); integer exponents take sum_e row_e[d] + 1 = chi(U), i.e. n_f,3 = 1",
                t.rows[2][d - 1]
            );
        }
        TableFormat::Csv => {
            out.push_str("i,alpha,e,value\n");
            for e in 0..3u8 {
                for i in 1..=t.d {
                    let _ = writeln!(out, "{i},{},{e},{}", t.exponent(i, e), t.get(i, e));
                }
            }
        }
    }
    out
}
