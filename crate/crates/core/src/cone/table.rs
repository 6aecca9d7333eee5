use crate::fraction::Fraction;
use crate::spectrum::SpectrumVector;

/// The three rows `n_{f, i/d + e}` (`e = 0, 1, 2`, `i ∈ [1, d]`) of a cone
/// over a plane curve, with `d`, `d'` and `χ(U)`.
///
/// Cells hold formula values verbatim, including the negative middle entry
/// at `i = d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeSpectrumTable {
    pub d: u32,
    pub dprime: u32,
    pub chi_u: i64,
    pub rows: [Vec<i64>; 3],
}

/// First differing cell between two tables.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CellMismatch {
    pub i: u32,
    pub e: u8,
    pub expected: i64,
    pub actual: i64,
}

impl ConeSpectrumTable {
    /// Cell `(i, e)` with 1-based `i`.
    pub fn get(&self, i: u32, e: u8) -> i64 {
        self.rows[e as usize][(i - 1) as usize]
    }

    /// Exponent `i/d + e` of cell `(i, e)`.
    pub fn exponent(&self, i: u32, e: u8) -> Fraction {
        Fraction::new(i64::from(i), i64::from(self.d)) + i64::from(e)
    }

    /// `Σ_e row_e[i] + δ_{i,d}`; equals `χ(U)` for every `i`.
    pub fn row_sum(&self, i: u32) -> i64 {
        let delta = i64::from(i == self.d);
        (0..3).map(|e| self.get(i, e)).sum::<i64>() + delta
    }

    /// First `i` where the row-sum rule fails, with the offending sum.
    pub fn row_sum_violation(&self) -> Option<(u32, i64)> {
        (1..=self.d)
            .map(|i| (i, self.row_sum(i)))
            .find(|&(_, s)| s != self.chi_u)
    }

    /// First cell with `i < d` in the given rows holding a negative value.
    pub fn negative_cell(&self, rows: &[u8]) -> Option<(u32, u8, i64)> {
        rows.iter().find_map(|&e| {
            (1..self.d)
                .map(|i| (i, e, self.get(i, e)))
                .find(|&(_, _, v)| v < 0)
        })
    }

    /// All cells as a spectrum vector in three variables.
    pub fn to_spectrum(&self) -> SpectrumVector {
        SpectrumVector::from_pairs(
            3,
            (0..3u8).flat_map(|e| (1..=self.d).map(move |i| (self.exponent(i, e), self.get(i, e)))),
        )
    }

    /// Reads cells `i/d + e` off a spectrum vector; absent exponents are 0.
    pub fn from_spectrum(d: u32, dprime: u32, chi_u: i64, spectrum: &SpectrumVector) -> Self {
        let row = |e: i64| -> Vec<i64> {
            (1..=i64::from(d))
                .map(|i| spectrum.multiplicity(&(Fraction::new(i, i64::from(d)) + e)))
                .collect()
        };
        ConeSpectrumTable {
            d,
            dprime,
            chi_u,
            rows: [row(0), row(1), row(2)],
        }
    }

    /// First mismatch over the given rows, scanning `i` in increasing order.
    /// A degree mismatch is reported as cell `(0, 0)` carrying both degrees.
    pub fn first_mismatch(&self, actual: &ConeSpectrumTable, rows: &[u8]) -> Option<CellMismatch> {
        if self.d != actual.d {
            return Some(CellMismatch {
                i: 0,
                e: 0,
                expected: i64::from(self.d),
                actual: i64::from(actual.d),
            });
        }
        rows.iter().find_map(|&e| {
            (1..=self.d).find_map(|i| {
                let (x, y) = (self.get(i, e), actual.get(i, e));
                (x != y).then_some(CellMismatch {
                    i,
                    e,
                    expected: x,
                    actual: y,
                })
            })
        })
    }
}
