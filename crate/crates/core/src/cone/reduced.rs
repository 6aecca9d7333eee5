use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::local::window_count;
use crate::spectrum::SpectrumVector;

use super::{binom2, ConeSpectrumTable, ReducedConeConfig};

/// Coefficients `γ_i` of `(t + t^2 + … + t^{d'-1})^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSequence {
    /// Exponent of `coeffs[0]`, namely `n + 1`.
    pub first: u32,
    pub coeffs: Vec<i64>,
}

impl GammaSequence {
    pub fn get(&self, i: u32) -> i64 {
        i.checked_sub(self.first)
            .and_then(|k| self.coeffs.get(k as usize))
            .copied()
            .unwrap_or(0)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, j| acc * i128::from(n - j) / i128::from(j + 1)) as i64
}

/// `γ_i` for `i ∈ [n+1, (n+1)(d'-1)]`, by inclusion–exclusion over the parts
/// that exceed `d' - 1`: the number of compositions of `i` into `n + 1` parts
/// in `[1, d' - 1]`.
pub fn gamma_coeffs(dprime: u32, n: u32) -> GammaSequence {
    let parts = i64::from(n) + 1;
    let first = n + 1;
    if dprime < 2 {
        return GammaSequence {
            first,
            coeffs: Vec::new(),
        };
    }
    let top = i64::from(dprime) - 1;
    let coeffs = (parts..=parts * top)
        .map(|i| {
            (0..=parts)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binomial(parts, k) * binomial(i - k * top - 1, parts - 1)
                })
                .sum()
        })
        .collect();
    GammaSequence { first, coeffs }
}

/// Spectrum of the cone over a reduced hypersurface `Z' ⊂ P^n` of degree `d'`
/// with isolated singularities: multiplicity `γ_i - Σ_j M_j(i/d')` at `i/d'`.
pub fn theorem1_reduced(cfg: &ReducedConeConfig) -> SpectrumVector {
    let n = cfg.ambient_dim;
    let dp = cfg.degree;
    let gamma = gamma_coeffs(dp, n);
    SpectrumVector::from_pairs(
        n + 1,
        (1..(n + 1) * dp).map(|i| {
            let alpha = Fraction::new(i64::from(i), i64::from(dp));
            let windows: i64 = cfg
                .local_spectra
                .iter()
                .map(|s| window_count(s, &alpha))
                .sum();
            (alpha, gamma.get(i) - windows)
        }),
    )
}

/// Spectrum of `f = f'^m` from the spectrum `base` of the reduced cone:
/// cell `i/(m d') + l/m + p'` copies `base` at `i/d' + p'`, with an extra
/// `(-1)^n` when `i = d'`, `p' = n` and `l ≠ m - 1`. The single cell at
/// exponent `n + 1` lies outside the support and is dropped.
pub fn theorem1_power(base: &SpectrumVector, cfg: &ReducedConeConfig) -> Result<SpectrumVector> {
    let n = cfg.ambient_dim;
    if base.ambient_dim() != n + 1 {
        return Err(Error::DimensionMismatch(n + 1, base.ambient_dim()));
    }
    let (dp, m) = (i64::from(cfg.degree), i64::from(cfg.power));
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut out = SpectrumVector::empty(n + 1);
    for p in 0..=i64::from(n) {
        for i in 1..=dp {
            let source = base.multiplicity(&(Fraction::new(i, dp) + p));
            for l in 0..m {
                let alpha = Fraction::new(i + l * dp, m * dp) + p;
                if alpha >= i64::from(n) + 1 {
                    continue;
                }
                let correction = if i == dp && p == i64::from(n) && l != m - 1 {
                    sign
                } else {
                    0
                };
                out.add_at(alpha, source + correction);
            }
        }
    }
    Ok(out)
}

/// The three rows for a reduced plane curve of degree `d` from the local
/// spectra of all its singular points.
pub fn corollary1_table(degree: u32, local_spectra: &[SpectrumVector]) -> ConeSpectrumTable {
    let d = i64::from(degree);
    let windows = |beta: Fraction| -> i64 {
        local_spectra.iter().map(|s| window_count(s, &beta)).sum()
    };
    let mut rows: [Vec<i64>; 3] = Default::default();
    for i in 1..=d {
        let x = Fraction::new(i, d);
        let delta = i64::from(i == d);
        rows[0].push(binom2(i - 1) - windows(x.clone()));
        rows[1].push((i - 1) * (d - i - 1) + binom2(d) - windows(&x + 1));
        rows[2].push(binom2(d - i - 1) - windows(&x + 2) - delta);
    }
    let milnor: i64 = local_spectra.iter().map(SpectrumVector::total).sum();
    ConeSpectrumTable {
        d: degree,
        dprime: degree,
        chi_u: 3 - ((3 - d) * d + milnor),
        rows,
    }
}
