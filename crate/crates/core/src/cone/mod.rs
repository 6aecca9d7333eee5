//! Closed formulas for spectra of cones over projective hypersurfaces.
//!
//! [`theorem2_table`] and [`corollary2_row`] handle possibly non-reduced plane
//! curves whose reduced curve has semi-weighted-homogeneous (respectively
//! ordinary) singularities. [`theorem1_reduced`] and [`theorem1_power`] handle
//! reduced hypersurfaces in any dimension together with a uniform thickening
//! `f = f'^m`; [`corollary1_table`] is their plane-curve specialisation.

mod config;
mod reduced;
mod table;

pub use config::{CurveConfig, GlobalComponent, Incidence, ReducedConeConfig};
pub use reduced::{
    corollary1_table, gamma_coeffs, theorem1_power, theorem1_reduced, GammaSequence,
};
pub use table::{CellMismatch, ConeSpectrumTable};

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::local::{lattice_count, SingularPoint};

/// Extended binomial `C(n, 2) = n(n-1)/2` for every integer `n`, so that
/// `C(-1, 2) = 1`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `a i / d - ⌈a i / d⌉ + 1 ∈ (0, 1]`.
pub fn beta(a: u32, i: u32, d: u32) -> Fraction {
    let x = Fraction::new(i64::from(a) * i64::from(i), i64::from(d));
    let c = x.ceil_i64();
    x - c + 1
}

/// Per-index bookkeeping `σ_i`, `ι_i` and the component fractions `β_{k,i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracData {
    pub sigma: i64,
    pub iota: i64,
    pub betas: Vec<Fraction>,
}

pub fn frac_data(cfg: &CurveConfig, i: u32) -> Result<FracData> {
    let d = cfg.degree();
    check_index(i, d)?;
    let mut sigma = 0i64;
    let mut betas = Vec::with_capacity(cfg.components.len());
    for c in &cfg.components {
        let x = Fraction::new(i64::from(c.multiplicity) * i64::from(i), i64::from(d));
        let ceil = x.ceil_i64();
        sigma += i64::from(c.degree) * (ceil - 1);
        betas.push(x - ceil + 1);
    }
    Ok(FracData {
        sigma,
        iota: i64::from(i) - sigma,
        betas,
    })
}

/// `γ_{j,i} = Σ_l β_{j,l,i} d_{j,l} ∈ (0, d_j]`.
pub fn gamma_point(p: &SingularPoint, i: u32, d: u32) -> Result<Fraction> {
    check_index(i, d)?;
    Ok(p.branches().iter().fold(Fraction::zero(), |acc, b| {
        acc + beta(b.multiplicity, i, d) * i64::from(b.weighted_degree)
    }))
}

fn check_index(i: u32, d: u32) -> Result<()> {
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange {
            index: i64::from(i),
            max: i64::from(d),
        });
    }
    Ok(())
}

/// `χ(U) = 3 - ((3 - d') d' + Σ_j μ_j)` for the complement of the reduced curve.
pub fn chi_u(cfg: &CurveConfig) -> Result<i64> {
    let dp = i64::from(cfg.reduced_degree());
    Ok(3 - ((3 - dp) * dp + cfg.milnor_sum()?))
}

/// Euler number of the complement of a generic nodal union of smooth curves
/// of the given degrees: `C(d' - 2, 2) + Σ_k C(d'_k, 2)`.
pub fn chi_generic_union(degrees: &[u32]) -> i64 {
    let dp: i64 = degrees.iter().map(|&x| i64::from(x)).sum();
    binom2(dp - 2) + degrees.iter().map(|&x| binom2(i64::from(x))).sum::<i64>()
}

/// The spectrum table of the cone over a plane curve whose reduced curve has
/// only semi-weighted-homogeneous singularities.
pub fn theorem2_table(cfg: &CurveConfig) -> Result<ConeSpectrumTable> {
    cfg.validate()?;
    let d = cfg.degree();
    let dp = i64::from(cfg.reduced_degree());
    let milnor_sum = cfg.milnor_sum()?;
    let global = (dp - 3) * dp + 3 - milnor_sum;

    let mut rows: [Vec<i64>; 3] = Default::default();
    for i in 1..=d {
        let delta = i64::from(i == d);
        let iota = frac_data(cfg, i)?.iota;
        let (mut low, mut high) = (0i64, 0i64);
        for p in &cfg.points {
            let (w, wp) = p.weights();
            let ceil = gamma_point(p, i, d)?.ceil_i64();
            low += lattice_count(w, wp, ceil - 1);
            high += lattice_count(w, wp, i64::from(p.weighted_degree()) - ceil);
        }
        let r0 = binom2(iota - 1) - low;
        let r2 = binom2(dp - iota - 1) - high - delta;
        rows[0].push(r0);
        rows[1].push(global - r0 - r2 - delta);
        rows[2].push(r2);
    }
    Ok(ConeSpectrumTable {
        d,
        dprime: dp as u32,
        chi_u: 3 - ((3 - dp) * dp + milnor_sum),
        rows,
    })
}

/// Middle row `n_{f, i/d + 1}` for ordinary singularities, computed from
/// incidence data instead of `χ(U)`.
pub fn corollary2_row(cfg: &CurveConfig) -> Result<Vec<i64>> {
    cfg.validate()?;
    if let Some(j) = cfg.points.iter().position(|p| !p.is_ordinary()) {
        return Err(Error::NotOrdinary(j + 1));
    }
    let incidence = cfg.incidence.as_ref().ok_or(Error::MissingIncidence)?;
    let d = cfg.degree();
    let dp = i64::from(cfg.reduced_degree());
    let constant = cfg
        .components
        .iter()
        .map(|c| binom2(i64::from(c.degree)))
        .sum::<i64>()
        - incidence.binomial_sum();

    (1..=d)
        .map(|i| {
            let iota = frac_data(cfg, i)?.iota;
            let mut local = 0i64;
            for p in &cfg.points {
                let ceil = gamma_point(p, i, d)?.ceil_i64();
                let m = p.branch_count() as i64;
                local += (ceil - 1) * (m - ceil);
            }
            Ok((iota - 1) * (dp - iota - 1) + constant - local)
        })
        .collect()
}

/// Global-versus-local intersection numbers: `d'_k d'_{k'} = Σ_j m_{j,k} m_{j,k'}`
/// for every pair of distinct components.
pub fn incidence_check(cfg: &CurveConfig) -> Result<bool> {
    let rows = match &cfg.incidence {
        Some(Incidence::Matrix(rows)) => rows,
        _ => return Err(Error::IncidenceUnavailable),
    };
    let r = cfg.components.len();
    if rows.iter().any(|row| row.len() != r) {
        return Err(Error::InvalidConfig("incidence row width differs from component count".into()));
    }
    for k in 0..r {
        for kp in k + 1..r {
            let global = u64::from(cfg.components[k].degree) * u64::from(cfg.components[kp].degree);
            let local: u64 = rows
                .iter()
                .map(|row| u64::from(row[k]) * u64::from(row[kp]))
                .sum();
            if global != local {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
