//! Slow, independent implementations for differential testing.
//!
//! Nothing here shares code with the engine beyond [`Fraction`] and the
//! configuration types. [`reference_ordinary`] follows the published Singular
//! program line by line, keeping its variable names.

use crate::cone::{
    corollary2_row, gamma_coeffs, gamma_point, theorem2_table, ConeSpectrumTable,
    CurveConfig,
};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::local::lattice_count;
use crate::report::{Check, Report};
use crate::spectrum::SpectrumVector;

/// Double loop over `m_1, m_2 ∈ [1, bound]`.
pub fn brute_lattice(w: u32, w_prime: u32, bound: i64) -> i64 {
    let mut n = 0;
    for m1 in 1..=bound {
        for m2 in 1..=bound {
            if i64::from(w) * m1 + i64::from(w_prime) * m2 <= bound {
                n += 1;
            }
        }
    }
    n
}

/// `(n+1)`-fold convolution of the indicator of `[1, d' - 1]`, listed from
/// exponent `n + 1` up to `(n+1)(d'-1)`.
pub fn brute_gamma(dprime: u32, n: u32) -> Vec<i64> {
    let indicator: Vec<i64> = (0..dprime).map(|k| i64::from(k >= 1)).collect();
    let mut acc = vec![1i64];
    for _ in 0..=n {
        let mut next = vec![0i64; acc.len() + indicator.len() - 1];
        for (i, &a) in acc.iter().enumerate() {
            for (j, &b) in indicator.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    let first = (n + 1) as usize;
    let trimmed: Vec<i64> = acc.into_iter().skip(first).collect();
    let last = trimmed.iter().rposition(|&c| c != 0).map_or(0, |k| k + 1);
    trimmed[..last].to_vec()
}

/// Weighted-homogeneous spectrum from the Poincaré polynomial of the Milnor
/// algebra, `∏ (1 - s^{d - w_i}) / (1 - s^{w_i})`, shifted by `Σ w_i`.
/// Returns `None` when the quotient is not a polynomial.
pub fn brute_wh_spectrum(weights: &[u32], d: u32) -> Option<SpectrumVector> {
    if weights.iter().any(|&w| w == 0 || w >= d) {
        return None;
    }
    let mut poly = vec![1i64];
    for &w in weights {
        let e = (d - w) as usize;
        let mut next = vec![0i64; poly.len() + e];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + e] -= c;
        }
        poly = next;
    }
    for &w in weights {
        // exact division by 1 - s^w: q_k = a_k + q_{k-w}
        let w = w as usize;
        let mut q = vec![0i64; poly.len()];
        for k in 0..poly.len() {
            q[k] = poly[k] + if k >= w { q[k - w] } else { 0 };
        }
        let deg = poly.len().checked_sub(w + 1)?;
        // the remainder vanishes iff q has degree ≤ deg(poly) - w
        if q[deg + 1..].iter().any(|&c| c != 0) {
            return None;
        }
        q.truncate(deg + 1);
        poly = q;
    }
    if poly.iter().any(|&c| c < 0) {
        return None;
    }
    let shift: i64 = weights.iter().map(|&w| i64::from(w)).sum();
    Some(SpectrumVector::from_pairs(
        weights.len() as u32,
        poly.iter()
            .enumerate()
            .map(|(k, &c)| (Fraction::new(k as i64 + shift, i64::from(d)), c)),
    ))
}

/// The ceiling idiom of the Singular program, `m - int(m - v)` with `m = 100`,
/// where `int` truncates toward zero.
pub fn legacy_ceil(v: &Fraction) -> i64 {
    let m = Fraction::from_integer(100);
    let x = &m - v;
    let trunc = if x.is_negative() { x.ceil_i64() } else { x.floor_i64() };
    100 - trunc
}

fn ceil(v: &Fraction) -> i64 {
    let exact = v.ceil_i64();
    if *v < 100 {
        assert_eq!(exact, legacy_ceil(v), "ceiling idiom disagrees at {v}");
    }
    exact
}

/// Variables of the Singular program after a run. `sp` holds the raw rows;
/// `sp[2][d-1]` is the program's value, before the `δ_{i,d}` adjustment
/// applied in [`ReferenceState::table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceState {
    /// Row `j`: branch count, then branch multiplicities.
    pub al: Vec<Vec<i64>>,
    pub ds: Vec<i64>,
    pub as_: Vec<i64>,
    pub lg: Vec<i64>,
    pub d: i64,
    pub dr: i64,
    pub dsq: i64,
    pub od: i64,
    pub sp: [Vec<i64>; 3],
    pub chi: i64,
}

impl ReferenceState {
    pub fn run(cfg: &CurveConfig) -> Result<Self> {
        if let Some(j) = cfg.points.iter().position(|p| !p.is_ordinary()) {
            return Err(Error::NotOrdinary(j + 1));
        }
        let lg: Vec<i64> = match &cfg.incidence {
            None => Vec::new(),
            Some(inc) => inc
                .to_multiset()
                .into_iter()
                .flat_map(|(c, v)| [-i64::from(c), i64::from(v)])
                .collect(),
        };
        let ds: Vec<i64> = cfg.components.iter().map(|c| i64::from(c.degree)).collect();
        let as_: Vec<i64> = cfg.components.iter().map(|c| i64::from(c.multiplicity)).collect();
        let al: Vec<Vec<i64>> = cfg
            .points
            .iter()
            .map(|p| {
                std::iter::once(p.branch_count() as i64)
                    .chain(p.branches().iter().map(|b| i64::from(b.multiplicity)))
                    .collect()
            })
            .collect();
        let od = i64::from(cfg.nodes);

        let s = lg.len() / 2;
        let mut w = 0;
        for k in 1..=s {
            w += lg[2 * k - 2] * lg[2 * k - 1] * (lg[2 * k - 1] - 1) / 2;
        }
        let mut dsq = w;
        let r = ds.len();
        for k in 0..r {
            dsq += ds[k] * (ds[k] - 1) / 2;
        }
        let (mut d, mut dr) = (0, 0);
        for k in 0..r {
            d += ds[k] * as_[k];
            dr += ds[k];
        }

        let mut sp: [Vec<i64>; 3] = [vec![0; d as usize], vec![0; d as usize], vec![0; d as usize]];
        for i in 1..=d {
            let mut s = 0;
            for k in 0..r {
                s += ds[k] * (ceil(&Fraction::new(as_[k] * i, d)) - 1);
            }
            let io = i - s;
            let c = (i - 1) as usize;
            sp[0][c] = (io - 1) * (io - 2) / 2;
            sp[1][c] = dsq + (io - 1) * (dr - io - 1);
            sp[2][c] = (dr - io - 1) * (dr - io - 2) / 2;
            for row in &al {
                let mut ga = Fraction::zero();
                for &a in &row[1..] {
                    let v = Fraction::new(a * i, d);
                    let cv = ceil(&v);
                    ga = ga + v - cv + 1;
                }
                let p = ceil(&ga);
                sp[0][c] -= (p - 1) * (p - 2) / 2;
                sp[1][c] -= (p - 1) * (row[0] - p);
                sp[2][c] -= (row[0] - p) * (row[0] - p - 1) / 2;
            }
        }
        let mut p = 0;
        for row in &al {
            p += (row[0] - 1) * (row[0] - 1);
        }
        let chi = dr * (dr - 3) + 3 - p - od;
        Ok(ReferenceState {
            al,
            ds,
            as_,
            lg,
            d,
            dr,
            dsq,
            od,
            sp,
            chi,
        })
    }

    /// The rows as a table; the last cell of row 2 gets the `-δ_{i,d}`.
    pub fn table(&self) -> ConeSpectrumTable {
        let mut rows = self.sp.clone();
        if let Some(last) = rows[2].last_mut() {
            *last -= 1;
        }
        ConeSpectrumTable {
            d: self.d as u32,
            dprime: self.dr as u32,
            chi_u: self.chi,
            rows,
        }
    }
}

/// The Singular program's table for an ordinary configuration.
pub fn reference_ordinary(cfg: &CurveConfig) -> Result<ConeSpectrumTable> {
    Ok(ReferenceState::run(cfg)?.table())
}

fn middle_row_as_table(t: &ConeSpectrumTable, row: Vec<i64>) -> ConeSpectrumTable {
    let mut out = t.clone();
    out.rows[1] = row;
    out
}

/// Engine against the oracles on one configuration.
pub fn cross_check(cfg: &CurveConfig) -> Result<Report> {
    let table = theorem2_table(cfg)?;
    let d = table.d;
    let mut checks = Vec::new();
    let mut notes = Vec::new();

    if cfg.is_ordinary() {
        let reference = reference_ordinary(cfg)?;
        checks.push(Check::cells(
            "theorem2 rows 0/2 = reference",
            reference.first_mismatch(&table, &[0, 2]),
        ));
        checks.push(if reference.chi_u == table.chi_u {
            Check::pass("chi(U) = reference")
        } else {
            Check::fail(
                "chi(U) = reference",
                format!("expected {}, got {}", reference.chi_u, table.chi_u),
            )
        });
        if cfg.incidence.is_some() {
            let cor2 = middle_row_as_table(&table, corollary2_row(cfg)?);
            checks.push(Check::cells(
                "corollary2 row 1 = reference",
                reference.first_mismatch(&cor2, &[1]),
            ));
            checks.push(Check::cells(
                "corollary2 row 1 = theorem2 row 1",
                table.first_mismatch(&cor2, &[1]),
            ));
        } else {
            notes.push("no incidence data: the middle-row comparisons are skipped".into());
        }
    } else {
        notes.push(
            "weighted points present: the reference program covers ordinary points only; \
             running the lattice, gamma and row-sum checks (use verify for the \
             reduced-cone and thickening identities)"
                .into(),
        );
    }

    let mut lattice_failure = None;
    'outer: for p in &cfg.points {
        let (w, wp) = p.weights();
        let dj = i64::from(p.weighted_degree());
        for i in 1..=d {
            let c = gamma_point(p, i, d)?.ceil_i64();
            for bound in [c - 1, dj - c] {
                let (x, y) = (lattice_count(w, wp, bound), brute_lattice(w, wp, bound));
                if x != y {
                    lattice_failure = Some(format!(
                        "N({w},{wp},{bound}): engine {x}, brute force {y}"
                    ));
                    break 'outer;
                }
            }
        }
    }
    checks.push(match lattice_failure {
        None => Check::pass("lattice_count = brute force"),
        Some(msg) => Check::fail("lattice_count = brute force", msg),
    });

    let dp = cfg.reduced_degree();
    let (engine, brute) = (gamma_coeffs(dp, 2).coeffs, brute_gamma(dp, 2));
    checks.push(if engine == brute {
        Check::pass("gamma_coeffs = convolution")
    } else {
        Check::fail("gamma_coeffs = convolution", format!("engine {engine:?}, brute force {brute:?}"))
    });

    checks.push(match table.row_sum_violation() {
        None => Check::pass("row sums = chi(U)"),
        Some((i, s)) => Check::fail("row sums = chi(U)", format!("i={i}: sum {s}, chi(U) {}", table.chi_u)),
    });

    Ok(Report { checks, notes })
}
