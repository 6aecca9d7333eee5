//! Parameter sweeps over a template, reporting `n_{f,3/d}` and `χ(U)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cone::{theorem2_table, CurveConfig};
use crate::error::{Error, Result};
use crate::io::native::{parse_native, NativeConfig};
use crate::io::singular::{parse_singular, SingularVectors};
use crate::io::Binding;

pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    /// `n_{f,3/d} = 0`, the `e=0` cell at `i = 3`.
    N3dZero,
    ChiNonzero,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::N3dZero => "n3d_zero",
            Predicate::ChiNonzero => "chi_nonzero",
        }
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "n3d_zero" => Ok(Predicate::N3dZero),
            "chi_nonzero" => Ok(Predicate::ChiNonzero),
            other => Err(format!("unknown predicate {other:?}; expected n3d_zero or chi_nonzero")),
        }
    }
}

#[derive(Debug, Clone)]
pub enum ScanTemplate {
    Vectors(SingularVectors),
    Native(String),
}

impl ScanTemplate {
    /// Vector format when the text mentions `GlCmp=`, native otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        if text.contains("GlCmp") {
            Ok(ScanTemplate::Vectors(SingularVectors::parse(text)?))
        } else {
            Ok(ScanTemplate::Native(text.to_string()))
        }
    }

    pub fn instantiate(&self, binding: &Binding) -> Result<CurveConfig> {
        match self {
            ScanTemplate::Vectors(v) => parse_singular(v, binding),
            ScanTemplate::Native(text) => match parse_native(text, binding)? {
                NativeConfig::Curve(c) => Ok(c),
                NativeConfig::Reduced(_) => Err(Error::InvalidConfig(
                    "scan needs a curve template, not a reduced-cone file".into(),
                )),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub template: ScanTemplate,
    /// Inclusive ranges; names are iterated in sorted order.
    pub ranges: BTreeMap<String, (i64, i64)>,
    pub fixed: Binding,
    pub predicates: Vec<Predicate>,
    pub cap: u64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl ScanSpec {
    pub fn new(template: ScanTemplate) -> Self {
        ScanSpec {
            template,
            ranges: BTreeMap::new(),
            fixed: Binding::new(),
            predicates: Vec::new(),
            cap: DEFAULT_CAP,
            threads: None,
        }
    }

    pub fn range(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.ranges.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn predicate(mut self, p: Predicate) -> Self {
        self.predicates.push(p);
        self
    }

    /// Number of grid points, or `None` on overflow.
    pub fn grid_size(&self) -> Option<u64> {
        self.ranges.values().try_fold(1u64, |acc, &(lo, hi)| {
            let len = if hi < lo { 0 } else { u64::try_from(hi - lo).ok()?.checked_add(1)? };
            acc.checked_mul(len)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub params: Vec<i64>,
    pub d: u32,
    pub dprime: u32,
    /// `None` when `d < 3`.
    pub n_3_over_d: Option<i64>,
    pub chi_u: i64,
    pub flags: Vec<Predicate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub names: Vec<String>,
    pub rows: Vec<ScanRow>,
}

impl ScanResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            let _ = write!(out, "{name},");
        }
        out.push_str("d,dprime,n_3_over_d,chi_u,flags\n");
        for r in &self.rows {
            for v in &r.params {
                let _ = write!(out, "{v},");
            }
            let n3 = r.n_3_over_d.map_or_else(|| "n/a".to_string(), |v| v.to_string());
            let flags: Vec<&str> = r.flags.iter().map(|p| p.name()).collect();
            let _ = writeln!(out, "{},{},{n3},{},{}", r.d, r.dprime, r.chi_u, flags.join("|"));
        }
        out
    }
}

fn evaluate(spec: &ScanSpec, names: &[&String], point: Vec<i64>) -> Result<ScanRow> {
    let mut binding = spec.fixed.clone();
    for (name, &v) in names.iter().zip(&point) {
        binding.insert((*name).clone(), v);
    }
    let cfg = spec.template.instantiate(&binding).map_err(|e| {
        let at: Vec<String> = names.iter().zip(&point).map(|(n, v)| format!("{n}={v}")).collect();
        Error::InvalidConfig(format!("at {}: {e}", at.join(",")))
    })?;
    let t = theorem2_table(&cfg)?;
    let n3 = (t.d >= 3).then(|| t.get(3, 0));
    let mut flags = Vec::new();
    if n3 == Some(0) {
        flags.push(Predicate::N3dZero);
    }
    if t.chi_u != 0 {
        flags.push(Predicate::ChiNonzero);
    }
    Ok(ScanRow {
        params: point,
        d: t.d,
        dprime: t.dprime,
        n_3_over_d: n3,
        chi_u: t.chi_u,
        flags,
    })
}

/// Evaluates every grid point; rows come out in lexicographic order of the
/// parameter tuple whatever the number of workers.
pub fn run_scan(spec: &ScanSpec) -> Result<ScanResult> {
    let size = spec
        .grid_size()
        .filter(|&s| s <= spec.cap)
        .ok_or_else(|| {
            Error::InvalidConfig(format!(
                "grid has more than {} points; narrow the ranges or raise --cap",
                spec.cap
            ))
        })?;
    let names: Vec<&String> = spec.ranges.keys().collect();
    let bounds: Vec<(i64, u64)> = spec
        .ranges
        .values()
        .map(|&(lo, hi)| (lo, if hi < lo { 0 } else { (hi - lo) as u64 + 1 }))
        .collect();
    let point = |mut k: u64| -> Vec<i64> {
        let mut p = vec![0; bounds.len()];
        for (slot, &(lo, len)) in bounds.iter().enumerate().rev() {
            p[slot] = lo + (k % len) as i64;
            k /= len;
        }
        p
    };
    let work = || -> Result<Vec<ScanRow>> {
        (0..size)
            .into_par_iter()
            .map(|k| evaluate(spec, &names, point(k)))
            .collect()
    };
    let rows = match spec.threads {
        None => work()?,
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?
            .install(work)?,
    };
    let rows = rows
        .into_iter()
        .filter(|r| spec.predicates.iter().all(|p| r.flags.contains(p)))
        .collect();
    Ok(ScanResult {
        names: names.into_iter().cloned().collect(),
        rows,
    })
}
