//! The vector format `GlCmp=…; Si=…; OD=…; LG=…`.
//!
//! * `GlCmp` is a sequence of triples `-count, degree, multiplicity`.
//! * `Si` is a sequence of groups `-count, branch_count, a_1, a_2, …` where
//!   omitted trailing multiplicities are 1; a group ends at the next entry
//!   that is not positive. `Si=0` means no listed points.
//! * `OD` is the number of ordinary double points not listed in `Si`.
//! * `LG` is a sequence of pairs `-count, value` of incidence multiplicities,
//!   or the literal `0` for none.
//!
//! The leading minus signs are separators; counts are stored positive. Every
//! entry is a [`TemplateExpr`] evaluated under an external binding.

use crate::cone::{CurveConfig, GlobalComponent, Incidence};
use crate::error::{Error, Result};
use crate::local::SingularPoint;

use super::expr::{Binding, TemplateExpr};
use super::{ParseCode, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularVectors {
    pub glcmp: Vec<TemplateExpr>,
    pub si: Vec<TemplateExpr>,
    pub od: TemplateExpr,
    pub lg: Vec<TemplateExpr>,
    /// Source line of each vector, in the order GlCmp, Si, OD, LG.
    pub lines: [usize; 4],
}

const KEYS: [&str; 4] = ["GlCmp", "Si", "OD", "LG"];

impl SingularVectors {
    /// Parses `Key=e1,e2,…;` assignments; `#` starts a comment.
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut found: [Option<(usize, Vec<TemplateExpr>)>; 4] = Default::default();
        let mut line = 1usize;
        let mut statement = String::new();
        let mut stmt_line = 1usize;

        let mut flush = |statement: &mut String, at: usize| -> std::result::Result<(), ParseError> {
            let s = statement.trim();
            if s.is_empty() {
                statement.clear();
                return Ok(());
            }
            let (key, value) = s.split_once('=').ok_or_else(|| {
                ParseError::new(at, ParseCode::BadVector, format!("expected Key=values, got {s:?}"))
            })?;
            let key = key.trim();
            let slot = KEYS.iter().position(|k| *k == key).ok_or_else(|| {
                ParseError::new(
                    at,
                    ParseCode::UnknownKeyword,
                    format!("unknown vector {key:?}; expected one of GlCmp, Si, OD, LG"),
                )
            })?;
            if found[slot].is_some() {
                return Err(ParseError::new(
                    at,
                    ParseCode::DuplicateField,
                    format!("{key} given twice"),
                ));
            }
            let entries = value
                .split(',')
                .map(|e| {
                    TemplateExpr::parse(e).map_err(|err| {
                        ParseError::new(at, ParseCode::Expression, format!("{key}: {err}"))
                    })
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            found[slot] = Some((at, entries));
            statement.clear();
            Ok(())
        };

        for raw in text.lines() {
            let content = raw.split('#').next().unwrap_or("");
            for (k, piece) in content.split(';').enumerate() {
                if k > 0 {
                    flush(&mut statement, stmt_line)?;
                }
                if statement.trim().is_empty() && !piece.trim().is_empty() {
                    stmt_line = line;
                }
                statement.push_str(piece);
                statement.push(' ');
            }
            line += 1;
        }
        flush(&mut statement, stmt_line)?;

        let mut take = |slot: usize| {
            found[slot].take().ok_or_else(|| {
                ParseError::new(
                    line.saturating_sub(1),
                    ParseCode::MissingField,
                    format!("{} is missing", KEYS[slot]),
                )
            })
        };
        let (l0, glcmp) = take(0)?;
        let (l1, si) = take(1)?;
        let (l2, mut od) = take(2)?;
        let (l3, lg) = take(3)?;
        if od.len() != 1 {
            return Err(ParseError::new(
                l2,
                ParseCode::BadVector,
                "OD must be a single expression",
            ));
        }
        Ok(SingularVectors {
            glcmp,
            si,
            od: od.remove(0),
            lg,
            lines: [l0, l1, l2, l3],
        })
    }

    /// Every parameter name used by any entry, sorted and deduplicated.
    pub fn parameters(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .glcmp
            .iter()
            .chain(&self.si)
            .chain(std::iter::once(&self.od))
            .chain(&self.lg)
            .flat_map(|e| e.names())
            .map(str::to_string)
            .collect();
        names.sort();
        names.dedup();
        names
    }
}

fn eval_all(exprs: &[TemplateExpr], binding: &Binding, line: usize, key: &str) -> Result<Vec<i64>> {
    exprs
        .iter()
        .map(|e| {
            e.eval(binding).map_err(|err| {
                ParseError::new(line, ParseCode::Expression, format!("{key}: {err}")).into()
            })
        })
        .collect()
}

fn positive(v: i64, line: usize, what: &str) -> Result<u32> {
    if v <= 0 || v > i64::from(u32::MAX) {
        return Err(ParseError::new(line, ParseCode::NonPositive, format!("{what} must be positive, got {v}")).into());
    }
    Ok(v as u32)
}

fn separator(v: i64, line: usize, key: &str, at: usize) -> Result<u32> {
    if v > 0 || -v > i64::from(u32::MAX) {
        return Err(ParseError::new(
            line,
            ParseCode::BadSeparator,
            format!("{key} entry {} should be a count written as -n, got {v}", at + 1),
        )
        .into());
    }
    Ok((-v) as u32)
}

/// Evaluates the vectors and expands counts into a curve configuration with
/// ordinary points.
pub fn parse_singular(vectors: &SingularVectors, binding: &Binding) -> Result<CurveConfig> {
    let [l_gl, l_si, l_od, l_lg] = vectors.lines;

    let gl = eval_all(&vectors.glcmp, binding, l_gl, "GlCmp")?;
    if gl.is_empty() || gl.len() % 3 != 0 {
        return Err(ParseError::new(
            l_gl,
            ParseCode::BadVector,
            format!("GlCmp has {} entries, expected a positive multiple of 3", gl.len()),
        )
        .into());
    }
    let mut components = Vec::new();
    for (t, triple) in gl.chunks(3).enumerate() {
        let count = separator(triple[0], l_gl, "GlCmp", 3 * t)?;
        let degree = positive(triple[1], l_gl, "component degree")?;
        let mult = positive(triple[2], l_gl, "component multiplicity")?;
        components.extend(std::iter::repeat(GlobalComponent::new(degree, mult)).take(count as usize));
    }

    let si = eval_all(&vectors.si, binding, l_si, "Si")?;
    let mut points = Vec::new();
    if si != [0] {
        let mut p = 0;
        while p < si.len() {
            let count = separator(si[p], l_si, "Si", p)?;
            let branches = si.get(p + 1).copied().ok_or_else(|| {
                Error::from(ParseError::new(l_si, ParseCode::BadVector, "Si ends after a separator"))
            })?;
            let branches = positive(branches, l_si, "branch count")? as usize;
            p += 2;
            let mut mults = Vec::new();
            while p < si.len() && si[p] > 0 {
                mults.push(positive(si[p], l_si, "branch multiplicity")?);
                p += 1;
            }
            if mults.len() > branches {
                return Err(ParseError::new(
                    l_si,
                    ParseCode::BadBranches,
                    format!("{} multiplicities listed for {branches} branches", mults.len()),
                )
                .into());
            }
            mults.resize(branches, 1);
            let point = SingularPoint::ordinary(&mults)
                .map_err(|e| ParseError::new(l_si, ParseCode::BadBranches, e.to_string()))?;
            points.extend(std::iter::repeat(point).take(count as usize));
        }
    }

    let od = vectors
        .od
        .eval(binding)
        .map_err(|e| ParseError::new(l_od, ParseCode::Expression, format!("OD: {e}")))?;
    if od < 0 || od > i64::from(u32::MAX) {
        return Err(ParseError::new(l_od, ParseCode::NonPositive, format!("OD must be nonnegative, got {od}")).into());
    }

    let lg = eval_all(&vectors.lg, binding, l_lg, "LG")?;
    let mut pairs = Vec::new();
    if lg != [0] {
        if lg.len() % 2 != 0 {
            return Err(ParseError::new(
                l_lg,
                ParseCode::BadVector,
                format!("LG has {} entries, expected pairs or the single entry 0", lg.len()),
            )
            .into());
        }
        for (t, pair) in lg.chunks(2).enumerate() {
            let count = separator(pair[0], l_lg, "LG", 2 * t)?;
            let value = positive(pair[1], l_lg, "incidence value")?;
            pairs.push((count, value));
        }
    }

    CurveConfig::new(components, points, od as u32, Some(Incidence::Multiset(pairs))).map_err(
        |e| match e {
            Error::Parse(p) => Error::Parse(p),
            other => ParseError::new(l_gl, ParseCode::Invalid, other.to_string()).into(),
        },
    )
}

/// Parses the text and evaluates it under `binding`.
pub fn load_singular(text: &str, binding: &Binding) -> Result<CurveConfig> {
    parse_singular(&SingularVectors::parse(text)?, binding)
}
