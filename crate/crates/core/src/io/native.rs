//! The line-oriented native format.
//!
//! ```text
//! # curve mode
//! ambient 2
//! component degree=3 mult=2 count=1
//! point weights=2,3 branches=(6:1) count=1
//! nodes 0
//! incidence 6x1 2x3
//! incidence-matrix 1 1 0 ; 0 1 1
//!
//! # reduced-cone mode
//! reduced n=2 degree=3 power=2
//! localspectrum 5/6:1 7/6:1
//! localwh weights=2,3 degree=6
//! ```
//!
//! Integer field values (`key=value` and `nodes`) may be template
//! expressions without whitespace, evaluated under a binding.

use std::fmt::Write as _;

use crate::cone::{CurveConfig, GlobalComponent, Incidence, ReducedConeConfig};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::local::{validate_branches, wh_spectrum, LocalBranch, SingularPoint, WeightSystem};
use crate::spectrum::SpectrumVector;

use super::expr::{Binding, TemplateExpr};
use super::{ParseCode, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NativeConfig {
    Curve(CurveConfig),
    Reduced(ReducedConeConfig),
}

type PResult<T> = std::result::Result<T, ParseError>;

struct Line<'a> {
    no: usize,
    keyword: &'a str,
    args: Vec<&'a str>,
    rest: &'a str,
}

impl Line<'_> {
    fn err(&self, code: ParseCode, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.no, code, msg)
    }

    /// Splits `key=value` arguments, rejecting unknown or repeated keys.
    fn fields(&self, allowed: &[&str]) -> PResult<Vec<(&str, &str)>> {
        let mut out: Vec<(&str, &str)> = Vec::new();
        for arg in &self.args {
            let (k, v) = arg.split_once('=').ok_or_else(|| {
                self.err(ParseCode::UnknownField, format!("expected key=value, got {arg:?}"))
            })?;
            if !allowed.contains(&k) {
                return Err(self.err(
                    ParseCode::UnknownField,
                    format!("{} does not take {k:?}; expected {}", self.keyword, allowed.join(", ")),
                ));
            }
            if out.iter().any(|(seen, _)| *seen == k) {
                return Err(self.err(ParseCode::DuplicateField, format!("{k} given twice")));
            }
            out.push((k, v));
        }
        Ok(out)
    }
}

fn lookup<'a>(fields: &[(&str, &'a str)], key: &str) -> Option<&'a str> {
    fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn required<'a>(line: &Line, fields: &[(&str, &'a str)], key: &str) -> PResult<&'a str> {
    lookup(fields, key)
        .ok_or_else(|| line.err(ParseCode::MissingField, format!("{} needs {key}=", line.keyword)))
}

fn int(line: &Line, text: &str, binding: &Binding) -> PResult<i64> {
    if text.is_empty() {
        return Err(line.err(ParseCode::BadInteger, "empty value"));
    }
    let e = TemplateExpr::parse(text)
        .map_err(|e| line.err(ParseCode::Expression, format!("{text:?}: {e}")))?;
    e.eval(binding)
        .map_err(|e| line.err(ParseCode::Expression, format!("{text:?}: {e}")))
}

fn positive(line: &Line, text: &str, binding: &Binding, what: &str) -> PResult<u32> {
    let v = int(line, text, binding)?;
    u32::try_from(v)
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| line.err(ParseCode::NonPositive, format!("{what} must be a positive integer, got {v}")))
}

fn nonnegative(line: &Line, text: &str, binding: &Binding, what: &str) -> PResult<u32> {
    let v = int(line, text, binding)?;
    u32::try_from(v)
        .map_err(|_| line.err(ParseCode::NonPositive, format!("{what} must be nonnegative, got {v}")))
}

fn plain_u32(line: &Line, text: &str, code: ParseCode) -> PResult<u32> {
    text.parse::<u32>()
        .map_err(|_| line.err(code, format!("expected a nonnegative integer, got {text:?}")))
}

fn weights(line: &Line, text: &str, binding: &Binding) -> PResult<Vec<u32>> {
    text.split(',')
        .map(|w| positive(line, w, binding, "weight"))
        .collect()
}

fn branches(line: &Line, text: &str, binding: &Binding) -> PResult<Vec<LocalBranch>> {
    let bad = |msg: String| line.err(ParseCode::BadBranches, msg);
    let mut rest = text;
    let mut out = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| bad(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| bad(format!("unclosed branch in {text:?}")))?;
        let (deg, mult) = body[..close]
            .split_once(':')
            .ok_or_else(|| bad(format!("branch {:?} should be deg:mult", &body[..close])))?;
        out.push(LocalBranch::new(
            positive(line, deg, binding, "branch degree")?,
            positive(line, mult, binding, "branch multiplicity")?,
        ));
        rest = &body[close + 1..];
    }
    if out.is_empty() {
        return Err(bad("a point needs at least one branch".into()));
    }
    Ok(out)
}

fn spectrum(line: &Line, dim: u32) -> PResult<SpectrumVector> {
    let mut out = SpectrumVector::empty(dim);
    for tok in &line.args {
        let (alpha, m) = tok.rsplit_once(':').ok_or_else(|| {
            line.err(ParseCode::BadSpectrum, format!("expected p/q:m, got {tok:?}"))
        })?;
        let alpha: Fraction = alpha
            .parse()
            .map_err(|e| line.err(ParseCode::BadSpectrum, format!("{tok:?}: {e}")))?;
        let m: i64 = m
            .parse()
            .map_err(|_| line.err(ParseCode::BadSpectrum, format!("bad multiplicity in {tok:?}")))?;
        if out.multiplicity(&alpha) != 0 {
            return Err(line.err(ParseCode::BadSpectrum, format!("exponent {alpha} listed twice")));
        }
        out.add_at(alpha, m);
    }
    Ok(out)
}

fn count_of(line: &Line, fields: &[(&str, &str)], binding: &Binding) -> PResult<u32> {
    lookup(fields, "count").map_or(Ok(1), |c| nonnegative(line, c, binding, "count"))
}

#[derive(Default)]
struct Pending {
    ambient: Option<(usize, u32)>,
    components: Vec<GlobalComponent>,
    points: Vec<SingularPoint>,
    nodes: Option<u32>,
    incidence: Option<Incidence>,
    reduced: Option<(usize, u32, u32, u32)>,
    spectra: Vec<(usize, SpectrumVector)>,
    curve_line: Option<usize>,
}

/// Parses native text, substituting `binding` into expression-valued fields.
pub fn parse_native(text: &str, binding: &Binding) -> Result<NativeConfig> {
    let mut st = Pending::default();
    let mut last = 0usize;
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        last = k + 1;
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map_or((content, ""), |(a, b)| (a, b.trim()));
        let line = Line {
            no: k + 1,
            keyword,
            args: rest.split_whitespace().collect(),
            rest,
        };
        parse_line(&line, &mut st, binding)?;
    }
    finish(st, last)
}

fn parse_line(line: &Line, st: &mut Pending, binding: &Binding) -> PResult<()> {
    let curve_kw = matches!(
        line.keyword,
        "component" | "point" | "nodes" | "incidence" | "incidence-matrix"
    );
    if curve_kw {
        st.curve_line.get_or_insert(line.no);
    }
    match line.keyword {
        "ambient" => {
            if st.ambient.is_some() {
                return Err(line.err(ParseCode::DuplicateField, "ambient given twice"));
            }
            let [arg] = line.args[..] else {
                return Err(line.err(ParseCode::BadInteger, "ambient takes one integer"));
            };
            st.ambient = Some((line.no, positive(line, arg, binding, "ambient dimension")?));
        }
        "component" => {
            let f = line.fields(&["degree", "mult", "count"])?;
            let degree = positive(line, required(line, &f, "degree")?, binding, "degree")?;
            let mult = positive(line, required(line, &f, "mult")?, binding, "mult")?;
            let count = count_of(line, &f, binding)?;
            st.components
                .extend(std::iter::repeat(GlobalComponent::new(degree, mult)).take(count as usize));
        }
        "point" => {
            let f = line.fields(&["weights", "branches", "count"])?;
            let w = weights(line, required(line, &f, "weights")?, binding)?;
            let [w0, w1] = w[..] else {
                return Err(line.err(
                    ParseCode::BadWeights,
                    format!("a plane-curve point takes two weights, got {}", w.len()),
                ));
            };
            let b = branches(line, required(line, &f, "branches")?, binding)?;
            let p = SingularPoint::new((w0, w1), b).map_err(|e| {
                let code = match e {
                    Error::InvalidWeights(_) => ParseCode::BadWeights,
                    _ => ParseCode::BadBranches,
                };
                line.err(code, e.to_string())
            })?;
            if !validate_branches(&p) {
                return Err(line.err(
                    ParseCode::BadBranches,
                    format!("branch degrees must lie in {{{w0}, {w1}, {}}}", w0 * w1),
                ));
            }
            p.milnor().map_err(|e| line.err(ParseCode::BadBranches, e.to_string()))?;
            let count = count_of(line, &f, binding)?;
            st.points.extend(std::iter::repeat(p).take(count as usize));
        }
        "nodes" => {
            if st.nodes.is_some() {
                return Err(line.err(ParseCode::DuplicateField, "nodes given twice"));
            }
            let [arg] = line.args[..] else {
                return Err(line.err(ParseCode::BadInteger, "nodes takes one integer"));
            };
            st.nodes = Some(nonnegative(line, arg, binding, "nodes")?);
        }
        "incidence" => {
            if st.incidence.is_some() {
                return Err(line.err(ParseCode::DuplicateField, "incidence given twice"));
            }
            let pairs = line
                .args
                .iter()
                .map(|tok| {
                    let (c, v) = tok.split_once('x').ok_or_else(|| {
                        line.err(ParseCode::BadIncidence, format!("expected <count>x<value>, got {tok:?}"))
                    })?;
                    let c = plain_u32(line, c, ParseCode::BadIncidence)?;
                    let v = plain_u32(line, v, ParseCode::BadIncidence)?;
                    if v == 0 {
                        return Err(line.err(ParseCode::BadIncidence, "incidence values must be at least 1"));
                    }
                    Ok((c, v))
                })
                .collect::<PResult<Vec<_>>>()?;
            st.incidence = Some(Incidence::Multiset(pairs));
        }
        "incidence-matrix" => {
            if st.incidence.is_some() {
                return Err(line.err(ParseCode::DuplicateField, "incidence given twice"));
            }
            let rows = if line.rest.is_empty() {
                Vec::new()
            } else {
                line.rest
                    .split(';')
                    .map(|row| {
                        let row: Vec<u32> = row
                            .split_whitespace()
                            .map(|x| plain_u32(line, x, ParseCode::BadIncidence))
                            .collect::<PResult<_>>()?;
                        if row.is_empty() {
                            return Err(line.err(ParseCode::BadIncidence, "empty incidence row"));
                        }
                        Ok(row)
                    })
                    .collect::<PResult<Vec<_>>>()?
            };
            st.incidence = Some(Incidence::Matrix(rows));
        }
        "reduced" => {
            if st.reduced.is_some() {
                return Err(line.err(ParseCode::DuplicateField, "reduced given twice"));
            }
            let f = line.fields(&["n", "degree", "power"])?;
            let n = positive(line, required(line, &f, "n")?, binding, "n")?;
            let degree = positive(line, required(line, &f, "degree")?, binding, "degree")?;
            let power = lookup(&f, "power").map_or(Ok(1), |p| positive(line, p, binding, "power"))?;
            st.reduced = Some((line.no, n, degree, power));
        }
        "localspectrum" | "localwh" => {
            let Some((_, n, _, _)) = st.reduced else {
                return Err(line.err(
                    ParseCode::MissingHeader,
                    format!("{} must follow a reduced header", line.keyword),
                ));
            };
            let s = if line.keyword == "localspectrum" {
                spectrum(line, n)?
            } else {
                let f = line.fields(&["weights", "degree"])?;
                let w = weights(line, required(line, &f, "weights")?, binding)?;
                if w.len() != n as usize {
                    return Err(line.err(
                        ParseCode::BadWeights,
                        format!("localwh needs {n} weights for n={n}, got {}", w.len()),
                    ));
                }
                let degree = positive(line, required(line, &f, "degree")?, binding, "degree")?;
                let ws = WeightSystem::new(w, degree)
                    .map_err(|e| line.err(ParseCode::BadWeights, e.to_string()))?;
                wh_spectrum(&ws).map_err(|e| line.err(ParseCode::BadWeights, e.to_string()))?
            };
            st.spectra.push((line.no, s));
        }
        "degree" | "dprime" | "d" | "chi" | "milnor" => {
            return Err(line.err(
                ParseCode::DerivedTotal,
                format!("{} is derived from the components and cannot be given", line.keyword),
            ));
        }
        other => {
            return Err(line.err(ParseCode::UnknownKeyword, format!("unknown keyword {other:?}")));
        }
    }
    Ok(())
}

fn finish(st: Pending, last: usize) -> Result<NativeConfig> {
    if let Some((rline, n, degree, power)) = st.reduced {
        if let Some(c) = st.curve_line {
            return Err(ParseError::new(
                c,
                ParseCode::MixedModes,
                "curve keywords cannot appear in a reduced-mode file",
            )
            .into());
        }
        if let Some((aline, a)) = st.ambient {
            if a != n {
                return Err(ParseError::new(
                    aline,
                    ParseCode::Invalid,
                    format!("ambient {a} disagrees with reduced n={n}"),
                )
                .into());
            }
        }
        let line_of = st.spectra.iter().map(|(l, _)| *l).collect::<Vec<_>>();
        let spectra = st.spectra.into_iter().map(|(_, s)| s).collect();
        return ReducedConeConfig::new(n, degree, spectra, power)
            .map(NativeConfig::Reduced)
            .map_err(|e| {
                let line = match &e {
                    Error::InvalidConfig(msg) => msg
                        .strip_prefix("local spectrum ")
                        .and_then(|r| r.split_whitespace().next())
                        .and_then(|k| k.parse::<usize>().ok())
                        .and_then(|k| line_of.get(k - 1).copied())
                        .unwrap_or(rline),
                    _ => rline,
                };
                ParseError::new(line, ParseCode::BadSpectrum, e.to_string()).into()
            });
    }
    if let Some((aline, a)) = st.ambient {
        if a != 2 {
            return Err(ParseError::new(
                aline,
                ParseCode::Invalid,
                format!("curve mode needs ambient 2, got {a}"),
            )
            .into());
        }
    }
    if st.components.is_empty() {
        return Err(ParseError::new(last, ParseCode::MissingField, "no components given").into());
    }
    CurveConfig::new(st.components, st.points, st.nodes.unwrap_or(0), st.incidence)
        .map(NativeConfig::Curve)
        .map_err(|e| {
            let code = match e {
                Error::InvalidBranches(_) => ParseCode::BadBranches,
                Error::NonIntegralMilnor(_) => ParseCode::BadBranches,
                _ => ParseCode::Invalid,
            };
            ParseError::new(last, code, e.to_string()).into()
        })
}

fn runs<T: PartialEq>(items: &[T]) -> Vec<(&T, usize)> {
    let mut out: Vec<(&T, usize)> = Vec::new();
    for item in items {
        match out.last_mut() {
            Some((prev, n)) if *prev == item => *n += 1,
            _ => out.push((item, 1)),
        }
    }
    out
}

/// Native text that parses back to `cfg`.
pub fn emit_native(cfg: &CurveConfig) -> String {
    let mut out = String::from("ambient 2\n");
    for (c, n) in runs(&cfg.components) {
        let _ = writeln!(out, "component degree={} mult={} count={n}", c.degree, c.multiplicity);
    }
    for (p, n) in runs(&cfg.points) {
        let (w, wp) = p.weights();
        let branches: String = p
            .branches()
            .iter()
            .map(|b| format!("({}:{})", b.weighted_degree, b.multiplicity))
            .collect();
        let _ = writeln!(out, "point weights={w},{wp} branches={branches} count={n}");
    }
    let _ = writeln!(out, "nodes {}", cfg.nodes);
    match &cfg.incidence {
        None => {}
        Some(Incidence::Multiset(pairs)) => {
            out.push_str("incidence");
            for (c, v) in pairs {
                let _ = write!(out, " {c}x{v}");
            }
            out.push('\n');
        }
        Some(Incidence::Matrix(rows)) => {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(out, "incidence-matrix {}", rows.join(" ; "));
        }
    }
    out
}

/// Native text that parses back to `cfg`.
pub fn emit_native_reduced(cfg: &ReducedConeConfig) -> String {
    let mut out = format!(
        "reduced n={} degree={} power={}\n",
        cfg.ambient_dim, cfg.degree, cfg.power
    );
    for s in &cfg.local_spectra {
        out.push_str("localspectrum");
        for (alpha, m) in s.iter() {
            let _ = write!(out, " {alpha}:{m}");
        }
        out.push('\n');
    }
    out
}
