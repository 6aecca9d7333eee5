//! The `conespec` command line. [`run`] returns the exit status and both
//! output streams so that commands can be tested without spawning processes.
//!
//! Exit statuses: 0 success, 1 a verification or oracle check failed, 2 the
//! input could not be read, parsed or evaluated.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cone::{
    corollary1_table, corollary2_row, theorem1_power, theorem1_reduced, theorem2_table,
    CurveConfig, ReducedConeConfig,
};
use crate::error::{Error, Result};
use crate::io::native::{parse_native, NativeConfig};
use crate::io::singular::load_singular;
use crate::io::{emit_table, Binding, TableFormat};
use crate::oracle::cross_check;
use crate::scan::{run_scan, Predicate, ScanSpec, ScanTemplate, DEFAULT_CAP};
use crate::spectrum::SpectrumVector;
use crate::verify::{verify_curve, verify_reduced};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "conespec", version, about = "Spectra of cones over projective hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum table of a plane curve configuration.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Formula for the middle row.
        #[arg(long, value_enum, default_value_t = Middle::Thm2)]
        middle: Middle,
        #[arg(long, value_enum, default_value_t = Format::Rows)]
        format: Format,
    },
    /// Spectrum of the cone over a reduced hypersurface and its thickening.
    Reduced {
        #[command(flatten)]
        input: Input,
    },
    /// Check every invariant that applies to the input.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Sweep template parameters and report n_{f,3/d} and chi(U) as CSV.
    Scan {
        path: PathBuf,
        /// Fixed parameter, name=value.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, i64)>,
        /// Inclusive range, name=lo..hi.
        #[arg(long = "range", value_parser = parse_range)]
        ranges: Vec<(String, i64, i64)>,
        /// Keep only points where the predicate holds (n3d_zero, chi_nonzero).
        #[arg(long = "predicate")]
        predicates: Vec<Predicate>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Compare the engine with the brute-force oracles.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Native configuration or GlCmp/Si/OD/LG vectors.
    pub path: PathBuf,
    /// Parameter value, name=value.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, i64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Middle {
    Thm2,
    Cor2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Rows,
    Csv,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Rows => TableFormat::Rows,
            Format::Csv => TableFormat::Csv,
        }
    }
}

fn parse_param(s: &str) -> std::result::Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or("expected name=value")?;
    let v = v.trim().parse().map_err(|_| format!("{v:?} is not an integer"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_range(s: &str) -> std::result::Result<(String, i64, i64), String> {
    let (k, r) = s.split_once('=').ok_or("expected name=lo..hi")?;
    let (lo, hi) = r.split_once("..").ok_or("expected name=lo..hi")?;
    let lo = lo.trim().parse().map_err(|_| format!("{lo:?} is not an integer"))?;
    let hi = hi.trim().parse().map_err(|_| format!("{hi:?} is not an integer"))?;
    Ok((k.trim().to_string(), lo, hi))
}

/// Outcome of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Loaded input file.
pub enum Loaded {
    Curve(CurveConfig),
    Reduced(ReducedConeConfig),
}

/// Reads a file in either format; the vector format is recognised by `GlCmp`.
pub fn load_text(text: &str, binding: &Binding) -> Result<Loaded> {
    if text.contains("GlCmp") {
        return load_singular(text, binding).map(Loaded::Curve);
    }
    Ok(match parse_native(text, binding)? {
        NativeConfig::Curve(c) => Loaded::Curve(c),
        NativeConfig::Reduced(r) => Loaded::Reduced(r),
    })
}

fn read(input: &Input) -> std::result::Result<Loaded, Outcome> {
    let text = std::fs::read_to_string(&input.path)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", input.path.display())))?;
    let binding: Binding = input.params.iter().cloned().collect();
    load_text(&text, &binding)
        .map_err(|e| Outcome::input_error(format!("{}: {e}", input.path.display())))
}

fn need_curve(loaded: Loaded, command: &str) -> std::result::Result<CurveConfig, Outcome> {
    match loaded {
        Loaded::Curve(c) => Ok(c),
        Loaded::Reduced(_) => Err(Outcome::input_error(format!(
            "{command} needs a curve configuration; use `conespec reduced` for reduced-cone files"
        ))),
    }
}

pub fn cmd_compute(cfg: &CurveConfig, middle: Middle, format: TableFormat) -> Result<String> {
    let mut table = theorem2_table(cfg)?;
    if middle == Middle::Cor2 {
        table.rows[1] = corollary2_row(cfg)?;
    }
    Ok(emit_table(&table, format))
}

fn render(s: &SpectrumVector) -> String {
    if s.is_empty() {
        "(empty)".to_string()
    } else {
        s.to_string()
    }
}

pub fn cmd_reduced(cfg: &ReducedConeConfig) -> Result<String> {
    let base = theorem1_reduced(cfg);
    let mut out = format!("spectrum: {}\n", render(&base));
    if cfg.power > 1 {
        let powered = theorem1_power(&base, cfg)?;
        out.push_str(&format!("power {}: {}\n", cfg.power, render(&powered)));
    }
    if cfg.ambient_dim == 2 {
        out.push_str(&emit_table(
            &corollary1_table(cfg.degree, &cfg.local_spectra),
            TableFormat::Rows,
        ));
    }
    Ok(out)
}

fn report_outcome(report: crate::report::Report, json: bool) -> Outcome {
    Outcome {
        code: if report.all_passed() { EXIT_OK } else { EXIT_MISMATCH },
        stdout: if json { report.to_json() + "\n" } else { report.to_string() },
        stderr: String::new(),
    }
}

fn execute(cli: Cli) -> std::result::Result<Outcome, Outcome> {
    let fail = |e: Error| Outcome::input_error(e);
    Ok(match cli.command {
        Command::Compute { input, middle, format } => {
            let cfg = need_curve(read(&input)?, "compute")?;
            Outcome::ok(cmd_compute(&cfg, middle, format.into()).map_err(fail)?)
        }
        Command::Reduced { input } => {
            let cfg = match read(&input)? {
                Loaded::Reduced(r) => r,
                Loaded::Curve(c) => {
                    let (reduced, m) = c.as_thickening().ok_or_else(|| {
                        Outcome::input_error(
                            "reduced needs a reduced-cone file or a curve with one multiplicity throughout",
                        )
                    })?;
                    reduced.to_reduced_cone(m).map_err(fail)?
                }
            };
            Outcome::ok(cmd_reduced(&cfg).map_err(fail)?)
        }
        Command::Verify { input, json } => {
            let report = match read(&input)? {
                Loaded::Curve(c) => verify_curve(&c),
                Loaded::Reduced(r) => verify_reduced(&r),
            }
            .map_err(fail)?;
            report_outcome(report, json)
        }
        Command::Oracle { input, json } => {
            let cfg = need_curve(read(&input)?, "oracle")?;
            let mut report = cross_check(&cfg).map_err(fail)?;
            if !cfg.is_ordinary() {
                let extra = verify_curve(&cfg).map_err(fail)?;
                for c in extra.checks {
                    if !report.checks.iter().any(|k| k.name == c.name) {
                        report.checks.push(c);
                    }
                }
                report.notes.extend(extra.notes);
            }
            report_outcome(report, json)
        }
        Command::Scan { path, params, ranges, predicates, cap } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Outcome::input_error(format!("{}: {e}", path.display())))?;
            let mut spec = ScanSpec::new(ScanTemplate::parse(&text).map_err(fail)?);
            spec.fixed = params.into_iter().collect();
            spec.ranges = ranges
                .into_iter()
                .map(|(k, lo, hi)| (k, (lo, hi)))
                .collect::<BTreeMap<_, _>>();
            spec.predicates = predicates;
            spec.cap = cap;
            Outcome::ok(run_scan(&spec).map_err(fail)?.to_csv())
        }
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    execute(cli).unwrap_or_else(|o| o)
}
