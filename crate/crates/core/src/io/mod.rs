//! Input formats and table rendering.
//!
//! * [`native`]: the line-oriented configuration format, the only one that
//!   can express weighted (non-ordinary) points and reduced-cone inputs.
//! * [`singular`]: the `GlCmp=…; Si=…; OD=…; LG=…` vector format whose
//!   entries are [`expr::TemplateExpr`]s over externally bound parameters.
//! * [`emit`]: `rows` and `csv` table output.

pub mod emit;
pub mod expr;
pub mod native;
pub mod singular;

use std::fmt;

use thiserror::Error;

pub use emit::{emit_table, TableFormat};
pub use expr::{eval_expr, Binding, TemplateExpr};
pub use native::{emit_native, emit_native_reduced, parse_native, NativeConfig};
pub use singular::{parse_singular, SingularVectors};

/// Machine-readable classification of input errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseCode {
    UnknownKeyword,
    UnknownField,
    MissingField,
    DuplicateField,
    BadInteger,
    BadSpectrum,
    BadBranches,
    BadWeights,
    NonPositive,
    BadIncidence,
    MixedModes,
    MissingHeader,
    DerivedTotal,
    BadSeparator,
    BadVector,
    Expression,
    Invalid,
}

impl ParseCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseCode::UnknownKeyword => "unknown-keyword",
            ParseCode::UnknownField => "unknown-field",
            ParseCode::MissingField => "missing-field",
            ParseCode::DuplicateField => "duplicate-field",
            ParseCode::BadInteger => "bad-integer",
            ParseCode::BadSpectrum => "bad-spectrum",
            ParseCode::BadBranches => "bad-branches",
            ParseCode::BadWeights => "bad-weights",
            ParseCode::NonPositive => "non-positive",
            ParseCode::BadIncidence => "bad-incidence",
            ParseCode::MixedModes => "mixed-modes",
            ParseCode::MissingHeader => "missing-header",
            ParseCode::DerivedTotal => "derived-total",
            ParseCode::BadSeparator => "bad-separator",
            ParseCode::BadVector => "bad-vector",
            ParseCode::Expression => "expression",
            ParseCode::Invalid => "invalid",
        }
    }
}

impl fmt::Display for ParseCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An input error with its 1-based line (0 when the input has no lines).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: [{code}] {message}")]
pub struct ParseError {
    pub line: usize,
    pub code: ParseCode,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, code: ParseCode, message: impl Into<String>) -> Self {
        ParseError {
            line,
            code,
            message: message.into(),
        }
    }
}
