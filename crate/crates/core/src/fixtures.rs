//! Bundled example inputs: parameter templates in the vector format and a few
//! native-format files, including weighted points and reduced-cone inputs.

use crate::cone::CurveConfig;
use crate::error::Result;
use crate::io::native::{parse_native, NativeConfig};
use crate::io::singular::load_singular;
use crate::io::Binding;

pub const PENCIL_OF_CONICS: &str = include_str!("../fixtures/pencil_of_conics.sing");
pub const CUBIC_PENCIL: &str = include_str!("../fixtures/cubic_pencil.sing");
pub const QUARTIC_PENCIL: &str = include_str!("../fixtures/quartic_pencil.sing");
pub const SEXTIC_PENCIL: &str = include_str!("../fixtures/sextic_pencil.sing");
pub const FIVE_LINES: &str = include_str!("../fixtures/five_lines.sing");
pub const LINES_AND_CONIC: &str = include_str!("../fixtures/lines_and_conic.sing");

pub const CUBIC_PENCIL_MATRIX: &str = include_str!("../fixtures/cubic_pencil_matrix.conf");
pub const CUSPIDAL_CUBIC_DOUBLE: &str = include_str!("../fixtures/cuspidal_cubic_double.conf");
pub const TANGENT_CONICS: &str = include_str!("../fixtures/tangent_conics.conf");

pub const CUSPIDAL_CUBIC_REDUCED: &str = include_str!("../fixtures/cuspidal_cubic.red");
pub const CONIC_SQUARED: &str = include_str!("../fixtures/conic_squared.red");
pub const FERMAT_CUBIC: &str = include_str!("../fixtures/fermat_cubic.red");
pub const NODAL_QUARTIC_SURFACE: &str = include_str!("../fixtures/nodal_quartic_surface.red");

/// A vector template with the parameter values of a printed table.
#[derive(Debug, Clone, Copy)]
pub struct Template {
    pub name: &'static str,
    pub text: &'static str,
    pub params: &'static [(&'static str, i64)],
}

impl Template {
    pub fn binding(&self) -> Binding {
        self.params.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    pub fn config(&self) -> Result<CurveConfig> {
        load_singular(self.text, &self.binding())
    }

    pub fn config_with(&self, binding: &Binding) -> Result<CurveConfig> {
        load_singular(self.text, binding)
    }
}

pub const PENCIL_OF_CONICS_252: Template = Template {
    name: "pencil_of_conics",
    text: PENCIL_OF_CONICS,
    params: &[("a", 2), ("b", 5), ("c", 2)],
};

pub const CUBIC_PENCIL_322: Template = Template {
    name: "cubic_pencil",
    text: CUBIC_PENCIL,
    params: &[("a", 3), ("b", 2), ("c", 2)],
};

pub const QUARTIC_PENCIL_322: Template = Template {
    name: "quartic_pencil",
    text: QUARTIC_PENCIL,
    params: &[("a", 3), ("b", 2), ("c", 2)],
};

pub const SEXTIC_PENCIL_321: Template = Template {
    name: "sextic_pencil",
    text: SEXTIC_PENCIL,
    params: &[("a", 3), ("b", 2), ("c", 1)],
};

pub const FIVE_LINES_420: Template = Template {
    name: "five_lines_420",
    text: FIVE_LINES,
    params: &[("a", 4), ("b", 2), ("c", 0)],
};

pub const FIVE_LINES_510: Template = Template {
    name: "five_lines_510",
    text: FIVE_LINES,
    params: &[("a", 5), ("b", 1), ("c", 0)],
};

pub const LINES_AND_CONIC_114: Template = Template {
    name: "lines_and_conic",
    text: LINES_AND_CONIC,
    params: &[("a", 1), ("b", 1), ("c", 4)],
};

/// Every template at the parameters of its printed table.
pub const TEMPLATES: [Template; 7] = [
    PENCIL_OF_CONICS_252,
    CUBIC_PENCIL_322,
    QUARTIC_PENCIL_322,
    SEXTIC_PENCIL_321,
    FIVE_LINES_420,
    FIVE_LINES_510,
    LINES_AND_CONIC_114,
];

/// The six distinct vector templates.
pub const TEMPLATE_TEXTS: [(&str, &str); 6] = [
    ("pencil_of_conics", PENCIL_OF_CONICS),
    ("cubic_pencil", CUBIC_PENCIL),
    ("quartic_pencil", QUARTIC_PENCIL),
    ("sextic_pencil", SEXTIC_PENCIL),
    ("five_lines", FIVE_LINES),
    ("lines_and_conic", LINES_AND_CONIC),
];

/// Parses a bundled native curve file.
pub fn native_curve(text: &str) -> Result<CurveConfig> {
    match parse_native(text, &Binding::new())? {
        NativeConfig::Curve(c) => Ok(c),
        NativeConfig::Reduced(_) => Err(crate::error::Error::InvalidConfig(
            "expected a curve file, got a reduced-cone file".into(),
        )),
    }
}
