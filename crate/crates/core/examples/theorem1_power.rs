//! Cones over reduced hypersurfaces and their thickenings f^m.

use conespec::io::native::{parse_native, NativeConfig};
use conespec::io::Binding;
use conespec::{theorem1_power, theorem1_reduced, Error, Result};

fn main() -> Result<()> {
    for (name, text) in [
        ("smooth conic, squared", "reduced n=2 degree=2 power=2\n"),
        ("cuspidal cubic, cubed", "reduced n=2 degree=3 power=3\nlocalwh weights=2,3 degree=6\n"),
        ("quartic surface with one node", "reduced n=3 degree=4 power=1\nlocalwh weights=1,1,1 degree=2\n"),
    ] {
        let NativeConfig::Reduced(cfg) = parse_native(text, &Binding::new())? else {
            return Err(Error::InvalidConfig("expected a reduced-cone input".into()));
        };
        let base = theorem1_reduced(&cfg);
        println!("{name}");
        println!("  reduced cone: {base}");
        if cfg.power > 1 {
            println!("  power {}: {}", cfg.power, theorem1_power(&base, &cfg)?);
        }
    }
    Ok(())
}
