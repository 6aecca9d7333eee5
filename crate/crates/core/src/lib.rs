//! Exact Hodge spectrum multiplicities for cones over projective hypersurfaces
//! whose reduced variety has only isolated singularities.
//!
//! The crate is organised bottom-up:
//!
//! * [`fraction`] and [`spectrum`] hold the exact scalar and the finite-support
//!   spectrum vector with its algebra (sum, Thom–Sebastiani product, duality).
//! * [`local`] computes local invariants of semi-weighted-homogeneous plane
//!   germs: weighted-homogeneous spectra, Milnor numbers, lattice counts and
//!   spectral window counts.
//! * [`cone`] evaluates the global closed formulas for cones over plane curves
//!   (possibly non-reduced) and over reduced hypersurfaces with a thickening
//!   power.
//! * [`io`] parses the native line format and the compatibility vector format
//!   with its template arithmetic, and renders tables.
//! * [`oracle`] holds independent brute-force implementations used for
//!   differential testing.
//! * [`verify`], [`report`], [`scan`] and [`cli`] wire everything into
//!   pass/fail reports and the `conespec` command.

pub mod cli;
pub mod cone;
pub mod error;
pub mod fixtures;
pub mod fraction;
pub mod io;
pub mod local;
pub mod oracle;
pub mod report;
pub mod scan;
pub mod spectrum;
pub mod verify;

pub use cone::{
    chi_generic_union, chi_u, corollary1_table, corollary2_row, frac_data, gamma_coeffs,
    gamma_point, incidence_check, theorem1_power, theorem1_reduced, theorem2_table,
    ConeSpectrumTable, CurveConfig, FracData, GammaSequence, GlobalComponent, Incidence,
    ReducedConeConfig,
};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use local::{
    lattice_count, milnor_wh, validate_branches, wh_spectrum, window_count, LocalBranch,
    SingularPoint, WeightSystem,
};
pub use spectrum::SpectrumVector;
