//! Every invariant that applies to a given input, collected into a [`Report`].
//!
//! Row 0 cells with `i < d` are dimensions of Hodge pieces, so they are
//! nonnegative for any input that comes from an actual curve. Rows 1 and 2 are
//! alternating sums in general and can be negative for curves whose complement
//! has non-abelian or non-trivial rank-one cohomology, so their sign is
//! reported as a note only.

use crate::cone::{
    corollary1_table, corollary2_row, incidence_check, theorem1_power, theorem1_reduced,
    theorem2_table, ConeSpectrumTable, CurveConfig, Incidence, ReducedConeConfig,
};
use crate::error::Result;
use crate::report::{Check, Report};

fn row_sums(t: &ConeSpectrumTable) -> Check {
    Check::outcome(
        "row sums = chi(U)",
        match t.row_sum_violation() {
            None => Ok(()),
            Some((i, s)) => Err(format!("i={i}: sum {s}, chi(U) {}", t.chi_u)),
        },
    )
}

/// The table of `cfg`, recomputed through the reduced-cone formulas when the
/// curve is a uniform thickening `f'^m` of a reduced curve.
pub fn thickening_table(cfg: &CurveConfig) -> Result<Option<ConeSpectrumTable>> {
    let Some((reduced, m)) = cfg.as_thickening() else {
        return Ok(None);
    };
    let rc = reduced.to_reduced_cone(m)?;
    let spectrum = theorem1_power(&theorem1_reduced(&rc), &rc)?;
    let t = theorem2_table(cfg)?;
    Ok(Some(ConeSpectrumTable::from_spectrum(t.d, t.dprime, t.chi_u, &spectrum)))
}

pub fn verify_curve(cfg: &CurveConfig) -> Result<Report> {
    let table = theorem2_table(cfg)?;
    let mut report = Report::default();
    report.checks.push(row_sums(&table));
    report.checks.push(Check::outcome(
        "row 0 nonnegative for i < d",
        match table.negative_cell(&[0]) {
            None => Ok(()),
            Some((i, _, v)) => Err(format!("i={i}: {v}")),
        },
    ));
    if let Some((i, e, v)) = table.negative_cell(&[1, 2]) {
        report.notes.push(format!(
            "row {e} has the negative value {v} at i={i}; rows 1 and 2 are not dimensions in general"
        ));
    }

    let mut local = Ok(());
    for (j, p) in cfg.points.iter().enumerate() {
        let s = p.local_spectrum()?;
        if !s.is_supported() || !s.is_symmetric() || s.total() != p.milnor()? {
            local = Err(format!("point {}: spectrum {s}", j + 1));
            break;
        }
    }
    report
        .checks
        .push(Check::outcome("local spectra supported, symmetric, total = Milnor number", local));

    match &cfg.incidence {
        Some(Incidence::Matrix(_)) => report.checks.push(Check::outcome(
            "incidence: d'_k d'_k' = sum_j m_jk m_jk'",
            if incidence_check(cfg)? {
                Ok(())
            } else {
                Err(first_incidence_failure(cfg))
            },
        )),
        _ => report
            .notes
            .push("no incidence matrix: intersection numbers are not checked".into()),
    }

    if cfg.is_ordinary() && cfg.incidence.is_some() {
        let mut cor2 = table.clone();
        cor2.rows[1] = corollary2_row(cfg)?;
        report.checks.push(Check::cells(
            "corollary2 row 1 = theorem2 row 1",
            table.first_mismatch(&cor2, &[1]),
        ));
    } else if !cfg.is_ordinary() {
        report
            .notes
            .push("weighted points present: the incidence form of the middle row does not apply".into());
    }

    if cfg.is_reduced() {
        let spectra = cfg.to_reduced_cone(1)?.local_spectra;
        let cor1 = corollary1_table(cfg.degree(), &spectra);
        report.checks.push(Check::cells(
            "corollary1 = theorem2",
            table.first_mismatch(&cor1, &[0, 1, 2]),
        ));
    }

    if let Some(thick) = thickening_table(cfg)? {
        report.checks.push(Check::cells(
            "theorem1 transform of the reduced cone = theorem2",
            table.first_mismatch(&thick, &[0, 1, 2]),
        ));
    } else {
        report
            .notes
            .push("multiplicities are not uniform: the thickening identity does not apply".into());
    }
    Ok(report)
}

fn first_incidence_failure(cfg: &CurveConfig) -> String {
    let Some(Incidence::Matrix(rows)) = &cfg.incidence else {
        return String::new();
    };
    let r = cfg.components.len();
    for k in 0..r {
        for kp in k + 1..r {
            let global = cfg.components[k].degree * cfg.components[kp].degree;
            let local: u32 = rows.iter().map(|row| row[k] * row[kp]).sum();
            if global != local {
                return format!(
                    "components {} and {}: degrees give {global}, incidence gives {local}",
                    k + 1,
                    kp + 1
                );
            }
        }
    }
    String::new()
}

pub fn verify_reduced(cfg: &ReducedConeConfig) -> Result<Report> {
    let mut report = Report::default();
    let n = cfg.ambient_dim;
    report.checks.push(Check::outcome(
        "local spectra supported and symmetric",
        match cfg
            .local_spectra
            .iter()
            .position(|s| !s.is_supported() || !s.is_symmetric())
        {
            None => Ok(()),
            Some(j) => Err(format!("point {}", j + 1)),
        },
    ));
    let base = theorem1_reduced(cfg);
    let top = crate::fraction::Fraction::from_integer(i64::from(n) + 1);
    report.checks.push(Check::outcome(
        "cone spectrum inside (0, n+1)",
        match base.iter().find(|(a, _)| !a.is_positive() || **a >= top) {
            None => Ok(()),
            Some((a, m)) => Err(format!("{a}:{m}")),
        },
    ));
    if cfg.power > 1 {
        let powered = theorem1_power(&base, cfg)?;
        report.checks.push(Check::outcome(
            "power transform inside (0, n+1)",
            match powered.iter().find(|(a, _)| !a.is_positive() || **a >= top) {
                None => Ok(()),
                Some((a, m)) => Err(format!("{a}:{m}")),
            },
        ));
    }
    if n == 2 {
        let cor1 = corollary1_table(cfg.degree, &cfg.local_spectra);
        let from_thm1 = ConeSpectrumTable::from_spectrum(cfg.degree, cfg.degree, cor1.chi_u, &base);
        report.checks.push(Check::cells(
            "theorem1 = corollary1",
            cor1.first_mismatch(&from_thm1, &[0, 1, 2]),
        ));
        report.checks.push(row_sums(&cor1));
    } else {
        report
            .notes
            .push(format!("n={n}: the plane-curve table identities do not apply"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::io::native::{parse_native, NativeConfig};
    use crate::io::Binding;

    #[test]
    fn bundled_templates_verify() {
        for f in fixtures::TEMPLATES {
            let report = verify_curve(&f.config().unwrap()).unwrap();
            assert!(report.all_passed(), "{}: {report}", f.name);
        }
    }

    #[test]
    fn full_incidence_matrix_verifies() {
        let cfg = fixtures::native_curve(fixtures::CUBIC_PENCIL_MATRIX).unwrap();
        let report = verify_curve(&cfg).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.iter().any(|c| c.name.starts_with("incidence")));
        assert_eq!(
            theorem2_table(&cfg).unwrap(),
            theorem2_table(&fixtures::CUBIC_PENCIL_322.config().unwrap()).unwrap()
        );
    }

    #[test]
    fn corrupted_incidence_fails() {
        let text = fixtures::CUBIC_PENCIL_MATRIX.replace("2 2 2 1 1", "2 2 1 1 1");
        let cfg = fixtures::native_curve(&text).unwrap();
        let report = verify_curve(&cfg).unwrap();
        let failure = report.first_failure().unwrap();
        assert!(failure.name.starts_with("incidence"), "{report}");
        assert!(failure.detail.as_ref().unwrap().contains("components 1 and 3"));
    }

    #[test]
    fn weighted_fixtures_verify() {
        for text in [fixtures::CUSPIDAL_CUBIC_DOUBLE, fixtures::TANGENT_CONICS] {
            let report = verify_curve(&fixtures::native_curve(text).unwrap()).unwrap();
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn reduced_fixtures_verify() {
        for text in [
            fixtures::CUSPIDAL_CUBIC_REDUCED,
            fixtures::CONIC_SQUARED,
            fixtures::FERMAT_CUBIC,
            fixtures::NODAL_QUARTIC_SURFACE,
        ] {
            let NativeConfig::Reduced(r) = parse_native(text, &Binding::new()).unwrap() else {
                panic!()
            };
            let report = verify_reduced(&r).unwrap();
            assert!(report.all_passed(), "{report}");
        }
    }
}
