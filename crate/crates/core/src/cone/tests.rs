use super::*;
use crate::local::{wh_spectrum, LocalBranch, WeightSystem};
use crate::spectrum::SpectrumVector;

fn sv(dim: u32, pairs: &[(i64, i64, i64)]) -> SpectrumVector {
    SpectrumVector::from_pairs(dim, pairs.iter().map(|&(p, q, n)| (Fraction::new(p, q), n)))
}

fn comps(list: &[(u32, u32)]) -> Vec<GlobalComponent> {
    list.iter().map(|&(d, a)| GlobalComponent::new(d, a)).collect()
}

fn ord(mults: &[u32]) -> SingularPoint {
    SingularPoint::ordinary(mults).unwrap()
}

/// Conics through four points with two lines, `(a, b, c) = (2, 5, 2)`.
fn pencil_of_conics() -> CurveConfig {
    CurveConfig::new(
        comps(&[(2, 2), (2, 1), (2, 1), (1, 5), (1, 1)]),
        vec![ord(&[2, 5, 1, 1]), ord(&[2, 5, 1, 1]), ord(&[2, 1, 1, 1]), ord(&[2, 1, 1, 1])],
        1,
        Some(Incidence::Multiset(vec![])),
    )
    .unwrap()
}

/// `x^4 y^2 z (x + y)(x + y + z)`.
fn five_lines() -> CurveConfig {
    CurveConfig::new(
        comps(&[(1, 4), (1, 2), (1, 1), (1, 1), (1, 1)]),
        vec![ord(&[4, 2, 1]), ord(&[1, 1, 1])],
        4,
        Some(Incidence::Multiset(vec![(6, 1)])),
    )
    .unwrap()
}

fn conic() -> CurveConfig {
    CurveConfig::new(comps(&[(2, 1)]), vec![], 0, None).unwrap()
}

fn cusp() -> SingularPoint {
    SingularPoint::new((2, 3), vec![LocalBranch::new(6, 1)]).unwrap()
}

#[test]
fn frac_data_reduced_is_trivial() {
    let cfg = CurveConfig::new(comps(&[(1, 1), (2, 1), (3, 1)]), vec![], 0, None).unwrap();
    for i in 1..=6 {
        let fd = frac_data(&cfg, i).unwrap();
        assert_eq!(fd.sigma, 0);
        assert_eq!(fd.iota, i64::from(i));
        assert!(fd.betas.iter().all(|b| *b == Fraction::new(i64::from(i), 6)));
    }
}

#[test]
fn frac_data_at_top_index() {
    let cfg = pencil_of_conics();
    assert_eq!(cfg.degree(), 14);
    assert_eq!(cfg.reduced_degree(), 8);
    let fd = frac_data(&cfg, 14).unwrap();
    assert!(fd.betas.iter().all(|b| *b == 1));
    assert_eq!(fd.sigma, 6);
    assert_eq!(fd.iota, 8);
    let fd1 = frac_data(&cfg, 1).unwrap();
    assert_eq!((fd1.sigma, fd1.iota), (0, 1));
    assert!(matches!(frac_data(&cfg, 0), Err(Error::IndexOutOfRange { .. })));
    assert!(matches!(frac_data(&cfg, 15), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn gamma_point_examples() {
    let p = ord(&[2, 5, 1, 1]);
    assert_eq!(gamma_point(&p, 1, 14).unwrap(), Fraction::new(9, 14));
    assert_eq!(gamma_point(&p, 14, 14).unwrap(), Fraction::from_integer(4));
    let reduced = ord(&[1, 1, 1]);
    for i in 1..=7 {
        assert_eq!(
            gamma_point(&reduced, i, 7).unwrap(),
            Fraction::new(3 * i64::from(i), 7)
        );
    }
    assert_eq!(gamma_point(&cusp(), 5, 5).unwrap(), Fraction::from_integer(6));
}

#[test]
fn theorem2_pencil_golden() {
    let t = theorem2_table(&pencil_of_conics()).unwrap();
    assert_eq!(t.rows[0], vec![0, 0, 0, 1, 1, 1, 2, 1, 1, 2, 2, 2, 3, 9]);
    assert_eq!(t.rows[1], vec![3, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 3, -4]);
    assert_eq!(t.rows[2][..13], [3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 0, 0, 0]);
    assert_eq!(t.chi_u, 6);
    assert_eq!(t.row_sum_violation(), None);
}

#[test]
fn theorem2_five_lines_golden() {
    let t = theorem2_table(&five_lines()).unwrap();
    assert_eq!(t.d, 9);
    assert_eq!(t.rows[0], vec![0, 0, 0, 0, 0, 1, 0, 1, 4]);
    assert_eq!(t.rows[1], vec![0, 1, 1, 1, 1, 0, 1, 0, -4]);
    assert_eq!(t.rows[2][..8], [1, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(t.chi_u, 1);
}

#[test]
fn theorem2_smooth_conic() {
    let t = theorem2_table(&conic()).unwrap();
    assert_eq!(t.rows, [vec![0, 0], vec![1, 0], vec![0, 0]]);
    assert_eq!(t.chi_u, 1);
    // cone over a smooth conic is an A1 singularity in three variables
    let a1 = wh_spectrum(&WeightSystem::new(vec![1, 1, 1], 2).unwrap()).unwrap();
    assert_eq!(t.to_spectrum(), a1);
}

#[test]
fn theorem2_rejects_bad_branches() {
    let mut cfg = conic();
    cfg.points
        .push(SingularPoint::new((2, 3), vec![LocalBranch::new(4, 1)]).unwrap());
    assert!(matches!(theorem2_table(&cfg), Err(Error::InvalidBranches(_))));
    let mut cfg = conic();
    cfg.points.push(
        SingularPoint::new((2, 3), vec![LocalBranch::new(2, 1), LocalBranch::new(2, 1)]).unwrap(),
    );
    assert!(matches!(theorem2_table(&cfg), Err(Error::NonIntegralMilnor(_))));
}

#[test]
fn corollary2_matches_theorem2_on_fixtures() {
    for cfg in [pencil_of_conics(), five_lines()] {
        let t = theorem2_table(&cfg).unwrap();
        assert_eq!(corollary2_row(&cfg).unwrap(), t.rows[1]);
    }
}

#[test]
fn corollary2_two_lines() {
    let cfg = CurveConfig::new(
        comps(&[(1, 1), (1, 1)]),
        vec![],
        1,
        Some(Incidence::Multiset(vec![(2, 1)])),
    )
    .unwrap();
    let row = corollary2_row(&cfg).unwrap();
    assert_eq!(row[..1], [0]);
    assert_eq!(row, theorem2_table(&cfg).unwrap().rows[1]);
}

#[test]
fn corollary2_preconditions() {
    let mut cfg = pencil_of_conics();
    cfg.incidence = None;
    assert_eq!(corollary2_row(&cfg), Err(Error::MissingIncidence));
    let mut cfg = conic();
    cfg.points.push(cusp());
    cfg.incidence = Some(Incidence::Multiset(vec![]));
    assert_eq!(corollary2_row(&cfg), Err(Error::NotOrdinary(1)));
}

#[test]
fn gamma_coeff_examples() {
    assert_eq!(gamma_coeffs(3, 2), GammaSequence { first: 3, coeffs: vec![1, 3, 3, 1] });
    assert_eq!(gamma_coeffs(2, 2).coeffs, vec![1]);
    assert!(gamma_coeffs(1, 2).coeffs.is_empty());
    for dp in 1..=12u32 {
        for n in 1..=4u32 {
            let g = gamma_coeffs(dp, n);
            let top = (n + 1) * dp;
            for i in 0..=top {
                assert_eq!(g.get(i), g.get(top - i), "d'={dp} n={n} i={i}");
            }
            let total: i64 = g.coeffs.iter().sum();
            assert_eq!(total, i64::from(dp - 1).pow(n + 1));
        }
    }
}

#[test]
fn theorem1_examples() {
    let fermat = ReducedConeConfig::new(2, 3, vec![], 1).unwrap();
    assert_eq!(
        theorem1_reduced(&fermat),
        wh_spectrum(&WeightSystem::new(vec![1, 1, 1], 3).unwrap()).unwrap()
    );
    let nodal = ReducedConeConfig::new(2, 3, vec![sv(2, &[(1, 1, 1)])], 1).unwrap();
    assert_eq!(
        theorem1_reduced(&nodal),
        sv(3, &[(1, 1, 1), (4, 3, 2), (5, 3, 2)])
    );
    let cuspidal = ReducedConeConfig::new(2, 3, vec![cusp().local_spectrum().unwrap()], 1).unwrap();
    assert_eq!(theorem1_reduced(&cuspidal), sv(3, &[(4, 3, 1), (5, 3, 1)]));
}

#[test]
fn theorem1_power_examples() {
    let conic = ReducedConeConfig::new(2, 2, vec![], 1).unwrap();
    let base = theorem1_reduced(&conic);
    assert_eq!(base, sv(3, &[(3, 2, 1)]));
    assert_eq!(theorem1_power(&base, &conic).unwrap(), base);

    let squared = ReducedConeConfig::new(2, 2, vec![], 2).unwrap();
    assert_eq!(
        theorem1_power(&base, &squared).unwrap(),
        sv(3, &[(5, 4, 1), (7, 4, 1), (5, 2, 1)])
    );

    for m in 1..=5i64 {
        let plane = ReducedConeConfig::new(2, 1, vec![], m as u32).unwrap();
        let base = theorem1_reduced(&plane);
        assert!(base.is_empty());
        let expected = sv(3, &(1..m).map(|k| (2 * m + k, m, 1)).collect::<Vec<_>>());
        assert_eq!(theorem1_power(&base, &plane).unwrap(), expected, "m={m}");
    }

    assert!(theorem1_power(&sv(2, &[(1, 2, 1)]), &squared).is_err());
}

#[test]
fn corollary1_examples() {
    // smooth cubic
    let t = corollary1_table(3, &[]);
    let thm1 = theorem1_reduced(&ReducedConeConfig::new(2, 3, vec![], 1).unwrap());
    assert_eq!(t, ConeSpectrumTable::from_spectrum(3, 3, t.chi_u, &thm1));

    let cusp_spec = cusp().local_spectrum().unwrap();
    let t = corollary1_table(3, &[cusp_spec.clone()]);
    assert_eq!(t.rows[0], vec![0, 0, 0]);
    let thm1 = theorem1_reduced(&ReducedConeConfig::new(2, 3, vec![cusp_spec], 1).unwrap());
    assert_eq!(t.to_spectrum(), thm1);

    let node = sv(2, &[(1, 1, 1)]);
    let t = corollary1_table(3, &[node.clone()]);
    assert_eq!(t.rows[0], vec![0, 0, 1]);
    let thm1 = theorem1_reduced(&ReducedConeConfig::new(2, 3, vec![node], 1).unwrap());
    assert_eq!(thm1.multiplicity(&Fraction::one()), 1);
    assert_eq!(t.to_spectrum(), thm1);
}

#[test]
fn chi_examples() {
    assert_eq!(chi_u(&pencil_of_conics()).unwrap(), 6);
    assert_eq!(chi_u(&five_lines()).unwrap(), 1);
    for r in 3..=12u32 {
        let lines = CurveConfig::new(comps(&vec![(1, 1); r as usize]), vec![], r * (r - 1) / 2, None)
            .unwrap();
        assert_eq!(chi_u(&lines).unwrap(), binom2(i64::from(r) - 2));
        assert_eq!(chi_generic_union(&vec![1; r as usize]), binom2(i64::from(r) - 2));
    }
    assert_eq!(chi_generic_union(&[2]), 1);
    assert_eq!(chi_u(&conic()).unwrap(), 1);
    assert_eq!(chi_generic_union(&[3, 3]), 12);
    let cubics = CurveConfig::new(comps(&[(3, 1), (3, 1)]), vec![], 9, None).unwrap();
    assert_eq!(chi_u(&cubics).unwrap(), 12);
}

#[test]
fn binomial_convention() {
    assert_eq!(binom2(-1), 1);
    assert_eq!(binom2(0), 0);
    assert_eq!(binom2(1), 0);
    assert_eq!(binom2(5), 10);
    assert_eq!(binom2(-3), 6);
}

#[test]
fn incidence_examples() {
    let two_lines = |rows: Vec<Vec<u32>>| {
        CurveConfig::new(comps(&[(1, 1), (1, 1)]), vec![], 1, Some(Incidence::Matrix(rows))).unwrap()
    };
    assert!(incidence_check(&two_lines(vec![vec![1, 1]])).unwrap());
    assert!(!incidence_check(&two_lines(vec![])).unwrap());
    assert_eq!(
        incidence_check(&pencil_of_conics()),
        Err(Error::IncidenceUnavailable)
    );
    assert_eq!(incidence_check(&conic()), Err(Error::IncidenceUnavailable));
}

#[test]
fn incidence_shape_validation() {
    let bad = CurveConfig::new(
        comps(&[(1, 1), (1, 1)]),
        vec![],
        1,
        Some(Incidence::Matrix(vec![vec![1, 1, 0]])),
    );
    assert!(matches!(bad, Err(Error::InvalidConfig(_))));
    let too_many_rows = CurveConfig::new(
        comps(&[(1, 1), (1, 1)]),
        vec![],
        1,
        Some(Incidence::Matrix(vec![vec![1, 1], vec![1, 1]])),
    );
    assert!(matches!(too_many_rows, Err(Error::InvalidConfig(_))));
}

#[test]
fn node_neutrality() {
    let base = five_lines();
    let mut listed = base.clone();
    listed.nodes -= 1;
    listed.points.push(SingularPoint::node());
    assert_eq!(theorem2_table(&base).unwrap(), theorem2_table(&listed).unwrap());
    assert_eq!(corollary2_row(&base).unwrap(), corollary2_row(&listed).unwrap());
}

#[test]
fn thickened_cuspidal_cubic() {
    let reduced = CurveConfig::new(comps(&[(3, 1)]), vec![cusp()], 0, None).unwrap();
    for m in 2..=3u32 {
        let thick = reduced.thickened(m);
        let table = theorem2_table(&thick).unwrap();
        let rc = reduced.to_reduced_cone(m).unwrap();
        let power = theorem1_power(&theorem1_reduced(&rc), &rc).unwrap();
        let assembled = ConeSpectrumTable::from_spectrum(table.d, 3, table.chi_u, &power);
        assert_eq!(table.first_mismatch(&assembled, &[0, 1, 2]), None, "m={m}");
        assert_eq!(thick.as_thickening(), Some((reduced.clone(), m)));
    }
}
