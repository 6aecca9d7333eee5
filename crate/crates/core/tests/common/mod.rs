#![allow(dead_code)]

use conespec::{CurveConfig, GlobalComponent, Incidence, LocalBranch, SingularPoint};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ordinary configuration within the bounds components ≤ 6, degrees ≤ 4,
/// multiplicities ≤ 5, points ≤ 6, branches ≤ 8, with branch multiplicities
/// drawn from the component multiplicities and a random incidence multiset.
pub fn random_ordinary(rng: &mut impl Rng) -> CurveConfig {
    let components: Vec<GlobalComponent> = (0..rng.gen_range(1..=6))
        .map(|_| GlobalComponent::new(rng.gen_range(1..=4), rng.gen_range(1..=5)))
        .collect();
    let mults: Vec<u32> = components.iter().map(|c| c.multiplicity).collect();
    let points = (0..rng.gen_range(0..=6))
        .map(|_| {
            let branches: Vec<u32> = (0..rng.gen_range(2..=8))
                .map(|_| *mults.choose(rng).unwrap())
                .collect();
            SingularPoint::ordinary(&branches).unwrap()
        })
        .collect();
    let incidence = (0..rng.gen_range(0..=3))
        .map(|_| (rng.gen_range(1..=6), rng.gen_range(1..=5)))
        .collect();
    CurveConfig::new(
        components,
        points,
        rng.gen_range(0..=5),
        Some(Incidence::Multiset(incidence)),
    )
    .unwrap()
}

const WEIGHTS: [(u32, u32); 8] = [(1, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (3, 5)];

/// A semi-weighted-homogeneous point: at most one branch of each degree `w`
/// and `w'`, any number of degree `w w'`, singular.
pub fn random_swh_point(rng: &mut impl Rng, m: impl Fn(&mut dyn rand::RngCore) -> u32) -> SingularPoint {
    loop {
        let (w, wp) = *WEIGHTS.choose(rng).unwrap();
        let mut branches = Vec::new();
        if (w, wp) == (1, 1) {
            for _ in 0..rng.gen_range(2..=5) {
                branches.push(LocalBranch::new(1, m(rng)));
            }
        } else {
            if rng.gen_bool(0.5) {
                branches.push(LocalBranch::new(w, m(rng)));
            }
            if rng.gen_bool(0.5) {
                branches.push(LocalBranch::new(wp, m(rng)));
            }
            for _ in 0..rng.gen_range(0..=2) {
                branches.push(LocalBranch::new(w * wp, m(rng)));
            }
        }
        let dj: u32 = branches.iter().map(|b| b.weighted_degree).sum();
        if branches.is_empty() || dj <= w.max(wp) {
            continue;
        }
        branches.shuffle(rng);
        return SingularPoint::new((w, wp), branches).unwrap();
    }
}

/// Reduced curve with random semi-weighted-homogeneous points and nodes.
pub fn random_swh_reduced(rng: &mut impl Rng) -> CurveConfig {
    let components = (0..rng.gen_range(1..=4))
        .map(|_| GlobalComponent::new(rng.gen_range(1..=5), 1))
        .collect();
    let points = (0..rng.gen_range(0..=3))
        .map(|_| random_swh_point(rng, |_| 1))
        .collect();
    CurveConfig::new(components, points, rng.gen_range(0..=4), None).unwrap()
}

/// Possibly non-reduced curve with random semi-weighted-homogeneous points.
pub fn random_swh(rng: &mut impl Rng) -> CurveConfig {
    let components: Vec<GlobalComponent> = (0..rng.gen_range(1..=4))
        .map(|_| GlobalComponent::new(rng.gen_range(1..=4), rng.gen_range(1..=4)))
        .collect();
    let mults: Vec<u32> = components.iter().map(|c| c.multiplicity).collect();
    let points = (0..rng.gen_range(0..=3))
        .map(|_| random_swh_point(rng, |r| *mults.choose(r).unwrap()))
        .collect();
    CurveConfig::new(components, points, rng.gen_range(0..=4), None).unwrap()
}

/// Smooth curves of the given degrees and multiplicities meeting
/// transversally: only nodes, `Σ_{k<k'} d_k d_k'` of them.
pub fn generic_nodal_union(parts: &[(u32, u32)]) -> CurveConfig {
    let nodes: u32 = (0..parts.len())
        .flat_map(|k| (k + 1..parts.len()).map(move |kp| (k, kp)))
        .map(|(k, kp)| parts[k].0 * parts[kp].0)
        .sum();
    CurveConfig::new(
        parts.iter().map(|&(d, m)| GlobalComponent::new(d, m)).collect(),
        vec![],
        nodes,
        Some(Incidence::Multiset(vec![(2 * nodes, 1)])),
    )
    .unwrap()
}

/// A generic nodal union with random degrees and multiplicities whose gcd is 1.
pub fn random_generic_nodal_union(rng: &mut impl Rng) -> CurveConfig {
    loop {
        let parts: Vec<(u32, u32)> = (0..rng.gen_range(1..=5))
            .map(|_| (rng.gen_range(1..=4), rng.gen_range(1..=5)))
            .collect();
        let g = parts.iter().fold(0u32, |g, &(_, m)| num_integer::gcd(g, m));
        if g == 1 {
            return generic_nodal_union(&parts);
        }
    }
}
