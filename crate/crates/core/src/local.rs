//! Local invariants of semi-weighted-homogeneous singular points.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::spectrum::SpectrumVector;

/// Weights `(w_1, …, w_n)` with gcd 1 and a weighted degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<u32>,
    degree: u32,
}

impl WeightSystem {
    pub fn new(weights: Vec<u32>, degree: u32) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights".into()));
        }
        if degree == 0 || weights.contains(&0) {
            return Err(Error::InvalidWeights(format!(
                "weights {weights:?} and degree {degree} must be positive"
            )));
        }
        let g = weights.iter().fold(0u32, |g, &w| g.gcd(&w));
        if g != 1 {
            return Err(Error::InvalidWeights(format!(
                "gcd of weights {weights:?} is {g}, not 1"
            )));
        }
        Ok(WeightSystem { weights, degree })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn require_isolated(&self) -> Result<()> {
        match self.weights.iter().find(|&&w| w >= self.degree) {
            Some(&w) => Err(Error::NotIsolated {
                degree: self.degree,
                weight: w,
            }),
            None => Ok(()),
        }
    }
}

/// Spectrum of a weighted-homogeneous isolated singularity,
/// `∏_i (t - t^{w_i/d}) / (t^{w_i/d} - 1)`.
///
/// Each factor is expanded in `s = t^{1/d}` as the series
/// `Σ_{k≥1} s^{k w} - Σ_{k≥0} s^{d + k w}`, which is the finite sum
/// `s^w + s^{2w} + … + s^{d-w}` whenever `w | d`. The product is a polynomial
/// of degree below `n d` for every weight system that carries an isolated
/// weighted-homogeneous germ; that is checked by expanding twice as far and
/// requiring the tail to vanish.
pub fn wh_spectrum(ws: &WeightSystem) -> Result<SpectrumVector> {
    ws.require_isolated()?;
    let d = ws.degree as usize;
    let n = ws.weights.len();
    let horizon = 2 * n * d;

    let mut acc = vec![0i64; horizon + 1];
    acc[0] = 1;
    for &w in &ws.weights {
        let w = w as usize;
        let mut factor = vec![0i64; horizon + 1];
        for k in (w..=horizon).step_by(w) {
            factor[k] += 1;
        }
        for k in (d..=horizon).step_by(w) {
            factor[k] -= 1;
        }
        let mut next = vec![0i64; horizon + 1];
        for (i, &a) in acc.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in factor[..=horizon - i].iter().enumerate() {
                if b != 0 {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }

    let not_wh = || Error::NotWeightedHomogeneous {
        weights: ws.weights.clone(),
        degree: ws.degree,
    };
    if acc[n * d..].iter().any(|&c| c != 0) || acc.iter().any(|&c| c < 0) {
        return Err(not_wh());
    }
    let spectrum = SpectrumVector::from_pairs(
        n as u32,
        acc.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (Fraction::new(k as i64, d as i64), c)),
    );
    Ok(spectrum)
}

/// Milnor number `∏_i (d - w_i) / w_i`, required to be an integer.
pub fn milnor_wh(ws: &WeightSystem) -> Result<i64> {
    ws.require_isolated()?;
    let d = i64::from(ws.degree);
    let mu = ws
        .weights
        .iter()
        .fold(Fraction::one(), |acc, &w| {
            acc * Fraction::new(d - i64::from(w), i64::from(w))
        });
    mu.to_i64().ok_or_else(|| Error::NonIntegralMilnor(mu.to_string()))
}

/// `#{(m_1, m_2) ∈ Z_{>0}^2 : w m_1 + w' m_2 ≤ bound}`.
pub fn lattice_count(w: u32, w_prime: u32, bound: i64) -> i64 {
    let (w, w_prime) = (i64::from(w), i64::from(w_prime));
    if bound < w + w_prime {
        return 0;
    }
    // for each m_1, m_2 ranges over [1, (bound - w m_1) / w']
    (1..)
        .map(|m1| bound - w * m1)
        .take_while(|&rest| rest >= w_prime)
        .map(|rest| rest / w_prime)
        .sum()
}

/// Multiplicity-weighted count of spectral numbers in `[β - 1, β)`.
pub fn window_count(spec: &SpectrumVector, beta: &Fraction) -> i64 {
    spec.count_in(&(beta - 1), beta)
}

/// A local irreducible component at a singular point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalBranch {
    /// Weighted degree `d_{j,l}` of the branch's lowest-degree part.
    pub weighted_degree: u32,
    /// Multiplicity `a_{j,l}` of the curve along the branch.
    pub multiplicity: u32,
}

impl LocalBranch {
    pub fn new(weighted_degree: u32, multiplicity: u32) -> Self {
        LocalBranch {
            weighted_degree,
            multiplicity,
        }
    }
}

/// A semi-weighted-homogeneous singular point of the reduced curve with
/// coprime weights `(w, w')` and its local branches.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularPoint {
    weights: (u32, u32),
    branches: Vec<LocalBranch>,
}

impl SingularPoint {
    pub fn new(weights: (u32, u32), branches: Vec<LocalBranch>) -> Result<Self> {
        let (w, wp) = weights;
        if w == 0 || wp == 0 {
            return Err(Error::InvalidWeights(format!("weights ({w},{wp}) must be positive")));
        }
        if w.gcd(&wp) != 1 {
            return Err(Error::InvalidWeights(format!("weights ({w},{wp}) are not coprime")));
        }
        if branches.is_empty() {
            return Err(Error::InvalidBranches("a singular point needs at least one branch".into()));
        }
        if let Some(b) = branches
            .iter()
            .find(|b| b.weighted_degree == 0 || b.multiplicity == 0)
        {
            return Err(Error::InvalidBranches(format!(
                "branch {}:{} has a zero entry",
                b.weighted_degree, b.multiplicity
            )));
        }
        Ok(SingularPoint { weights, branches })
    }

    /// An ordinary point whose branches are lines with the given multiplicities.
    pub fn ordinary(multiplicities: &[u32]) -> Result<Self> {
        SingularPoint::new(
            (1, 1),
            multiplicities.iter().map(|&a| LocalBranch::new(1, a)).collect(),
        )
    }

    /// An ordinary double point of the reduced curve.
    pub fn node() -> Self {
        SingularPoint {
            weights: (1, 1),
            branches: vec![LocalBranch::new(1, 1); 2],
        }
    }

    pub fn weights(&self) -> (u32, u32) {
        self.weights
    }

    pub fn branches(&self) -> &[LocalBranch] {
        &self.branches
    }

    /// `d_j = Σ_l d_{j,l}`.
    pub fn weighted_degree(&self) -> u32 {
        self.branches.iter().map(|b| b.weighted_degree).sum()
    }

    pub fn is_ordinary(&self) -> bool {
        self.weights == (1, 1)
    }

    /// Number of local branches; the reduced multiplicity at an ordinary point.
    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// `(d_j - w)(d_j - w') / (w w')`.
    pub fn milnor(&self) -> Result<i64> {
        let (w, wp) = (i64::from(self.weights.0), i64::from(self.weights.1));
        let dj = i64::from(self.weighted_degree());
        let mu = Fraction::new((dj - w) * (dj - wp), w * wp);
        match mu.to_i64() {
            Some(m) if m >= 0 => Ok(m),
            _ => Err(Error::NonIntegralMilnor(format!(
                "{mu} at weights ({w},{wp}) with weighted degree {dj}"
            ))),
        }
    }

    pub fn weight_system(&self) -> Result<WeightSystem> {
        WeightSystem::new(vec![self.weights.0, self.weights.1], self.weighted_degree())
    }

    /// Spectrum of the reduced germ, through its lowest weighted-degree part.
    pub fn local_spectrum(&self) -> Result<SpectrumVector> {
        wh_spectrum(&self.weight_system()?)
    }
}

/// Every branch degree lies in `{w, w', w w'}`; at an ordinary point every
/// branch has degree 1.
pub fn validate_branches(p: &SingularPoint) -> bool {
    let (w, wp) = p.weights;
    p.branches.iter().all(|b| {
        let d = b.weighted_degree;
        if p.is_ordinary() {
            d == 1
        } else {
            d == w || d == wp || d == w * wp
        }
    })
}

/// Weighted degrees `d ≤ max_degree` of reduced weighted-homogeneous plane
/// germs with weights `(w, w')` that are singular: the sums
/// `α w + β w' + γ w w'` with `α, β ∈ {0, 1}`, `γ ≥ 0`, exceeding both weights.
pub fn plane_weighted_degrees(w: u32, w_prime: u32, max_degree: u32) -> Vec<u32> {
    let ww = w * w_prime;
    let mut out: Vec<u32> = (0..=max_degree / ww.max(1))
        .flat_map(|g| {
            [0, w]
                .into_iter()
                .flat_map(move |a| [0, w_prime].into_iter().map(move |b| a + b + g * ww))
        })
        .filter(|&d| d <= max_degree && d > w.max(w_prime))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
