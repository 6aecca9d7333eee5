use crate::error::{Error, Result};
use crate::local::{validate_branches, SingularPoint};
use crate::spectrum::SpectrumVector;

/// An irreducible component of the curve: degree `d'_k` and multiplicity `a_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GlobalComponent {
    pub degree: u32,
    pub multiplicity: u32,
}

impl GlobalComponent {
    pub fn new(degree: u32, multiplicity: u32) -> Self {
        GlobalComponent {
            degree,
            multiplicity,
        }
    }
}

/// Incidence data `m_{j,k}` between singular points and global components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Incidence {
    /// `(count, value)` pairs: `count` entries equal to `value`.
    Multiset(Vec<(u32, u32)>),
    /// Rows are the listed points followed by tracked nodes; columns are the
    /// expanded components.
    Matrix(Vec<Vec<u32>>),
}

impl Incidence {
    /// `Σ_{j,k} C(m_{j,k}, 2)`.
    pub fn binomial_sum(&self) -> i64 {
        match self {
            Incidence::Multiset(pairs) => pairs
                .iter()
                .map(|&(c, v)| i64::from(c) * super::binom2(i64::from(v)))
                .sum(),
            Incidence::Matrix(rows) => rows
                .iter()
                .flatten()
                .map(|&m| super::binom2(i64::from(m)))
                .sum(),
        }
    }

    /// The multiset of positive entries, sorted by value.
    pub fn to_multiset(&self) -> Vec<(u32, u32)> {
        match self {
            Incidence::Multiset(pairs) => pairs.clone(),
            Incidence::Matrix(rows) => {
                let mut counts = std::collections::BTreeMap::new();
                for &m in rows.iter().flatten().filter(|&&m| m > 0) {
                    *counts.entry(m).or_insert(0u32) += 1;
                }
                counts.into_iter().map(|(v, c)| (c, v)).collect()
            }
        }
    }
}

/// Combinatorial description of a possibly non-reduced plane curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveConfig {
    pub components: Vec<GlobalComponent>,
    /// Singular points of the reduced curve other than aggregated nodes.
    pub points: Vec<SingularPoint>,
    /// Ordinary double points not listed in `points`.
    pub nodes: u32,
    pub incidence: Option<Incidence>,
}

impl CurveConfig {
    pub fn new(
        components: Vec<GlobalComponent>,
        points: Vec<SingularPoint>,
        nodes: u32,
        incidence: Option<Incidence>,
    ) -> Result<Self> {
        let cfg = CurveConfig {
            components,
            points,
            nodes,
            incidence,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Structural checks: nonempty positive components, valid branches,
    /// integral Milnor numbers and a well-shaped incidence matrix.
    pub fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::InvalidConfig("at least one component is required".into()));
        }
        if let Some(c) = self
            .components
            .iter()
            .find(|c| c.degree == 0 || c.multiplicity == 0)
        {
            return Err(Error::InvalidConfig(format!(
                "component degree={} mult={} must be positive",
                c.degree, c.multiplicity
            )));
        }
        for (j, p) in self.points.iter().enumerate() {
            if !validate_branches(p) {
                return Err(Error::InvalidBranches(format!(
                    "point {} with weights {:?}: branch degrees must lie in {{w, w', w w'}}",
                    j + 1,
                    p.weights()
                )));
            }
            p.milnor()?;
        }
        if let Some(Incidence::Matrix(rows)) = &self.incidence {
            let cols = self.components.len();
            if let Some((r, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
                return Err(Error::InvalidConfig(format!(
                    "incidence row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
            if rows.len() < self.points.len() {
                return Err(Error::InvalidConfig(format!(
                    "incidence matrix has {} rows but {} points are listed",
                    rows.len(),
                    self.points.len()
                )));
            }
            if rows.len() - self.points.len() > self.nodes as usize {
                return Err(Error::InvalidConfig(format!(
                    "incidence matrix tracks {} nodes but only {} are declared",
                    rows.len() - self.points.len(),
                    self.nodes
                )));
            }
        }
        Ok(())
    }

    /// `d = Σ_k a_k d'_k`.
    pub fn degree(&self) -> u32 {
        self.components.iter().map(|c| c.degree * c.multiplicity).sum()
    }

    /// `d' = Σ_k d'_k`, the degree of the reduced curve.
    pub fn reduced_degree(&self) -> u32 {
        self.components.iter().map(|c| c.degree).sum()
    }

    /// Number of all singular points of the reduced curve.
    pub fn singular_point_count(&self) -> usize {
        self.points.len() + self.nodes as usize
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| c.multiplicity == 1)
            && self
                .points
                .iter()
                .all(|p| p.branches().iter().all(|b| b.multiplicity == 1))
    }

    pub fn is_ordinary(&self) -> bool {
        self.points.iter().all(SingularPoint::is_ordinary)
    }

    /// `Σ_j μ_j` over every singular point, one per aggregated node.
    pub fn milnor_sum(&self) -> Result<i64> {
        self.points
            .iter()
            .try_fold(i64::from(self.nodes), |acc, p| Ok(acc + p.milnor()?))
    }

    /// The same curve with every component and branch multiplicity set to `m`.
    pub fn thickened(&self, m: u32) -> CurveConfig {
        let mut out = self.clone();
        for c in &mut out.components {
            c.multiplicity = m;
        }
        out.points = self
            .points
            .iter()
            .map(|p| {
                let branches = p
                    .branches()
                    .iter()
                    .map(|b| crate::local::LocalBranch::new(b.weighted_degree, m))
                    .collect();
                SingularPoint::new(p.weights(), branches).expect("valid point stays valid")
            })
            .collect();
        out
    }

    /// When every component and branch carries the same multiplicity `m`,
    /// returns `(reduced curve, m)`.
    pub fn as_thickening(&self) -> Option<(CurveConfig, u32)> {
        let m = self.components.first()?.multiplicity;
        let uniform = self.components.iter().all(|c| c.multiplicity == m)
            && self
                .points
                .iter()
                .all(|p| p.branches().iter().all(|b| b.multiplicity == m));
        uniform.then(|| (self.thickened(1), m))
    }

    /// The reduced curve as input for the reduced-cone formulas, with local
    /// spectra from the lowest weighted-degree parts and `{1:1}` per node.
    pub fn to_reduced_cone(&self, power: u32) -> Result<ReducedConeConfig> {
        let node = SingularPoint::node().local_spectrum()?;
        let mut spectra = self
            .points
            .iter()
            .map(SingularPoint::local_spectrum)
            .collect::<Result<Vec<_>>>()?;
        spectra.extend(std::iter::repeat(node).take(self.nodes as usize));
        ReducedConeConfig::new(2, self.reduced_degree(), spectra, power)
    }
}

/// Input for the reduced-cone formulas: `Z' ⊂ P^n` of degree `d'` with local
/// spectra at its singular points, thickened to `f = f'^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedConeConfig {
    pub ambient_dim: u32,
    pub degree: u32,
    pub local_spectra: Vec<SpectrumVector>,
    pub power: u32,
}

impl ReducedConeConfig {
    pub fn new(
        ambient_dim: u32,
        degree: u32,
        local_spectra: Vec<SpectrumVector>,
        power: u32,
    ) -> Result<Self> {
        if ambient_dim == 0 || degree == 0 || power == 0 {
            return Err(Error::InvalidConfig(
                "ambient dimension, degree and power must be positive".into(),
            ));
        }
        for (j, s) in local_spectra.iter().enumerate() {
            if s.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch(ambient_dim, s.ambient_dim()));
            }
            if !s.is_supported() || !s.is_symmetric() || !s.is_nonnegative() {
                return Err(Error::InvalidConfig(format!(
                    "local spectrum {} ({s}) is not the spectrum of an isolated singularity",
                    j + 1
                )));
            }
        }
        Ok(ReducedConeConfig {
            ambient_dim,
            degree,
            local_spectra,
            power,
        })
    }
}
