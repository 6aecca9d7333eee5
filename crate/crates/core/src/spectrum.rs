//! Finite-support spectrum vectors `α ↦ n_α`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// A finite map from rational exponents to nonzero integer multiplicities,
/// tagged with the number of variables of the ambient space.
///
/// Zero multiplicities are never stored, so structural equality is equality
/// of spectra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpectrumVector {
    entries: BTreeMap<Fraction, i64>,
    ambient_dim: u32,
}

impl SpectrumVector {
    pub fn empty(ambient_dim: u32) -> Self {
        SpectrumVector {
            entries: BTreeMap::new(),
            ambient_dim,
        }
    }

    /// Builds a vector from `(exponent, multiplicity)` pairs; repeated
    /// exponents accumulate.
    pub fn from_pairs<I>(ambient_dim: u32, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Fraction, i64)>,
    {
        let mut v = SpectrumVector::empty(ambient_dim);
        for (alpha, n) in pairs {
            v.add_at(alpha, n);
        }
        v
    }

    /// Adds `n` to the multiplicity at `alpha`, keeping canonical form.
    pub fn add_at(&mut self, alpha: Fraction, n: i64) {
        if n == 0 {
            return;
        }
        let updated = self.multiplicity(&alpha) + n;
        if updated == 0 {
            self.entries.remove(&alpha);
        } else {
            self.entries.insert(alpha, updated);
        }
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn multiplicity(&self, alpha: &Fraction) -> i64 {
        self.entries.get(alpha).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Fraction, i64)> + '_ {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn entries(&self) -> &BTreeMap<Fraction, i64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ_α n_α; the Milnor number for isolated-singularity spectra.
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn min_exponent(&self) -> Option<&Fraction> {
        self.entries.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&Fraction> {
        self.entries.keys().next_back()
    }

    /// Pointwise sum.
    pub fn add(&self, other: &SpectrumVector) -> Result<SpectrumVector> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(self.ambient_dim, other.ambient_dim));
        }
        let mut out = self.clone();
        for (alpha, n) in other.iter() {
            out.add_at(alpha.clone(), n);
        }
        Ok(out)
    }

    /// Thom–Sebastiani product: the exponent convolution of two spectra of
    /// isolated singularities in disjoint sets of variables.
    pub fn product(&self, other: &SpectrumVector) -> Result<SpectrumVector> {
        self.require_nonnegative()?;
        other.require_nonnegative()?;
        let mut out = SpectrumVector::empty(self.ambient_dim + other.ambient_dim);
        for (a, na) in self.iter() {
            for (b, nb) in other.iter() {
                out.add_at(a + b, na * nb);
            }
        }
        Ok(out)
    }

    /// The dual spectrum `α ↦ n_{d_X - α}`.
    pub fn dual(&self) -> SpectrumVector {
        let dim = i64::from(self.ambient_dim);
        SpectrumVector {
            entries: self
                .entries
                .iter()
                .map(|(alpha, &n)| (Fraction::from_integer(dim) - alpha.clone(), n))
                .collect(),
            ambient_dim: self.ambient_dim,
        }
    }

    /// Every exponent lies strictly inside `(0, d_X)`.
    pub fn is_supported(&self) -> bool {
        let dim = i64::from(self.ambient_dim);
        self.entries
            .keys()
            .all(|alpha| alpha.is_positive() && *alpha < dim)
    }

    /// Invariance under [`SpectrumVector::dual`].
    pub fn is_symmetric(&self) -> bool {
        self.dual() == *self
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&n| n >= 0)
    }

    fn require_nonnegative(&self) -> Result<()> {
        match self.entries.iter().find(|(_, &n)| n < 0) {
            Some((alpha, &n)) => Err(Error::NegativeMultiplicity {
                exponent: alpha.to_string(),
                multiplicity: n,
            }),
            None => Ok(()),
        }
    }

    /// Sum of multiplicities over exponents in the half-open range `[lo, hi)`.
    pub fn count_in(&self, lo: &Fraction, hi: &Fraction) -> i64 {
        if lo >= hi {
            return 0;
        }
        self.entries.range(lo.clone()..hi.clone()).map(|(_, &n)| n).sum()
    }
}

impl fmt::Display for SpectrumVector {
    /// `p/q:m` entries in increasing exponent order, separated by `", "`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (alpha, n)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{alpha}:{n}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SpectrumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpectrumVector[d_X={}]{{{}}}", self.ambient_dim, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed spectrum entry {0:?}")]
pub struct ParseSpectrumError(pub String);

impl SpectrumVector {
    /// Parses the textual rendering (`"5/6:1, 7/6:1"`, commas and/or spaces as
    /// separators).
    pub fn parse(ambient_dim: u32, text: &str) -> std::result::Result<Self, ParseSpectrumError> {
        let mut v = SpectrumVector::empty(ambient_dim);
        for tok in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let (alpha, n) = tok
                .split_once(':')
                .ok_or_else(|| ParseSpectrumError(tok.to_string()))?;
            let alpha = Fraction::from_str(alpha).map_err(|_| ParseSpectrumError(tok.to_string()))?;
            let n: i64 = n.parse().map_err(|_| ParseSpectrumError(tok.to_string()))?;
            v.add_at(alpha, n);
        }
        Ok(v)
    }
}
