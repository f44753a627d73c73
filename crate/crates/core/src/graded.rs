//! Finite graded dimension vectors, the common output of every homology
//! computation in the crate.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::series::LaurentPolynomial;

/// Map from degree to a positive dimension. Zero entries are never stored,
/// so two values compare equal exactly when they describe the same graded
/// vector space.
///
/// Serializes as a JSON object `{"degree": dim}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDims(BTreeMap<i64, usize>);

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(degree, dim)` pairs, summing repeated degrees.
    pub fn from_pairs<I: IntoIterator<Item = (i64, usize)>>(pairs: I) -> Self {
        let mut out = Self::new();
        for (d, n) in pairs {
            out.add(d, n);
        }
        out
    }

    /// One copy of the rationals in each listed degree.
    pub fn ones<I: IntoIterator<Item = i64>>(degrees: I) -> Self {
        Self::from_pairs(degrees.into_iter().map(|d| (d, 1)))
    }

    pub fn add(&mut self, degree: i64, dim: usize) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.keys().copied()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, n)| if d.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Returns `Some(degree)` if everything lives in one degree.
    pub fn concentrated_degree(&self) -> Option<i64> {
        if self.0.len() == 1 {
            self.min_degree()
        } else {
            None
        }
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self(self.0.iter().map(|(&d, &n)| (d + by, n)).collect())
    }

    /// Reindexes `d ↦ top - d`.
    pub fn mirrored(&self, top: i64) -> Self {
        Self(self.0.iter().map(|(&d, &n)| (top - d, n)).collect())
    }

    pub fn to_laurent(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.iter().map(|(d, n)| (d, n as i64)))
    }
}

impl FromIterator<(i64, usize)> for GradedDims {
    fn from_iter<T: IntoIterator<Item = (i64, usize)>>(iter: T) -> Self {
        Self::from_pairs(iter)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, n)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{n}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_dropped() {
        let g = GradedDims::from_pairs([(0, 1), (3, 0), (2, 2)]);
        assert_eq!(g.iter().collect::<Vec<_>>(), vec![(0, 1), (2, 2)]);
        assert_eq!(g.euler_characteristic(), 3);
    }

    #[test]
    fn serializes_as_degree_map() {
        let g = GradedDims::ones([2, 5]);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"2":1,"5":1}"#);
        let back: GradedDims = serde_json::from_str(r#"{"2":1,"5":1}"#).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn mirror_and_shift() {
        let g = GradedDims::ones([2, 5]);
        assert_eq!(g.mirrored(6), GradedDims::ones([1, 4]));
        assert_eq!(g.shifted(-2), GradedDims::ones([0, 3]));
        assert_eq!(g.concentrated_degree(), None);
        assert_eq!(GradedDims::ones([7]).concentrated_degree(), Some(7));
    }
}
