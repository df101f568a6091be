use std::fmt;

use crate::error::{Error, Result};
use crate::gauss::GaussInt;

/// A finite set of distinct Gaussian integers, stored sorted by `(re, im)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet {
    points: Vec<GaussInt>,
}

impl PointSet {
    /// Sorts the input; repeated points are an error.
    pub fn new(mut points: Vec<GaussInt>) -> Result<Self> {
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPoint(w[0].to_string()));
        }
        Ok(PointSet { points })
    }

    /// Sorts and drops duplicates.
    pub fn from_iter_dedup(points: impl IntoIterator<Item = GaussInt>) -> Self {
        let mut points: Vec<_> = points.into_iter().collect();
        points.sort();
        points.dedup();
        PointSet { points }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        PointSet::new(pairs.iter().map(|&p| GaussInt::from(p)).collect())
    }

    pub fn points(&self) -> &[GaussInt] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GaussInt> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, z: &GaussInt) -> bool {
        self.points.binary_search(z).is_ok()
    }

    pub fn into_points(self) -> Vec<GaussInt> {
        self.points
    }

    /// Image under `z ↦ f(z)`; `f` must be injective on the set.
    pub fn map(&self, f: impl Fn(&GaussInt) -> GaussInt) -> PointSet {
        let mut points: Vec<_> = self.points.iter().map(f).collect();
        points.sort();
        PointSet { points }
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.points.iter().all(|z| other.contains(z))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, z) in self.points.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{z}")?;
        }
        write!(f, "}}")
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a GaussInt;
    type IntoIter = std::slice::Iter<'a, GaussInt>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_distinct() {
        let s = PointSet::from_pairs(&[(2, 0), (0, 1), (0, 0)]).unwrap();
        assert_eq!(s.points(), &[GaussInt::new(0, 0), GaussInt::new(0, 1), GaussInt::new(2, 0)]);
        assert!(PointSet::from_pairs(&[(1, 1), (1, 1)]).is_err());
        assert!(s.contains(&GaussInt::new(0, 1)));
        assert!(!s.contains(&GaussInt::new(1, 0)));
    }
}
