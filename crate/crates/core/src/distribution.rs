//! Almost-equal partitions and residue-class histograms.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::primes::{enumerate_primes, GaussPrime, PrimePower};
use crate::residue::Modulus;

/// The unique almost-equal split of `total` into `parts` summands, largest
/// first: `total mod parts` copies of the ceiling, the rest the floor.
pub fn split_almost_equal(total: u64, parts: usize) -> Result<Vec<u64>> {
    if parts == 0 {
        return Err(Error::Precondition("split into zero parts".into()));
    }
    let k = parts as u64;
    let (q, r) = (total / k, total % k);
    Ok((0..k).map(|j| if j < r { q + 1 } else { q }).collect())
}

/// Max and min differ by at most one.
pub fn is_almost_equal(counts: &[u64]) -> Result<bool> {
    let max = counts.iter().max().ok_or(Error::Empty("is_almost_equal"))?;
    let min = counts.iter().min().ok_or(Error::Empty("is_almost_equal"))?;
    Ok(max - min <= 1)
}

/// `|M(r mod α)|` for every canonical residue `r`, in residue order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueHistogram {
    pub modulus: GaussInt,
    pub residues: Vec<GaussInt>,
    pub counts: Vec<u64>,
}

impl ResidueHistogram {
    pub fn count(&self, r: &GaussInt) -> Option<u64> {
        self.residues.iter().position(|x| x == r).map(|i| self.counts[i])
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_almost_equal(&self) -> bool {
        is_almost_equal(&self.counts).unwrap_or(true)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GaussInt, u64)> {
        self.residues.iter().zip(self.counts.iter().copied())
    }
}

pub fn histogram(set: &PointSet, alpha: &GaussInt) -> Result<ResidueHistogram> {
    let modulus = Modulus::new(alpha)?;
    let size = modulus
        .norm()
        .to_usize()
        .ok_or_else(|| Error::Precondition(format!("modulus {alpha} too large for a dense histogram")))?;
    let mut counts = vec![0u64; size];
    for z in set {
        let idx = modulus.index_usize(z).expect("index below norm");
        counts[idx] += 1;
    }
    Ok(ResidueHistogram { modulus: alpha.clone(), residues: modulus.residues(), counts })
}

/// Counts of the occupied classes only.
pub(crate) fn occupied_counts(set: &PointSet, modulus: &Modulus) -> HashMap<BigInt, u64> {
    let mut counts = HashMap::new();
    for z in set {
        *counts.entry(modulus.index(z)).or_insert(0) += 1;
    }
    counts
}

/// Almost-equality of the class counts with empty classes included,
/// without materialising the full residue system.
pub(crate) fn almost_uniform_mod(set: &PointSet, modulus: &Modulus) -> bool {
    let counts = occupied_counts(set, modulus);
    let max = counts.values().copied().max().unwrap_or(0);
    let min =
        if BigInt::from(counts.len()) < *modulus.norm() { 0 } else { counts.values().copied().min().unwrap_or(0) };
    max - min <= 1
}

pub fn is_almost_uniform(set: &PointSet, p: &GaussPrime, k: u32) -> bool {
    let modulus = Modulus::new(&p.value().pow(k)).expect("prime powers are nonzero");
    almost_uniform_mod(set, &modulus)
}

/// Upper bound on the norm of any pairwise difference, from the bounding box.
pub(crate) fn difference_norm_bound(set: &PointSet) -> Option<BigInt> {
    let re_min = set.iter().map(|z| &z.re).min()?;
    let re_max = set.iter().map(|z| &z.re).max()?;
    let im_min = set.iter().map(|z| &z.im).min()?;
    let im_max = set.iter().map(|z| &z.im).max()?;
    let dx = re_max - re_min;
    let dy = im_max - im_min;
    Some(&dx * &dx + &dy * &dy)
}

/// The exponents `1..=K` such that two points of `set` are congruent
/// modulo `p^k`.
pub(crate) fn colliding_levels(set: &PointSet, p: &GaussPrime) -> u32 {
    let mut k = 0;
    loop {
        let modulus = Modulus::new(&p.value().pow(k + 1)).expect("nonzero");
        let mut seen = std::collections::HashSet::new();
        let collides = set.iter().any(|z| !seen.insert(modulus.index(z)));
        if !collides {
            return k;
        }
        k += 1;
    }
}

/// Every prime power dividing some pairwise difference of `set`, sorted.
///
/// For any prime power not listed the points are pairwise incongruent, so
/// almost-uniformity holds there trivially.
pub fn relevant_prime_powers(set: &PointSet) -> Vec<PrimePower> {
    if set.len() < 2 {
        return Vec::new();
    }
    let bound = difference_norm_bound(set).expect("nonempty");
    let limit = bound.to_u64().expect("difference norms fit in u64 at desk scale");
    let primes = enumerate_primes(limit);
    let levels: Vec<(GaussPrime, u32)> = primes
        .into_par_iter()
        .filter_map(|p| {
            let k = colliding_levels(set, &p);
            (k > 0).then_some((p, k))
        })
        .collect();
    levels.into_iter().flat_map(|(p, k)| (1..=k).map(move |e| p.pow(e))).collect()
}
