//! Universality certificates.
//!
//! A set `C` of `n + 1` points is `n`-universal exactly when it is almost
//! uniformly distributed modulo every prime power; only the prime powers
//! dividing a pairwise difference can fail. Larger sets are certified by
//! exhibiting, for every relevant prime, an `(n + 1)`-subset balanced
//! modulo all of its powers. That condition is only sufficient.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::distribution::{colliding_levels, histogram, is_almost_uniform, relevant_prime_powers, ResidueHistogram};
use crate::error::{Error, Result};
use crate::extract::extract_balanced_subset;
use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::poly::{lagrange_basis, GaussPoly, DEFAULT_ORACLE_BUDGET};
use crate::primes::{valuation, GaussPrime, PrimePower};
use crate::rational::GaussRat;
use crate::residue::Modulus;

/// `Π_{i<j} (x_i - x_j)` up to a unit, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Volume {
    pub value: GaussInt,
    pub norm: BigInt,
}

pub fn volume(set: &PointSet) -> Volume {
    let pts = set.points();
    let mut acc = GaussInt::one();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            acc = &acc * &(a - b);
        }
    }
    let value = acc.canonical_associate().expect("points are distinct");
    let norm = value.norm();
    Volume { value, norm }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Universal,
    NotUniversal,
    CertifiedUniversalSufficient,
    Inconclusive,
}

impl Verdict {
    /// Universal or certified by the sufficient condition.
    pub fn is_positive(self) -> bool {
        matches!(self, Verdict::Universal | Verdict::CertifiedUniversalSufficient)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub prime_power: PrimePower,
    pub histogram: ResidueHistogram,
}

/// A Lagrange basis polynomial that is integral on the set but not at
/// `point`, where its `prime`-adic valuation is `valuation_deficit < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub polynomial: GaussPoly,
    pub node: usize,
    pub point: GaussInt,
    pub value: GaussRat,
    pub prime: GaussPrime,
    pub valuation_deficit: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityCertificate {
    pub verdict: Verdict,
    pub degree: usize,
    pub checked: Vec<PrimePower>,
    pub failure: Option<Failure>,
    pub witness: Option<Witness>,
}

/// Decides `n`-universality of an `(n + 1)`-point set.
pub fn check_universal_exact(set: &PointSet) -> Result<UniversalityCertificate> {
    if set.is_empty() {
        return Err(Error::Empty("point set"));
    }
    let degree = set.len() - 1;
    let checked = relevant_prime_powers(set);
    let failing: Vec<&PrimePower> =
        checked.par_iter().filter(|pp| !is_almost_uniform(set, &pp.prime, pp.exponent)).collect();
    let Some(first) = failing.first() else {
        return Ok(UniversalityCertificate {
            verdict: Verdict::Universal,
            degree,
            checked,
            failure: None,
            witness: None,
        });
    };
    let failure = Failure { prime_power: (*first).clone(), histogram: histogram(set, &first.modulus())? };
    let mut witness = None;
    for pp in &failing {
        witness = find_witness(set, &pp.prime, pp.exponent)?;
        if witness.is_some() {
            break;
        }
    }
    Ok(UniversalityCertificate { verdict: Verdict::NotUniversal, degree, checked, failure: Some(failure), witness })
}

/// Searches for a basis polynomial `Q_m` and a point `x` with
/// `v_p(Q_m(x)) < 0`.
///
/// Candidates `x` are the residues modulo `p^(K+1)`, where `K` is the least
/// level at which the points are pairwise incongruent; nodes are scanned
/// from the last point down. Returns `None` when the bounded search finds
/// nothing or the residue system exceeds the default oracle budget.
pub fn find_witness(set: &PointSet, p: &GaussPrime, k: u32) -> Result<Option<Witness>> {
    if is_almost_uniform(set, p, k) {
        return Err(Error::Precondition(format!("set is almost uniform modulo {}", p.pow(k))));
    }
    let top = colliding_levels(set, p) + 2;
    let modulus = Modulus::new(&p.value().pow(top))?;
    let Some(count) = modulus.norm().to_u64().filter(|&c| c <= DEFAULT_ORACLE_BUDGET) else {
        return Ok(None);
    };
    let pts = set.points();
    let v = |z: GaussInt| valuation(&z, p).map(i64::from);
    let mut denominators = Vec::with_capacity(pts.len());
    for (m, cm) in pts.iter().enumerate() {
        let mut total = 0;
        for (i, ci) in pts.iter().enumerate() {
            if i != m {
                total += v(cm - ci)?;
            }
        }
        denominators.push(total);
    }
    for m in (0..pts.len()).rev() {
        for idx in 0..count {
            let x = modulus.residue_at(&BigInt::from(idx));
            if set.contains(&x) {
                continue;
            }
            let mut numerator = 0;
            for (i, ci) in pts.iter().enumerate() {
                if i != m {
                    numerator += v(&x - ci)?;
                }
            }
            let deficit = numerator - denominators[m];
            if deficit < 0 {
                let polynomial = lagrange_basis(set, m)?;
                let value = polynomial.evaluate(&x);
                return Ok(Some(Witness {
                    polynomial,
                    node: m,
                    point: x,
                    value,
                    prime: p.clone(),
                    valuation_deficit: deficit,
                }));
            }
        }
    }
    Ok(None)
}

/// For each prime dividing a pairwise difference, a balanced
/// `(degree + 1)`-subset if one exists. Sorted by prime.
pub fn balanced_subsets(set: &PointSet, degree: usize) -> Vec<(GaussPrime, Option<PointSet>)> {
    let mut primes: Vec<GaussPrime> = relevant_prime_powers(set).into_iter().map(|pp| pp.prime).collect();
    primes.dedup();
    primes
        .into_par_iter()
        .map(|p| {
            let subset = extract_balanced_subset(set, degree + 1, &p);
            (p, subset)
        })
        .collect()
}

/// Sufficient-condition certifier for sets with at least `degree + 1`
/// points. Never reports `NotUniversal` for larger sets.
pub fn check_universal_superset(set: &PointSet, degree: usize) -> Result<UniversalityCertificate> {
    if set.len() < degree + 1 {
        return Err(Error::Precondition(format!("{} points cannot be {degree}-universal", set.len())));
    }
    if set.len() == degree + 1 {
        return check_universal_exact(set);
    }
    let checked = relevant_prime_powers(set);
    let mut primes: Vec<GaussPrime> = checked.iter().map(|pp| pp.prime.clone()).collect();
    primes.dedup();
    let all_extracted = primes.par_iter().all(|p| extract_balanced_subset(set, degree + 1, p).is_some());
    let verdict = if all_extracted { Verdict::CertifiedUniversalSufficient } else { Verdict::Inconclusive };
    Ok(UniversalityCertificate { verdict, degree, checked, failure: None, witness: None })
}

/// Exhaustive cross-check: every Lagrange basis polynomial of the
/// `(degree + 1)`-point set is integer-valued.
pub fn oracle_check_universal(set: &PointSet, degree: usize) -> Result<bool> {
    oracle_check_universal_with_budget(set, degree, DEFAULT_ORACLE_BUDGET)
}

pub fn oracle_check_universal_with_budget(set: &PointSet, degree: usize, budget: u64) -> Result<bool> {
    if set.len() != degree + 1 {
        return Err(Error::Precondition(format!("oracle needs exactly {} points", degree + 1)));
    }
    for m in 0..set.len() {
        if !lagrange_basis(set, m)?.is_integer_valued_with_budget(budget)?.holds() {
            return Ok(false);
        }
    }
    Ok(true)
}
