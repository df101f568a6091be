//! Universal disk sets built from per-prime rotated squares.
//!
//! For a prime `p` and a disk of radius `R`, the lattice points `z` with
//! `z / p^k` in the half-open square `[-1/2 - A, 1/2 + A)²` hit every
//! residue modulo `p^k` exactly `(2A + 1)²` times. With the level chosen so
//! that `norm(p)^k <= 2R² < norm(p)^(k+1)` and `A` as large as the two
//! constraints below allow, the square lies inside the disk and its points
//! are pairwise incongruent modulo `p^(k+1)`, so it is balanced modulo
//! every power of `p`. All tests are integer inequalities.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::primes::{enumerate_primes, GaussPrime};
use crate::universality::{check_universal_superset, UniversalityCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSetSpec {
    pub prime: GaussPrime,
    pub level: u32,
    pub half_width: u64,
    pub radius_norm: u64,
}

impl SquareSetSpec {
    fn side(&self) -> BigInt {
        BigInt::from(2 * self.half_width + 1)
    }

    fn level_norm(&self) -> BigInt {
        num_traits::pow(self.prime.norm().clone(), self.level as usize)
    }

    /// Corners of the square lie in the disk: `(2A+1)²·norm(p)^k <= 2R²`.
    pub fn fits_disk(&self) -> bool {
        let side = self.side();
        &side * &side * self.level_norm() <= BigInt::from(2 * self.radius_norm)
    }

    /// Diagonal shorter than `|p^(k+1)|`: `2(2A+1)² <= norm(p)`.
    pub fn separates_next_level(&self) -> bool {
        let side = self.side();
        &side * &side * 2u32 <= *self.prime.norm()
    }

    pub fn is_valid(&self) -> bool {
        self.fits_disk() && self.separates_next_level()
    }

    /// `(2A+1)²·norm(p)^k`.
    pub fn cardinality(&self) -> BigInt {
        let side = self.side();
        &side * &side * self.level_norm()
    }
}

/// Level `k` with `norm(p)^k <= 2R² < norm(p)^(k+1)` and the largest
/// admissible half-width `A`.
pub fn choose_level_and_a(p: &GaussPrime, radius_norm: u64) -> Result<SquareSetSpec> {
    if radius_norm == 0 {
        return Err(Error::Precondition("radius norm must be positive".into()));
    }
    let twice = BigInt::from(2 * radius_norm);
    let mut level = 0u32;
    let mut power = p.norm().clone();
    while power <= twice {
        level += 1;
        power *= p.norm();
    }
    let mut spec = SquareSetSpec { prime: p.clone(), level, half_width: 0, radius_norm };
    debug_assert!(spec.is_valid());
    loop {
        let next = SquareSetSpec { half_width: spec.half_width + 1, ..spec.clone() };
        if !next.is_valid() {
            return Ok(spec);
        }
        spec = next;
    }
}

/// All `z` with both coordinates of `z / p^k` in `[-1/2 - A, 1/2 + A)`,
/// decided on `2·z·conj(p^k)` against `(2A+1)·norm(p)^k`.
pub fn square_set(spec: &SquareSetSpec) -> PointSet {
    let pi = spec.prime.value().pow(spec.level);
    let conj = pi.conj();
    let level_norm = spec.level_norm();
    let bound = spec.side() * &level_norm;
    // |z| <= (A + 1/2)·√2·|p^k|
    let reach_sq = spec.side() * spec.side() * &level_norm / 2u32;
    let reach = reach_sq.sqrt() + 1u32;
    let reach = reach.to_i64().expect("desk-scale square");
    let inside = |c: &BigInt| {
        let twice = c * 2u32;
        twice >= -&bound && twice < bound
    };
    let mut points = Vec::new();
    for re in -reach..=reach {
        for im in -reach..=reach {
            let z = GaussInt::new(re, im);
            let w = &z * &conj;
            if inside(&w.re) && inside(&w.im) {
                points.push(z);
            }
        }
    }
    PointSet::new(points).expect("distinct lattice points")
}

/// All Gaussian integers of norm at most `radius_norm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskSet {
    pub radius_norm: u64,
    pub points: PointSet,
}

pub fn disk(radius_norm: u64) -> DiskSet {
    let r = (radius_norm as f64).sqrt() as i64 + 1;
    let mut points = Vec::new();
    for re in -r..=r {
        for im in -r..=r {
            if ((re * re + im * im) as u64) <= radius_norm {
                points.push(GaussInt::new(re, im));
            }
        }
    }
    DiskSet { radius_norm, points: PointSet::new(points).expect("distinct lattice points") }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSquare {
    pub spec: SquareSetSpec,
    pub square_cardinality: BigInt,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskConstruction {
    pub degree: usize,
    pub disk: DiskSet,
    pub certificate: UniversalityCertificate,
    pub per_prime: Vec<PrimeSquare>,
}

impl DiskConstruction {
    pub fn all_squares_contained(&self) -> bool {
        self.per_prime.iter().all(|sq| sq.contained)
    }
}

/// Radius norm `9n + 1` used for degree `n`: the smallest `s` whose square
/// sets, of at least `⌈s/9⌉` points each, are guaranteed `n + 1` points.
pub fn construction_radius_norm(degree: usize) -> u64 {
    9 * degree as u64 + 1
}

/// The disk of norm `9n + 1`, its certificate, and the square set of every
/// prime of norm up to `8(9n + 1)` checked against the disk.
pub fn universal_disk_set(degree: usize) -> Result<DiskConstruction> {
    let s = construction_radius_norm(degree);
    let disk = disk(s);
    let certificate = check_universal_superset(&disk.points, degree)?;
    let per_prime = enumerate_primes(8 * s)
        .iter()
        .map(|p| {
            let spec = choose_level_and_a(p, s)?;
            let square = square_set(&spec);
            let contained = square.is_subset_of(&disk.points);
            Ok(PrimeSquare { square_cardinality: BigInt::from(square.len()), spec, contained })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DiskConstruction { degree, disk, certificate, per_prime })
}

fn is_sum_of_two_squares(n: u64) -> bool {
    let mut a = 0u64;
    while a * a <= n {
        let rest = n - a * a;
        let b = (rest as f64).sqrt() as u64;
        if (b.saturating_sub(1)..=b + 1).any(|c| c * c == rest) {
            return true;
        }
        a += 1;
    }
    false
}

/// Smallest realized radius norm whose disk is certified `n`-universal
/// (by the sufficient condition, or exactly when it has `n + 1` points). An upper bound on the true threshold.
pub fn minimal_disk_radius(degree: usize) -> Result<u64> {
    if degree == 0 {
        return Ok(0);
    }
    let ceiling = construction_radius_norm(degree);
    for s in 0..=ceiling {
        if !is_sum_of_two_squares(s) {
            continue;
        }
        let d = disk(s);
        if d.points.len() < degree + 1 {
            continue;
        }
        if check_universal_superset(&d.points, degree)?.verdict.is_positive() {
            return Ok(s);
        }
    }
    Err(Error::Precondition(format!("no certified disk up to norm {ceiling}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::{histogram, is_almost_uniform};
    use crate::residue::Modulus;
    use crate::universality::Verdict;

    fn prime(re: i64, im: i64) -> GaussPrime {
        GaussPrime::new(GaussInt::new(re, im)).unwrap()
    }

    #[test]
    fn level_and_half_width_examples() {
        let s = choose_level_and_a(&prime(1, 1), 100).unwrap();
        assert_eq!((s.level, s.half_width), (7, 0));
        let s = choose_level_and_a(&prime(2, 1), 16).unwrap();
        assert_eq!((s.level, s.half_width), (2, 0));
        let s = choose_level_and_a(&prime(3, 0), 400).unwrap();
        assert_eq!((s.level, s.half_width), (3, 0));
        assert!(choose_level_and_a(&prime(3, 0), 0).is_err());
        // large prime, small disk: level 0 and a wider square
        let s = choose_level_and_a(&prime(7, 2), 18).unwrap();
        assert_eq!((s.level, s.half_width), (0, 2));
    }

    #[test]
    fn square_set_examples() {
        let spec = SquareSetSpec { prime: prime(1, 1), level: 1, half_width: 0, radius_norm: 1 };
        assert_eq!(square_set(&spec), PointSet::from_pairs(&[(0, 0), (0, -1)]).unwrap());

        let spec = SquareSetSpec { prime: prime(2, 1), level: 1, half_width: 0, radius_norm: 3 };
        let sq = square_set(&spec);
        assert_eq!(sq.len(), 5);
        assert_eq!(histogram(&sq, &GaussInt::new(2, 1)).unwrap().counts, vec![1; 5]);

        for p in [prime(1, 1), prime(3, 0), prime(4, 1)] {
            let spec = SquareSetSpec { prime: p, level: 0, half_width: 0, radius_norm: 1 };
            assert_eq!(square_set(&spec), PointSet::from_pairs(&[(0, 0)]).unwrap());
        }
    }

    #[test]
    fn square_sets_are_balanced() {
        for p in enumerate_primes(30) {
            for s in [1u64, 7, 50, 300] {
                let spec = choose_level_and_a(&p, s).unwrap();
                let sq = square_set(&spec);
                assert_eq!(BigInt::from(sq.len()), spec.cardinality());
                let m = Modulus::new(&p.value().pow(spec.level + 1)).unwrap();
                let mut seen = std::collections::HashSet::new();
                assert!(sq.iter().all(|z| seen.insert(m.index(z))));
                for j in 1..=spec.level + 1 {
                    assert!(is_almost_uniform(&sq, &p, j));
                }
                assert!(sq.iter().all(|z| z.norm() <= BigInt::from(s)));
            }
        }
    }

    #[test]
    fn disk_examples() {
        assert_eq!(disk(0).points.len(), 1);
        assert_eq!(disk(1).points.len(), 5);
        assert_eq!(disk(2).points.len(), 9);
        assert_eq!(disk(9).points.len(), 29);
    }

    #[test]
    fn universal_disk_examples() {
        let c = universal_disk_set(0).unwrap();
        assert_eq!(c.disk.radius_norm, 1);
        assert!(c.certificate.verdict.is_positive());

        let c = universal_disk_set(1).unwrap();
        assert_eq!(c.disk.radius_norm, 10);
        assert!(c.disk.points.len() <= 30 * 2);
        assert_eq!(c.certificate.verdict, Verdict::CertifiedUniversalSufficient);
        assert!(c.all_squares_contained());

        let c = universal_disk_set(5).unwrap();
        assert_eq!(c.disk.radius_norm, 46);
        assert_eq!(c.certificate.verdict, Verdict::CertifiedUniversalSufficient);
        assert!(c.disk.points.len() <= 30 * 6);
    }

    #[test]
    fn minimal_radius_examples() {
        assert_eq!(minimal_disk_radius(1).unwrap(), 1);
        assert_eq!(minimal_disk_radius(2).unwrap(), 1);
        assert_eq!(minimal_disk_radius(3).unwrap(), 2);
    }
}
