//! Canonical residue systems modulo a nonzero Gaussian integer.
//!
//! The ideal `αZ[i]` is the integer lattice spanned by `(a, b)` and
//! `(-b, a)` for `α = a + bi`. Its column normal form has basis
//! `(width, 0)`, `(shift, height)` where `height = gcd(a, b)` and
//! `width = norm(α) / height`, so every class has exactly one
//! representative `x + yi` with `0 <= x < width`, `0 <= y < height`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussInt;

/// A modulus together with its lattice normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulus {
    alpha: GaussInt,
    norm: BigInt,
    height: BigInt,
    width: BigInt,
    shift: BigInt,
}

impl Modulus {
    pub fn new(alpha: &GaussInt) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b) = (&alpha.re, &alpha.im);
        let norm = alpha.norm();
        // u·b + v·a = height is the second coordinate of u·α + v·iα
        let egcd = b.extended_gcd(a);
        let (mut height, mut u, mut v) = (egcd.gcd, egcd.x, egcd.y);
        if height.is_negative() {
            height = -height;
            u = -u;
            v = -v;
        }
        let width = &norm / &height;
        let shift = (&u * a - &v * b).mod_floor(&width);
        Ok(Modulus { alpha: alpha.clone(), norm, height, width, shift })
    }

    pub fn alpha(&self) -> &GaussInt {
        &self.alpha
    }

    /// Number of residue classes.
    pub fn norm(&self) -> &BigInt {
        &self.norm
    }

    /// Position of the class of `z` in the order of [`Modulus::residues`].
    pub fn index(&self, z: &GaussInt) -> BigInt {
        let (x, y) = self.reduce_coords(z);
        y * &self.width + x
    }

    /// Class index as a machine word; `None` when the modulus is too large.
    pub fn index_usize(&self, z: &GaussInt) -> Option<usize> {
        self.index(z).to_usize()
    }

    fn reduce_coords(&self, z: &GaussInt) -> (BigInt, BigInt) {
        let (q, y) = z.im.div_mod_floor(&self.height);
        let x = (&z.re - q * &self.shift).mod_floor(&self.width);
        (x, y)
    }

    pub fn reduce(&self, z: &GaussInt) -> GaussInt {
        let (x, y) = self.reduce_coords(z);
        GaussInt { re: x, im: y }
    }

    pub fn residue_at(&self, index: &BigInt) -> GaussInt {
        let (y, x) = index.div_rem(&self.width);
        GaussInt { re: x, im: y }
    }

    /// All representatives, ordered by `(im, re)`.
    pub fn residues(&self) -> Vec<GaussInt> {
        let mut out = Vec::new();
        let mut y = BigInt::zero();
        while y < self.height {
            let mut x = BigInt::zero();
            while x < self.width {
                out.push(GaussInt { re: x.clone(), im: y.clone() });
                x += 1;
            }
            y += 1;
        }
        out
    }

    pub fn congruent(&self, z: &GaussInt, w: &GaussInt) -> bool {
        self.reduce_coords(z) == self.reduce_coords(w)
    }
}

/// Exactly `norm(α)` pairwise incongruent reduced representatives.
pub fn residue_system(alpha: &GaussInt) -> Result<Vec<GaussInt>> {
    Ok(Modulus::new(alpha)?.residues())
}

/// The representative of `z`'s class in [`residue_system`].
pub fn reduce_mod(z: &GaussInt, alpha: &GaussInt) -> Result<GaussInt> {
    Ok(Modulus::new(alpha)?.reduce(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn residue_system_examples() {
        assert_eq!(residue_system(&g(1, 0)).unwrap(), vec![g(0, 0)]);
        assert_eq!(residue_system(&g(1, 1)).unwrap(), vec![g(0, 0), g(1, 0)]);
        assert_eq!(residue_system(&g(2, 0)).unwrap(), vec![g(0, 0), g(1, 0), g(0, 1), g(1, 1)]);
        assert!(residue_system(&g(0, 0)).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_mod(&g(17, -4), &g(1, 0)).unwrap(), g(0, 0));
        assert_eq!(reduce_mod(&g(0, 1), &g(1, 1)).unwrap(), g(1, 0));
        assert_eq!(reduce_mod(&g(3, 0), &g(2, 0)).unwrap(), g(1, 0));
        assert!(reduce_mod(&g(3, 0), &g(0, 0)).is_err());
    }

    #[test]
    fn reduction_differs_by_a_multiple() {
        for alpha in [g(2, 1), g(3, 0), g(-4, 6), g(0, -5), g(7, 7)] {
            let m = Modulus::new(&alpha).unwrap();
            for re in -9..9 {
                for im in -9..9 {
                    let z = g(re, im);
                    let r = m.reduce(&z);
                    assert!(alpha.divides(&(&z - &r)), "{z} mod {alpha}");
                    assert_eq!(m.reduce(&r), r);
                    assert_eq!(m.residue_at(&m.index(&z)), r);
                }
            }
        }
    }
}
