//! Gaussian integers with arbitrary-precision components.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `re + im·i` of Z[i].
///
/// Ordering is lexicographic on `(re, im)`, which is the order point sets
/// are stored in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        GaussInt::default()
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    /// The four units in the order `1, i, -1, -i`.
    pub fn units() -> [GaussInt; 4] {
        [GaussInt::new(1, 0), GaussInt::new(0, 1), GaussInt::new(-1, 0), GaussInt::new(0, -1)]
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> GaussInt {
        GaussInt { re: -&self.im, im: self.re.clone() }
    }

    pub fn scale(&self, k: &BigInt) -> GaussInt {
        GaussInt { re: &self.re * k, im: &self.im * k }
    }

    pub fn pow(&self, mut exp: u32) -> GaussInt {
        let mut base = self.clone();
        let mut acc = GaussInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Gcd of the two rational components (the rational-integer content).
    pub fn content(&self) -> BigInt {
        self.re.gcd(&self.im)
    }

    /// Both components as machine integers, if they fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        Some((self.re.to_i64()?, self.im.to_i64()?))
    }

    /// The unique associate `u·z` with `re > 0` and `im >= 0`.
    pub fn canonical_associate(&self) -> Result<GaussInt> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("canonical associate"));
        }
        let mut z = self.clone();
        while !(z.re.is_positive() && !z.im.is_negative()) {
            z = z.mul_i();
        }
        Ok(z)
    }

    /// The unit `u` with `canonical_associate(z) = u·z`.
    pub fn canonical_unit(&self) -> Result<GaussInt> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("canonical associate"));
        }
        let mut z = self.clone();
        let mut u = GaussInt::one();
        while !(z.re.is_positive() && !z.im.is_negative()) {
            z = z.mul_i();
            u = u.mul_i();
        }
        Ok(u)
    }

    pub fn is_associate_of(&self, other: &GaussInt) -> bool {
        let mut z = other.clone();
        for _ in 0..4 {
            if &z == self {
                return true;
            }
            z = z.mul_i();
        }
        false
    }

    /// Euclidean division with the quotient rounded to the nearest lattice
    /// point; half-integer quotient components round toward +∞.
    ///
    /// Guarantees `z = q·α + r` and `2·norm(r) <= norm(α)`.
    pub fn divmod_nearest(&self, alpha: &GaussInt) -> Result<(GaussInt, GaussInt)> {
        if alpha.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = alpha.norm();
        let w = self * &alpha.conj();
        let two_n: BigInt = &n * 2;
        // floor(u/n + 1/2) = floor((2u + n) / 2n)
        let round = |u: &BigInt| (u * 2u32 + &n).div_floor(&two_n);
        let q = GaussInt { re: round(&w.re), im: round(&w.im) };
        let r = self - &(&q * alpha);
        Ok((q, r))
    }

    /// `z / d` when `d` divides `z`, otherwise `None`.
    pub fn exact_div(&self, d: &GaussInt) -> Option<GaussInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let w = self * &d.conj();
        let (qr, rr) = w.re.div_rem(&n);
        let (qi, ri) = w.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussInt { re: qr, im: qi })
        } else {
            None
        }
    }

    pub fn divides(&self, z: &GaussInt) -> bool {
        if self.is_zero() {
            return z.is_zero();
        }
        z.exact_div(self).is_some()
    }

    /// Canonical greatest common divisor.
    pub fn gcd(&self, other: &GaussInt) -> Result<GaussInt> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroArgument("gcd(0, 0)"));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod_nearest(&b)?;
            a = b;
            b = r;
        }
        a.canonical_associate()
    }
}

impl From<(i64, i64)> for GaussInt {
    fn from((re, im): (i64, i64)) -> Self {
        GaussInt::new(re, im)
    }
}

impl From<i64> for GaussInt {
    fn from(re: i64) -> Self {
        GaussInt::new(re, 0)
    }
}

impl From<BigInt> for GaussInt {
    fn from(re: BigInt) -> Self {
        GaussInt { re, im: BigInt::zero() }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $tr<&'b GaussInt> for &'a GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'b GaussInt) -> GaussInt {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $tr<GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'b GaussInt) -> GaussInt {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<GaussInt> for &'a GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussInt { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| GaussInt { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| GaussInt { re: &a.re * &b.re - &a.im * &b.im, im: &a.re * &b.im + &a.im * &b.re });

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |f: &mut fmt::Formatter<'_>, im: &BigInt, lead: bool| {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => im_part(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                im_part(f, &self.im, false)
            }
        }
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `3`, `-2i`, `i`, `1+i`, `4-3i` (whitespace ignored).
impl FromStr for GaussInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not a Gaussian integer: {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return s.parse::<BigInt>().map(GaussInt::from).map_err(|_| bad());
        };
        // split at the last sign that is not the leading character
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(idx, _)| idx).last();
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re: BigInt = re_str.parse().map_err(|_| bad())?;
        let im: BigInt = match im_str {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            other => other.parse().map_err(|_| bad())?,
        };
        Ok(GaussInt { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(g(3, 4).norm(), BigInt::from(25));
        assert_eq!(g(0, 0).norm(), BigInt::from(0));
        assert_eq!(g(1, 1).norm(), BigInt::from(2));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(g(5, 0).divmod_nearest(&g(2, 1)).unwrap(), (g(2, -1), g(0, 0)));
        assert_eq!(g(3, -7).divmod_nearest(&g(1, 0)).unwrap(), (g(3, -7), g(0, 0)));
        // exact quotient 3.5 - 3.5i; ties round up
        assert_eq!(g(7, 0).divmod_nearest(&g(1, 1)).unwrap(), (g(4, -3), g(0, -1)));
        assert_eq!(g(1, 0).divmod_nearest(&g(0, 0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(g(3, 0).gcd(&g(5, 0)).unwrap(), g(1, 0));
        assert_eq!(g(0, 0).gcd(&g(0, -2)).unwrap(), g(2, 0));
        assert_eq!(g(1, 1).gcd(&g(2, 0)).unwrap(), g(1, 1));
        assert!(g(0, 0).gcd(&g(0, 0)).is_err());
    }

    #[test]
    fn canonical_associate_examples() {
        assert_eq!(g(-2, 0).canonical_associate().unwrap(), g(2, 0));
        assert_eq!(g(0, 1).canonical_associate().unwrap(), g(1, 0));
        assert_eq!(g(-1, 1).canonical_associate().unwrap(), g(1, 1));
        assert!(g(0, 0).canonical_associate().is_err());
        let z = g(-3, 5);
        assert_eq!(&z.canonical_unit().unwrap() * &z, z.canonical_associate().unwrap());
    }

    #[test]
    fn parse_and_display() {
        for (s, z) in [
            ("0", g(0, 0)),
            ("7", g(7, 0)),
            ("-7", g(-7, 0)),
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            ("1+i", g(1, 1)),
            ("2-3i", g(2, -3)),
            ("-5i", g(0, -5)),
            ("-4+12i", g(-4, 12)),
        ] {
            assert_eq!(s.parse::<GaussInt>().unwrap(), z, "{s}");
            assert_eq!(z.to_string(), s);
        }
        assert_eq!(" 3 + 4 i ".parse::<GaussInt>().unwrap(), g(3, 4));
        assert!("1+".parse::<GaussInt>().is_err());
        assert!("x".parse::<GaussInt>().is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(g(5, 0).exact_div(&g(2, 1)), Some(g(2, -1)));
        assert_eq!(g(3, 0).exact_div(&g(1, 1)), None);
        assert!(g(1, 1).divides(&g(2, 0)));
        assert_eq!(g(1, 1).pow(2), g(0, 2));
        assert_eq!(g(1, 1).pow(0), g(1, 0));
    }
}
