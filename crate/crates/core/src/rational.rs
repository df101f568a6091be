//! Elements of Q(i) as a Gaussian-integer numerator over a positive
//! rational denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussInt;

/// `num / den` with `den > 0` and `gcd(den, content(num)) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    num: GaussInt,
    den: BigInt,
}

impl GaussRat {
    pub fn new(num: GaussInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: GaussInt, den: BigInt) -> Self {
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        if g.is_one() {
            GaussRat { num, den }
        } else {
            GaussRat { num: GaussInt { re: &num.re / &g, im: &num.im / &g }, den: den / g }
        }
    }

    pub fn zero() -> Self {
        GaussRat { num: GaussInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        GaussRat { num: GaussInt::one(), den: BigInt::one() }
    }

    pub fn num(&self) -> &GaussInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value lies in Z[i].
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_gauss_int(&self) -> Option<GaussInt> {
        self.is_integral().then(|| self.num.clone())
    }

    /// `a / b` for Gaussian integers, `b != 0`.
    pub fn from_quotient(a: &GaussInt, b: &GaussInt) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(a * &b.conj(), b.norm()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // den / num = den·conj(num) / norm(num)
        Ok(Self::reduced(self.num.conj().scale(&self.den), self.num.norm()))
    }

    pub fn div(&self, other: &GaussRat) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn mul_int(&self, z: &GaussInt) -> GaussRat {
        Self::reduced(&self.num * z, self.den.clone())
    }
}

impl From<GaussInt> for GaussRat {
    fn from(num: GaussInt) -> Self {
        GaussRat { num, den: BigInt::one() }
    }
}

impl<'b> Add<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'b GaussRat) -> GaussRat {
        if self.den == rhs.den {
            return GaussRat::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let num = self.num.scale(&rhs.den) + rhs.num.scale(&self.den);
        GaussRat::reduced(num, &self.den * &rhs.den)
    }
}

impl<'b> Sub<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'b GaussRat) -> GaussRat {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.re.is_zero() || self.num.im.is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
