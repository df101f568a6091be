//! Univariate polynomials over Q(i), Lagrange interpolation and an
//! exhaustive integer-valuedness test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::rational::GaussRat;
use crate::residue::Modulus;

/// Residue budget used by [`GaussPoly::is_integer_valued`] when none is given.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GaussPoly {
    coefficients: Vec<GaussRat>,
}

impl GaussPoly {
    pub fn new(mut coefficients: Vec<GaussRat>) -> Self {
        while coefficients.last().is_some_and(GaussRat::is_zero) {
            coefficients.pop();
        }
        GaussPoly { coefficients }
    }

    pub fn zero() -> Self {
        GaussPoly::default()
    }

    pub fn constant(c: GaussRat) -> Self {
        GaussPoly::new(vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: &GaussInt) -> Self {
        GaussPoly::new(vec![(-root).into(), GaussRat::one()])
    }

    pub fn coefficients(&self) -> &[GaussRat] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn add(&self, other: &GaussPoly) -> GaussPoly {
        let n = self.coefficients.len().max(other.coefficients.len());
        let zero = GaussRat::zero();
        let coefficients = (0..n)
            .map(|i| {
                let a = self.coefficients.get(i).unwrap_or(&zero);
                let b = other.coefficients.get(i).unwrap_or(&zero);
                a + b
            })
            .collect();
        GaussPoly::new(coefficients)
    }

    pub fn mul(&self, other: &GaussPoly) -> GaussPoly {
        if self.is_zero() || other.is_zero() {
            return GaussPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        GaussPoly::new(out)
    }

    pub fn scale(&self, c: &GaussRat) -> GaussPoly {
        GaussPoly::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: &GaussInt) -> GaussRat {
        self.coefficients.iter().rev().fold(GaussRat::zero(), |acc, c| &acc.mul_int(z) + c)
    }

    /// Smallest positive rational `d` with `d·f` in Z[i][x].
    pub fn common_denominator(&self) -> BigInt {
        self.coefficients.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.den()))
    }

    /// `d·f` with Gaussian-integer coefficients, `d` the common denominator.
    pub fn integral_multiple(&self) -> (BigInt, Vec<GaussInt>) {
        let d = self.common_denominator();
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| c.mul_int(&GaussInt::from(d.clone())).to_gauss_int().expect("d clears denominators"))
            .collect();
        (d, coeffs)
    }

    /// Decides whether `f(Z[i]) ⊆ Z[i]` with the default residue budget.
    pub fn is_integer_valued(&self) -> Result<IntegerValuedness> {
        self.is_integer_valued_with_budget(DEFAULT_ORACLE_BUDGET)
    }

    /// With `d` the common denominator, `d·f(x) mod d` depends only on
    /// `x mod d`, so checking the `d²` residues modulo `d` is exhaustive.
    pub fn is_integer_valued_with_budget(&self, budget: u64) -> Result<IntegerValuedness> {
        let (d, coeffs) = self.integral_multiple();
        if d.is_one() {
            return Ok(IntegerValuedness::IntegerValued);
        }
        let residues = &d * &d;
        if residues > BigInt::from(budget) {
            return Err(Error::OracleBudget { residues: residues.to_string(), budget });
        }
        let count = residues.to_u64().expect("within budget");
        let modulus = Modulus::new(&GaussInt::from(d.clone()))?;
        let reduce = |z: GaussInt| GaussInt { re: z.re.mod_floor(&d), im: z.im.mod_floor(&d) };
        for idx in 0..count {
            let x = modulus.residue_at(&BigInt::from(idx));
            let value = coeffs.iter().rev().fold(GaussInt::zero(), |acc, c| reduce(&acc * &x + c));
            if !value.is_zero() {
                return Ok(IntegerValuedness::NotIntegerValued { point: x.clone(), value: self.evaluate(&x) });
            }
        }
        Ok(IntegerValuedness::IntegerValued)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerValuedness {
    IntegerValued,
    NotIntegerValued { point: GaussInt, value: GaussRat },
}

impl IntegerValuedness {
    pub fn holds(&self) -> bool {
        matches!(self, IntegerValuedness::IntegerValued)
    }
}

/// `Q_m(x) = Π_{i≠m} (x - c_i) / (c_m - c_i)` over the sorted points.
pub fn lagrange_basis(nodes: &PointSet, m: usize) -> Result<GaussPoly> {
    let points = nodes.points();
    let cm = points
        .get(m)
        .ok_or_else(|| Error::Precondition(format!("node index {m} out of range for {} points", points.len())))?;
    let mut numerator = GaussPoly::constant(GaussRat::one());
    let mut denominator = GaussInt::one();
    for (i, ci) in points.iter().enumerate() {
        if i != m {
            numerator = numerator.mul(&GaussPoly::linear_root(ci));
            denominator = &denominator * &(cm - ci);
        }
    }
    Ok(numerator.scale(&GaussRat::from_quotient(&GaussInt::one(), &denominator)?))
}

/// Interpolant through `(c_k, values[k])`.
pub fn interpolate(nodes: &PointSet, values: &[GaussRat]) -> Result<GaussPoly> {
    if values.len() != nodes.len() {
        return Err(Error::Precondition("one value per node".into()));
    }
    let mut acc = GaussPoly::zero();
    for (m, v) in values.iter().enumerate() {
        acc = acc.add(&lagrange_basis(nodes, m)?.scale(v));
    }
    Ok(acc)
}

impl fmt::Debug for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
