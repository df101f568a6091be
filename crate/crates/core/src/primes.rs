//! Gaussian primes: enumeration, factorization and valuations.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gauss::GaussInt;

/// An irreducible element of Z[i] in canonical form (`re > 0`, `im >= 0`).
///
/// Primes are ordered by `(norm, im, re)`, so `2+i` sorts before `1+2i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussPrime {
    value: GaussInt,
    norm: BigInt,
}

impl GaussPrime {
    /// Validates that `value` is a canonical Gaussian prime.
    pub fn new(value: GaussInt) -> Result<Self> {
        if value.is_zero() || value.canonical_associate()? != value {
            return Err(Error::NotPrime(value.to_string()));
        }
        let norm = value.norm();
        let n = norm.to_u64().ok_or_else(|| Error::NormTooLarge(norm.to_string()))?;
        let irreducible = if is_prime_u64(n) {
            true
        } else {
            // inert rational prime q ≡ 3 (mod 4), norm q²
            value.im.is_zero() && value.re.to_u64().is_some_and(|q| q % 4 == 3 && is_prime_u64(q))
        };
        if !irreducible {
            return Err(Error::NotPrime(value.to_string()));
        }
        Ok(GaussPrime { value, norm })
    }

    fn new_unchecked(value: GaussInt) -> Self {
        let norm = value.norm();
        GaussPrime { value, norm }
    }

    pub fn value(&self) -> &GaussInt {
        &self.value
    }

    /// Norm of the prime, which is also the number of residues modulo it.
    pub fn norm(&self) -> &BigInt {
        &self.norm
    }

    pub fn pow(&self, exponent: u32) -> PrimePower {
        PrimePower { prime: self.clone(), exponent }
    }
}

impl Ord for GaussPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.norm, &self.value.im, &self.value.re).cmp(&(&other.norm, &other.value.im, &other.value.re))
    }
}

impl PartialOrd for GaussPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GaussPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl fmt::Debug for GaussPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

/// `prime^exponent` with `exponent >= 1`. Ordered by `(prime, exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub prime: GaussPrime,
    pub exponent: u32,
}

impl PrimePower {
    pub fn modulus(&self) -> GaussInt {
        self.prime.value.pow(self.exponent)
    }

    pub fn norm(&self) -> BigInt {
        num_traits::pow(self.prime.norm.clone(), self.exponent as usize)
    }
}

impl fmt::Debug for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{}", self.prime, self.exponent)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases cover all of u64.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rational primes up to `limit` by the sieve of Eratosthenes.
pub fn rational_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for n in 2..=limit {
        if composite[n] {
            continue;
        }
        out.push(n as u64);
        let mut m = n * n;
        while m <= limit {
            composite[m] = true;
            m += n;
        }
    }
    out
}

/// A square root of -1 modulo a prime `q ≡ 1 (mod 4)`.
fn sqrt_minus_one(q: &BigInt) -> BigInt {
    let exp_half = (q - 1u32) >> 1;
    let exp_quarter = (q - 1u32) >> 2;
    let minus_one = q - 1u32;
    let mut c = BigInt::from(2);
    loop {
        if c.modpow(&exp_half, q) == minus_one {
            return c.modpow(&exp_quarter, q);
        }
        c += 1;
    }
}

/// The Gaussian primes above a rational prime `q`: one for `q = 2` or
/// `q ≡ 3 (mod 4)`, two (the canonical forms of a conjugate pair) for
/// `q ≡ 1 (mod 4)`.
pub fn primes_above(q: &BigInt) -> Vec<GaussPrime> {
    let four = BigInt::from(4);
    if q == &BigInt::from(2) {
        return vec![GaussPrime::new_unchecked(GaussInt::new(1, 0) + GaussInt::i())];
    }
    if q.mod_floor(&four) == BigInt::from(3) {
        return vec![GaussPrime::new_unchecked(GaussInt::from(q.clone()))];
    }
    let s = sqrt_minus_one(q);
    let pi = GaussInt::from(q.clone()).gcd(&GaussInt { re: s, im: BigInt::one() }).expect("q is nonzero");
    let other = pi.conj().canonical_associate().expect("nonzero");
    let mut out = vec![GaussPrime::new_unchecked(pi), GaussPrime::new_unchecked(other)];
    out.sort();
    out
}

/// All canonical Gaussian primes with norm at most `norm_limit`, sorted.
pub fn enumerate_primes(norm_limit: u64) -> Vec<GaussPrime> {
    let mut out = Vec::new();
    for q in rational_primes(norm_limit) {
        if q % 4 == 3 {
            if q.checked_mul(q).is_some_and(|sq| sq <= norm_limit) {
                out.push(GaussPrime::new_unchecked(GaussInt::new(q as i64, 0)));
            }
        } else {
            out.extend(primes_above(&BigInt::from(q)));
        }
    }
    out.sort();
    out
}

/// Rational prime factorization of a positive integer by trial division.
fn rational_factor(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Largest `k` with `p^k | z`.
pub fn valuation(z: &GaussInt, p: &GaussPrime) -> Result<u32> {
    if z.is_zero() {
        return Err(Error::ZeroArgument("valuation"));
    }
    let mut z = z.clone();
    let mut k = 0;
    while let Some(next) = z.exact_div(&p.value) {
        z = next;
        k += 1;
    }
    Ok(k)
}

/// Unique factorization `z = unit · Π p^e`, primes sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: GaussInt,
    pub factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn recompose(&self) -> GaussInt {
        self.factors.iter().fold(self.unit.clone(), |acc, pp| &acc * &pp.modulus())
    }
}

pub fn factor(z: &GaussInt) -> Result<Factorization> {
    if z.is_zero() {
        return Err(Error::ZeroArgument("factor"));
    }
    let mut rest = z.clone();
    let mut factors = Vec::new();
    for q in rational_factor(&z.norm()) {
        for p in primes_above(&q) {
            let mut e = 0;
            while let Some(next) = rest.exact_div(&p.value) {
                rest = next;
                e += 1;
            }
            if e > 0 {
                factors.push(p.pow(e));
            }
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort();
    Ok(Factorization { unit: rest, factors })
}
