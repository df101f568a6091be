//! JSON shapes for reports.
//!
//! Gaussian integers are `[re, im]`; components that do not fit in an `i64`
//! are written as decimal strings, and either form is accepted on input.
//! Every object is emitted with its keys in sorted order.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::distribution::ResidueHistogram;
use crate::gauss::GaussInt;
use crate::point_set::PointSet;
use crate::primes::{Factorization, GaussPrime, PrimePower};
use crate::rational::GaussRat;
use crate::universality::{Failure, UniversalityCertificate, Verdict, Volume, Witness};

struct Component<'a>(&'a BigInt);

impl Serialize for Component<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawComponent {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

impl RawComponent {
    fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            RawComponent::Signed(v) => Ok(v.into()),
            RawComponent::Unsigned(v) => Ok(v.into()),
            RawComponent::Text(s) => s.trim().parse().map_err(|_| E::custom(format!("not an integer: {s:?}"))),
        }
    }
}

impl Serialize for GaussInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&Component(&self.re))?;
        t.serialize_element(&Component(&self.im))?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for GaussInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (re, im) = <(RawComponent, RawComponent)>::deserialize(d)?;
        Ok(GaussInt { re: re.into_bigint()?, im: im.into_bigint()? })
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.points().serialize(s)
    }
}

/// Order-insensitive; repeated points are rejected.
impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let points = Vec::<GaussInt>::deserialize(d)?;
        PointSet::new(points).map_err(D::Error::custom)
    }
}

impl Serialize for GaussPrime {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}

/// `[[re, im], den]` for `(re + im·i) / den`.
impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.num(), Component(self.den())).serialize(s)
    }
}

/// `[prime, exponent]`.
impl Serialize for PrimePower {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (&self.prime, self.exponent).serialize(s)
    }
}

impl Serialize for ResidueHistogram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            counts: Vec<(&'a GaussInt, u64)>,
            modulus: &'a GaussInt,
        }
        Repr { counts: self.iter().collect(), modulus: &self.modulus }.serialize(s)
    }
}

impl Serialize for Failure {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            histogram: &'a ResidueHistogram,
            prime_power: &'a PrimePower,
        }
        Repr { histogram: &self.histogram, prime_power: &self.prime_power }.serialize(s)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            coefficients: &'a [GaussRat],
            point: &'a GaussInt,
            prime: &'a GaussPrime,
            valuation_deficit: i64,
            value: &'a GaussRat,
        }
        Repr {
            coefficients: self.polynomial.coefficients(),
            point: &self.point,
            prime: &self.prime,
            valuation_deficit: self.valuation_deficit,
            value: &self.value,
        }
        .serialize(s)
    }
}

impl Serialize for UniversalityCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            checked: &'a [PrimePower],
            degree: usize,
            failure: &'a Option<Failure>,
            verdict: Verdict,
            witness: &'a Option<Witness>,
        }
        Repr {
            checked: &self.checked,
            degree: self.degree,
            failure: &self.failure,
            verdict: self.verdict,
            witness: &self.witness,
        }
        .serialize(s)
    }
}

impl Serialize for Volume {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            norm: Component<'a>,
            value: &'a GaussInt,
        }
        Repr { norm: Component(&self.norm), value: &self.value }.serialize(s)
    }
}

/// `{"factors": [[prime, exponent], …], "unit": [re, im]}`.
impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            factors: &'a [PrimePower],
            unit: &'a GaussInt,
        }
        Repr { factors: &self.factors, unit: &self.unit }.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_int_shapes() {
        let z = GaussInt::new(3, -4);
        assert_eq!(serde_json::to_string(&z).unwrap(), "[3,-4]");
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let w = GaussInt { re: big.clone(), im: BigInt::from(1) };
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, "[\"123456789012345678901234567890\",1]");
        assert_eq!(serde_json::from_str::<GaussInt>(&text).unwrap(), w);
        assert_eq!(serde_json::from_str::<GaussInt>("[\"7\", -2]").unwrap(), GaussInt::new(7, -2));
        assert!(serde_json::from_str::<GaussInt>("[1.5, 0]").is_err());
        assert!(serde_json::from_str::<GaussInt>("[1]").is_err());
    }

    #[test]
    fn point_set_shapes() {
        let s: PointSet = serde_json::from_str("[[1,0],[0,0]]").unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[0,0],[1,0]]");
        assert!(serde_json::from_str::<PointSet>("[[1,0],[1,0]]").is_err());
    }

    #[test]
    fn factorization_shape() {
        let f = crate::primes::factor(&GaussInt::new(5, 0)).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"factors":[[[2,1],1],[[1,2],1]],"unit":[0,-1]}"#);
    }

    #[test]
    fn volume_shape() {
        let v = crate::universality::volume(&PointSet::from_pairs(&[(0, 0), (1, 0), (0, 1)]).unwrap());
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"norm":2,"value":[1,1]}"#);
    }
}
