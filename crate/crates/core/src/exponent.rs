//! Exponent vectors of monomials.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// The exponent of a monomial `x_1^{a_1} ... x_d^{a_d}` in `d` variables.
///
/// Entries are arbitrary-precision non-negative integers; nothing in the
/// crate assumes exponents fit a machine word. Ordering is lexicographic on
/// the coordinate sequence, which is the canonical generator order used for
/// equality tests and reproducible output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    coords: Vec<BigUint>,
}

impl ExponentVector {
    pub fn new(coords: Vec<BigUint>) -> Self {
        ExponentVector { coords }
    }

    /// The monomial `1`, i.e. the all-zero exponent.
    pub fn zero(dim: usize) -> Self {
        ExponentVector {
            coords: vec![BigUint::zero(); dim],
        }
    }

    pub fn from_u64s(coords: &[u64]) -> Self {
        ExponentVector {
            coords: coords.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Componentwise `self <= other`, i.e. the monomial `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Exponent of the product monomial.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exponent of `lcm(x^self, x^other)`: the componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        }
    }

    /// Exponent of `x^self` raised to the `k`-th power.
    pub fn scale(&self, k: u64) -> Self {
        let k = BigUint::from(k);
        ExponentVector {
            coords: self.coords.iter().map(|a| a * &k).collect(),
        }
    }

    pub fn total_degree(&self) -> BigUint {
        self.coords.iter().sum()
    }

    /// True when every coordinate except `axis` is zero. The zero vector is a
    /// pure power (of exponent 0) along every axis.
    pub fn is_pure_power(&self, axis: usize) -> bool {
        self.coords
            .iter()
            .enumerate()
            .all(|(j, c)| j == axis || c.is_zero())
    }

    /// Renders e.g. `x^2*y` (variables `x, y, z` for d <= 3, else `x1..xd`);
    /// the zero vector renders as `1`.
    pub fn monomial_string(&self) -> String {
        let names: Vec<String> = if self.dim() <= 3 {
            ["x", "y", "z"][..self.dim()]
                .iter()
                .map(|s| s.to_string())
                .collect()
        } else {
            (1..=self.dim()).map(|j| format!("x{j}")).collect()
        };
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(&names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| {
                if *c == BigUint::from(1u32) {
                    name.clone()
                } else {
                    format!("{name}^{c}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.monomial_string())
    }
}

// JSON form is a plain array of non-negative integers. Entries that fit u64
// are emitted as numbers; anything larger is emitted as a decimal string,
// and both forms are accepted on input.
impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            match u64::try_from(c) {
                Ok(small) => seq.serialize_element(&small)?,
                Err(_) => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct VecVisitor;

        impl<'de> Visitor<'de> for VecVisitor {
            type Value = ExponentVector;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of non-negative integers (or decimal strings)")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                #[derive(Deserialize)]
                #[serde(untagged)]
                enum Entry {
                    Small(u64),
                    Big(String),
                }
                let mut coords = Vec::new();
                while let Some(entry) = seq.next_element::<Entry>()? {
                    let c = match entry {
                        Entry::Small(v) => BigUint::from(v),
                        Entry::Big(s) => s
                            .parse::<BigUint>()
                            .map_err(|_| de::Error::custom(format!("invalid exponent `{s}`")))?,
                    };
                    coords.push(c);
                }
                Ok(ExponentVector::new(coords))
            }
        }

        deserializer.deserialize_seq(VecVisitor)
    }
}
