use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;
use crate::var::VarId;

/// Sparse monomial; zero exponents are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: BTreeMap<VarId, u32>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial::from_pairs([(v, 1)])
    }

    /// Repeated variables are multiplied together.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        let degree = exponents.values().sum();
        Monomial { exponents, degree }
    }

    pub fn product(vars: impl IntoIterator<Item = VarId>) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn exponents(&self) -> &BTreeMap<VarId, u32> {
        &self.exponents
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e <= 1)
    }

    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exponents.keys().copied()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().all(|(v, e)| other.exponent(*v) >= *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.exponents.iter().chain(&other.exponents).map(|(v, e)| (*v, *e)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(
            self.exponents
                .iter()
                .map(|(v, e)| (*v, (*e).min(other.exponent(*v)))),
        )
    }

    /// `self / other`, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::from_pairs(
            self.exponents
                .iter()
                .map(|(v, e)| (*v, e - other.exponent(*v))),
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = ParseError;

    /// Accepts `x11*x22^2`, `x11 x22^2` or `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let bad = || ParseError::Monomial(s.to_string());
        let mut pairs = Vec::new();
        for factor in s.split(|c: char| c == '*' || c.is_whitespace()) {
            if factor.is_empty() {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            pairs.push((VarId::parse_any(name).map_err(|_| bad())?, exp));
        }
        if pairs.is_empty() {
            return Err(bad());
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, u32> = self
            .exponents
            .iter()
            .map(|(v, e)| (v.to_string(), *e))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, u32>::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(map.len());
        for (k, e) in map {
            let v = VarId::parse_any(&k).map_err(serde::de::Error::custom)?;
            if e == 0 {
                return Err(serde::de::Error::custom("zero exponent"));
            }
            pairs.push((v, e));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m: Monomial = "x22 * x11^2 x22".parse().unwrap();
        assert_eq!(m.to_string(), "x11^2*x22^2");
        assert_eq!(m.degree(), 4);
        assert!(!m.is_squarefree());
        assert_eq!("1".parse::<Monomial>().unwrap(), Monomial::one());
        assert!("".parse::<Monomial>().is_err());
    }

    #[test]
    fn divisibility() {
        let a: Monomial = "x11*x22".parse().unwrap();
        let b: Monomial = "x11^2*x22*x33".parse().unwrap();
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a).unwrap().to_string(), "x11*x33");
        assert_eq!(a.gcd(&b), a);
        assert_eq!(a.mul(&a).to_string(), "x11^2*x22^2");
    }
}
