use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::order::TermOrder;
use crate::error::{ParseError, Result};
use crate::var::VarId;

/// A pure difference binomial `plus - minus` with coprime terms.
///
/// [`Binomial::new`] removes the common factor and picks the order-free
/// canonical sign (the term with the lexicographically smaller
/// `(variable, exponent)` sequence becomes `plus`). [`Binomial::with_lead`]
/// re-orients so that the leading term under a term order is `plus`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// `None` when the two terms coincide.
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        let g = a.gcd(&b);
        let (a, b) = (a.div(&g).unwrap(), b.div(&g).unwrap());
        if a == b {
            return None;
        }
        Some(if a <= b {
            Binomial { plus: a, minus: b }
        } else {
            Binomial { plus: b, minus: a }
        })
    }

    /// Keeps the given sign (after removing the common factor).
    pub fn oriented(plus: Monomial, minus: Monomial) -> Option<Binomial> {
        let g = plus.gcd(&minus);
        let (plus, minus) = (plus.div(&g).unwrap(), minus.div(&g).unwrap());
        (plus != minus).then_some(Binomial { plus, minus })
    }

    /// Exponent vector `u` read as `x^{u+} - x^{u-}`, over the given
    /// variables.
    pub fn from_exponent_vector(vars: &[VarId], u: &[i64]) -> Option<Binomial> {
        assert_eq!(vars.len(), u.len());
        let plus = Monomial::from_pairs(
            vars.iter()
                .zip(u)
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| (*v, x as u32)),
        );
        let minus = Monomial::from_pairs(
            vars.iter()
                .zip(u)
                .filter(|(_, &x)| x < 0)
                .map(|(v, &x)| (*v, (-x) as u32)),
        );
        Binomial::oriented(plus, minus)
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn negated(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Same binomial with the order-free canonical sign.
    pub fn canonical(&self) -> Binomial {
        if self.plus <= self.minus {
            self.clone()
        } else {
            self.negated()
        }
    }

    /// Same binomial with the leading term under `order` as `plus`.
    pub fn with_lead(&self, order: &TermOrder) -> Result<Binomial> {
        Ok(match order.compare(&self.plus, &self.minus)? {
            std::cmp::Ordering::Less => self.negated(),
            _ => self.clone(),
        })
    }

    /// `true` for `b` and `-b`.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || (self.plus == other.minus && self.minus == other.plus)
    }

    /// Degree of `plus` (equal to that of `minus` for homogeneous binomials).
    pub fn degree(&self) -> u32 {
        self.plus.degree()
    }

    pub fn support(&self) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.plus.variables().chain(self.minus.variables()).collect();
        v.sort();
        v
    }

    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.plus.variables().chain(self.minus.variables())
    }

    /// Exponent difference `u+ - u-` over `vars`; `None` if a variable of
    /// the binomial is missing from `vars`.
    pub fn exponent_vector(&self, vars: &[VarId]) -> Option<Vec<i64>> {
        let index: BTreeMap<VarId, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut u = vec![0i64; vars.len()];
        for (v, e) in self.plus.exponents() {
            u[*index.get(v)?] += *e as i64;
        }
        for (v, e) in self.minus.exponents() {
            u[*index.get(v)?] -= *e as i64;
        }
        Some(u)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

impl FromStr for Binomial {
    type Err = ParseError;

    /// Parses `plus - minus`; the given sign is kept.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseError::Binomial(s.to_string());
        let (a, b) = s.split_once('-').ok_or_else(bad)?;
        let plus: Monomial = a.parse().map_err(|_| bad())?;
        let minus: Monomial = b.parse().map_err(|_| bad())?;
        Binomial::oriented(plus, minus).ok_or_else(bad)
    }
}

/// Canonical-sign set of binomials, for sign-insensitive comparison.
pub fn canonical_set<'a>(
    items: impl IntoIterator<Item = &'a Binomial>,
) -> std::collections::BTreeSet<Binomial> {
    items.into_iter().map(|b| b.canonical()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_sign_puts_diagonal_first() {
        let f = Binomial::new(m("x12*x21"), m("x11*x22")).unwrap();
        assert_eq!(f.to_string(), "x11*x22 - x12*x21");
    }

    #[test]
    fn common_factor_is_removed() {
        let f = Binomial::new(m("x11^2*x22"), m("x11*x12*x21")).unwrap();
        assert_eq!(f.to_string(), "x11*x22 - x12*x21");
        assert!(Binomial::new(m("x11"), m("x11")).is_none());
    }

    #[test]
    fn parse_keeps_sign() {
        let b: Binomial = "x12*x21 - x11*x22".parse().unwrap();
        assert_eq!(b.plus(), &m("x12*x21"));
        assert!(b.same_up_to_sign(&b.negated()));
        assert_eq!(b.canonical().to_string(), "x11*x22 - x12*x21");
    }

    #[test]
    fn exponent_vector_round_trip() {
        let vars: Vec<VarId> = ["x11", "x12", "x21", "x22"].iter().map(|s| s.parse().unwrap()).collect();
        let b: Binomial = "x11*x22 - x12*x21".parse().unwrap();
        let u = b.exponent_vector(&vars).unwrap();
        assert_eq!(u, [1, -1, -1, 1]);
        assert_eq!(Binomial::from_exponent_vector(&vars, &u).unwrap(), b);
    }

    #[test]
    fn json_form() {
        let b: Binomial = "x11*x22 - x12*x21".parse().unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"plus":{"x11":1,"x22":1},"minus":{"x12":1,"x21":1}}"#);
        let back: Binomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
    }
}
