use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, ParseError, Result};
use crate::var::VarId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" | "revlex" => Ok(OrderKind::DegRevLex),
            other => Err(ParseError::Order(format!("unknown order kind `{other}`"))),
        }
    }
}

/// Term order given by a kind and a ranking of the variables, highest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    ranking: Vec<VarId>,
    position: BTreeMap<VarId, usize>,
}

impl TermOrder {
    /// Panics on duplicate variables.
    pub fn new(kind: OrderKind, ranking: Vec<VarId>) -> Self {
        let position: BTreeMap<VarId, usize> =
            ranking.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        assert_eq!(position.len(), ranking.len(), "duplicate variable in ranking");
        TermOrder {
            kind,
            ranking,
            position,
        }
    }

    /// Natural chain `x11 > x12 > ... > x21 > ...` over `vars`.
    pub fn natural(kind: OrderKind, vars: impl IntoIterator<Item = VarId>) -> Self {
        let mut ranking: Vec<VarId> = vars.into_iter().collect();
        ranking.sort();
        ranking.dedup();
        TermOrder::new(kind, ranking)
    }

    /// Uniformly random ranking of `vars`.
    pub fn random<R: Rng>(kind: OrderKind, vars: impl IntoIterator<Item = VarId>, rng: &mut R) -> Self {
        let mut ranking: Vec<VarId> = vars.into_iter().collect();
        ranking.sort();
        ranking.dedup();
        ranking.shuffle(rng);
        TermOrder::new(kind, ranking)
    }

    /// Parses a chain such as `x11>x12>x21` or `x11,x12,x_10,3` and
    /// completes it with the unlisted `active` variables in natural order.
    pub fn from_chain(kind: OrderKind, chain: &str, active: &[VarId]) -> std::result::Result<Self, ParseError> {
        let raw: Vec<&str> = chain
            .split([',', '>'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let mut tokens: Vec<String> = Vec::new();
        let mut i = 0;
        while i < raw.len() {
            let t = raw[i];
            if (t.starts_with("x_") || t.starts_with("z_")) && i + 1 < raw.len() {
                tokens.push(format!("{t},{}", raw[i + 1]));
                i += 2;
            } else {
                tokens.push(t.to_string());
                i += 1;
            }
        }
        let mut ranking = Vec::new();
        for t in &tokens {
            let v = VarId::parse_any(t)?;
            if !active.contains(&v) {
                return Err(ParseError::Order(format!("variable {v} is not in the ring")));
            }
            if ranking.contains(&v) {
                return Err(ParseError::Order(format!("variable {v} listed twice")));
            }
            ranking.push(v);
        }
        let mut rest: Vec<VarId> = active.iter().filter(|v| !ranking.contains(v)).copied().collect();
        rest.sort();
        ranking.extend(rest);
        Ok(TermOrder::new(kind, ranking))
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[VarId] {
        &self.ranking
    }

    pub fn position(&self, v: VarId) -> Option<usize> {
        self.position.get(&v).copied()
    }

    pub fn ranks(&self, v: VarId) -> bool {
        self.position.contains_key(&v)
    }

    /// Compares two monomials; every variable must be ranked.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let mut diffs: Vec<(usize, i64)> = Vec::new();
        for v in a.variables().chain(b.variables()) {
            let p = self.position(v).ok_or(Error::UnrankedVariable(v))?;
            let d = a.exponent(v) as i64 - b.exponent(v) as i64;
            if d != 0 {
                diffs.push((p, d));
            }
        }
        diffs.sort_unstable();
        diffs.dedup();
        let lex = || match diffs.first() {
            Some(&(_, d)) if d > 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
            None => Ordering::Equal,
        };
        Ok(match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| match diffs.last() {
                Some(&(_, d)) if d < 0 => Ordering::Greater,
                Some(_) => Ordering::Less,
                None => Ordering::Equal,
            }),
        })
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chain: Vec<String> = self.ranking.iter().map(|v| v.to_string()).collect();
        write!(f, "{}:{}", self.kind, chain.join(">"))
    }
}
