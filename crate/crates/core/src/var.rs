//! Variable identifiers for the polynomial rings attached to a graph.
//!
//! A graph `G` carries one variable `x_ii` per vertex and two variables
//! `x_ij`, `x_ji` per edge `{i, j}`. Configurations without graph-derived
//! names (plain incidence matrices) use synthetic variables `y_k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Identifier of a ring variable.
///
/// The ordering is row-major over the index pairs, so the natural chain
/// `x_11 > x_12 > ... > x_21 > ...` is the ascending order of `VarId`.
/// Synthetic variables sort after all matrix variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarId {
    /// `x_ii`
    Diag(u32),
    /// `x_ij` with `i != j`
    Off(u32, u32),
    /// `y_k`
    Aux(u32),
}

impl VarId {
    pub fn new(i: u32, j: u32) -> Self {
        if i == j {
            VarId::Diag(i)
        } else {
            VarId::Off(i, j)
        }
    }

    /// Row and column index, `None` for synthetic variables.
    pub fn indices(&self) -> Option<(u32, u32)> {
        match *self {
            VarId::Diag(i) => Some((i, i)),
            VarId::Off(i, j) => Some((i, j)),
            VarId::Aux(_) => None,
        }
    }

    pub fn is_diag(&self) -> bool {
        matches!(self, VarId::Diag(_))
    }

    fn key(&self) -> (u8, u32, u32) {
        match *self {
            VarId::Diag(i) => (0, i, i),
            VarId::Off(i, j) => (0, i, j),
            VarId::Aux(k) => (1, k, 0),
        }
    }

    /// Edge-name rendering (`z12`, `z_10,3`).
    pub fn edge_name(&self) -> String {
        let s = self.to_string();
        match self {
            VarId::Aux(_) => s,
            _ => format!("z{}", &s[1..]),
        }
    }

    /// Parses either `x..`, `z..` or `y..` forms.
    pub fn parse_any(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError::Variable(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        match head {
            'y' => rest.parse::<u32>().map(VarId::Aux).map_err(|_| bad()),
            'x' | 'z' => {
                if let Some(body) = rest.strip_prefix('_') {
                    let body = body.replace(['{', '}'], "");
                    let (a, b) = body.split_once(',').ok_or_else(bad)?;
                    let i = a.trim().parse::<u32>().map_err(|_| bad())?;
                    let j = b.trim().parse::<u32>().map_err(|_| bad())?;
                    Ok(VarId::new(i, j))
                } else {
                    let digits: Vec<u32> = rest
                        .chars()
                        .map(|c| c.to_digit(10).ok_or_else(bad))
                        .collect::<Result<_, _>>()?;
                    if digits.len() != 2 {
                        return Err(bad());
                    }
                    Ok(VarId::new(digits[0], digits[1]))
                }
            }
            _ => Err(bad()),
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.indices() {
            Some((i, j)) if i > 9 || j > 9 => write!(f, "x_{i},{j}"),
            Some((i, j)) => write!(f, "x{i}{j}"),
            None => match self {
                VarId::Aux(k) => write!(f, "y{k}"),
                _ => unreachable!(),
            },
        }
    }
}

impl FromStr for VarId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarId::parse_any(s)
    }
}

impl serde::Serialize for VarId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for VarId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        VarId::parse_any(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_chain_is_row_major() {
        let mut v = [VarId::new(2, 1),
            VarId::new(1, 2),
            VarId::new(2, 2),
            VarId::new(1, 1),
            VarId::Aux(0)];
        v.sort();
        let names: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["x11", "x12", "x21", "x22", "y0"]);
    }

    #[test]
    fn wide_indices_use_separator() {
        assert_eq!(VarId::new(10, 3).to_string(), "x_10,3");
        assert_eq!(VarId::new(12, 12).edge_name(), "z_12,12");
        assert_eq!("x_10,3".parse::<VarId>().unwrap(), VarId::Off(10, 3));
        assert_eq!("z_{7},{7}".parse::<VarId>().unwrap(), VarId::Diag(7));
    }

    #[test]
    fn parse_round_trip() {
        for v in [VarId::new(3, 5), VarId::Diag(4), VarId::Aux(17), VarId::new(1, 11)] {
            assert_eq!(v.to_string().parse::<VarId>().unwrap(), v);
        }
        assert!("x123".parse::<VarId>().is_err());
        assert!("w12".parse::<VarId>().is_err());
    }
}
