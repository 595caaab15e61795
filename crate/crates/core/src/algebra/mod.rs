//! Monomials, binomials, term orders and Gröbner bases of binomial ideals.

mod binomial;
pub(crate) mod engine;
mod monomial;
mod order;
mod toric;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use binomial::{canonical_set, Binomial};
pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use toric::{indispensable_monomials, toric_gb};
pub(crate) use toric::lattice_gb;

use crate::error::{Error, Result};
use crate::var::VarId;
use engine::VecOrder;

/// Converts binomials to exponent vectors indexed by the ranking of `order`.
fn to_vectors(gens: &[Binomial], order: &TermOrder) -> Result<Vec<Vec<i32>>> {
    gens.iter().map(|b| monomial_pair_vector(b.plus(), b.minus(), order)).collect()
}

fn monomial_pair_vector(plus: &Monomial, minus: &Monomial, order: &TermOrder) -> Result<Vec<i32>> {
    let mut u = vec![0i32; order.ranking().len()];
    for (v, e) in plus.exponents() {
        u[order.position(*v).ok_or(Error::UnrankedVariable(*v))?] += *e as i32;
    }
    for (v, e) in minus.exponents() {
        u[order.position(*v).ok_or(Error::UnrankedVariable(*v))?] -= *e as i32;
    }
    Ok(u)
}

fn from_vector(u: &[i32], vars: &[VarId]) -> Option<Binomial> {
    let u: Vec<i64> = u.iter().map(|&x| x as i64).collect();
    Binomial::from_exponent_vector(vars, &u)
}

fn monomial_vector(m: &Monomial, order: &TermOrder) -> Result<Vec<i32>> {
    monomial_pair_vector(m, &Monomial::one(), order)
}

fn vector_monomial(u: &[i32], vars: &[VarId]) -> Monomial {
    Monomial::from_pairs(vars.iter().zip(u).map(|(v, &e)| (*v, e.max(0) as u32)))
}

/// Sorts binomials by their canonical form, keeping the given signs.
pub(crate) fn sort_canonically(v: &mut [Binomial]) {
    v.sort_by_key(|b| b.canonical());
}

/// Reduced Gröbner basis of the ideal generated by `gens`. Elements are
/// returned with the leading term as `plus`, sorted canonically.
///
/// The ideal is treated as saturated with respect to every variable, which
/// holds for prime binomial ideals such as toric ideals.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> Result<Vec<Binomial>> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let vecs = to_vectors(gens, order)?;
    let gb = engine::groebner(&vecs, VecOrder::new(order.kind()));
    let mut out: Vec<Binomial> = gb.iter().filter_map(|u| from_vector(u, order.ranking())).collect();
    sort_canonically(&mut out);
    Ok(out)
}

/// Normal form of a monomial modulo a Gröbner basis.
pub fn normal_form_monomial(m: &Monomial, gb: &[Binomial], order: &TermOrder) -> Result<Monomial> {
    let basis = oriented_vectors(gb, order)?;
    let u = engine::normal_form(&basis, &monomial_vector(m, order)?);
    Ok(vector_monomial(&u, order.ranking()))
}

/// Normal form of a binomial; `None` when it reduces to zero, i.e. lies in
/// the ideal.
pub fn normal_form(b: &Binomial, gb: &[Binomial], order: &TermOrder) -> Result<Option<Binomial>> {
    let basis = oriented_vectors(gb, order)?;
    let p = engine::normal_form(&basis, &monomial_vector(b.plus(), order)?);
    let q = engine::normal_form(&basis, &monomial_vector(b.minus(), order)?);
    if p == q {
        return Ok(None);
    }
    let vars = order.ranking();
    Ok(Binomial::oriented(vector_monomial(&p, vars), vector_monomial(&q, vars)))
}

/// Whether `b` lies in the ideal with Gröbner basis `gb`.
pub fn is_member(b: &Binomial, gb: &[Binomial], order: &TermOrder) -> Result<bool> {
    Ok(normal_form(b, gb, order)?.is_none())
}

fn oriented_vectors(gb: &[Binomial], order: &TermOrder) -> Result<Vec<Vec<i32>>> {
    let o = VecOrder::new(order.kind());
    to_vectors(gb, order).map(|vs| {
        vs.into_iter()
            .map(|u| if o.positive_leads(&u) { u } else { u.iter().map(|x| -x).collect() })
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialIdeal {
    pub generators: Vec<Monomial>,
    pub squarefree: bool,
}

/// Minimal generators of the initial ideal spanned by the leading terms of
/// `gb`.
pub fn initial_ideal(gb: &[Binomial], order: &TermOrder) -> Result<InitialIdeal> {
    let mut leads: Vec<Monomial> = Vec::new();
    for b in gb {
        leads.push(b.with_lead(order)?.plus().clone());
    }
    let set: BTreeSet<Monomial> = leads.into_iter().collect();
    let generators: Vec<Monomial> = set
        .iter()
        .filter(|m| !set.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect();
    let squarefree = generators.iter().all(Monomial::is_squarefree);
    Ok(InitialIdeal { generators, squarefree })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Binomial {
        s.parse().unwrap()
    }

    fn vars(names: &[&str]) -> Vec<VarId> {
        names.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let f = b("x11*x22 - x12*x21");
        let o = TermOrder::natural(OrderKind::DegRevLex, f.support());
        let gb = buchberger(std::slice::from_ref(&f), &o).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string(), "x12*x21 - x11*x22");
        let ini = initial_ideal(&gb, &o).unwrap();
        assert_eq!(ini.generators, [ "x12*x21".parse::<Monomial>().unwrap() ]);
        assert!(ini.squarefree);
        assert!(is_member(&f, &gb, &o).unwrap());
    }

    #[test]
    fn lex_path_basis_eliminates_middle_diagonal() {
        // path 1-2-3; the S-pair of f12 and f23 eliminates x22 when it is
        // ranked highest
        let f12 = b("x11*x22 - x12*x21");
        let f23 = b("x22*x33 - x23*x32");
        let mut ranking = vars(&["x22", "x11", "x12", "x21", "x23", "x32", "x33"]);
        let o = TermOrder::new(OrderKind::Lex, ranking.clone());
        let gb = buchberger(&[f12.clone(), f23.clone()], &o).unwrap();
        let expected = b("x12*x21*x33 - x11*x23*x32");
        assert!(gb.iter().any(|g| g.same_up_to_sign(&expected)), "{gb:?}");
        assert_eq!(gb.len(), 3);

        // ranked lowest, the leading terms x11*x22 and x23*x32 are coprime
        ranking.rotate_left(1);
        let o = TermOrder::new(OrderKind::Lex, ranking);
        let gb = buchberger(&[f12, f23], &o).unwrap();
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn normal_forms() {
        let f = b("x11*x22 - x12*x21");
        let o = TermOrder::natural(OrderKind::DegRevLex, f.support());
        let gb = buchberger(&[f], &o).unwrap();
        let x11: Monomial = "x11".parse().unwrap();
        assert_eq!(normal_form_monomial(&x11, &gb, &o).unwrap(), x11);
        let m: Monomial = "x12^2*x21".parse().unwrap();
        assert_eq!(normal_form_monomial(&m, &gb, &o).unwrap().to_string(), "x11*x12*x22");
        assert!(buchberger(&[], &o).is_err());
    }
}
