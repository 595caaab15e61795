//! Toric ideals from their lattices, by saturation with an auxiliary variable.

use std::collections::BTreeSet;

use super::engine::{Buchberger, VecOrder};
use super::{sort_canonically, Binomial, Monomial, OrderKind, TermOrder};
use crate::encoding::{generators_pg, VectorConfiguration};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Reduced Gröbner basis of the lattice ideal of `lattice`, in column
/// coordinates. `ranking[r]` is the column ranked `r`-th highest.
///
/// Computes a basis of `<x^{u+} - x^{u-} : u in lattice> + <t*x_1*...*x_n - 1>`
/// under an order eliminating `t`, and keeps the elements free of `t`.
pub(crate) fn lattice_gb(lattice: &[Vec<i64>], ranking: &[usize], kind: OrderKind) -> Vec<Vec<i64>> {
    let n = ranking.len();
    if lattice.is_empty() {
        return Vec::new();
    }
    let mut bb = Buchberger::new(VecOrder::eliminating(kind, 1));
    for u in lattice {
        let mut v = vec![0i32; n + 1];
        for (r, &col) in ranking.iter().enumerate() {
            v[r + 1] = i32::try_from(u[col]).expect("lattice entry out of range");
        }
        bb.add_generator(v);
    }
    bb.add_generator(vec![1; n + 1]);
    let gb = bb.run();
    log::debug!("saturation basis has {} elements", gb.len());
    gb.into_iter()
        .filter(|v| v[0] == 0)
        .map(|v| {
            let mut u = vec![0i64; n];
            for (r, &col) in ranking.iter().enumerate() {
                u[col] = v[r + 1] as i64;
            }
            u
        })
        .collect()
}

/// Reduced Gröbner basis of the toric ideal `I_A` of `cfg` under `order`,
/// leading term as `plus`, sorted canonically.
pub fn toric_gb(cfg: &VectorConfiguration, order: &TermOrder) -> Result<Vec<Binomial>> {
    let vars = cfg.variables();
    let ranking: Vec<usize> = order
        .ranking()
        .iter()
        .filter_map(|v| vars.iter().position(|w| w == v))
        .collect();
    if let Some(v) = vars.iter().find(|v| !order.ranks(**v)) {
        return Err(Error::UnrankedVariable(*v));
    }
    let lattice: Vec<Vec<i64>> = cfg
        .matrix()
        .kernel_lattice_basis()
        .iter()
        .map(|u| u.to_i64().expect("kernel entry exceeds i64"))
        .collect();
    let mut out: Vec<Binomial> = lattice_gb(&lattice, &ranking, order.kind())
        .iter()
        .filter_map(|u| Binomial::from_exponent_vector(&vars, u))
        .map(|b| b.with_lead(order))
        .collect::<Result<_>>()?;
    sort_canonically(&mut out);
    Ok(out)
}

/// Minimal generators of the monomial ideal spanned by all terms of the
/// binomials `f_ij`.
pub fn indispensable_monomials(g: &Graph) -> Vec<Monomial> {
    let terms: BTreeSet<Monomial> = generators_pg(g)
        .iter()
        .flat_map(|f| [f.plus().clone(), f.minus().clone()])
        .collect();
    terms
        .iter()
        .filter(|m| !terms.iter().any(|d| d != *m && d.divides(m)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::build_ag;
    use crate::fixtures;

    #[test]
    fn independent_columns_give_zero_ideal() {
        let g = Graph::new([1, 2, 3], []).unwrap();
        let cfg = build_ag(&g);
        let o = TermOrder::natural(OrderKind::DegRevLex, cfg.variables());
        assert!(toric_gb(&cfg, &o).unwrap().is_empty());
    }

    #[test]
    fn complete2_toric_basis() {
        let cfg = build_ag(&fixtures::complete2());
        let o = TermOrder::natural(OrderKind::DegRevLex, cfg.variables());
        let gb = toric_gb(&cfg, &o).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string(), "x12*x21 - x11*x22");
    }

    #[test]
    fn indispensable_count() {
        assert_eq!(indispensable_monomials(&fixtures::example_graph()).len(), 12);
        assert_eq!(indispensable_monomials(&fixtures::complete2()).len(), 2);
        assert!(indispensable_monomials(&Graph::new([1, 2], []).unwrap()).is_empty());
    }
}
