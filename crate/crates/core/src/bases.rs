//! Circuits, Graver bases and universal Gröbner bases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{canonical_set, lattice_gb, Binomial, Monomial, OrderKind};
use crate::constructions::{build_h, prism};
use crate::encoding::{build_ag, is_homogeneous, VectorConfiguration};
use crate::error::{Error, Result};
use crate::graph::{classify, enumerate_cycles, ClosedWalk, ComponentKind, Edge, Graph, Parity};
use crate::var::VarId;

/// Circuits of the toric ideal of `cfg`, canonical sign, sorted.
pub fn circuits(cfg: &VectorConfiguration) -> Vec<Binomial> {
    let set: BTreeSet<Binomial> = cfg
        .matrix()
        .matrix_circuits()
        .iter()
        .map(|u| cfg.binomial(u).expect("circuit entries fit in i64").canonical())
        .collect();
    set.into_iter().collect()
}

/// Graver basis of the toric ideal of `cfg`, canonical sign, sorted.
///
/// The Lawrence lifting `[[A, 0], [I, I]]` has kernel `{(u, -u) : Au = 0}`;
/// the reduced Gröbner basis of its toric ideal under any order consists of
/// the binomials `x^{u+} y^{u-} - x^{u-} y^{u+}` for `u` in the Graver basis
/// of `A`.
pub fn graver(cfg: &VectorConfiguration) -> Vec<Binomial> {
    let n = cfg.columns().len();
    let lifted: Vec<Vec<i64>> = cfg
        .matrix()
        .kernel_lattice_basis()
        .iter()
        .map(|u| {
            let u = u.to_i64().expect("kernel entries fit in i64");
            u.iter().copied().chain(u.iter().map(|x| -x)).collect()
        })
        .collect();
    let ranking: Vec<usize> = (0..2 * n).collect();
    let set: BTreeSet<Binomial> = lattice_gb(&lifted, &ranking, OrderKind::DegRevLex)
        .iter()
        .filter_map(|v| Binomial::from_exponent_vector(&cfg.variables(), &v[..n]))
        .map(|b| b.canonical())
        .collect();
    set.into_iter().collect()
}

/// Whether `b` (up to sign) belongs to the Graver basis of `cfg`.
pub fn is_primitive(b: &Binomial, cfg: &VectorConfiguration) -> Result<bool> {
    if !is_homogeneous(b, cfg)? {
        return Err(Error::NotHomogeneous);
    }
    Ok(graver(cfg).contains(&b.canonical()))
}

/// Variable attached to each edge: its name, or `y1, y2, ...` in edge order
/// for unnamed graphs (matching the incidence configuration).
pub fn edge_variables(h: &Graph) -> BTreeMap<Edge, VarId> {
    match h.edge_names() {
        Some(names) if h.is_fully_named() => names.clone(),
        _ => h
            .edges()
            .iter()
            .enumerate()
            .map(|(k, e)| (*e, VarId::Aux(k as u32 + 1)))
            .collect(),
    }
}

/// `B_w`: product of the odd-position edges of the even closed walk `w`
/// minus the product of the even-position edges, in canonical form.
pub fn walk_binomial(w: &ClosedWalk, h: &Graph) -> Result<Binomial> {
    walk_binomial_with(w, h, &edge_variables(h))
}

fn walk_binomial_with(w: &ClosedWalk, h: &Graph, vars: &BTreeMap<Edge, VarId>) -> Result<Binomial> {
    if w.is_empty() || !w.is_even() {
        return Err(Error::InvalidWalk(format!("walk of length {} is not even", w.len())));
    }
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for (k, (a, b)) in w.edges().enumerate() {
        let e = Edge::try_new(a, b)
            .filter(|e| h.edges().contains(e))
            .ok_or_else(|| Error::InvalidWalk(format!("{{{a},{b}}} is not an edge")))?;
        let v = vars[&e];
        if k % 2 == 0 {
            odd.push(v);
        } else {
            even.push(v);
        }
    }
    Binomial::new(Monomial::product(odd), Monomial::product(even))
        .ok_or_else(|| Error::InvalidWalk("walk binomial is zero".into()))
}

/// Binomials of the closed walks describing the circuits of the toric ideal
/// of a connected graph: even cycles, two odd cycles meeting in exactly one
/// vertex, and two vertex-disjoint odd cycles joined by a path.
pub fn graph_circuits(h: &Graph) -> Result<Vec<Binomial>> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let vars = edge_variables(h);
    let mut out = BTreeSet::new();
    for w in enumerate_cycles(h, Parity::Even) {
        out.insert(walk_binomial_with(&w, h, &vars)?);
    }
    let odd = enumerate_cycles(h, Parity::Odd);
    let adj = h.adjacency();
    for (x, c1) in odd.iter().enumerate() {
        let s1: BTreeSet<u32> = c1.vertices().iter().copied().collect();
        for c2 in &odd[x + 1..] {
            let s2: BTreeSet<u32> = c2.vertices().iter().copied().collect();
            let common: Vec<u32> = s1.intersection(&s2).copied().collect();
            if common.len() == 1 {
                let v = common[0];
                let mut seq = c1.rotated_to(v).unwrap().vertices().to_vec();
                seq.extend_from_slice(c2.rotated_to(v).unwrap().vertices());
                out.insert(walk_binomial_with(&ClosedWalk::new(seq), h, &vars)?);
            } else if common.is_empty() {
                let blocked: BTreeSet<u32> = s1.union(&s2).copied().collect();
                for &a in c1.vertices() {
                    for path in connecting_paths(&adj, a, &s2, &blocked) {
                        let b = *path.last().unwrap();
                        let interior = &path[1..path.len() - 1];
                        let mut seq = c1.rotated_to(a).unwrap().vertices().to_vec();
                        seq.push(a);
                        seq.extend_from_slice(interior);
                        seq.extend_from_slice(c2.rotated_to(b).unwrap().vertices());
                        seq.push(b);
                        seq.extend(interior.iter().rev());
                        out.insert(walk_binomial_with(&ClosedWalk::new(seq), h, &vars)?);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Simple paths from `a` to a vertex of `targets` whose interior avoids
/// `blocked`.
fn connecting_paths(
    adj: &BTreeMap<u32, Vec<u32>>,
    a: u32,
    targets: &BTreeSet<u32>,
    blocked: &BTreeSet<u32>,
) -> Vec<Vec<u32>> {
    fn go(
        adj: &BTreeMap<u32, Vec<u32>>,
        path: &mut Vec<u32>,
        targets: &BTreeSet<u32>,
        blocked: &BTreeSet<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &adj[&last] {
            if targets.contains(&w) {
                let mut p = path.clone();
                p.push(w);
                out.push(p);
            } else if !blocked.contains(&w) && !path.contains(&w) {
                path.push(w);
                go(adj, path, targets, blocked, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(adj, &mut vec![a], targets, blocked, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisStatus {
    Exact,
    Sandwich,
}

impl fmt::Display for BasisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisStatus::Exact => "exact",
            BasisStatus::Sandwich => "sandwich",
        })
    }
}

/// Universal Gröbner basis, or certified bounds `lower ⊆ U ⊆ upper` when it
/// is not determined; in that case `elements` holds the lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub status: BasisStatus,
    pub count: usize,
    pub max_degree: u32,
    pub elements: Vec<Binomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<Binomial>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<Binomial>>,
}

impl BasisReport {
    fn new(status: BasisStatus, elements: BTreeSet<Binomial>, bounds: Option<(BTreeSet<Binomial>, BTreeSet<Binomial>)>) -> Self {
        BasisReport {
            status,
            count: elements.len(),
            max_degree: elements.iter().map(Binomial::degree).max().unwrap_or(0),
            elements: elements.into_iter().collect(),
            lower: bounds.as_ref().map(|(l, _)| l.iter().cloned().collect()),
            upper: bounds.map(|(_, u)| u.into_iter().collect()),
        }
    }
}

/// Even-cycle binomials of a fully named graph.
fn even_cycle_binomials(h: &Graph) -> Result<BTreeSet<Binomial>> {
    let vars = edge_variables(h);
    enumerate_cycles(h, Parity::Even)
        .iter()
        .map(|w| walk_binomial_with(w, h, &vars))
        .collect()
}

/// Walks `(C, z_ii, C', z_ii)` of the prism over an odd cycle.
fn odd_cycle_rung_walks(cycle: &ClosedWalk, p: &crate::constructions::LabeledConstruction) -> Result<BTreeSet<Binomial>> {
    let mut out = BTreeSet::new();
    for &i in cycle.vertices() {
        let rot = cycle.rotated_to(i).unwrap();
        let mut seq: Vec<u32> = rot.vertices().iter().map(|v| p.p_map[v]).collect();
        seq.push(p.p_map[&i]);
        seq.extend(rot.vertices().iter().map(|v| p.q_map[v]));
        seq.push(p.q_map[&i]);
        out.insert(walk_binomial(&ClosedWalk::new(seq), &p.graph)?);
    }
    Ok(out)
}

fn cross_check(what: &str, a: &BTreeSet<Binomial>, b: &BTreeSet<Binomial>) -> Result<()> {
    if a != b {
        return Err(Error::CrossCheck(format!(
            "{what}: {} vs {} binomials, {} only in the first, {} only in the second",
            a.len(),
            b.len(),
            a.difference(b).count(),
            b.difference(a).count()
        )));
    }
    Ok(())
}

/// Universal Gröbner basis of `P_G`, assembled over the connected
/// components (binomials of different components share no variables).
pub fn ugb(g: &Graph) -> Result<BasisReport> {
    let class = classify(g);
    let mut elements = BTreeSet::new();
    let mut lower = BTreeSet::new();
    let mut upper = BTreeSet::new();
    let mut exact = true;
    for (comp, info) in g.components().iter().zip(&class.components) {
        let cfg = build_ag(comp);
        let circ: BTreeSet<Binomial> = circuits(&cfg).into_iter().collect();
        let part = match info.kind {
            _ if info.bipartite => {
                let walks = match info.kind {
                    ComponentKind::Tree => Some(even_cycle_binomials(&prism(comp)?.graph)?),
                    ComponentKind::UnicyclicEven => Some(even_cycle_binomials(&build_h(comp)?.graph)?),
                    _ => None,
                };
                if let Some(walks) = walks {
                    cross_check("even cycles versus circuits", &walks, &circ)?;
                }
                circ.clone()
            }
            ComponentKind::UnicyclicOdd if comp.vertex_count() == comp.edge_count() && is_cycle_graph(comp) => {
                let p = prism(comp)?;
                let mut walks = even_cycle_binomials(&p.graph)?;
                walks.extend(odd_cycle_rung_walks(info.cycle.as_ref().unwrap(), &p)?);
                if !circ.is_subset(&walks) {
                    return Err(Error::CrossCheck("a circuit is missing from the walk basis".into()));
                }
                walks
            }
            _ => {
                exact = false;
                let gr: BTreeSet<Binomial> = graver(&cfg).into_iter().collect();
                upper.extend(gr);
                lower.extend(circ.iter().cloned());
                elements.extend(circ);
                continue;
            }
        };
        lower.extend(part.iter().cloned());
        upper.extend(part.iter().cloned());
        elements.extend(part);
    }
    Ok(if exact {
        BasisReport::new(BasisStatus::Exact, elements, None)
    } else {
        BasisReport::new(BasisStatus::Sandwich, elements, Some((lower, upper)))
    })
}

fn is_cycle_graph(g: &Graph) -> bool {
    g.vertices().iter().all(|v| g.degree(*v) == 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub count: usize,
    pub max_degree: u32,
    pub bipartite_bound: Option<u32>,
    pub bound_respected: Option<bool>,
}

/// Size and degree of a basis, with the bound `⌊(m + n + 1)/2⌋` for
/// bipartite graphs.
pub fn degree_stats(report: &BasisReport, g: &Graph) -> DegreeStats {
    let bound = g
        .is_bipartite()
        .then(|| (g.edge_count() + g.vertex_count()).div_ceil(2) as u32);
    DegreeStats {
        count: report.count,
        max_degree: report.max_degree,
        bipartite_bound: bound,
        bound_respected: bound.map(|b| report.max_degree <= b),
    }
}

/// Canonical-sign set of a list, for comparisons.
pub fn as_set(items: &[Binomial]) -> BTreeSet<Binomial> {
    canonical_set(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::incidence_config;
    use crate::fixtures;

    fn b(s: &str) -> Binomial {
        s.parse::<Binomial>().unwrap().canonical()
    }

    #[test]
    fn complete2_bases() {
        let cfg = build_ag(&fixtures::complete2());
        let f = b("x11*x22 - x12*x21");
        assert_eq!(circuits(&cfg), std::slice::from_ref(&f));
        assert_eq!(graver(&cfg), std::slice::from_ref(&f));
        assert!(is_primitive(&f, &cfg).unwrap());
        let scaled = Binomial::new("x11^2*x22".parse().unwrap(), "x11*x12*x21".parse().unwrap()).unwrap();
        assert!(is_primitive(&scaled, &cfg).unwrap());
        assert!(matches!(is_primitive(&b("x11 - x22"), &cfg), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn walk_binomials_of_prisms() {
        let p = prism(&fixtures::star(3)).unwrap();
        // 6-cycle p2 - p1 - p3 - q3 - q1 - q2 - p2, q_i = i + 4
        let w = ClosedWalk::new(vec![2, 1, 3, 7, 5, 6]);
        assert_eq!(walk_binomial(&w, &p.graph).unwrap(), b("x12*x21*x33 - x22*x31*x13"));
        let f = ClosedWalk::new(vec![1, 5, 6, 2]);
        assert_eq!(walk_binomial(&f, &p.graph).unwrap(), b("x11*x22 - x12*x21"));
        assert!(walk_binomial(&ClosedWalk::new(vec![1, 2, 3]), &p.graph).is_err());
        assert!(walk_binomial(&ClosedWalk::new(vec![1, 6]), &p.graph).is_err());
    }

    #[test]
    fn graph_circuits_match_matrix_circuits() {
        let triangle_prism = prism(&fixtures::triangle()).unwrap().graph;
        for h in [
            triangle_prism,
            crate::constructions::mobius(&ClosedWalk::new(vec![1, 2, 3, 4]), &fixtures::cycle(4)).unwrap().graph,
            fixtures::theta(),
            Graph::from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap(),
            Graph::from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (3, 5), (4, 5)]).unwrap(),
        ] {
            let walks: BTreeSet<Binomial> = graph_circuits(&h).unwrap().into_iter().collect();
            let matrix: BTreeSet<Binomial> = circuits(&incidence_config(&h)).into_iter().collect();
            assert_eq!(walks, matrix);
        }
        assert!(graph_circuits(&Graph::from_edges([(1, 2), (3, 4)]).unwrap()).is_err());
    }

    #[test]
    fn ugb_small_cases() {
        let r = ugb(&fixtures::star(4)).unwrap();
        assert_eq!((r.status, r.count, r.max_degree), (BasisStatus::Exact, 6, 3));
        let r = ugb(&fixtures::triangle()).unwrap();
        assert_eq!(r.status, BasisStatus::Exact);
        assert_eq!(r.max_degree, 4);
        let r = ugb(&fixtures::triangle_with_pendant()).unwrap();
        assert_eq!(r.status, BasisStatus::Sandwich);
        assert!(as_set(r.lower.as_ref().unwrap()).is_subset(&as_set(r.upper.as_ref().unwrap())));
    }

    #[test]
    fn degree_bound() {
        let g = fixtures::path(5);
        let s = degree_stats(&ugb(&g).unwrap(), &g);
        assert_eq!(s.bipartite_bound, Some(5));
        assert_eq!(s.max_degree, 5);
        assert_eq!(s.bound_respected, Some(true));
    }
}
