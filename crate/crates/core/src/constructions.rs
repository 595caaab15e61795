//! Witness graphs `H` with `P_G = I_H`: prisms, Möbius bands and their
//! clique sums.
//!
//! Vertex `i` of the input keeps its label as `p_i`; its copy `q_i` gets the
//! label `i + stride` where `stride` is one more than the largest input
//! label. Edges are named by ring variables: `z_ij = {p_i, p_j}` and
//! `z_ji = {q_i, q_j}` for `i < j`, and rungs `z_ii = {p_i, q_i}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::encoding::{heights, Heights};
use crate::error::{Error, Result};
use crate::graph::{classify, ClosedWalk, ComponentKind, Edge, Graph};
use crate::var::VarId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeRole {
    Copy1,
    Copy2,
    Rung,
    Twisted,
}

/// A constructed graph together with the provenance of its edges and
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledConstruction {
    pub graph: Graph,
    pub roles: BTreeMap<VarId, EdgeRole>,
    pub p_map: BTreeMap<u32, u32>,
    pub q_map: BTreeMap<u32, u32>,
}

impl LabeledConstruction {
    pub fn edge_by_name(&self, name: VarId) -> Option<Edge> {
        self.graph.named_edge(name)
    }
}

/// Offset used for `q`-vertices of constructions over `g`.
pub fn stride_for(g: &Graph) -> u32 {
    g.max_label().map_or(1, |m| m + 1)
}

/// Prism `w*` over a connected graph.
pub fn prism(w: &Graph) -> Result<LabeledConstruction> {
    prism_with_stride(w, stride_for(w))
}

/// Prism with an explicit `q`-offset; `stride` must exceed every label.
pub fn prism_with_stride(w: &Graph, stride: u32) -> Result<LabeledConstruction> {
    if !w.is_connected() {
        return Err(Error::Disconnected);
    }
    assert!(w.max_label().is_none_or(|m| m < stride));
    let mut builder = Builder::new(w.vertices(), stride);
    for e in w.edges() {
        let (i, j) = (e.lo(), e.hi());
        builder.edge(i, j, VarId::new(i, j), EdgeRole::Copy1, Side::P, Side::P);
        builder.edge(i, j, VarId::new(j, i), EdgeRole::Copy2, Side::Q, Side::Q);
    }
    builder.finish()
}

/// Möbius band over an even cycle `i_1, ..., i_k` (`k >= 4`) of `host`: two
/// copies of the path `i_1 - ... - i_k`, rungs, and the twisted edges
/// `z_{i_1 i_k} = {p_{i_1}, q_{i_k}}` and `z_{i_k i_1} = {p_{i_k}, q_{i_1}}`.
pub fn mobius(c: &ClosedWalk, host: &Graph) -> Result<LabeledConstruction> {
    mobius_with_stride(c, host, stride_for(host))
}

pub fn mobius_with_stride(c: &ClosedWalk, host: &Graph, stride: u32) -> Result<LabeledConstruction> {
    if !c.is_cycle() {
        return Err(Error::InvalidCycle("vertices must be pairwise distinct".into()));
    }
    if !c.is_even() || c.len() < 4 {
        return Err(Error::InvalidCycle(format!("need an even cycle of length at least 4, got length {}", c.len())));
    }
    if !host.contains_walk(c) {
        return Err(Error::InvalidCycle("cycle is not contained in the host graph".into()));
    }
    let vs = c.vertices();
    let set: BTreeSet<u32> = vs.iter().copied().collect();
    let mut builder = Builder::new(&set, stride);
    for w in vs.windows(2) {
        let (i, j) = (w[0].min(w[1]), w[0].max(w[1]));
        builder.edge(i, j, VarId::new(i, j), EdgeRole::Copy1, Side::P, Side::P);
        builder.edge(i, j, VarId::new(j, i), EdgeRole::Copy2, Side::Q, Side::Q);
    }
    let (first, last) = (vs[0], vs[vs.len() - 1]);
    builder.edge(first, last, VarId::new(first, last), EdgeRole::Twisted, Side::P, Side::Q);
    builder.edge(last, first, VarId::new(last, first), EdgeRole::Twisted, Side::P, Side::Q);
    builder.finish()
}

#[derive(Clone, Copy)]
enum Side {
    P,
    Q,
}

struct Builder {
    stride: u32,
    vertices: BTreeSet<u32>,
    edges: Vec<(u32, u32, VarId)>,
    roles: BTreeMap<VarId, EdgeRole>,
    p_map: BTreeMap<u32, u32>,
    q_map: BTreeMap<u32, u32>,
}

impl Builder {
    fn new(originals: &BTreeSet<u32>, stride: u32) -> Self {
        let mut b = Builder {
            stride,
            vertices: BTreeSet::new(),
            edges: Vec::new(),
            roles: BTreeMap::new(),
            p_map: BTreeMap::new(),
            q_map: BTreeMap::new(),
        };
        for &v in originals {
            b.p_map.insert(v, v);
            b.q_map.insert(v, v + stride);
            b.vertices.insert(v);
            b.vertices.insert(v + stride);
            b.edges.push((v, v + stride, VarId::Diag(v)));
            b.roles.insert(VarId::Diag(v), EdgeRole::Rung);
        }
        b
    }

    fn label(&self, v: u32, side: Side) -> u32 {
        match side {
            Side::P => v,
            Side::Q => v + self.stride,
        }
    }

    fn edge(&mut self, a: u32, b: u32, name: VarId, role: EdgeRole, sa: Side, sb: Side) {
        self.edges.push((self.label(a, sa), self.label(b, sb), name));
        self.roles.insert(name, role);
    }

    fn finish(self) -> Result<LabeledConstruction> {
        Ok(LabeledConstruction {
            graph: Graph::from_named_edges(self.vertices, self.edges)?,
            roles: self.roles,
            p_map: self.p_map,
            q_map: self.q_map,
        })
    }
}

/// Clique sum of two constructions glued along `shared`, which must be the
/// full intersection of their vertex sets and induce a complete graph in
/// both.
pub fn clique_sum(
    g1: &LabeledConstruction,
    g2: &LabeledConstruction,
    shared: &BTreeSet<u32>,
) -> Result<LabeledConstruction> {
    let common: BTreeSet<u32> = g1.graph.vertices().intersection(g2.graph.vertices()).copied().collect();
    if &common != shared {
        return Err(Error::CliqueSum(format!(
            "vertex sets intersect in {common:?}, expected {shared:?}"
        )));
    }
    let shared_vec: Vec<u32> = shared.iter().copied().collect();
    for (k, &a) in shared_vec.iter().enumerate() {
        for &b in &shared_vec[k + 1..] {
            if !g1.graph.has_edge(a, b) || !g2.graph.has_edge(a, b) {
                return Err(Error::CliqueSum(format!("shared vertices {a} and {b} are not adjacent in both graphs")));
            }
        }
    }
    let graph = g1.graph.union(&g2.graph)?;
    let mut roles = g1.roles.clone();
    for (name, role) in &g2.roles {
        if let Some(r) = roles.insert(*name, *role) {
            if r != *role {
                return Err(Error::CliqueSum(format!("edge {name} has conflicting roles")));
            }
        }
    }
    let merge = |a: &BTreeMap<u32, u32>, b: &BTreeMap<u32, u32>| -> Result<BTreeMap<u32, u32>> {
        let mut out = a.clone();
        for (k, v) in b {
            if out.insert(*k, *v).is_some_and(|old| old != *v) {
                return Err(Error::CliqueSum(format!("vertex {k} is copied inconsistently")));
            }
        }
        Ok(out)
    };
    Ok(LabeledConstruction {
        graph,
        roles,
        p_map: merge(&g1.p_map, &g2.p_map)?,
        q_map: merge(&g1.q_map, &g2.q_map)?,
    })
}

fn empty_construction() -> LabeledConstruction {
    LabeledConstruction {
        graph: Graph::from_named_edges([], []).expect("empty graph"),
        roles: BTreeMap::new(),
        p_map: BTreeMap::new(),
        q_map: BTreeMap::new(),
    }
}

/// A graph `H` with `P_G = I_H`, built per component: the prism for trees
/// and odd unicyclic components, and for even unicyclic components the
/// Möbius band of the cycle glued along rungs to the prisms of the hanging
/// trees (cycle vertices in ascending order).
pub fn build_h(g: &Graph) -> Result<LabeledConstruction> {
    let stride = stride_for(g);
    let class = classify(g);
    let mut out = empty_construction();
    for (comp, info) in g.components().iter().zip(&class.components) {
        let part = match info.kind {
            ComponentKind::Multicycle => return Err(Error::NoWitnessGraph(info.vertices.clone())),
            ComponentKind::Tree | ComponentKind::UnicyclicOdd => prism_with_stride(comp, stride)?,
            ComponentKind::UnicyclicEven => {
                let cycle = info.cycle.as_ref().expect("unicyclic component has its cycle");
                even_unicyclic_h(comp, cycle, stride)?
            }
        };
        out = clique_sum(&out, &part, &BTreeSet::new())?;
    }
    Ok(out)
}

fn even_unicyclic_h(comp: &Graph, cycle: &ClosedWalk, stride: u32) -> Result<LabeledConstruction> {
    let mut h = mobius_with_stride(cycle, comp, stride)?;
    let cycle_edges: BTreeSet<Edge> = cycle.edges().map(|(a, b)| Edge::new(a, b)).collect();
    let forest = comp.without_edges(&cycle_edges);
    let mut on_cycle: Vec<u32> = cycle.vertices().to_vec();
    on_cycle.sort_unstable();
    for v in on_cycle {
        let tree = forest
            .components()
            .into_iter()
            .find(|t| t.vertices().contains(&v))
            .expect("every vertex lies in a component");
        if tree.edge_count() == 0 {
            continue;
        }
        let t_star = prism_with_stride(&tree, stride)?;
        h = clique_sum(&h, &t_star, &BTreeSet::from([v, v + stride]))?;
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Every `f_ij` is the binomial of the 4-cycle `(z_ii, z_ji, z_jj, z_ij)`.
    pub containment_ok: bool,
    pub height_ok: bool,
    /// The edge names of `H` are exactly the variables of the ring of `P_G`.
    pub variables_match: bool,
    pub equal: bool,
    pub heights: Heights,
    pub failed_edges: Vec<(u32, u32)>,
}

/// Checks `P_G = I_H`: both ideals are prime, so containment of the
/// generators together with equal heights suffices.
pub fn verify_pg_equals_ih(g: &Graph, h: &LabeledConstruction) -> Result<WitnessReport> {
    let mut required: BTreeSet<VarId> = g.vertices().iter().map(|v| VarId::Diag(*v)).collect();
    for e in g.edges() {
        required.insert(VarId::new(e.lo(), e.hi()));
        required.insert(VarId::new(e.hi(), e.lo()));
    }
    let names: BTreeSet<VarId> = h
        .graph
        .edge_names()
        .map(|m| m.values().copied().collect())
        .unwrap_or_default();
    let missing: Vec<VarId> = required.difference(&names).copied().collect();
    if !missing.is_empty() {
        return Err(Error::MissingEdgeNames(missing));
    }
    let variables_match = names == required;

    let mut failed_edges = Vec::new();
    for e in g.edges() {
        let (i, j) = (e.lo(), e.hi());
        let get = |v: VarId| h.edge_by_name(v).expect("name checked above");
        let quad = [get(VarId::Diag(i)), get(VarId::new(j, i)), get(VarId::Diag(j)), get(VarId::new(i, j))];
        if !(is_four_cycle(&quad) && incidence_identity(&quad)) {
            failed_edges.push((i, j));
        }
    }
    let heights = heights(g, &h.graph);
    let containment_ok = failed_edges.is_empty();
    let height_ok = heights.ht_pg == heights.ht_ih;
    Ok(WitnessReport {
        containment_ok,
        height_ok,
        variables_match,
        equal: containment_ok && height_ok && variables_match,
        heights,
        failed_edges,
    })
}

/// Edges `e_0, e_1, e_2, e_3` traversed in this order form a 4-cycle.
fn is_four_cycle(q: &[Edge; 4]) -> bool {
    for start in [q[0].lo(), q[0].hi()] {
        let mut vs = vec![start];
        let mut cur = start;
        let mut ok = true;
        for e in q {
            match e.other(cur) {
                Some(next) => {
                    vs.push(next);
                    cur = next;
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && cur == start {
            let distinct: BTreeSet<u32> = vs[..4].iter().copied().collect();
            if distinct.len() == 4 {
                return true;
            }
        }
    }
    false
}

/// `b_ii + b_jj = b_ij + b_ji` for the incidence columns.
fn incidence_identity(q: &[Edge; 4]) -> bool {
    let ends = |a: &Edge, b: &Edge| {
        let mut v = vec![a.lo(), a.hi(), b.lo(), b.hi()];
        v.sort_unstable();
        v
    };
    ends(&q[0], &q[2]) == ends(&q[1], &q[3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{enumerate_cycles, Parity};

    #[test]
    fn prism_sizes() {
        let p = prism(&fixtures::prism_example_graph()).unwrap();
        assert_eq!((p.graph.vertex_count(), p.graph.edge_count()), (8, 12));
        for n in 2..=6 {
            let p = prism(&fixtures::star(n)).unwrap();
            assert_eq!(p.graph.vertex_count() as u32, 2 * n);
            assert_eq!(p.graph.edge_count() as u32, 3 * n - 2);
        }
        let single = prism(&Graph::new([1], []).unwrap()).unwrap();
        assert_eq!((single.graph.vertex_count(), single.graph.edge_count()), (2, 1));
        assert!(matches!(prism(&Graph::from_edges([(1, 2), (3, 4)]).unwrap()), Err(Error::Disconnected)));
    }

    #[test]
    fn prism_naming_follows_copies() {
        let p = prism(&fixtures::triangle_with_pendant()).unwrap();
        // q_i = i + 5
        assert_eq!(p.edge_by_name("x32".parse().unwrap()), Some(Edge::new(7, 8)));
        assert_eq!(p.edge_by_name("x23".parse().unwrap()), Some(Edge::new(2, 3)));
        assert_eq!(p.edge_by_name("x44".parse().unwrap()), Some(Edge::new(4, 9)));
        assert_eq!(p.roles[&"x41".parse().unwrap()], EdgeRole::Copy2);
    }

    #[test]
    fn mobius_of_four_cycle() {
        let host = fixtures::cycle(4);
        let c = ClosedWalk::new(vec![1, 2, 3, 4]);
        let m = mobius(&c, &host).unwrap();
        assert_eq!((m.graph.vertex_count(), m.graph.edge_count()), (8, 12));
        assert_eq!(m.edge_by_name(VarId::new(1, 4)), Some(Edge::new(1, 9)));
        assert_eq!(m.edge_by_name(VarId::new(4, 1)), Some(Edge::new(4, 6)));
        assert!(!m.graph.is_bipartite());
        let odd = ClosedWalk::new(vec![1, 9, 4, 3, 2]);
        assert!(m.graph.contains_walk(&odd));
        let twisted: BTreeSet<Edge> = [Edge::new(1, 9), Edge::new(4, 6)].into();
        assert!(m.graph.without_edges(&twisted).is_bipartite());
        assert!(enumerate_cycles(&m.graph, Parity::Even).iter().any(|w| w.len() == 8));

        assert!(mobius(&ClosedWalk::new(vec![1, 2, 3]), &fixtures::triangle()).is_err());
        assert!(mobius(&ClosedWalk::new(vec![1, 3, 2, 4]), &host).is_err());
    }

    #[test]
    fn clique_sum_checks_overlap() {
        let a = prism_with_stride(&fixtures::path(2), 10).unwrap();
        let b = prism_with_stride(&Graph::from_edges([(3, 4)]).unwrap(), 10).unwrap();
        let disjoint = clique_sum(&a, &b, &BTreeSet::new()).unwrap();
        assert_eq!(disjoint.graph.edge_count(), 8);
        assert!(clique_sum(&a, &b, &BTreeSet::from([1])).is_err());
        let rung = prism(&Graph::new([1], []).unwrap()).unwrap();
        let same = clique_sum(&rung, &rung, &rung.graph.vertices().clone()).unwrap();
        assert_eq!(same, rung);
        assert!(clique_sum(&a, &a, &a.graph.vertices().clone()).is_err());
    }

    #[test]
    fn cycle4_pendants_witness_shape() {
        let h = build_h(&fixtures::cycle4_with_pendants()).unwrap();
        assert_eq!((h.graph.vertex_count(), h.graph.edge_count()), (12, 18));
        let r = verify_pg_equals_ih(&fixtures::cycle4_with_pendants(), &h).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!(r.heights.ht_ih, 6);
    }

    #[test]
    fn theta_has_no_witness() {
        assert!(matches!(build_h(&fixtures::theta()), Err(Error::NoWitnessGraph(_))));
    }

    #[test]
    fn even_cycle_prism_fails_height() {
        for k in [4, 6] {
            let c = fixtures::cycle(k);
            let r = verify_pg_equals_ih(&c, &prism(&c).unwrap()).unwrap();
            assert!(r.containment_ok && !r.height_ok && !r.equal);
            assert_eq!(r.heights.ht_ih as u32, k + 1);
        }
    }

    #[test]
    fn tree_sizes() {
        for t in fixtures::all_trees(5) {
            let h = build_h(&t).unwrap();
            let g = t.edge_count();
            assert_eq!(h.graph.vertex_count(), 2 * g + 2);
            assert_eq!(h.graph.edge_count(), 3 * g + 1);
        }
    }

    #[test]
    fn missing_names_are_an_error() {
        let g = fixtures::complete2();
        let h = LabeledConstruction {
            graph: fixtures::cycle(4),
            ..empty_construction()
        };
        assert!(matches!(verify_pg_equals_ih(&g, &h), Err(Error::MissingEdgeNames(_))));
    }
}
