//! Simple graphs, closed walks, component classification and cycle
//! enumeration.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::var::VarId;

/// Unordered edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(u32, u32);

impl Edge {
    /// Panics on loops; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: u32, b: u32) -> Self {
        Self::try_new(a, b).expect("loops are not edges of a simple graph")
    }

    pub fn try_new(a: u32, b: u32) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(&self) -> u32 {
        self.0
    }

    pub fn hi(&self) -> u32 {
        self.1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: u32) -> Option<u32> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

/// A labeled simple graph. Vertex labels are preserved by every operation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<u32>,
    edges: BTreeSet<Edge>,
    edge_names: Option<BTreeMap<Edge, VarId>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and dangling endpoints.
    pub fn new(
        vertices: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u32> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let e = Edge::try_new(a, b)
                .ok_or_else(|| Error::InvalidGraph(format!("loop at vertex {a}")))?;
            if !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} has an endpoint outside the vertex set"
                )));
            }
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!("repeated edge {{{a},{b}}}")));
            }
        }
        Ok(Graph {
            vertices,
            edges: set,
            edge_names: None,
        })
    }

    /// Graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let edges: Vec<(u32, u32)> = edges.into_iter().collect();
        let vertices = edges.iter().flat_map(|&(a, b)| [a, b]);
        Graph::new(vertices.collect::<Vec<_>>(), edges)
    }

    /// Builds a graph whose edges carry variable names.
    pub fn from_named_edges(
        vertices: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = (u32, u32, VarId)>,
    ) -> Result<Self> {
        let edges: Vec<(u32, u32, VarId)> = edges.into_iter().collect();
        let mut g = Graph::new(vertices, edges.iter().map(|&(a, b, _)| (a, b)))?;
        let mut names = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (a, b, name) in edges {
            if !seen.insert(name) {
                return Err(Error::InvalidGraph(format!("edge name {} used twice", name.edge_name())));
            }
            names.insert(Edge::new(a, b), name);
        }
        g.edge_names = Some(names);
        Ok(g)
    }

    pub fn vertices(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_names(&self) -> Option<&BTreeMap<Edge, VarId>> {
        self.edge_names.as_ref()
    }

    pub fn edge_name(&self, e: Edge) -> Option<VarId> {
        self.edge_names.as_ref().and_then(|m| m.get(&e).copied())
    }

    /// Edge carrying the given name.
    pub fn named_edge(&self, name: VarId) -> Option<Edge> {
        self.edge_names
            .as_ref()
            .and_then(|m| m.iter().find(|(_, v)| **v == name).map(|(e, _)| *e))
    }

    /// `true` when every edge carries a name.
    pub fn is_fully_named(&self) -> bool {
        match &self.edge_names {
            Some(m) => self.edges.iter().all(|e| m.contains_key(e)),
            None => self.edges.is_empty(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        Edge::try_new(a, b).is_some_and(|e| self.edges.contains(&e))
    }

    pub fn max_label(&self) -> Option<u32> {
        self.vertices.iter().next_back().copied()
    }

    pub fn adjacency(&self) -> BTreeMap<u32, Vec<u32>> {
        let mut adj: BTreeMap<u32, Vec<u32>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.0).unwrap().push(e.1);
            adj.get_mut(&e.1).unwrap().push(e.0);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Induced subgraph on `keep`; edge names are carried over.
    pub fn induced(&self, keep: &BTreeSet<u32>) -> Graph {
        let edges: BTreeSet<Edge> = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.0) && keep.contains(&e.1))
            .copied()
            .collect();
        self.with_parts(keep.intersection(&self.vertices).copied().collect(), edges)
    }

    /// Same vertex set, edges in `drop` removed.
    pub fn without_edges(&self, drop: &BTreeSet<Edge>) -> Graph {
        let edges = self.edges.difference(drop).copied().collect();
        self.with_parts(self.vertices.clone(), edges)
    }

    /// Drops vertices of degree zero.
    pub fn without_isolated(&self) -> Graph {
        let keep: BTreeSet<u32> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        self.with_parts(keep, self.edges.clone())
    }

    fn with_parts(&self, vertices: BTreeSet<u32>, edges: BTreeSet<Edge>) -> Graph {
        let edge_names = self.edge_names.as_ref().map(|m| {
            m.iter()
                .filter(|(e, _)| edges.contains(e))
                .map(|(e, v)| (*e, *v))
                .collect()
        });
        Graph {
            vertices,
            edges,
            edge_names,
        }
    }

    /// Union of two graphs. Edge names must agree on common edges.
    pub(crate) fn union(&self, other: &Graph) -> Result<Graph> {
        let vertices = self.vertices.union(&other.vertices).copied().collect();
        let edges = self.edges.union(&other.edges).copied().collect();
        let edge_names = match (&self.edge_names, &other.edge_names) {
            (None, None) => None,
            (a, b) => {
                let mut names: BTreeMap<Edge, VarId> = a.clone().unwrap_or_default();
                for (e, v) in b.iter().flatten() {
                    if let Some(prev) = names.insert(*e, *v) {
                        if prev != *v {
                            return Err(Error::CliqueSum(format!(
                                "edge {{{},{}}} named both {} and {}",
                                e.0,
                                e.1,
                                prev.edge_name(),
                                v.edge_name()
                            )));
                        }
                    }
                }
                let mut seen = BTreeSet::new();
                for v in names.values() {
                    if !seen.insert(*v) {
                        return Err(Error::CliqueSum(format!(
                            "edge name {} used on two different edges",
                            v.edge_name()
                        )));
                    }
                }
                Some(names)
            }
        };
        Ok(Graph {
            vertices,
            edges,
            edge_names,
        })
    }

    /// Connected components ordered by their smallest vertex label.
    pub fn components(&self) -> Vec<Graph> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(self.induced(&comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring of the graph, `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<(BTreeSet<u32>, BTreeSet<u32>)> {
        let adj = self.adjacency();
        let mut colour: BTreeMap<u32, bool> = BTreeMap::new();
        for &start in &self.vertices {
            if colour.contains_key(&start) {
                continue;
            }
            colour.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[&v];
                for &w in &adj[&v] {
                    match colour.get(&w) {
                        Some(&cw) if cw == c => return None,
                        Some(_) => {}
                        None => {
                            colour.insert(w, !c);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        let (a, b): (Vec<_>, Vec<_>) = colour.into_iter().partition(|(_, c)| !*c);
        Some((
            a.into_iter().map(|(v, _)| v).collect(),
            b.into_iter().map(|(v, _)| v).collect(),
        ))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Number of connected components that are bipartite.
    pub fn bipartite_component_count(&self) -> usize {
        self.components().iter().filter(|c| c.is_bipartite()).count()
    }

    /// Parses the edge-list text format. A trailing `# name=z..` comment
    /// on an edge line names that edge.
    pub fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
        let mut edges = Vec::new();
        let mut names = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |msg: String| ParseError::EdgeList { line: line_no, msg };
            let (body, comment) = match raw.split_once('#') {
                Some((b, c)) => (b, Some(c)),
                None => (raw, None),
            };
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(err(format!("expected two vertex labels, found `{body}`")));
            }
            let parse = |s: &str| {
                s.parse::<u32>()
                    .map_err(|_| err(format!("`{s}` is not a non-negative integer")))
            };
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            if a == b {
                return Err(err(format!("loop at vertex {a}")));
            }
            let name = comment
                .and_then(|c| c.trim().strip_prefix("name="))
                .map(|n| VarId::parse_any(n).map_err(|e| err(e.to_string())))
                .transpose()?;
            edges.push((a, b));
            names.push(name);
        }
        let named = names.iter().filter(|n| n.is_some()).count();
        let result = if named == 0 {
            Graph::from_edges(edges)
        } else if named == edges.len() {
            let vertices: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            Graph::from_named_edges(
                vertices,
                edges.iter().zip(&names).map(|(&(a, b), n)| (a, b, n.unwrap())),
            )
        } else {
            return Err(ParseError::EdgeList {
                line: 0,
                msg: "either all edges or none must carry a name".into(),
            });
        };
        result.map_err(|e| ParseError::EdgeList {
            line: 0,
            msg: e.to_string(),
        })
    }

    /// Serializes to the edge-list format; named edges get a trailing
    /// `# name=z..` comment. Edges are emitted in name order when named.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        match &self.edge_names {
            Some(names) if self.is_fully_named() => {
                let mut by_name: Vec<(VarId, Edge)> = names.iter().map(|(e, v)| (*v, *e)).collect();
                by_name.sort();
                for (v, e) in by_name {
                    let _ = writeln!(out, "{} {} # name={}", e.0, e.1, v.edge_name());
                }
            }
            _ => {
                for e in &self.edges {
                    let _ = writeln!(out, "{} {}", e.0, e.1);
                }
            }
        }
        out
    }

    /// Checks that `walk` is a closed walk of this graph.
    pub fn contains_walk(&self, walk: &ClosedWalk) -> bool {
        walk.len() >= 2 && walk.edges().all(|(a, b)| self.has_edge(a, b))
    }
}

/// A closed walk given by its vertex sequence `v_0, ..., v_{q-1}`; the
/// edges are `{v_i, v_{i+1}}` with indices taken modulo `q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClosedWalk {
    vertices: Vec<u32>,
}

impl ClosedWalk {
    pub fn new(vertices: Vec<u32>) -> Self {
        ClosedWalk { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    /// Consecutive vertex pairs, closing pair included.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let q = self.vertices.len();
        (0..q).map(move |i| (self.vertices[i], self.vertices[(i + 1) % q]))
    }

    /// Pairwise distinct vertices and length at least three.
    pub fn is_cycle(&self) -> bool {
        let distinct: BTreeSet<u32> = self.vertices.iter().copied().collect();
        self.len() >= 3 && distinct.len() == self.len()
    }

    /// Rotation starting at `v` (first occurrence), same direction.
    pub fn rotated_to(&self, v: u32) -> Option<ClosedWalk> {
        let pos = self.vertices.iter().position(|&x| x == v)?;
        let mut vs = self.vertices[pos..].to_vec();
        vs.extend_from_slice(&self.vertices[..pos]);
        Some(ClosedWalk::new(vs))
    }

    /// Lexicographically least vertex sequence over all rotations and both
    /// directions.
    pub fn canonical(&self) -> ClosedWalk {
        let q = self.vertices.len();
        if q == 0 {
            return self.clone();
        }
        let rev: Vec<u32> = self.vertices.iter().rev().copied().collect();
        let mut best: Option<Vec<u32>> = None;
        for seq in [&self.vertices, &rev] {
            for s in 0..q {
                let cand: Vec<u32> = (0..q).map(|i| seq[(s + i) % q]).collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        ClosedWalk::new(best.unwrap())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    fn accepts(self, len: usize) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Every simple cycle of `g` exactly once, in canonical form, sorted by
/// length and then by vertex sequence.
///
/// Backtracking search rooted at each vertex `s` that only visits vertices
/// larger than `s`; a cycle is reported when its second vertex is smaller
/// than its last, which fixes the direction.
pub fn enumerate_cycles(g: &Graph, parity: Parity) -> Vec<ClosedWalk> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    for &s in g.vertices() {
        let mut path = vec![s];
        let mut on_path = BTreeSet::from([s]);
        extend_cycles(&adj, s, &mut path, &mut on_path, parity, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    out
}

fn extend_cycles(
    adj: &BTreeMap<u32, Vec<u32>>,
    start: u32,
    path: &mut Vec<u32>,
    on_path: &mut BTreeSet<u32>,
    parity: Parity,
    out: &mut Vec<ClosedWalk>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[&last] {
        if w == start {
            if path.len() >= 3 && path[1] < last && parity.accepts(path.len()) {
                out.push(ClosedWalk::new(path.clone()));
            }
        } else if w > start && !on_path.contains(&w) {
            path.push(w);
            on_path.insert(w);
            extend_cycles(adj, start, path, on_path, parity, out);
            on_path.remove(&w);
            path.pop();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentKind {
    Tree,
    UnicyclicEven,
    UnicyclicOdd,
    Multicycle,
}

impl ComponentKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComponentKind::Tree => "tree",
            ComponentKind::UnicyclicEven => "unicyclic-even",
            ComponentKind::UnicyclicOdd => "unicyclic-odd",
            ComponentKind::Multicycle => "multicycle",
        }
    }

    pub fn is_unicyclic(&self) -> bool {
        matches!(self, ComponentKind::UnicyclicEven | ComponentKind::UnicyclicOdd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentClass {
    pub vertices: Vec<u32>,
    pub edge_count: usize,
    pub kind: ComponentKind,
    pub bipartite: bool,
    pub parts: Option<(Vec<u32>, Vec<u32>)>,
    /// The unique cycle of a unicyclic component, canonical rotation.
    pub cycle: Option<ClosedWalk>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    pub components: Vec<ComponentClass>,
}

impl GraphClass {
    pub fn bipartite(&self) -> bool {
        self.components.iter().all(|c| c.bipartite)
    }

    /// Every component has at most one cycle.
    pub fn admits_witness(&self) -> bool {
        self.components.iter().all(|c| c.kind != ComponentKind::Multicycle)
    }
}

pub fn classify(g: &Graph) -> GraphClass {
    let components = g
        .components()
        .into_iter()
        .map(|c| classify_component(&c))
        .collect();
    GraphClass { components }
}

fn classify_component(c: &Graph) -> ComponentClass {
    let (n, m) = (c.vertex_count(), c.edge_count());
    let parts = c
        .bipartition()
        .map(|(a, b)| (a.into_iter().collect(), b.into_iter().collect()));
    let (kind, cycle) = if m + 1 == n {
        (ComponentKind::Tree, None)
    } else if m == n {
        let cycle = enumerate_cycles(c, Parity::All)
            .into_iter()
            .next()
            .expect("a connected graph with n edges has a cycle");
        let kind = if cycle.is_even() {
            ComponentKind::UnicyclicEven
        } else {
            ComponentKind::UnicyclicOdd
        };
        (kind, Some(cycle))
    } else {
        (ComponentKind::Multicycle, None)
    };
    ComponentClass {
        vertices: c.vertices().iter().copied().collect(),
        edge_count: m,
        kind,
        bipartite: parts.is_some(),
        parts,
        cycle,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(Graph::from_edges([(1, 1)]).is_err());
        assert!(Graph::from_edges([(1, 2), (2, 1)]).is_err());
        assert!(Graph::new([1], [(1, 2)]).is_err());
    }

    #[test]
    fn components_of_disjoint_edges() {
        let g = Graph::from_edges([(3, 4), (1, 2)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices().iter().copied().collect::<Vec<_>>(), [1, 2]);
        assert_eq!(comps[1].edge_count(), 1);
        assert!(Graph::default().components().is_empty());
        assert_eq!(fixtures::hexagon_with_trees().components().len(), 1);
    }

    #[test]
    fn classify_triangle_with_pendant() {
        let g = Graph::from_edges([(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        let class = classify(&g);
        assert_eq!(class.components.len(), 1);
        let c = &class.components[0];
        assert_eq!(c.kind, ComponentKind::UnicyclicOdd);
        assert!(!c.bipartite);
        assert_eq!(c.cycle.as_ref().unwrap().vertices(), [1, 2, 3]);
    }

    #[test]
    fn classify_path_and_even_unicyclic() {
        let c = &classify(&fixtures::path(5)).components[0];
        assert_eq!(c.kind, ComponentKind::Tree);
        assert!(c.bipartite);

        let c = &classify(&fixtures::cycle4_with_pendants()).components[0];
        assert_eq!(c.kind, ComponentKind::UnicyclicEven);
        assert!(c.bipartite);
        assert_eq!(c.cycle.as_ref().unwrap().vertices(), [1, 2, 3, 4]);
        let (a, b) = c.parts.clone().unwrap();
        assert_eq!(a, [1, 3]);
        assert_eq!(b, [2, 4, 5, 6]);
    }

    #[test]
    fn cycle_counts_of_prisms() {
        let triangle = Graph::from_edges([(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(enumerate_cycles(&triangle, Parity::All).len(), 1);
        assert!(enumerate_cycles(&triangle, Parity::Even).is_empty());

        let star = crate::constructions::prism(&fixtures::star(4)).unwrap();
        let lens: Vec<usize> = enumerate_cycles(&star.graph, Parity::All)
            .iter()
            .map(|c| c.len())
            .collect();
        assert_eq!(lens, [4, 4, 4, 6, 6, 6]);

        let path = crate::constructions::prism(&fixtures::path(5)).unwrap();
        let cycles = enumerate_cycles(&path.graph, Parity::Even);
        let count = |k: usize| cycles.iter().filter(|c| c.len() == k).count();
        assert_eq!([count(4), count(6), count(8), count(10)], [4, 3, 2, 1]);
    }

    #[test]
    fn cycles_are_canonical() {
        let g = fixtures::example_graph();
        for c in enumerate_cycles(&g, Parity::All) {
            assert_eq!(c.canonical(), c);
            assert!(c.is_cycle());
            assert!(g.contains_walk(&c));
        }
    }

    #[test]
    fn edge_list_round_trip_with_names() {
        let h = crate::constructions::prism(&fixtures::path(3)).unwrap().graph;
        let text = h.to_edge_list();
        assert!(text.contains("# name=z11"));
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("1 2\n3\n").is_err());
        assert!(Graph::parse_edge_list("1 x\n").is_err());
        assert!(Graph::parse_edge_list("2 2\n").is_err());
        let g = Graph::parse_edge_list("# comment\n\n1 2\n 2 3 \n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }
}
