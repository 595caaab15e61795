//! Standard graph families and the named example graphs used throughout the
//! test battery and the reproduction suite.

use crate::graph::Graph;

/// Vertices `1..=5`, edges `{1,2},{2,3},{3,4},{1,4},{1,5},{3,5}`.
pub fn example_graph() -> Graph {
    Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (3, 5)]).unwrap()
}

/// Triangle `1,2,3` with the pendant edge `{1,4}`.
pub fn triangle_with_pendant() -> Graph {
    Graph::from_edges([(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap()
}

/// Triangle `1,3,4` with the pendant edge `{1,2}`: the 4-vertex, 4-edge
/// graph used to illustrate the prism.
pub fn prism_example_graph() -> Graph {
    Graph::from_edges([(1, 2), (1, 3), (1, 4), (3, 4)]).unwrap()
}

/// The 4-cycle `1-2-3-4` with pendant edges `{1,5}` and `{1,6}`.
pub fn cycle4_with_pendants() -> Graph {
    Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (1, 6)]).unwrap()
}

/// The 12-vertex bipartite unicyclic graph: a 6-cycle with hanging trees.
pub fn hexagon_with_trees() -> Graph {
    Graph::from_edges([
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (1, 6),
        (1, 7),
        (1, 8),
        (2, 9),
        (3, 10),
        (10, 11),
        (10, 12),
    ])
    .unwrap()
}

pub fn complete2() -> Graph {
    Graph::from_edges([(1, 2)]).unwrap()
}

pub fn triangle() -> Graph {
    cycle(3)
}

/// Path on vertices `1..=n`.
pub fn path(n: u32) -> Graph {
    assert!(n >= 1);
    Graph::new(1..=n, (1..n).map(|i| (i, i + 1))).unwrap()
}

/// Star with centre `1` and leaves `2..=n`.
pub fn star(n: u32) -> Graph {
    assert!(n >= 1);
    Graph::new(1..=n, (2..=n).map(|i| (1, i))).unwrap()
}

/// Cycle `1-2-...-k-1`.
pub fn cycle(k: u32) -> Graph {
    assert!(k >= 3);
    Graph::new(1..=k, (1..=k).map(|i| (i, i % k + 1))).unwrap()
}

/// Two vertices joined by three internally disjoint paths of length two.
pub fn theta() -> Graph {
    Graph::from_edges([(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)]).unwrap()
}

/// Every labelled tree on `1..=n`, one per Prüfer sequence.
pub fn all_trees(n: u32) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::new([1], []).unwrap()];
    }
    if n == 2 {
        return vec![complete2()];
    }
    let len = (n - 2) as usize;
    let total = (n as usize).pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push((c % n as usize) as u32 + 1);
            c /= n as usize;
        }
        out.push(tree_from_pruefer(n, &seq));
    }
    out
}

fn tree_from_pruefer(n: u32, seq: &[u32]) -> Graph {
    let mut degree = vec![1u32; n as usize + 1];
    for &s in seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (1..=n).find(|&v| degree[v as usize] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf as usize] -= 1;
        degree[s as usize] -= 1;
    }
    let rest: Vec<u32> = (1..=n).filter(|&v| degree[v as usize] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(1..=n, edges).unwrap()
}

/// One tree on `1..=n` per isomorphism class.
pub fn nonisomorphic_trees(n: u32) -> Vec<Graph> {
    let mut seen = std::collections::BTreeSet::new();
    all_trees(n).into_iter().filter(|t| seen.insert(tree_code(t))).collect()
}

/// Smallest rooted encoding over all roots.
fn tree_code(t: &Graph) -> String {
    let adj = t.adjacency();
    t.vertices().iter().map(|&r| rooted_code(&adj, r, 0)).min().unwrap_or_default()
}

fn rooted_code(adj: &std::collections::BTreeMap<u32, Vec<u32>>, v: u32, parent: u32) -> String {
    let mut kids: Vec<String> = adj.get(&v).into_iter().flatten().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}
