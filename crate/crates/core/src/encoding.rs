//! Vector configurations attached to graphs: `A_G` for the ideal of diagonal
//! 2-minors, and incidence configurations for graph toric ideals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Binomial, Monomial};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matrix::{IntMatrix, IntVector};
use crate::var::VarId;

/// Named integer vectors in `Z^d`; column order is the order of `columns`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfiguration {
    ambient_dim: usize,
    columns: Vec<(VarId, IntVector)>,
    matrix: IntMatrix,
    row_labels: Vec<String>,
}

impl VectorConfiguration {
    pub fn new(ambient_dim: usize, columns: Vec<(VarId, IntVector)>, row_labels: Vec<String>) -> Self {
        assert_eq!(row_labels.len(), ambient_dim);
        let vectors: Vec<IntVector> = columns.iter().map(|(_, v)| v.clone()).collect();
        let names: Vec<VarId> = columns.iter().map(|(n, _)| *n).collect();
        let matrix = IntMatrix::from_columns(ambient_dim, &vectors).with_column_names(names);
        VectorConfiguration {
            ambient_dim,
            columns,
            matrix,
            row_labels,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn columns(&self) -> &[(VarId, IntVector)] {
        &self.columns
    }

    pub fn column(&self, v: VarId) -> Option<&IntVector> {
        self.columns.iter().find(|(n, _)| *n == v).map(|(_, c)| c)
    }

    pub fn variables(&self) -> Vec<VarId> {
        self.columns.iter().map(|(n, _)| *n).collect()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Meaning of each coordinate (`t1`, ... for `A_G`, vertex labels for
    /// incidence configurations).
    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Binomial with exponent vector `u` over the columns.
    pub fn binomial(&self, u: &IntVector) -> Option<Binomial> {
        let u = u.to_i64()?;
        Binomial::from_exponent_vector(&self.variables(), &u)
    }
}

/// `A_G` with edges in sorted order.
pub fn build_ag(g: &Graph) -> VectorConfiguration {
    let edges: Vec<Edge> = g.edges().iter().copied().collect();
    build_ag_with_edge_order(g, &edges).expect("sorted edge list is a permutation")
}

/// `A_G` with the edge coordinates `n+1, ..., n+m` assigned in the given
/// order, which must list every edge of `g` once.
///
/// Vertices are renumbered `1..n` in ascending label order for the
/// coordinates; variable names keep the original labels. Columns are
/// `a_ij, a_ji` per edge (`i < j`, `a_ij` carrying the negative entry),
/// then `a_jj` per vertex.
pub fn build_ag_with_edge_order(g: &Graph, edges: &[Edge]) -> Result<VectorConfiguration> {
    let mut sorted = edges.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != edges.len() || sorted.iter().ne(g.edges().iter()) {
        return Err(Error::InvalidGraph("edge order must list every edge exactly once".into()));
    }
    let index: BTreeMap<u32, usize> = g.vertices().iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let n = g.vertex_count();
    let d = n + edges.len();
    let mut columns = Vec::with_capacity(2 * edges.len() + n);
    for (k, e) in edges.iter().enumerate() {
        let (i, j) = (e.lo(), e.hi());
        let mut a = vec![0i64; d];
        a[index[&i]] = 1;
        a[index[&j]] = 1;
        a[n + k] = -1;
        columns.push((VarId::new(i, j), IntVector::from_i64(&a)));
        columns.push((VarId::new(j, i), IntVector::unit(d, n + k)));
    }
    for (k, v) in g.vertices().iter().enumerate() {
        columns.push((VarId::Diag(*v), IntVector::unit(d, k)));
    }
    let row_labels = (1..=d).map(|r| format!("t{r}")).collect();
    Ok(VectorConfiguration::new(d, columns, row_labels))
}

/// The binomials `f_ij = x_ii x_jj - x_ij x_ji`, one per edge, in edge order.
pub fn generators_pg(g: &Graph) -> Vec<Binomial> {
    g.edges()
        .iter()
        .map(|e| {
            let (i, j) = (e.lo(), e.hi());
            Binomial::oriented(
                Monomial::product([VarId::Diag(i), VarId::Diag(j)]),
                Monomial::product([VarId::new(i, j), VarId::new(j, i)]),
            )
            .expect("distinct terms")
        })
        .collect()
}

/// Incidence configuration of `h`: one 0/1 column per edge with ones at its
/// two endpoints. Columns are named by the edge names of `h` (sorted by
/// name) or by `y1, y2, ...` in edge order. Isolated vertices are dropped.
pub fn incidence_config(h: &Graph) -> VectorConfiguration {
    let isolated = h.vertices().iter().filter(|v| h.degree(**v) == 0).count();
    if isolated > 0 {
        log::warn!("dropping {isolated} isolated vertices from the incidence configuration");
    }
    let h = h.without_isolated();
    let index: BTreeMap<u32, usize> = h.vertices().iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let r = h.vertex_count();
    let mut named: Vec<(VarId, Edge)> = match h.edge_names() {
        Some(names) if h.is_fully_named() => names.iter().map(|(e, v)| (*v, *e)).collect(),
        _ => h
            .edges()
            .iter()
            .enumerate()
            .map(|(k, e)| (VarId::Aux(k as u32 + 1), *e))
            .collect(),
    };
    named.sort();
    let columns = named
        .into_iter()
        .map(|(v, e)| {
            let mut b = vec![0i64; r];
            b[index[&e.lo()]] = 1;
            b[index[&e.hi()]] = 1;
            (v, IntVector::from_i64(&b))
        })
        .collect();
    let row_labels = h.vertices().iter().map(|v| v.to_string()).collect();
    VectorConfiguration::new(r, columns, row_labels)
}

/// `sum_i u_i a_i` over the exponents of `m`.
pub fn adegree(m: &Monomial, cfg: &VectorConfiguration) -> Result<IntVector> {
    let mut acc = IntVector::zeros(cfg.ambient_dim());
    for (v, e) in m.exponents() {
        let col = cfg.column(*v).ok_or(Error::UnknownVariable(*v))?;
        acc = acc.add(&col.scaled(&BigInt::from(*e)));
    }
    Ok(acc)
}

/// Whether both terms of `b` have the same degree under `cfg`.
pub fn is_homogeneous(b: &Binomial, cfg: &VectorConfiguration) -> Result<bool> {
    Ok(adegree(b.plus(), cfg)? == adegree(b.minus(), cfg)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Heights {
    pub ht_pg: usize,
    pub ht_ih: usize,
    pub b_h: usize,
}

/// Height of `P_G` (its number of edges) and of `I_H` (`|E| - |V| + b(H)`).
pub fn heights(g: &Graph, h: &Graph) -> Heights {
    let b_h = h.bipartite_component_count();
    Heights {
        ht_pg: g.edge_count(),
        ht_ih: h.edge_count() + b_h - h.vertex_count(),
        b_h,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayCheck {
    pub column: VarId,
    pub defining_vector: Vec<i64>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeRayReport {
    pub rays: Vec<RayCheck>,
    pub certified: usize,
    pub expected: usize,
}

impl ExtremeRayReport {
    pub fn passed(&self) -> bool {
        self.certified == self.expected && self.rays.len() == self.expected
    }
}

/// Certifies each column of `A_G` as an extreme ray of the cone it spans:
/// a defining vector `c` with `c.a = 0` on the column and `c.a' > 0` on
/// every other column.
pub fn verify_extreme_rays(g: &Graph) -> ExtremeRayReport {
    let cfg = build_ag(g);
    let n = g.vertex_count();
    let m = g.edge_count();
    let d = n + m;
    let mut rays = Vec::new();
    for (k, (name, col)) in cfg.columns().iter().enumerate() {
        let mut c = vec![1i64; d];
        if k < 2 * m {
            let edge = k / 2;
            c[n + edge] = if k % 2 == 0 { 2 } else { 0 };
        } else {
            let j = k - 2 * m;
            for (r, x) in c.iter_mut().enumerate().take(n) {
                *x = if r == j { 0 } else { 2 };
            }
        }
        let cv = IntVector::from_i64(&c);
        let ok = cv.dot(col).is_zero()
            && cfg
                .columns()
                .iter()
                .enumerate()
                .filter(|(k2, _)| *k2 != k)
                .all(|(_, (_, other))| cv.dot(other).is_positive());
        rays.push(RayCheck {
            column: *name,
            defining_vector: c,
            ok,
        });
    }
    ExtremeRayReport {
        certified: rays.iter().filter(|r| r.ok).count(),
        rays,
        expected: 2 * m + n,
    }
}
