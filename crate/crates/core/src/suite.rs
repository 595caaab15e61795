//! The reproduction battery: ten criteria over built-in fixtures, each run
//! against a wall-clock limit.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{buchberger, canonical_set, initial_ideal, Binomial, OrderKind, TermOrder};
use crate::bases::{as_set, circuits, degree_stats, graph_circuits, graver, is_primitive, ugb, BasisStatus};
use crate::constructions::{build_h, prism, verify_pg_equals_ih};
use crate::encoding::{build_ag, build_ag_with_edge_order, generators_pg, incidence_config, verify_extreme_rays};
use crate::fixtures;
use crate::graph::{classify, Graph};
use crate::matrix::{brute_force_circuits, IntMatrix};
use crate::worked_examples as wx;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// A named fixture graph.
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
}

fn fixture(name: impl Into<String>, graph: Graph) -> Fixture {
    Fixture {
        name: name.into(),
        graph,
    }
}

/// The graphs the battery runs on.
pub fn suite_fixtures() -> Vec<Fixture> {
    let mut out = vec![
        fixture("K2", fixtures::complete2()),
        fixture("triangle", fixtures::triangle()),
        fixture("example", fixtures::example_graph()),
        fixture("triangle+pendant", fixtures::triangle_with_pendant()),
        fixture("4-cycle+2 pendants", fixtures::cycle4_with_pendants()),
    ];
    out.extend((3..=8).map(|n| fixture(format!("star{n}"), fixtures::star(n))));
    out.extend((2..=7).map(|n| fixture(format!("path{n}"), fixtures::path(n))));
    out.extend([4, 6].map(|k| fixture(format!("cycle{k}"), fixtures::cycle(k))));
    out
}

/// Non-isomorphic trees with 2 to 7 vertices.
fn small_trees() -> Vec<Graph> {
    (2..=7).flat_map(fixtures::nonisomorphic_trees).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {}: {} ({}) [{:.3}s / {}s]",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail,
            self.elapsed_ms as f64 / 1000.0,
            self.limit_ms / 1000,
        )
    }
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    check: fn() -> Outcome,
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = (self.check)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.limit {
            passed = false;
            detail = format!("{detail}; exceeded time limit");
        }
        CriterionResult {
            id: self.id,
            name: self.name,
            passed,
            detail,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.as_millis(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, check| Criterion {
        id,
        name,
        limit: Duration::from_secs(secs),
        check,
    };
    vec![
        c(1, "example configuration and circuits", 10, example_configuration as fn() -> Outcome),
        c(2, "quadratic Groebner basis", 30, quadratic_groebner),
        c(3, "total unimodularity iff bipartite", 30, unimodularity),
        c(4, "star bases", 10, star_bases),
        c(5, "path bases", 30, path_bases),
        c(6, "Graver basis of the prism", 60, prism_graver),
        c(7, "witness graphs", 60, witness_graphs),
        c(8, "extreme rays", 5, extreme_rays),
        c(9, "indispensable monomials", 1, indispensable),
        c(10, "property suites", 300, property_suites),
    ]
}

pub fn run_all() -> Vec<CriterionResult> {
    criteria().iter().map(Criterion::run).collect()
}

fn example_configuration() -> Outcome {
    let g = fixtures::example_graph();
    let cfg = ok(build_ag_with_edge_order(&g, &wx::example_edge_order()))?;
    let expected = wx::example_vectors();
    ensure!(cfg.columns().len() == expected.len(), "{} columns", cfg.columns().len());
    for ((v, col), (name, entries)) in cfg.columns().iter().zip(&expected) {
        ensure!(v.to_string() == *name, "column {v} where {name} was expected");
        ensure!(col.to_i64().as_deref() == Some(&entries[..]), "vector of {name} differs");
    }
    let reference = canonical_set(&wx::example_circuits());
    let found = as_set(&circuits(&cfg));
    ensure!(found == reference, "{} circuits, {} expected", found.len(), reference.len());
    let report = ok(ugb(&g))?;
    ensure!(report.status == BasisStatus::Exact, "basis not exact");
    ensure!(as_set(&report.elements) == reference, "universal basis differs from the circuit list");
    Ok(format!("17 vectors, {} circuits", found.len()))
}

fn quadratic_groebner() -> Outcome {
    let mut slowest = Duration::ZERO;
    let all = suite_fixtures();
    for f in &all {
        let start = Instant::now();
        let gens = generators_pg(&f.graph);
        let order = TermOrder::natural(OrderKind::DegRevLex, build_ag(&f.graph).variables());
        let gb = ok(buchberger(&gens, &order))?;
        ensure!(canonical_set(&gb) == canonical_set(&gens), "{}: basis is not the generator set", f.name);
        let ini = ok(initial_ideal(&gb, &order))?;
        ensure!(ini.squarefree, "{}: initial ideal not squarefree", f.name);
        ensure!(ini.generators.iter().all(|m| m.degree() == 2), "{}: initial ideal not quadratic", f.name);
        slowest = slowest.max(start.elapsed());
        ensure!(slowest <= Duration::from_secs(1), "{}: took {:?}", f.name, slowest);
    }
    Ok(format!("{} fixtures, slowest {:.3}s", all.len(), slowest.as_secs_f64()))
}

fn unimodularity() -> Outcome {
    let mut graphs = vec![
        ("K2".to_string(), fixtures::complete2()),
        ("triangle".to_string(), fixtures::triangle()),
        ("triangle+pendant".to_string(), fixtures::triangle_with_pendant()),
        ("6-cycle with trees".to_string(), fixtures::hexagon_with_trees()),
    ];
    graphs.extend((2..=7).map(|n| (format!("path{n}"), fixtures::path(n))));
    graphs.extend((3..=8).map(|n| (format!("star{n}"), fixtures::star(n))));
    graphs.extend([4, 6].map(|k| (format!("cycle{k}"), fixtures::cycle(k))));
    for (name, g) in &graphs {
        let tu = build_ag(g).matrix().is_totally_unimodular().totally_unimodular;
        ensure!(tu == g.is_bipartite(), "{name}: TU = {tu}, bipartite = {}", g.is_bipartite());
    }
    Ok(format!("{} graphs agree", graphs.len()))
}

fn star_bases() -> Outcome {
    let mut counts = Vec::new();
    let mut mismatched = Vec::new();
    for n in 3..=8u32 {
        let r = ok(ugb(&fixtures::star(n)))?;
        ensure!(r.status == BasisStatus::Exact, "star{n}: basis not exact");
        ensure!(r.max_degree == 3, "star{n}: max degree {}", r.max_degree);
        if n == 4 {
            ensure!(as_set(&r.elements) == canonical_set(&wx::star4_ugb()), "star4 differs from the reference list");
        }
        counts.push(format!("star{n}={}", r.count));
        if r.count != 2 * n as usize - 2 {
            mismatched.push(format!("star{n} has {} elements, 2n-2 = {}", r.count, 2 * n - 2));
        }
    }
    ensure!(mismatched.is_empty(), "{}; max degree 3 and the star4 list hold", mismatched.join(", "));
    Ok(format!("{}, max degree 3", counts.join(" ")))
}

fn path_bases() -> Outcome {
    for n in 2..=7u32 {
        let g = fixtures::path(n);
        let nu = n as usize;
        let r = ok(ugb(&g))?;
        ensure!(r.status == BasisStatus::Exact, "path{n}: basis not exact");
        ensure!(
            r.count == nu * (nu - 1) / 2 && r.max_degree == n,
            "path{n}: {} elements of max degree {}",
            r.count,
            r.max_degree
        );
        if n == 5 {
            ensure!(as_set(&r.elements) == canonical_set(&wx::path5_ugb()), "path5 differs from the reference list");
        }
        let stats = degree_stats(&r, &g);
        ensure!(stats.bipartite_bound == Some(n), "path{n}: bound {:?}", stats.bipartite_bound);
    }
    Ok("n = 2..7 give n(n-1)/2 elements, degree bound attained".into())
}

fn prism_graver() -> Outcome {
    let g = fixtures::triangle_with_pendant();
    let star = ok(prism(&g))?;
    let cfg = incidence_config(&star.graph);
    let gr = as_set(&graver(&cfg));
    let reference = canonical_set(&wx::triangle_pendant_graver());
    ensure!(gr == reference, "{} Graver elements, {} expected", gr.len(), reference.len());
    let extra = wx::triangle_pendant_non_circuit().canonical();
    ensure!(gr.contains(&extra), "degree-5 element missing from the Graver basis");
    ensure!(ok(is_primitive(&extra, &cfg))?, "degree-5 element not primitive");
    let circ = as_set(&circuits(&cfg));
    ensure!(!circ.contains(&extra), "degree-5 element is a circuit");
    let missing: Vec<&Binomial> = gr.difference(&circ).collect();
    ensure!(missing.len() == 1, "{} Graver elements are not circuits", missing.len());
    Ok(format!("16 Graver elements, {} circuits", circ.len()))
}

fn witness_graphs() -> Outcome {
    let mut graphs: Vec<(String, Graph)> =
        small_trees().into_iter().enumerate().map(|(i, t)| (format!("tree #{i}"), t)).collect();
    let trees = graphs.len();
    graphs.push(("triangle+pendant".into(), fixtures::triangle_with_pendant()));
    graphs.push(("4-cycle+2 pendants".into(), fixtures::cycle4_with_pendants()));
    for (name, g) in &graphs {
        let h = ok(build_h(g))?;
        let r = ok(verify_pg_equals_ih(g, &h))?;
        ensure!(r.equal, "{name}: P_G differs from I_H ({:?})", r.heights);
    }
    for k in [4, 6] {
        let c = fixtures::cycle(k);
        let r = ok(verify_pg_equals_ih(&c, &ok(prism(&c))?))?;
        ensure!(!r.equal, "prism of cycle{k} reported equal");
        ensure!(
            r.heights.ht_pg == k as usize && r.heights.ht_ih == k as usize + 1,
            "cycle{k}: heights {:?}",
            r.heights
        );
    }
    Ok(format!("{trees} trees and 2 named graphs equal; even-cycle prisms differ in height"))
}

fn extreme_rays() -> Outcome {
    let all = suite_fixtures();
    for f in &all {
        let r = verify_extreme_rays(&f.graph);
        let (n, m) = (f.graph.vertex_count(), f.graph.edge_count());
        ensure!(r.passed() && r.expected == 2 * m + n, "{}: {} of {} certified", f.name, r.certified, r.expected);
    }
    Ok(format!("{} fixtures certified", all.len()))
}

fn indispensable() -> Outcome {
    let all = suite_fixtures();
    for f in &all {
        let ms = crate::algebra::indispensable_monomials(&f.graph);
        ensure!(ms.len() == 2 * f.graph.edge_count(), "{}: {} monomials", f.name, ms.len());
        for (i, a) in ms.iter().enumerate() {
            for (j, b) in ms.iter().enumerate() {
                ensure!(i == j || !a.divides(b), "{}: {a} divides {b}", f.name);
            }
        }
    }
    Ok(format!("{} fixtures", all.len()))
}

fn property_suites() -> Outcome {
    let mut notes = Vec::new();
    // (a) and (b)
    let all = suite_fixtures();
    for f in &all {
        let cfg = build_ag(&f.graph);
        let c = as_set(&circuits(&cfg));
        let gr = as_set(&graver(&cfg));
        ensure!(c.is_subset(&gr), "{}: a circuit is missing from the Graver basis", f.name);
        if f.graph.is_bipartite() {
            ensure!(c == gr, "{}: circuits differ from the Graver basis", f.name);
        }
    }
    notes.push(format!("(a,b) {} fixtures", all.len()));

    // (c)
    let mut routes = 0;
    let mut graphs: Vec<Graph> = small_trees();
    graphs.extend(suite_fixtures().into_iter().map(|f| f.graph));
    for g in &graphs {
        let class = classify(g);
        if !class.bipartite() || !class.admits_witness() || !g.is_connected() {
            continue;
        }
        let h = if g.edge_count() + 1 == g.vertex_count() { ok(prism(g))? } else { ok(build_h(g))? };
        let walks = as_set(&ok(graph_circuits(&h.graph))?);
        let matrix = as_set(&circuits(&build_ag(g)));
        ensure!(walks == matrix, "cycle route and matrix route differ on {}", g.to_edge_list().trim());
        routes += 1;
    }
    notes.push(format!("(c) {routes} graphs"));

    // (d)
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut matrices: Vec<IntMatrix> = all
        .iter()
        .map(|f| build_ag(&f.graph).matrix().clone())
        .filter(|m| m.cols() <= 12)
        .collect();
    for _ in 0..60 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=12);
        let entries: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        matrices.push(IntMatrix::from_rows(&entries));
    }
    for m in &matrices {
        let fast: BTreeSet<_> = m.matrix_circuits().into_iter().collect();
        ensure!(fast == brute_force_circuits(m), "circuit enumeration differs from the oracle on\n{m}");
    }
    notes.push(format!("(d) {} matrices", matrices.len()));

    // (e)
    let g = fixtures::example_graph();
    let gens = generators_pg(&g);
    let vars = build_ag(&g).variables();
    let kinds = [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex];
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for trial in 0..25 {
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let order = TermOrder::random(kind, vars.iter().copied(), &mut rng);
        let gb = ok(buchberger(&gens, &order))?;
        let ini = ok(initial_ideal(&gb, &order))?;
        ensure!(ini.squarefree, "order #{trial} ({kind}) gives a non-squarefree initial ideal");
    }
    notes.push("(e) 25 orders squarefree".into());
    Ok(notes.join(", "))
}
