use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use diagtoric::algebra::{buchberger, indispensable_monomials, initial_ideal, Binomial, OrderKind, TermOrder};
use diagtoric::bases::{self, degree_stats, BasisReport, BasisStatus};
use diagtoric::constructions::{build_h, mobius, prism, verify_pg_equals_ih, LabeledConstruction, WitnessReport};
use diagtoric::encoding::{build_ag, generators_pg, verify_extreme_rays, ExtremeRayReport};
use diagtoric::graph::{classify, ComponentKind, Graph};
use diagtoric::matrix::TuReport;
use diagtoric::suite;
use diagtoric::Error;

#[derive(Parser)]
#[command(name = "diagtoric", version, about = "Ideals of diagonal 2-minors of graphs as toric ideals")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Prism,
    Mobius,
    PaperH,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the components and report whether a witness graph H exists.
    Analyze { input: PathBuf },
    /// List the generators f_ij.
    Gens { input: PathBuf },
    /// Print the matrix of the configuration and its rank.
    Matrix {
        input: PathBuf,
        /// Also test total unimodularity.
        #[arg(long)]
        tu: bool,
    },
    /// Build a graph H from the input graph.
    Construct {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Reduced Groebner basis of the generators.
    Gb {
        input: PathBuf,
        /// `lex`, `deglex` or `degrevlex`, optionally followed by `:` and a
        /// variable chain such as `x11>x12>x21`.
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Circuits of the configuration.
    Circuits { input: PathBuf },
    /// Graver basis of the configuration.
    Graver { input: PathBuf },
    /// Universal Groebner basis, or certified bounds.
    Ugb { input: PathBuf },
    /// Build H and certify the equality of ideals, extreme rays and
    /// indispensable monomials.
    Verify { input: PathBuf },
    /// Run the reproduction battery.
    PaperSuite {
        /// Append wall-clock times to each line.
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    Parse(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidGraph(_) => Failure::Parse(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

/// Rendered output plus whether a verification failed.
struct Report {
    text: String,
    json: serde_json::Value,
    mismatch: Option<String>,
}

impl Report {
    fn ok(text: String, json: impl Serialize) -> Self {
        Report {
            text,
            json: serde_json::to_value(json).expect("report serializes"),
            mismatch: None,
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn strings(bs: &[Binomial]) -> Vec<String> {
    bs.iter().map(ToString::to_string).collect()
}

fn listing(header: &str, bs: &[Binomial]) -> String {
    let mut out = format!("{header}\n");
    for b in bs {
        let _ = writeln!(out, "  {b}");
    }
    out
}

#[derive(Serialize)]
struct ComponentJson {
    index: usize,
    vertices: Vec<u32>,
    edges: usize,
    kind: ComponentKind,
    bipartite: bool,
    cycle: Option<Vec<u32>>,
    witness: Option<&'static str>,
}

fn witness_kind(kind: ComponentKind, bipartite: bool) -> Option<&'static str> {
    match kind {
        ComponentKind::Tree => Some("prism"),
        ComponentKind::UnicyclicOdd => Some("prism"),
        ComponentKind::UnicyclicEven if bipartite => Some("mobius-clique-sum"),
        _ => None,
    }
}

fn analyze(g: &Graph) -> Outcome {
    let class = classify(g);
    let mut text = format!("vertices: {}\nedges: {}\n", g.vertex_count(), g.edge_count());
    let mut comps = Vec::new();
    for (i, c) in class.components.iter().enumerate() {
        let witness = witness_kind(c.kind, c.bipartite);
        let shape = format!("{}, {}", c.kind.as_str(), if c.bipartite { "bipartite" } else { "non-bipartite" });
        let verdict = match witness {
            Some(w) => format!("H exists ({w})"),
            None => "no graph H exists".to_string(),
        };
        let _ = writeln!(text, "component {}: {shape}, {verdict}", i + 1);
        comps.push(ComponentJson {
            index: i + 1,
            vertices: c.vertices.clone(),
            edges: c.edge_count,
            kind: c.kind,
            bipartite: c.bipartite,
            cycle: c.cycle.as_ref().map(|w| w.vertices().to_vec()),
            witness,
        });
    }
    let exists = class.admits_witness();
    let _ = writeln!(text, "witness graph: {}", if exists { "exists" } else { "does not exist" });
    Ok(Report::ok(
        text,
        serde_json::json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "bipartite": class.bipartite(),
            "components": comps,
            "witness_exists": exists,
        }),
    ))
}

fn gens(g: &Graph) -> Outcome {
    let gs = generators_pg(g);
    Ok(Report::ok(
        listing(&format!("generators: {}", gs.len()), &gs),
        serde_json::json!({ "count": gs.len(), "generators": strings(&gs) }),
    ))
}

fn matrix(g: &Graph, tu: bool) -> Outcome {
    let cfg = build_ag(g);
    let m = cfg.matrix();
    let names: Vec<String> = cfg.variables().iter().map(ToString::to_string).collect();
    let rows: Vec<Vec<String>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect();
    let rank = m.rank();
    let tu_report: Option<TuReport> = tu.then(|| m.is_totally_unimodular());

    let width = names.iter().map(String::len).chain(rows.iter().flatten().map(String::len)).max().unwrap_or(1);
    let label_width = cfg.row_labels().iter().map(String::len).max().unwrap_or(0);
    let mut text = format!("{} x {} matrix\n{:label_width$} ", m.rows(), m.cols(), "");
    for n in &names {
        let _ = write!(text, " {n:>width$}");
    }
    text.push('\n');
    for (label, row) in cfg.row_labels().iter().zip(&rows) {
        let _ = write!(text, "{label:label_width$} ");
        for x in row {
            let _ = write!(text, " {x:>width$}");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "rank: {rank}");
    if let Some(r) = &tu_report {
        let _ = writeln!(text, "totally unimodular: {}", if r.totally_unimodular { "yes" } else { "no" });
        if let Some(w) = &r.witness {
            let _ = writeln!(text, "witness minor: rows {:?}, columns {:?}, determinant {}", w.rows, w.cols, w.determinant);
        }
    }
    Ok(Report::ok(
        text,
        serde_json::json!({
            "rows": m.rows(),
            "cols": m.cols(),
            "row_labels": cfg.row_labels(),
            "column_names": names,
            "entries": rows,
            "rank": rank,
            "bipartite": g.is_bipartite(),
            "tu": tu_report,
        }),
    ))
}

#[derive(Serialize)]
struct EdgeJson {
    u: u32,
    v: u32,
    name: String,
    role: String,
}

fn construction_report(kind: &str, c: &LabeledConstruction) -> Report {
    let mut edges: Vec<EdgeJson> = c
        .roles
        .iter()
        .map(|(name, role)| {
            let e = c.edge_by_name(*name).expect("named edge");
            EdgeJson {
                u: e.lo(),
                v: e.hi(),
                name: name.edge_name(),
                role: format!("{role:?}").to_lowercase(),
            }
        })
        .collect();
    edges.sort_by_key(|a| (a.u, a.v));
    let text = c.graph.to_edge_list();
    Report::ok(
        text,
        serde_json::json!({
            "kind": kind,
            "vertices": c.graph.vertices(),
            "edges": edges,
        }),
    )
}

fn construct(g: &Graph, kind: Kind) -> Outcome {
    match kind {
        Kind::Prism => Ok(construction_report("prism", &prism(g)?)),
        Kind::PaperH => Ok(construction_report("paper-h", &build_h(g)?)),
        Kind::Mobius => {
            let class = classify(g);
            let cycle = match class.components.as_slice() {
                [c] if c.kind == ComponentKind::UnicyclicEven => c.cycle.clone().expect("unicyclic component has a cycle"),
                _ => {
                    return Err(Failure::Precondition(
                        "the Moebius construction needs a connected graph with exactly one cycle, of even length".into(),
                    ))
                }
            };
            Ok(construction_report("mobius", &mobius(&cycle, g)?))
        }
    }
}

fn parse_order(spec: &str, g: &Graph) -> Result<TermOrder, Failure> {
    let vars = build_ag(g).variables();
    let (kind, chain) = match spec.split_once(':') {
        Some((k, c)) => (k, Some(c)),
        None => (spec, None),
    };
    let kind: OrderKind = kind.parse().map_err(|e: diagtoric::ParseError| Failure::Parse(e.to_string()))?;
    match chain {
        Some(c) => TermOrder::from_chain(kind, c, &vars).map_err(|e| Failure::Parse(e.to_string())),
        None => Ok(TermOrder::natural(kind, vars)),
    }
}

fn gb(g: &Graph, order: &str) -> Outcome {
    let order = parse_order(order, g)?;
    let basis = buchberger(&generators_pg(g), &order)?;
    let ini = initial_ideal(&basis, &order)?;
    let chain: Vec<String> = order.ranking().iter().map(ToString::to_string).collect();
    let mut text = format!("order: {} {}\n", order.kind(), chain.join(">"));
    text.push_str(&listing(&format!("basis: {}", basis.len()), &basis));
    let leads: Vec<String> = ini.generators.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "initial ideal: {}", leads.join(", "));
    let _ = writeln!(text, "squarefree: {}", if ini.squarefree { "yes" } else { "no" });
    Ok(Report::ok(
        text,
        serde_json::json!({
            "order": { "kind": order.kind(), "chain": chain },
            "count": basis.len(),
            "elements": strings(&basis),
            "initial_ideal": leads,
            "squarefree": ini.squarefree,
        }),
    ))
}

fn basis_list(label: &str, bs: Vec<Binomial>) -> Outcome {
    let max_degree = bs.iter().map(Binomial::degree).max().unwrap_or(0);
    let text = format!("{}max degree: {max_degree}\n", listing(&format!("{label}: {}", bs.len()), &bs));
    Ok(Report::ok(
        text,
        serde_json::json!({ "count": bs.len(), "max_degree": max_degree, "elements": strings(&bs) }),
    ))
}

#[derive(Serialize)]
struct UgbJson {
    status: BasisStatus,
    count: usize,
    max_degree: u32,
    elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<Vec<String>>,
    bipartite_bound: Option<u32>,
    bound_respected: Option<bool>,
}

fn ugb(g: &Graph) -> Outcome {
    let r: BasisReport = bases::ugb(g)?;
    let stats = degree_stats(&r, g);
    let mut text = format!("status: {}\ncount: {}\nmax degree: {}\n", r.status, r.count, r.max_degree);
    if let Some(b) = stats.bipartite_bound {
        let _ = writeln!(text, "degree bound: {b} ({})", if r.max_degree == b { "attained" } else { "respected" });
    }
    match (&r.lower, &r.upper) {
        (Some(lo), Some(up)) => {
            text.push_str(&listing(&format!("lower bound (circuits): {}", lo.len()), lo));
            text.push_str(&listing(&format!("upper bound (Graver): {}", up.len()), up));
        }
        _ => text.push_str(&listing("elements:", &r.elements)),
    }
    let json = UgbJson {
        status: r.status,
        count: r.count,
        max_degree: r.max_degree,
        elements: strings(&r.elements),
        lower: r.lower.as_deref().map(strings),
        upper: r.upper.as_deref().map(strings),
        bipartite_bound: stats.bipartite_bound,
        bound_respected: stats.bound_respected,
    };
    Ok(Report::ok(text, json))
}

#[derive(Serialize)]
struct VerifyJson {
    witness: WitnessReport,
    extreme_rays: ExtremeRayReport,
    indispensable_monomials: usize,
    indispensable_expected: usize,
    indispensable_ok: bool,
    passed: bool,
}

fn verify(g: &Graph) -> Outcome {
    let h = build_h(g)?;
    let w = verify_pg_equals_ih(g, &h)?;
    let rays = verify_extreme_rays(g);
    let ms = indispensable_monomials(g);
    let expected = 2 * g.edge_count();
    let antichain = ms.iter().enumerate().all(|(i, a)| ms.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)));
    let ind_ok = ms.len() == expected && antichain;
    let passed = w.equal && rays.passed() && ind_ok;
    let yn = |b: bool| if b { "ok" } else { "FAILED" };
    let mut text = format!(
        "H: {} vertices, {} edges\ncontainment: {}\nheights: ht P_G = {}, ht I_H = {} ({})\nvariables: {}\nP_G = I_H: {}\n",
        h.graph.vertex_count(),
        h.graph.edge_count(),
        yn(w.containment_ok),
        w.heights.ht_pg,
        w.heights.ht_ih,
        yn(w.height_ok),
        yn(w.variables_match),
        if w.equal { "yes" } else { "no" },
    );
    let _ = writeln!(text, "extreme rays: {} of {} certified ({})", rays.certified, rays.expected, yn(rays.passed()));
    let _ = writeln!(text, "indispensable monomials: {} of {} ({})", ms.len(), expected, yn(ind_ok));
    let _ = writeln!(text, "verification: {}", if passed { "passed" } else { "FAILED" });
    let mut report = Report::ok(
        text,
        VerifyJson {
            witness: w,
            extreme_rays: rays,
            indispensable_monomials: ms.len(),
            indispensable_expected: expected,
            indispensable_ok: ind_ok,
            passed,
        },
    );
    if !passed {
        report.mismatch = Some("verification failed".into());
    }
    Ok(report)
}

#[derive(Serialize)]
struct SuiteLine {
    id: usize,
    name: &'static str,
    passed: bool,
    detail: String,
    limit_s: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn paper_suite(timings: bool) -> Outcome {
    let results = suite::run_all();
    let mut text = String::new();
    let mut lines = Vec::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(text, "criterion {:>2} {}: {status} ({})", r.id, r.name, r.detail);
        if timings {
            let _ = write!(text, " [{:.3}s / {}s]", r.elapsed_ms as f64 / 1000.0, r.limit_ms / 1000);
        }
        text.push('\n');
        lines.push(SuiteLine {
            id: r.id,
            name: r.name,
            passed: r.passed,
            detail: r.detail.clone(),
            limit_s: r.limit_ms / 1000,
            elapsed_ms: timings.then_some(r.elapsed_ms),
        });
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let _ = writeln!(text, "{} of {} criteria passed", results.len() - failed.len(), results.len());
    let mut report = Report::ok(
        text,
        serde_json::json!({ "criteria": lines, "all_passed": failed.is_empty() }),
    );
    if !failed.is_empty() {
        report.mismatch = Some(format!("criteria {failed:?} failed"));
    }
    Ok(report)
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Analyze { input } => analyze(&read_graph(input)?),
        Command::Gens { input } => gens(&read_graph(input)?),
        Command::Matrix { input, tu } => matrix(&read_graph(input)?, *tu),
        Command::Construct { input, kind } => construct(&read_graph(input)?, *kind),
        Command::Gb { input, order } => gb(&read_graph(input)?, order),
        Command::Circuits { input } => basis_list("circuits", bases::circuits(&build_ag(&read_graph(input)?))),
        Command::Graver { input } => basis_list("graver", bases::graver(&build_ag(&read_graph(input)?))),
        Command::Ugb { input } => ugb(&read_graph(input)?),
        Command::Verify { input } => verify(&read_graph(input)?),
        Command::PaperSuite { timings } => paper_suite(*timings),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::new().parse_filters("warn").init();
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("json")),
            }
            match report.mismatch {
                Some(m) => {
                    eprintln!("error: {m}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
