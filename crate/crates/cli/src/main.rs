use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coherent_motion::catalog::{generate, parse_family, recognize_with_budget, Instance};
use coherent_motion::drg::{
    all_tradeoffs, best_spectral_gap_estimate, extract_intersection_array, is_primitive, parse_array,
    tridiagonal_spectrum, IntersectionArray,
};
use coherent_motion::geometry::{bang_check, seidel_recognize};
use coherent_motion::motion::primitive_drg_bound;
use coherent_motion::oracle::{self, automorphisms, exact_motion, isomorphism_within, IsoOutcome};
use coherent_motion::outcome::Applicable;
use coherent_motion::rank4::{diam2_distinguishing_bound, oriented_route, param_inequalities, Rank4Scheme};
use coherent_motion::wl::wl_stabilize;
use coherent_motion::{
    certify, classify, parse_configuration_json, parse_edge_list, structure_constants, Configuration, Graph,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cohmo", version, about = "Motion bounds and certificates for coherent configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit one line of JSON instead of the text summary.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance parameter for the rank-4 and spectral-gap analyses.
    #[arg(long, global = true, default_value_t = 0.1)]
    epsilon: f64,

    /// Largest vertex count handed to the exact search.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_LIMIT)]
    limit_n: usize,

    /// Seed for any randomized step. No command currently draws random numbers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Wall-clock budget for isomorphism confirmations.
    #[arg(long, global = true, default_value_t = 5000)]
    timeout_ms: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Configuration JSON file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Catalog instance such as `johnson:7,3`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Config,
}

#[derive(Subcommand)]
enum Command {
    /// Check the configuration axioms and coherence.
    Verify(Input),
    /// Stabilize under the Weisfeiler-Leman refinement.
    Wl(Input),
    /// Parameters, spectrum and inequalities of a distance-regular graph.
    AnalyzeDrg {
        #[arg(long, conflicts_with = "graph")]
        array: Option<String>,
        #[arg(long, required_unless_present = "array")]
        graph: Option<PathBuf>,
    },
    /// Certified lower bound on the motion.
    Certify(Input),
    /// Write a catalog instance.
    Generate {
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Exact motion and automorphism group by search.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Also test isomorphism with this edge-list file.
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Match against the exceptional families and the smallest-eigenvalue -2 graphs.
    Recognize(Input),
}

/// A finished command: JSON body, text summary and whether anything applied.
struct Report {
    json: Value,
    text: String,
    applicable: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report { json, text, applicable: true }
    }
}

struct Loaded {
    graph: Option<Graph>,
    config: Configuration,
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("{}: cannot read", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    parse_edge_list(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load(input: &Input) -> anyhow::Result<Loaded> {
    if let Some(path) = &input.graph {
        let graph = read_graph(path)?;
        let config = Configuration::adjacency(&graph);
        return Ok(Loaded { graph: Some(graph), config });
    }
    if let Some(path) = &input.config {
        let config = parse_configuration_json(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))?;
        return Ok(Loaded { graph: None, config });
    }
    let spec = input.family.as_deref().expect("clap requires one input");
    let Instance { graph, config, .. } = instance(spec)?;
    Ok(Loaded { graph, config })
}

fn instance(spec: &str) -> anyhow::Result<Instance> {
    let family = parse_family(spec).map_err(|e| anyhow!("family {spec:?}: {e}"))?;
    Ok(generate(family)?)
}

fn applicable<T: Serialize>(a: &Applicable<T>) -> Value {
    match a {
        Ok(v) => serde_json::to_value(v).expect("serializable"),
        Err(na) => json!({ "not_applicable": na }),
    }
}

fn verify(input: &Input) -> anyhow::Result<Report> {
    let Loaded { config, .. } = load(input)?;
    let violations = config.verify();
    let mut text = format!("n {} rank {}\n", config.n(), config.rank());
    let mut body = json!({ "n": config.n(), "rank": config.rank(), "violations": violations });
    let mut ok = violations.is_empty();
    for v in &violations {
        writeln!(text, "violation {}", serde_json::to_string(v)?)?;
    }
    if ok {
        match structure_constants(&config) {
            Ok(sc) => {
                let failures = sc.identity_failures()?;
                let class = classify(&config, &sc)?;
                ok = failures.is_empty();
                writeln!(text, "coherent yes")?;
                writeln!(text, "homogeneous {} primitive {}", class.homogeneous, class.primitive)?;
                for f in &failures {
                    writeln!(text, "identity {f}")?;
                }
                body["coherent"] = json!(true);
                body["identity_failures"] = json!(failures);
                body["classification"] = serde_json::to_value(&class)?;
                body["structure_constants"] = sc.to_json_value();
            }
            Err(v) => {
                ok = false;
                writeln!(text, "coherent no: {v}")?;
                body["coherent"] = json!(false);
                body["coherence_violation"] = serde_json::to_value(&v)?;
            }
        }
    }
    Ok(Report { json: body, text, applicable: ok })
}

fn wl(input: &Input) -> anyhow::Result<Report> {
    let Loaded { config, .. } = load(input)?;
    let stable = wl_stabilize(&config)?;
    let text = format!("n {} rank {} -> {}\n", config.n(), config.rank(), stable.rank());
    Ok(Report::new(
        json!({ "n": config.n(), "input_rank": config.rank(), "rank": stable.rank(), "config": stable.to_json_value() }),
        text,
    ))
}

fn analyze_drg(array: Option<&str>, graph: Option<&Path>, epsilon: f64) -> anyhow::Result<Report> {
    let array: IntersectionArray = match (array, graph) {
        (Some(a), _) => parse_array(a).map_err(|e| anyhow!("array {a:?}: {e}"))?,
        (None, Some(path)) => match extract_intersection_array(&read_graph(path)?)? {
            Ok(a) => a,
            Err(not) => {
                return Ok(Report {
                    json: json!({ "not_applicable": not }),
                    text: format!("{not}\n"),
                    applicable: false,
                })
            }
        },
        (None, None) => bail!("one of --array or --graph is required"),
    };
    let problems = array.validate();
    if !problems.is_empty() {
        bail!("array {array} is not feasible: {}", problems.join("; "));
    }
    let n = array.n().ok_or_else(|| anyhow!("vertex count of {array} overflows"))?;
    let spectrum = tridiagonal_spectrum(&array)?;
    let primitive = is_primitive(&array)?;
    let tradeoffs = all_tradeoffs(&array)?;
    let gap = best_spectral_gap_estimate(&array, epsilon)?;
    let bound = primitive_drg_bound(&array)?;
    let bang = bang_check(&array)?;

    let mut text = format!("array {array}\nn {n}\ndiameter {}\nprimitive {primitive}\n", array.diameter());
    let eig: Vec<String> = spectrum.eigenvalues.iter().map(|(v, m)| format!("{v:.6}^{m}")).collect();
    writeln!(text, "spectrum {}", eig.join(" "))?;
    let holding = tradeoffs.iter().filter(|t| t.holds).count();
    writeln!(text, "tradeoffs {holding}/{} hold", tradeoffs.len())?;
    match &gap {
        Ok(g) => writeln!(text, "gap estimate {:.6} at i = {}", g.bound, g.i)?,
        Err(na) => writeln!(text, "gap estimate {na}")?,
    }
    match &bound {
        Ok(c) => writeln!(text, "motion >= {}", c.bound)?,
        Err(na) => writeln!(text, "motion {na}")?,
    }
    let body = json!({
        "array": array.to_string(),
        "n": n,
        "diameter": array.diameter(),
        "k": array.k(),
        "sphere_sizes": array.sphere_sizes(),
        "primitive": primitive,
        "spectrum": spectrum,
        "tradeoffs": tradeoffs,
        "epsilon": epsilon,
        "gap_estimate": applicable(&gap),
        "motion": applicable(&bound),
        "bang": applicable(&bang),
    });
    let applicable = !tradeoffs.is_empty() || gap.is_ok() || bound.is_ok();
    Ok(Report { json: body, text, applicable })
}

fn certify_cmd(input: &Input, epsilon: f64) -> anyhow::Result<Report> {
    let Loaded { config, .. } = load(input)?;
    let cert = certify(&config)?;
    let mut body = serde_json::to_value(&cert)?;
    let mut text = format!("n {}\nbound {}\nrule {}\n", cert.n, cert.bound, cert.rule);
    if let Some(f) = &cert.family {
        writeln!(text, "family {f}")?;
    }
    if let Some(m) = cert.exact_motion {
        writeln!(text, "exact motion {m}")?;
    }
    let stable = wl_stabilize(&config)?;
    if stable.rank() == 4 && stable.is_homogeneous() {
        if let Ok(scheme) = Rank4Scheme::from_config(&stable) {
            let params = param_inequalities(&scheme, epsilon)?;
            body["rank4"] = json!({
                "relabeling": scheme.relabeling(),
                "diameter": scheme.diameter(),
                "diam2": applicable(&diam2_distinguishing_bound(&scheme)),
                "params": applicable(&params),
            });
            if let Ok(p) = &params {
                let failed = p.inequalities.iter().filter(|q| !q.holds).count();
                writeln!(text, "rank 4 inequalities at epsilon {epsilon}: {failed} fail")?;
            }
        }
    }
    let applicable = cert.all_rules.iter().any(|r| r.bound.is_some());
    Ok(Report { json: body, text, applicable })
}

fn generate_cmd(spec: &str, out: Option<&Path>, format: Format) -> anyhow::Result<Report> {
    let inst = instance(spec)?;
    let (content, kind) = match (format, &inst.graph) {
        (Format::Edges, Some(g)) => (g.to_edge_list(), "edges"),
        (Format::Edges, None) => bail!("{} is a scheme, not a graph; use --format config", inst.family),
        (Format::Config, _) => (inst.config.to_json() + "\n", "config"),
    };
    let edges = inst.graph.as_ref().map(Graph::edge_count);
    let mut body = json!({ "family": inst.family.to_string(), "n": inst.config.n(), "format": kind });
    if let Some(m) = edges {
        body["edges"] = json!(m);
    }
    let text = match out {
        Some(path) => {
            std::fs::write(path, &content).with_context(|| format!("{}: cannot write", path.display()))?;
            body["out"] = json!(path.display().to_string());
            format!("{} n {} -> {}\n", inst.family, inst.config.n(), path.display())
        }
        None => content,
    };
    Ok(Report::new(body, text))
}

fn oracle_cmd(input: &Input, against: Option<&Path>, limit_n: usize, timeout: Duration) -> anyhow::Result<Report> {
    let Loaded { config, .. } = load(input)?;
    let motion = exact_motion(&config, limit_n)?;
    let group = automorphisms(&config, limit_n)?;
    let order = group.order().map(|o| o.to_string());
    let mut text = format!("n {}\n", config.n());
    match motion {
        Some(m) => writeln!(text, "motion {m}")?,
        None => writeln!(text, "motion none (trivial group)")?,
    }
    writeln!(text, "group order {}", order.as_deref().unwrap_or("overflow"))?;
    let mut body = json!({
        "n": config.n(),
        "motion": motion,
        "order": order,
        "log10_order": group.log10_order(),
        "group": group,
    });
    if let Some(path) = against {
        let other = Configuration::adjacency(&read_graph(path)?);
        let outcome = isomorphism_within(&config, &other, limit_n, Some(timeout))?;
        let (verdict, map) = match outcome {
            IsoOutcome::Isomorphic(p) => ("isomorphic", Some(p)),
            IsoOutcome::NotIsomorphic => ("not-isomorphic", None),
            IsoOutcome::TimedOut => ("timed-out", None),
        };
        writeln!(text, "against {verdict}")?;
        body["against"] = json!({ "verdict": verdict, "map": map });
    }
    Ok(Report::new(body, text))
}

fn recognize_cmd(input: &Input, timeout: Duration) -> anyhow::Result<Report> {
    let Loaded { graph, config } = load(input)?;
    let stable = wl_stabilize(&config)?;
    let mut text = String::new();
    let mut body = json!({ "n": config.n() });
    let mut found = false;

    let family = recognize_with_budget(&stable, timeout)?;
    match &family {
        Some(r) => {
            found = true;
            writeln!(text, "family {} ({:?})", r.tag, r.confirmation)?;
        }
        None => writeln!(text, "family none")?,
    }
    body["family"] = serde_json::to_value(&family)?;

    if let Some(g) = &graph {
        let seidel = match seidel_recognize(g) {
            Ok(s) => s,
            Err(e) => Err(coherent_motion::outcome::NotApplicable::because(e.to_string())),
        };
        match &seidel {
            Ok(s) => {
                found = true;
                writeln!(text, "seidel {}", serde_json::to_string(&s.tag)?)?;
            }
            Err(na) => writeln!(text, "seidel {na}")?,
        }
        body["seidel"] = applicable(&seidel);
    }

    let oriented = (0..stable.rank() as u16).any(|c| stable.paired(c) != c);
    if stable.rank() == 4 && oriented {
        let route = oriented_route(&stable)?;
        match &route {
            Ok(s) => {
                found = true;
                writeln!(text, "oriented {}", serde_json::to_string(&s.tag)?)?;
            }
            Err(na) => writeln!(text, "oriented {na}")?,
        }
        body["oriented"] = applicable(&route);
    }
    Ok(Report { json: body, text, applicable: found })
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    if !(cli.epsilon > 0.0 && cli.epsilon < 1.0) {
        bail!("--epsilon must lie in (0, 1), got {}", cli.epsilon);
    }
    let timeout = Duration::from_millis(cli.timeout_ms);
    match &cli.command {
        Command::Verify(input) => verify(input),
        Command::Wl(input) => wl(input),
        Command::AnalyzeDrg { array, graph } => analyze_drg(array.as_deref(), graph.as_deref(), cli.epsilon),
        Command::Certify(input) => certify_cmd(input, cli.epsilon),
        Command::Generate { family, out, format } => generate_cmd(family, out.as_deref(), *format),
        Command::Oracle { input, against } => oracle_cmd(input, against.as_deref(), cli.limit_n, timeout),
        Command::Recognize(input) => recognize_cmd(input, timeout),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            if report.applicable {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
