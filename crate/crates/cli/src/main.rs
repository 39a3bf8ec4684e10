//! `sqw`: simulate staggered quantum walks, evaluate the line-walk solution,
//! tabulate the spreading surface and certify coined-walk embeddings.

mod config;

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use sqw::coined::{certify_equivalence, embed_coined_as_sqw, CoinDescriptor, CoinedWalk};
use sqw::document::GraphDocument;
use sqw::graph::{union_covers_edges, validate_tessellation};
use sqw::line::quadrature::QuadratureConfig;
use sqw::line::{self as analytic, LineParams};
use sqw::operators::compose;
use sqw::simulation::{
    self, distribution, line_evolution, line_labels, moments, ring_index, safe_ring_size, trajectory,
    write_distribution_tsv, write_moments_tsv, MomentSummary, ProbabilityDistribution,
};
use sqw::{Angle, EvolutionOperator, OrthogonalReflection, WalkState};

use config::{parse_grid, InitSpec, Model, RunConfig, Support};

/// Ring sites inspected around the antipode; one step moves at most two sites.
const WRAP_GUARD: usize = 2;

#[derive(Parser)]
#[command(name = "sqw", version, about = "Staggered quantum walks with Hamiltonians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a state and write its position distribution.
    Simulate(RunFlags),
    /// Line walk from the Fourier solution, compared with direct simulation.
    Analytic {
        #[command(flatten)]
        run: RunFlags,
        /// Also write A, B and lambda at equally spaced momenta.
        #[arg(long)]
        blocks_out: Option<PathBuf>,
        #[arg(long, default_value_t = 257)]
        block_count: usize,
    },
    /// Closed-form sigma^2/t^2 over a (theta, alpha) grid.
    SigmaSurface {
        /// `start,end,count`, angles in radians or as multiples of pi.
        #[arg(long, default_value = "0,pi,101")]
        theta_grid: String,
        #[arg(long, default_value = "0,pi,101")]
        alpha_grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite a coined walk as a staggered walk and certify the equivalence.
    Embed {
        #[command(flatten)]
        run: RunFlags,
        /// Coin descriptor, inline JSON or a file; defaults to the graph file's
        /// `coin` entry, then to the Grover coin.
        #[arg(long)]
        coin: Option<String>,
    },
    /// Check the tessellations of a graph file.
    Validate {
        /// Graph file; `--graph` works too.
        file: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Default)]
struct RunFlags {
    /// JSON run configuration; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    model: Option<Model>,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<Angle>,
    #[arg(long, allow_hyphen_values = true)]
    theta0: Option<Angle>,
    #[arg(long, allow_hyphen_values = true)]
    theta1: Option<Angle>,
    /// Comma-separated angles, one per tessellation (graph model).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    thetas: Option<Vec<Angle>>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Angle>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Angle>,
    #[arg(long, allow_hyphen_values = true)]
    phi0: Option<Angle>,
    #[arg(long, allow_hyphen_values = true)]
    phi1: Option<Angle>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    ring_size: Option<usize>,
    #[arg(long)]
    graph: Option<PathBuf>,
    /// `basis:i`, `uniform:i,j,...` or `[[re,im],...]`.
    #[arg(long, allow_hyphen_values = true)]
    init: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-step moments table.
    #[arg(long)]
    moments_out: Option<PathBuf>,
}

impl RunFlags {
    fn resolve(self) -> Result<RunConfig> {
        let base = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        let flags = RunConfig {
            model: self.model,
            theta: self.theta,
            theta0: self.theta0,
            theta1: self.theta1,
            thetas: self.thetas,
            alpha: self.alpha,
            beta: self.beta,
            phi0: self.phi0,
            phi1: self.phi1,
            steps: self.steps,
            ring_size: self.ring_size,
            graph: self.graph,
            coin: None,
            init: self.init.as_deref().map(InitSpec::parse_flag).transpose()?,
            out: self.out,
            moments_out: self.moments_out,
        };
        Ok(base.overlay(flags))
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Simulate(flags) => cmd_simulate(&flags.resolve()?),
        Command::Analytic { run, blocks_out, block_count } => {
            cmd_analytic(&run.resolve()?, blocks_out.as_deref(), block_count)
        }
        Command::SigmaSurface { theta_grid, alpha_grid, out } => {
            cmd_sigma_surface(&theta_grid, &alpha_grid, out.as_deref())
        }
        Command::Embed { run, coin } => cmd_embed(&run.resolve()?, coin.as_deref()),
        Command::Validate { file, graph, out } => {
            let path = file.or(graph).context("validate needs a graph file")?;
            cmd_validate(&path, out.as_deref())
        }
    }
}

/// Writes to `path`, or to stdout when there is none.
fn emit(path: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    match path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
            write(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            write(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Summary lines go to stdout when data went to a file, else to stderr.
fn report(data_to_file: bool, lines: &[(&str, String)]) {
    for (key, value) in lines {
        if data_to_file {
            println!("{key}\t{value}");
        } else {
            eprintln!("{key}\t{value}");
        }
    }
}

fn quadrature_config() -> Result<QuadratureConfig> {
    let config = QuadratureConfig::default();
    match std::env::var("SQW_QUAD_NODES") {
        Ok(text) => {
            let nodes: usize = text.trim().parse().with_context(|| format!("SQW_QUAD_NODES={text:?}"))?;
            ensure!(nodes > 0, "SQW_QUAD_NODES must be positive");
            Ok(config.with_start_nodes(nodes))
        }
        Err(_) => Ok(config),
    }
}

/// Initial amplitudes as `(line position, amplitude)`; dense lists start at 0.
fn line_support(init: &InitSpec) -> Result<Vec<(i64, Complex64)>> {
    Ok(match init.support()? {
        Support::Sites(sites) => sites,
        Support::Dense(amps) => amps.into_iter().enumerate().map(|(i, a)| (i as i64, a)).collect(),
    })
}

/// Initial state on `dimension` vertices indexed from 0.
fn indexed_state(init: &InitSpec, dimension: usize) -> Result<WalkState> {
    let amps = match init.support()? {
        Support::Dense(amps) => {
            ensure!(amps.len() == dimension, "{} amplitudes given for {dimension} vertices", amps.len());
            amps
        }
        Support::Sites(sites) => {
            let mut amps = vec![Complex64::new(0.0, 0.0); dimension];
            for (site, a) in sites {
                ensure!((0..dimension as i64).contains(&site), "vertex {site} out of range 0..{dimension}");
                amps[site as usize] = a;
            }
            amps
        }
    };
    Ok(WalkState::new(amps)?)
}

struct LineSetup {
    ring_size: usize,
    operator: EvolutionOperator,
    psi0: WalkState,
    origin: usize,
    /// The ring is smaller than the wrap-free size, so every step is checked.
    guarded: bool,
}

fn line_setup(config: &RunConfig) -> Result<LineSetup> {
    let (theta0, theta1) = config.theta_pair()?;
    let (alpha, beta, phi0, phi1) = config.line_angles()?;
    let support = line_support(&config.init())?;
    let reach = support.iter().map(|(x, _)| x.unsigned_abs() as usize).max().unwrap_or(0);
    let wrap_free = safe_ring_size(config.steps()) + 2 * (reach + reach % 2);
    let ring_size = config.ring_size.unwrap_or(wrap_free);
    ensure!(reach < ring_size / 2, "initial state reaches position {reach}, outside a ring of {ring_size}");
    let mut amps = vec![Complex64::new(0.0, 0.0); ring_size];
    for &(x, a) in &support {
        amps[ring_index(x, ring_size)] = a;
    }
    Ok(LineSetup {
        ring_size,
        operator: line_evolution(ring_size, theta0, theta1, alpha, beta, phi0, phi1)?,
        psi0: WalkState::new(amps)?,
        origin: ring_index(support.first().map_or(0, |s| s.0), ring_size),
        guarded: ring_size < wrap_free,
    })
}

/// Runs `steps` steps, collecting moments per step when asked.
fn run_walk(
    u: &EvolutionOperator,
    psi0: &WalkState,
    steps: usize,
    positions: &[i64],
    wrap_origin: Option<usize>,
    keep_moments: bool,
) -> Result<(WalkState, Vec<MomentSummary>)> {
    let mut rows = Vec::new();
    let mut last = psi0.clone();
    for (step, psi) in trajectory(u, psi0)?.take(steps + 1).enumerate() {
        if let Some(origin) = wrap_origin {
            if simulation::antipodal_mass(&psi, origin, WRAP_GUARD) >= simulation::WRAP_TOLERANCE {
                return Err(sqw::Error::WavefrontWrapped(step).into());
            }
        }
        if keep_moments {
            rows.push(moments(&distribution(&psi, positions)?, 2).with_step(step));
        }
        last = psi;
    }
    Ok((last, rows))
}

fn finish_simulation(config: &RunConfig, d: &ProbabilityDistribution, rows: &[MomentSummary]) -> Result<()> {
    emit(config.out.as_deref(), |w| write_distribution_tsv(d, w))?;
    if let Some(path) = &config.moments_out {
        emit(Some(path), |w| write_moments_tsv(rows, w))?;
    }
    let m = moments(d, 2);
    report(
        config.out.is_some(),
        &[("total_probability", format!("{:.16e}", d.total())), ("sigma", format!("{:.16e}", m.sigma))],
    );
    Ok(())
}

fn cmd_simulate(config: &RunConfig) -> Result<()> {
    let steps = config.steps();
    let keep = config.moments_out.is_some();
    let (last, positions, rows) = match config.model.unwrap_or_default() {
        Model::Line => {
            let setup = line_setup(config)?;
            let positions = line_labels(setup.ring_size);
            let guard = setup.guarded.then_some(setup.origin);
            let (last, rows) = run_walk(&setup.operator, &setup.psi0, steps, &positions, guard, keep)?;
            (last, positions, rows)
        }
        Model::Graph => {
            let (doc, _) = load_graph_file(config.graph_path()?)?;
            let g = doc.graph()?;
            let tessellations = doc.tessellations()?;
            ensure!(!tessellations.is_empty(), "graph file lists no tessellations");
            let thetas = graph_thetas(config, tessellations.len())?;
            let factors = thetas
                .into_iter()
                .zip(&tessellations)
                .map(|(theta, t)| Ok((theta, OrthogonalReflection::from_tessellation(&g, t)?)))
                .collect::<Result<Vec<_>>>()?;
            let u = compose(factors)?;
            let psi0 = indexed_state(&config.init(), g.vertex_count())?;
            let positions: Vec<i64> = (0..g.vertex_count() as i64).collect();
            let (last, rows) = run_walk(&u, &psi0, steps, &positions, None, keep)?;
            (last, positions, rows)
        }
        Model::CoinedEmbedding => {
            let cw = coined_walk(config, None)?;
            let u = embed_coined_as_sqw(&cw)?;
            let psi0 = indexed_state(&config.init(), cw.dimension())?;
            let positions: Vec<i64> = (0..cw.dimension() as i64).collect();
            let (last, rows) = run_walk(&u, &psi0, steps, &positions, None, keep)?;
            (last, positions, rows)
        }
    };
    finish_simulation(config, &distribution(&last, &positions)?, &rows)
}

/// `thetas` if given, else `(θ₀, θ₁)` for two tessellations, else `theta`
/// for all of them.
fn graph_thetas(config: &RunConfig, count: usize) -> Result<Vec<f64>> {
    if let Some(thetas) = &config.thetas {
        ensure!(thetas.len() == count, "{} angles given for {count} tessellations", thetas.len());
        return Ok(thetas.iter().map(|a| a.radians()).collect());
    }
    if count == 2 {
        let (a, b) = config.theta_pair()?;
        return Ok(vec![a, b]);
    }
    let theta = config.theta.context("set --theta or --thetas")?;
    Ok(vec![theta.radians(); count])
}

fn cmd_analytic(config: &RunConfig, blocks_out: Option<&Path>, block_count: usize) -> Result<()> {
    ensure!(config.model.unwrap_or_default() == Model::Line, "the analytic solution covers the line model only");
    let (theta0, theta1) = config.theta_pair()?;
    ensure!(theta0 == theta1, "the analytic solution needs theta0 = theta1");
    let (alpha, beta, phi0, phi1) = config.line_angles()?;
    let params = LineParams::new(theta0, alpha, beta, phi0, phi1)?;
    let steps = config.steps();
    let t = u32::try_from(steps).context("too many steps")?;

    let support = line_support(&config.init())?;
    let lo = support.iter().map(|s| s.0).min().unwrap_or(0) - 2 * steps as i64 - 2;
    let hi = support.iter().map(|s| s.0).max().unwrap_or(0) + 2 * steps as i64 + 2;
    let exact = analytic::evolve_line(&params, t, &support, lo..=hi, &quadrature_config()?)?;

    let setup = line_setup(config)?;
    let guard = setup.guarded.then_some(setup.origin);
    let (simulated, _) = run_walk(&setup.operator, &setup.psi0, steps, &[], guard, false)?;

    let mut max_deviation: f64 = 0.0;
    let mut total = 0.0;
    let rows: Vec<(i64, f64, f64, f64)> = (lo..=hi)
        .zip(&exact)
        .map(|(x, a)| {
            let b = if x.unsigned_abs() < (setup.ring_size / 2) as u64 {
                simulated[ring_index(x, setup.ring_size)]
            } else {
                Complex64::new(0.0, 0.0)
            };
            let deviation = (a - b).norm();
            max_deviation = max_deviation.max(deviation);
            total += a.norm_sqr();
            (x, a.norm_sqr(), b.norm_sqr(), deviation)
        })
        .collect();

    emit(config.out.as_deref(), |w| {
        writeln!(w, "position\tprobability\tsimulated\tdeviation")?;
        for (x, p, q, d) in &rows {
            writeln!(w, "{x}\t{p:.16e}\t{q:.16e}\t{d:.16e}")?;
        }
        Ok(())
    })?;
    if let Some(path) = blocks_out {
        emit(Some(path), |w| analytic::write_block_table_tsv(&analytic::block_table(&params, block_count), w))?;
    }
    report(
        config.out.is_some(),
        &[("total_probability", format!("{total:.16e}")), ("max_deviation", format!("{max_deviation:.16e}"))],
    );
    Ok(())
}

fn cmd_sigma_surface(theta_grid: &str, alpha_grid: &str, out: Option<&Path>) -> Result<()> {
    let points = analytic::sigma2_surface(&parse_grid(theta_grid)?, &parse_grid(alpha_grid)?)?;
    emit(out, |w| analytic::write_surface_tsv(&points, w))?;
    if out.is_some() {
        println!("points\t{}", points.len());
    }
    Ok(())
}

/// Parsed graph file plus its raw JSON, which may carry a `coin` entry.
fn load_graph_file(path: &Path) -> Result<(GraphDocument, Value)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let raw: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let doc = GraphDocument::deserialize(&raw).with_context(|| format!("parsing {}", path.display()))?;
    Ok((doc, raw))
}

fn coined_walk(config: &RunConfig, coin_flag: Option<&str>) -> Result<CoinedWalk> {
    let (doc, raw) = load_graph_file(config.graph_path()?)?;
    let coin = match coin_flag {
        Some(text) if text.trim_start().starts_with('{') => serde_json::from_str(text).context("parsing --coin")?,
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
            // a coin file may hold the descriptor itself or wrap it as {"coin": ...}
            value.get("coin").cloned().unwrap_or(value)
        }
        None => config.coin.clone().or_else(|| raw.get("coin").cloned()).unwrap_or_else(|| json!({"type": "grover"})),
    };
    Ok(CoinDescriptor::from_value(&coin)?.build(&doc.graph()?)?)
}

fn cmd_embed(config: &RunConfig, coin_flag: Option<&str>) -> Result<()> {
    let cw = coined_walk(config, coin_flag)?;
    let psi0 = indexed_state(&config.init(), cw.dimension())?;
    let report = certify_equivalence(&cw, config.steps(), &psi0)?;
    let map = &report.bijection_used;
    let expanded = GraphDocument::from_parts(
        map.expanded(),
        &[cw.shift_tessellation().clone(), cw.coin_tessellation().clone()],
    );
    let arcs: Vec<Value> = map.arcs().iter().map(|a| json!({"vertex": a.vertex, "edge": a.edge})).collect();
    let document = json!({
        "expanded_graph": expanded,
        "arcs": arcs,
        "coin_angle": cw.coin_angle(),
        "tessellation_roles": ["shift", "coin"],
        "report": {
            "max_state_deviation": report.max_state_deviation,
            "steps_checked": report.steps_checked,
        },
    });
    emit(config.out.as_deref(), |w| writeln!(w, "{}", serde_json::to_string_pretty(&document)?))?;
    if config.out.is_some() {
        println!("expanded_vertices\t{}", map.expanded().vertex_count());
        println!("expanded_edges\t{}", map.expanded().edge_count());
        println!("max_state_deviation\t{:.16e}", report.max_state_deviation);
    }
    Ok(())
}

fn cmd_validate(path: &Path, out: Option<&Path>) -> Result<()> {
    let (doc, _) = load_graph_file(path)?;
    let g = doc.graph()?;
    let mut valid = Vec::new();
    let findings: Vec<Value> = doc
        .tessellations
        .iter()
        .enumerate()
        .map(|(index, t)| match t.to_tessellation().and_then(|t| validate_tessellation(&g, &t).map(|_| t)) {
            Ok(t) => {
                valid.push(t);
                json!({"index": index, "valid": true})
            }
            Err(e) => json!({"index": index, "valid": false, "violation": e.to_string(), "kind": kind_of(&e)}),
        })
        .collect();
    let uncovered: Vec<[usize; 2]> = union_covers_edges(&g, &valid).into_iter().map(|(u, v)| [u, v]).collect();
    let all_valid = valid.len() == doc.tessellations.len();
    let document = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "all_valid": all_valid,
        "tessellations": findings,
        "uncovered_edges": uncovered,
        "covers_all_edges": all_valid && uncovered.is_empty(),
    });
    emit(out, |w| writeln!(w, "{}", serde_json::to_string_pretty(&document)?))?;
    if out.is_some() {
        println!("all_valid\t{all_valid}");
        println!("uncovered_edges\t{}", uncovered.len());
    }
    Ok(())
}

/// Variant name of an error, for machine-readable reports.
fn kind_of(e: &sqw::Error) -> String {
    let debug = format!("{e:?}");
    debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}
