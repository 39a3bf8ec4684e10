//! Run configuration: a JSON file with command-line overrides on top.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde::Deserialize;
use sqw::Angle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    #[default]
    Line,
    Graph,
    CoinedEmbedding,
}

/// Initial state: `"basis:i"`, `"uniform:i,j,..."`, or a list of `[re, im]`
/// amplitudes.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum InitSpec {
    Text(String),
    Amplitudes(Vec<[f64; 2]>),
}

impl Default for InitSpec {
    fn default() -> Self {
        Self::Text("basis:0".into())
    }
}

/// Where the initial amplitudes sit: explicit sites, or a list starting at
/// the first site.
#[derive(Debug, Clone, PartialEq)]
pub enum Support {
    Sites(Vec<(i64, Complex64)>),
    Dense(Vec<Complex64>),
}

impl InitSpec {
    pub fn parse_flag(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            let amps: Vec<[f64; 2]> = serde_json::from_str(text).context("amplitude list must be [[re, im], ...]")?;
            Ok(Self::Amplitudes(amps))
        } else {
            Ok(Self::Text(text.to_string()))
        }
    }

    pub fn support(&self) -> Result<Support> {
        match self {
            Self::Amplitudes(amps) => Ok(Support::Dense(amps.iter().map(|&[re, im]| Complex64::new(re, im)).collect())),
            Self::Text(text) => {
                let (kind, rest) = text.split_once(':').with_context(|| format!("bad initial state {text:?}"))?;
                let sites: Vec<i64> = rest
                    .split(',')
                    .map(|s| s.trim().parse().with_context(|| format!("bad site {s:?} in {text:?}")))
                    .collect::<Result<_>>()?;
                match kind.trim() {
                    "basis" if sites.len() == 1 => Ok(Support::Sites(vec![(sites[0], Complex64::new(1.0, 0.0))])),
                    "basis" => bail!("basis state takes exactly one site: {text:?}"),
                    "uniform" => {
                        let mut sorted = sites.clone();
                        sorted.sort_unstable();
                        sorted.dedup();
                        if sorted.len() != sites.len() {
                            bail!("repeated site in {text:?}");
                        }
                        let a = Complex64::new(1.0 / (sites.len() as f64).sqrt(), 0.0);
                        Ok(Support::Sites(sites.into_iter().map(|s| (s, a)).collect()))
                    }
                    other => bail!("unknown initial state kind {other:?}; use basis, uniform or an amplitude list"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub model: Option<Model>,
    pub theta: Option<Angle>,
    pub theta0: Option<Angle>,
    pub theta1: Option<Angle>,
    /// One angle per tessellation in graph mode.
    pub thetas: Option<Vec<Angle>>,
    pub alpha: Option<Angle>,
    pub beta: Option<Angle>,
    pub phi0: Option<Angle>,
    pub phi1: Option<Angle>,
    pub steps: Option<usize>,
    pub ring_size: Option<usize>,
    pub graph: Option<PathBuf>,
    pub coin: Option<serde_json::Value>,
    pub init: Option<InitSpec>,
    pub out: Option<PathBuf>,
    pub moments_out: Option<PathBuf>,
}

impl RunConfig {
    /// Reads a config file; relative graph paths resolve against its folder.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut config: Self = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let (Some(graph), Some(dir)) = (&config.graph, path.parent()) {
            if graph.is_relative() {
                config.graph = Some(dir.join(graph));
            }
        }
        Ok(config)
    }

    /// Fields set in `flags` win.
    pub fn overlay(self, flags: RunConfig) -> Self {
        Self {
            model: flags.model.or(self.model),
            theta: flags.theta.or(self.theta),
            theta0: flags.theta0.or(self.theta0),
            theta1: flags.theta1.or(self.theta1),
            thetas: flags.thetas.or(self.thetas),
            alpha: flags.alpha.or(self.alpha),
            beta: flags.beta.or(self.beta),
            phi0: flags.phi0.or(self.phi0),
            phi1: flags.phi1.or(self.phi1),
            steps: flags.steps.or(self.steps),
            ring_size: flags.ring_size.or(self.ring_size),
            graph: flags.graph.or(self.graph),
            coin: flags.coin.or(self.coin),
            init: flags.init.or(self.init),
            out: flags.out.or(self.out),
            moments_out: flags.moments_out.or(self.moments_out),
        }
    }

    pub fn steps(&self) -> usize {
        self.steps.unwrap_or(0)
    }

    pub fn init(&self) -> InitSpec {
        self.init.clone().unwrap_or_default()
    }

    /// `(θ₀, θ₁)`: an explicit pair wins over the shared `theta`.
    pub fn theta_pair(&self) -> Result<(f64, f64)> {
        let shared = self.theta.map(Angle::radians);
        let first = self.theta0.map(Angle::radians).or(shared);
        let second = self.theta1.map(Angle::radians).or(shared);
        match (first, second) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => bail!("set --theta, or both --theta0 and --theta1"),
        }
    }

    /// `α`, `β` (default `α`) and the phases (default 0).
    pub fn line_angles(&self) -> Result<(f64, f64, f64, f64)> {
        let alpha = self.alpha.context("line model needs --alpha")?.radians();
        let beta = self.beta.map_or(alpha, Angle::radians);
        let phi0 = self.phi0.map_or(0.0, Angle::radians);
        let phi1 = self.phi1.map_or(0.0, Angle::radians);
        Ok((alpha, beta, phi0, phi1))
    }

    pub fn graph_path(&self) -> Result<&Path> {
        self.graph.as_deref().context("this model needs --graph")
    }
}

/// `start,end,count`, e.g. `0,pi,101`.
pub fn parse_grid(text: &str) -> Result<sqw::line::GridAxis> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [start, end, count] = parts[..] else {
        bail!("grid must be start,end,count: {text:?}");
    };
    let start: Angle = start.parse()?;
    let end: Angle = end.parse()?;
    let count: usize = count.parse().with_context(|| format!("bad grid count {count:?}"))?;
    Ok(sqw::line::GridAxis::new(start.radians(), end.radians(), count))
}
