//! Command-line driver for `symprod-core`: config parsing, identity suites,
//! experiments, and JSON/CSV artifacts.
//!
//! Exit codes: 0 when every asserted tolerance holds, 1 on a tolerance
//! failure or a numerical error, 2 on a configuration or flag error.

pub mod config;
pub mod experiments;
pub mod output;

use std::{ffi::OsString, fs, path::PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::{
    config::{Command, ConfigError, Overrides, RunConfig},
    experiments as ex,
    output::Outcome,
};

pub use symprod_core as core;

#[derive(Debug, Parser)]
#[command(name = "symprod", version, about = "Cauchy-type transforms on symmetric products of planar domains")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Evaluate the Cauchy, Cauchy–Nørlund and symmetrized transforms at sample points.
    Transform(Flags),
    /// Run the cross-module identity suite.
    Identities(Flags),
    /// Count root-location components of the complement of Γ*.
    Components(Flags),
    /// Łojasiewicz sampling of the quotient metric.
    Loja(Flags),
    /// Principal-value blow-up fit at diagonal boundary points.
    Pv(Flags),
    /// Hölder exponent estimation.
    Holder(Flags),
    /// Proper-map route agreement and boundary regularity.
    Propermap(Flags),
}

#[derive(Debug, Args)]
struct Flags {
    /// `key = value` config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    domain: Option<String>,
    #[arg(long)]
    phi: Option<String>,
    #[arg(long)]
    propermap: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long = "tol-scale")]
    tol_scale: Option<f64>,
}

impl Flags {
    fn resolve(self, command: Command) -> Result<RunConfig, ConfigError> {
        let file = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
                Overrides::parse(&text)?
            }
            None => Overrides::default(),
        };
        let flags = Overrides {
            domain: self.domain,
            phi: self.phi,
            propermap: self.propermap,
            n: self.n,
            nodes: self.nodes,
            samples: self.samples,
            seed: self.seed,
            out: self.out,
            tol_scale: self.tol_scale,
        };
        flags.over(file).resolve(command)
    }
}

/// Caps the rayon pool at `SYMPROD_THREADS` when set.
fn init_threads() {
    if let Some(k) = std::env::var("SYMPROD_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Fails only if a pool already exists, in which case it stays as is.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

/// Runs one subcommand and returns its results.
pub fn execute(cfg: &RunConfig) -> ex::Result<Outcome> {
    let domain = cfg.domain_spec();
    let phi = cfg.phi_spec();
    let scale = cfg.tol_scale;
    let seed = cfg.seed;
    match cfg.command {
        Command::Transform => ex::transform_table(&domain, &phi, cfg.n, cfg.nodes, cfg.samples, scale, seed),
        Command::Identities => {
            let mut out = Outcome::default();
            let pts = cfg.samples;
            out.absorb("cauchy", ex::cauchy_reproduction(&cfg.domain, &domain, cfg.nodes, pts, 1e-10 * scale, seed)?);
            out.absorb("norlund", ex::norlund_identity(&domain, &phi, cfg.n.max(2), cfg.nodes, pts, 1e-9 * scale, seed)?);
            out.absorb("genocchi_hermite", ex::genocchi_hermite(cfg.n.clamp(1, 4), pts, 1e-9 * scale, seed)?);
            out.absorb("pushforward", ex::pushforward(&domain, &phi, cfg.n, cfg.nodes, pts, 1e-9 * scale, seed)?);
            if cfg.n <= 3 {
                let deriv = ex::derivative_factorization(&phi, cfg.n, cfg.nodes, pts.min(20), 1e-5 * scale, seed)?;
                out.absorb("derivative", deriv);
            }
            out.absorb("newton", ex::newton_consistency(cfg.n.min(8), pts, 1e-11 * scale, seed)?);
            Ok(out)
        }
        Command::Components => ex::census(&cfg.domain, &domain, cfg.n, cfg.samples, seed),
        Command::Loja => ex::lojasiewicz_stability(&domain, cfg.n, cfg.samples, &[seed, seed + 1, seed + 2], 5.0),
        Command::Pv => ex::pv_experiment(&phi, cfg.nodes, cfg.samples, &[(2, 0.2 * scale), (3, 0.3 * scale)]),
        Command::Holder => {
            let mut out = ex::holder_calibration(cfg.samples, 0.07 * scale)?;
            let field = ex::symmetrized_field_exponent(&domain, &phi, cfg.n, cfg.nodes, cfg.samples.min(1000), seed)?;
            out.absorb("symmetrized_field", field);
            Ok(out)
        }
        Command::Propermap => {
            ex::propermap_experiment(&cfg.propermap_kind(), cfg.n, cfg.nodes, cfg.samples, scale, seed)
        }
    }
}

fn meta(cfg: &RunConfig) -> Value {
    json!({ "version": env!("CARGO_PKG_VERSION"), "config": cfg.echo(), "seed": cfg.seed })
}

/// Parses `argv` (program name first), runs, writes artifacts, and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (command, flags) = match cli.command {
        Sub::Transform(f) => (Command::Transform, f),
        Sub::Identities(f) => (Command::Identities, f),
        Sub::Components(f) => (Command::Components, f),
        Sub::Loja(f) => (Command::Loja, f),
        Sub::Pv(f) => (Command::Pv, f),
        Sub::Holder(f) => (Command::Holder, f),
        Sub::Propermap(f) => (Command::Propermap, f),
    };
    let cfg = match flags.resolve(command) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("config error: {e}");
            return 2;
        }
    };
    init_threads();
    let outcome = match execute(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{command} failed: {e}");
            let report = json!({ "meta": meta(&cfg), "passed": false, "error": e.to_string() });
            println!("{}", serde_json::to_string_pretty(&report).unwrap_or_default());
            return 1;
        }
    };
    let report = outcome.report(meta(&cfg));
    println!("{}", serde_json::to_string_pretty(&report).unwrap_or_default());
    if let Some(dir) = &cfg.out {
        if let Err(e) = outcome.write(dir, meta(&cfg)) {
            eprintln!("cannot write {}: {e}", dir.display());
            return 1;
        }
    }
    for f in outcome.failures() {
        eprintln!("FAIL {}: {} (tolerance {})", f.name, f.value, f.tolerance);
    }
    if outcome.passed() {
        0
    } else {
        1
    }
}
