use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{self, Suite};
use crate::config::{parse_point, RunConfig};
use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(
    name = "eqfid",
    version,
    about = "Moments, symbols and dynamics of two-particle fiducial states"
)]
pub struct Cli {
    /// key=value file applied on top of the defaults and below any flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form moment table for each gamma.
    Moments(Common),
    /// Check closed forms against independent evaluations.
    Verify(VerifyArgs),
    /// Integrate the enhanced Hamiltonian for each gamma and compare.
    Simulate(SimulateArgs),
    /// Coefficients and value of the enhanced Hamiltonian at one point.
    Hamiltonian(HamiltonianArgs),
}

/// Flags shared by every subcommand. Values are parsed by the same code that
/// reads the config file.
#[derive(Debug, Args, Default)]
pub struct Common {
    /// Comma-separated statistics parameters in [0,2).
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub omega: Option<String>,
    #[arg(long)]
    pub hbar: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub varpi: Option<String>,
    #[arg(long)]
    pub g: Option<String>,
    /// Output file (directory for `simulate`); stdout otherwise.
    #[arg(long)]
    pub out: Option<String>,
    /// json or csv.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long)]
    pub smax: Option<String>,
    #[arg(long)]
    pub rel_tol: Option<String>,
    #[arg(long)]
    pub mc_samples: Option<String>,
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long)]
    pub radial_nodes: Option<String>,
    #[arg(long)]
    pub angular_nodes: Option<String>,
    #[arg(long)]
    pub fock_dim: Option<String>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub dt: Option<String>,
    #[arg(long)]
    pub t_end: Option<String>,
    /// leapfrog or yoshida4.
    #[arg(long)]
    pub scheme: Option<String>,
    #[arg(long)]
    pub record_every: Option<String>,
    /// px1,py1,px2,py2,qx1,qy1,qx2,qy2.
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
}

#[derive(Debug, Args)]
pub struct HamiltonianArgs {
    #[command(flatten)]
    pub common: Common,
    /// 0 or px1,py1,px2,py2,qx1,qy1,qx2,qy2.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub point: String,
    /// Compare against the printed coefficient fixtures.
    #[arg(long)]
    pub dump_discrepancies: bool,
}

impl Common {
    fn pairs(&self) -> Vec<(&'static str, &Option<String>)> {
        vec![
            ("gamma", &self.gamma),
            ("omega", &self.omega),
            ("hbar", &self.hbar),
            ("m", &self.m),
            ("varpi", &self.varpi),
            ("g", &self.g),
            ("out", &self.out),
            ("format", &self.format),
        ]
    }
}

fn apply(cfg: &mut RunConfig, pairs: Vec<(&'static str, &Option<String>)>) -> Result<()> {
    for (k, v) in pairs {
        if let Some(v) = v {
            cfg.set(k, v)?;
        }
    }
    Ok(())
}

/// What a successful command reports to the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    CheckFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::CheckFailed => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let mut cfg = RunConfig::default();
    if let Some(p) = &cli.config {
        cfg.apply_file(p)?;
    }
    match cli.command {
        Command::Moments(c) => {
            apply(&mut cfg, c.pairs())?;
            cfg.validate()?;
            commands::moments(&cfg)?;
            Ok(Outcome::Pass)
        }
        Command::Verify(a) => {
            let mut pairs = a.common.pairs();
            pairs.extend([
                ("smax", &a.smax),
                ("rel_tol", &a.rel_tol),
                ("mc_samples", &a.mc_samples),
                ("seed", &a.seed),
                ("radial_nodes", &a.radial_nodes),
                ("angular_nodes", &a.angular_nodes),
                ("fock_dim", &a.fock_dim),
            ]);
            apply(&mut cfg, pairs)?;
            cfg.validate()?;
            let rep = commands::verify(&cfg, a.suite)?;
            Ok(if rep.pass {
                Outcome::Pass
            } else {
                Outcome::CheckFailed
            })
        }
        Command::Simulate(a) => {
            let mut pairs = a.common.pairs();
            pairs.extend([
                ("dt", &a.dt),
                ("t_end", &a.t_end),
                ("scheme", &a.scheme),
                ("record_every", &a.record_every),
                ("x0", &a.x0),
            ]);
            apply(&mut cfg, pairs)?;
            cfg.validate()?;
            let rep = commands::simulate(&cfg)?;
            Ok(if rep.classical_coincidence == Some(false) {
                Outcome::CheckFailed
            } else {
                Outcome::Pass
            })
        }
        Command::Hamiltonian(a) => {
            apply(&mut cfg, a.common.pairs())?;
            cfg.validate()?;
            if cfg.format != crate::config::Format::Json {
                return Err(CliError::Usage("hamiltonian only writes json".into()));
            }
            let point = parse_point("point", &a.point)?;
            commands::hamiltonian(&cfg, &point, a.dump_discrepancies)?;
            Ok(Outcome::Pass)
        }
    }
}
