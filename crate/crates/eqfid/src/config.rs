//! Run parameters: built-in defaults, then a key=value file, then flags.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use eqfid_core::dynamics::{IntegratorConfig, Scheme};
use eqfid_core::moments::StatisticsParam;
use eqfid_core::oracle::QuadConfig;
use eqfid_core::symbol::{PhaseSpacePoint, PhysicalParams};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Starting point used when no `x0` is given: q₁ = (1, 0), q₂ = (−1, 0), p = 0.
pub const DEFAULT_X0: PhaseSpacePoint = PhaseSpacePoint {
    p1: [0.0, 0.0],
    p2: [0.0, 0.0],
    q1: [1.0, 0.0],
    q2: [-1.0, 0.0],
};

pub const DEFAULT_GAMMAS: [f64; 5] = [0.0, 0.25, 0.5, 1.0, 1.5];

/// Every parameter any subcommand reads.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub gammas: Vec<f64>,
    /// Whether `gammas` still holds the built-in grid.
    pub gammas_default: bool,
    pub params: PhysicalParams,
    pub quad: QuadConfig,
    pub integrator: IntegratorConfig,
    pub x0: PhaseSpacePoint,
    pub x0_default: bool,
    pub s_max: u32,
    pub fock_dim: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            gammas: DEFAULT_GAMMAS.to_vec(),
            gammas_default: true,
            params: PhysicalParams::default(),
            quad: QuadConfig::default(),
            integrator: IntegratorConfig {
                dt: 1e-3,
                t_end: 20.0,
                scheme: Scheme::Yoshida4,
                record_every: 10,
            },
            x0: DEFAULT_X0,
            x0_default: true,
            s_max: 12,
            fock_dim: 128,
            format: Format::Json,
            out: None,
        }
    }
}

/// Keys accepted by [`RunConfig::set`], in the order they are documented.
pub const KEYS: [&str; 20] = [
    "gamma",
    "omega",
    "hbar",
    "m",
    "varpi",
    "g",
    "rel_tol",
    "mc_samples",
    "seed",
    "radial_nodes",
    "angular_nodes",
    "dt",
    "t_end",
    "scheme",
    "record_every",
    "x0",
    "smax",
    "fock_dim",
    "format",
    "out",
];

fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{key}: cannot parse '{v}'")))
}

pub fn parse_list(key: &str, v: &str) -> Result<Vec<f64>> {
    let out = v
        .split(',')
        .map(|s| num::<f64>(key, s))
        .collect::<Result<Vec<_>>>()?;
    if out.is_empty() {
        return Err(CliError::Usage(format!("{key}: empty list")));
    }
    Ok(out)
}

/// "0" for the origin, otherwise px1,py1,px2,py2,qx1,qy1,qx2,qy2.
pub fn parse_point(key: &str, v: &str) -> Result<PhaseSpacePoint> {
    let xs = parse_list(key, v)?;
    match xs.len() {
        1 if xs[0] == 0.0 => Ok(PhaseSpacePoint::default()),
        8 => {
            let mut a = [0.0; 8];
            a.copy_from_slice(&xs);
            Ok(PhaseSpacePoint::from_array(a))
        }
        _ => Err(CliError::Usage(format!(
            "{key}: expected 0 or eight comma-separated values px1,py1,px2,py2,qx1,qy1,qx2,qy2"
        ))),
    }
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = value.trim();
        match key {
            "gamma" => {
                self.gammas = parse_list(key, v)?;
                self.gammas_default = false;
            }
            "omega" => self.params.omega = num(key, v)?,
            "hbar" => self.params.hbar = num(key, v)?,
            "m" => self.params.m = num(key, v)?,
            "varpi" => self.params.varpi = num(key, v)?,
            "g" => self.params.g = num(key, v)?,
            "rel_tol" => self.quad.rel_tol = num(key, v)?,
            "mc_samples" => self.quad.mc_samples = num(key, v)?,
            "seed" => self.quad.mc_seed = num(key, v)?,
            "radial_nodes" => self.quad.radial_nodes = num(key, v)?,
            "angular_nodes" => self.quad.angular_nodes = num(key, v)?,
            "dt" => self.integrator.dt = num(key, v)?,
            "t_end" => self.integrator.t_end = num(key, v)?,
            "scheme" => {
                self.integrator.scheme = match v {
                    "leapfrog" => Scheme::Leapfrog,
                    "yoshida4" => Scheme::Yoshida4,
                    _ => return Err(CliError::Usage(format!("scheme: unknown '{v}'"))),
                }
            }
            "record_every" => self.integrator.record_every = num(key, v)?,
            "x0" => {
                self.x0 = parse_point(key, v)?;
                self.x0_default = false;
            }
            "smax" => self.s_max = num(key, v)?,
            "fock_dim" => self.fock_dim = num(key, v)?,
            "format" => {
                self.format = match v {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    _ => return Err(CliError::Usage(format!("format: unknown '{v}'"))),
                }
            }
            "out" => self.out = Some(PathBuf::from(v)),
            _ => return Err(CliError::Usage(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// Lines of `key = value`; `#` starts a comment.
    pub fn apply_str(&mut self, text: &str) -> Result<()> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("config line {}: expected key=value", i + 1))
            })?;
            self.set(k.trim(), v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
        self.apply_str(&text)
    }

    /// Everything checked up front so no command starts on bad input.
    pub fn validate(&self) -> Result<()> {
        for &g in &self.gammas {
            StatisticsParam::new(g)?;
        }
        self.params.validate()?;
        self.quad.validate()?;
        self.integrator.validate()?;
        if self.s_max < 8 {
            return Err(CliError::Usage("smax must be at least 8".into()));
        }
        if self.fock_dim < 8 {
            return Err(CliError::Usage("fock_dim must be at least 8".into()));
        }
        if !self.x0.is_finite() {
            return Err(CliError::Usage("x0 must be finite".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let mut c = RunConfig::default();
        c.apply_str("# comment\ngamma = 0.5, 1\n\nhbar=0.25  # trailing\nscheme=leapfrog\n")
            .unwrap();
        assert_eq!(c.gammas, vec![0.5, 1.0]);
        assert_eq!(c.params.hbar, 0.25);
        assert_eq!(c.integrator.scheme, Scheme::Leapfrog);
        c.set("hbar", "2").unwrap();
        assert_eq!(c.params.hbar, 2.0);
    }

    #[test]
    fn bad_input_is_usage() {
        let mut c = RunConfig::default();
        assert!(matches!(c.set("nope", "1"), Err(CliError::Usage(_))));
        assert!(matches!(c.set("dt", "x"), Err(CliError::Usage(_))));
        assert!(matches!(c.apply_str("dt 1"), Err(CliError::Usage(_))));
        assert!(c.set("x0", "1,2,3").is_err());
        c.set("gamma", "2.5").unwrap();
        let e = c.validate().unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert_eq!(e.to_string(), "gamma must lie in [0,2)");
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("p", "0").unwrap(), PhaseSpacePoint::default());
        let p = parse_point("p", "1,2,3,4,5,6,7,8").unwrap();
        assert_eq!(p.q2, [7.0, 8.0]);
    }
}
