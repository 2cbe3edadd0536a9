use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use eqfid_core::dynamics::{compare_statistics, Scheme, Trajectory};
use eqfid_core::fock1d::{
    build_fock, default_unity_cutoff, fubini_study_metric, quartic_hamiltonian,
    resolution_of_unity_check, symbol_expectation, DEFAULT_UNITY_NODES,
};
use eqfid_core::moments::{moment_table, FiducialSpec, MomentTable};
use eqfid_core::oracle::{
    angular_closed_form, angular_integral, appendix_chain_check, moment_suite, Sign, APPENDIX_TOL,
    MC_SIGMAS,
};
use eqfid_core::reference_forms::discrepancy_report;
use eqfid_core::symbol::{symbol_1dof_quartic, EnhancedHamiltonian};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::{CliError, Result};
use crate::report::{Check, HamiltonianReport, RunSummary, SimulationReport, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Moments,
    Appendix,
    Fock,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Moments => "moments",
            Suite::Appendix => "appendix",
            Suite::Fock => "fock",
            Suite::All => "all",
        }
    }
}

/// Tolerances for the rows that are not covered by the core's own constants.
pub const ANGULAR_TOL: f64 = 1e-8;
pub const METRIC_TOL: f64 = 1e-6;
pub const UNITY_TOL: f64 = 1e-6;
pub const SYMBOL_TOL: f64 = 1e-8;

fn json_text<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_text<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn moments(cfg: &RunConfig) -> Result<Vec<MomentTable>> {
    let tables = cfg
        .gammas
        .iter()
        .map(|&g| moment_table(&FiducialSpec::new(g, cfg.params.omega, cfg.params.hbar)?))
        .collect::<eqfid_core::Result<Vec<_>>>()?;
    let text = match cfg.format {
        Format::Json => json_text(&tables)?,
        Format::Csv => csv_text(&tables)?,
    };
    emit(&text, cfg.out.as_deref())?;
    Ok(tables)
}

fn moment_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let lambda = cfg.params.omega / cfg.params.hbar;
    let mut out = Vec::new();
    for &g in &cfg.gammas {
        for r in moment_suite(g, lambda, &cfg.quad)? {
            let mc = r.stderr.is_some();
            out.push(Check {
                suite: "moments".into(),
                check: r.check,
                gamma: Some(g),
                at: format!("lambda={lambda}"),
                closed_form: r.closed_form,
                oracle: r.oracle,
                rel_err: r.rel_err,
                criterion: if mc { "sigma" } else { "rel" }.into(),
                tolerance: if mc { MC_SIGMAS } else { cfg.quad.rel_tol },
                stderr: r.stderr,
                pass: r.pass,
            });
        }
    }
    Ok(out)
}

/// Fixed (r₁, r₂/r₁) pairs for the angular rows; they straddle both branches
/// of the angular quadrature and stay clear of r₁ = r₂.
const ANGULAR_RADII: [f64; 3] = [0.3, 1.0, 2.5];
const ANGULAR_RATIOS: [f64; 4] = [0.3, 0.7, 0.95, 1.4];

fn appendix_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &g in &cfg.gammas {
        for sign in [Sign::Minus, Sign::Plus] {
            let sname = match sign {
                Sign::Minus => "minus",
                Sign::Plus => "plus",
            };
            for n in 0..=2 {
                let rep = appendix_chain_check(g, cfg.s_max, n, sign)?;
                // ϱ rows do not depend on n.
                for r in rep
                    .rows
                    .into_iter()
                    .filter(|r| n == 0 || r.check != "varrho")
                {
                    let at = if r.check == "varrho" {
                        format!("s={} sign={sname} u={}", r.s, r.point)
                    } else {
                        format!("s={} sign={sname} n={n}", r.s)
                    };
                    out.push(Check {
                        suite: "appendix".into(),
                        check: r.check,
                        gamma: Some(g),
                        at,
                        closed_form: r.closed_form,
                        oracle: r.quadrature,
                        rel_err: r.rel_err,
                        criterion: "rel".into(),
                        tolerance: APPENDIX_TOL,
                        stderr: None,
                        pass: r.pass,
                    });
                }
            }
        }
        for &r1 in &ANGULAR_RADII {
            for &ratio in &ANGULAR_RATIOS {
                let r2 = r1 * ratio;
                for k in [0u8, 2] {
                    let q = angular_integral(r1, r2, g, k, 128, ANGULAR_TOL)?;
                    let c = angular_closed_form(r1, r2, g, k, 1e-15)?;
                    let e = (q.value - c).abs() / c.abs();
                    out.push(Check {
                        suite: "appendix".into(),
                        check: "angular".into(),
                        gamma: Some(g),
                        at: format!("r1={r1} r2={r2} cos_power={k}"),
                        closed_form: c,
                        oracle: q.value,
                        rel_err: e,
                        criterion: "rel".into(),
                        tolerance: ANGULAR_TOL,
                        stderr: None,
                        pass: e <= ANGULAR_TOL && !q.warning,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn fock_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    let hbar = cfg.params.hbar;
    if !(hbar > 0.0) {
        return Err(CliError::Usage("the fock suite needs hbar > 0".into()));
    }
    let f = build_fock(cfg.fock_dim, hbar)?;
    let sh = hbar.sqrt();
    let abs_row = |check: &str, at: String, closed: f64, oracle: f64, tol: f64, ok: bool| {
        let d = (oracle - closed).abs();
        Check {
            suite: "fock".into(),
            check: check.into(),
            gamma: None,
            at,
            closed_form: closed,
            oracle,
            rel_err: d / closed.abs().max(1.0),
            criterion: "abs".into(),
            tolerance: tol,
            stderr: None,
            pass: d <= tol && ok,
        }
    };
    let mut out = Vec::new();
    for p in [-1.0, 0.0, 1.0] {
        for q in [-1.0, 0.0, 1.0] {
            let m = fubini_study_metric(&f, p * sh, q * sh, 1e-3 * sh)?;
            out.push(abs_row(
                "metric_identity_defect",
                format!("p={} q={}", p * sh, q * sh),
                0.0,
                m.identity_defect(),
                METRIC_TOL,
                !m.warning,
            ));
        }
    }
    let u = resolution_of_unity_check(&f, default_unity_cutoff(&f), DEFAULT_UNITY_NODES)?;
    let at = format!("block={} dim={}", u.block, f.dim());
    out.push(abs_row(
        "unity_diagonal",
        at.clone(),
        0.0,
        u.max_diag_dev,
        UNITY_TOL,
        true,
    ));
    out.push(abs_row(
        "unity_offdiagonal",
        at,
        0.0,
        u.max_offdiag,
        UNITY_TOL,
        true,
    ));

    let h = quartic_hamiltonian(&f);
    let (q2, q4) = (0.5 * hbar, 0.75 * hbar * hbar);
    for i in 0..5 {
        for j in 0..4 {
            let p = (-2.0 + i as f64) * sh;
            let q = (-1.5 + j as f64) * sh;
            let v = symbol_expectation(&f, &h, p, q)?;
            let want = symbol_1dof_quartic(q2, q2, q4, p, q);
            let e = (v.value - want).abs() / want.abs();
            out.push(Check {
                suite: "fock".into(),
                check: "quartic_symbol".into(),
                gamma: None,
                at: format!("p={p} q={q}"),
                closed_form: want,
                oracle: v.value,
                rel_err: e,
                criterion: "rel".into(),
                tolerance: SYMBOL_TOL,
                stderr: None,
                pass: e <= SYMBOL_TOL && !v.truncation_warning,
            });
        }
    }
    Ok(out)
}

pub fn verify(cfg: &RunConfig, suite: Suite) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Moments | Suite::All) {
        checks.extend(moment_checks(cfg)?);
    }
    if matches!(suite, Suite::Appendix | Suite::All) {
        checks.extend(appendix_checks(cfg)?);
    }
    if matches!(suite, Suite::Fock | Suite::All) {
        checks.extend(fock_checks(cfg)?);
    }
    let rep = VerifyReport::new(suite.name(), cfg.gammas.clone(), cfg.quad, checks);
    let text = match cfg.format {
        Format::Json => json_text(&rep)?,
        Format::Csv => csv_text(&rep.checks)?,
    };
    emit(&text, cfg.out.as_deref())?;
    Ok(rep)
}

pub const TRAJECTORY_HEADER: [&str; 10] = [
    "t", "px1", "py1", "px2", "py2", "qx1", "qy1", "qx2", "qy2", "E",
];

pub fn trajectory_file_name(gamma: f64) -> String {
    format!("trajectory_gamma_{gamma}.csv")
}

fn write_trajectory(path: &Path, tr: &Trajectory, gamma: f64, cfg: &RunConfig) -> Result<()> {
    let mut w = BufWriter::new(fs::File::create(path)?);
    let p = &cfg.params;
    let ic = &cfg.integrator;
    let d = RunConfig::default();
    let tag = |is_default: bool| {
        if is_default {
            " (artifact-chosen default)"
        } else {
            ""
        }
    };
    writeln!(w, "# eqfid simulate gamma={gamma}")?;
    writeln!(
        w,
        "# params m={} varpi={} g={} hbar={} omega={}",
        p.m, p.varpi, p.g, p.hbar, p.omega
    )?;
    let x = cfg.x0.to_array();
    writeln!(
        w,
        "# x0 px1,py1,px2,py2,qx1,qy1,qx2,qy2 = {}{}",
        x.map(|v| v.to_string()).join(","),
        tag(cfg.x0_default)
    )?;
    let scheme = match ic.scheme {
        Scheme::Leapfrog => "leapfrog",
        Scheme::Yoshida4 => "yoshida4",
    };
    writeln!(
        w,
        "# scheme={scheme}{}",
        tag(ic.scheme == d.integrator.scheme)
    )?;
    writeln!(w, "# dt={}{}", ic.dt, tag(ic.dt == d.integrator.dt))?;
    writeln!(
        w,
        "# t_end={}{}",
        ic.t_end,
        tag(ic.t_end == d.integrator.t_end)
    )?;
    writeln!(w, "# record_every={}", ic.record_every)?;
    let mut c = csv::Writer::from_writer(w);
    c.write_record(TRAJECTORY_HEADER)?;
    for ((t, s), e) in tr.times.iter().zip(&tr.states).zip(&tr.energies) {
        let mut row = Vec::with_capacity(10);
        row.push(*t);
        row.extend_from_slice(&s.to_array());
        row.push(*e);
        c.serialize(row)?;
    }
    c.flush()?;
    Ok(())
}

pub fn simulate(cfg: &RunConfig) -> Result<SimulationReport> {
    let dir = cfg
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from("eqfid-out"));
    fs::create_dir_all(&dir)?;
    let hs = cfg
        .gammas
        .iter()
        .map(|&g| EnhancedHamiltonian::for_gamma(cfg.params, g))
        .collect::<eqfid_core::Result<Vec<_>>>()?;
    let rep = compare_statistics(&hs, cfg.x0, &cfg.integrator)?;
    let mut runs = Vec::new();
    for (g, tr) in rep.gammas.iter().zip(&rep.trajectories) {
        let name = trajectory_file_name(*g);
        write_trajectory(&dir.join(&name), tr, *g, cfg)?;
        runs.push(RunSummary {
            gamma: *g,
            file: name,
            records: tr.len(),
            energy_drift: tr.energy_drift(),
            angular_momentum_drift: tr.angular_momentum_drift(),
            dt_warning: tr.dt_warning,
        });
    }
    let out = SimulationReport {
        params: cfg.params,
        integrator: cfg.integrator,
        effective_dt: cfg.integrator.effective_dt(),
        x0: cfg.x0,
        x0_source: if cfg.x0_default { "default" } else { "user" }.into(),
        runs,
        pairs: rep.pairs,
        classical_coincidence: rep.classical_coincidence,
    };
    fs::write(dir.join("comparison.json"), json_text(&out)?)?;
    Ok(out)
}

pub fn hamiltonian(
    cfg: &RunConfig,
    point: &eqfid_core::symbol::PhaseSpacePoint,
    dump: bool,
) -> Result<HamiltonianReport> {
    let gamma = match cfg.gammas.as_slice() {
        [g] if !cfg.gammas_default => *g,
        _ => {
            return Err(CliError::Usage(
                "hamiltonian takes exactly one --gamma".into(),
            ))
        }
    };
    let h = EnhancedHamiltonian::for_gamma(cfg.params, gamma)?;
    if dump && !(cfg.params.hbar > 0.0) {
        return Err(CliError::Usage(
            "--dump-discrepancies needs hbar > 0".into(),
        ));
    }
    let discrepancies = if dump {
        Some(discrepancy_report(&cfg.params, gamma)?)
    } else {
        None
    };
    let rep = HamiltonianReport {
        gamma,
        params: cfg.params,
        point: *point,
        coefficients: h.coefficient_records(),
        value: h.eval(point),
        classical: h.classical(point),
        quantum: h.quantum(point),
        discrepancies,
    };
    emit(&json_text(&rep)?, cfg.out.as_deref())?;
    Ok(rep)
}
