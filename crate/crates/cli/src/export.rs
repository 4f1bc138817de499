//! CSV and JSON writers.
//!
//! Numbers are written in scientific notation with 9 significant digits,
//! so identical inputs produce byte-identical files.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use twocolor::dressed::{
    couplings_3ls, exciton_decomposition, project_3ls, project_tls, shifted_energies, PSI_MINUS, PSI_PLUS,
};
use twocolor::optimizer::TraceEntry;
use twocolor::{SystemConfig, Trajectory};

use crate::error::{CliError, CliResult};

pub const TRAJECTORY_COLUMNS: [&str; 7] = ["t_ps", "occ_g", "occ_x", "occ_xx", "norm", "env1_mev", "env2_mev"];
pub const DRESSED_TLS_COLUMNS: [&str; 9] = [
    "t_ps",
    "e_plus_mev",
    "e_minus_mev",
    "e_plus2_mev",
    "e_minus2_mev",
    "occ_psi_plus",
    "occ_psi_minus",
    "pop_contribution",
    "coh_contribution",
];
pub const DRESSED_3LS_COLUMNS: [&str; 10] =
    ["t_ps", "e1_mev", "e2_mev", "e3_mev", "occ_psi1", "occ_psi2", "occ_psi3", "omega12", "omega13", "omega23"];
pub const TRACE_COLUMNS: [&str; 3] = ["detuning_mev", "area_pi", "objective"];

/// Formats a value with 9 significant digits. Negative zero prints as zero.
pub fn number(v: f64) -> String {
    format!("{:.8e}", v + 0.0)
}

pub fn write_csv<I>(path: &Path, header: &[&str], rows: I) -> CliResult<()>
where
    I: IntoIterator<Item = Vec<f64>>,
{
    let fail = |e: csv::Error| CliError::Output { path: path.to_owned(), message: e.to_string() };
    let mut w = csv::Writer::from_path(path).map_err(fail)?;
    w.write_record(header).map_err(fail)?;
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        w.write_record(row.into_iter().map(number)).map_err(fail)?;
    }
    w.flush().map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let io = |source| CliError::Io { path: path.to_owned(), source };
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    serde_json::to_writer_pretty(&mut w, value)
        .map_err(|e| CliError::Output { path: path.to_owned(), message: e.to_string() })?;
    writeln!(w).and_then(|_| w.flush()).map_err(io)
}

pub fn trajectory_rows(cfg: &SystemConfig, traj: &Trajectory) -> Vec<Vec<f64>> {
    let dim = traj.dim();
    traj.states()
        .iter()
        .zip(traj.norms())
        .enumerate()
        .map(|(i, (s, norm))| {
            let t = traj.grid().time(i);
            let a = s.amplitudes();
            let occ_xx = if dim == 3 { a[2].norm_sqr() } else { 0.0 };
            let (env1, env2) = cfg.drive.envelopes(t);
            vec![t, a[0].norm_sqr(), a[1].norm_sqr(), occ_xx, *norm, env1, env2]
        })
        .collect()
}

/// Dressed-state analysis, with columns matching [`DRESSED_TLS_COLUMNS`] or
/// [`DRESSED_3LS_COLUMNS`] depending on the system.
pub fn dressed_rows(cfg: &SystemConfig, traj: &Trajectory) -> CliResult<(&'static [&'static str], Vec<Vec<f64>>)> {
    if cfg.dim() == 2 {
        let d = project_tls(traj, cfg)?;
        let parts = exciton_decomposition(&d)?;
        let frames = d.tls_frames().expect("two-level frames");
        let omega_delta = cfg.drive.omega_delta_energy().unwrap_or(0.0);
        let rows = frames
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let t = cfg.grid.time(i);
                let (e_plus2, e_minus2) = shifted_energies(f, cfg.drive.envelopes(t).1, omega_delta, t);
                let occ = d.occupations_at(i);
                vec![
                    t,
                    f.e_plus,
                    f.e_minus,
                    e_plus2,
                    e_minus2,
                    occ[PSI_PLUS],
                    occ[PSI_MINUS],
                    parts.population[i],
                    parts.coherence[i],
                ]
            })
            .collect();
        Ok((&DRESSED_TLS_COLUMNS, rows))
    } else {
        let d = project_3ls(traj, cfg)?;
        let frames = d.frames_3ls().expect("three-level frames");
        let rows = frames
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let occ = d.occupations_at(i);
                let c = couplings_3ls(f);
                vec![
                    cfg.grid.time(i),
                    f.energies[0],
                    f.energies[1],
                    f.energies[2],
                    occ[0],
                    occ[1],
                    occ[2],
                    c.omega12,
                    c.omega13,
                    c.omega23,
                ]
            })
            .collect();
        Ok((&DRESSED_3LS_COLUMNS, rows))
    }
}

pub fn trace_rows(trace: &[TraceEntry]) -> Vec<Vec<f64>> {
    trace.iter().map(|e| vec![e.detuning, e.area, e.objective]).collect()
}
