//! Fixed-step fourth-order Runge–Kutta integration of `iħ ∂ₜψ = H(t)ψ`.
//!
//! The integration step `PropagationSettings::dt` may be finer than the grid
//! spacing; the grid spacing must then be an integer multiple of it. States
//! are never renormalized. A norm drift beyond `norm_tolerance` aborts the run.

use num_complex::Complex64 as C64;

use crate::error::{invalid, Error, Result};
use crate::model::SystemConfig;
use crate::state::StateVector;
use crate::trajectory::Trajectory;
use crate::units::HBAR;

/// Largest norm drift any run may tolerate.
pub const HARD_NORM_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationSettings {
    /// Integration step in ps.
    pub dt: f64,
    /// Whether callers should accompany results with a step-halving check.
    pub convergence_check: bool,
    /// Allowed `|‖ψ‖ − 1|` at every sample; at most [`HARD_NORM_LIMIT`].
    pub norm_tolerance: f64,
}

impl Default for PropagationSettings {
    fn default() -> Self {
        Self { dt: 0.001, convergence_check: true, norm_tolerance: 1e-8 }
    }
}

impl PropagationSettings {
    pub fn with_dt(self, dt: f64) -> Self {
        Self { dt, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return invalid(format!("integration step must be positive, got {}", self.dt));
        }
        if !(self.norm_tolerance > 0.0 && self.norm_tolerance <= HARD_NORM_LIMIT) {
            return invalid(format!("norm tolerance must lie in (0, {HARD_NORM_LIMIT}], got {}", self.norm_tolerance));
        }
        Ok(())
    }
}

/// Number of integration steps per grid interval.
fn substeps(grid_dt: f64, dt: f64) -> Result<usize> {
    let ratio = grid_dt / dt;
    let n = ratio.round();
    if n < 1.0 || (ratio - n).abs() > 1e-9 * ratio {
        return invalid(format!(
            "grid spacing {grid_dt} ps is not an integer multiple of the integration step {dt} ps"
        ));
    }
    Ok(n as usize)
}

#[inline]
fn derivative(cfg: &SystemConfig, t: f64, psi: &[C64; 3]) -> [C64; 3] {
    let h_psi = cfg.hamiltonian(t).mul_raw(psi);
    let scale = C64::new(0.0, -1.0 / HBAR);
    [h_psi[0] * scale, h_psi[1] * scale, h_psi[2] * scale]
}

#[inline]
fn axpy(psi: &[C64; 3], k: &[C64; 3], h: f64) -> [C64; 3] {
    [psi[0] + k[0] * h, psi[1] + k[1] * h, psi[2] + k[2] * h]
}

fn rk4_step(cfg: &SystemConfig, t: f64, h: f64, psi: &[C64; 3]) -> [C64; 3] {
    let k1 = derivative(cfg, t, psi);
    let k2 = derivative(cfg, t + 0.5 * h, &axpy(psi, &k1, 0.5 * h));
    let k3 = derivative(cfg, t + 0.5 * h, &axpy(psi, &k2, 0.5 * h));
    let k4 = derivative(cfg, t + h, &axpy(psi, &k3, h));
    let mut out = *psi;
    for j in 0..3 {
        out[j] += (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) * (h / 6.0);
    }
    out
}

/// Integrates from `psi0` at `grid.t_start` and samples every grid point.
pub fn propagate(cfg: &SystemConfig, psi0: &StateVector, settings: &PropagationSettings) -> Result<Trajectory> {
    settings.validate()?;
    if psi0.dim() != cfg.dim() {
        return Err(Error::DimensionMismatch { expected: cfg.dim(), found: psi0.dim() });
    }
    let grid = cfg.grid;
    let n_sub = substeps(grid.dt(), settings.dt)?;
    let h = grid.dt() / n_sub as f64;
    let dim = psi0.dim();

    let mut states = Vec::with_capacity(grid.len());
    states.push(*psi0);
    let mut psi = *psi0.raw();
    for i in 0..grid.steps() {
        let t0 = grid.time(i);
        for s in 0..n_sub {
            psi = rk4_step(cfg, t0 + s as f64 * h, h, &psi);
        }
        let state = StateVector::unchecked(psi, dim);
        let drift = (state.norm() - 1.0).abs();
        if drift.is_nan() || drift > settings.norm_tolerance {
            return Err(Error::IntegrationFailure { time_ps: grid.time(i + 1), drift });
        }
        states.push(state);
    }
    Ok(Trajectory::new(grid, states))
}

/// Maximum over the grid of `‖ψ_dt(t) − ψ_{dt/2}(t)‖`.
pub fn convergence_report(cfg: &SystemConfig, psi0: &StateVector, settings: &PropagationSettings) -> Result<f64> {
    let coarse = propagate(cfg, psi0, settings)?;
    let fine = propagate(cfg, psi0, &settings.with_dt(settings.dt / 2.0))?;
    Ok(coarse.states().iter().zip(fine.states()).map(|(a, b)| a.distance(b)).fold(0.0, f64::max))
}
