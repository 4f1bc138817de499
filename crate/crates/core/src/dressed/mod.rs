//! Dressed-state analysis.
//!
//! The dressed frame is always built from the first pulse alone; the second
//! pulse is treated as a perturbation acting between these partially dressed
//! states. Dressed states are indexed by ascending energy, so for the
//! two-level system index 0 is `ψ₋` and index 1 is `ψ₊`.

mod jacobi;
mod three_level;
mod tls;

use num_complex::Complex64 as C64;

use crate::error::{invalid, Error, Result};
use crate::grid::TimeGrid;
use crate::model::{SystemConfig, SystemKind};
use crate::pulses::envelope;
use crate::trajectory::Trajectory;

pub use three_level::{couplings_3ls, dressed_3ls, Couplings3LS, DressedFrame3LS};
pub use tls::{dressed_frame_coupling, rabi_splitting, shifted_energies, tls_dressed, DressedFrameTLS};

/// Index of `ψ₋` in two-level dressed amplitudes.
pub const PSI_MINUS: usize = 0;
/// Index of `ψ₊` in two-level dressed amplitudes.
pub const PSI_PLUS: usize = 1;

#[derive(Debug, Clone)]
pub enum DressedFrames {
    TwoLevel(Vec<DressedFrameTLS>),
    ThreeLevel(Vec<DressedFrame3LS>),
}

/// A trajectory expressed in the instantaneous dressed basis of the first pulse.
#[derive(Debug, Clone)]
pub struct DressedTrajectory {
    grid: TimeGrid,
    frames: DressedFrames,
    amplitudes: Vec<[C64; 3]>,
}

impl DressedTrajectory {
    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn frames(&self) -> &DressedFrames {
        &self.frames
    }

    pub fn dim(&self) -> usize {
        match self.frames {
            DressedFrames::TwoLevel(_) => 2,
            DressedFrames::ThreeLevel(_) => 3,
        }
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Dressed amplitudes at sample `i`; entries beyond `dim()` are zero.
    pub fn amplitudes(&self, i: usize) -> &[C64; 3] {
        &self.amplitudes[i]
    }

    /// Occupation of dressed state `j` at every sample.
    pub fn occupations(&self, j: usize) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a[j].norm_sqr()).collect()
    }

    /// All dressed occupations at sample `i`.
    pub fn occupations_at(&self, i: usize) -> Vec<f64> {
        self.amplitudes[i][..self.dim()].iter().map(|a| a.norm_sqr()).collect()
    }

    /// `⟨|ψ_j⟩⟨ψ_k|⟩ = b_k · conj(b_j)` at every sample.
    pub fn coherences(&self, j: usize, k: usize) -> Vec<C64> {
        self.amplitudes.iter().map(|a| a[k] * a[j].conj()).collect()
    }

    pub fn tls_frames(&self) -> Option<&[DressedFrameTLS]> {
        match &self.frames {
            DressedFrames::TwoLevel(f) => Some(f),
            DressedFrames::ThreeLevel(_) => None,
        }
    }

    pub fn frames_3ls(&self) -> Option<&[DressedFrame3LS]> {
        match &self.frames {
            DressedFrames::ThreeLevel(f) => Some(f),
            DressedFrames::TwoLevel(_) => None,
        }
    }
}

fn check_trajectory(traj: &Trajectory, cfg: &SystemConfig) -> Result<()> {
    if traj.dim() != cfg.dim() {
        return Err(Error::DimensionMismatch { expected: cfg.dim(), found: traj.dim() });
    }
    if traj.len() != cfg.grid.len() {
        return invalid(format!(
            "trajectory has {} samples but the configuration grid has {}",
            traj.len(),
            cfg.grid.len()
        ));
    }
    Ok(())
}

/// Two-level dressed frames of the first pulse along the grid.
pub fn tls_frames(cfg: &SystemConfig) -> Vec<DressedFrameTLS> {
    let pulse1 = cfg.drive.pulse1();
    cfg.grid.times().map(|t| tls_dressed(envelope(pulse1, t), pulse1.detuning())).collect()
}

/// Three-level dressed frames of the first pulse along the grid, with
/// eigenvector signs carried continuously from sample to sample.
pub fn frames_3ls(cfg: &SystemConfig) -> Result<Vec<DressedFrame3LS>> {
    if !matches!(cfg.kind, SystemKind::Biexciton { .. }) {
        return invalid("three-level frames require a biexciton system");
    }
    let dressing = cfg.first_pulse_only();
    let mut frames: Vec<DressedFrame3LS> = Vec::with_capacity(cfg.grid.len());
    for t in cfg.grid.times() {
        let frame = dressed_3ls(&dressing.hamiltonian(t), frames.last())?;
        frames.push(frame);
    }
    Ok(frames)
}

/// Projects a two-level trajectory onto the dressed states of the first pulse.
pub fn project_tls(traj: &Trajectory, cfg: &SystemConfig) -> Result<DressedTrajectory> {
    if cfg.kind != SystemKind::TwoLevel {
        return invalid("two-level projection requires a two-level system");
    }
    check_trajectory(traj, cfg)?;
    let frames = tls_frames(cfg);
    let amplitudes = traj
        .states()
        .iter()
        .zip(&frames)
        .map(|(s, f)| {
            let [minus, plus] = f.to_dressed(s.amplitudes());
            [minus, plus, C64::new(0.0, 0.0)]
        })
        .collect();
    Ok(DressedTrajectory { grid: cfg.grid, frames: DressedFrames::TwoLevel(frames), amplitudes })
}

/// Projects a three-level trajectory onto the continuity-tracked dressed states
/// of the first pulse.
pub fn project_3ls(traj: &Trajectory, cfg: &SystemConfig) -> Result<DressedTrajectory> {
    check_trajectory(traj, cfg)?;
    let frames = frames_3ls(cfg)?;
    let amplitudes = traj
        .states()
        .iter()
        .zip(&frames)
        .map(|(s, f)| {
            let bare = s.amplitudes();
            let mut out = [C64::new(0.0, 0.0); 3];
            for (j, row) in f.coefficients.iter().enumerate() {
                out[j] = (0..3).map(|k| bare[k] * row[k]).sum();
            }
            out
        })
        .collect();
    Ok(DressedTrajectory { grid: cfg.grid, frames: DressedFrames::ThreeLevel(frames), amplitudes })
}

/// Exciton occupation split into its dressed-population part
/// `c²P₊ + c̃²P₋` and its dressed-coherence part `2cc̃·Re⟨|ψ₊⟩⟨ψ₋|⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcitonDecomposition {
    pub population: Vec<f64>,
    pub coherence: Vec<f64>,
}

impl ExcitonDecomposition {
    /// Sum of both parts, equal to the bare exciton occupation.
    pub fn total(&self) -> Vec<f64> {
        self.population.iter().zip(&self.coherence).map(|(p, c)| p + c).collect()
    }
}

pub fn exciton_decomposition(dtraj: &DressedTrajectory) -> Result<ExcitonDecomposition> {
    let frames = dtraj
        .tls_frames()
        .ok_or_else(|| Error::InvalidArgument("exciton decomposition requires a two-level trajectory".into()))?;
    let (population, coherence) = frames
        .iter()
        .zip(&dtraj.amplitudes)
        .map(|(f, a)| {
            let (minus, plus) = (a[PSI_MINUS], a[PSI_PLUS]);
            let pop = f.c * f.c * plus.norm_sqr() + f.c_tilde * f.c_tilde * minus.norm_sqr();
            let coh = 2.0 * f.c * f.c_tilde * (minus * plus.conj()).re;
            (pop, coh)
        })
        .unzip();
    Ok(ExcitonDecomposition { population, coherence })
}
