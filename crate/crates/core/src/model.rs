//! Rotating-frame Hamiltonians (frame of the first pulse), in meV.

use num_complex::Complex64 as C64;

use crate::error::{invalid, Result};
use crate::grid::TimeGrid;
use crate::operator::HermitianOperator;
use crate::pulses::{rotating_frame_drive, TwoColorDrive};

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// Emitter level structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemKind {
    /// Ground and exciton.
    TwoLevel,
    /// Ground, exciton and biexciton, the latter lowered by `binding_energy_mev`
    /// below twice the exciton energy.
    Biexciton { binding_energy_mev: f64 },
}

impl SystemKind {
    pub fn dim(&self) -> usize {
        match self {
            SystemKind::TwoLevel => 2,
            SystemKind::Biexciton { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    pub kind: SystemKind,
    pub drive: TwoColorDrive,
    pub grid: TimeGrid,
}

impl SystemConfig {
    pub fn new(kind: SystemKind, drive: TwoColorDrive, grid: TimeGrid) -> Result<Self> {
        if let SystemKind::Biexciton { binding_energy_mev } = kind {
            if !binding_energy_mev.is_finite() {
                return invalid("binding energy must be finite");
            }
        }
        Ok(Self { kind, drive, grid })
    }

    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    /// Same system driven by the first pulse only.
    pub fn first_pulse_only(&self) -> Self {
        Self { drive: TwoColorDrive::single(*self.drive.pulse1()), ..*self }
    }

    /// Rotating-frame Hamiltonian of whichever kind this is.
    pub fn hamiltonian(&self, t: f64) -> HermitianOperator {
        let coupling = -0.5 * rotating_frame_drive(&self.drive, t);
        let delta1 = self.drive.pulse1().detuning();
        match self.kind {
            SystemKind::TwoLevel => HermitianOperator::from_lower(&[0.0, -delta1], &[coupling]),
            SystemKind::Biexciton { binding_energy_mev } => HermitianOperator::from_lower(
                &[0.0, -delta1, -(2.0 * delta1 + binding_energy_mev)],
                &[coupling, ZERO, coupling],
            ),
        }
    }
}

/// Two-level Hamiltonian: `H[x][x] = −ħΔ₁`, `H[x][g] = −½·drive(t)`.
pub fn hamiltonian_tls(cfg: &SystemConfig, t: f64) -> Result<HermitianOperator> {
    match cfg.kind {
        SystemKind::TwoLevel => Ok(cfg.hamiltonian(t)),
        SystemKind::Biexciton { .. } => invalid("two-level Hamiltonian requested for a biexciton system"),
    }
}

/// Three-level Hamiltonian: diagonal `(0, −ħΔ₁, −ħ(2Δ₁ + Δ_B))`, equal couplings
/// `−½·drive(t)` on the g–x and x–xx transitions and no direct g–xx term.
pub fn hamiltonian_3ls(cfg: &SystemConfig, t: f64) -> Result<HermitianOperator> {
    match cfg.kind {
        SystemKind::Biexciton { .. } => Ok(cfg.hamiltonian(t)),
        SystemKind::TwoLevel => invalid("three-level Hamiltonian requested for a two-level system"),
    }
}
