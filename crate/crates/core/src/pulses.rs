//! Pulse envelopes and the two-color drive in the frame of the first pulse.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{invalid, Result};
use crate::units::{angular_frequency, area_to_radians, HBAR};

/// Envelope shape with its shape-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    /// Gaussian with pulse area in multiples of π and width σ in ps.
    Gaussian { area_pi: f64, sigma_ps: f64 },
    /// Plateau of height `amplitude_mev` and length `tau_ps`, switched on and
    /// off by two sigmoids with rate `kappa_per_ps`.
    SmoothRectangular { amplitude_mev: f64, tau_ps: f64, kappa_per_ps: f64 },
}

/// One laser pulse. Detuning is `ħΔ = ħ(ω_L − ω_0)` in meV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSpec {
    envelope: Envelope,
    detuning_mev: f64,
    center_ps: f64,
    phase_rad: f64,
}

impl PulseSpec {
    pub fn new(envelope: Envelope, detuning_mev: f64) -> Result<Self> {
        match envelope {
            Envelope::Gaussian { area_pi, sigma_ps } => {
                if !(sigma_ps > 0.0 && sigma_ps.is_finite()) {
                    return invalid(format!("Gaussian sigma must be positive, got {sigma_ps}"));
                }
                if !(area_pi >= 0.0 && area_pi.is_finite()) {
                    return invalid(format!("Gaussian area must be non-negative, got {area_pi}"));
                }
            }
            Envelope::SmoothRectangular { amplitude_mev, tau_ps, kappa_per_ps } => {
                if !(tau_ps > 0.0 && tau_ps.is_finite()) {
                    return invalid(format!("plateau duration must be positive, got {tau_ps}"));
                }
                if !(kappa_per_ps > 0.0 && kappa_per_ps.is_finite()) {
                    return invalid(format!("edge rate must be positive, got {kappa_per_ps}"));
                }
                if !(amplitude_mev >= 0.0 && amplitude_mev.is_finite()) {
                    return invalid(format!("amplitude must be non-negative, got {amplitude_mev}"));
                }
            }
        }
        if !detuning_mev.is_finite() {
            return invalid("detuning must be finite");
        }
        Ok(Self { envelope, detuning_mev, center_ps: 0.0, phase_rad: 0.0 })
    }

    pub fn gaussian(area_pi: f64, sigma_ps: f64, detuning_mev: f64) -> Result<Self> {
        Self::new(Envelope::Gaussian { area_pi, sigma_ps }, detuning_mev)
    }

    pub fn smooth_rectangular(amplitude_mev: f64, tau_ps: f64, kappa_per_ps: f64, detuning_mev: f64) -> Result<Self> {
        Self::new(Envelope::SmoothRectangular { amplitude_mev, tau_ps, kappa_per_ps }, detuning_mev)
    }

    pub fn with_center(mut self, center_ps: f64) -> Self {
        self.center_ps = center_ps;
        self
    }

    pub fn with_phase(mut self, phase_rad: f64) -> Self {
        self.phase_rad = phase_rad;
        self
    }

    pub fn envelope_shape(&self) -> &Envelope {
        &self.envelope
    }

    pub fn detuning(&self) -> f64 {
        self.detuning_mev
    }

    pub fn center(&self) -> f64 {
        self.center_ps
    }

    pub fn phase(&self) -> f64 {
        self.phase_rad
    }

    /// Maximum of the envelope in meV (at the pulse center).
    pub fn peak(&self) -> f64 {
        envelope(self, self.center_ps)
    }
}

/// `ħΩ(t)` in meV.
pub fn envelope(p: &PulseSpec, t: f64) -> f64 {
    let s = t - p.center_ps;
    match p.envelope {
        Envelope::Gaussian { area_pi, sigma_ps } => {
            HBAR * area_to_radians(area_pi) / ((2.0 * PI).sqrt() * sigma_ps)
                * (-s * s / (2.0 * sigma_ps * sigma_ps)).exp()
        }
        Envelope::SmoothRectangular { amplitude_mev, tau_ps, kappa_per_ps } => {
            let rise = 1.0 + (-kappa_per_ps * (tau_ps / 2.0 + s)).exp();
            let fall = 1.0 + (-kappa_per_ps * (tau_ps / 2.0 - s)).exp();
            amplitude_mev / (rise * fall)
        }
    }
}

/// First pulse plus an optional second pulse of a different color.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoColorDrive {
    pulse1: PulseSpec,
    pulse2: Option<PulseSpec>,
}

impl TwoColorDrive {
    pub fn single(pulse1: PulseSpec) -> Self {
        Self { pulse1, pulse2: None }
    }

    pub fn new(pulse1: PulseSpec, pulse2: Option<PulseSpec>) -> Result<Self> {
        if let Some(p2) = &pulse2 {
            if p2.detuning_mev == pulse1.detuning_mev {
                return invalid("second pulse must have a detuning different from the first");
            }
        }
        Ok(Self { pulse1, pulse2 })
    }

    pub fn pulse1(&self) -> &PulseSpec {
        &self.pulse1
    }

    pub fn pulse2(&self) -> Option<&PulseSpec> {
        self.pulse2.as_ref()
    }

    /// `ħω_Δ = ħ(Δ₁ − Δ₂)` in meV, or `None` without a second pulse.
    pub fn omega_delta_energy(&self) -> Option<f64> {
        self.pulse2.map(|p2| self.pulse1.detuning_mev - p2.detuning_mev)
    }

    /// `ω_Δ = Δ₁ − Δ₂` in rad/ps, or `None` without a second pulse.
    pub fn omega_delta(&self) -> Option<f64> {
        self.omega_delta_energy().map(angular_frequency)
    }

    /// `ħΩ₁(t)` and `ħΩ₂(t)` (the latter 0 when absent).
    pub fn envelopes(&self, t: f64) -> (f64, f64) {
        (envelope(&self.pulse1, t), self.pulse2.as_ref().map_or(0.0, |p| envelope(p, t)))
    }
}

/// Complex coupling `ħΩ₁(t) + ħΩ₂(t)·exp(i(ω_Δ t + φ₂ − φ₁))` in the frame
/// rotating with the first pulse. Real without a second pulse.
pub fn rotating_frame_drive(d: &TwoColorDrive, t: f64) -> C64 {
    let first = C64::new(envelope(&d.pulse1, t), 0.0);
    match &d.pulse2 {
        None => first,
        Some(p2) => {
            let omega_delta = angular_frequency(d.pulse1.detuning_mev - p2.detuning_mev);
            let phase = omega_delta * t + p2.phase_rad - d.pulse1.phase_rad;
            first + C64::from_polar(envelope(p2, t), phase)
        }
    }
}
