//! Built-in scenarios with the published pulse parameters.

use crate::grid::TimeGrid;
use crate::model::{SystemConfig, SystemKind};
use crate::pulses::{PulseSpec, TwoColorDrive};

/// Output sampling and integration step of every preset, ps.
pub const PRESET_DT: f64 = 0.001;
/// Binding energy of the biexciton presets, meV.
pub const BINDING_ENERGY: f64 = 4.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: &'static str,
    pub description: &'static str,
    pub config: SystemConfig,
}

pub const NAMES: [&str; 6] = ["fig2", "fig3", "fig4", "fig5", "fig6", "fig_gauss"];

fn grid(half_width: f64) -> TimeGrid {
    TimeGrid::new(-half_width, half_width, PRESET_DT).expect("preset grid")
}

fn rectangular(delta1: f64) -> PulseSpec {
    PulseSpec::smooth_rectangular(4.0, 40.0, 1.0, delta1).expect("preset pulse")
}

fn gaussian(area: f64, sigma: f64, delta: f64) -> PulseSpec {
    PulseSpec::gaussian(area, sigma, delta).expect("preset pulse")
}

fn two_level(pulse1: PulseSpec, pulse2: Option<PulseSpec>, half_width: f64) -> SystemConfig {
    let drive = TwoColorDrive::new(pulse1, pulse2).expect("preset drive");
    SystemConfig::new(SystemKind::TwoLevel, drive, grid(half_width)).expect("preset config")
}

fn biexciton(pulse2: Option<PulseSpec>) -> SystemConfig {
    let drive = TwoColorDrive::new(gaussian(27.0, 3.0, -5.0), pulse2).expect("preset drive");
    SystemConfig::new(SystemKind::Biexciton { binding_energy_mev: BINDING_ENERGY }, drive, grid(18.0))
        .expect("preset config")
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Option<Scenario> {
    let (description, config) = match name {
        "fig2" => (
            "two-level, smooth rectangular first pulse at -5 meV, Gaussian second pulse at -11.46 meV",
            two_level(rectangular(-5.0), Some(gaussian(9.13, 4.0, -11.46)), 40.0),
        ),
        "fig3" => (
            "two-level, smooth rectangular first pulse at +5 meV, Gaussian second pulse at -1.41 meV",
            two_level(rectangular(5.0), Some(gaussian(1.12, 4.0, -1.41)), 40.0),
        ),
        "fig4" => ("biexciton, single Gaussian pulse 27π at -5 meV", biexciton(None)),
        "fig5" => (
            "biexciton, exciton preparation with a second pulse at -11.83 meV, 22.8π",
            biexciton(Some(gaussian(22.8, 3.0, -11.83))),
        ),
        "fig6" => (
            "biexciton, biexciton preparation with a second pulse at -10.64 meV, 17.49π",
            biexciton(Some(gaussian(17.49, 3.0, -10.64))),
        ),
        "fig_gauss" => (
            "two-level, Gaussian pair 22.65π at -8 meV and 19.29π at -19.163 meV",
            two_level(gaussian(22.65, 2.4, -8.0), Some(gaussian(19.29, 3.04, -19.163)), 18.0),
        ),
        _ => return None,
    };
    let name = NAMES.iter().copied().find(|n| *n == name).expect("known name");
    Some(Scenario { name, description, config })
}

pub fn all() -> Vec<Scenario> {
    NAMES.iter().filter_map(|n| preset(n)).collect()
}
