//! Unit conventions.
//!
//! Energies are in meV, times in ps and pulse areas in multiples of π.
//! Angular frequencies are obtained as `E / HBAR` in rad/ps.

/// Reduced Planck constant in meV·ps.
pub const HBAR: f64 = 0.658_211_956_9;

/// Angular frequency (rad/ps) corresponding to an energy in meV.
#[inline]
pub fn angular_frequency(energy_mev: f64) -> f64 {
    energy_mev / HBAR
}

/// Energy (meV) corresponding to an angular frequency in rad/ps.
#[inline]
pub fn energy(omega_per_ps: f64) -> f64 {
    omega_per_ps * HBAR
}

/// Converts a pulse area given in multiples of π to radians.
#[inline]
pub fn area_to_radians(area_pi: f64) -> f64 {
    area_pi * std::f64::consts::PI
}
