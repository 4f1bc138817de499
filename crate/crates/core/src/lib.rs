//! Simulation and dressed-state analysis of two-color excitation of two- and
//! three-level quantum emitters.
//!
//! Energies are in meV, times in ps, pulse areas in multiples of π. Bare
//! amplitudes are always ordered `(g, x[, xx])`.

#![allow(clippy::needless_range_loop)]

pub mod conditions;
pub mod dressed;
pub mod error;
pub mod grid;
pub mod model;
pub mod operator;
pub mod optimizer;
pub mod propagator;
pub mod pulses;
pub mod scenarios;
pub mod state;
pub mod trajectory;
pub mod units;

pub use error::{Error, Result};
pub use grid::TimeGrid;
pub use model::{SystemConfig, SystemKind};
pub use operator::HermitianOperator;
pub use propagator::{convergence_report, propagate, PropagationSettings};
pub use pulses::{Envelope, PulseSpec, TwoColorDrive};
pub use state::{coherence, occupation, Level, StateVector};
pub use trajectory::Trajectory;
