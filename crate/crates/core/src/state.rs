//! State amplitudes in the bare basis, ordered `(g, x[, xx])`.

use num_complex::Complex64 as C64;

use crate::error::{invalid, Error, Result};

/// Tolerance on the norm of a freshly constructed state.
pub const CONSTRUCTION_NORM_TOLERANCE: f64 = 1e-9;

/// Bare levels of the emitter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    G,
    X,
    XX,
}

impl Level {
    pub fn index(self) -> usize {
        match self {
            Level::G => 0,
            Level::X => 1,
            Level::XX => 2,
        }
    }
}

/// Normalized amplitude vector of dimension 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    amps: [C64; 3],
    dim: usize,
}

impl StateVector {
    /// Builds a state from 2 or 3 amplitudes whose squared norm is 1 within 1e-9.
    pub fn new(amplitudes: &[C64]) -> Result<Self> {
        let state = Self::from_slice(amplitudes)?;
        let drift = (state.norm_sqr() - 1.0).abs();
        if drift > CONSTRUCTION_NORM_TOLERANCE {
            return invalid(format!("state is not normalized (|norm² - 1| = {drift:e})"));
        }
        Ok(state)
    }

    /// Builds a state without the normalization check. Used for intermediate
    /// integrator stages, whose norm is monitored separately.
    pub(crate) fn unchecked(amps: [C64; 3], dim: usize) -> Self {
        Self { amps, dim }
    }

    fn from_slice(amplitudes: &[C64]) -> Result<Self> {
        let dim = amplitudes.len();
        if !(dim == 2 || dim == 3) {
            return invalid(format!("state dimension must be 2 or 3, got {dim}"));
        }
        let mut amps = [C64::new(0.0, 0.0); 3];
        amps[..dim].copy_from_slice(amplitudes);
        Ok(Self { amps, dim })
    }

    /// The bare state `|level⟩` in a space of dimension `dim`.
    pub fn basis(dim: usize, level: usize) -> Result<Self> {
        if !(dim == 2 || dim == 3) {
            return invalid(format!("state dimension must be 2 or 3, got {dim}"));
        }
        if level >= dim {
            return invalid(format!("level {level} out of range for dimension {dim}"));
        }
        let mut amps = [C64::new(0.0, 0.0); 3];
        amps[level] = C64::new(1.0, 0.0);
        Ok(Self { amps, dim })
    }

    /// Ground state `|g⟩`.
    pub fn ground(dim: usize) -> Result<Self> {
        Self::basis(dim, 0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps[..self.dim]
    }

    pub(crate) fn raw(&self) -> &[C64; 3] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes().iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean distance between two states of equal dimension.
    pub fn distance(&self, other: &Self) -> f64 {
        self.amplitudes().iter().zip(other.amplitudes()).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.dim {
            return Err(Error::InvalidArgument(format!("level index {index} out of range for dimension {}", self.dim)));
        }
        Ok(())
    }
}

/// Occupation `|a_k|²` of level `k`.
pub fn occupation(state: &StateVector, level_index: usize) -> Result<f64> {
    state.check_index(level_index)?;
    Ok(state.amps[level_index].norm_sqr())
}

/// Coherence `a_j · conj(a_k)` between two distinct levels.
pub fn coherence(state: &StateVector, j: usize, k: usize) -> Result<C64> {
    state.check_index(j)?;
    state.check_index(k)?;
    if j == k {
        return invalid("coherence requires two distinct levels");
    }
    Ok(state.amps[j] * state.amps[k].conj())
}
