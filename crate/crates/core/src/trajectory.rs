use crate::grid::TimeGrid;
use crate::state::StateVector;

/// States sampled on a time grid, together with their norms.
#[derive(Debug, Clone)]
pub struct Trajectory {
    grid: TimeGrid,
    states: Vec<StateVector>,
    norms: Vec<f64>,
}

impl Trajectory {
    pub(crate) fn new(grid: TimeGrid, states: Vec<StateVector>) -> Self {
        debug_assert_eq!(states.len(), grid.len());
        let norms = states.iter().map(StateVector::norm).collect();
        Self { grid, states, norms }
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }

    pub fn norms(&self) -> &[f64] {
        &self.norms
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn final_state(&self) -> &StateVector {
        self.states.last().expect("trajectory is never empty")
    }

    /// Occupation of bare level `level` at every sample (0 beyond the dimension).
    pub fn occupations(&self, level: usize) -> Vec<f64> {
        self.states.iter().map(|s| s.amplitudes().get(level).map_or(0.0, |a| a.norm_sqr())).collect()
    }

    /// Final occupation of bare level `level` (0 beyond the dimension).
    pub fn final_occupation(&self, level: usize) -> f64 {
        self.final_state().amplitudes().get(level).map_or(0.0, |a| a.norm_sqr())
    }

    /// `max_i |‖ψ(t_i)‖ − 1|`.
    pub fn max_norm_drift(&self) -> f64 {
        self.norms.iter().map(|n| (n - 1.0).abs()).fold(0.0, f64::max)
    }
}
