use crate::error::{invalid, Result};

/// Uniform sampling grid `t_start, t_start + dt, ..., t_end` (ps).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_start: f64,
    t_end: f64,
    dt: f64,
}

impl TimeGrid {
    /// The span must be an integer number of steps (relative slack 1e-9)
    /// and contain at least ten of them.
    pub fn new(t_start: f64, t_end: f64, dt: f64) -> Result<Self> {
        if !(t_start.is_finite() && t_end.is_finite() && dt.is_finite()) {
            return invalid("time grid values must be finite");
        }
        if t_start >= t_end {
            return invalid(format!("t_start ({t_start}) must be below t_end ({t_end})"));
        }
        if dt <= 0.0 {
            return invalid(format!("grid step must be positive, got {dt}"));
        }
        let steps = (t_end - t_start) / dt;
        if steps < 10.0 - 1e-9 {
            return invalid(format!("grid must contain at least 10 steps, got {steps}"));
        }
        if (steps - steps.round()).abs() > 1e-9 * steps.max(1.0) {
            return invalid(format!("grid span {} ps is not an integer multiple of dt = {dt} ps", t_end - t_start));
        }
        Ok(Self { t_start, t_end, dt })
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Number of intervals between samples.
    pub fn steps(&self) -> usize {
        ((self.t_end - self.t_start) / self.dt).round() as usize
    }

    /// Number of sample points (`steps() + 1`).
    pub fn len(&self) -> usize {
        self.steps() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sample time `i`. The last sample is pinned to `t_end`.
    pub fn time(&self, i: usize) -> f64 {
        if i == self.steps() {
            self.t_end
        } else {
            self.t_start + i as f64 * self.dt
        }
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.time(i))
    }

    /// Index of the sample nearest to `t`, clamped to the grid.
    pub fn nearest_index(&self, t: f64) -> usize {
        let i = ((t - self.t_start) / self.dt).round();
        (i.max(0.0) as usize).min(self.steps())
    }
}
