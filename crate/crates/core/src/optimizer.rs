//! Search over the detuning and area of the second pulse.
//!
//! A row-major grid scan over the bounds (evaluated in parallel) is followed
//! by a bounded Nelder–Mead refinement started at the best grid point.
//! Every evaluation is recorded in the trace in a fixed order, so runs are
//! reproducible bit for bit.

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::model::SystemConfig;
use crate::propagator::{propagate, PropagationSettings};
use crate::pulses::{Envelope, PulseSpec, TwoColorDrive};
use crate::state::{Level, StateVector};

const REFLECTION: f64 = 1.0;
const EXPANSION: f64 = 2.0;
const CONTRACTION: f64 = 0.5;
const SHRINK: f64 = 0.5;
/// Initial simplex edge as a fraction of each bound width.
const SIMPLEX_FRACTION: f64 = 0.05;
/// Convergence thresholds on the simplex extent (meV, π).
const DETUNING_TOL: f64 = 1e-3;
const AREA_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub min: f64,
    pub max: f64,
}

impl Interval {
    pub fn new(min: f64, max: f64) -> Self {
        Self { min, max }
    }

    pub fn width(&self) -> f64 {
        self.max - self.min
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.min && v <= self.max
    }

    fn clamp(&self, v: f64) -> f64 {
        v.clamp(self.min, self.max)
    }

    /// `n` evenly spaced points including both ends.
    fn points(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        (0..n).map(move |i| if i + 1 == n { self.max } else { self.min + self.width() * i as f64 / (n - 1) as f64 })
    }
}

#[derive(Debug, Clone)]
pub struct OptimizationProblem {
    /// System and first pulse; any second pulse in `base` is replaced.
    pub base: SystemConfig,
    /// Second pulse whose detuning and area are free (must be Gaussian).
    pub template: PulseSpec,
    pub target: Level,
    pub detuning_bounds: Interval,
    pub area_bounds: Interval,
    /// Grid points per axis (detuning, area).
    pub grid_points: (usize, usize),
    pub refine_iterations: usize,
    /// Optional starting guess (detuning, area), evaluated first when in bounds.
    pub seed: Option<(f64, f64)>,
    pub settings: PropagationSettings,
}

impl OptimizationProblem {
    pub fn new(
        base: SystemConfig,
        template: PulseSpec,
        target: Level,
        detuning_bounds: Interval,
        area_bounds: Interval,
    ) -> Self {
        Self {
            base,
            template,
            target,
            detuning_bounds,
            area_bounds,
            grid_points: (21, 21),
            refine_iterations: 200,
            seed: None,
            settings: PropagationSettings::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, b) in [("detuning", self.detuning_bounds), ("area", self.area_bounds)] {
            if !(b.min.is_finite() && b.max.is_finite() && b.min < b.max) {
                return invalid(format!("{name} bounds [{}, {}] are empty", b.min, b.max));
            }
        }
        if self.area_bounds.min < 0.0 {
            return invalid("area bounds must be non-negative");
        }
        if self.grid_points.0 < 3 || self.grid_points.1 < 3 {
            return invalid("at least 3 grid points per axis are required");
        }
        if !matches!(self.template.envelope_shape(), Envelope::Gaussian { .. }) {
            return invalid("the second pulse must be Gaussian to optimize its area");
        }
        if self.target.index() >= self.base.dim() {
            return invalid(format!("target level {:?} does not exist in this system", self.target));
        }
        self.settings.validate()
    }

    /// Configuration with the second pulse set to `(detuning, area)`.
    pub fn config_for(&self, detuning: f64, area: f64) -> Result<SystemConfig> {
        let Envelope::Gaussian { sigma_ps, .. } = *self.template.envelope_shape() else {
            return invalid("the second pulse must be Gaussian to optimize its area");
        };
        let pulse2 = PulseSpec::gaussian(area, sigma_ps, detuning)?
            .with_center(self.template.center())
            .with_phase(self.template.phase());
        let drive = TwoColorDrive::new(*self.base.drive.pulse1(), Some(pulse2))?;
        Ok(SystemConfig { drive, ..self.base })
    }

    fn in_bounds(&self, detuning: f64, area: f64) -> bool {
        self.detuning_bounds.contains(detuning) && self.area_bounds.contains(area)
    }
}

/// Final occupation of the target level for the given second pulse.
pub fn objective(problem: &OptimizationProblem, detuning: f64, area: f64) -> Result<f64> {
    if !problem.in_bounds(detuning, area) {
        return invalid(format!("parameters ({detuning} meV, {area}π) lie outside the bounds"));
    }
    let cfg = problem.config_for(detuning, area)?;
    let psi0 = StateVector::ground(cfg.dim())?;
    let traj = propagate(&cfg, &psi0, &problem.settings)?;
    Ok(traj.final_occupation(problem.target.index()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry {
    pub detuning: f64,
    pub area: f64,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub best_detuning: f64,
    pub best_area: f64,
    pub objective: f64,
    /// Total objective evaluations, including failed ones.
    pub evaluations: usize,
    /// Nelder–Mead iterations performed.
    pub iterations: usize,
    pub converged: bool,
    /// Successful evaluations in the order they were made.
    pub trace: Vec<TraceEntry>,
}

struct Search<'a> {
    problem: &'a OptimizationProblem,
    trace: Vec<TraceEntry>,
    evaluations: usize,
}

impl Search<'_> {
    fn record(&mut self, detuning: f64, area: f64, value: Result<f64>) -> f64 {
        self.evaluations += 1;
        match value {
            Ok(objective) => {
                self.trace.push(TraceEntry { detuning, area, objective });
                objective
            }
            Err(_) => f64::NEG_INFINITY,
        }
    }

    fn eval(&mut self, p: [f64; 2]) -> f64 {
        let v = objective(self.problem, p[0], p[1]);
        self.record(p[0], p[1], v)
    }

    fn clamp(&self, p: [f64; 2]) -> [f64; 2] {
        [self.problem.detuning_bounds.clamp(p[0]), self.problem.area_bounds.clamp(p[1])]
    }
}

/// Grid scan over the bounds. Entries are ordered row-major with detuning as
/// the outer index.
pub fn grid_scan(problem: &OptimizationProblem) -> Result<Vec<(f64, f64, Result<f64>)>> {
    problem.validate()?;
    let (nd, na) = problem.grid_points;
    let points: Vec<(f64, f64)> =
        problem.detuning_bounds.points(nd).flat_map(|d| problem.area_bounds.points(na).map(move |a| (d, a))).collect();
    Ok(points.into_par_iter().map(|(d, a)| (d, a, objective(problem, d, a))).collect())
}

fn simplex_extent(simplex: &[([f64; 2], f64); 3]) -> [f64; 2] {
    let mut ext = [0.0f64; 2];
    for axis in 0..2 {
        let lo = simplex.iter().map(|v| v.0[axis]).fold(f64::INFINITY, f64::min);
        let hi = simplex.iter().map(|v| v.0[axis]).fold(f64::NEG_INFINITY, f64::max);
        ext[axis] = hi - lo;
    }
    ext
}

/// Maximizes the final target occupation.
pub fn optimize(problem: &OptimizationProblem) -> Result<OptimizationResult> {
    problem.validate()?;
    let mut search = Search { problem, trace: Vec::new(), evaluations: 0 };

    let mut best: Option<([f64; 2], f64)> = None;
    let consider = |p: [f64; 2], v: f64, best: &mut Option<([f64; 2], f64)>| {
        if v.is_finite() && best.is_none_or(|(_, b)| v > b) {
            *best = Some((p, v));
        }
    };

    if let Some((d, a)) = problem.seed {
        if problem.in_bounds(d, a) {
            let v = search.eval([d, a]);
            consider([d, a], v, &mut best);
        }
    }
    for (d, a, value) in grid_scan(problem)? {
        let v = search.record(d, a, value);
        consider([d, a], v, &mut best);
    }
    let (start, start_value) = best.ok_or_else(|| Error::Optimization("every grid evaluation failed".into()))?;

    // Nelder–Mead on −objective, i.e. vertices sorted by descending objective.
    let widths = [problem.detuning_bounds.width(), problem.area_bounds.width()];
    let upper = [problem.detuning_bounds.max, problem.area_bounds.max];
    let mut simplex = [(start, start_value), (start, 0.0), (start, 0.0)];
    for axis in 0..2 {
        let mut p = start;
        let step = SIMPLEX_FRACTION * widths[axis];
        p[axis] = if p[axis] + step <= upper[axis] { p[axis] + step } else { p[axis] - step };
        simplex[axis + 1] = (p, search.eval(p));
    }

    let mut iterations = 0;
    let mut converged = false;
    while iterations < problem.refine_iterations {
        simplex.sort_by(|a, b| b.1.total_cmp(&a.1));
        let ext = simplex_extent(&simplex);
        if ext[0] < DETUNING_TOL && ext[1] < AREA_TOL {
            converged = true;
            break;
        }
        iterations += 1;

        let centroid = [0.5 * (simplex[0].0[0] + simplex[1].0[0]), 0.5 * (simplex[0].0[1] + simplex[1].0[1])];
        let worst = simplex[2];
        let toward = |coef: f64| {
            [centroid[0] + coef * (centroid[0] - worst.0[0]), centroid[1] + coef * (centroid[1] - worst.0[1])]
        };

        let reflected = search.clamp(toward(REFLECTION));
        let fr = search.eval(reflected);
        if fr > simplex[0].1 {
            let expanded = search.clamp(toward(EXPANSION));
            let fe = search.eval(expanded);
            simplex[2] = if fe > fr { (expanded, fe) } else { (reflected, fr) };
            continue;
        }
        if fr > simplex[1].1 {
            simplex[2] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr > worst.1 {
            let p = search.clamp(toward(CONTRACTION));
            (p, search.eval(p))
        } else {
            let p = search.clamp(toward(-CONTRACTION));
            (p, search.eval(p))
        };
        if fc > fr.max(worst.1) {
            simplex[2] = (contracted, fc);
            continue;
        }
        let anchor = simplex[0].0;
        for vertex in simplex.iter_mut().skip(1) {
            let p = [anchor[0] + SHRINK * (vertex.0[0] - anchor[0]), anchor[1] + SHRINK * (vertex.0[1] - anchor[1])];
            *vertex = (p, search.eval(p));
        }
    }

    let best = search
        .trace
        .iter()
        .copied()
        .reduce(|a, b| if b.objective > a.objective { b } else { a })
        .expect("at least one successful evaluation");
    Ok(OptimizationResult {
        best_detuning: best.detuning,
        best_area: best.area,
        objective: best.objective,
        evaluations: search.evaluations,
        iterations,
        converged,
        trace: search.trace,
    })
}
