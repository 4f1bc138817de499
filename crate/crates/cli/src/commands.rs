//! Subcommand definitions and handlers.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twocolor::conditions::{
    design_for_pulse, design_second_pulse, detuning_table, gaussian_design, Branch, DesignResult,
};
use twocolor::optimizer::{grid_scan, optimize, Interval, OptimizationProblem};
use twocolor::pulses::Envelope;
use twocolor::scenarios::{all, preset, NAMES};
use twocolor::{
    convergence_report, propagate, Level, PropagationSettings, PulseSpec, StateVector, SystemConfig, SystemKind,
};

use crate::config::{BranchName, Outputs, RunConfig};
use crate::error::{CliError, CliResult};
use crate::export::{
    dressed_rows, trace_rows, trajectory_rows, write_csv, write_json, TRACE_COLUMNS, TRAJECTORY_COLUMNS,
};

#[derive(Debug, Parser)]
#[command(
    name = "twocolor",
    version,
    about = "Two-color excitation of a quantum emitter: simulation, dressed states and pulse design"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Propagate a preset or configuration file and export the results.
    Run(RunArgs),
    /// Print the analytic second-pulse design for a first pulse.
    Design(DesignArgs),
    /// Optimize detuning and area of the second pulse.
    Optimize(OptimizeArgs),
    /// Export the objective on a regular (detuning, area) grid.
    Sweep(SweepArgs),
    /// List the built-in scenarios.
    Scenarios,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Built-in scenario name.
    #[arg(required_unless_present = "config", conflicts_with = "config")]
    pub preset: Option<String>,
    /// JSON configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: Source,
    /// Output directory, created if missing.
    #[arg(long)]
    pub out: PathBuf,
    /// Skip the step-halving convergence estimate in summary.json.
    #[arg(long)]
    pub skip_convergence_check: bool,
}

#[derive(Debug, Args)]
pub struct DesignArgs {
    /// First-pulse detuning, meV.
    #[arg(long, allow_negative_numbers = true)]
    pub delta1: f64,
    /// Plateau amplitude of a rectangular first pulse, meV.
    #[arg(long, required_unless_present = "gaussian", conflicts_with = "gaussian")]
    pub amplitude: Option<f64>,
    /// Gaussian first pulse given by --area and --sigma.
    #[arg(long, requires_all = ["area", "sigma"])]
    pub gaussian: bool,
    /// Gaussian pulse area in units of π.
    #[arg(long, requires = "gaussian")]
    pub area: Option<f64>,
    /// Gaussian width, ps.
    #[arg(long, requires = "gaussian")]
    pub sigma: Option<f64>,
    /// Sign of ω_Δ = Δ₁ − Δ₂.
    #[arg(long, value_enum, default_value_t = BranchName::Positive)]
    pub sign: BranchName,
    /// Also write design.json into this directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    X,
    Xx,
}

impl From<Target> for Level {
    fn from(t: Target) -> Self {
        match t {
            Target::X => Level::X,
            Target::Xx => Level::XX,
        }
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub source: Source,
    /// Level whose final occupation is maximized.
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long, allow_negative_numbers = true)]
    pub detuning_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub detuning_max: f64,
    #[arg(long)]
    pub area_min: f64,
    #[arg(long)]
    pub area_max: f64,
    /// Second-pulse width in ps; defaults to the scenario's second pulse.
    #[arg(long)]
    pub sigma2: Option<f64>,
    /// Output directory, created if missing.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// Grid points per axis of the initial scan.
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    /// Maximum Nelder–Mead iterations.
    #[arg(long, default_value_t = 200)]
    pub iterations: usize,
    /// Do not seed two-level searches with the analytic design.
    #[arg(long)]
    pub no_seed: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// Grid points per axis.
    #[arg(long, default_value_t = 21)]
    pub points: usize,
}

pub fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Run(a) => run(&a),
        Command::Design(a) => design(&a),
        Command::Optimize(a) => run_optimize(&a),
        Command::Sweep(a) => sweep(&a),
        Command::Scenarios => {
            for sc in all() {
                println!("{:<10} {}", sc.name, sc.description);
            }
            Ok(())
        }
    }
}

struct Loaded {
    name: String,
    config: SystemConfig,
    design: Option<DesignResult>,
    outputs: Outputs,
}

impl Source {
    fn load(&self) -> CliResult<Loaded> {
        match (&self.preset, &self.config) {
            (Some(name), None) => {
                let sc = preset(name).ok_or_else(|| {
                    CliError::Validation(format!("unknown scenario {name:?}; available: {}", NAMES.join(", ")))
                })?;
                Ok(Loaded { name: sc.name.to_owned(), config: sc.config, design: None, outputs: Outputs::default() })
            }
            (None, Some(path)) => {
                let rc = RunConfig::load(path)?;
                let r = rc.resolve().map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
                let name = path.file_stem().map_or_else(|| "config".into(), |s| s.to_string_lossy().into_owned());
                Ok(Loaded { name, config: r.config, design: r.design, outputs: rc.outputs })
            }
            _ => Err(CliError::Validation("give either a scenario name or --config".into())),
        }
    }
}

fn create_dir(dir: &Path) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_owned(), source })
}

/// Integration step equal to the sampling step of the configuration.
fn settings_for(cfg: &SystemConfig) -> PropagationSettings {
    PropagationSettings::default().with_dt(cfg.grid.dt())
}

#[derive(Debug, Serialize)]
struct DesignSummary {
    branch: &'static str,
    delta2_mev: f64,
    area2_pi: Option<f64>,
    rabi_splitting_mev: f64,
    c_tilde_sq: f64,
    coupling_sq: f64,
}

impl From<&DesignResult> for DesignSummary {
    fn from(d: &DesignResult) -> Self {
        Self {
            branch: d.omega_delta_sign.as_str(),
            delta2_mev: d.delta2,
            area2_pi: d.area2,
            rabi_splitting_mev: d.rabi_splitting,
            c_tilde_sq: d.c_tilde_sq,
            coupling_sq: d.coupling_sq,
        }
    }
}

#[derive(Debug, Serialize)]
struct Occupations {
    g: f64,
    x: f64,
    xx: f64,
}

#[derive(Debug, Serialize)]
struct RunSummary {
    scenario: String,
    parameters: RunConfig,
    final_occupations: Occupations,
    max_norm_drift: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    convergence_report: Option<f64>,
    /// Design applied to the second pulse.
    #[serde(skip_serializing_if = "Option::is_none")]
    design: Option<DesignSummary>,
    /// Analytic designs for the first pulse on both branches.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    analytic_design: Vec<DesignSummary>,
    files: Vec<String>,
}

fn run(args: &RunArgs) -> CliResult<()> {
    let loaded = args.source.load()?;
    let cfg = loaded.config;
    let mut settings = settings_for(&cfg);
    settings.convergence_check = !args.skip_convergence_check;
    let psi0 = StateVector::ground(cfg.dim())?;
    let traj = propagate(&cfg, &psi0, &settings)?;
    let convergence = if settings.convergence_check { Some(convergence_report(&cfg, &psi0, &settings)?) } else { None };

    create_dir(&args.out)?;
    let mut files = Vec::new();
    if loaded.outputs.trajectory {
        write_csv(&args.out.join("trajectory.csv"), &TRAJECTORY_COLUMNS, trajectory_rows(&cfg, &traj))?;
        files.push("trajectory.csv".to_owned());
    }
    if loaded.outputs.dressed {
        let (header, rows) = dressed_rows(&cfg, &traj)?;
        write_csv(&args.out.join("dressed.csv"), header, rows)?;
        files.push("dressed.csv".to_owned());
    }
    let analytic_design = if loaded.outputs.design && cfg.kind == SystemKind::TwoLevel {
        [Branch::Positive, Branch::Negative]
            .into_iter()
            .map(|b| design_for_pulse(cfg.drive.pulse1(), b).map(|d| DesignSummary::from(&d)))
            .collect::<twocolor::Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    files.push("summary.json".to_owned());
    let occ = |l: Level| if l.index() < cfg.dim() { traj.final_occupation(l.index()) } else { 0.0 };
    let summary = RunSummary {
        scenario: loaded.name,
        parameters: RunConfig { outputs: loaded.outputs, ..RunConfig::from_system(&cfg) },
        final_occupations: Occupations { g: occ(Level::G), x: occ(Level::X), xx: occ(Level::XX) },
        max_norm_drift: traj.max_norm_drift(),
        convergence_report: convergence,
        design: loaded.design.as_ref().map(DesignSummary::from),
        analytic_design,
        files,
    };
    write_json(&args.out.join("summary.json"), &summary)?;

    println!("scenario {}", summary.scenario);
    if let Some(d) = &summary.design {
        println!(
            "designed second pulse: Δ₂ = {:.3} meV, α₂ = {:.2}π ({})",
            d.delta2_mev,
            d.area2_pi.unwrap_or(f64::NAN),
            d.branch
        );
    }
    let o = &summary.final_occupations;
    println!("final occupations: g {:.4}  x {:.4}  xx {:.4}", o.g, o.x, o.xx);
    println!("wrote {} to {}", summary.files.join(", "), args.out.display());
    Ok(())
}

#[derive(Debug, Serialize)]
struct DesignOutput {
    delta1_mev: f64,
    first_pulse_amplitude_mev: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gaussian: Option<GaussianFirstPulse>,
    design: DesignSummary,
    /// Rows Δ₁ < 0 and Δ₁ > 0 for `|Δ₁|`; each row is `[ω_Δ > 0, ω_Δ < 0]`.
    detuning_table_mev: [[f64; 2]; 2],
}

#[derive(Debug, Serialize)]
struct GaussianFirstPulse {
    area_pi: f64,
    sigma_ps: f64,
}

fn design(args: &DesignArgs) -> CliResult<()> {
    let branch: Branch = args.sign.into();
    let (result, amplitude, gaussian) = match (args.gaussian, args.amplitude, args.area, args.sigma) {
        (true, _, Some(area), Some(sigma)) => {
            let peak = PulseSpec::gaussian(area, sigma, args.delta1)?.peak();
            let r = gaussian_design(area, sigma, args.delta1, branch)?;
            (r, peak, Some(GaussianFirstPulse { area_pi: area, sigma_ps: sigma }))
        }
        (false, Some(amp), _, _) => (design_second_pulse(args.delta1, amp, branch)?, amp, None),
        _ => return Err(CliError::Validation("give --amplitude, or --gaussian with --area and --sigma".into())),
    };
    let table = detuning_table(args.delta1.abs(), amplitude)?;
    let output = DesignOutput {
        delta1_mev: args.delta1,
        first_pulse_amplitude_mev: amplitude,
        gaussian,
        design: DesignSummary::from(&result),
        detuning_table_mev: [[table.positive[0], table.negative[0]], [table.positive[1], table.negative[1]]],
    };

    match &output.gaussian {
        Some(g) => println!(
            "first pulse: Gaussian {}π, σ = {} ps, Δ₁ = {} meV, peak ħΩ₁ = {:.6} meV",
            g.area_pi, g.sigma_ps, args.delta1, amplitude
        ),
        None => println!("first pulse: ħΩ₁ = {amplitude} meV, Δ₁ = {} meV", args.delta1),
    }
    println!("branch ω_Δ {}", if branch == Branch::Positive { "> 0" } else { "< 0" });
    println!("  Rabi splitting  {:>12.6} meV", result.rabi_splitting);
    println!("  c̃²              {:>12.6}", result.c_tilde_sq);
    println!("  Δ₂              {:>12.6} meV", result.delta2);
    match result.area2 {
        Some(a) => println!("  α₂              {a:>12.6} π"),
        None => println!("  α₂              {:>12} (no area rule for a Gaussian first pulse)", "-"),
    }
    println!();
    println!("Δ₂ (meV) for |Δ₁| = {} meV, ħΩ₁ = {amplitude:.6} meV", table.delta1_abs);
    println!("            {:>12} {:>12}", "ω_Δ > 0", "ω_Δ < 0");
    for (label, row) in ["Δ₁ < 0", "Δ₁ > 0"].iter().zip(output.detuning_table_mev) {
        println!("  {label:<8}  {:>12.6} {:>12.6}", row[0], row[1]);
    }
    println!();
    println!("{}", serde_json::to_string_pretty(&output).expect("design output serializes"));

    if let Some(dir) = &args.out {
        create_dir(dir)?;
        write_json(&dir.join("design.json"), &output)?;
    }
    Ok(())
}

impl SearchArgs {
    fn problem(&self) -> CliResult<(String, OptimizationProblem)> {
        let loaded = self.source.load()?;
        let cfg = loaded.config;
        let existing = cfg.drive.pulse2().copied();
        let sigma = match (self.sigma2, existing.map(|p| *p.envelope_shape())) {
            (Some(s), _) => s,
            (None, Some(Envelope::Gaussian { sigma_ps, .. })) => sigma_ps,
            _ => {
                return Err(CliError::Validation(
                    "--sigma2 is required when the scenario has no Gaussian second pulse".into(),
                ))
            }
        };
        let detuning_bounds = Interval::new(self.detuning_min, self.detuning_max);
        let area_bounds = Interval::new(self.area_min, self.area_max);
        let center = existing.map_or(cfg.drive.pulse1().center(), |p| p.center());
        let template = PulseSpec::gaussian(
            0.5 * (self.area_min + self.area_max).max(0.0),
            sigma,
            0.5 * (self.detuning_min + self.detuning_max),
        )
        .map_err(|e| CliError::Validation(e.to_string()))?
        .with_center(center);
        let mut problem = OptimizationProblem::new(
            cfg.first_pulse_only(),
            template,
            self.target.into(),
            detuning_bounds,
            area_bounds,
        );
        problem.settings = settings_for(&cfg);
        Ok((loaded.name, problem))
    }
}

/// Analytic design inside the search bounds, if a two-level branch yields one.
fn analytic_seed(problem: &OptimizationProblem) -> Option<(f64, f64)> {
    if problem.base.kind != SystemKind::TwoLevel {
        return None;
    }
    [Branch::Positive, Branch::Negative].into_iter().find_map(|b| {
        let d = design_for_pulse(problem.base.drive.pulse1(), b).ok()?;
        let area = d.area2.unwrap_or(0.5 * (problem.area_bounds.min + problem.area_bounds.max));
        (problem.detuning_bounds.contains(d.delta2) && problem.area_bounds.contains(area)).then_some((d.delta2, area))
    })
}

#[derive(Debug, Serialize)]
struct OptimizationOutput {
    scenario: String,
    target: Target,
    detuning_bounds_mev: [f64; 2],
    area_bounds_pi: [f64; 2],
    sigma2_ps: f64,
    grid_points: usize,
    seed: Option<[f64; 2]>,
    best_detuning_mev: f64,
    best_area_pi: f64,
    objective: f64,
    evaluations: usize,
    iterations: usize,
    converged: bool,
}

fn template_sigma(p: &OptimizationProblem) -> f64 {
    match *p.template.envelope_shape() {
        Envelope::Gaussian { sigma_ps, .. } => sigma_ps,
        Envelope::SmoothRectangular { .. } => f64::NAN,
    }
}

fn run_optimize(args: &OptimizeArgs) -> CliResult<()> {
    let (name, mut problem) = args.search.problem()?;
    problem.grid_points = (args.grid, args.grid);
    problem.refine_iterations = args.iterations;
    if !args.no_seed {
        problem.seed = analytic_seed(&problem);
    }
    problem.validate().map_err(|e| CliError::Validation(e.to_string()))?;
    let result = optimize(&problem)?;

    let out = &args.search.out;
    create_dir(out)?;
    write_csv(&out.join("opt_trace.csv"), &TRACE_COLUMNS, trace_rows(&result.trace))?;
    let output = OptimizationOutput {
        scenario: name,
        target: args.search.target,
        detuning_bounds_mev: [problem.detuning_bounds.min, problem.detuning_bounds.max],
        area_bounds_pi: [problem.area_bounds.min, problem.area_bounds.max],
        sigma2_ps: template_sigma(&problem),
        grid_points: args.grid,
        seed: problem.seed.map(|(d, a)| [d, a]),
        best_detuning_mev: result.best_detuning,
        best_area_pi: result.best_area,
        objective: result.objective,
        evaluations: result.evaluations,
        iterations: result.iterations,
        converged: result.converged,
    };
    write_json(&out.join("opt_result.json"), &output)?;
    println!(
        "best Δ₂ = {:.4} meV, α₂ = {:.4}π, final occupation {:.5} ({} evaluations, {} iterations{})",
        result.best_detuning,
        result.best_area,
        result.objective,
        result.evaluations,
        result.iterations,
        if result.converged { ", converged" } else { "" }
    );
    println!("wrote opt_trace.csv, opt_result.json to {}", out.display());
    Ok(())
}

fn sweep(args: &SweepArgs) -> CliResult<()> {
    let (_, mut problem) = args.search.problem()?;
    problem.grid_points = (args.points, args.points);
    problem.validate().map_err(|e| CliError::Validation(e.to_string()))?;
    let scan = grid_scan(&problem)?;
    let failed = scan.iter().filter(|(_, _, r)| r.is_err()).count();
    let rows: Vec<Vec<f64>> = scan.into_iter().map(|(d, a, r)| vec![d, a, r.unwrap_or(f64::NAN)]).collect();
    let out = &args.search.out;
    create_dir(out)?;
    write_csv(&out.join("sweep.csv"), &TRACE_COLUMNS, rows)?;
    println!("wrote sweep.csv ({} points, {failed} failed) to {}", args.points * args.points, out.display());
    Ok(())
}
