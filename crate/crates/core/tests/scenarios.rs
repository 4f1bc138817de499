//! Published scenarios run end to end through propagation and dressed-state
//! projection.

use nalgebra::Matrix3;
use twocolor::dressed::{
    couplings_3ls, dressed_3ls, exciton_decomposition, frames_3ls, project_3ls, project_tls, PSI_MINUS, PSI_PLUS,
};
use twocolor::model::hamiltonian_3ls;
use twocolor::scenarios::preset;
use twocolor::{convergence_report, propagate, PropagationSettings, StateVector, SystemConfig, Trajectory};

fn run(cfg: &SystemConfig) -> Trajectory {
    propagate(cfg, &StateVector::ground(cfg.dim()).unwrap(), &PropagationSettings::default()).unwrap()
}

#[test]
fn fig2_inverts_the_exciton() {
    let cfg = preset("fig2").unwrap().config;
    let traj = run(&cfg);
    assert!(traj.final_occupation(1) >= 0.95);
    assert!(traj.max_norm_drift() <= 1e-8);
}

#[test]
fn step_halving_is_converged_at_one_femtosecond() {
    for name in ["fig2", "fig6"] {
        let cfg = preset(name).unwrap().config;
        let dev = convergence_report(&cfg, &StateVector::ground(cfg.dim()).unwrap(), &PropagationSettings::default())
            .unwrap();
        assert!(dev < 1e-6, "{name}: {dev:e}");
    }
}

#[test]
fn tls_projection_starts_in_the_ground_dressed_state() {
    for (name, start) in [("fig2", PSI_MINUS), ("fig3", PSI_PLUS)] {
        let cfg = preset(name).unwrap().config;
        let traj = run(&cfg);
        let d = project_tls(&traj, &cfg).unwrap();
        assert!((d.occupations(start)[0] - 1.0).abs() < 1e-12, "{name}");
        for i in 0..d.len() {
            let total: f64 = d.occupations_at(i).iter().sum();
            assert!((total - 1.0).abs() < 1e-8);
        }
    }
}

#[test]
fn fig2_dressed_swap_and_decomposition() {
    let cfg = preset("fig2").unwrap().config;
    let traj = run(&cfg);
    let d = project_tls(&traj, &cfg).unwrap();
    assert!(*d.occupations(PSI_PLUS).last().unwrap() >= 0.95);

    let parts = exciton_decomposition(&d).unwrap();
    let occ_x = traj.occupations(1);
    for (i, total) in parts.total().iter().enumerate() {
        assert!((total - occ_x[i]).abs() < 1e-10);
    }
    assert!(parts.population[0].abs() < 1e-12);
    assert!(parts.coherence[0].abs() < 1e-8);

    // Adiabatic dressing plateau between the first-pulse edge and the second pulse.
    let (a, b) = (cfg.grid.nearest_index(-16.0), cfg.grid.nearest_index(-14.0));
    let mean = |v: &[f64]| v[a..=b].iter().sum::<f64>() / (b - a + 1) as f64;
    assert!((mean(&occ_x) - 0.11).abs() <= 0.02);
    assert!((mean(&parts.population) - 0.11).abs() <= 0.02);
    assert!(mean(&parts.coherence).abs() < 0.01);
}

#[test]
fn biexciton_preparations_end_in_the_target_dressed_state() {
    for (name, state) in [("fig5", 1), ("fig6", 2)] {
        let cfg = preset(name).unwrap().config;
        let traj = run(&cfg);
        let d = project_3ls(&traj, &cfg).unwrap();
        assert!((d.occupations(0)[0] - 1.0).abs() < 1e-12);
        assert!(*d.occupations(state).last().unwrap() >= 0.95, "{name}");
        for i in (0..d.len()).step_by(97) {
            let total: f64 = d.occupations_at(i).iter().sum();
            assert!((total - 1.0).abs() < 1e-8);
        }
    }
}

#[test]
fn three_level_frames_are_continuous_and_exact() {
    let cfg = preset("fig4").unwrap().config;
    let frames = frames_3ls(&cfg).unwrap();
    for (i, f) in frames.iter().enumerate() {
        let h = hamiltonian_3ls(&cfg, cfg.grid.time(i)).unwrap();
        let m = h.real_part();
        let scale = h.max_abs();
        assert!((f.energies.iter().sum::<f64>() - h.trace()).abs() < 1e-10);
        for j in 0..3 {
            let residual: f64 = (0..3)
                .map(|r| {
                    let hv: f64 = (0..3).map(|k| m[r][k] * f.coefficients[j][k]).sum();
                    (hv - f.energies[j] * f.coefficients[j][r]).powi(2)
                })
                .sum::<f64>()
                .sqrt();
            assert!(residual <= 1e-10 * scale);
            for k in 0..3 {
                let dot: f64 = (0..3).map(|n| f.coefficients[j][n] * f.coefficients[k][n]).sum();
                assert!((dot - if j == k { 1.0 } else { 0.0 }).abs() < 1e-10);
            }
        }
        if i > 0 {
            for j in 0..3 {
                assert!(f.overlap(&frames[i - 1], j) > 0.99);
            }
        }
    }
}

#[test]
fn fig4_peak_frame_against_reference_solver() {
    let cfg = preset("fig4").unwrap().config;
    let h = hamiltonian_3ls(&cfg, 0.0).unwrap();
    let frame = dressed_3ls(&h, None).unwrap();

    let m = h.real_part();
    let reference = Matrix3::from_fn(|r, c| m[r][c]).symmetric_eigen();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| reference.eigenvalues[a].total_cmp(&reference.eigenvalues[b]));
    for (slot, &i) in order.iter().enumerate() {
        assert!((frame.energies[slot] - reference.eigenvalues[i]).abs() < 1e-10);
        let v = reference.eigenvectors.column(i);
        let dot: f64 = (0..3).map(|k| v[k] * frame.coefficients[slot][k]).sum();
        assert!((dot.abs() - 1.0).abs() < 1e-10);
    }

    // Regression values; sign convention: largest component positive.
    let c = couplings_3ls(&frame);
    assert!((c.omega12 + 0.158_382_43).abs() < 1e-6);
    assert!((c.omega13 - 0.024_982_06).abs() < 1e-6);
    assert!((c.omega23 - 0.370_943_50).abs() < 1e-6);
}
