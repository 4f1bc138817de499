//! Analytic design rules for the second pulse of a two-color pair.
//!
//! The second pulse drives transitions between the dressed states of the
//! first pulse. It is resonant when `ħω_Δ = ħ(Δ₁ − Δ₂)` matches the dressed
//! splitting, either with `ω_Δ > 0` (second pulse below the first) or with
//! `ω_Δ < 0` (above). Its area must compensate the dressed coupling factor:
//! `c̃²` on the positive branch and `c²` on the negative one.

use crate::dressed::{rabi_splitting, tls_dressed};
use crate::error::{invalid, Result};
use crate::pulses::{envelope, PulseSpec};

/// Sign of `ω_Δ = Δ₁ − Δ₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Positive => "positive",
            Branch::Negative => "negative",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignResult {
    /// Detuning of the second pulse, meV.
    pub delta2: f64,
    /// Area of the second pulse in units of π; `None` when no area rule applies.
    pub area2: Option<f64>,
    pub omega_delta_sign: Branch,
    /// Dressed splitting used for the resonance, meV.
    pub rabi_splitting: f64,
    /// `c̃²` of the first-pulse dressed frame.
    pub c_tilde_sq: f64,
    /// Squared dressed coupling factor of the driving term: `c̃²` (positive
    /// branch) or `c²` (negative branch).
    pub coupling_sq: f64,
}

fn resolve(delta1: f64, omega1: f64, sign: Branch) -> DesignResult {
    let split = rabi_splitting(omega1, delta1);
    let frame = tls_dressed(omega1, delta1);
    let c_tilde_sq = frame.c_tilde * frame.c_tilde;
    let (delta2, coupling_sq) = match sign {
        Branch::Positive => (delta1 - split, c_tilde_sq),
        Branch::Negative => (delta1 + split, frame.c * frame.c),
    };
    DesignResult { delta2, area2: None, omega_delta_sign: sign, rabi_splitting: split, c_tilde_sq, coupling_sq }
}

/// Second pulse for a first pulse of constant amplitude `omega1` (meV) and
/// detuning `delta1` (meV): `Δ₂ = Δ₁ ∓ Ω_R` and an area of `π / coupling²`.
pub fn design_second_pulse(delta1: f64, omega1: f64, sign: Branch) -> Result<DesignResult> {
    if !(omega1 > 0.0 && omega1.is_finite()) {
        return invalid(format!("first-pulse amplitude must be positive, got {omega1}"));
    }
    if !delta1.is_finite() {
        return invalid("first-pulse detuning must be finite");
    }
    let mut result = resolve(delta1, omega1, sign);
    result.area2 = Some(1.0 / result.coupling_sq);
    Ok(result)
}

/// Analytic second-pulse detunings for `Δ₁ = ±|Δ₁|` on both branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetuningTable {
    pub delta1_abs: f64,
    pub omega1: f64,
    /// `[Δ₁ < 0, Δ₁ > 0]` with `ω_Δ > 0`.
    pub positive: [f64; 2],
    /// `[Δ₁ < 0, Δ₁ > 0]` with `ω_Δ < 0`.
    pub negative: [f64; 2],
}

pub fn detuning_table(delta1_abs: f64, omega1: f64) -> Result<DetuningTable> {
    if !(delta1_abs >= 0.0 && delta1_abs.is_finite()) {
        return invalid(format!("|Δ₁| must be non-negative, got {delta1_abs}"));
    }
    let entry = |d1: f64, s: Branch| design_second_pulse(d1, omega1, s).map(|r| r.delta2);
    Ok(DetuningTable {
        delta1_abs,
        omega1,
        positive: [entry(-delta1_abs, Branch::Positive)?, entry(delta1_abs, Branch::Positive)?],
        negative: [entry(-delta1_abs, Branch::Negative)?, entry(delta1_abs, Branch::Negative)?],
    })
}

/// Detuning rule for a Gaussian first pulse, using the splitting at its peak.
/// No area is returned: the envelopes change throughout the interaction.
pub fn gaussian_design(area1: f64, sigma1: f64, delta1: f64, sign: Branch) -> Result<DesignResult> {
    let pulse = PulseSpec::gaussian(area1, sigma1, delta1)?;
    Ok(resolve(delta1, envelope(&pulse, pulse.center()), sign))
}

/// Applies the matching rule to a first pulse of either shape: plateau
/// amplitude for rectangular pulses, peak amplitude for Gaussians.
pub fn design_for_pulse(pulse1: &PulseSpec, sign: Branch) -> Result<DesignResult> {
    match *pulse1.envelope_shape() {
        crate::pulses::Envelope::SmoothRectangular { amplitude_mev, .. } => {
            design_second_pulse(pulse1.detuning(), amplitude_mev, sign)
        }
        crate::pulses::Envelope::Gaussian { area_pi, sigma_ps } => {
            gaussian_design(area_pi, sigma_ps, pulse1.detuning(), sign)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn negative_first_detuning() {
        let r = design_second_pulse(-5.0, 4.0, Branch::Positive).unwrap();
        assert!((r.delta2 + 11.403).abs() < 5e-4);
        assert!((r.area2.unwrap() - 9.13).abs() < 5e-3);
        assert!((r.rabi_splitting - 6.4031).abs() < 5e-5);
    }

    #[test]
    fn positive_first_detuning() {
        let r = design_second_pulse(5.0, 4.0, Branch::Positive).unwrap();
        assert!((r.delta2 + 1.403).abs() < 5e-4);
        assert!((r.area2.unwrap() - 1.12).abs() < 5e-3);
    }

    #[test]
    fn negative_branch_mirrors_positive() {
        let r = design_second_pulse(-5.0, 4.0, Branch::Negative).unwrap();
        let mirror = design_second_pulse(5.0, 4.0, Branch::Positive).unwrap();
        assert!((r.delta2 - 1.403).abs() < 5e-4);
        assert!((r.delta2 + mirror.delta2).abs() < 1e-12);
        assert!((r.area2.unwrap() - mirror.area2.unwrap()).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_positive_amplitude() {
        assert!(design_second_pulse(-5.0, 0.0, Branch::Positive).is_err());
        assert!(design_second_pulse(-5.0, -1.0, Branch::Negative).is_err());
    }

    #[test]
    fn table_values() {
        let t = detuning_table(5.0, 4.0).unwrap();
        let expected_pos = [-11.403_124_237, -1.403_124_237];
        let expected_neg = [1.403_124_237, 11.403_124_237];
        for j in 0..2 {
            assert!((t.positive[j] - expected_pos[j]).abs() < 1e-8);
            assert!((t.negative[j] - expected_neg[j]).abs() < 1e-8);
        }
        let tiny = detuning_table(0.0, 4.0).unwrap();
        assert_eq!(tiny.positive, [-4.0, -4.0]);
        assert_eq!(tiny.negative, [4.0, 4.0]);
    }

    #[test]
    fn gaussian_first_pulse() {
        let r = gaussian_design(22.65, 2.4, -8.0, Branch::Positive).unwrap();
        assert!((r.rabi_splitting - 11.163).abs() < 5e-4);
        assert!((r.delta2 + 19.163).abs() < 5e-4);
        assert_eq!(r.area2, None);
        // c̃² = (1 + Δ/Ω_R)/2 = 0.1417 at the peak; quoted as 0.145.
        assert!((r.c_tilde_sq - 0.141_674).abs() < 1e-5);
        assert!((r.c_tilde_sq - 0.145).abs() < 5e-3);

        let off = gaussian_design(0.0, 2.4, -8.0, Branch::Positive).unwrap();
        assert_eq!(off.delta2, -16.0);
    }

    proptest! {
        #[test]
        fn branch_ordering_and_self_consistency(delta1 in -20.0..20.0f64, omega1 in 0.01..20.0f64) {
            let pos = design_second_pulse(delta1, omega1, Branch::Positive).unwrap();
            let neg = design_second_pulse(delta1, omega1, Branch::Negative).unwrap();
            prop_assert!(pos.delta2 < delta1 && delta1 < neg.delta2);
            prop_assert!(((delta1 - pos.delta2) - pos.rabi_splitting).abs() <= 1e-12 * pos.rabi_splitting.max(1.0));
            prop_assert!(((neg.delta2 - delta1) - neg.rabi_splitting).abs() <= 1e-12 * neg.rabi_splitting.max(1.0));
            prop_assert!((pos.area2.unwrap() * pos.coupling_sq - 1.0).abs() < 1e-12);
            prop_assert!((neg.area2.unwrap() * neg.coupling_sq - 1.0).abs() < 1e-12);
            prop_assert!(pos.area2.unwrap() >= 1.0 && neg.area2.unwrap() >= 1.0);
            prop_assert_eq!(pos.coupling_sq, pos.c_tilde_sq);
        }

        #[test]
        fn table_is_antisymmetric(d in 0.0..20.0f64, omega1 in 0.01..20.0f64) {
            let t = detuning_table(d, omega1).unwrap();
            prop_assert!((t.positive[0] + t.negative[1]).abs() < 1e-12 * (1.0 + d + omega1));
            prop_assert!((t.positive[1] + t.negative[0]).abs() < 1e-12 * (1.0 + d + omega1));
        }
    }
}
