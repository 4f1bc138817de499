//! Analytic dressed states of the two-level system under the first pulse.

use num_complex::Complex64 as C64;

use crate::units::angular_frequency;

/// Dressed energies `E₊ ≥ E₋` (meV) and the mixing coefficients of
/// `|ψ₊⟩ = c|x⟩ − c̃|g⟩`, `|ψ₋⟩ = c̃|x⟩ + c|g⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedFrameTLS {
    pub e_plus: f64,
    pub e_minus: f64,
    pub c: f64,
    pub c_tilde: f64,
}

impl DressedFrameTLS {
    pub fn splitting(&self) -> f64 {
        self.e_plus - self.e_minus
    }

    /// Bare amplitudes `(g, x)` mapped to dressed amplitudes `(ψ₋, ψ₊)`.
    pub fn to_dressed(&self, bare: &[C64]) -> [C64; 2] {
        let (g, x) = (bare[0], bare[1]);
        [g * self.c + x * self.c_tilde, x * self.c - g * self.c_tilde]
    }

    /// Dressed amplitudes `(ψ₋, ψ₊)` mapped back to bare amplitudes `(g, x)`.
    pub fn to_bare(&self, dressed: &[C64; 2]) -> [C64; 2] {
        let (minus, plus) = (dressed[0], dressed[1]);
        [minus * self.c - plus * self.c_tilde, minus * self.c_tilde + plus * self.c]
    }
}

/// `√(Ω₀² + Δ²)` in meV.
pub fn rabi_splitting(omega0: f64, delta: f64) -> f64 {
    omega0.hypot(delta)
}

/// Dressed frame of `H = −Δ|x⟩⟨x| − ½Ω₀(|x⟩⟨g| + h.c.)` (meV).
///
/// The coefficients are evaluated in the cancellation-free form
/// `c² = (Ω_R − Δ)/(2Ω_R)`, `c̃² = (Ω_R + Δ)/(2Ω_R)`, picking whichever of the
/// two is free of subtraction and deriving the other from `|Ω₀|`. The envelope
/// enters only through its magnitude. At `Ω₀ = Δ = 0` the frame is `c = 0`,
/// `c̃ = 1`.
pub fn tls_dressed(omega0: f64, delta: f64) -> DressedFrameTLS {
    let omega_r = rabi_splitting(omega0, delta);
    let e_plus = 0.5 * (-delta + omega_r);
    let e_minus = 0.5 * (-delta - omega_r);
    if omega_r == 0.0 {
        return DressedFrameTLS { e_plus, e_minus, c: 0.0, c_tilde: 1.0 };
    }
    let omega0 = omega0.abs();
    let (c, c_tilde) = if delta <= 0.0 {
        let c = ((omega_r - delta) / (2.0 * omega_r)).sqrt();
        (c, omega0 / (2.0 * omega_r * (omega_r - delta)).sqrt())
    } else {
        let c_tilde = ((omega_r + delta) / (2.0 * omega_r)).sqrt();
        (omega0 / (2.0 * omega_r * (omega_r + delta)).sqrt(), c_tilde)
    };
    DressedFrameTLS { e_plus, e_minus, c, c_tilde }
}

/// Dressed energies including the diagonal part of the second pulse:
/// `E±,₂ = E± ± Ω₂ c c̃ cos(ω_Δ t)`, with `omega_delta` given as `ħω_Δ` in meV.
pub fn shifted_energies(frame: &DressedFrameTLS, omega2_envelope: f64, omega_delta: f64, t: f64) -> (f64, f64) {
    let shift = omega2_envelope * frame.c * frame.c_tilde * (angular_frequency(omega_delta) * t).cos();
    (frame.e_plus + shift, frame.e_minus - shift)
}

/// Coefficient of `|ψ₊⟩⟨ψ₋|` contributed by the second pulse:
/// `−½Ω₂(c² e^{iω_Δt} − c̃² e^{−iω_Δt})` (meV), with `omega_delta` as `ħω_Δ`.
pub fn dressed_frame_coupling(frame: &DressedFrameTLS, omega2_envelope: f64, omega_delta: f64, t: f64) -> C64 {
    let phase = angular_frequency(omega_delta) * t;
    let c2 = frame.c * frame.c;
    let ct2 = frame.c_tilde * frame.c_tilde;
    -0.5 * omega2_envelope * (C64::from_polar(c2, phase) - C64::from_polar(ct2, -phase))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn splitting_examples() {
        assert!((rabi_splitting(4.0, -5.0) - 6.403_124_237_432_849).abs() < 1e-12);
        assert_eq!(rabi_splitting(0.0, -3.5), 3.5);
        assert_eq!(rabi_splitting(3.0, 4.0), 5.0);
    }

    #[test]
    fn mixing_examples() {
        let neg = tls_dressed(4.0, -5.0);
        assert!((neg.c_tilde.powi(2) - 0.1096).abs() < 5e-5);
        let pos = tls_dressed(4.0, 5.0);
        assert!((pos.c_tilde.powi(2) - 0.8904).abs() < 5e-5);
        // c and c̃ swap roles under Δ → −Δ.
        assert!((neg.c - pos.c_tilde).abs() < 1e-15);
        let res = tls_dressed(2.5, 0.0);
        assert!((res.c - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((res.c_tilde - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn bare_limits() {
        let neg = tls_dressed(0.0, -5.0);
        assert_eq!((neg.c, neg.c_tilde), (1.0, 0.0));
        let pos = tls_dressed(0.0, 5.0);
        assert_eq!((pos.c, pos.c_tilde), (0.0, 1.0));
        let degenerate = tls_dressed(0.0, 0.0);
        assert_eq!((degenerate.c, degenerate.c_tilde), (0.0, 1.0));
        assert_eq!(degenerate.splitting(), 0.0);
    }

    #[test]
    fn second_pulse_terms_vanish() {
        let f = tls_dressed(4.0, -5.0);
        let quarter = 0.25 * 2.0 * std::f64::consts::PI / angular_frequency(6.46);
        let (p, m) = shifted_energies(&f, 2.0, 6.46, quarter);
        assert!((p - f.e_plus).abs() < 1e-12 && (m - f.e_minus).abs() < 1e-12);
        assert_eq!(shifted_energies(&f, 0.0, 6.46, 1.3), (f.e_plus, f.e_minus));

        let single = DressedFrameTLS { e_plus: 1.0, e_minus: -1.0, c: 1.0, c_tilde: 0.0 };
        let t = 0.37;
        let v = dressed_frame_coupling(&single, 1.5, 6.46, t);
        let expected = C64::from_polar(-0.75, angular_frequency(6.46) * t);
        assert!((v - expected).norm() < 1e-14);

        let symmetric = tls_dressed(1.0, 0.0);
        assert!(dressed_frame_coupling(&symmetric, 3.0, 6.46, 0.0).norm() < 1e-15);

        let at_zero = dressed_frame_coupling(&f, 2.0, 6.46, 0.0);
        assert!((at_zero.norm() - 0.5 * 2.0 * (f.c.powi(2) - f.c_tilde.powi(2)).abs()).abs() < 1e-14);
    }

    /// `⟨a|M|b⟩` for real 2-vectors `a`, `b` and a complex 2×2 matrix `M`.
    fn sandwich(a: [f64; 2], m: [[C64; 2]; 2], b: [f64; 2]) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..2 {
            for k in 0..2 {
                acc += a[j] * m[j][k] * b[k];
            }
        }
        acc
    }

    proptest! {
        #[test]
        fn frame_reconstructs_hamiltonian(omega0 in 0.0..15.0f64, delta in -15.0..15.0f64) {
            let f = tls_dressed(omega0, delta);
            prop_assert!((f.c * f.c + f.c_tilde * f.c_tilde - 1.0).abs() < 1e-12);
            prop_assert!(f.e_plus >= f.e_minus);
            prop_assert!((f.splitting() - rabi_splitting(omega0, delta)).abs() < 1e-12);
            // Basis (g, x).
            let plus = [-f.c_tilde, f.c];
            let minus = [f.c, f.c_tilde];
            let h = [[0.0, -0.5 * omega0], [-0.5 * omega0, -delta]];
            for j in 0..2 {
                for k in 0..2 {
                    let rebuilt = f.e_plus * plus[j] * plus[k] + f.e_minus * minus[j] * minus[k];
                    prop_assert!((rebuilt - h[j][k]).abs() < 1e-10);
                }
            }
        }

        #[test]
        fn second_pulse_terms_match_direct_projection(
            omega0 in 0.0..10.0f64, delta in -10.0..10.0f64, omega2 in 0.0..5.0f64,
            energy in -20.0..20.0f64, t in -20.0..20.0f64,
        ) {
            let f = tls_dressed(omega0, delta);
            let phase = angular_frequency(energy) * t;
            let zero = C64::new(0.0, 0.0);
            // −½Ω₂(e^{iφ}|x⟩⟨g| + e^{−iφ}|g⟩⟨x|) in the (g, x) basis.
            let h2 = [
                [zero, C64::from_polar(-0.5 * omega2, -phase)],
                [C64::from_polar(-0.5 * omega2, phase), zero],
            ];
            let plus = [-f.c_tilde, f.c];
            let minus = [f.c, f.c_tilde];
            let (ep2, em2) = shifted_energies(&f, omega2, energy, t);
            prop_assert!((sandwich(plus, h2, plus).re - (ep2 - f.e_plus)).abs() < 1e-12);
            prop_assert!((sandwich(minus, h2, minus).re - (em2 - f.e_minus)).abs() < 1e-12);
            let coupling = dressed_frame_coupling(&f, omega2, energy, t);
            prop_assert!((sandwich(plus, h2, minus) - coupling).norm() < 1e-12);
        }
    }
}
