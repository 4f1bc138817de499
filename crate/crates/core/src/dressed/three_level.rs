//! Numerical dressed states of the exciton–biexciton system.

use crate::error::{invalid, Error, Result};
use crate::operator::HermitianOperator;

use super::jacobi::symmetric_eigen;

/// Dressed energies `E₁ ≤ E₂ ≤ E₃` (meV) and coefficients `a[j][k]` of
/// `|ψ_{j+1}⟩ = Σ_k a[j][k]|k⟩`, `k ∈ (g, x, xx)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedFrame3LS {
    pub energies: [f64; 3],
    pub coefficients: [[f64; 3]; 3],
}

impl DressedFrame3LS {
    /// `⟨ψ_j|ψ'_j⟩` for dressed state `j` (0-based) of two frames.
    pub fn overlap(&self, other: &Self, j: usize) -> f64 {
        (0..3).map(|k| self.coefficients[j][k] * other.coefficients[j][k]).sum()
    }
}

/// Transition factors of the second pulse between dressed states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Couplings3LS {
    pub omega12: f64,
    pub omega13: f64,
    pub omega23: f64,
}

/// Eigendecomposition of a real three-level rotating-frame Hamiltonian.
///
/// Eigenvectors are sign-fixed so that each has positive overlap with the
/// same-index vector of `previous`, or, without one, so that its
/// largest-magnitude component is positive.
pub fn dressed_3ls(h: &HermitianOperator, previous: Option<&DressedFrame3LS>) -> Result<DressedFrame3LS> {
    if h.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: h.dim() });
    }
    if !h.is_real() {
        return invalid("three-level dressed frame requires a real symmetric Hamiltonian");
    }
    let (energies, mut coefficients) = symmetric_eigen(&h.real_part());
    for (j, row) in coefficients.iter_mut().enumerate() {
        let flip = match previous {
            Some(prev) => (0..3).map(|k| row[k] * prev.coefficients[j][k]).sum::<f64>() < 0.0,
            None => {
                let dominant = (0..3)
                    .max_by(|&a, &b| row[a].abs().total_cmp(&row[b].abs()).then(b.cmp(&a)))
                    .expect("three components");
                row[dominant] < 0.0
            }
        };
        if flip {
            row.iter_mut().for_each(|v| *v = -*v);
        }
    }
    Ok(DressedFrame3LS { energies, coefficients })
}

/// `Ω₁₂ = a₂,g·a₁,x + a₂,x·a₁,xx`, `Ω₁₃ = a₃,g·a₁,x + a₃,x·a₁,xx`,
/// `Ω₂₃ = a₃,g·a₂,x + a₃,x·a₂,xx`.
pub fn couplings_3ls(frame: &DressedFrame3LS) -> Couplings3LS {
    let a = &frame.coefficients;
    let pair = |j: usize, k: usize| a[k][0] * a[j][1] + a[k][1] * a[j][2];
    Couplings3LS { omega12: pair(0, 1), omega13: pair(0, 2), omega23: pair(1, 2) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;

    fn real_h(m: [[f64; 3]; 3]) -> HermitianOperator {
        let rows: Vec<Vec<C64>> = m.iter().map(|r| r.iter().map(|&v| C64::new(v, 0.0)).collect()).collect();
        HermitianOperator::new(&rows).unwrap()
    }

    #[test]
    fn undriven_frame_is_bare() {
        let f = dressed_3ls(&real_h([[0.0, 0.0, 0.0], [0.0, 5.0, 0.0], [0.0, 0.0, 6.0]]), None).unwrap();
        assert_eq!(f.energies, [0.0, 5.0, 6.0]);
        assert_eq!(f.coefficients, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        let c = couplings_3ls(&f);
        assert_eq!((c.omega12, c.omega13, c.omega23), (0.0, 0.0, 0.0));
    }

    #[test]
    fn sign_follows_previous_frame() {
        let h = real_h([[0.0, -1.0, 0.0], [-1.0, 5.0, -1.0], [0.0, -1.0, 6.0]]);
        let first = dressed_3ls(&h, None).unwrap();
        let mut flipped = first;
        flipped.coefficients[1].iter_mut().for_each(|v| *v = -*v);
        let tracked = dressed_3ls(&h, Some(&flipped)).unwrap();
        assert_eq!(tracked.coefficients[0], first.coefficients[0]);
        assert_eq!(tracked.coefficients[1], flipped.coefficients[1]);
        assert!(tracked.overlap(&flipped, 1) > 0.999);
    }

    #[test]
    fn rejects_complex_and_two_level_input() {
        let c = |re, im| C64::new(re, im);
        let complex = HermitianOperator::new(&[
            vec![c(0.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, -1.0), c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
        ])
        .unwrap();
        assert!(dressed_3ls(&complex, None).is_err());
        let two = HermitianOperator::new(&[vec![c(0.0, 0.0); 2], vec![c(0.0, 0.0); 2]]).unwrap();
        assert!(matches!(dressed_3ls(&two, None), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn couplings_are_raising_operator_elements() {
        // Ω_jk as defined equals ⟨ψ_j|(|x⟩⟨g| + |xx⟩⟨x|)|ψ_k⟩.
        let f = dressed_3ls(&real_h([[0.0, -2.0, 0.0], [-2.0, 5.0, -2.0], [0.0, -2.0, 6.0]]), None).unwrap();
        let a = f.coefficients;
        let raising = |j: usize, k: usize| a[j][1] * a[k][0] + a[j][2] * a[k][1];
        let c = couplings_3ls(&f);
        assert!((c.omega12 - raising(0, 1)).abs() < 1e-15);
        assert!((c.omega13 - raising(0, 2)).abs() < 1e-15);
        assert!((c.omega23 - raising(1, 2)).abs() < 1e-15);
    }
}
