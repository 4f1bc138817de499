use num_complex::Complex64 as C64;

use crate::error::{invalid, Error, Result};
use crate::state::StateVector;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// A 2×2 or 3×3 Hermitian matrix in meV, indexed `[row][col]` in the bare basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianOperator {
    dim: usize,
    entries: [[C64; 3]; 3],
}

impl HermitianOperator {
    /// Checks `entries[j][k] == conj(entries[k][j])` exactly.
    pub fn new(entries: &[Vec<C64>]) -> Result<Self> {
        let dim = entries.len();
        if !(dim == 2 || dim == 3) {
            return invalid(format!("operator dimension must be 2 or 3, got {dim}"));
        }
        let mut m = [[ZERO; 3]; 3];
        for (j, row) in entries.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            m[j][..dim].copy_from_slice(row);
        }
        for j in 0..dim {
            for k in j..dim {
                if m[j][k] != m[k][j].conj() {
                    return Err(Error::NotHermitian { row: j, col: k });
                }
            }
        }
        Ok(Self { dim, entries: m })
    }

    /// Builds the operator from its real diagonal and the entries strictly below
    /// it (`lower[0] = (1,0)`, then `(2,0)`, `(2,1)` for dimension 3). The upper
    /// triangle is filled with conjugates, so the result is Hermitian exactly.
    pub(crate) fn from_lower(diagonal: &[f64], lower: &[C64]) -> Self {
        let dim = diagonal.len();
        debug_assert!(dim == 2 || dim == 3);
        debug_assert_eq!(lower.len(), dim * (dim - 1) / 2);
        let mut m = [[ZERO; 3]; 3];
        for (j, &d) in diagonal.iter().enumerate() {
            m[j][j] = C64::new(d, 0.0);
        }
        let mut it = lower.iter();
        for j in 1..dim {
            for k in 0..j {
                let v = *it.next().expect("lower triangle length");
                m[j][k] = v;
                m[k][j] = v.conj();
            }
        }
        Self { dim, entries: m }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        assert!(row < self.dim && col < self.dim, "index out of range");
        self.entries[row][col]
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = 0.0;
        for row in &self.entries[..self.dim] {
            for v in &row[..self.dim] {
                m = m.max(v.norm());
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|j| self.entries[j][j].re).sum()
    }

    /// `true` when every entry has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.entries[..self.dim].iter().all(|row| row[..self.dim].iter().all(|v| v.im == 0.0))
    }

    /// Real parts as a 3×3 array (unused rows and columns are zero).
    pub fn real_part(&self) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for j in 0..self.dim {
            for k in 0..self.dim {
                out[j][k] = self.entries[j][k].re;
            }
        }
        out
    }

    /// Matrix-vector product `H ψ`.
    pub fn apply(&self, state: &StateVector) -> Result<[C64; 3]> {
        if state.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: state.dim() });
        }
        Ok(self.mul_raw(state.raw()))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, v: &[C64; 3]) -> [C64; 3] {
        let mut out = [ZERO; 3];
        for j in 0..self.dim {
            let mut acc = ZERO;
            for k in 0..self.dim {
                acc += self.entries[j][k] * v[k];
            }
            out[j] = acc;
        }
        out
    }
}
