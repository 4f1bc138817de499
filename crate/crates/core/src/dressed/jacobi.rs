//! Cyclic Jacobi eigensolver for real symmetric 3×3 matrices.

const MAX_SWEEPS: usize = 64;

fn off_diagonal_norm(a: &[[f64; 3]; 3]) -> f64 {
    let mut s = 0.0;
    for p in 0..3 {
        for q in 0..3 {
            if p != q {
                s += a[p][q] * a[p][q];
            }
        }
    }
    s.sqrt()
}

fn frobenius_norm(a: &[[f64; 3]; 3]) -> f64 {
    a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
}

/// Eigenvalues in ascending order and the matching unit eigenvectors as rows.
///
/// Sweeps until the off-diagonal Frobenius norm drops below `1e-14·‖A‖_F`.
pub(crate) fn symmetric_eigen(matrix: &[[f64; 3]; 3]) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut a = *matrix;
    // Columns of v accumulate the rotations.
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let threshold = 1e-14 * frobenius_norm(&a);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..2 {
            for q in (p + 1)..3 {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..3 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..3 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;

                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let mut values = [0.0; 3];
    let mut vectors = [[0.0; 3]; 3];
    for (slot, &i) in order.iter().enumerate() {
        values[slot] = a[i][i];
        for k in 0..3 {
            vectors[slot][k] = v[k][i];
        }
    }
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::Matrix3;
    use proptest::prelude::*;

    fn residual(m: &[[f64; 3]; 3], value: f64, vector: &[f64; 3]) -> f64 {
        (0..3)
            .map(|j| {
                let hv: f64 = (0..3).map(|k| m[j][k] * vector[k]).sum();
                (hv - value * vector[j]).powi(2)
            })
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let (values, vectors) = symmetric_eigen(&[[6.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 5.0]]);
        assert_eq!(values, [0.0, 5.0, 6.0]);
        assert_eq!(vectors[0].map(f64::abs), [0.0, 1.0, 0.0]);
        assert_eq!(vectors[1].map(f64::abs), [0.0, 0.0, 1.0]);
        assert_eq!(vectors[2].map(f64::abs), [1.0, 0.0, 0.0]);
    }

    #[test]
    fn zero_matrix() {
        let (values, _) = symmetric_eigen(&[[0.0; 3]; 3]);
        assert_eq!(values, [0.0; 3]);
    }

    proptest! {
        #[test]
        fn agrees_with_reference_solver(entries in prop::array::uniform6(-20.0..20.0f64)) {
            let [a, b, c, d, e, f] = entries;
            let m = [[a, d, e], [d, b, f], [e, f, c]];
            let (values, vectors) = symmetric_eigen(&m);
            let scale = m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()));

            let reference = Matrix3::new(a, d, e, d, b, f, e, f, c).symmetric_eigen();
            let mut expected: Vec<f64> = reference.eigenvalues.iter().copied().collect();
            expected.sort_by(f64::total_cmp);
            for (got, want) in values.iter().zip(&expected) {
                prop_assert!((got - want).abs() <= 1e-10 * scale.max(1.0));
            }
            for j in 0..3 {
                prop_assert!(residual(&m, values[j], &vectors[j]) <= 1e-10 * scale.max(1e-300));
                for k in 0..3 {
                    let dot: f64 = (0..3).map(|i| vectors[j][i] * vectors[k][i]).sum();
                    let want = if j == k { 1.0 } else { 0.0 };
                    prop_assert!((dot - want).abs() < 1e-10);
                }
            }
        }
    }
}
