use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

const MAX_SWEEPS: usize = 100;
const OFF_TOL: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Column `k` (row-major `n × n`) is the eigenvector of `values[k]`.
    pub vectors: Vec<f64>,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigendecomposition of a real symmetric `n × n` matrix
/// (row-major). Stops once the off-diagonal Frobenius norm drops below
/// `1e-12 · max(1, ‖A‖_F)`.
pub fn jacobi_eigen(a: &[f64], n: usize) -> Result<SymmetricEigen> {
    assert_eq!(a.len(), n * n);
    let mut a = a.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let stop = OFF_TOL * frob.max(1.0);
    let mut converged = off_norm(&a, n) < stop;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        converged = off_norm(&a, n) < stop;
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "Jacobi did not converge in {MAX_SWEEPS} sweeps"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[k * n + col] = v[k * n + src];
        }
    }
    Ok(SymmetricEigen { values, vectors })
}

/// Eigenvalues (ascending) of a real symmetric matrix given in complex
/// form. Verifies the trace identity and every residual `‖Mv - λv‖` against
/// `tol` (scaled by `max(1, ‖M‖_F)`).
pub fn eig_real_symmetric(m: &ComplexMatrix, tol: f64) -> Result<SymmetricEigen> {
    let n = m.dim();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j);
            if z.im.abs() > tol || (z - m.get(j, i)).norm() > tol || !z.re.is_finite() {
                return Err(Error::Asymmetric);
            }
            a[i * n + j] = 0.5 * (z.re + m.get(j, i).re);
        }
    }
    let eig = jacobi_eigen(&a, n)?;
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
    let sum: f64 = eig.values.iter().sum();
    if (trace - sum).abs() > tol * scale {
        return Err(Error::Convergence(format!("trace mismatch {trace} vs {sum}")));
    }
    for (k, &lam) in eig.values.iter().enumerate() {
        let mut r = 0.0;
        for i in 0..n {
            let mv: f64 = (0..n).map(|j| a[i * n + j] * eig.vectors[j * n + k]).sum();
            r += (mv - lam * eig.vectors[i * n + k]).powi(2);
        }
        if r.sqrt() > tol * scale {
            return Err(Error::Convergence(format!("eigenpair residual {:e}", r.sqrt())));
        }
    }
    Ok(eig)
}

/// The six values of the reference closed form for the spectrum of the
/// symmetric family at parameter `a`: the first pair
/// `(1 + a + a² ± √(a²(1+a²) + 5))/√6`, then each of
/// `(±√(5a²(a-1)²) + 2 - a(1+a))/(2√6)` twice.
pub fn closed_form_a2a(a: f64) -> [f64; 6] {
    let r6 = 6f64.sqrt();
    let s = (a * a * (1.0 + a * a) + 5.0).sqrt();
    let t = (5.0 * a * a * (a - 1.0) * (a - 1.0)).sqrt();
    let u = 1.0 + a + a * a;
    let v = 2.0 - a * (1.0 + a);
    let plus = (t + v) / (2.0 * r6);
    let minus = (-t + v) / (2.0 * r6);
    [(u + s) / r6, (u - s) / r6, plus, plus, minus, minus]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::agaian_symmetric;

    #[test]
    fn all_ones() {
        let e = eig_real_symmetric(&agaian_symmetric(1.0), 1e-10).unwrap();
        let expected = [0.0, 0.0, 0.0, 0.0, 0.0, 6.0];
        for (x, y) in e.values.iter().zip(expected) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_one_pattern_trace() {
        let e = eig_real_symmetric(&agaian_symmetric(0.0), 1e-10).unwrap();
        assert!((e.values.iter().sum::<f64>() - 6.0).abs() < 1e-10);
    }

    #[test]
    fn known_small_matrix() {
        // [[2,1],[1,2]] -> 1, 3
        let e = jacobi_eigen(&[2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14 && (e.values[1] - 3.0).abs() < 1e-14);
        let diag = jacobi_eigen(&[5.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_eq!(diag.values, vec![-1.0, 5.0]);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = ComplexMatrix::from_real(2, &[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!(matches!(eig_real_symmetric(&m, 1e-10), Err(Error::Asymmetric)));
        let c = ComplexMatrix::new(1, vec![num_complex::Complex64::new(0.0, 1.0)]).unwrap();
        assert!(matches!(eig_real_symmetric(&c, 1e-10), Err(Error::Asymmetric)));
    }

    #[test]
    fn closed_form_examples() {
        let r6 = 6f64.sqrt();
        let r7 = 7f64.sqrt();
        let one = closed_form_a2a(1.0);
        let want = [(3.0 + r7) / r6, (3.0 - r7) / r6, 0.0, 0.0, 0.0, 0.0];
        for (x, y) in one.iter().zip(want) {
            assert!((x - y).abs() < 1e-14);
        }
        let zero = closed_form_a2a(0.0);
        let r5 = 5f64.sqrt();
        let want = [(1.0 + r5) / r6, (1.0 - r5) / r6, 1.0 / r6, 1.0 / r6, 1.0 / r6, 1.0 / r6];
        for (x, y) in zero.iter().zip(want) {
            assert!((x - y).abs() < 1e-14);
        }
        // the values always sum to 6/√6
        for a in [-2.0, 0.3, 1.7, 4.0] {
            assert!((closed_form_a2a(a).iter().sum::<f64>() - r6).abs() < 1e-12);
        }
    }
}
