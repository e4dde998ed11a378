//! Defect of a complex Hadamard matrix: the dimension of first-order
//! Hadamard-preserving phase deformations `H_ik ↦ H_ik e^{iR_ik}`, minus the
//! `2n - 1` directions that come from diagonal phase equivalence. A matrix
//! with defect 0 is isolated.

use super::jacobi::jacobi_eigen;
use crate::error::{Error, Result};
use crate::matrix::ButsonMatrix;

pub const DEFAULT_RANK_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct DefectReport {
    pub defect: usize,
    pub rank: usize,
    pub unknowns: usize,
    /// Singular values divided by the largest, descending.
    pub singular_values: Vec<f64>,
    /// Largest relative singular value counted as zero (0 if none).
    pub largest_discarded: f64,
    /// Smallest relative singular value counted as nonzero.
    pub smallest_retained: f64,
}

/// Rows: real and imaginary parts of
/// `Σ_k H_ik conj(H_jk) (R_ik - R_jk) = 0` for each `i < j`; columns index
/// `R` row-major.
fn linear_system(b: &ButsonMatrix) -> (Vec<f64>, usize, usize) {
    let n = b.dim();
    let h = b.embed();
    let rows = n * (n - 1);
    let cols = n * n;
    let mut a = vec![0.0; rows * cols];
    let mut r = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = h.get(i, k) * h.get(j, k).conj();
                a[r * cols + i * n + k] += c.re;
                a[r * cols + j * n + k] -= c.re;
                a[(r + 1) * cols + i * n + k] += c.im;
                a[(r + 1) * cols + j * n + k] -= c.im;
            }
            r += 2;
        }
    }
    (a, rows, cols)
}

/// Singular values (descending) of a `rows × cols` matrix, from the
/// eigenvalues of the symmetric embedding `[[0, A], [Aᵀ, 0]]`, which avoids
/// squaring the small ones.
fn singular_values(a: &[f64], rows: usize, cols: usize) -> Result<Vec<f64>> {
    let m = rows + cols;
    let mut aug = vec![0.0; m * m];
    for i in 0..rows {
        for j in 0..cols {
            let v = a[i * cols + j];
            aug[i * m + rows + j] = v;
            aug[(rows + j) * m + i] = v;
        }
    }
    let eig = jacobi_eigen(&aug, m)?;
    let k = rows.min(cols);
    let mut sv: Vec<f64> = eig.values.iter().rev().take(k).map(|x| x.abs()).collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    Ok(sv)
}

/// Computes the defect. Singular values below `tol · σ_max` count as zero;
/// values in `[tol, 10·tol) · σ_max` make the rank indeterminate.
pub fn defect(b: &ButsonMatrix, tol: f64) -> Result<DefectReport> {
    if !b.is_hadamard_exact() {
        return Err(Error::NotHadamard);
    }
    let n = b.dim();
    let unknowns = n * n;
    if n == 1 {
        return Ok(DefectReport {
            defect: 0,
            rank: 0,
            unknowns,
            singular_values: vec![],
            largest_discarded: 0.0,
            smallest_retained: 0.0,
        });
    }
    let (a, rows, cols) = linear_system(b);
    let sv = singular_values(&a, rows, cols)?;
    let max = sv[0];
    let rel: Vec<f64> = sv.iter().map(|s| s / max).collect();
    if let Some(&bad) = rel.iter().find(|&&r| r >= tol && r < 10.0 * tol) {
        return Err(Error::IndeterminateRank { ratio: bad });
    }
    let rank = rel.iter().filter(|&&r| r >= tol).count();
    let largest_discarded = rel.iter().copied().filter(|&r| r < tol).fold(0.0, f64::max);
    let smallest_retained = rel[..rank].iter().copied().fold(f64::INFINITY, f64::min);
    Ok(DefectReport {
        defect: unknowns - rank - (2 * n - 1),
        rank,
        unknowns,
        singular_values: rel,
        largest_discarded,
        smallest_retained,
    })
}
