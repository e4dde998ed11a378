//! Numeric roots of scaled characteristic polynomials.
//!
//! Durand–Kerner iteration gives all roots at once, but multiple roots only
//! come out to roughly `ε^{1/m}`. Nearby iterates are therefore grouped, the
//! group mean is taken as the estimate of an `m`-fold root and refined by
//! Newton's method on the `(m-1)`-th derivative, where the root is simple.

use num_complex::Complex64;

use super::ScaledPoly;
use crate::error::{Error, Result};

/// Distinct eigenvalues closer than this are merged.
pub const CLUSTER_RADIUS: f64 = 1e-8;
pub const DEFAULT_SPECTRUM_TOL: f64 = 1e-10;

const MAX_ITER: usize = 1000;
const STEP_TOL: f64 = 1e-13;
const INIT_RADIUS: f64 = 1.2;
/// Radius used to gather Durand–Kerner iterates that approximate one
/// multiple root.
const GROUP_RADIUS: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenvalue {
    pub value: Complex64,
    pub mult: usize,
}

/// Distinct eigenvalues with multiplicities, sorted by real then imaginary
/// part.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<Eigenvalue>,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.mult).sum()
    }

    /// Each eigenvalue repeated by multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.mult))
            .collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.eigenvalues.iter().map(|e| e.mult).collect()
    }
}

/// Smallest achievable maximum distance over all pairings of two equal-size
/// multisets (bottleneck matching by exhaustive search; sizes up to 8).
pub fn matching_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut best = f64::INFINITY;
    for p in crate::perm::all(a.len()) {
        let d = a.iter().zip(&p).map(|(x, &j)| (x - b[j]).norm()).fold(0.0, f64::max);
        best = best.min(d);
    }
    best
}

fn horner(c: &[Complex64], x: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * x + a)
}

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    c.iter().enumerate().skip(1).map(|(k, a)| a * k as f64).collect()
}

fn durand_kerner(monic: &[Complex64]) -> Result<Vec<Complex64>> {
    let d = monic.len() - 1;
    let offset = 0.25 * (5f64.sqrt() - 1.0);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(INIT_RADIUS, std::f64::consts::TAU * k as f64 / d as f64 + offset))
        .collect();
    for _ in 0..MAX_ITER {
        let mut max_step: f64 = 0.0;
        for i in 0..d {
            let denom: Complex64 = (0..d).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            if denom.norm() == 0.0 {
                // coincident iterates; nudge apart
                z[i] += Complex64::new(1e-7, 1e-7);
                max_step = f64::INFINITY;
                continue;
            }
            let step = horner(monic, z[i]) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if z.iter().any(|v| !v.is_finite()) {
            return Err(Error::Convergence("non-finite iterate".into()));
        }
        if max_step < STEP_TOL {
            break;
        }
    }
    Ok(z)
}

fn newton(c: &[Complex64], mut x: Complex64) -> Complex64 {
    let dc = derivative(c);
    for _ in 0..50 {
        let d = horner(&dc, x);
        if d.norm() == 0.0 {
            break;
        }
        let step = horner(c, x) / d;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.norm() <= 1e-16 * x.norm().max(1.0) {
            break;
        }
    }
    x
}

/// Groups indices whose values are within `radius` (transitively).
fn group(values: &[Complex64], radius: f64) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..values.len()).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if (values[i] - values[j]).norm() < radius {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of = vec![usize::MAX; values.len()];
    for i in 0..values.len() {
        let r = find(&mut label, i);
        if root_of[r] == usize::MAX {
            root_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[root_of[r]].push(i);
    }
    groups
}

/// All roots of `p` with multiplicities. Every returned root satisfies
/// `|p(root)| ≤ tol`.
pub fn spectrum_numeric(p: &ScaledPoly, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Convergence(format!("tolerance must be positive, got {tol}")));
    }
    let coeffs = p.numeric_coeffs();
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if d == 0 {
        return Ok(Spectrum { eigenvalues: vec![] });
    }
    let raw = durand_kerner(&monic)?;

    let mut refined: Vec<Eigenvalue> = Vec::new();
    for g in group(&raw, GROUP_RADIUS) {
        let m = g.len();
        let mean = g.iter().map(|&i| raw[i]).sum::<Complex64>() / m as f64;
        let mut target = monic.clone();
        for _ in 1..m {
            target = derivative(&target);
        }
        refined.push(Eigenvalue {
            value: newton(&target, mean),
            mult: m,
        });
    }

    // merge refined groups that landed on the same value
    let values: Vec<Complex64> = refined.iter().map(|e| e.value).collect();
    let mut eigenvalues: Vec<Eigenvalue> = group(&values, CLUSTER_RADIUS)
        .into_iter()
        .map(|g| {
            let mult = g.iter().map(|&i| refined[i].mult).sum();
            let value = g
                .iter()
                .map(|&i| refined[i].value * refined[i].mult as f64)
                .sum::<Complex64>()
                / mult as f64;
            Eigenvalue { value, mult }
        })
        .collect();

    for e in &eigenvalues {
        let residual = horner(&coeffs, e.value).norm();
        if residual.is_nan() || residual > tol {
            return Err(Error::Convergence(format!(
                "root {} has residual {residual:e} above tolerance {tol:e}",
                e.value
            )));
        }
    }
    eigenvalues.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(Spectrum { eigenvalues })
}
