//! Spectral and combinatorial invariants of Butson matrices.
//!
//! * [`charpoly_exact`]: `det(xI - H)` over `Z[ζ_q]` by Leibniz expansion.
//! * [`ScaledPoly`]: the same coefficients read as `det(xI - H/√n)`, with
//!   the `√n` powers kept implicit so comparison stays exact.
//! * [`spectrum_numeric`]: roots of the scaled polynomial with multiplicities.
//! * [`haagerup_set`], [`defect`]: standard-equivalence invariants.
//! * [`eig_real_symmetric`]: cyclic Jacobi for real symmetric matrices.

mod defect;
mod haagerup;
mod jacobi;
mod roots;

pub use defect::{defect, DefectReport, DEFAULT_RANK_TOL};
pub use haagerup::{haagerup_set, haagerup_set_with, HaagerupSet};
pub use jacobi::{closed_form_a2a, eig_real_symmetric, jacobi_eigen, SymmetricEigen};
pub use roots::{matching_distance, spectrum_numeric, Eigenvalue, Spectrum, CLUSTER_RADIUS, DEFAULT_SPECTRUM_TOL};

use num_complex::Complex64;

use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::exec::{map_reduce, Exec};
use crate::matrix::{lcm, ButsonMatrix};
use crate::perm;

/// `det(xI - H)` with exact coefficients, constant term first; monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    q: u32,
    coeffs: Vec<CycInt>,
}

impl ExactPoly {
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CycInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c.embed())
    }
}

/// Polynomial whose `x^k` coefficient is `e_k · n^{-(d-k)/2}` (`d` the
/// degree). For the characteristic polynomial of `H/√n`, `e_k` equals the
/// `x^k` coefficient of `det(xI - H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPoly {
    n: usize,
    e: Vec<CycInt>,
}

/// The numeric factors that occur in the reference spectral functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisplayCoef {
    Unit,
    Half,
    /// `1/√n`
    InvSqrt,
    /// `√(2/3)`, i.e. `2/√6`; only meaningful for `n = 6`.
    SqrtTwoThirds,
}

impl ScaledPoly {
    pub fn base(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.e.len() - 1
    }

    pub fn coeffs(&self) -> &[CycInt] {
        &self.e
    }

    pub fn order(&self) -> u32 {
        self.e[0].order()
    }

    /// Builds a monic polynomial of degree `degree` from terms
    /// `coef(kind) · value · x^k`. Fails unless every coefficient maps to an
    /// integral `e_k`.
    pub fn from_display(n: usize, degree: usize, terms: &[(usize, DisplayCoef, CycInt)]) -> Result<Self> {
        let q = terms.first().map_or(1, |t| t.2.order());
        let mut e = vec![CycInt::zero(q)?; degree + 1];
        e[degree] = CycInt::one(q)?;
        let n = n as i64;
        for (k, kind, value) in terms {
            let gap = degree
                .checked_sub(*k)
                .filter(|g| *g > 0)
                .ok_or(Error::DimensionMismatch {
                    left: *k,
                    right: degree,
                })? as u32;
            let not_integral = || Error::Parse {
                line: 0,
                msg: format!("display term x^{k} is not integral in the scaled basis"),
            };
            let factor = match (kind, gap % 2) {
                (DisplayCoef::Unit, 0) => n.pow(gap / 2),
                (DisplayCoef::Half, 0) if n.pow(gap / 2) % 2 == 0 => n.pow(gap / 2) / 2,
                (DisplayCoef::InvSqrt, 1) => n.pow(gap / 2),
                (DisplayCoef::SqrtTwoThirds, 1) if n == 6 => 2 * n.pow(gap / 2),
                _ => return Err(not_integral()),
            };
            e[*k] = e[*k].try_add(&value.try_scale(factor)?)?;
        }
        Ok(Self { n: n as usize, e })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let q = lcm(self.order(), other.order());
        let a = lift_all(&self.e, q)?;
        let b = lift_all(&other.e, q)?;
        let mut out = vec![CycInt::zero(q)?; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].try_add(&x.try_mul(y)?)?;
            }
        }
        Ok(Self { n: self.n, e: out })
    }

    /// Numeric coefficients of `x^k`, constant term first.
    pub fn numeric_coeffs(&self) -> Vec<Complex64> {
        let d = self.degree();
        let root_n = (self.n as f64).sqrt();
        self.e
            .iter()
            .enumerate()
            .map(|(k, c)| c.embed() / root_n.powi((d - k) as i32))
            .collect()
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.numeric_coeffs()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
    }
}

fn lift_all(v: &[CycInt], q: u32) -> Result<Vec<CycInt>> {
    v.iter().map(|c| c.lift(q)).collect()
}

/// Exact `det(xI - H)` via Leibniz expansion.
pub fn charpoly_exact(b: &ButsonMatrix) -> Result<ExactPoly> {
    charpoly_exact_with(b, Exec::default())
}

pub fn charpoly_exact_with(b: &ButsonMatrix, exec: Exec) -> Result<ExactPoly> {
    let n = b.dim();
    if n > crate::MAX_DIM {
        return Err(Error::TooLarge(n));
    }
    let q = b.order() as usize;
    let perms = perm::all(n);
    // table[k * q + e]: signed count of ζ^e in the coefficient of x^k
    let table = map_reduce(
        exec,
        perms.len(),
        || vec![0i64; (n + 1) * q],
        |acc, idx| {
            let p = &perms[idx];
            let mut sign = permutation_sign(p);
            let mut base = 0usize;
            let mut fixed = Vec::with_capacity(n);
            for (i, &j) in p.iter().enumerate() {
                if i == j {
                    fixed.push(b.get(i, i) as usize);
                } else {
                    sign = -sign;
                    base += b.get(i, j) as usize;
                }
            }
            // expand prod over fixed points of (x - ζ^{e_ii}) in the group ring
            let mut poly = vec![0i64; (fixed.len() + 1) * q];
            poly[base % q] = sign;
            for (deg, &e) in fixed.iter().enumerate() {
                let mut next = vec![0i64; poly.len()];
                for k in 0..=deg {
                    for r in 0..q {
                        let c = poly[k * q + r];
                        if c != 0 {
                            next[(k + 1) * q + r] += c;
                            next[k * q + (r + e) % q] -= c;
                        }
                    }
                }
                poly = next;
            }
            for (slot, v) in acc.iter_mut().zip(&poly) {
                *slot += v;
            }
        },
        |mut a, b| {
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            a
        },
    );
    let coeffs = table
        .chunks(q)
        .map(|counts| CycInt::from_exponent_counts(b.order(), counts))
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(coeffs[n] == CycInt::one(b.order())?);
    Ok(ExactPoly { q: b.order(), coeffs })
}

/// Leibniz expansion of `det(xI - M)` for an arbitrary matrix over
/// `Z[ζ_q]` (row-major `entries`).
pub fn charpoly_exact_dense(q: u32, n: usize, entries: &[CycInt]) -> Result<ExactPoly> {
    if n > crate::MAX_DIM {
        return Err(Error::TooLarge(n));
    }
    if entries.len() != n * n {
        return Err(Error::DimensionMismatch {
            left: n * n,
            right: entries.len(),
        });
    }
    if let Some(bad) = entries.iter().find(|c| c.order() != q) {
        return Err(Error::OrderMismatch {
            left: q,
            right: bad.order(),
        });
    }
    let zero = CycInt::zero(q)?;
    let one = CycInt::one(q)?;
    let mut total = vec![zero.clone(); n + 1];
    for p in perm::all(n) {
        // product of the linear polynomials (xI - M)_{i, p(i)}
        let mut prod = vec![zero.clone(); n + 1];
        prod[0] = CycInt::from_int(q, permutation_sign(&p))?;
        for (i, &j) in p.iter().enumerate() {
            let c = entries[i * n + j].try_neg()?;
            let lead = if i == j { &one } else { &zero };
            let mut next = vec![zero.clone(); n + 1];
            for k in 0..n {
                if prod[k].is_zero() {
                    continue;
                }
                next[k] = next[k].try_add(&prod[k].try_mul(&c)?)?;
                next[k + 1] = next[k + 1].try_add(&prod[k].try_mul(lead)?)?;
            }
            prod = next;
        }
        for (t, v) in total.iter_mut().zip(&prod) {
            *t = t.try_add(v)?;
        }
    }
    Ok(ExactPoly { q, coeffs: total })
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Reads `p` as the characteristic polynomial of `H/√n`.
pub fn scale(p: &ExactPoly, n: usize) -> Result<ScaledPoly> {
    if p.degree() != n {
        return Err(Error::DimensionMismatch {
            left: p.degree(),
            right: n,
        });
    }
    Ok(ScaledPoly { n, e: p.coeffs.clone() })
}

/// Scaled characteristic polynomial `det(xI - B/√n)`.
pub fn spectral_function(b: &ButsonMatrix) -> Result<ScaledPoly> {
    scale(&charpoly_exact(b)?, b.dim())
}

/// Exact coefficientwise equality after lifting both sides to a common
/// root order.
pub fn poly_eq(p1: &ScaledPoly, p2: &ScaledPoly) -> Result<bool> {
    if p1.n != p2.n || p1.degree() != p2.degree() {
        return Err(Error::DimensionMismatch {
            left: p1.n,
            right: p2.n,
        });
    }
    let q = lcm(p1.order(), p2.order());
    Ok(lift_all(&p1.e, q)? == lift_all(&p2.e, q)?)
}
