//! Exact arithmetic in the ring of cyclotomic integers `Z[ζ_q]`.
//!
//! An element is stored as its coefficient vector in the power basis
//! `1, ζ, …, ζ^(φ(q)-1)`, always reduced modulo the `q`-th cyclotomic
//! polynomial. Because the representation is canonical, `==` is ring
//! equality. For `q = 3` this is the Eisenstein integers (`ζ² = -1 - ζ`),
//! for `q = 4` the Gaussian integers (`ζ² = -1`).
//!
//! Coefficients are checked `i64`; every fallible operation reports
//! [`Error::Overflow`] instead of wrapping.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported root order.
pub const MAX_ORDER: u32 = 64;

struct RingData {
    /// Monic `Φ_q`, coefficients from degree 0 up.
    modulus: Vec<i64>,
    /// `ζ^k` reduced, for `k` in `0..q`.
    powers: Vec<Vec<i64>>,
    /// Numeric `ζ^k`.
    roots: Vec<Complex64>,
}

impl RingData {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// Exact division by a monic polynomial; the remainder must vanish.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn cyclotomic_polynomial(q: u32) -> Vec<i64> {
    // x^q - 1 = prod_{d | q} Φ_d(x)
    let mut p = vec![0i64; q as usize + 1];
    p[0] = -1;
    p[q as usize] = 1;
    for d in 1..q {
        if q.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Reduces `poly` modulo the monic `modulus` with checked arithmetic.
fn reduce(mut poly: Vec<i64>, modulus: &[i64]) -> Result<Vec<i64>> {
    let d = modulus.len() - 1;
    while poly.len() > d {
        let top = poly.pop().unwrap_or(0);
        if top != 0 {
            let base = poly.len() - d;
            for (j, &m) in modulus[..d].iter().enumerate() {
                let t = top.checked_mul(m).ok_or(Error::Overflow)?;
                poly[base + j] = poly[base + j].checked_sub(t).ok_or(Error::Overflow)?;
            }
        }
    }
    poly.resize(d, 0);
    Ok(poly)
}

fn ring(q: u32) -> Result<&'static RingData> {
    if q == 0 || q > MAX_ORDER {
        return Err(Error::UnsupportedOrder(q));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static RingData>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(r) = guard.get(&q) {
        return Ok(r);
    }
    let modulus = cyclotomic_polynomial(q);
    let d = modulus.len() - 1;
    let mut powers = Vec::with_capacity(q as usize);
    for k in 0..q as usize {
        let mut mono = vec![0; k.max(d) + 1];
        mono[k] = 1;
        powers.push(reduce(mono, &modulus)?);
    }
    let roots = (0..q)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / q as f64))
        .collect();
    let data: &'static RingData = Box::leak(Box::new(RingData { modulus, powers, roots }));
    guard.insert(q, data);
    Ok(data)
}

/// Euler's totient of `q`, i.e. the length of a coefficient vector.
pub fn totient(q: u32) -> Result<usize> {
    Ok(ring(q)?.degree())
}

/// An element of `Z[ζ_q]` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    q: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(q: u32) -> Result<Self> {
        Ok(Self {
            q,
            coeffs: vec![0; totient(q)?],
        })
    }

    pub fn from_int(q: u32, value: i64) -> Result<Self> {
        let mut z = Self::zero(q)?;
        z.coeffs[0] = value;
        Ok(z)
    }

    pub fn one(q: u32) -> Result<Self> {
        Self::from_int(q, 1)
    }

    /// `ζ_q^k` for any integer `k`.
    pub fn root(q: u32, k: i64) -> Result<Self> {
        let r = ring(q)?;
        let k = k.rem_euclid(q as i64) as usize;
        Ok(Self {
            q,
            coeffs: r.powers[k].clone(),
        })
    }

    /// Builds an element from power-basis coefficients of any length,
    /// reducing as needed.
    pub fn from_coeffs(q: u32, coeffs: &[i64]) -> Result<Self> {
        let r = ring(q)?;
        let mut v = coeffs.to_vec();
        if v.len() < r.degree() {
            v.resize(r.degree(), 0);
        }
        Ok(Self {
            q,
            coeffs: reduce(v, &r.modulus)?,
        })
    }

    /// `Σ_k counts[k] ζ^k` for a histogram of exponents mod `q`.
    pub fn from_exponent_counts(q: u32, counts: &[i64]) -> Result<Self> {
        if counts.len() != q as usize {
            return Err(Error::DimensionMismatch {
                left: counts.len(),
                right: q as usize,
            });
        }
        Self::from_coeffs(q, counts)
    }

    /// Eisenstein integer `a + b ω` (`q = 3`).
    pub fn eisenstein(a: i64, b: i64) -> Self {
        Self {
            q: 3,
            coeffs: vec![a, b],
        }
    }

    /// Gaussian integer `a + b i` (`q = 4`).
    pub fn gaussian(a: i64, b: i64) -> Self {
        Self {
            q: 4,
            coeffs: vec![a, b],
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.q != other.q {
            return Err(Error::OrderMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { q: self.q, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { q: self.q, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let r = ring(self.q)?;
        let mut prod = vec![0i64; 2 * r.degree() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                prod[i + j] = prod[i + j].checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self {
            q: self.q,
            coeffs: reduce(prod, &r.modulus)?,
        })
    }

    pub fn try_scale(&self, k: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { q: self.q, coeffs })
    }

    /// Complex conjugation, `ζ ↦ ζ^(q-1)`.
    pub fn conj(&self) -> Self {
        let r = ring(self.q).expect("order validated at construction");
        let q = self.q as usize;
        let mut out = vec![0i64; r.degree()];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let image = &r.powers[(q - k) % q];
            for (o, &p) in out.iter_mut().zip(image) {
                *o += c * p;
            }
        }
        Self { q: self.q, coeffs: out }
    }

    /// Re-expresses `self` in `Z[ζ_target]`; `target` must be a multiple of
    /// the current order.
    pub fn lift(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.q) {
            return Err(Error::OrderMismatch {
                left: self.q,
                right: target,
            });
        }
        let step = (target / self.q) as usize;
        let mut v = vec![0i64; (self.coeffs.len() - 1) * step + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            v[k * step] = c;
        }
        Self::from_coeffs(target, &v)
    }

    /// Numeric value under `ζ_q ↦ exp(2πi/q)`.
    pub fn embed(&self) -> Complex64 {
        let r = ring(self.q).expect("order validated at construction");
        self.coeffs.iter().zip(&r.roots).map(|(&c, z)| z * c as f64).sum()
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[q={}]{:?}", self.q, self.coeffs)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            write!(f, "{sign}")?;
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "z")?,
                (1, m) => write!(f, "{m}z")?,
                (k, 1) => write!(f, "z^{k}")?,
                (k, m) => write!(f, "{m}z^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator forms panic on order mismatch or overflow; use the `try_*`
// methods where those can occur.
macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $m(self, rhs: &CycInt) -> CycInt {
                self.$try(rhs).expect(concat!("CycInt::", stringify!($m)))
            }
        }
        impl $tr for CycInt {
            type Output = CycInt;
            fn $m(self, rhs: CycInt) -> CycInt {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.try_neg().expect("CycInt::neg")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.try_neg().expect("CycInt::neg")
    }
}
