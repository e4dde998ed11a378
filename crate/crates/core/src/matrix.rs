//! Exponent-encoded Butson matrices, their complex images, exact and numeric
//! Hadamard checks, dephasing, and the plain-text matrix format.
//!
//! Text format:
//!
//! ```text
//! BH <q> <n>
//! <n lines of n exponents>
//! ```
//!
//! or, for arbitrary complex matrices,
//!
//! ```text
//! C <n>
//! <n lines of n tokens `re,im`>
//! ```

use std::fmt::{self, Write as _};

use num_complex::Complex64;

use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::perm;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// An `n × n` matrix whose entries are `ζ_q^e`, stored as exponents `e`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ButsonMatrix {
    q: u32,
    n: usize,
    exps: Vec<u32>,
}

/// Diagonal phase matrix `diag(ζ_q^e_0, …)`, stored as exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhaseVector {
    pub q: u32,
    pub exps: Vec<u32>,
}

impl PhaseVector {
    pub fn identity(q: u32, n: usize) -> Self {
        Self { q, exps: vec![0; n] }
    }
}

impl ButsonMatrix {
    /// Builds a matrix from a square grid of integer exponents, reducing
    /// each mod `q`.
    pub fn from_exponents<R: AsRef<[i64]>>(q: u32, grid: &[R]) -> Result<Self> {
        crate::cyclo::totient(q)?;
        let n = grid.len();
        if n == 0 {
            return Err(Error::NonSquare {
                row: 0,
                len: 0,
                expected: 1,
            });
        }
        let mut exps = Vec::with_capacity(n * n);
        for (row, r) in grid.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::NonSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            exps.extend(r.iter().map(|&e| e.rem_euclid(q as i64) as u32));
        }
        Ok(Self { q, n, exps })
    }

    pub(crate) fn from_raw(q: u32, n: usize, exps: Vec<u32>) -> Self {
        debug_assert_eq!(exps.len(), n * n);
        debug_assert!(exps.iter().all(|&e| e < q));
        Self { q, n, exps }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.exps[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.exps[i * self.n..(i + 1) * self.n]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn to_grid(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&e| e as i64).collect())
            .collect()
    }

    pub fn entry(&self, i: usize, j: usize) -> CycInt {
        CycInt::root(self.q, self.get(i, j) as i64).expect("order validated at construction")
    }

    /// Re-expresses the matrix over `ζ_target`; `target` must be a multiple
    /// of the current order.
    pub fn lift(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.q) {
            return Err(Error::OrderMismatch {
                left: self.q,
                right: target,
            });
        }
        crate::cyclo::totient(target)?;
        let k = target / self.q;
        Ok(Self::from_raw(
            target,
            self.n,
            self.exps.iter().map(|&e| e * k).collect(),
        ))
    }

    /// Entrywise complex conjugate (`ζ ↦ ζ^(q-1)`).
    pub fn conjugate(&self) -> Self {
        let q = self.q;
        Self::from_raw(q, self.n, self.exps.iter().map(|&e| (q - e) % q).collect())
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let exps = (0..n * n).map(|k| self.get(k % n, k / n)).collect();
        Self::from_raw(self.q, n, exps)
    }

    /// `result[i][j] = self[rows[i]][cols[j]]`.
    pub fn permute(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if !perm::is_permutation(rows, self.n) || !perm::is_permutation(cols, self.n) {
            return Err(Error::InvalidPermutation);
        }
        let mut exps = Vec::with_capacity(self.n * self.n);
        for &r in rows {
            exps.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Ok(Self::from_raw(self.q, self.n, exps))
    }

    /// `D_left · self · D_right` in exponent arithmetic.
    pub fn scale(&self, left: &PhaseVector, right: &PhaseVector) -> Result<Self> {
        for p in [left, right] {
            if p.q != self.q {
                return Err(Error::OrderMismatch {
                    left: self.q,
                    right: p.q,
                });
            }
            if p.exps.len() != self.n {
                return Err(Error::DimensionMismatch {
                    left: self.n,
                    right: p.exps.len(),
                });
            }
        }
        let q = self.q;
        let n = self.n;
        let exps = (0..n * n)
            .map(|k| (left.exps[k / n] + self.exps[k] + right.exps[k % n]) % q)
            .collect();
        Ok(Self::from_raw(q, n, exps))
    }

    /// Exact test of `H H* = n I`: every pair of distinct rows has inner
    /// product zero in `Z[ζ_q]`.
    pub fn is_hadamard_exact(&self) -> bool {
        let q = self.q as usize;
        let mut counts = vec![0i64; q];
        for i in 0..self.n {
            for j in i + 1..self.n {
                counts.iter_mut().for_each(|c| *c = 0);
                for (a, b) in self.row(i).iter().zip(self.row(j)) {
                    counts[(*a as usize + q - *b as usize) % q] += 1;
                }
                let ip = CycInt::from_exponent_counts(self.q, &counts).expect("order validated at construction");
                if !ip.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Brings the matrix to standard form (first row and column all ones).
    ///
    /// Returns `(dephased, left, right)` with `self = D_left · dephased ·
    /// D_right`. The first column is cleared first, then the first row of the
    /// result.
    pub fn dephase(&self) -> (Self, PhaseVector, PhaseVector) {
        let q = self.q;
        let n = self.n;
        let left: Vec<u32> = (0..n).map(|i| self.get(i, 0)).collect();
        let right: Vec<u32> = (0..n).map(|j| (self.get(0, j) + q - left[0]) % q).collect();
        let exps = (0..n * n)
            .map(|k| (self.exps[k] + 2 * q - left[k / n] - right[k % n]) % q)
            .collect();
        (
            Self::from_raw(q, n, exps),
            PhaseVector { q, exps: left },
            PhaseVector { q, exps: right },
        )
    }

    pub fn is_dephased(&self) -> bool {
        (0..self.n).all(|k| self.get(0, k) == 0 && self.get(k, 0) == 0)
    }

    pub fn embed(&self) -> ComplexMatrix {
        let roots: Vec<Complex64> = (0..self.q)
            .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / self.q as f64))
            .collect();
        ComplexMatrix {
            n: self.n,
            entries: self.exps.iter().map(|&e| roots[e as usize]).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("BH {} {}\n", self.q, self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }
}

impl fmt::Debug for ButsonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ButsonMatrix(q={}, n={}) {:?}", self.q, self.n, self.to_grid())
    }
}

/// Dense `n × n` complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    pub fn from_real(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_hadamard_numeric(&self, tol: f64) -> bool {
        let n = self.n;
        if self.entries.iter().any(|z| (z.norm() - 1.0).abs() > tol) {
            return false;
        }
        for i in 0..n {
            for j in i..n {
                let ip: Complex64 = (0..n).map(|k| self.get(i, k) * self.get(j, k).conj()).sum();
                let target = if i == j { n as f64 } else { 0.0 };
                if (ip - target).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("C {}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{},{}", crate::fmt_f64(z.re), crate::fmt_f64(z.im))
                })
                .collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }
}

/// A parsed text matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum TextMatrix {
    Butson(ButsonMatrix),
    Complex(ComplexMatrix),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses the `BH` / `C` text format. Blank lines and lines starting with
/// `#` are ignored.
pub fn parse_text(src: &str) -> Result<TextMatrix> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let parse_usize = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_err(hline, format!("invalid {what} `{s}`")))
    };
    match head.as_slice() {
        ["BH", q, n] => {
            let q = parse_usize(q, "order")? as u32;
            let n = parse_usize(n, "dimension")?;
            if n == 0 {
                return Err(parse_err(hline, "dimension must be positive"));
            }
            let mut grid = Vec::with_capacity(n);
            for _ in 0..n {
                let (ln, l) = lines
                    .next()
                    .ok_or_else(|| parse_err(hline, format!("expected {n} rows")))?;
                let row = l
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|_| parse_err(ln, format!("bad exponent `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if row.len() != n {
                    return Err(parse_err(ln, format!("expected {n} entries, found {}", row.len())));
                }
                grid.push(row);
            }
            if let Some((ln, _)) = lines.next() {
                return Err(parse_err(ln, "trailing data"));
            }
            if q == 0 {
                return Err(parse_err(hline, "order must be positive"));
            }
            Ok(TextMatrix::Butson(ButsonMatrix::from_exponents(q, &grid)?))
        }
        ["C", n] => {
            let n = parse_usize(n, "dimension")?;
            if n == 0 {
                return Err(parse_err(hline, "dimension must be positive"));
            }
            let mut entries = Vec::with_capacity(n * n);
            for _ in 0..n {
                let (ln, l) = lines
                    .next()
                    .ok_or_else(|| parse_err(hline, format!("expected {n} rows")))?;
                let toks: Vec<&str> = l.split_whitespace().collect();
                if toks.len() != n {
                    return Err(parse_err(ln, format!("expected {n} entries, found {}", toks.len())));
                }
                for t in toks {
                    let (re, im) = t
                        .split_once(',')
                        .ok_or_else(|| parse_err(ln, format!("expected `re,im`, found `{t}`")))?;
                    let re: f64 = re.parse().map_err(|_| parse_err(ln, format!("bad number `{re}`")))?;
                    let im: f64 = im.parse().map_err(|_| parse_err(ln, format!("bad number `{im}`")))?;
                    if !re.is_finite() || !im.is_finite() {
                        return Err(parse_err(ln, "non-finite entry"));
                    }
                    entries.push(Complex64::new(re, im));
                }
            }
            if let Some((ln, _)) = lines.next() {
                return Err(parse_err(ln, "trailing data"));
            }
            Ok(TextMatrix::Complex(ComplexMatrix::new(n, entries)?))
        }
        _ => Err(parse_err(hline, "expected header `BH <q> <n>` or `C <n>`")),
    }
}
