//! The order-6 matrices studied here, stored as exponent grids.
//!
//! `q = 3` entries are powers of `ω = e^{2πi/3}`; `M6` and `M61` use
//! `q = 4` (powers of `i`); `F6` is the Fourier matrix over `q = 6`.
//!
//! Two reference grids contain transcription errors and are kept under
//! separate names: `A40_raw` differs from the `H(3,6)` template in
//! entry (6,4), and `A2_raw` has rows 5 and 6 that are not orthogonal
//! to the others. The canonical `A40` is the template substitution and the
//! canonical `A2` keeps rows 1–4 and completes rows 5–6 symmetrically (the
//! unique symmetric Hadamard completion).

use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::invariants::{DisplayCoef, ScaledPoly};
use crate::matrix::{ButsonMatrix, ComplexMatrix};

pub struct CatalogEntry {
    pub name: &'static str,
    pub q: u32,
    pub grid: [[u8; 6]; 6],
    pub description: &'static str,
}

impl CatalogEntry {
    pub fn matrix(&self) -> ButsonMatrix {
        let grid: Vec<Vec<i64>> = self
            .grid
            .iter()
            .map(|r| r.iter().map(|&e| e as i64).collect())
            .collect();
        ButsonMatrix::from_exponents(self.q, &grid).expect("catalog grids are valid")
    }
}

/// `H(3,6)` written in the letters `x, y, z` (0, 1, 2).
const TEMPLATE: [[u8; 6]; 6] = [
    [2, 0, 1, 1, 0, 2],
    [0, 2, 1, 0, 1, 2],
    [0, 0, 0, 0, 0, 0],
    [2, 0, 2, 0, 1, 1],
    [0, 2, 2, 1, 0, 1],
    [2, 2, 0, 1, 1, 0],
];

const A2_CORRECTED: [[u8; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [0, 0, 2, 1, 2, 1],
    [0, 2, 0, 1, 1, 2],
    [0, 1, 1, 0, 2, 2],
    [0, 2, 1, 2, 0, 1],
    [0, 1, 2, 2, 1, 0],
];

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "A1",
        q: 3,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 0, 1, 2, 2, 1],
            [0, 1, 0, 1, 2, 2],
            [0, 2, 1, 0, 1, 2],
            [0, 2, 2, 1, 0, 1],
            [0, 1, 2, 2, 1, 0],
        ],
        description: "Agaian matrix, symmetric standard form with unit diagonal",
    },
    CatalogEntry {
        name: "A2",
        q: 3,
        grid: A2_CORRECTED,
        description: "second symmetric form (reference rows 1-4, rows 5-6 completed symmetrically)",
    },
    CatalogEntry {
        name: "A3",
        q: 3,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 0, 1, 2, 1, 2],
            [0, 1, 0, 2, 2, 1],
            [0, 2, 2, 0, 1, 1],
            [0, 1, 2, 1, 0, 2],
            [0, 2, 1, 1, 2, 0],
        ],
        description: "third symmetric form",
    },
    CatalogEntry {
        name: "A10",
        q: 3,
        grid: [
            [2, 0, 1, 1, 0, 2],
            [0, 2, 1, 0, 1, 2],
            [0, 0, 0, 0, 0, 0],
            [2, 0, 2, 0, 1, 1],
            [0, 2, 2, 1, 0, 1],
            [2, 2, 0, 1, 1, 0],
        ],
        description: "H(3,6) with (x,y,z) = (1,w,w^2)",
    },
    CatalogEntry {
        name: "A20",
        q: 3,
        grid: [
            [2, 1, 0, 0, 1, 2],
            [1, 2, 0, 1, 0, 2],
            [1, 1, 1, 1, 1, 1],
            [2, 1, 2, 1, 0, 0],
            [1, 2, 2, 0, 1, 0],
            [2, 2, 1, 0, 0, 1],
        ],
        description: "H(3,6) with (x,y,z) = (w,1,w^2)",
    },
    CatalogEntry {
        name: "A30",
        q: 3,
        grid: [
            [0, 1, 2, 2, 1, 0],
            [1, 0, 2, 1, 2, 0],
            [1, 1, 1, 1, 1, 1],
            [0, 1, 0, 1, 2, 2],
            [1, 0, 0, 2, 1, 2],
            [0, 0, 1, 2, 2, 1],
        ],
        description: "H(3,6) with (x,y,z) = (w,w^2,1)",
    },
    CatalogEntry {
        name: "A40",
        q: 3,
        grid: [
            [0, 2, 1, 1, 2, 0],
            [2, 0, 1, 2, 1, 0],
            [2, 2, 2, 2, 2, 2],
            [0, 2, 0, 2, 1, 1],
            [2, 0, 0, 1, 2, 1],
            [0, 0, 2, 1, 1, 2],
        ],
        description: "H(3,6) with (x,y,z) = (w^2,w,1)",
    },
    CatalogEntry {
        name: "A50",
        q: 3,
        grid: [
            [1, 2, 0, 0, 2, 1],
            [2, 1, 0, 2, 0, 1],
            [2, 2, 2, 2, 2, 2],
            [1, 2, 1, 2, 0, 0],
            [2, 1, 1, 0, 2, 0],
            [1, 1, 2, 0, 0, 2],
        ],
        description: "H(3,6) with (x,y,z) = (w^2,1,w)",
    },
    CatalogEntry {
        name: "A60",
        q: 3,
        grid: [
            [1, 0, 2, 2, 0, 1],
            [0, 1, 2, 0, 2, 1],
            [0, 0, 0, 0, 0, 0],
            [1, 0, 1, 0, 2, 2],
            [0, 1, 1, 2, 0, 2],
            [1, 1, 0, 2, 2, 0],
        ],
        description: "H(3,6) with (x,y,z) = (1,w^2,w)",
    },
    CatalogEntry {
        name: "A01",
        q: 3,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 1, 2, 1, 0, 2],
            [0, 2, 1, 1, 2, 0],
            [0, 0, 1, 2, 1, 2],
            [0, 1, 0, 2, 2, 1],
            [0, 2, 2, 0, 1, 1],
        ],
        description: "standard form of A10",
    },
    CatalogEntry {
        name: "A02",
        q: 3,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 2, 1, 2, 0, 1],
            [0, 1, 2, 2, 1, 0],
            [0, 0, 2, 1, 2, 1],
            [0, 2, 0, 1, 1, 2],
            [0, 1, 1, 0, 2, 2],
        ],
        description: "standard form of A20",
    },
    CatalogEntry {
        name: "A03",
        q: 3,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 1, 2, 1, 0, 2],
            [0, 2, 1, 1, 2, 0],
            [0, 0, 1, 2, 1, 2],
            [0, 1, 0, 2, 2, 1],
            [0, 2, 2, 0, 1, 1],
        ],
        description: "standard form of A30",
    },
    CatalogEntry {
        name: "M6",
        q: 4,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 2, 1, 1, 3, 3],
            [0, 3, 2, 0, 2, 1],
            [0, 3, 0, 2, 1, 2],
            [0, 1, 2, 3, 0, 2],
            [0, 1, 3, 2, 2, 0],
        ],
        description: "self-adjoint complex Hadamard matrix, spectrum {-1^3, 1^3}",
    },
    CatalogEntry {
        name: "M61",
        q: 4,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 2, 0, 2, 1, 3],
            [0, 0, 2, 1, 2, 3],
            [0, 3, 2, 2, 0, 1],
            [0, 2, 3, 0, 2, 1],
            [0, 1, 1, 3, 3, 2],
        ],
        description: "standard-equivalent to M6 with a non-real spectrum",
    },
    CatalogEntry {
        name: "F6",
        q: 6,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 1, 2, 3, 4, 5],
            [0, 2, 4, 0, 2, 4],
            [0, 3, 0, 3, 0, 3],
            [0, 4, 2, 0, 4, 2],
            [0, 5, 4, 3, 2, 1],
        ],
        description: "Fourier matrix, e_ij = i*j mod 6 (negative control)",
    },
];

static TRANSCRIPTIONS: &[CatalogEntry] = &[
    CatalogEntry {
        name: "A2_raw",
        q: 3,
        grid: [
            [0, 0, 0, 0, 0, 0],
            [0, 0, 2, 1, 2, 1],
            [0, 2, 0, 1, 1, 2],
            [0, 1, 1, 0, 2, 2],
            [0, 2, 1, 1, 0, 2],
            [0, 2, 1, 2, 1, 0],
        ],
        description: "A2 as recorded in the reference (rows 5-6 not orthogonal to rows 3-4)",
    },
    CatalogEntry {
        name: "A40_raw",
        q: 3,
        grid: [
            [0, 2, 1, 1, 2, 0],
            [2, 0, 1, 2, 1, 0],
            [2, 2, 2, 2, 2, 2],
            [0, 2, 0, 2, 1, 1],
            [2, 0, 0, 1, 2, 1],
            [0, 0, 2, 2, 1, 2],
        ],
        description: "A40 as recorded in the reference (entry (6,4) is w^2 instead of w)",
    },
];

/// Canonical catalog names, in display order.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Verbatim reference grids that differ from their canonical entries.
pub fn transcription_names() -> Vec<&'static str> {
    TRANSCRIPTIONS.iter().map(|e| e.name).collect()
}

pub fn entries() -> impl Iterator<Item = &'static CatalogEntry> {
    ENTRIES.iter().chain(TRANSCRIPTIONS)
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    entries()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownMatrix(name.to_string()))
}

pub fn get(name: &str) -> Result<ButsonMatrix> {
    Ok(entry(name)?.matrix())
}

/// A substitution of `{1, ω, ω²}` for the letters `x, y, z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyzAssignment {
    pub x: CycInt,
    pub y: CycInt,
    pub z: CycInt,
}

impl XyzAssignment {
    pub fn new(x: CycInt, y: CycInt, z: CycInt) -> Result<Self> {
        let a = Self { x, y, z };
        a.exponents()?;
        Ok(a)
    }

    /// `(x, y, z) = (ω^ex, ω^ey, ω^ez)`.
    pub fn from_exponents(ex: u32, ey: u32, ez: u32) -> Result<Self> {
        let w = |e: u32| CycInt::root(3, e as i64);
        Self::new(w(ex)?, w(ey)?, w(ez)?)
    }

    fn exponents(&self) -> Result<[u8; 3]> {
        let mut out = [0u8; 3];
        for (slot, v) in out.iter_mut().zip([&self.x, &self.y, &self.z]) {
            *slot = (0..3u8)
                .find(|&k| CycInt::root(3, k as i64).as_ref() == Ok(v))
                .ok_or(Error::InvalidAssignment)?;
        }
        if out[0] == out[1] || out[1] == out[2] || out[0] == out[2] {
            return Err(Error::InvalidAssignment);
        }
        Ok(out)
    }
}

/// The six substitutions with their catalog names.
pub fn variant_assignments() -> [(&'static str, [u32; 3]); 6] {
    [
        ("A10", [0, 1, 2]),
        ("A20", [1, 0, 2]),
        ("A30", [1, 2, 0]),
        ("A40", [2, 1, 0]),
        ("A50", [2, 0, 1]),
        ("A60", [0, 2, 1]),
    ]
}

/// Substitutes `(x, y, z)` into the `H(3,6)` template.
pub fn agaian_variant(sigma: &XyzAssignment) -> Result<ButsonMatrix> {
    let e = sigma.exponents()?;
    let grid: Vec<Vec<i64>> = TEMPLATE
        .iter()
        .map(|r| r.iter().map(|&letter| e[letter as usize] as i64).collect())
        .collect();
    ButsonMatrix::from_exponents(3, &grid)
}

/// The real symmetric family obtained from the `A2` pattern by replacing `ω`
/// with a real number `a`.
pub fn agaian_symmetric(a: f64) -> ComplexMatrix {
    let powers = [1.0, a, a * a];
    let entries: Vec<f64> = A2_CORRECTED
        .iter()
        .flat_map(|r| r.iter().map(|&e| powers[e as usize]))
        .collect();
    ComplexMatrix::from_real(6, &entries).expect("6x6")
}

/// Eisenstein integer `a + bω`.
fn ei(a: i64, b: i64) -> CycInt {
    CycInt::eisenstein(a, b)
}

/// The reference spectral functions `det(x I - H/√6)`, transcribed term by
/// term. Returns `None` for matrices without a reference display.
pub fn spectral_function_display(name: &str) -> Option<ScaledPoly> {
    use DisplayCoef::{Half, InvSqrt, SqrtTwoThirds, Unit};
    let sextic = |terms: &[(usize, DisplayCoef, CycInt)]| {
        ScaledPoly::from_display(6, 6, terms).expect("reference displays are integral")
    };
    // (x^2 - 1)(x^4 + c3 x^3 + x^2 + c1 x + 1)
    let factored = |c3: CycInt, c1: CycInt| {
        let quad = ScaledPoly::from_display(6, 2, &[(0, Unit, ei(-1, 0))]).expect("integral");
        let quartic = ScaledPoly::from_display(
            6,
            4,
            &[
                (3, InvSqrt, c3),
                (2, Unit, ei(1, 0)),
                (1, InvSqrt, c1),
                (0, Unit, ei(1, 0)),
            ],
        )
        .expect("integral");
        quad.mul(&quartic).expect("same base")
    };
    Some(match name {
        "A10" => sextic(&[
            (5, SqrtTwoThirds, ei(-1, 1)),
            (4, Half, ei(-1, -2)),
            (3, InvSqrt, ei(1, 2)),
            (2, Half, ei(-1, -2)),
            (1, SqrtTwoThirds, ei(2, 1)),
            (0, Unit, ei(-1, 0)),
        ]),
        "A20" => sextic(&[
            (5, SqrtTwoThirds, ei(1, -1)),
            (4, Half, ei(1, -1)),
            (3, InvSqrt, ei(-1, -2)),
            (2, Half, ei(-2, -1)),
            (1, SqrtTwoThirds, ei(-2, -1)),
            (0, Unit, ei(-1, 0)),
        ]),
        "A30" => sextic(&[
            (5, SqrtTwoThirds, ei(-1, -2)),
            (4, Half, ei(-1, 1)),
            (3, InvSqrt, ei(1, 2)),
            (2, Half, ei(2, 1)),
            (1, SqrtTwoThirds, ei(-1, -2)),
            (0, Unit, ei(-1, 0)),
        ]),
        "A40" => sextic(&[
            (5, SqrtTwoThirds, ei(1, 2)),
            (4, Half, ei(-2, -1)),
            (3, InvSqrt, ei(-1, -2)),
            (2, Half, ei(1, -1)),
            (1, SqrtTwoThirds, ei(1, 2)),
            (0, Unit, ei(-1, 0)),
        ]),
        "A50" => sextic(&[
            (5, SqrtTwoThirds, ei(2, 1)),
            (4, Half, ei(2, 1)),
            (3, InvSqrt, ei(1, 2)),
            (2, Half, ei(-1, 1)),
            (1, SqrtTwoThirds, ei(-1, 1)),
            (0, Unit, ei(-1, 0)),
        ]),
        "A60" => sextic(&[
            (5, SqrtTwoThirds, ei(-2, -1)),
            (4, Half, ei(1, 2)),
            (3, InvSqrt, ei(-1, -2)),
            (2, Half, ei(1, 2)),
            (1, SqrtTwoThirds, ei(1, -1)),
            (0, Unit, ei(-1, 0)),
        ]),
        "A01" | "A03" => factored(ei(1, -1), ei(2, 1)),
        "A02" => factored(ei(2, 1), ei(1, -1)),
        _ => return None,
    })
}
