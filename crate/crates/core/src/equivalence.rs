//! Standard equivalence `H1 = D1 P1 H2 P2 D2` (exhaustive, with witnesses)
//! and unitary equivalence (equal scaled characteristic polynomials).
//!
//! The standard-equivalence search walks row permutations of `H2` in
//! lexicographic order. For each one and each choice `c` of the column that
//! becomes the first column, dephasing is fully determined, so the remaining
//! column permutation must send the dephased columns onto the columns of
//! `dephase(H1)`. The lexicographically smallest such permutation is built
//! greedily. This covers every `(P1, P2)` pair exactly once.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{find_map_first, Exec};
use crate::invariants::{haagerup_set, poly_eq, spectral_function};
use crate::matrix::{lcm, ButsonMatrix, PhaseVector};
use crate::perm;

/// `apply(W, B)[i][j] = left[i] + B[row_perm[i]][col_perm[j]] + right[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub q: u32,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

impl Witness {
    pub fn identity(q: u32, n: usize) -> Self {
        Self {
            q,
            row_perm: perm::identity(n),
            col_perm: perm::identity(n),
            left: vec![0; n],
            right: vec![0; n],
        }
    }

    /// The witness `W'` with `apply(W', apply(W, B)) = B`.
    pub fn inverse(&self) -> Self {
        let q = self.q;
        let ri = perm::inverse(&self.row_perm);
        let ci = perm::inverse(&self.col_perm);
        Self {
            q,
            left: ri.iter().map(|&i| (q - self.left[i]) % q).collect(),
            right: ci.iter().map(|&j| (q - self.right[j]) % q).collect(),
            row_perm: ri,
            col_perm: ci,
        }
    }

    /// `apply(self.then(other), B) = apply(other, apply(self, B))`.
    pub fn then(&self, other: &Self) -> Self {
        let q = self.q;
        let n = self.row_perm.len();
        Self {
            q,
            row_perm: (0..n).map(|i| self.row_perm[other.row_perm[i]]).collect(),
            col_perm: (0..n).map(|j| self.col_perm[other.col_perm[j]]).collect(),
            left: (0..n)
                .map(|i| (other.left[i] + self.left[other.row_perm[i]]) % q)
                .collect(),
            right: (0..n)
                .map(|j| (other.right[j] + self.right[other.col_perm[j]]) % q)
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Row permutations examined (in lexicographic order).
    pub row_perms: usize,
    /// `(row permutation, first column)` candidates examined.
    pub candidates: usize,
    /// The search was skipped because the Haagerup sets differ.
    pub haagerup_refuted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivVerdict {
    pub equivalent: bool,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Refute immediately when the Haagerup multisets differ.
    pub haagerup_filter: bool,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            haagerup_filter: true,
            exec: Exec::default(),
        }
    }
}

pub fn apply_witness(w: &Witness, b: &ButsonMatrix) -> Result<ButsonMatrix> {
    if w.q != b.order() {
        return Err(Error::OrderMismatch {
            left: w.q,
            right: b.order(),
        });
    }
    let n = b.dim();
    if w.left.len() != n || w.right.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: w.left.len().min(w.right.len()),
        });
    }
    b.permute(&w.row_perm, &w.col_perm)?.scale(
        &PhaseVector {
            q: w.q,
            exps: w.left.clone(),
        },
        &PhaseVector {
            q: w.q,
            exps: w.right.clone(),
        },
    )
}

fn common_order(b1: &ButsonMatrix, b2: &ButsonMatrix) -> Result<(ButsonMatrix, ButsonMatrix)> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch {
            left: b1.dim(),
            right: b2.dim(),
        });
    }
    let q = lcm(b1.order(), b2.order());
    Ok((b1.lift(q)?, b2.lift(q)?))
}

pub fn unitary_equivalent(b1: &ButsonMatrix, b2: &ButsonMatrix) -> Result<bool> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch {
            left: b1.dim(),
            right: b2.dim(),
        });
    }
    poly_eq(&spectral_function(b1)?, &spectral_function(b2)?)
}

pub fn standard_equivalent(b1: &ButsonMatrix, b2: &ButsonMatrix) -> Result<EquivVerdict> {
    standard_equivalent_with(b1, b2, SearchOptions::default())
}

/// Decides whether `b1 = D1 P1 b2 P2 D2` with `q`-th root phases, `q` the
/// least common order of the inputs. Returns the lexicographically smallest
/// `(row_perm, col_perm)` witness.
pub fn standard_equivalent_with(b1: &ButsonMatrix, b2: &ButsonMatrix, opts: SearchOptions) -> Result<EquivVerdict> {
    let (b1, b2) = common_order(b1, b2)?;
    let n = b1.dim();
    if n > crate::MAX_DIM {
        return Err(Error::TooLarge(n));
    }
    let q = b1.order();
    if opts.haagerup_filter && haagerup_set(&b1) != haagerup_set(&b2) {
        return Ok(EquivVerdict {
            equivalent: false,
            witness: None,
            stats: SearchStats {
                row_perms: 0,
                candidates: 0,
                haagerup_refuted: true,
            },
        });
    }

    let (target, l1, r1) = b1.dephase();
    let target_cols: Vec<Vec<u32>> = (0..n).map(|j| (0..n).map(|i| target.get(i, j)).collect()).collect();
    let mut sorted_target = target_cols.clone();
    sorted_target.sort_unstable();

    let perms = perm::all(n);
    let found = find_map_first(opts.exec, perms.len(), |pi| {
        let rows = &perms[pi];
        (0..n).find_map(|c| {
            // dephase b2[rows[i]][·] using column c and (permuted) row 0
            let col = |k: usize| -> Vec<u32> {
                (0..n)
                    .map(|i| {
                        let r = rows[i];
                        (b2.get(r, k) + 2 * q - b2.get(r, c) - b2.get(rows[0], k) + b2.get(rows[0], c)) % q
                    })
                    .collect()
            };
            let cols: Vec<Vec<u32>> = (0..n).map(col).collect();
            let mut sorted = cols.clone();
            sorted.sort_unstable();
            if sorted != sorted_target {
                return None;
            }
            let mut used = vec![false; n];
            used[c] = true;
            let mut sigma = vec![c; n];
            for j in 1..n {
                let k = (0..n).find(|&k| !used[k] && cols[k] == target_cols[j])?;
                used[k] = true;
                sigma[j] = k;
            }
            if target_cols[0] != cols[c] {
                return None;
            }
            Some((rows.clone(), sigma))
        })
    });

    let n_fact = perms.len();
    let Some((idx, (row_perm, col_perm))) = found else {
        return Ok(EquivVerdict {
            equivalent: false,
            witness: None,
            stats: SearchStats {
                row_perms: n_fact,
                candidates: n_fact * n,
                haagerup_refuted: false,
            },
        });
    };

    // phases: b1 = D(l1) T D(r1) and P b2 Q = D(l2) T D(r2)
    let permuted = b2.permute(&row_perm, &col_perm)?;
    let (t2, l2, r2) = permuted.dephase();
    debug_assert_eq!(t2, target);
    let witness = Witness {
        q,
        left: (0..n).map(|i| (l1.exps[i] + q - l2.exps[i]) % q).collect(),
        right: (0..n).map(|j| (r1.exps[j] + q - r2.exps[j]) % q).collect(),
        row_perm,
        col_perm,
    };
    assert_eq!(
        apply_witness(&witness, &b2)?,
        b1,
        "standard-equivalence witness failed verification"
    );
    Ok(EquivVerdict {
        equivalent: true,
        witness: Some(witness),
        stats: SearchStats {
            row_perms: idx + 1,
            candidates: (idx + 1) * n,
            haagerup_refuted: false,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Standard,
    Unitary,
}

impl Relation {
    pub fn decide(self, b1: &ButsonMatrix, b2: &ButsonMatrix) -> Result<bool> {
        match self {
            Relation::Standard => Ok(standard_equivalent(b1, b2)?.equivalent),
            Relation::Unitary => unitary_equivalent(b1, b2),
        }
    }
}

/// Partitions `items` into classes (as index lists). Each item joins the
/// first class whose first member it is equivalent to; classes are ordered by
/// their first member.
pub fn classify(items: &[ButsonMatrix], relation: Relation) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, b) in items.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            if relation.decide(&items[class[0]], b)? {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    Ok(classes)
}
