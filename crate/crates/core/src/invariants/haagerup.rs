use crate::error::Result;
use crate::exec::{map_reduce, Exec};
use crate::matrix::{lcm, ButsonMatrix};

/// Histogram of `e_ij + e_kl - e_il - e_kj (mod q)` over all `n⁴` index
/// quadruples, i.e. the multiset `{h_ij h_kl conj(h_il) conj(h_kj)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaagerupSet {
    pub q: u32,
    pub counts: Vec<u64>,
}

impl HaagerupSet {
    pub fn lift(&self, target: u32) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.q) {
            return Err(crate::Error::OrderMismatch {
                left: self.q,
                right: target,
            });
        }
        let step = (target / self.q) as usize;
        let mut counts = vec![0u64; target as usize];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[e * step] = c;
        }
        Ok(Self { q: target, counts })
    }

    /// Multiset equality after lifting to a common root order.
    pub fn same_as(&self, other: &Self) -> bool {
        let q = lcm(self.q, other.q);
        match (self.lift(q), other.lift(q)) {
            (Ok(a), Ok(b)) => a.counts == b.counts,
            _ => false,
        }
    }
}

pub fn haagerup_set(b: &ButsonMatrix) -> HaagerupSet {
    haagerup_set_with(b, Exec::default())
}

pub fn haagerup_set_with(b: &ButsonMatrix, exec: Exec) -> HaagerupSet {
    let n = b.dim();
    let q = b.order() as usize;
    let counts = map_reduce(
        exec,
        n,
        || vec![0u64; q],
        |acc, i| {
            for j in 0..n {
                let eij = b.get(i, j) as usize;
                for k in 0..n {
                    let ekj = b.get(k, j) as usize;
                    for l in 0..n {
                        let e = eij + b.get(k, l) as usize + 2 * q - b.get(i, l) as usize - ekj;
                        acc[e % q] += 1;
                    }
                }
            }
        },
        |mut a, b| {
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            a
        },
    );
    HaagerupSet { q: b.order(), counts }
}
