//! Independent reference computations checked against the library.

use agaian::catalog;
use agaian::equivalence::{apply_witness, standard_equivalent, standard_equivalent_with, SearchOptions, Witness};
use agaian::invariants::{
    charpoly_exact, defect, eig_real_symmetric, matching_distance, spectral_function, spectrum_numeric,
    DEFAULT_RANK_TOL,
};
use agaian::{perm, ButsonMatrix, CycInt};
use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn get(name: &str) -> ButsonMatrix {
    catalog::get(name).unwrap()
}

/// Literal enumeration of all row and column permutations; a pair is
/// equivalent iff some permuted `b2` has the same dephased form as `b1`.
fn brute_force_equivalent(b1: &ButsonMatrix, b2: &ButsonMatrix) -> bool {
    let q = b1.order() * b2.order();
    let (b1, b2) = (b1.lift(q).unwrap(), b2.lift(q).unwrap());
    let target = b1.dephase().0;
    let perms = perm::all(b1.dim());
    perms
        .iter()
        .any(|p| perms.iter().any(|s| b2.permute(p, s).unwrap().dephase().0 == target))
}

#[test]
fn search_matches_brute_force() {
    let pairs = [
        ("M6", "M61"),
        ("A1", "A2"),
        ("A1", "A3"),
        ("A1", "F6"),
        ("A01", "A02"),
        ("A10", "A20"),
        ("A10", "A01"),
    ];
    for (x, y) in pairs {
        let (b1, b2) = (get(x), get(y));
        let opts = SearchOptions {
            haagerup_filter: false,
            ..Default::default()
        };
        let v = standard_equivalent_with(&b1, &b2, opts).unwrap();
        assert_eq!(v.equivalent, brute_force_equivalent(&b1, &b2), "{x} vs {y}");
    }
}

#[test]
fn search_finds_random_scrambles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["A1", "F6", "M6", "A10"] {
        let b = get(name);
        let q = b.order();
        let mut p = perm::identity(6);
        let mut s = perm::identity(6);
        p.shuffle(&mut rng);
        s.shuffle(&mut rng);
        let w = Witness {
            q,
            row_perm: p,
            col_perm: s,
            left: (0..6).map(|_| rng.gen_range(0..q)).collect(),
            right: (0..6).map(|_| rng.gen_range(0..q)).collect(),
        };
        let scrambled = apply_witness(&w, &b).unwrap();
        let v = standard_equivalent(&b, &scrambled).unwrap();
        assert!(v.equivalent, "{name}");
        assert_eq!(apply_witness(&v.witness.unwrap(), &scrambled).unwrap(), b);
    }
}

type Poly = Vec<CycInt>;

fn padd(a: &Poly, b: &Poly, q: u32) -> Poly {
    let n = a.len().max(b.len());
    let z = CycInt::zero(q).unwrap();
    (0..n)
        .map(|k| a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z))
        .collect()
}

fn pmul(a: &Poly, b: &Poly, q: u32) -> Poly {
    let mut out = vec![CycInt::zero(q).unwrap(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Cofactor expansion along the first row of a matrix of polynomials.
fn det(m: &[Vec<Poly>], q: u32) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = vec![CycInt::zero(q).unwrap()];
    for j in 0..n {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let mut term = pmul(&m[0][j], &det(&minor, q), q);
        if j % 2 == 1 {
            term = term.iter().map(|c| -c).collect();
        }
        acc = padd(&acc, &term, q);
    }
    acc
}

fn cofactor_charpoly(b: &ButsonMatrix) -> Poly {
    let q = b.order();
    let n = b.dim();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let h = -&b.entry(i, j);
                    if i == j {
                        vec![h, CycInt::one(q).unwrap()]
                    } else {
                        vec![h]
                    }
                })
                .collect()
        })
        .collect();
    det(&m, q)
}

#[test]
fn charpoly_matches_cofactor_expansion() {
    for name in catalog::names().into_iter().chain(catalog::transcription_names()) {
        let b = get(name);
        assert_eq!(
            charpoly_exact(&b).unwrap().coeffs(),
            cofactor_charpoly(&b).as_slice(),
            "{name}"
        );
    }
}

fn eisenstein(v: &[(i64, i64)]) -> Vec<CycInt> {
    v.iter().map(|&(a, b)| CycInt::eisenstein(a, b)).collect()
}

#[test]
fn frozen_symbolic_coefficients() {
    let cases = [
        (
            "A1",
            vec![(-216, 0), (216, 0), (-90, 0), (0, 0), (15, 0), (-6, 0), (1, 0)],
        ),
        (
            "A10",
            vec![(-216, 0), (144, 72), (-18, -36), (6, 12), (-3, -6), (-2, 2), (1, 0)],
        ),
        (
            "A01",
            vec![(-216, 0), (-72, -36), (0, 0), (6, 12), (0, 0), (1, -1), (1, 0)],
        ),
    ];
    for (name, e) in cases {
        assert_eq!(
            spectral_function(&get(name)).unwrap().coeffs(),
            eisenstein(&e).as_slice(),
            "{name}"
        );
    }
}

#[test]
fn spectrum_matches_schur() {
    for name in catalog::names() {
        let b = get(name);
        let h = b.embed();
        let n = h.dim();
        let s = (n as f64).sqrt();
        let m = DMatrix::from_fn(n, n, |i, j| h.get(i, j) / s);
        let eig: Vec<Complex64> = Schur::new(m).eigenvalues().unwrap().iter().copied().collect();
        let sp = spectrum_numeric(&spectral_function(&b).unwrap(), 1e-10).unwrap();
        let d = matching_distance(&sp.expanded(), &eig);
        assert!(d < 1e-9, "{name}: {d:e}");
    }
}

/// Same first-order system as the library, assembled independently and
/// ranked with nalgebra's SVD.
fn svd_defect(b: &ButsonMatrix) -> usize {
    let h = b.embed();
    let n = h.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut re = vec![0.0; n * n];
            let mut im = vec![0.0; n * n];
            for k in 0..n {
                let c = h.get(i, k) * h.get(j, k).conj();
                re[i * n + k] += c.re;
                re[j * n + k] -= c.re;
                im[i * n + k] += c.im;
                im[j * n + k] -= c.im;
            }
            rows.push(re);
            rows.push(im);
        }
    }
    let a = DMatrix::from_fn(rows.len(), n * n, |r, c| rows[r][c]);
    let sv = a.svd(false, false).singular_values;
    let max = sv.max();
    let rank = sv.iter().filter(|&&s| s > 1e-8 * max).count();
    n * n - rank - (2 * n - 1)
}

#[test]
fn defect_matches_svd() {
    for name in catalog::names() {
        let b = get(name);
        assert_eq!(defect(&b, DEFAULT_RANK_TOL).unwrap().defect, svd_defect(&b), "{name}");
    }
}

#[test]
fn jacobi_matches_symmetric_eigen() {
    for a in [0.0, 0.5, 1.0, 2.0, 3.0, -1.5] {
        let m = catalog::agaian_symmetric(a);
        let n = m.dim();
        let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j).re);
        let mut want: Vec<f64> = dm.symmetric_eigenvalues().iter().copied().collect();
        want.sort_by(f64::total_cmp);
        let got = eig_real_symmetric(&m, 1e-10).unwrap().values;
        for (x, y) in got.iter().zip(&want) {
            assert!((x - y).abs() < 1e-10, "a={a}: {got:?} vs {want:?}");
        }
    }
}
