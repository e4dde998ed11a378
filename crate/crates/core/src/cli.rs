//! Command-line front end. Exit codes: 0 success or property true, 1
//! property false, 2 usage or input error, 3 numerical failure.

use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::catalog;
use crate::equivalence::{standard_equivalent, unitary_equivalent, Witness};
use crate::error::{Error, Result};
use crate::fmt_f64;
use crate::invariants::{defect, spectral_function, spectrum_numeric, DEFAULT_RANK_TOL, DEFAULT_SPECTRUM_TOL};
use crate::matrix::{parse_text, ButsonMatrix, TextMatrix};
use crate::report;

const NUMERIC_TOL: f64 = 1e-10;

#[derive(Parser, Debug)]
#[command(
    name = "agaian",
    version,
    about = "Exact invariants and equivalence tests for Butson Hadamard matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Catalog of named matrices.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the Hadamard property.
    Verify(MatrixArgs),
    /// Exact scaled characteristic polynomial det(xI - H/sqrt(n)).
    Charpoly(MatrixArgs),
    /// Numerical spectrum of H/sqrt(n).
    Spectrum(MatrixArgs),
    /// Dephased form with its diagonal phase factors.
    Dephase(MatrixArgs),
    /// Defect of a Hadamard matrix.
    Defect(MatrixArgs),
    /// Decide standard or unitary equivalence.
    Equiv {
        mode: Mode,
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every catalogued claim.
    Report {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args, Debug)]
struct MatrixArgs {
    /// `catalog:NAME`, a catalog name, a file path, or `-` for stdin.
    matrix: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Standard,
    Unitary,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Standard => "standard",
            Mode::Unitary => "unitary",
        }
    }
}

#[derive(Serialize)]
struct MatrixJson {
    name: String,
    q: Option<u32>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    hadamard: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    left: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    right: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    charpoly: Option<CharpolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<EigJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    defect: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equiv: Option<EquivJson>,
}

impl MatrixJson {
    fn new(name: &str, q: Option<u32>, n: usize) -> Self {
        Self {
            name: name.into(),
            q,
            n,
            hadamard: None,
            matrix: None,
            left: None,
            right: None,
            charpoly: None,
            spectrum: None,
            defect: None,
            equiv: None,
        }
    }
}

#[derive(Serialize)]
struct CharpolyJson {
    /// `e[k]` holds the coefficients of `e_k` in the power basis of `ζ_q`.
    e: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct EigJson {
    re: Box<RawValue>,
    im: Box<RawValue>,
    mult: usize,
}

#[derive(Serialize)]
struct EquivJson {
    mode: &'static str,
    other: String,
    equivalent: bool,
    witness: Option<Witness>,
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(fmt_f64(x)).expect("float literal is valid JSON")
}

struct Loaded {
    name: String,
    matrix: TextMatrix,
}

impl Loaded {
    fn butson(&self) -> Result<&ButsonMatrix> {
        match &self.matrix {
            TextMatrix::Butson(b) => Ok(b),
            TextMatrix::Complex(_) => Err(Error::Parse {
                line: 1,
                msg: "this command needs a Butson (BH) matrix".into(),
            }),
        }
    }
}

fn load(arg: &str, stdin: &mut dyn Read) -> Result<Loaded> {
    if let Some(name) = arg.strip_prefix("catalog:") {
        return Ok(Loaded {
            name: name.into(),
            matrix: TextMatrix::Butson(catalog::get(name)?),
        });
    }
    let text = if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })?;
        s
    } else if Path::new(arg).exists() {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{arg}: {e}"),
        })?
    } else {
        return Ok(Loaded {
            name: arg.into(),
            matrix: TextMatrix::Butson(catalog::get(arg)?),
        });
    };
    Ok(Loaded {
        name: arg.into(),
        matrix: parse_text(&text)?,
    })
}

fn json_line<T: Serialize>(out: &mut dyn Write, v: &T) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_numeric() => 3,
        Error::NotHadamard => 1,
        _ => 2,
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

enum Failure {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::Catalog { action } => match action {
            CatalogAction::List { json } => {
                if json {
                    #[derive(Serialize)]
                    struct Item<'a> {
                        name: &'a str,
                        q: u32,
                        n: usize,
                        description: &'a str,
                    }
                    let items: Vec<Item> = catalog::entries()
                        .map(|e| Item {
                            name: e.name,
                            q: e.q,
                            n: 6,
                            description: e.description,
                        })
                        .collect();
                    json_line(out, &items)?;
                } else {
                    for e in catalog::entries() {
                        writeln!(out, "{:<12} q={:<2} {}", e.name, e.q, e.description)?;
                    }
                }
                Ok(0)
            }
            CatalogAction::Show { name, json } => {
                let b = catalog::get(&name)?;
                if json {
                    let mut j = MatrixJson::new(&name, Some(b.order()), b.dim());
                    j.matrix = Some(rows(&b));
                    json_line(out, &j)?;
                } else {
                    write!(out, "{}", b.to_text())?;
                }
                Ok(0)
            }
        },
        Command::Verify(a) => {
            let m = load(&a.matrix, stdin)?;
            let (q, n, h) = match &m.matrix {
                TextMatrix::Butson(b) => (Some(b.order()), b.dim(), b.is_hadamard_exact()),
                TextMatrix::Complex(c) => (None, c.dim(), c.is_hadamard_numeric(NUMERIC_TOL)),
            };
            if a.json {
                let mut j = MatrixJson::new(&m.name, q, n);
                j.hadamard = Some(h);
                json_line(out, &j)?;
            } else {
                writeln!(out, "hadamard: {h}")?;
            }
            Ok(if h { 0 } else { 1 })
        }
        Command::Charpoly(a) => {
            let m = load(&a.matrix, stdin)?;
            let b = m.butson()?;
            let p = spectral_function(b)?;
            if a.json {
                let mut j = MatrixJson::new(&m.name, Some(b.order()), b.dim());
                j.charpoly = Some(CharpolyJson {
                    e: p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect(),
                });
                json_line(out, &j)?;
            } else {
                writeln!(
                    out,
                    "# det(xI - H/sqrt({n})) = sum_k e_k {n}^(-({n}-k)/2) x^k, z = exp(2 pi i/{q})",
                    n = b.dim(),
                    q = b.order()
                )?;
                for (k, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "e{k}: {c}")?;
                }
            }
            Ok(0)
        }
        Command::Spectrum(a) => {
            let m = load(&a.matrix, stdin)?;
            let b = m.butson()?;
            let sp = spectrum_numeric(&spectral_function(b)?, DEFAULT_SPECTRUM_TOL)?;
            if a.json {
                let mut j = MatrixJson::new(&m.name, Some(b.order()), b.dim());
                j.spectrum = Some(
                    sp.eigenvalues
                        .iter()
                        .map(|e| EigJson {
                            re: raw(e.value.re),
                            im: raw(e.value.im),
                            mult: e.mult,
                        })
                        .collect(),
                );
                json_line(out, &j)?;
            } else {
                for e in &sp.eigenvalues {
                    writeln!(out, "{} {} x{}", fmt_f64(e.value.re), fmt_f64(e.value.im), e.mult)?;
                }
            }
            Ok(0)
        }
        Command::Dephase(a) => {
            let m = load(&a.matrix, stdin)?;
            let b = m.butson()?;
            let (d, left, right) = b.dephase();
            if a.json {
                let mut j = MatrixJson::new(&m.name, Some(b.order()), b.dim());
                j.matrix = Some(rows(&d));
                j.left = Some(left.exps);
                j.right = Some(right.exps);
                json_line(out, &j)?;
            } else {
                writeln!(out, "# left {}", join(&left.exps))?;
                writeln!(out, "# right {}", join(&right.exps))?;
                write!(out, "{}", d.to_text())?;
            }
            Ok(0)
        }
        Command::Defect(a) => {
            let m = load(&a.matrix, stdin)?;
            let b = m.butson()?;
            let r = defect(b, DEFAULT_RANK_TOL)?;
            if a.json {
                let mut j = MatrixJson::new(&m.name, Some(b.order()), b.dim());
                j.defect = Some(r.defect);
                json_line(out, &j)?;
            } else {
                writeln!(out, "defect: {}", r.defect)?;
                writeln!(out, "rank: {} of {}", r.rank, r.unknowns)?;
                writeln!(
                    out,
                    "gap: {} / {}",
                    fmt_f64(r.largest_discarded),
                    fmt_f64(r.smallest_retained)
                )?;
            }
            Ok(0)
        }
        Command::Equiv {
            mode,
            first,
            second,
            json,
        } => {
            let m1 = load(&first, stdin)?;
            let m2 = load(&second, stdin)?;
            let (b1, b2) = (m1.butson()?, m2.butson()?);
            let (equivalent, witness) = match mode {
                Mode::Standard => {
                    let v = standard_equivalent(b1, b2)?;
                    (v.equivalent, v.witness)
                }
                Mode::Unitary => (unitary_equivalent(b1, b2)?, None),
            };
            if json {
                let mut j = MatrixJson::new(&m1.name, Some(b1.order()), b1.dim());
                j.equiv = Some(EquivJson {
                    mode: mode.as_str(),
                    other: m2.name.clone(),
                    equivalent,
                    witness,
                });
                json_line(out, &j)?;
            } else {
                writeln!(out, "{} equivalent: {equivalent}", mode.as_str())?;
                if let Some(w) = witness {
                    writeln!(out, "q: {}", w.q)?;
                    writeln!(out, "rows: {}", join(&w.row_perm))?;
                    writeln!(out, "cols: {}", join(&w.col_perm))?;
                    writeln!(out, "left: {}", join(&w.left))?;
                    writeln!(out, "right: {}", join(&w.right))?;
                }
            }
            Ok(if equivalent { 0 } else { 1 })
        }
        Command::Report { json } => {
            let r = report::run()?;
            if json {
                writeln!(out, "{}", r.to_json())?;
            } else {
                write!(out, "{}", r.to_markdown())?;
            }
            Ok(if r.refuted() > 0 { 1 } else { 0 })
        }
    }
}

fn rows(b: &ButsonMatrix) -> Vec<Vec<u32>> {
    (0..b.dim()).map(|i| b.row(i).to_vec()).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Convergence("x".into())), 3);
        assert_eq!(exit_code(&Error::IndeterminateRank { ratio: 1e-7 }), 3);
        assert_eq!(exit_code(&Error::NotHadamard), 1);
        assert_eq!(exit_code(&Error::UnknownMatrix("x".into())), 2);
    }

    #[test]
    fn floats_in_json_use_fixed_format() {
        assert_eq!(raw(0.5).get(), "5.00000000000000e-1");
        assert_eq!(raw(-0.0).get(), "0.00000000000000e0");
    }
}
