use std::process::Command;

use agaian::catalog;
use agaian::cli::run;
use agaian::equivalence::{apply_witness, Witness};
use agaian::matrix::{parse_text, TextMatrix};
use serde_json::Value;

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn agaian(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("agaian").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(o: &Output) -> Value {
    serde_json::from_str(o.out.trim()).unwrap()
}

#[test]
fn verify_verdicts() {
    let o = agaian(&["verify", "A1"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "hadamard: true\n"));
    let o = agaian(&["verify", "catalog:M61"], "");
    assert_eq!((o.code, o.out.as_str()), (0, "hadamard: true\n"));
    let zeros = format!("BH 3 6\n{}", "0 0 0 0 0 0\n".repeat(6));
    let o = agaian(&["verify", "-"], &zeros);
    assert_eq!((o.code, o.out.as_str()), (1, "hadamard: false\n"));
    let o = agaian(&["verify", "A40_raw", "--json"], "");
    assert_eq!(o.code, 1);
    assert_eq!(json(&o)["hadamard"], false);
}

#[test]
fn verify_complex_input() {
    let o = agaian(&["verify", "-"], "C 2\n1,0 1,0\n1,0 -1,0\n");
    assert_eq!((o.code, o.out.as_str()), (0, "hadamard: true\n"));
    let o = agaian(&["verify", "-"], "C 2\n1,0 1,0\n1,0 1,0\n");
    assert_eq!(o.code, 1);
}

#[test]
fn malformed_input_and_usage() {
    for (args, stdin) in [
        (vec!["verify", "-"], "BH 3 2\n0 1\n"),
        (vec!["verify", "-"], "nonsense"),
        (vec!["verify", "no-such-matrix"], ""),
        (vec!["charpoly", "-"], "C 1\n1,0\n"),
        (vec!["equiv", "sideways", "A1", "A2"], ""),
        (vec!["frobnicate"], ""),
        (vec![], ""),
    ] {
        let o = agaian(&args, stdin);
        assert_eq!(o.code, 2, "{args:?}: {}", o.out);
        assert!(!o.err.is_empty());
    }
    assert_eq!(agaian(&["--help"], "").code, 0);
}

#[test]
fn equivalence_verbs() {
    let o = agaian(&["equiv", "standard", "M6", "M61"], "");
    assert_eq!(o.code, 0);
    assert!(o.out.starts_with("standard equivalent: true\n"));
    assert!(o.out.contains("rows: "));

    let o = agaian(&["equiv", "standard", "M6", "M61", "--json"], "");
    let v = json(&o);
    assert_eq!(v["equiv"]["mode"], "standard");
    assert_eq!(v["equiv"]["equivalent"], true);
    let w: Witness = witness_from(&v["equiv"]["witness"]);
    let m6 = catalog::get("M6").unwrap();
    assert_eq!(apply_witness(&w, &catalog::get("M61").unwrap()).unwrap(), m6);

    let o = agaian(&["equiv", "unitary", "A01", "A02"], "");
    assert_eq!((o.code, o.out.as_str()), (1, "unitary equivalent: false\n"));
    let o = agaian(&["equiv", "unitary", "A01", "A03"], "");
    assert_eq!(o.code, 0);
    let o = agaian(&["equiv", "standard", "A1", "F6"], "");
    assert_eq!(o.code, 1);
}

fn witness_from(v: &Value) -> Witness {
    let list = |k: &str| -> Vec<u64> { v[k].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect() };
    Witness {
        q: v["q"].as_u64().unwrap() as u32,
        row_perm: list("row_perm").into_iter().map(|x| x as usize).collect(),
        col_perm: list("col_perm").into_iter().map(|x| x as usize).collect(),
        left: list("left").into_iter().map(|x| x as u32).collect(),
        right: list("right").into_iter().map(|x| x as u32).collect(),
    }
}

#[test]
fn defect_verb() {
    let o = agaian(&["defect", "A1"], "");
    assert_eq!(o.code, 0);
    assert!(o.out.starts_with("defect: 0\n"));
    assert_eq!(json(&agaian(&["defect", "F6", "--json"], ""))["defect"], 4);
    assert_eq!(agaian(&["defect", "A2_raw"], "").code, 1);
}

#[test]
fn charpoly_and_spectrum_json() {
    let v = json(&agaian(&["charpoly", "M6", "--json"], ""));
    assert_eq!((v["q"].as_u64(), v["n"].as_u64()), (Some(4), Some(6)));
    let e = v["charpoly"]["e"].as_array().unwrap();
    assert_eq!(e.len(), 7);
    assert_eq!(e[0], serde_json::json!([-216, 0]));
    assert_eq!(e[2], serde_json::json!([108, 0]));

    let v = json(&agaian(&["spectrum", "M6", "--json"], ""));
    let sp = v["spectrum"].as_array().unwrap();
    assert_eq!(sp.len(), 2);
    for (e, re) in sp.iter().zip([-1.0, 1.0]) {
        assert!((e["re"].as_f64().unwrap() - re).abs() < 1e-10);
        assert!(e["im"].as_f64().unwrap().abs() < 1e-10);
        assert_eq!(e["mult"], 3);
    }

    let o = agaian(&["charpoly", "A01"], "");
    assert!(o.out.lines().any(|l| l == "e0: -216"));
}

#[test]
fn shown_matrices_reparse() {
    for name in catalog::names() {
        let o = agaian(&["catalog", "show", name], "");
        let TextMatrix::Butson(b) = parse_text(&o.out).unwrap() else {
            panic!("{name}")
        };
        assert_eq!(b, catalog::get(name).unwrap());

        let o = agaian(&["dephase", name], "");
        let TextMatrix::Butson(d) = parse_text(&o.out).unwrap() else {
            panic!("{name}")
        };
        assert_eq!(d, catalog::get(name).unwrap().dephase().0);
        let again = agaian(&["dephase", "-"], &o.out);
        assert_eq!(again.out.lines().last(), o.out.lines().last());

        let v = json(&agaian(&["catalog", "show", name, "--json"], ""));
        let grid: Vec<Vec<i64>> = serde_json::from_value(v["matrix"].clone()).unwrap();
        assert_eq!(grid, catalog::get(name).unwrap().to_grid());
    }
}

#[test]
fn catalog_list() {
    let o = agaian(&["catalog", "list"], "");
    assert_eq!(
        o.out.lines().count(),
        catalog::names().len() + catalog::transcription_names().len()
    );
    let v = json(&agaian(&["catalog", "list", "--json"], ""));
    assert_eq!(v[0]["name"], "A1");
}

#[test]
fn file_paths_and_prefix() {
    let dir = std::env::temp_dir().join(format!("agaian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("A1");
    std::fs::write(&path, format!("BH 3 6\n{}", "0 0 0 0 0 0\n".repeat(6))).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(agaian(&["verify", p], "").code, 1);
    assert_eq!(agaian(&["verify", "catalog:A1"], "").code, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_is_deterministic() {
    let a = agaian(&["report", "--json"], "");
    let b = agaian(&["report", "--json"], "");
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let v: Value = serde_json::from_str(&a.out).unwrap();
    let claims = v["claims"].as_array().unwrap();
    for id in ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11"] {
        assert!(claims.iter().any(|c| c["id"] == id), "{id}");
    }
    assert!(claims.iter().all(|c| c["status"] != "REFUTED"));
    let c6 = claims.iter().find(|c| c["id"] == "C6").unwrap();
    assert_eq!(c6["status"], "CONFIRMED");

    let md = agaian(&["report"], "");
    assert_eq!(md.code, 0);
    assert!(md.out.starts_with("| id |"));
}

#[test]
fn binary_smoke() {
    let out = Command::new(env!("CARGO_BIN_EXE_agaian"))
        .args(["verify", "F6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "hadamard: true\n");
    let out = Command::new(env!("CARGO_BIN_EXE_agaian"))
        .arg("bogus")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
