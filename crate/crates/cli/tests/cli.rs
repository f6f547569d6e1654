use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lagcorr::corralg::{RelationTable, TableDoc};
use num_rational::BigRational;
use serde_json::Value;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagcorr"))
        .args(args)
        .env("LAGCORR_DATA_DIR", data_dir())
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", stdout(o)))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

/// `[exponent, re, im]` triples as exact rationals.
fn terms(v: &Value) -> Vec<(i64, BigRational, BigRational)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|t| (t[0].as_i64().unwrap(), rat(t[1].as_str().unwrap()), rat(t[2].as_str().unwrap())))
        .collect()
}

fn factorial(n: i64) -> BigRational {
    (1..=n).fold(BigRational::from_integer(1.into()), |a, k| a * BigRational::from_integer(k.into()))
}

#[test]
fn unitarity_through_four_passes() {
    let o = run(&["unitarity", "--n", "4"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 5);
    let counts: Vec<u64> = results.iter().map(|r| r["partitions"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5]);
    assert!(results.iter().all(|r| r["failing_blocks"].as_array().unwrap().is_empty()));
}

#[test]
fn unitarity_at_zero_is_trivial() {
    let o = run(&["unitarity", "--n", "0", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("unitarity: pass"));
}

#[test]
fn corrupted_table_names_the_block() {
    let mut doc: TableDoc = RelationTable::standard(3).to_doc();
    let target = doc
        .compositions
        .iter_mut()
        .find(|c| c.left.to_string() == "Delta(2,1)" && c.right.to_string() == "DeltaDagger(2,1)")
        .expect("Δ⋆Δ† at (2,1) is tabulated");
    for (_, c) in target.result.iter_mut() {
        c.0 = -c.0.clone();
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupt.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let o = run(&["unitarity", "--n", "3", "--table", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["pass"], false);
    let r3 = &v["results"][3];
    assert_eq!(r3["forward_holds"], false);
    let blocks: Vec<&str> = r3["failing_blocks"].as_array().unwrap().iter().map(|b| b.as_str().unwrap()).collect();
    assert_eq!(blocks, ["(2,1)"]);
    for n in 0..3 {
        assert!(v["results"][n]["failing_blocks"].as_array().unwrap().is_empty());
    }
    let t = run(&["unitarity", "--n", "3", "--table", path.to_str().unwrap(), "--format", "text"]);
    assert!(stdout(&t).contains("failing blocks: (2,1)"), "{}", stdout(&t));
}

#[test]
fn qint_two_matches_taylor_of_two_sine() {
    let o = run(&["series", "qint", "--n", "2", "--order", "6"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["agrees"], true);
    // 2 sin ħ = Σ 2(−1)^k ħ^{2k+1}/(2k+1)!
    let expected: Vec<(i64, BigRational, BigRational)> = (0..3)
        .map(|k| {
            let sign = if k % 2 == 0 { 2 } else { -2 };
            (2 * k + 1, BigRational::from_integer(sign.into()) / factorial(2 * k + 1), rat("0"))
        })
        .collect();
    assert_eq!(terms(&v["hbar"]["terms"]), expected);
    assert_eq!(expected[1].1, rat("-1/3"));
    assert_eq!(expected[2].1, rat("1/60"));
}

#[test]
fn wall_one_alternates() {
    let o = run(&["series", "wall", "--n", "1", "--order", "5"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let nonzero: Vec<_> = terms(&v["series"]["terms"]).into_iter().filter(|t| t.1 != rat("0")).collect();
    let expected: Vec<_> =
        (0..5).map(|k| (2 * k + 1, rat(if k % 2 == 0 { "-1" } else { "1" }), rat("0"))).collect();
    assert_eq!(nonzero, expected);
    let t = run(&["series", "wall", "--n", "1", "--order", "3", "--format", "text"]);
    assert!(stdout(&t).contains("(-1)q^{1/2} + (1)q^{3/2} + (-1)q^{5/2}"), "{}", stdout(&t));
}

#[test]
fn multicover_marks_fractional_coefficients() {
    let two = json(&run(&["series", "multicover", "--n", "2", "--order", "4"]));
    assert_eq!(two["integral"], false);
    assert_eq!(two["sign"], -1);
    let marked: Vec<i64> = two["non_integral"].as_array().unwrap().iter().map(|h| h.as_i64().unwrap()).collect();
    // −k/2 at q^{2k}: fractional exactly for odd k
    assert_eq!(marked, [4, 12]);
    let one = json(&run(&["series", "multicover", "--n", "1", "--order", "4"]));
    assert_eq!(one["integral"], true);
    assert!(one["non_integral"].as_array().unwrap().is_empty());
}

#[test]
fn check_wall_example() {
    let o = run(&["check", "examples/wall_n1.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["rational"], true);
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["gaussian_integral"], true);
    let t = run(&["check", "examples/wall_n1.json", "--format", "text"]);
    assert!(stdout(&t).starts_with("rational=yes symmetric=yes integral=yes"));
}

#[test]
fn check_multicover_example() {
    let o = run(&["check", "examples/multicover_d2.json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["rational"], true);
    assert_eq!(v["gaussian_integral"], false);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"series\": {\"terms\": [[1, \"1\", \"0\"]\n").unwrap();
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    let err = stderr(&o);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("bad.json"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["series", "bogus", "--n", "1"])), 2);
    assert_eq!(code(&run(&["series", "qint", "--n", "0"])), 2);
    assert_eq!(code(&run(&["series", "wall"])), 2);
    assert_eq!(code(&run(&["check", "no/such/file.json"])), 2);
    assert_eq!(code(&run(&["unitarity", "--n", "-1"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn star_of_l_with_adjoint_is_identity() {
    let o = run(&["star", "corr/l2_dagger.json", "corr/l2.json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["domain"], "Hilb(2)");
    assert_eq!(v["terms"], serde_json::json!([["IdHilb(2)", "1"]]));
    let f = run(&["star", "corr/l2.json", "corr/l2_dagger.json", "--format", "text"]);
    assert_eq!(stdout(&f).trim(), "(1)*IdStack(1,1) + (1)*IdStack(2)");
}

#[test]
fn fock_log_undoes_exp() {
    let dir = tempfile::tempdir().unwrap();
    let z = run(&["fock", "exp", "fock/wall_eta.json"]);
    assert_eq!(code(&z), 0, "{}", stderr(&z));
    let zpath = dir.path().join("z.json");
    std::fs::write(&zpath, &z.stdout).unwrap();
    let back = run(&["fock", "log", zpath.to_str().unwrap()]);
    assert_eq!(code(&back), 0);
    let original: Value = serde_json::from_str(&std::fs::read_to_string(data_dir().join("fock/wall_eta.json")).unwrap()).unwrap();
    let got = json(&back);
    assert_eq!(got["terms"].as_array().unwrap().len(), 1);
    assert_eq!(got["terms"][0]["hseries"], original["terms"][0]["hseries"]);
    assert_eq!(got["terms"][0]["labels"], original["terms"][0]["labels"]);
}

#[test]
fn fock_mul_modes_agree() {
    let a = run(&["fock", "mul", "fock/wall_eta.json", "fock/wall_eta.json"]);
    let b = run(&["fock", "mul", "fock/wall_eta.json", "fock/wall_eta.json", "--mode", "orbit-sum"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(terms(&v["terms"][0]["hseries"]["terms"])[0], (2, rat("4"), rat("0")));
}

#[test]
fn fock_log_of_nonunital_fails() {
    let o = run(&["fock", "log", "fock/wall_eta.json"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("constant term"));
}

#[test]
fn props_pass_and_are_seeded() {
    let a = run(&["props", "--seed", "7", "--cases", "120"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    let v = json(&a);
    assert_eq!(v["sine"]["jacobi"], 120);
    assert_eq!(v["sine"]["antisymmetry"], 120);
    assert!(v["sine"]["central_hits"].as_u64().unwrap() > 0);
    assert_eq!(v["fock"]["log_exp_roundtrip"], 12);
    let b = run(&["props", "--seed", "7", "--cases", "120"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let commands: [&[&str]; 6] = [
        &["unitarity", "--n", "4"],
        &["series", "multicover", "--n", "3", "--order", "6", "--format", "csv"],
        &["series", "qint", "--n", "5", "--order", "9", "--format", "text"],
        &["check", "examples/multicover_d2.json"],
        &["star", "corr/l2.json", "corr/l2_dagger.json"],
        &["fock", "exp", "fock/wall_eta.json", "--format", "csv"],
    ];
    for args in commands {
        let a = run(args);
        let b = run(args);
        assert!(!a.stdout.is_empty(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), code(&b));
    }
}

#[test]
fn csv_has_header_and_rows() {
    let o = run(&["series", "wall", "--n", "2", "--order", "2", "--format", "csv"]);
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "variable,exponent,re,im");
    // i^3 q^1 then i^3 q^3: the sign of (−q)^2 is +
    assert_eq!(&lines[1..], ["q^(1/2),2,0,-1", "q^(1/2),6,0,-1"]);
}

#[test]
fn data_dir_flag_resolves_relative_paths() {
    let o = Command::new(env!("CARGO_BIN_EXE_lagcorr"))
        .args(["check", "wall_n1.json", "--data-dir"])
        .arg(data_dir().join("examples"))
        .env_remove("LAGCORR_DATA_DIR")
        .current_dir(std::env::temp_dir())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}
