use std::path::Path;

use lagcorr::corralg::{standard_table, verify_unitarity_with, CorrElement, RelationTable, TableDoc, DEFAULT_N_MAX};
use lagcorr::fockring::{FockElement, MulMode};
use lagcorr::gwdt::{multicover_series, q_integer, sine_series, wall_invariant, CheckInput};
use lagcorr::scalars::{GaussianRational, QSeries};
use serde_json::json;

use crate::output::{term_row, yes_no, Output};
use crate::{Failure, Inputs, Outcome};

type G = GaussianRational;

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Compute(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn load_table(inputs: &Inputs, path: Option<&Path>, n: u32) -> Result<Option<RelationTable>, Failure> {
    match path {
        Some(p) => {
            let doc: TableDoc = inputs.read_json(p)?;
            RelationTable::from_doc(&doc).map(Some).map_err(usage)
        }
        None if n > DEFAULT_N_MAX => Ok(Some(RelationTable::standard(n))),
        None => Ok(None),
    }
}

pub fn unitarity(inputs: &Inputs, n_max: u32, table: Option<&Path>) -> Outcome {
    let owned = load_table(inputs, table, n_max)?;
    let table = owned.as_ref().unwrap_or_else(|| standard_table());
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut out = Output::new(json!(null));
    let mut pass = true;
    for n in 0..=n_max {
        let report = verify_unitarity_with(table, n).map_err(compute)?;
        let partitions = lagcorr::partitions::enumerate_partitions(n).len();
        let blocks: Vec<String> = report.failing_blocks.iter().map(ToString::to_string).collect();
        pass &= report.holds();
        out.line(format!(
            "n={n} partitions={partitions} forward={} backward={}{}",
            if report.forward_holds { "pass" } else { "FAIL" },
            if report.backward_holds { "pass" } else { "FAIL" },
            if blocks.is_empty() { String::new() } else { format!(" failing blocks: {}", blocks.join(" ")) }
        ));
        rows.push(vec![
            n.to_string(),
            partitions.to_string(),
            report.forward_holds.to_string(),
            report.backward_holds.to_string(),
            blocks.join(" "),
        ]);
        results.push(json!({
            "n": n,
            "partitions": partitions,
            "forward_holds": report.forward_holds,
            "backward_holds": report.backward_holds,
            "failing_blocks": blocks,
        }));
    }
    out.line(if pass { "unitarity: pass" } else { "unitarity: FAIL" });
    out.json = json!({ "pass": pass, "results": results });
    Ok((out.csv(vec!["n", "partitions", "forward_holds", "backward_holds", "failing_blocks"], rows), pass))
}

fn positive(name: &str, v: i64) -> Result<(), Failure> {
    if v < 1 {
        return Err(Failure::Usage(format!("--{name} must be at least 1, got {v}")));
    }
    Ok(())
}

fn q_pow(h: i64) -> String {
    if h % 2 == 0 {
        format!("q^{}", h / 2)
    } else {
        format!("q^{{{h}/2}}")
    }
}

fn q_text(s: &QSeries<G>) -> String {
    let mut parts = Vec::new();
    for (h, c) in s.terms() {
        if c == &G::from(0) {
            continue;
        }
        parts.push(format!("({c}){}", q_pow(h)));
    }
    parts.push(format!("O({})", q_pow(s.known_through() + 1)));
    parts.join(" + ")
}

pub fn series_qint(n: i64, order: i64) -> Outcome {
    positive("n", n)?;
    positive("order", order)?;
    let (laurent, hbar) = q_integer(n, order);
    let agrees = hbar.agrees_with(&sine_series(n, order));
    let mut out = Output::new(json!({
        "kind": "qint",
        "n": n,
        "laurent": laurent,
        "hbar": hbar,
        "agrees": agrees,
    }));
    out.line(format!("[{n}]_q = {laurent}"));
    out.line(format!("      = {hbar}"));
    let rows = laurent
        .terms()
        .map(|(k, c)| term_row("x", k, c))
        .chain(hbar.terms().map(|(k, c)| term_row("hbar", k, c)))
        .collect();
    Ok((out.csv(vec!["variable", "exponent", "re", "im"], rows), agrees))
}

pub fn series_wall(n: i64, order: i64) -> Outcome {
    positive("n", n)?;
    positive("order", order)?;
    let w = wall_invariant(n, order as usize).map_err(usage)?;
    let mut out = Output::new(serde_json::to_value(&w).map_err(compute)?);
    out.line(format!("wall n={n} {{{}}}", w.label));
    out.line(format!("closed form: {}", w.closed_form));
    out.line(format!("series: {}", q_text(&w.series)));
    let rows = w.series.terms().filter(|(_, c)| **c != G::from(0)).map(|(k, c)| term_row("q^(1/2)", k, c)).collect();
    Ok((out.csv(vec!["variable", "exponent", "re", "im"], rows), true))
}

pub fn series_multicover(d: i64, order: i64) -> Outcome {
    positive("n", d)?;
    positive("order", order)?;
    let m = multicover_series(d, order).map_err(usage)?;
    let non_integral: Vec<i64> = m
        .q_series
        .terms()
        .filter(|(_, c)| !c.is_gaussian_integer())
        .map(|(h, _)| h)
        .collect();
    let mut json = serde_json::to_value(&m).map_err(compute)?;
    json["integral"] = json!(non_integral.is_empty());
    json["non_integral"] = json!(non_integral);
    let mut out = Output::new(json);
    out.line(format!("multicover d={d}"));
    out.line(format!("closed form: {}", m.closed_form));
    out.line(format!("hbar: {}", m.hbar));
    out.line(format!("q: {}", q_text(&m.q_series)));
    out.line(format!("leading sign: {}  alternating: {}", m.sign, yes_no(m.alternating)));
    out.line(format!("integral: {}", yes_no(non_integral.is_empty())));
    if !non_integral.is_empty() {
        let marks: Vec<String> = non_integral.iter().map(|h| q_pow(*h)).collect();
        out.line(format!("non-integral at: {}", marks.join(" ")));
    }
    let rows = m
        .q_series
        .terms()
        .filter(|(_, c)| **c != G::from(0))
        .map(|(k, c)| {
            let mut r = term_row("q^(1/2)", k, c);
            r.push(c.is_gaussian_integer().to_string());
            r
        })
        .collect();
    Ok((out.csv(vec!["variable", "exponent", "re", "im", "integral"], rows), true))
}

pub fn check(inputs: &Inputs, path: &Path) -> Outcome {
    let input: CheckInput = inputs.read_json(path)?;
    let report = input.run().map_err(compute)?;
    let (r, s, g) = (report.is_rational(), report.is_symmetric(), report.gaussian_integral);
    let mut out = Output::new(serde_json::to_value(&report).map_err(compute)?);
    out.line(format!("rational={} symmetric={} integral={}", yes_no(r), yes_no(s), yes_no(g)));
    if let Some(f) = &report.rational {
        out.line(format!("closed form: {f}"));
    }
    let rows = vec![vec![r.to_string(), s.to_string(), g.to_string()]];
    Ok((out.csv(vec!["rational", "symmetric", "integral"], rows), r && s && g))
}

pub fn star(inputs: &Inputs, left: &Path, right: &Path, table: Option<&Path>) -> Outcome {
    let f: CorrElement<G> = inputs.read_json(left)?;
    let g: CorrElement<G> = inputs.read_json(right)?;
    let owned = load_table(inputs, table, 0)?;
    let table = owned.as_ref().unwrap_or_else(|| standard_table());
    let h = table.star(&f, &g).map_err(compute)?;
    let mut out = Output::new(serde_json::to_value(&h).map_err(compute)?);
    out.line(h.to_string());
    let rows = h
        .terms()
        .map(|(g, c)| vec![g.to_string(), lagcorr::scalars::format_rational(c.re()), lagcorr::scalars::format_rational(c.im())])
        .collect();
    Ok((out.csv(vec!["generator", "re", "im"], rows), true))
}

fn fock_output(e: &FockElement<G>) -> Outcome {
    let mut out = Output::new(serde_json::to_value(e).map_err(compute)?);
    let mut rows = Vec::new();
    for (k, labels, s) in e.terms() {
        out.line(format!("{} {} [{}]: {s}", k.beta, k.p, labels.join(" ")));
        for (j, c) in s.terms() {
            let mut r = vec![k.beta.to_string(), k.p.to_string(), labels.join(" ")];
            r.extend(term_row("hbar", j, c).into_iter().skip(1));
            rows.push(r);
        }
    }
    if e.is_zero() {
        out.line("0");
    }
    Ok((out.csv(vec!["beta", "contact", "labels", "exponent", "re", "im"], rows), true))
}

pub fn fock_unary(inputs: &Inputs, path: &Path, exp: bool) -> Outcome {
    let e: FockElement<G> = inputs.read_json(path)?;
    let r = if exp { e.exp() } else { e.log() };
    fock_output(&r.map_err(compute)?)
}

pub fn fock_mul(inputs: &Inputs, left: &Path, right: &Path, orbit: bool) -> Outcome {
    let a: FockElement<G> = inputs.read_json(left)?;
    let b: FockElement<G> = inputs.read_json(right)?;
    let mode = if orbit { MulMode::OrbitSum } else { MulMode::Binomial };
    fock_output(&a.mul_with(&b, mode).map_err(compute)?)
}
