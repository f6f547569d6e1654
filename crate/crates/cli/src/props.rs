//! Seeded randomized suites: sine-algebra Jacobi and antisymmetry, and
//! `log ∘ exp = id` in the Fock ring.

use std::collections::BTreeMap;

use lagcorr::fockring::FockElement;
use lagcorr::gwdt::{SineCombination, SineGenerator};
use lagcorr::scalars::{GaussianRational, HSeries, EXACT};
use lagcorr::tropical::{ContactData, CurveClass, IntVector};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::output::Output;
use crate::{Failure, Outcome};

type G = GaussianRational;

fn generator(rng: &mut ChaCha8Rng, level: [i64; 2]) -> SineGenerator {
    if rng.gen_ratio(1, 8) {
        SineGenerator::central(level)
    } else {
        SineGenerator::w([rng.gen_range(-6..=6), rng.gen_range(-6..=6)], level)
    }
}

fn w_vector(g: &SineGenerator) -> Option<[i64; 2]> {
    match g {
        SineGenerator::W { v, .. } => Some([v.0[0], v.0[1]]),
        SineGenerator::Central { .. } => None,
    }
}

fn bracket(a: &SineCombination, b: &SineCombination) -> Result<SineCombination, Failure> {
    a.bracket(b).map_err(|e| Failure::Compute(e.to_string()))
}

/// Returns (Jacobi holds, antisymmetry holds, bracket reached the centre).
fn sine_case(rng: &mut ChaCha8Rng) -> Result<(bool, bool, bool), Failure> {
    let level = [rng.gen_range(-6..=6), rng.gen_range(-6..=6)];
    let a = generator(rng, level);
    let b = generator(rng, level);
    let c = match (w_vector(&a), w_vector(&b)) {
        (Some(x), Some(y)) if rng.gen_ratio(1, 3) => SineGenerator::w([-x[0] - y[0], -x[1] - y[1]], level),
        _ => generator(rng, level),
    };
    let (a, b, c) = (SineCombination::generator(a), SineCombination::generator(b), SineCombination::generator(c));
    let bc = bracket(&b, &c)?;
    let ca = bracket(&c, &a)?;
    let ab = bracket(&a, &b)?;
    let nested = [bracket(&a, &bc)?, bracket(&b, &ca)?, bracket(&c, &ab)?];
    let jac = nested[0].add(&nested[1]).add(&nested[2]);
    let anti = ab.add(&bracket(&b, &a)?).is_zero();
    let central = [&ab, &bc, &ca].into_iter().chain(&nested).any(|x| x.terms().any(|(g, _)| matches!(g, SineGenerator::Central { .. })));
    Ok((jac.is_zero(), anti, central))
}

const DIRECTIONS: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [-1, -1, 0]];

fn random_fock(rng: &mut ChaCha8Rng) -> Result<FockElement<G>, Failure> {
    let bad = |e: &dyn std::fmt::Display| Failure::Compute(e.to_string());
    let int = |n: i64| BigRational::from_integer(n.into());
    let mut e = FockElement::zero(int(3), 4);
    for _ in 0..rng.gen_range(1..=3) {
        let mut entries = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            let d = DIRECTIONS[rng.gen_range(0..DIRECTIONS.len())];
            let k = rng.gen_range(1..=2);
            entries.push((IntVector::new(d.iter().map(|c| c * k).collect::<Vec<_>>()), 1));
        }
        let p = ContactData::new(entries).map_err(|e| bad(&e))?;
        let mut dots: BTreeMap<IntVector, i64> = BTreeMap::new();
        for v in p.vectors() {
            *dots.entry(v.primitive().map_err(|e| bad(&e))?).or_default() += 1;
        }
        let beta = CurveClass::with_energy(dots, int(rng.gen_range(1..=2))).map_err(|e| bad(&e))?;
        let mut s = HSeries::zero_to(EXACT);
        for _ in 0..rng.gen_range(1..=2) {
            s.add_term(rng.gen_range(-1..=2), G::from_ints(rng.gen_range(-3..=3), rng.gen_range(-2..=2)));
        }
        let label = ["V", "W"][rng.gen_range(0..2)].to_string();
        e.add_term(beta, p, vec![label], s).map_err(|e| bad(&e))?;
    }
    Ok(e)
}

pub fn run(seed: u64, cases: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut jacobi, mut anti, mut central) = (0usize, 0usize, 0usize);
    for _ in 0..cases {
        let (j, a, c) = sine_case(&mut rng)?;
        jacobi += j as usize;
        anti += a as usize;
        central += c as usize;
    }
    let fock_cases = cases.div_ceil(10);
    let mut roundtrip = 0usize;
    for _ in 0..fock_cases {
        let e = random_fock(&mut rng)?;
        let back = e.exp().and_then(|z| z.log()).map_err(|e| Failure::Compute(e.to_string()))?;
        roundtrip += back.agrees_with(&e) as usize;
    }
    let pass = jacobi == cases && anti == cases && roundtrip == fock_cases;
    let mut out = Output::new(json!({
        "seed": seed,
        "pass": pass,
        "sine": { "cases": cases, "jacobi": jacobi, "antisymmetry": anti, "central_hits": central },
        "fock": { "cases": fock_cases, "log_exp_roundtrip": roundtrip },
    }));
    out.line(format!("seed {seed}"));
    out.line(format!("jacobi        {jacobi}/{cases} ({central} reaching the central term)"));
    out.line(format!("antisymmetry  {anti}/{cases}"));
    out.line(format!("log(exp(x))=x {roundtrip}/{fock_cases}"));
    out.line(if pass { "props: pass" } else { "props: FAIL" });
    let rows = vec![
        vec!["jacobi".into(), jacobi.to_string(), cases.to_string()],
        vec!["antisymmetry".into(), anti.to_string(), cases.to_string()],
        vec!["log_exp_roundtrip".into(), roundtrip.to_string(), fock_cases.to_string()],
    ];
    Ok((out.csv(vec!["property", "passed", "cases"], rows), pass))
}
