use lagcorr::gwdt::{SineCombination, SineGenerator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn generator(rng: &mut ChaCha8Rng, level: [i64; 2]) -> SineGenerator {
    if rng.gen_ratio(1, 8) {
        SineGenerator::central(level)
    } else {
        SineGenerator::w([rng.gen_range(-6..=6), rng.gen_range(-6..=6)], level)
    }
}

pub fn combo(g: &SineGenerator) -> SineCombination {
    SineCombination::generator(g.clone())
}

pub fn vector(g: &SineGenerator) -> Option<[i64; 2]> {
    match g {
        SineGenerator::W { v, .. } => Some([v.0[0], v.0[1]]),
        SineGenerator::Central { .. } => None,
    }
}

/// Triples where a third of the `c` are chosen as `−a−b`, so that nested
/// brackets reach the central term.
pub fn triple(seed: u64) -> (SineGenerator, SineGenerator, SineGenerator) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let level = [rng.gen_range(-6..=6), rng.gen_range(-6..=6)];
    let a = generator(&mut rng, level);
    let b = generator(&mut rng, level);
    let c = match (vector(&a), vector(&b)) {
        (Some(x), Some(y)) if rng.gen_ratio(1, 3) => SineGenerator::w([-x[0] - y[0], -x[1] - y[1]], level),
        _ => generator(&mut rng, level),
    };
    (a, b, c)
}

pub fn jacobi(a: &SineGenerator, b: &SineGenerator, c: &SineGenerator) -> SineCombination {
    let (a, b, c) = (combo(a), combo(b), combo(c));
    let x = a.bracket(&b.bracket(&c).unwrap()).unwrap();
    let y = b.bracket(&c.bracket(&a).unwrap()).unwrap();
    let z = c.bracket(&a.bracket(&b).unwrap()).unwrap();
    x.add(&y).add(&z)
}
