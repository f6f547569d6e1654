use std::collections::BTreeMap;

use lagcorr::fockring::FockElement;
use lagcorr::scalars::{GaussianRational, HSeries, EXACT};
use lagcorr::tropical::{ContactData, CurveClass, IntVector};
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub type G = GaussianRational;

pub type Fock = FockElement<G>;

pub const DIRECTIONS: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [-1, -1, 0]];

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// One random connected term: contact data along a few directions, the
/// class it determines, a label and an exact ħ-polynomial.
pub fn random_term(rng: &mut ChaCha8Rng, min_exp: i64, allow_empty: bool) -> (CurveClass, ContactData, String, HSeries<G>) {
    let mut entries = Vec::new();
    let slots = rng.gen_range(if allow_empty { 0 } else { 1 }..=2);
    for _ in 0..slots {
        let d = DIRECTIONS[rng.gen_range(0..DIRECTIONS.len())];
        let k = rng.gen_range(1..=2);
        entries.push((IntVector(d.iter().map(|c| c * k).collect()), 1));
    }
    let p = ContactData::new(entries).unwrap();
    let mut dots: BTreeMap<IntVector, i64> = BTreeMap::new();
    for v in p.vectors() {
        *dots.entry(v.primitive().unwrap()).or_default() += 1;
    }
    let energy = rat(rng.gen_range(1..=2));
    let beta = CurveClass::with_energy(dots, energy).unwrap();
    let label = ["V", "W"][rng.gen_range(0..2)].to_string();
    let mut s = HSeries::zero_to(EXACT);
    for _ in 0..rng.gen_range(1..=2) {
        let c = G::from_ints(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
        s.add_term(rng.gen_range(min_exp..=min_exp + 3), c);
    }
    (beta, p, label, s)
}

pub fn random_element(seed: u64, terms: usize, cutoff: i64, order: i64, min_exp: i64) -> Fock {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Fock::zero(rat(cutoff), order);
    for _ in 0..terms {
        let (b, p, l, s) = random_term(&mut rng, min_exp, true);
        e.add_term(b, p, vec![l], s).unwrap();
    }
    e
}

pub type Term = (CurveClass, ContactData, String, HSeries<G>);

/// Set partitions of `0..n`, as block lists.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(k: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(k);
            go(k + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![k]);
        go(k + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// The disconnected series, by distributing labelled contact slots among
/// connected pieces in every possible way.
pub fn disconnected_oracle(terms: &[Term], cutoff: i64) -> BTreeMap<(CurveClass, ContactData, Vec<String>), HSeries<G>> {
    // every contact data reachable as a union of at most `cutoff` pieces
    let mut targets: Vec<ContactData> = vec![ContactData::empty()];
    for _ in 0..cutoff {
        let mut next = targets.clone();
        for t in &targets {
            for (_, p, _, _) in terms {
                let u = t.union(p);
                if !next.contains(&u) {
                    next.push(u);
                }
            }
        }
        targets = next;
    }
    let mut out: BTreeMap<(CurveClass, ContactData, Vec<String>), HSeries<G>> = BTreeMap::new();
    for r in targets.iter().filter(|r| !r.is_empty()) {
        let slots = r.vectors();
        for blocks in set_partitions(slots.len()) {
            let shapes: Vec<ContactData> = blocks
                .iter()
                .map(|b| ContactData::new(b.iter().map(|&s| (slots[s].clone(), 1))).unwrap())
                .collect();
            // assign a connected term to every block
            let mut choice = vec![0usize; shapes.len()];
            'assign: loop {
                if shapes.iter().zip(&choice).all(|(s, &c)| terms[c].1 == *s) {
                    let mut beta = CurveClass::zero();
                    let mut labels = Vec::new();
                    let mut coeff = HSeries::constant(G::from(1));
                    for &c in &choice {
                        beta = beta.add(&terms[c].0);
                        labels.push(terms[c].2.clone());
                        coeff = &coeff * &terms[c].3;
                    }
                    labels.sort();
                    if beta.energy() <= &rat(cutoff) {
                        let e = out.entry((beta, r.clone(), labels)).or_insert_with(|| HSeries::zero_to(EXACT));
                        *e = &*e + &coeff;
                    }
                }
                let mut b = 0;
                loop {
                    if b == choice.len() {
                        break 'assign;
                    }
                    choice[b] += 1;
                    if choice[b] < terms.len() {
                        break;
                    }
                    choice[b] = 0;
                    b += 1;
                }
            }
        }
    }
    out.retain(|_, s| s.terms().next().is_some());
    out
}
