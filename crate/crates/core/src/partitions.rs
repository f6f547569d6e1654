//! Integer partitions and the statistics the correspondence algebra uses.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partitions of different weights: {0} vs {1}")]
    MismatchedWeight(u32, u32),
    #[error("partition parts must be positive")]
    ZeroPart,
}

/// A partition, stored with parts in weakly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Panics on a zero part. For literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("positive parts")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `(1^n)`.
    pub fn ones(n: u32) -> Self {
        Self { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicities `m_i` of each part value, ascending by value.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `∏_k μ_k`.
    pub fn part_product(&self) -> BigUint {
        self.parts.iter().fold(BigUint::one(), |acc, &p| acc * p)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `∏_i m_i!`.
pub fn aut_order(mu: &Partition) -> BigUint {
    mu.multiplicities().iter().fold(BigUint::one(), |acc, &(_, m)| acc * factorial(m))
}

/// `|Aut μ|·∏_k μ_k`, the centralizer order of a permutation of cycle type μ.
pub fn z_mu(mu: &Partition) -> BigUint {
    aut_order(mu) * mu.part_product()
}

/// `(−1)^{Σ_k(μ_k−1)}`.
pub fn cycle_sign(mu: &Partition) -> i32 {
    if (mu.n() as usize - mu.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

thread_local! {
    static JOIN_MEMO: RefCell<HashMap<(Partition, Partition), bool>> = RefCell::new(HashMap::new());
}

/// Whether `coarse` arises from `fine` by summing blocks of its parts.
pub fn join_leq(coarse: &Partition, fine: &Partition) -> Result<bool, PartitionError> {
    if coarse.n() != fine.n() {
        return Err(PartitionError::MismatchedWeight(coarse.n(), fine.n()));
    }
    if coarse.len() > fine.len() {
        return Ok(false);
    }
    let key = (coarse.clone(), fine.clone());
    if let Some(hit) = JOIN_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return Ok(hit);
    }
    let mut bins: Vec<u32> = coarse.parts.clone();
    let found = pack(&fine.parts, 0, &mut bins);
    JOIN_MEMO.with(|m| m.borrow_mut().insert(key, found));
    Ok(found)
}

// Place the parts of `fine` (largest first) into bins of the coarse sizes.
fn pack(items: &[u32], k: usize, room: &mut [u32]) -> bool {
    if k == items.len() {
        return room.iter().all(|&r| r == 0);
    }
    let item = items[k];
    for b in 0..room.len() {
        if room[b] < item || room[..b].contains(&room[b]) {
            continue;
        }
        room[b] -= item;
        let ok = pack(items, k + 1, room);
        room[b] += item;
        if ok {
            return true;
        }
    }
    false
}

/// All partitions of `n`, reverse-lexicographic: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(aut_order(&Partition::of(&[1, 1, 1])), 6u32.into());
        assert_eq!(aut_order(&Partition::of(&[3, 2, 1])), 1u32.into());
        assert_eq!(aut_order(&Partition::empty()), 1u32.into());
        assert_eq!(z_mu(&Partition::of(&[2, 1])), 2u32.into());
        assert_eq!(cycle_sign(&Partition::of(&[2])), -1);
        assert_eq!(cycle_sign(&Partition::of(&[3, 1])), 1);
        assert_eq!(cycle_sign(&Partition::ones(4)), 1);
    }

    #[test]
    fn join_examples() {
        let p = Partition::of;
        assert!(join_leq(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(join_leq(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap());
        assert!(!join_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert_eq!(join_leq(&p(&[3]), &p(&[1])), Err(PartitionError::MismatchedWeight(3, 1)));
    }

    #[test]
    fn enumeration_order() {
        let ps = enumerate_partitions(4);
        let parts: Vec<&[u32]> = ps.iter().map(|p| p.parts()).collect();
        assert_eq!(parts, vec![&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]);
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn sorted_storage_and_json() {
        let p = Partition::new(vec![1, 3, 1]).unwrap();
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1,1]");
        let q: Partition = serde_json::from_str("[1,2]").unwrap();
        assert_eq!(q, Partition::of(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[0,2]").is_err());
    }
}
