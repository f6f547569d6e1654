//! Integral vectors, contact data and curve classes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalars::RationalText;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropicalError {
    #[error("the zero vector has no direction")]
    ZeroVector,
    #[error("vectors {0} and {1} do not span a rank-2 lattice")]
    DegeneratePair(IntVector, IntVector),
    #[error("vectors of dimensions {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("divisor label {0} is not primitive")]
    NotPrimitive(IntVector),
    #[error("contact multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("a nonzero curve class needs energy at least 1, got {0}")]
    EnergyBelowOne(String),
}

/// An integral vector in the tropical base.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Self(coords.into())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &Self) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// `v / |v|`.
    pub fn primitive(&self) -> Result<Self, TropicalError> {
        let k = divisibility(self)?;
        Ok(Self(self.0.iter().map(|c| c / k).collect()))
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<[i64; 3]> for IntVector {
    fn from(v: [i64; 3]) -> Self {
        Self(v.to_vec())
    }
}

impl From<[i64; 2]> for IntVector {
    fn from(v: [i64; 2]) -> Self {
        Self(v.to_vec())
    }
}

/// `|v|`: the gcd of the coordinates.
pub fn divisibility(v: &IntVector) -> Result<i64, TropicalError> {
    let g = v.0.iter().fold(0i64, |acc, &c| acc.gcd(&c));
    if g == 0 {
        Err(TropicalError::ZeroVector)
    } else {
        Ok(g)
    }
}

/// `|v₁∧v₂|`: the index of the lattice spanned by `v₁, v₂` in its
/// saturation, i.e. the gcd of the 2×2 minors.
pub fn vertex_multiplicity(v1: &IntVector, v2: &IntVector) -> Result<u64, TropicalError> {
    if v1.dim() != v2.dim() {
        return Err(TropicalError::DimensionMismatch(v1.dim(), v2.dim()));
    }
    let d = v1.dim();
    let mut g: i128 = 0;
    for a in 0..d {
        for b in a + 1..d {
            let m = v1.0[a] as i128 * v2.0[b] as i128 - v1.0[b] as i128 * v2.0[a] as i128;
            g = g.gcd(&m);
        }
    }
    if g == 0 {
        return Err(TropicalError::DegeneratePair(v1.clone(), v2.clone()));
    }
    debug_assert_eq!(
        smith_invariants(&[v1.0.clone(), v2.0.clone()]).iter().product::<i128>(),
        g
    );
    Ok(g as u64)
}

/// Nonzero invariant factors of an integer matrix, by elementary row and
/// column operations.
pub fn smith_invariants(rows: &[Vec<i64>]) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&c| c as i128).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry of the remaining block as pivot
        let Some((pr, pc)) = (t..nr)
            .flat_map(|r| (t..nc).map(move |c| (r, c)))
            .filter(|&(r, c)| m[r][c] != 0)
            .min_by_key(|&(r, c)| m[r][c].abs())
        else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..nr {
            let q = m[r][t] / m[t][t];
            for c in t..nc {
                m[r][c] -= q * m[t][c];
            }
            clean &= m[r][t] == 0;
        }
        for c in t + 1..nc {
            let q = m[t][c] / m[t][t];
            for r in t..nr {
                m[r][c] -= q * m[r][t];
            }
            clean &= m[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        if let Some(r) = (t + 1..nr).find(|&r| (t + 1..nc).any(|c| m[r][c] % m[t][t] != 0)) {
            for c in t..nc {
                m[t][c] += m[r][c];
            }
            continue;
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

/// Contact data: multiplicities `p(v)` of nonzero integral vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ContactData {
    support: BTreeMap<IntVector, u32>,
}

impl ContactData {
    pub fn new(entries: impl IntoIterator<Item = (IntVector, u32)>) -> Result<Self, TropicalError> {
        let mut support = BTreeMap::new();
        for (v, m) in entries {
            if v.is_zero() {
                return Err(TropicalError::ZeroVector);
            }
            if m == 0 {
                return Err(TropicalError::ZeroMultiplicity);
            }
            *support.entry(v).or_insert(0) += m;
        }
        Ok(Self { support })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(v: IntVector) -> Result<Self, TropicalError> {
        Self::new([(v, 1)])
    }

    pub fn get(&self, v: &IntVector) -> u32 {
        self.support.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntVector, u32)> {
        self.support.iter().map(|(v, &m)| (v, m))
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// `|p| = Σ_v p(v)`.
    pub fn size(&self) -> u32 {
        self.support.values().sum()
    }

    /// `|Aut p| = ∏_v p(v)!`.
    pub fn aut_p_order(&self) -> BigUint {
        self.support
            .values()
            .fold(BigUint::one(), |acc, &m| acc * (1..=m).fold(BigUint::one(), |f, k| f * k))
    }

    /// `∏_v |v|^{p(v)}`.
    pub fn stack_factor(&self) -> BigUint {
        self.support.iter().fold(BigUint::one(), |acc, (v, &m)| {
            let k = divisibility(v).expect("nonzero support") as u64;
            acc * BigUint::from(k).pow(m)
        })
    }

    /// `p(v)·(|v| − 1)` summed over the support.
    pub fn phase_exponent(&self) -> u64 {
        self.support
            .iter()
            .map(|(v, &m)| m as u64 * (divisibility(v).expect("nonzero support") as u64 - 1))
            .sum()
    }

    /// Pointwise sum of multiplicities.
    pub fn union(&self, other: &Self) -> Self {
        let mut support = self.support.clone();
        for (v, &m) in &other.support {
            *support.entry(v.clone()).or_insert(0) += m;
        }
        Self { support }
    }

    /// The contact vectors with repetition, in order.
    pub fn vectors(&self) -> Vec<IntVector> {
        self.support.iter().flat_map(|(v, &m)| std::iter::repeat_n(v.clone(), m as usize)).collect()
    }
}

impl fmt::Display for ContactData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, m)) in self.support.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ContactData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct ContactEntry {
    v: IntVector,
    mult: u32,
}

impl Serialize for ContactData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<ContactEntry> =
            self.support.iter().map(|(v, &mult)| ContactEntry { v: v.clone(), mult }).collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ContactData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<ContactEntry>::deserialize(d)?;
        ContactData::new(entries.into_iter().map(|e| (e.v, e.mult))).map_err(serde::de::Error::custom)
    }
}

/// A linear energy functional `E(β) = Σ_v w_v·(β·D_v)`.
pub type EnergyFunctional = BTreeMap<IntVector, BigRational>;

/// A curve class through its intersections with the divisors `D_v`,
/// labelled by primitive `v`, and its energy.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    intersections: BTreeMap<IntVector, i64>,
    energy: BigRational,
}

impl CurveClass {
    pub fn zero() -> Self {
        Self { intersections: BTreeMap::new(), energy: BigRational::zero() }
    }

    /// With the default energy `Σ_v max(β·D_v, 0)`.
    pub fn new(intersections: impl IntoIterator<Item = (IntVector, i64)>) -> Result<Self, TropicalError> {
        let map = collect_intersections(intersections)?;
        let energy = map.values().filter(|&&d| d > 0).map(|&d| BigRational::from_integer(d.into())).sum();
        Self::checked(map, energy)
    }

    pub fn with_energy(
        intersections: impl IntoIterator<Item = (IntVector, i64)>,
        energy: BigRational,
    ) -> Result<Self, TropicalError> {
        Self::checked(collect_intersections(intersections)?, energy)
    }

    pub fn with_functional(
        intersections: impl IntoIterator<Item = (IntVector, i64)>,
        functional: &EnergyFunctional,
    ) -> Result<Self, TropicalError> {
        let map = collect_intersections(intersections)?;
        let energy = map
            .iter()
            .map(|(v, &d)| functional.get(v).cloned().unwrap_or_else(BigRational::zero) * BigInt::from(d))
            .sum();
        Self::checked(map, energy)
    }

    fn checked(intersections: BTreeMap<IntVector, i64>, energy: BigRational) -> Result<Self, TropicalError> {
        let c = Self { intersections, energy };
        if !c.is_zero() && c.energy < BigRational::one() {
            return Err(TropicalError::EnergyBelowOne(crate::scalars::format_rational(&c.energy)));
        }
        Ok(c)
    }

    /// The zero class: no intersections and no energy.
    pub fn is_zero(&self) -> bool {
        self.intersections.is_empty() && self.energy.is_zero()
    }

    pub fn energy(&self) -> &BigRational {
        &self.energy
    }

    /// `β·D_v`, zero for labels not listed.
    pub fn dot(&self, v: &IntVector) -> i64 {
        self.intersections.get(v).copied().unwrap_or(0)
    }

    pub fn intersections(&self) -> impl Iterator<Item = (&IntVector, i64)> {
        self.intersections.iter().map(|(v, &d)| (v, d))
    }

    /// Intersections and energies add.
    pub fn add(&self, other: &Self) -> Self {
        let mut intersections = self.intersections.clone();
        for (v, &d) in &other.intersections {
            let e = intersections.entry(v.clone()).or_insert(0);
            *e += d;
            if *e == 0 {
                intersections.remove(v);
            }
        }
        Self { intersections, energy: &self.energy + &other.energy }
    }
}

fn collect_intersections(
    entries: impl IntoIterator<Item = (IntVector, i64)>,
) -> Result<BTreeMap<IntVector, i64>, TropicalError> {
    let mut map = BTreeMap::new();
    for (v, d) in entries {
        if divisibility(&v)? != 1 {
            return Err(TropicalError::NotPrimitive(v));
        }
        *map.entry(v).or_insert(0) += d;
    }
    map.retain(|_, d| *d != 0);
    Ok(map)
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "β[")?;
        for (k, (v, d)) in self.intersections.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "D{v}:{d}")?;
        }
        write!(f, "; E={}]", crate::scalars::format_rational(&self.energy))
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct IntersectionEntry {
    v: IntVector,
    dot: i64,
}

#[derive(Serialize, Deserialize)]
struct CurveClassDoc {
    intersections: Vec<IntersectionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    energy: Option<RationalText>,
}

impl Serialize for CurveClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CurveClassDoc {
            intersections: self
                .intersections
                .iter()
                .map(|(v, &dot)| IntersectionEntry { v: v.clone(), dot })
                .collect(),
            energy: Some(RationalText(self.energy.clone())),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = CurveClassDoc::deserialize(d)?;
        let entries = doc.intersections.into_iter().map(|e| (e.v, e.dot));
        match doc.energy {
            Some(e) => CurveClass::with_energy(entries, e.0),
            None => CurveClass::new(entries),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// How contact orders enter the balancing condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactConvention {
    /// `Σ_k p(kv) = β·D_v`.
    #[default]
    Verbatim,
    /// `Σ_k k·p(kv) = β·D_v`.
    Weighted,
}

/// Whether `p` meets every divisor `D_v` as `β` requires.
pub fn compatible(beta: &CurveClass, p: &ContactData, convention: ContactConvention) -> bool {
    let mut totals: BTreeMap<IntVector, i64> = BTreeMap::new();
    for (u, m) in p.iter() {
        let k = divisibility(u).expect("nonzero support");
        let w = match convention {
            ContactConvention::Verbatim => 1,
            ContactConvention::Weighted => k,
        };
        *totals.entry(u.primitive().expect("nonzero support")).or_insert(0) += w * m as i64;
    }
    let labels: BTreeSet<IntVector> = totals.keys().chain(beta.intersections.keys()).cloned().collect();
    labels.iter().all(|v| totals.get(v).copied().unwrap_or(0) == beta.dot(v))
}

/// Whether the signed contact vectors sum to zero.
pub fn is_balanced(p: &ContactData) -> bool {
    let mut sum: Option<IntVector> = None;
    for v in p.vectors() {
        sum = Some(match sum {
            None => v,
            Some(s) => s.add(&v),
        });
    }
    sum.is_none_or(|s| s.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: [i64; 3]) -> IntVector {
        IntVector::from(c)
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divisibility(&v([2, 4, 6])), Ok(2));
        assert_eq!(divisibility(&v([1, 0, 0])), Ok(1));
        assert_eq!(divisibility(&v([0, 0, 5])), Ok(5));
        assert_eq!(divisibility(&v([0, 0, 0])), Err(TropicalError::ZeroVector));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(vertex_multiplicity(&v([1, 0, 0]), &v([0, 1, 0])), Ok(1));
        assert_eq!(vertex_multiplicity(&v([1, 1, 0]), &v([1, -1, 0])), Ok(2));
        assert_eq!(vertex_multiplicity(&v([2, 0, 0]), &v([0, 3, 0])), Ok(6));
        assert!(matches!(
            vertex_multiplicity(&v([1, 2, 3]), &v([-2, -4, -6])),
            Err(TropicalError::DegeneratePair(..))
        ));
    }

    #[test]
    fn contact_statistics() {
        let p = ContactData::new([(v([1, 0, 0]), 2)]).unwrap();
        assert_eq!((p.aut_p_order(), p.stack_factor(), p.size()), (2u32.into(), 1u32.into(), 2));
        let p = ContactData::new([(v([2, 0, 0]), 1), (v([0, 3, 0]), 1)]).unwrap();
        assert_eq!((p.aut_p_order(), p.stack_factor(), p.size()), (1u32.into(), 6u32.into(), 2));
        let p = ContactData::empty();
        assert_eq!((p.aut_p_order(), p.stack_factor(), p.size()), (1u32.into(), 1u32.into(), 0));
    }

    #[test]
    fn compatibility_examples() {
        let beta = CurveClass::new([(v([1, 0, 0]), 3)]).unwrap();
        let p = ContactData::new([(v([1, 0, 0]), 1), (v([2, 0, 0]), 1)]).unwrap();
        assert!(!compatible(&beta, &p, ContactConvention::Verbatim));
        assert!(compatible(&beta, &p, ContactConvention::Weighted));
        assert!(compatible(&CurveClass::zero(), &ContactData::empty(), ContactConvention::Verbatim));
        let beta = CurveClass::new([(v([0, 1, 0]), 2)]).unwrap();
        let p = ContactData::new([(v([0, 2, 0]), 1)]).unwrap();
        assert!(!compatible(&beta, &p, ContactConvention::Verbatim));
        assert!(compatible(&beta, &p, ContactConvention::Weighted));
    }

    #[test]
    fn energy_rules() {
        assert!(CurveClass::zero().is_zero());
        let b = CurveClass::new([(v([1, 0, 0]), 2), (v([0, 1, 0]), -1)]).unwrap();
        assert_eq!(b.energy(), &BigRational::from_integer(2.into()));
        assert!(matches!(CurveClass::new([(v([1, 0, 0]), -1)]), Err(TropicalError::EnergyBelowOne(_))));
        assert!(matches!(CurveClass::new([(v([2, 0, 0]), 1)]), Err(TropicalError::NotPrimitive(_))));
        let half = BigRational::new(1.into(), 2.into());
        let f: EnergyFunctional = [(v([1, 0, 0]), half)].into_iter().collect();
        assert!(CurveClass::with_functional([(v([1, 0, 0]), 1)], &f).is_err());
        assert_eq!(
            CurveClass::with_functional([(v([1, 0, 0]), 4)], &f).unwrap().energy(),
            &BigRational::from_integer(2.into())
        );
        let sum = b.add(&CurveClass::new([(v([0, 1, 0]), 1)]).unwrap());
        assert_eq!(sum.dot(&v([0, 1, 0])), 0);
        assert_eq!(sum.energy(), &BigRational::from_integer(3.into()));
    }

    #[test]
    fn json_shapes() {
        let p = ContactData::new([(v([2, 0, 0]), 1)]).unwrap();
        assert_eq!(serde_json::to_value(&p).unwrap(), serde_json::json!([{"v": [2, 0, 0], "mult": 1}]));
        let b: CurveClass =
            serde_json::from_value(serde_json::json!({"intersections": [{"v": [1, 0, 0], "dot": 2}]})).unwrap();
        assert_eq!(b.energy(), &BigRational::from_integer(2.into()));
        let back: CurveClass = serde_json::from_value(serde_json::to_value(&b).unwrap()).unwrap();
        assert_eq!(back, b);
    }
}
