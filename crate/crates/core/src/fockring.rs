//! The generating-function ring: terms graded by curve class and contact
//! data, with ħ-series coefficients on multisets of lagrangian labels.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{GaussianRational, GaussianScalar, HSeries, RationalText, Ring};
use crate::tropical::{compatible, ContactConvention, ContactData, CurveClass, IntVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("truncations differ: energy {0} vs {1}, ħ-order {2} vs {3}")]
    CutoffMismatch(String, String, i64, i64),
    #[error("exp needs a series without a zero-class term")]
    ConstantTermInExp,
    #[error("log needs constant term exactly 1")]
    NonUnitalLog,
    #[error("contact data {p} does not meet the divisors of {beta}")]
    IncompatibleContact { beta: String, p: String },
    #[error("zero-class terms appear only in the unit")]
    ZeroClassTerm,
    #[error("malformed element: {0}")]
    Malformed(String),
}

/// A sorted multiset of lagrangian labels.
pub type Labels = Vec<String>;

/// The grading of a term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockKey {
    pub beta: CurveClass,
    pub p: ContactData,
}

/// How the symmetrization over `Aut r` is evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MulMode {
    /// `∏_v C(r(v), p(v))`.
    #[default]
    Binomial,
    /// The literal orbit sum over `Aut r`; for cross-checks only.
    OrbitSum,
}

/// An element of the completed monoid ring, truncated at an energy and an
/// ħ-order.
#[derive(Clone, PartialEq)]
pub struct FockElement<F> {
    terms: BTreeMap<FockKey, BTreeMap<Labels, HSeries<F>>>,
    energy_cutoff: BigRational,
    hbar_order: i64,
}

impl<F: Ring> FockElement<F> {
    pub fn zero(energy_cutoff: BigRational, hbar_order: i64) -> Self {
        Self { terms: BTreeMap::new(), energy_cutoff, hbar_order }
    }

    pub fn unit(energy_cutoff: BigRational, hbar_order: i64) -> Self {
        let mut out = Self::zero(energy_cutoff, hbar_order);
        out.push(
            FockKey { beta: CurveClass::zero(), p: ContactData::empty() },
            Vec::new(),
            HSeries::constant(F::one()),
        );
        out
    }

    pub fn energy_cutoff(&self) -> &BigRational {
        &self.energy_cutoff
    }

    pub fn hbar_order(&self) -> i64 {
        self.hbar_order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (key, labels) entries.
    pub fn len(&self) -> usize {
        self.terms.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockKey, &Labels, &HSeries<F>)> {
        self.terms.iter().flat_map(|(k, m)| m.iter().map(move |(l, s)| (k, l, s)))
    }

    pub fn coeff(&self, key: &FockKey, labels: &[String]) -> Option<&HSeries<F>> {
        self.terms.get(key).and_then(|m| m.get(labels))
    }

    /// Adds a term. Labels are sorted; classes above the energy cutoff are
    /// dropped; nonzero zero-class terms other than the unit are rejected.
    pub fn add_term(
        &mut self,
        beta: CurveClass,
        p: ContactData,
        mut labels: Labels,
        coeff: HSeries<F>,
    ) -> Result<(), FockError> {
        if beta.is_zero() && !(p.is_empty() && labels.is_empty()) {
            return Err(FockError::ZeroClassTerm);
        }
        labels.sort();
        self.push(FockKey { beta, p }, labels, coeff);
        Ok(())
    }

    fn push(&mut self, key: FockKey, labels: Labels, coeff: HSeries<F>) {
        if key.beta.energy() > &self.energy_cutoff {
            return;
        }
        let coeff = clip(coeff, self.hbar_order);
        let slot = self.terms.entry(key.clone()).or_default();
        let sum = match slot.remove(&labels) {
            Some(old) => &old + &coeff,
            None => coeff,
        };
        if !is_dead(&sum) {
            slot.insert(labels, sum);
        }
        if slot.is_empty() {
            self.terms.remove(&key);
        }
    }

    fn check_cutoffs(&self, other: &Self) -> Result<(), FockError> {
        if self.energy_cutoff != other.energy_cutoff || self.hbar_order != other.hbar_order {
            return Err(FockError::CutoffMismatch(
                crate::scalars::format_rational(&self.energy_cutoff),
                crate::scalars::format_rational(&other.energy_cutoff),
                self.hbar_order,
                other.hbar_order,
            ));
        }
        Ok(())
    }

    /// Re-truncates to lower cutoffs.
    pub fn restrict(&self, energy_cutoff: BigRational, hbar_order: i64) -> Self {
        let mut out = Self::zero(energy_cutoff, hbar_order);
        for (k, l, s) in self.terms() {
            out.push(k.clone(), l.clone(), s.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, FockError> {
        self.check_cutoffs(other)?;
        let mut out = self.clone();
        for (k, l, s) in other.terms() {
            out.push(k.clone(), l.clone(), s.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.energy_cutoff.clone(), self.hbar_order);
        for (k, l, s) in self.terms() {
            out.push(k.clone(), l.clone(), s.scale(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FockError> {
        self.mul_with(other, MulMode::Binomial)
    }

    /// `(ab)_{β,r} = Σ_{β₁+β₂=β} Σ_{p+q=r} ∏_v C(r(v), p(v)) a_{β₁,p} b_{β₂,q}`.
    pub fn mul_with(&self, other: &Self, mode: MulMode) -> Result<Self, FockError> {
        self.check_cutoffs(other)?;
        let mut out = Self::zero(self.energy_cutoff.clone(), self.hbar_order);
        for (ka, ma) in &self.terms {
            for (kb, mb) in &other.terms {
                let energy = ka.beta.energy() + kb.beta.energy();
                if energy > self.energy_cutoff {
                    continue;
                }
                let r = ka.p.union(&kb.p);
                let factor = match mode {
                    MulMode::Binomial => binomial_factor(&ka.p, &kb.p),
                    MulMode::OrbitSum => orbit_sum_factor(&ka.p, &kb.p),
                };
                let factor = F::from_rational(&BigRational::from_integer(BigInt::from(factor)));
                let key = FockKey { beta: ka.beta.add(&kb.beta), p: r };
                for (la, sa) in ma {
                    for (lb, sb) in mb {
                        let mut labels: Labels = la.iter().chain(lb).cloned().collect();
                        labels.sort();
                        out.push(key.clone(), labels, (sa * sb).scale(&factor));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The zero-class, empty-contact coefficient.
    fn constant_part(&self) -> Option<&HSeries<F>> {
        self.coeff(&FockKey { beta: CurveClass::zero(), p: ContactData::empty() }, &[])
    }

    fn has_zero_class(&self) -> bool {
        self.terms.keys().any(|k| k.beta.is_zero())
    }

    /// `Σ_n η^n / n!`, finite because every factor has energy at least 1.
    pub fn exp(&self) -> Result<Self, FockError> {
        if self.has_zero_class() {
            return Err(FockError::ConstantTermInExp);
        }
        let mut out = Self::unit(self.energy_cutoff.clone(), self.hbar_order);
        let mut power = out.clone();
        for n in 1u64.. {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            let inv = F::from_rational(&BigRational::new(BigInt::one(), factorial(n).into()));
            out = out.add(&power.scale(&inv))?;
        }
        Ok(out)
    }

    /// `Σ_{k≥1} (−1)^{k+1} (Z − 1)^k / k`, inverse to [`FockElement::exp`].
    pub fn log(&self) -> Result<Self, FockError> {
        let unit = Self::unit(self.energy_cutoff.clone(), self.hbar_order);
        let one = HSeries::constant(F::one());
        match self.constant_part() {
            Some(c) if *c == clip(one, self.hbar_order) => {}
            _ => return Err(FockError::NonUnitalLog),
        }
        let x = self.add(&unit.neg())?;
        if x.has_zero_class() {
            return Err(FockError::NonUnitalLog);
        }
        let mut out = Self::zero(self.energy_cutoff.clone(), self.hbar_order);
        let mut power = unit;
        for k in 1i64.. {
            power = power.mul(&x)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let c = F::from_rational(&BigRational::new(BigInt::from(sign), BigInt::from(k)));
            out = out.add(&power.scale(&c))?;
        }
        Ok(out)
    }

    /// Equality on the ħ-window known to both sides.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<(&FockKey, &Labels)> =
            self.terms().chain(other.terms()).map(|(k, l, _)| (k, l)).collect();
        keys.into_iter().all(|(k, l)| match (self.coeff(k, l), other.coeff(k, l)) {
            (Some(a), Some(b)) => a.agrees_with(b),
            (Some(a), None) | (None, Some(a)) => a.agrees_with(&HSeries::zero_to(a.order())),
            (None, None) => true,
        })
    }
}

/// Terms past the ħ-order are forgotten; an exact series with nothing to
/// forget stays exact.
fn clip<F: Ring>(s: HSeries<F>, order: i64) -> HSeries<F> {
    let beyond = s.terms().any(|(k, _)| k > order);
    if s.order() > order && (beyond || !s.is_exact()) {
        s.truncate(order)
    } else {
        s
    }
}

/// A coefficient carrying no information: zero and exact, or zero with
/// nothing known below the valuation bound.
fn is_dead<F: Ring>(s: &HSeries<F>) -> bool {
    s.terms().next().is_none()
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial(n: u32, k: u32) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, j| acc * (n - j) / (j + 1))
}

/// `∏_v C(r(v), p(v))` with `r = p + q`.
pub fn binomial_factor(p: &ContactData, q: &ContactData) -> BigUint {
    let r = p.union(q);
    r.iter().fold(BigUint::one(), |acc, (v, m)| acc * binomial(m, p.get(v)))
}

/// `(1/|Aut p||Aut q|)·#{σ ∈ Aut r}` computed by walking the orbit of the
/// slot placement under every σ, and checking each placement is hit
/// equally often.
pub fn orbit_sum_factor(p: &ContactData, q: &ContactData) -> BigUint {
    let r = p.union(q);
    let blocks: Vec<(u32, u32)> = r.iter().map(|(v, m)| (m, p.get(v))).collect();
    let mut counts: BTreeMap<Vec<Vec<usize>>, u64> = BTreeMap::new();
    let perms: Vec<Vec<Vec<usize>>> = blocks.iter().map(|&(m, _)| permutations(m as usize)).collect();
    let mut choice = vec![0usize; blocks.len()];
    loop {
        // image of the first p(v) slots of each block under σ
        let placement: Vec<Vec<usize>> = blocks
            .iter()
            .enumerate()
            .map(|(b, &(_, from_p))| {
                let mut img: Vec<usize> = perms[b][choice[b]][..from_p as usize].to_vec();
                img.sort_unstable();
                img
            })
            .collect();
        *counts.entry(placement).or_insert(0) += 1;
        let mut b = 0;
        loop {
            if b == blocks.len() {
                let stab = p.aut_p_order() * q.aut_p_order();
                let stab = stab.to_u64().expect("small contact data");
                assert!(counts.values().all(|&c| c == stab), "orbit sum of an invariant class");
                return BigUint::from(counts.len());
            }
            choice[b] += 1;
            if choice[b] < perms[b].len() {
                break;
            }
            choice[b] = 0;
            b += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// One connected contribution `η_{g,β}` on a lagrangian label.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Contribution {
    pub genus: u32,
    pub beta: CurveClass,
    pub p: ContactData,
    pub label: String,
    pub coeff: GaussianRational,
}

/// `η = Σ ħ^{2g−2+|p|}·∏_v |v|^{p(v)}·coeff·t^β`.
pub fn assemble_eta<F: GaussianScalar>(
    contributions: &[Contribution],
    convention: ContactConvention,
    energy_cutoff: BigRational,
    hbar_order: i64,
) -> Result<FockElement<F>, FockError> {
    let mut out = FockElement::zero(energy_cutoff, hbar_order);
    for c in contributions {
        if !compatible(&c.beta, &c.p, convention) {
            return Err(FockError::IncompatibleContact { beta: c.beta.to_string(), p: c.p.to_string() });
        }
        if c.beta.is_zero() {
            return Err(FockError::ZeroClassTerm);
        }
        let exponent = 2 * c.genus as i64 - 2 + c.p.size() as i64;
        let stack = GaussianRational::from(BigRational::from_integer(BigInt::from(c.p.stack_factor())));
        let coeff = F::from_gaussian(&(&c.coeff * &stack));
        out.add_term(c.beta.clone(), c.p.clone(), vec![c.label.clone()], HSeries::monomial(exponent, coeff))?;
    }
    Ok(out)
}

impl<F: fmt::Display + Ring> fmt::Display for FockElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, l, s)) in self.terms().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {} {:?}: {}", k.beta, k.p, l, s)?;
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for FockElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FockElement")
            .field("energy_cutoff", &self.energy_cutoff)
            .field("hbar_order", &self.hbar_order)
            .field("terms", &self.terms)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    beta: CurveClass,
    p: ContactData,
    labels: Labels,
    hseries: HSeries<GaussianRational>,
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    energy_cutoff: RationalText,
    hbar_order: i64,
    terms: Vec<TermDoc>,
}

impl Serialize for FockElement<GaussianRational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementDoc {
            energy_cutoff: RationalText(self.energy_cutoff.clone()),
            hbar_order: self.hbar_order,
            terms: self
                .terms()
                .map(|(k, l, h)| TermDoc { beta: k.beta.clone(), p: k.p.clone(), labels: l.clone(), hseries: h.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockElement<GaussianRational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = ElementDoc::deserialize(d)?;
        let mut out = FockElement::zero(doc.energy_cutoff.0, doc.hbar_order);
        for t in doc.terms {
            if t.beta.is_zero() && t.p.is_empty() && t.labels.is_empty() {
                out.push(FockKey { beta: t.beta, p: t.p }, t.labels, t.hseries);
            } else {
                out.add_term(t.beta, t.p, t.labels, t.hseries).map_err(serde::de::Error::custom)?;
            }
        }
        Ok(out)
    }
}

/// Convenience for building contact data from literal vectors.
pub fn contact(entries: &[(&[i64], u32)]) -> ContactData {
    ContactData::new(entries.iter().map(|(v, m)| (IntVector(v.to_vec()), *m))).expect("valid contact data")
}

#[cfg(test)]
mod tests {
    use super::*;

    type Fock = FockElement<GaussianRational>;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn class(v: &[i64], dot: i64) -> CurveClass {
        CurveClass::new([(IntVector(v.to_vec()), dot)]).unwrap()
    }

    fn single(beta: CurveClass, p: ContactData, label: &str, k: i64, c: i64, cutoff: i64) -> Fock {
        let mut e = Fock::zero(rat(cutoff), 10);
        e.add_term(beta, p, vec![label.into()], HSeries::monomial(k, GaussianRational::from(c))).unwrap();
        e
    }

    #[test]
    fn unit_is_neutral() {
        let x = single(class(&[1, 0, 0], 1), contact(&[(&[1, 0, 0], 1)]), "V", -1, 3, 5);
        let one = Fock::unit(rat(5), 10);
        assert_eq!(one.mul(&x).unwrap(), x);
        assert_eq!(x.mul(&one).unwrap(), x);
    }

    #[test]
    fn symmetrization_factors() {
        let p = contact(&[(&[1, 0, 0], 1)]);
        assert_eq!(binomial_factor(&p, &p), 2u32.into());
        assert_eq!(orbit_sum_factor(&p, &p), 2u32.into());
        let q = contact(&[(&[0, 1, 0], 1)]);
        assert_eq!(binomial_factor(&p, &q), 1u32.into());
        assert_eq!(orbit_sum_factor(&p, &q), 1u32.into());
        let x = single(class(&[1, 0, 0], 1), p.clone(), "V", 0, 1, 5);
        let sq = x.mul(&x).unwrap();
        let key = FockKey { beta: class(&[1, 0, 0], 1).add(&class(&[1, 0, 0], 1)), p: contact(&[(&[1, 0, 0], 2)]) };
        assert_eq!(sq.coeff(&key, &["V".into(), "V".into()]).unwrap().coeff(0), GaussianRational::from(2));
    }

    #[test]
    fn exp_truncates_by_energy() {
        let x = single(class(&[1, 0, 0], 2), contact(&[(&[1, 0, 0], 2)]), "V", 0, 1, 3);
        let z = x.exp().unwrap();
        assert_eq!(z, Fock::unit(rat(3), 10).add(&x).unwrap());
        assert_eq!(Fock::zero(rat(3), 10).exp().unwrap(), Fock::unit(rat(3), 10));
    }

    #[test]
    fn errors() {
        let unit = Fock::unit(rat(3), 10);
        assert_eq!(unit.exp(), Err(FockError::ConstantTermInExp));
        assert_eq!(Fock::zero(rat(3), 10).log(), Err(FockError::NonUnitalLog));
        assert_eq!(unit.scale(&GaussianRational::from(2)).log(), Err(FockError::NonUnitalLog));
        assert!(matches!(unit.mul(&Fock::unit(rat(4), 10)), Err(FockError::CutoffMismatch(..))));
        let mut e = Fock::zero(rat(3), 10);
        assert_eq!(
            e.add_term(CurveClass::zero(), contact(&[(&[1, 0, 0], 1)]), vec![], HSeries::constant(1.into())),
            Err(FockError::ZeroClassTerm)
        );
    }

    #[test]
    fn eta_grading_and_stack_factor() {
        let v = IntVector(vec![1, 0, 0]);
        let three = ContactData::new([(v.clone(), 3)]).unwrap();
        let c = |genus, p: ContactData, dot| Contribution {
            genus,
            beta: CurveClass::new([(v.clone(), dot)]).unwrap(),
            p,
            label: "V".into(),
            coeff: GaussianRational::from(1),
        };
        let eta: Fock = assemble_eta(&[c(0, three.clone(), 3)], ContactConvention::Verbatim, rat(5), 10).unwrap();
        let (_, _, s) = eta.terms().next().unwrap();
        assert_eq!(s, &HSeries::monomial(1, GaussianRational::from(1)));
        let eta = assemble_eta::<GaussianRational>(
            &[Contribution { genus: 1, p: ContactData::empty(), ..c(0, three.clone(), 3) }],
            ContactConvention::Verbatim,
            rat(5),
            10,
        );
        assert!(matches!(eta, Err(FockError::IncompatibleContact { .. })));
        let beta = CurveClass::with_energy([], rat(1)).unwrap();
        let eta: Fock = assemble_eta(
            &[Contribution { genus: 1, beta, p: ContactData::empty(), label: "V".into(), coeff: 1.into() }],
            ContactConvention::Verbatim,
            rat(5),
            10,
        )
        .unwrap();
        assert_eq!(eta.terms().next().unwrap().2, &HSeries::monomial(0, GaussianRational::from(1)));
        let two = ContactData::new([(IntVector(vec![2, 0, 0]), 1)]).unwrap();
        let eta: Fock = assemble_eta(&[c(0, two, 1)], ContactConvention::Verbatim, rat(5), 10).unwrap();
        assert_eq!(eta.terms().next().unwrap().2, &HSeries::monomial(-1, GaussianRational::from(2)));
    }

    #[test]
    fn json_round_trip() {
        let x = single(class(&[1, 0, 0], 1), contact(&[(&[1, 0, 0], 1)]), "V", -1, 3, 5);
        let z = x.exp().unwrap();
        let text = serde_json::to_string(&z).unwrap();
        let back: Fock = serde_json::from_str(&text).unwrap();
        assert_eq!(back, z);
    }
}
