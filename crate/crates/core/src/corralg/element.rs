use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::generator::Generator;
use super::object::ObjectId;
use super::CorrError;
use crate::partitions::enumerate_partitions;
use crate::scalars::Ring;

/// A finite linear combination of generators sharing a domain and codomain.
#[derive(Clone)]
pub struct CorrElement<R> {
    domain: ObjectId,
    codomain: ObjectId,
    terms: BTreeMap<Generator, R>,
    strict: bool,
}

impl<R: Ring> CorrElement<R> {
    pub fn zero(domain: ObjectId, codomain: ObjectId) -> Self {
        Self { domain, codomain, terms: BTreeMap::new(), strict: false }
    }

    pub fn from_generator(g: Generator) -> Self {
        Self::monomial(g, R::one())
    }

    pub fn monomial(g: Generator, c: R) -> Self {
        let mut e = Self::zero(g.domain(), g.codomain());
        e.push(g, c);
        e
    }

    pub fn new(
        domain: ObjectId,
        codomain: ObjectId,
        terms: impl IntoIterator<Item = (Generator, R)>,
    ) -> Result<Self, CorrError> {
        let mut e = Self::zero(domain, codomain);
        for (g, c) in terms {
            e.add_term(g, c)?;
        }
        Ok(e)
    }

    /// Like [`CorrElement::new`], but rejects stack-valued elements whose
    /// lift to `Y^μ` is not divisible by `∏_k μ_k`.
    pub fn new_strict(
        domain: ObjectId,
        codomain: ObjectId,
        terms: impl IntoIterator<Item = (Generator, R)>,
    ) -> Result<Self, CorrError> {
        let mut e = Self::new(domain, codomain, terms)?;
        if let Some(g) = e.first_indivisible() {
            return Err(CorrError::NotDivisible(g));
        }
        e.strict = true;
        Ok(e)
    }

    /// The identity morphism; on a coproduct, the sum of block identities.
    pub fn identity(obj: &ObjectId) -> Self {
        match obj {
            ObjectId::StackCoproduct(n) => {
                let terms = enumerate_partitions(*n).into_iter().map(|mu| (Generator::IdStack(mu), R::one()));
                Self::new(obj.clone(), obj.clone(), terms).expect("blocks of the coproduct")
            }
            _ => Self::from_generator(Generator::identity_on(obj).expect("simple object")),
        }
    }

    pub fn domain(&self) -> &ObjectId {
        &self.domain
    }

    pub fn codomain(&self) -> &ObjectId {
        &self.codomain
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub(super) fn set_strict(&mut self, strict: bool) {
        self.strict = strict;
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, g: &Generator) -> R {
        self.terms.get(g).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, g: Generator, c: R) -> Result<(), CorrError> {
        if !self.domain.contains(&g.domain()) || !self.codomain.contains(&g.codomain()) {
            return Err(CorrError::ObjectMismatch {
                expected: format!("{} -> {}", self.domain, self.codomain),
                found: format!("{} : {} -> {}", g, g.domain(), g.codomain()),
            });
        }
        self.push(g, c);
        Ok(())
    }

    pub(super) fn push(&mut self, g: Generator, c: R) {
        let sum = match self.terms.remove(&g) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.domain.clone(), self.codomain.clone());
        for (g, x) in &self.terms {
            out.push(g.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, CorrError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(CorrError::ObjectMismatch {
                expected: format!("{} -> {}", self.domain, self.codomain),
                found: format!("{} -> {}", other.domain, other.codomain),
            });
        }
        let mut out = self.clone();
        out.strict = false;
        for (g, c) in &other.terms {
            out.push(g.clone(), c.clone());
        }
        Ok(out)
    }

    /// Swaps domain and codomain and each generator for its adjoint.
    /// Coefficients are not conjugated.
    pub fn dagger(&self) -> Result<Self, CorrError> {
        let mut out = Self::zero(self.codomain.clone(), self.domain.clone());
        for (g, c) in &self.terms {
            out.push(g.adjoint()?, c.clone());
        }
        Ok(out)
    }

    /// The first stack-valued term whose lift fails the `∏_k μ_k`
    /// divisibility condition.
    pub fn first_indivisible(&self) -> Option<Generator> {
        self.terms.iter().find_map(|(g, c)| {
            let ObjectId::StackY(mu) = g.codomain() else {
                return None;
            };
            let p = mu.part_product();
            let need = &p / p.gcd(&g.lift_factor());
            let need = need.to_u64().expect("small partitions");
            (!c.divisible_by(need)).then(|| g.clone())
        })
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> CorrElement<S> {
        let mut out = CorrElement::zero(self.domain.clone(), self.codomain.clone());
        for (g, c) in &self.terms {
            out.push(g.clone(), f(c));
        }
        out
    }
}

/// Equality of morphisms; the strictness flag is bookkeeping and ignored.
impl<R: PartialEq> PartialEq for CorrElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.terms == other.terms
    }
}

impl<R: fmt::Debug> fmt::Debug for CorrElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} -> {}] ", self.domain, self.codomain)?;
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: fmt::Display> fmt::Display for CorrElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{g}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ElementDoc<R> {
    domain: ObjectId,
    codomain: ObjectId,
    terms: Vec<(Generator, R)>,
    #[serde(default)]
    strict: bool,
}

impl<R: Ring + Serialize> Serialize for CorrElement<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementDoc {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c.clone())).collect(),
            strict: self.strict,
        }
        .serialize(s)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for CorrElement<R> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = ElementDoc::<R>::deserialize(d)?;
        let build = if doc.strict { Self::new_strict } else { Self::new };
        build(doc.domain, doc.codomain, doc.terms).map_err(serde::de::Error::custom)
    }
}
