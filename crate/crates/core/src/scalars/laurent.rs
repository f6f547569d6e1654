use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::traits::{GaussianScalar, Ring};
use super::GaussianRational;

/// How [`QLaurent::symmetry_apply`] acts on `q^{1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryMode {
    /// `q^{1/2} ↦ q^{-1/2}`
    Invert,
    /// `q^{1/2} ↦ -q^{-1/2}`
    NegateInvert,
}

impl SymmetryMode {
    /// The mode sending `q^{1/2} ↦ sign·q^{-1/2}`.
    pub fn from_sign(sign: i32) -> Self {
        if sign >= 0 {
            SymmetryMode::Invert
        } else {
            SymmetryMode::NegateInvert
        }
    }
}

/// A Laurent polynomial in `x = q^{1/2}`.
///
/// Keys count half-powers of `q`: the key `k` stands for `q^{k/2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent<F> {
    terms: BTreeMap<i64, F>,
}

impl<F: Ring> QLaurent<F> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, F)>) -> Self {
        let mut out = Self { terms: BTreeMap::new() };
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `c·q^{half/2}`.
    pub fn monomial(half: i64, c: F) -> Self {
        Self::from_terms([(half, c)])
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(0, c)
    }

    /// `q^{1/2}`.
    pub fn x() -> Self {
        Self::monomial(1, F::one())
    }

    pub fn add_term(&mut self, half: i64, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&half) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(half, s);
                }
            }
            None => {
                self.terms.insert(half, c);
            }
        }
    }

    pub fn coeff(&self, half: i64) -> F {
        self.terms.get(&half).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest half-exponent present.
    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest half-exponent present.
    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())))
    }

    /// Multiplies by `q^{half/2}`.
    pub fn shift(&self, half: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k + half, v.clone())).collect() }
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Replaces `q^{1/2}` by `q^{-1/2}` or `-q^{-1/2}`.
    pub fn symmetry_apply(&self, mode: SymmetryMode) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| {
            let c = match mode {
                SymmetryMode::NegateInvert if k.rem_euclid(2) == 1 => -c.clone(),
                _ => c.clone(),
            };
            (-k, c)
        }))
    }

    /// Replaces `q^{1/2}` by `-q^{1/2}`.
    pub fn negate_variable(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| {
            (*k, if k.rem_euclid(2) == 1 { -c.clone() } else { c.clone() })
        }))
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> QLaurent<G> {
        QLaurent::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }
}

impl QLaurent<GaussianRational> {
    /// Every coefficient in ℤ\[i\].
    pub fn is_gaussian_integral(&self) -> bool {
        self.terms.values().all(GaussianRational::is_gaussian_integer)
    }
}

impl<F: Ring> Zero for QLaurent<F> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Ring> One for QLaurent<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Ring> Add for QLaurent<F> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<F: Ring> Sub for QLaurent<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Ring> Neg for QLaurent<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<F: Ring> Mul for QLaurent<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Ring> Mul<&QLaurent<F>> for &QLaurent<F> {
    type Output = QLaurent<F>;
    fn mul(self, rhs: &QLaurent<F>) -> QLaurent<F> {
        let mut out = QLaurent::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Ring> Ring for QLaurent<F> {
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(F::from_rational(r))
    }

    fn is_integral(&self) -> bool {
        self.terms.values().all(F::is_integral)
    }
}

impl<F: GaussianScalar> GaussianScalar for QLaurent<F> {
    fn from_gaussian(g: &GaussianRational) -> Self {
        Self::constant(F::from_gaussian(g))
    }
}

impl<F: Ring + fmt::Display> fmt::Display for QLaurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                k if k % 2 == 0 => write!(f, "({c})q^{}", k / 2)?,
                k => write!(f, "({c})q^{k}/2")?,
            }
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for QLaurent<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
