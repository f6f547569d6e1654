use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::traits::{Field, GaussianScalar, Ring};
use super::{GaussianRational, ScalarError};

/// Truncation order marking a series whose every coefficient is known.
pub const EXACT: i64 = i64::MAX;

/// A Laurent series in ħ with a bounded pole, known up to a truncation order.
///
/// Coefficients of ħ-degree greater than `order` are unknown. `order ==
/// EXACT` means the stored terms are the whole series. Products only claim
/// the precision their operands support: for operands with valuations
/// `va`, `vb` and orders `Na`, `Nb` the product is known through
/// `min(Na + vb, Nb + va)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HSeries<F> {
    coeffs: BTreeMap<i64, F>,
    order: i64,
}

/// `order + k`, keeping [`EXACT`] fixed.
fn offset(order: i64, k: i64) -> i64 {
    if order == EXACT {
        EXACT
    } else {
        (order as i128 + k as i128).min(EXACT as i128 - 1) as i64
    }
}

impl<F: Ring> HSeries<F> {
    /// Zero, known through `order`.
    pub fn zero_to(order: i64) -> Self {
        Self { coeffs: BTreeMap::new(), order }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, F)>, order: i64) -> Self {
        let mut out = Self::zero_to(order);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// `c·ħ^k`, exact.
    pub fn monomial(k: i64, c: F) -> Self {
        Self::from_terms([(k, c)], EXACT)
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(0, c)
    }

    /// Adds `c·ħ^k`; terms beyond the truncation order are discarded.
    pub fn add_term(&mut self, k: i64, c: F) {
        if k > self.order || c.is_zero() {
            return;
        }
        match self.coeffs.remove(&k) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(k, s);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    pub fn coeff(&self, k: i64) -> F {
        self.coeffs.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Lowest exponent with a known nonzero coefficient; for a zero series
    /// the first exponent that is not known to vanish.
    pub fn valuation(&self) -> i64 {
        match self.coeffs.keys().next() {
            Some(k) => *k,
            None => self.order.saturating_add(1),
        }
    }

    /// Forgets everything above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self {
            coeffs: self.coeffs.range(..=order).map(|(k, c)| (*k, c.clone())).collect(),
            order,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, v)| (*k, v.clone() * c.clone())), self.order)
    }

    /// Multiplies by `ħ^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            order: offset(self.order, k),
        }
    }

    /// True when both series agree on every coefficient that both know.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let upto = self.order.min(other.order);
        let a = self.coeffs.range(..=upto);
        let b = other.coeffs.range(..=upto);
        a.eq(b)
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl Fn(&F) -> G) -> HSeries<G> {
        HSeries::from_terms(self.coeffs.iter().map(|(k, c)| (*k, f(c))), self.order)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<F: Field> HSeries<F> {
    /// Multiplicative inverse, known through `min(N - 2v, max_order)` where
    /// `v` is the valuation and `N` the truncation order.
    pub fn inv(&self, max_order: i64) -> Result<Self, ScalarError> {
        let (&v, lead) = self.coeffs.iter().next().ok_or(ScalarError::DivisionByZero)?;
        let lead_inv = lead.checked_inv().ok_or(ScalarError::DivisionByZero)?;
        let order = if self.is_exact() {
            max_order
        } else {
            max_order.min(self.order.saturating_sub(2 * v))
        };
        if order == EXACT {
            return Err(ScalarError::NonTerminating);
        }
        // unit part u = self / (lead ħ^v) = 1 + Σ g_k ħ^k, inverted term by term
        let rel = order.saturating_add(v);
        let g: Vec<F> = (0..=rel.max(0))
            .map(|k| self.coeff(v + k) * lead_inv.clone())
            .collect();
        let mut b: Vec<F> = Vec::with_capacity(g.len());
        for k in 0..g.len() {
            if k == 0 {
                b.push(F::one());
                continue;
            }
            let mut acc = F::zero();
            for j in 1..=k {
                acc = acc + g[j].clone() * b[k - j].clone();
            }
            b.push(-acc);
        }
        Ok(Self::from_terms(
            b.into_iter().enumerate().map(|(k, c)| (k as i64 - v, c * lead_inv.clone())),
            order,
        ))
    }
}

impl<F: Ring> Zero for HSeries<F> {
    fn zero() -> Self {
        Self::zero_to(EXACT)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Ring> One for HSeries<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Ring> Add for HSeries<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<F: Ring> Add<&HSeries<F>> for &HSeries<F> {
    type Output = HSeries<F>;
    fn add(self, rhs: &HSeries<F>) -> HSeries<F> {
        let mut out = self.truncate(rhs.order);
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<F: Ring> Sub for HSeries<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Ring> Neg for HSeries<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(), order: self.order }
    }
}

impl<F: Ring> Mul for HSeries<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<F: Ring> Mul<&HSeries<F>> for &HSeries<F> {
    type Output = HSeries<F>;
    fn mul(self, rhs: &HSeries<F>) -> HSeries<F> {
        if (self.is_exact() && self.coeffs.is_empty()) || (rhs.is_exact() && rhs.coeffs.is_empty()) {
            return HSeries::zero_to(EXACT);
        }
        let order = offset(self.order, rhs.valuation()).min(offset(rhs.order, self.valuation()));
        let mut out = HSeries::zero_to(order);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                if a + b <= order {
                    out.add_term(a + b, ca.clone() * cb.clone());
                }
            }
        }
        out
    }
}

impl<F: Ring> Ring for HSeries<F> {
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(F::from_rational(r))
    }

    fn is_integral(&self) -> bool {
        self.coeffs.values().all(F::is_integral)
    }
}

impl<F: GaussianScalar> GaussianScalar for HSeries<F> {
    fn from_gaussian(g: &GaussianRational) -> Self {
        Self::constant(F::from_gaussian(g))
    }
}

impl<F: fmt::Display> fmt::Display for HSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})ħ")?,
                k => write!(f, "({c})ħ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != EXACT {
            write!(f, " + O(ħ^{})", self.order + 1)?;
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for HSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HSeries")
            .field("coeffs", &self.coeffs)
            .field("order", &if self.order == EXACT { None } else { Some(self.order) })
            .finish()
    }
}
