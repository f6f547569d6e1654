use std::fmt;

use num_traits::{One, Zero};

use super::laurent::{QLaurent, SymmetryMode};
use super::traits::{Field, Ring};
use super::{linalg, poly, GaussianRational, ScalarError};

/// A one-sided series in `x = q^{1/2}`, known on a consecutive window.
///
/// `coeffs[k]` is the coefficient of `q^{(lead + k)/2}`. If `exact` is set
/// the series is certified to vanish past the window (a Laurent
/// polynomial); otherwise coefficients beyond it are unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries<F> {
    lead: i64,
    coeffs: Vec<F>,
    exact: bool,
}

impl<F: Ring> QSeries<F> {
    pub fn new(lead: i64, coeffs: Vec<F>, exact: bool) -> Self {
        Self { lead, coeffs, exact }
    }

    /// Builds the window `[min key, known_through]` from sparse terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, F)>, known_through: i64) -> Self {
        let terms: Vec<(i64, F)> = terms.into_iter().collect();
        let lead = terms.iter().map(|(k, _)| *k).min().unwrap_or(known_through + 1);
        let len = (known_through - lead + 1).max(0) as usize;
        let mut coeffs = vec![F::zero(); len];
        for (k, c) in terms {
            if k <= known_through {
                let slot = &mut coeffs[(k - lead) as usize];
                *slot = slot.clone() + c;
            }
        }
        Self { lead, coeffs, exact: false }
    }

    pub fn from_laurent(f: &QLaurent<F>) -> Self {
        match (f.min_half(), f.max_half()) {
            (Some(lo), Some(hi)) => Self {
                lead: lo,
                coeffs: (lo..=hi).map(|k| f.coeff(k)).collect(),
                exact: true,
            },
            _ => Self { lead: 0, coeffs: Vec::new(), exact: true },
        }
    }

    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Last half-exponent with a known coefficient.
    pub fn known_through(&self) -> i64 {
        self.lead + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `q^{half/2}`, or `None` when it is not known.
    pub fn coeff(&self, half: i64) -> Option<F> {
        if half < self.lead {
            Some(F::zero())
        } else if half > self.known_through() {
            self.exact.then(F::zero)
        } else {
            Some(self.coeffs[(half - self.lead) as usize].clone())
        }
    }

    /// Nonzero known terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        let lead = self.lead;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (lead + k as i64, c))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self {
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            exact: self.exact,
        }
    }

    /// Keeps only the first `n` coefficients of the window.
    pub fn take(&self, n: usize) -> Self {
        let exact = self.exact && n >= self.coeffs.len();
        Self { lead: self.lead, coeffs: self.coeffs.iter().take(n).cloned().collect(), exact }
    }

    pub fn to_laurent(&self) -> Result<QLaurent<F>, ScalarError> {
        if !self.exact {
            return Err(ScalarError::InfiniteSupport);
        }
        Ok(QLaurent::from_terms(self.terms().map(|(k, c)| (k, c.clone()))))
    }

    /// [`QLaurent::symmetry_apply`] for a series with certified finite support.
    pub fn symmetry_apply(&self, mode: SymmetryMode) -> Result<QLaurent<F>, ScalarError> {
        Ok(self.to_laurent()?.symmetry_apply(mode))
    }
}

impl QSeries<GaussianRational> {
    pub fn is_gaussian_integral(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_gaussian_integer)
    }
}

impl<F: fmt::Debug> fmt::Debug for QSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QSeries")
            .field("lead", &self.lead)
            .field("coeffs", &self.coeffs)
            .field("exact", &self.exact)
            .finish()
    }
}

/// A rational function in `q^{1/2}`.
///
/// Canonical form: the denominator is a polynomial with constant term 1,
/// and numerator and denominator share no polynomial factor, so derived
/// equality is equality of functions.
#[derive(Clone, PartialEq, Eq)]
pub struct QRational<F> {
    numerator: QLaurent<F>,
    denominator: QLaurent<F>,
}

fn dense<F: Ring>(f: &QLaurent<F>, from: i64) -> Vec<F> {
    let hi = f.max_half().unwrap_or(from - 1);
    (from..=hi).map(|k| f.coeff(k)).collect()
}

fn sparse<F: Ring>(p: &[F], shift: i64) -> QLaurent<F> {
    QLaurent::from_terms(p.iter().enumerate().map(|(k, c)| (k as i64 + shift, c.clone())))
}

impl<F: Field> QRational<F> {
    pub fn new(numerator: QLaurent<F>, denominator: QLaurent<F>) -> Result<Self, ScalarError> {
        let (Some(dmin), Some(nmin)) = (denominator.min_half(), numerator.min_half()) else {
            if denominator.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            return Ok(Self::zero());
        };
        let mut n = dense(&numerator, nmin);
        let mut d = dense(&denominator, dmin);
        let g = poly::gcd(&n, &d);
        if g.len() > 1 {
            n = poly::div_rem(&n, &g).0;
            d = poly::div_rem(&d, &g).0;
        }
        let c0 = d[0].checked_inv().expect("constant term survives gcd removal");
        let n: Vec<F> = n.into_iter().map(|c| c * c0.clone()).collect();
        let d: Vec<F> = d.into_iter().map(|c| c * c0.clone()).collect();
        Ok(Self { numerator: sparse(&n, nmin - dmin), denominator: sparse(&d, 0) })
    }

    pub fn from_laurent(f: QLaurent<F>) -> Self {
        Self { numerator: f, denominator: QLaurent::one() }
    }

    pub fn zero() -> Self {
        Self::from_laurent(QLaurent::zero())
    }

    pub fn numerator(&self) -> &QLaurent<F> {
        &self.numerator
    }

    pub fn denominator(&self) -> &QLaurent<F> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when the function is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.denominator == QLaurent::one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.numerator * &other.numerator, &self.denominator * &other.denominator)
            .expect("nonzero denominators")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = &self.numerator * &other.denominator + &other.numerator * &self.denominator;
        Self::new(n, &self.denominator * &other.denominator).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        Self { numerator: -self.numerator.clone(), denominator: self.denominator.clone() }
    }

    pub fn mul_laurent(&self, f: &QLaurent<F>) -> Self {
        self.mul(&Self::from_laurent(f.clone()))
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn symmetry_apply(&self, mode: SymmetryMode) -> Self {
        Self::new(self.numerator.symmetry_apply(mode), self.denominator.symmetry_apply(mode))
            .expect("substitution keeps the denominator nonzero")
    }

    /// The Laurent expansion around `q^{1/2} = 0`, `count` coefficients
    /// starting at the leading exponent.
    pub fn expand(&self, count: usize) -> QSeries<F> {
        let Some(lead) = self.numerator.min_half() else {
            return QSeries::new(0, vec![F::zero(); count], self.is_laurent());
        };
        let d = dense(&self.denominator, 0);
        let n = dense(&self.numerator, lead);
        let mut s: Vec<F> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = n.get(k).cloned().unwrap_or_else(F::zero);
            for j in 1..d.len().min(k + 1) {
                acc = acc - d[j].clone() * s[k - j].clone();
            }
            s.push(acc);
        }
        let exact = self.is_laurent() && count >= n.len();
        QSeries::new(lead, s, exact)
    }
}

impl<F: Field + fmt::Display> fmt::Display for QRational<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "[{}] / [{}]", self.numerator, self.denominator)
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for QRational<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QRational")
            .field("numerator", &self.numerator)
            .field("denominator", &self.denominator)
            .finish()
    }
}

/// Finds `q^{a/2}·N/D` with `deg N, deg D ≤ max_deg` (degrees in
/// `q^{1/2}`) reproducing every supplied coefficient of `s`.
///
/// Denominator degrees are tried in increasing order, so the first hit has
/// minimal denominator. `Ok(None)` means no such rational function exists.
pub fn rational_reconstruct<F: Field>(
    s: &QSeries<F>,
    max_deg: usize,
) -> Result<Option<QRational<F>>, ScalarError> {
    let needed = 2 * max_deg + 2;
    if s.len() < needed {
        return Err(ScalarError::InsufficientTerms { needed, got: s.len() });
    }
    let Some(first) = s.coeffs.iter().position(|c| !c.is_zero()) else {
        return Ok(Some(QRational::zero()));
    };
    let c = &s.coeffs[first..];
    let lead = s.lead + first as i64;
    let total = c.len();

    for m in 0..=max_deg {
        let rows: Vec<usize> = (max_deg + 1..total).collect();
        let denominator = if m == 0 {
            if rows.iter().any(|&k| !c[k].is_zero()) {
                continue;
            }
            vec![F::one()]
        } else {
            let a: Vec<Vec<F>> = rows
                .iter()
                .map(|&k| {
                    (1..=m).map(|j| if j <= k { c[k - j].clone() } else { F::zero() }).collect()
                })
                .collect();
            let b: Vec<F> = rows.iter().map(|&k| -c[k].clone()).collect();
            let Some(tail) = linalg::solve(&a, &b) else {
                continue;
            };
            std::iter::once(F::one()).chain(tail).collect()
        };
        let numerator: Vec<F> = (0..=max_deg.min(total - 1))
            .map(|k| {
                (0..denominator.len().min(k + 1))
                    .fold(F::zero(), |acc, j| acc + denominator[j].clone() * c[k - j].clone())
            })
            .collect();
        let candidate = QRational::new(sparse(&numerator, lead), sparse(&denominator, 0))?;
        if reproduces(&candidate, s) {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

fn reproduces<F: Field>(f: &QRational<F>, s: &QSeries<F>) -> bool {
    if f.is_zero() {
        return s.coeffs.iter().all(Zero::is_zero);
    }
    let lead = f.numerator.min_half().unwrap();
    if lead < s.lead {
        return false;
    }
    let count = (s.known_through() - lead + 1).max(0) as usize;
    let e = f.expand(count);
    (s.lead..=s.known_through()).all(|k| e.coeff(k) == s.coeff(k))
}
