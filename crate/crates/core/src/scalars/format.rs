//! JSON interchange for series.
//!
//! * q-series: an array of `[half_exponent, re, im]` triples, the exponent
//!   counting units of `q^{1/2}`.
//! * ħ-series: `{"terms": [[exponent, re, im], ...], "truncation_order": N}`
//!   with `null` for an exact series.
//!
//! `re`/`im` are written as `"a/b"` strings and read from either strings or
//! JSON integers.

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gaussian::{format_rational, parse_rational};
use super::hseries::{HSeries, EXACT};
use super::laurent::QLaurent;
use super::qseries::{QRational, QSeries};
use super::{GaussianRational, ScalarError};

/// A rational number in its textual JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalText(pub BigRational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(Self(BigRational::from_integer(n.into()))),
            Repr::Text(t) => parse_rational(&t).map(Self).map_err(serde::de::Error::custom),
        }
    }
}

/// One `[exponent, re, im]` triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term(pub i64, pub RationalText, pub RationalText);

impl Term {
    pub fn new(k: i64, c: &GaussianRational) -> Self {
        Term(k, RationalText(c.re().clone()), RationalText(c.im().clone()))
    }

    pub fn value(&self) -> GaussianRational {
        GaussianRational::new(self.1 .0.clone(), self.2 .0.clone())
    }
}

pub fn laurent_terms(f: &QLaurent<GaussianRational>) -> Vec<Term> {
    f.terms().map(|(k, c)| Term::new(k, c)).collect()
}

pub fn laurent_from_terms(terms: &[Term]) -> QLaurent<GaussianRational> {
    QLaurent::from_terms(terms.iter().map(|t| (t.0, t.value())))
}

impl Serialize for QLaurent<GaussianRational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        laurent_terms(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for QLaurent<GaussianRational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(laurent_from_terms(&Vec::<Term>::deserialize(d)?))
    }
}

#[derive(Serialize, Deserialize)]
struct HSeriesRepr {
    terms: Vec<Term>,
    truncation_order: Option<i64>,
}

impl Serialize for HSeries<GaussianRational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HSeriesRepr {
            terms: self.terms().map(|(k, c)| Term::new(k, c)).collect(),
            truncation_order: (!self.is_exact()).then_some(self.order()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HSeries<GaussianRational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = HSeriesRepr::deserialize(d)?;
        Ok(HSeries::from_terms(
            r.terms.iter().map(|t| (t.0, t.value())),
            r.truncation_order.unwrap_or(EXACT),
        ))
    }
}

/// A one-sided q-series with its known window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QSeriesDoc {
    pub terms: Vec<Term>,
    /// Last half-exponent with a known coefficient; defaults to the largest
    /// listed exponent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_through: Option<i64>,
    /// Certifies that every coefficient past the window vanishes.
    #[serde(default)]
    pub exact: bool,
}

impl QSeriesDoc {
    pub fn from_series(s: &QSeries<GaussianRational>) -> Self {
        Self {
            terms: s.terms().map(|(k, c)| Term::new(k, c)).collect(),
            known_through: Some(s.known_through()),
            exact: s.is_exact(),
        }
    }

    pub fn to_series(&self) -> QSeries<GaussianRational> {
        let hi = self
            .known_through
            .or_else(|| self.terms.iter().map(|t| t.0).max())
            .unwrap_or(0);
        let s = QSeries::from_terms(self.terms.iter().map(|t| (t.0, t.value())), hi);
        QSeries::new(s.lead(), s.coeffs().to_vec(), self.exact)
    }
}

/// A rational function as numerator and denominator q-term arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QRationalDoc {
    pub numerator: Vec<Term>,
    /// Defaults to `1`.
    #[serde(default = "unit_terms")]
    pub denominator: Vec<Term>,
}

fn unit_terms() -> Vec<Term> {
    vec![Term::new(0, &GaussianRational::from(1))]
}

impl QRationalDoc {
    pub fn to_rational(&self) -> Result<QRational<GaussianRational>, ScalarError> {
        QRational::new(laurent_from_terms(&self.numerator), laurent_from_terms(&self.denominator))
    }
}

impl From<&QRational<GaussianRational>> for QRationalDoc {
    fn from(f: &QRational<GaussianRational>) -> Self {
        Self { numerator: laurent_terms(f.numerator()), denominator: laurent_terms(f.denominator()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hseries_json_shape() {
        let h = HSeries::from_terms([(1, GaussianRational::from(2)), (3, "-1/3".parse().unwrap())], 5);
        let v = serde_json::to_value(&h).unwrap();
        assert_eq!(v, serde_json::json!({"terms": [[1, "2", "0"], [3, "-1/3", "0"]], "truncation_order": 5}));
        let back: HSeries<GaussianRational> = serde_json::from_value(v).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn q_terms_accept_integers() {
        let f: QLaurent<GaussianRational> = serde_json::from_str("[[1, -1, 0], [3, \"1/2\", 1]]").unwrap();
        assert_eq!(f.coeff(1), GaussianRational::from(-1));
        assert_eq!(f.coeff(3), "1/2+i".parse().unwrap());
    }
}
