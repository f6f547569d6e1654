use serde::{Deserialize, Serialize};

use super::{phase, symmetry_sign, GwdtError};
use crate::scalars::{rational_reconstruct, GaussianRational, QRational, QRationalDoc, QSeries, QSeriesDoc, SymmetryMode};
use crate::tropical::ContactData;

/// How a rational function relates to its image under `q^{1/2} ↦ ±q^{-1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryRelation {
    Invariant,
    AntiInvariant,
    Neither,
}

#[derive(Clone, Debug)]
pub struct IntegralityReport {
    pub phase_exponent: u64,
    pub phase: GaussianRational,
    /// `(−1)^{1+Σ_v p(v)(|v|−1)}`.
    pub symmetry_sign: i32,
    /// The reconstructed phase-adjusted function, if one of the allowed
    /// degree exists.
    pub rational: Option<QRational<GaussianRational>>,
    /// Relation under the substitution with `symmetry_sign`; `None` when
    /// reconstruction failed.
    pub symmetry: Option<SymmetryRelation>,
    /// Every known phase-adjusted coefficient lies in ℤ\[i\].
    pub gaussian_integral: bool,
}

impl IntegralityReport {
    pub fn is_rational(&self) -> bool {
        self.rational.is_some()
    }

    /// Symmetric up to an overall sign.
    pub fn is_symmetric(&self) -> bool {
        matches!(self.symmetry, Some(SymmetryRelation::Invariant | SymmetryRelation::AntiInvariant))
    }
}

#[derive(Serialize)]
struct ReportDoc {
    phase_exponent: u64,
    phase: GaussianRational,
    symmetry_sign: i32,
    rational: bool,
    symmetric: bool,
    symmetry: Option<SymmetryRelation>,
    gaussian_integral: bool,
    closed_form: Option<QRationalDoc>,
}

impl Serialize for IntegralityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportDoc {
            phase_exponent: self.phase_exponent,
            phase: self.phase.clone(),
            symmetry_sign: self.symmetry_sign,
            rational: self.is_rational(),
            symmetric: self.is_symmetric(),
            symmetry: self.symmetry,
            gaussian_integral: self.gaussian_integral,
            closed_form: self.rational.as_ref().map(Into::into),
        }
        .serialize(s)
    }
}

/// Multiplies by the phase of `p`, reconstructs a rational function with
/// numerator and denominator degree at most `max_deg` in `q^{1/2}`, and
/// tests it against `q^{1/2} ↦ (−1)^{1+Σ p(v)(|v|−1)}q^{-1/2}`.
pub fn integrality_check(
    s: &QSeries<GaussianRational>,
    p: &ContactData,
    max_deg: usize,
) -> Result<IntegralityReport, GwdtError> {
    let ph = phase(p);
    let adjusted = s.scale(&ph);
    let rational = rational_reconstruct(&adjusted, max_deg)?;
    let sign = symmetry_sign(p);
    let symmetry = rational.as_ref().map(|r| {
        let image = r.symmetry_apply(SymmetryMode::from_sign(sign));
        if image == *r {
            SymmetryRelation::Invariant
        } else if image == r.neg() {
            SymmetryRelation::AntiInvariant
        } else {
            SymmetryRelation::Neither
        }
    });
    Ok(IntegralityReport {
        phase_exponent: p.phase_exponent(),
        phase: ph,
        symmetry_sign: sign,
        rational,
        symmetry,
        gaussian_integral: adjusted.is_gaussian_integral(),
    })
}

/// A series, its contact data and the degree bound, as read from JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckInput {
    pub series: QSeriesDoc,
    #[serde(default)]
    pub contact: ContactData,
    pub max_deg: usize,
}

impl CheckInput {
    pub fn run(&self) -> Result<IntegralityReport, GwdtError> {
        integrality_check(&self.series.to_series(), &self.contact, self.max_deg)
    }
}
