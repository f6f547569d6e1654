//! `Z_GW°_{β,p} = phase(p)·Δ_p ⋆ Z_PT_β`, with `Δ_p⋆` read from a table.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{phase, GwdtError};
use crate::scalars::{q_substitute_hbar_rational, GaussianRational, HSeries, QLaurent, QRational, QRationalDoc};
use crate::tropical::{ContactData, CurveClass};

/// `Z_PT`: per curve class, a combination of PT labels.
pub type PtSide = BTreeMap<CurveClass, BTreeMap<String, QRational<GaussianRational>>>;

/// `Δ_p ⋆ [pt_label] = coeff·[gw_label]` in class `β`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub beta: CurveClass,
    pub p: ContactData,
    pub pt_label: String,
    pub gw_label: String,
    pub coeff: GaussianRational,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PairingTable {
    pub entries: Vec<PairingEntry>,
}

impl PairingTable {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Pairs each label with itself at coefficient 1.
    pub fn identity(beta: &CurveClass, p: &ContactData, labels: &[&str]) -> Self {
        let entries = labels
            .iter()
            .map(|l| PairingEntry {
                beta: beta.clone(),
                p: p.clone(),
                pt_label: l.to_string(),
                gw_label: l.to_string(),
                coeff: GaussianRational::from(1),
            })
            .collect();
        Self { entries }
    }

    fn matching<'a>(&'a self, beta: &'a CurveClass, label: &'a str) -> impl Iterator<Item = &'a PairingEntry> {
        self.entries.iter().filter(move |e| &e.beta == beta && e.pt_label == label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GwTerm {
    pub beta: CurveClass,
    pub p: ContactData,
    pub label: String,
}

/// The GW side, one rational coefficient per `(β, p, label)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GwSide {
    terms: BTreeMap<GwTerm, QRational<GaussianRational>>,
}

impl GwSide {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GwTerm, &QRational<GaussianRational>)> {
        self.terms.iter()
    }

    pub fn get(&self, beta: &CurveClass, p: &ContactData, label: &str) -> Option<&QRational<GaussianRational>> {
        self.terms.get(&GwTerm { beta: beta.clone(), p: p.clone(), label: label.to_string() })
    }

    /// Every coefficient after `q^{1/2} = i·e^{iħ/2}`, through `ħ^order`.
    pub fn to_hbar(&self, order: i64) -> Result<BTreeMap<GwTerm, HSeries<GaussianRational>>, GwdtError> {
        self.terms
            .iter()
            .map(|(k, f)| Ok((k.clone(), q_substitute_hbar_rational(f, order)?)))
            .collect()
    }
}

#[derive(Serialize)]
struct GwTermDoc<'a> {
    beta: &'a CurveClass,
    p: &'a ContactData,
    label: &'a str,
    coeff: QRationalDoc,
}

impl Serialize for GwSide {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let docs: Vec<GwTermDoc> = self
            .terms
            .iter()
            .map(|(k, f)| GwTermDoc { beta: &k.beta, p: &k.p, label: &k.label, coeff: f.into() })
            .collect();
        docs.serialize(s)
    }
}

pub fn l_transform(z_pt: &PtSide, pairing: &PairingTable) -> Result<GwSide, GwdtError> {
    let mut out = GwSide::default();
    for (beta, combo) in z_pt {
        for (label, f) in combo {
            if f.is_zero() {
                continue;
            }
            let mut hit = false;
            for e in pairing.matching(beta, label) {
                hit = true;
                let c = &phase(&e.p) * &e.coeff;
                let term = f.mul_laurent(&QLaurent::constant(c));
                let key = GwTerm { beta: beta.clone(), p: e.p.clone(), label: e.gw_label.clone() };
                let slot = out.terms.entry(key).or_insert_with(QRational::zero);
                *slot = slot.add(&term);
            }
            if !hit {
                return Err(GwdtError::MissingPairing { beta: beta.clone(), pt_label: label.clone() });
            }
        }
    }
    out.terms.retain(|_, f| !f.is_zero());
    Ok(out)
}
