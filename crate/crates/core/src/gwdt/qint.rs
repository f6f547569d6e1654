use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{phase, GwdtError};
use crate::scalars::{GaussianRational, HSeries, QLaurent};
use crate::tropical::{vertex_multiplicity, ContactData, IntVector};

/// `[k]_q = ((i^{-1}q^{1/2})^k − (i^{-1}q^{1/2})^{-k})/i` for any integer `k`.
pub fn q_integer_laurent(k: i64) -> QLaurent<GaussianRational> {
    QLaurent::from_terms([
        (k, GaussianRational::i_pow(3 * k - 1)),
        (-k, -GaussianRational::i_pow(k - 1)),
    ])
}

/// Taylor series of `2·sin(kħ/2)`, known through `ħ^order`.
pub fn sine_series(k: i64, order: i64) -> HSeries<GaussianRational> {
    let half = BigRational::new(BigInt::from(k), BigInt::from(2));
    let mut out = HSeries::zero_to(order);
    // term_j = (k/2)^j / j!
    let mut term = BigRational::one();
    for j in 1..=order.max(0) {
        term = term * &half / BigRational::from_integer(BigInt::from(j));
        if j % 2 == 1 && !term.is_zero() {
            let sign = if (j / 2) % 2 == 0 { 2 } else { -2 };
            out.add_term(j, GaussianRational::real(&term * BigRational::from_integer(sign.into())));
        }
    }
    out
}

/// Both forms of the quantum integer: the Laurent polynomial in `q^{1/2}`
/// and the sine series in ħ through `ħ^order`.
pub fn q_integer(n: i64, order: i64) -> (QLaurent<GaussianRational>, HSeries<GaussianRational>) {
    (q_integer_laurent(n), sine_series(n, order))
}

/// `η_p = [n]_q·V` for the trivalent vertex `{v₁, v₂, −v₁−v₂}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexInvariant {
    pub n: u64,
    pub label: String,
    pub contact: ContactData,
    pub coefficient: QLaurent<GaussianRational>,
    pub phase: GaussianRational,
}

impl VertexInvariant {
    /// `phase(p)·[n]_q`.
    pub fn phase_adjusted(&self) -> QLaurent<GaussianRational> {
        self.coefficient.scale(&self.phase)
    }
}

pub fn vertex_invariant(v1: &IntVector, v2: &IntVector) -> Result<VertexInvariant, GwdtError> {
    let n = vertex_multiplicity(v1, v2)?;
    let v3 = v1.add(v2).neg();
    let contact = ContactData::new([(v1.clone(), 1), (v2.clone(), 1), (v3, 1)])?;
    Ok(VertexInvariant {
        n,
        label: "V".into(),
        phase: phase(&contact),
        contact,
        coefficient: q_integer_laurent(n as i64),
    })
}
