//! The GW/DT layer: contact-data phases, quantum integers, the worked
//! examples (trivalent vertex, wall, multiple covers), integrality checks,
//! the 𝓛-transform through pairing tables, and the sine algebra of wall
//! operators.

mod examples;
mod integrality;
mod ltransform;
mod qint;
mod sine;

pub use examples::{multicover_series, wall_closed_form, wall_invariant, Multicover, WallInvariant};
pub use integrality::{integrality_check, CheckInput, IntegralityReport, SymmetryRelation};
pub use ltransform::{l_transform, GwSide, GwTerm, PairingEntry, PairingTable, PtSide};
pub use qint::{q_integer, q_integer_laurent, sine_series, vertex_invariant, VertexInvariant};
pub use sine::{sine_bracket, wedge, SineCombination, SineGenerator};

use thiserror::Error;

use crate::scalars::{GaussianRational, ScalarError};
use crate::tropical::{ContactData, CurveClass, TropicalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GwdtError {
    #[error(transparent)]
    Tropical(#[from] TropicalError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("no pairing for class {beta} and label {pt_label:?}")]
    MissingPairing { beta: CurveClass, pt_label: String },
    #[error("wall operators on different levels {0} and {1}")]
    LevelMismatch(String, String),
    #[error("sine generators need 2-dimensional vectors, got dimension {0}")]
    NotPlanar(usize),
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),
}

/// `∏_v i^{p(v)(|v|−1)}`.
pub fn phase(p: &ContactData) -> GaussianRational {
    GaussianRational::i_pow((p.phase_exponent() % 4) as i64)
}

/// The sign `(−1)^{1+Σ_v p(v)(|v|−1)}` of the expected symmetry
/// `q^{1/2} ↦ ±q^{-1/2}`.
pub fn symmetry_sign(p: &ContactData) -> i32 {
    if p.phase_exponent() % 2 == 0 {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fockring::contact;

    #[test]
    fn phase_examples() {
        assert_eq!(phase(&contact(&[(&[3, 0, 0], 1)])), GaussianRational::from(-1));
        assert_eq!(phase(&contact(&[(&[2, 0], 1)])), GaussianRational::i());
        assert_eq!(phase(&contact(&[(&[1, 0], 2), (&[0, 1], 1)])), GaussianRational::from(1));
        assert_eq!(phase(&contact(&[(&[2, 0], 3)])), GaussianRational::i_pow(3));
        assert_eq!(symmetry_sign(&contact(&[(&[1, 0], 1)])), -1);
        assert_eq!(symmetry_sign(&contact(&[(&[2, 0], 1)])), 1);
    }
}
