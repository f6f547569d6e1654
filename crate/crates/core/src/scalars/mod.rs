//! Exact coefficient arithmetic: ℚ\[i\], Laurent polynomials and one-sided
//! series in `q^{1/2}`, truncated ħ-series, rational functions, the
//! substitution `q^{1/2} = i·e^{iħ/2}` and rational reconstruction.

mod format;
mod gaussian;
mod hseries;
mod laurent;
mod linalg;
mod poly;
mod qseries;
mod subst;
mod traits;

pub use format::{laurent_from_terms, laurent_terms, QRationalDoc, QSeriesDoc, RationalText, Term};
pub use gaussian::{format_rational, gr_arith, parse_rational, ArithOp, GaussianRational};
pub use hseries::{HSeries, EXACT};
pub use laurent::{QLaurent, SymmetryMode};
pub use linalg::solve;
pub use qseries::{rational_reconstruct, QRational, QSeries};
pub use subst::{q_substitute_hbar, q_substitute_hbar_rational};
pub use traits::{Field, GaussianScalar, Ring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has no certified finite tail")]
    InfiniteSupport,
    #[error("need at least {needed} consecutive coefficients, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("an exact inverse of a non-monomial series needs an explicit order")]
    NonTerminating,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}
