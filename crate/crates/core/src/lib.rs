//! Exact computations around the GW/DT correspondence for lagrangian
//! correspondences: partition statistics, a table-driven correspondence
//! algebra, tropical contact data, the Fock ring of generating functions and
//! the worked GW/DT examples.
//!
//! Everything is generic over an exact coefficient [`scalars::Ring`]; the
//! aliases below fix the Gaussian-rational instances used in practice.

pub mod corralg;
pub mod fockring;
pub mod gwdt;
pub mod partitions;
pub mod scalars;
pub mod tropical;

use scalars::GaussianRational;

/// ℚ\[i\].
pub type Gq = GaussianRational;
/// Laurent polynomial in `q^{1/2}` over ℚ\[i\].
pub type QPoly = scalars::QLaurent<Gq>;
/// Truncated ħ-series over ℚ\[i\].
pub type HbarSeries = scalars::HSeries<Gq>;
/// One-sided q-series over ℚ\[i\].
pub type QSer = scalars::QSeries<Gq>;
/// Rational function in `q^{1/2}` over ℚ\[i\].
pub type QRat = scalars::QRational<Gq>;
/// Correspondence with ℚ\[i\] coefficients.
pub type Corr = corralg::CorrElement<Gq>;
/// Correspondence with Laurent-polynomial coefficients.
pub type QCorr = corralg::CorrElement<QPoly>;
/// Fock-ring element with ℚ\[i\] ħ-series coefficients.
pub type Fock = fockring::FockElement<Gq>;
