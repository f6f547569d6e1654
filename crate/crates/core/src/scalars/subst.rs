//! The change of variables `q^{1/2} = i·e^{iħ/2}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hseries::HSeries;
use super::laurent::QLaurent;
use super::qseries::QRational;
use super::{GaussianRational, ScalarError};

/// Taylor coefficients of `e^{i·k·ħ/2}` through `ħ^order`.
fn exp_coefficients(k: i64, order: i64) -> Vec<GaussianRational> {
    // (ik/2)^j / j!
    let step = GaussianRational::new(BigRational::zero(), BigRational::new(BigInt::from(k), BigInt::from(2)));
    let mut out = Vec::with_capacity(order as usize + 1);
    let mut term = GaussianRational::one();
    for j in 0..=order {
        if j > 0 {
            term = (&term * &step).scale(&BigRational::new(BigInt::one(), BigInt::from(j)));
        }
        out.push(term.clone());
    }
    out
}

/// Substitutes `q^{1/2} ↦ i·e^{iħ/2}` into a Laurent polynomial, exact
/// through `ħ^order`.
pub fn q_substitute_hbar(f: &QLaurent<GaussianRational>, order: i64) -> HSeries<GaussianRational> {
    assert!(order >= 0, "substitution order must be non-negative");
    let mut out = HSeries::zero_to(order);
    for (k, c) in f.terms() {
        let phase = c * &GaussianRational::i_pow(k);
        for (j, e) in exp_coefficients(k, order).into_iter().enumerate() {
            out.add_term(j as i64, &phase * &e);
        }
    }
    out
}

/// Substitution into a rational function; the denominator may vanish at
/// `ħ = 0`, giving a pole. The result is known through `ħ^order`.
pub fn q_substitute_hbar_rational(
    f: &QRational<GaussianRational>,
    order: i64,
) -> Result<HSeries<GaussianRational>, ScalarError> {
    // find the pole order of the denominator first, then expand with margin
    let probe = q_substitute_hbar(f.denominator(), 0);
    let mut margin = 0;
    let mut den = probe;
    while den.is_zero() {
        margin += 1;
        if margin > 4 * (f.denominator().len() as i64 + 8) {
            return Err(ScalarError::DivisionByZero);
        }
        den = q_substitute_hbar(f.denominator(), margin);
    }
    let v = den.valuation();
    let work = order + 2 * v.max(0) + 1;
    let num = q_substitute_hbar(f.numerator(), work);
    let den = q_substitute_hbar(f.denominator(), work);
    let inv = den.inv(work)?;
    Ok((&num * &inv).truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn half_power_of_q() {
        // i·e^{iħ/2} = i - ħ/2 - iħ²/8 + ...
        let s = q_substitute_hbar(&QLaurent::x(), 2);
        assert_eq!(s, HSeries::from_terms([(0, g("i")), (1, g("-1/2")), (2, g("-1/8*i"))], 2));
    }

    #[test]
    fn whole_power_of_q() {
        // q = -e^{iħ} = -1 - iħ + ħ²/2 + ...
        let q = QLaurent::monomial(2, g("1"));
        let s = q_substitute_hbar(&q, 2);
        assert_eq!(s, HSeries::from_terms([(0, g("-1")), (1, g("-i")), (2, g("1/2"))], 2));
    }

    #[test]
    fn constants_are_fixed() {
        let s = q_substitute_hbar(&QLaurent::constant(g("7")), 5);
        assert_eq!(s, HSeries::from_terms([(0, g("7"))], 5));
    }

    #[test]
    fn rational_with_pole() {
        // 1/(q^{1/2} - q^{-1/2})  with q^{1/2} = i e^{iħ/2}:
        // q^{1/2} - q^{-1/2} = i(e^{iħ/2} + e^{-iħ/2}) = 2i cos(ħ/2), no pole
        let d = QLaurent::from_terms([(1, g("1")), (-1, g("-1"))]);
        let f = QRational::new(QLaurent::one(), d).unwrap();
        let s = q_substitute_hbar_rational(&f, 2).unwrap();
        assert_eq!(s.coeff(0), g("-1/2*i"));
        // 1/(q^{1/2} + q^{-1/2}) = 1/(-2 sin(ħ/2)) has a simple pole
        let d = QLaurent::from_terms([(1, g("1")), (-1, g("1"))]);
        let f = QRational::new(QLaurent::one(), d).unwrap();
        let s = q_substitute_hbar_rational(&f, 3).unwrap();
        assert_eq!(s.coeff(-1), g("-1"));
        assert_eq!(s.coeff(0), g("0"));
        assert_eq!(s.coeff(1), g("-1/24"));
        assert_eq!(s.order(), 3);
    }
}
