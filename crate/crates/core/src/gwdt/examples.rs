use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::qint::q_integer_laurent;
use super::GwdtError;
use crate::scalars::{
    q_substitute_hbar_rational, GaussianRational, HSeries, QLaurent, QRational, QRationalDoc, QSeriesDoc,
    QSeries,
};

/// `(−1)^{n+1}/[n]_q` as a rational function.
pub fn wall_closed_form(n: i64) -> QRational<GaussianRational> {
    let sign = if n % 2 == 0 { -1 } else { 1 };
    QRational::new(QLaurent::constant(GaussianRational::from(sign)), q_integer_laurent(n))
        .expect("[n]_q is nonzero for n ≥ 1")
}

/// The wall invariant `(−1)^{n+1}/[n]_q {z₃=0}`.
#[derive(Clone, Debug)]
pub struct WallInvariant {
    pub n: i64,
    pub label: String,
    /// `i^{n+1}q^{n/2}(1 + (−q)^n + ⋯ + (−q)^{n(terms−1)})`, dense in `q^{1/2}`.
    pub series: QSeries<GaussianRational>,
    pub closed_form: QRational<GaussianRational>,
}

#[derive(Serialize)]
struct WallDoc<'a> {
    n: i64,
    label: &'a str,
    series: QSeriesDoc,
    closed_form: QRationalDoc,
}

impl Serialize for WallInvariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WallDoc {
            n: self.n,
            label: &self.label,
            series: QSeriesDoc::from_series(&self.series),
            closed_form: (&self.closed_form).into(),
        }
        .serialize(s)
    }
}

/// Expands the wall invariant through `terms` steps of the geometric series.
pub fn wall_invariant(n: i64, terms: usize) -> Result<WallInvariant, GwdtError> {
    if n < 1 {
        return Err(GwdtError::NonPositive("n"));
    }
    if terms == 0 {
        return Err(GwdtError::NonPositive("terms"));
    }
    let step = 2 * n as usize;
    let mut coeffs = vec![GaussianRational::zero(); step * (terms - 1) + 1];
    let lead = GaussianRational::i_pow(n + 1);
    for k in 0..terms {
        let c = if (n as usize * k) % 2 == 0 { lead.clone() } else { -lead.clone() };
        coeffs[k * step] = c;
    }
    Ok(WallInvariant {
        n,
        label: "z3=0".into(),
        series: QSeries::new(n, coeffs, false),
        closed_form: wall_closed_form(n),
    })
}

/// The connected degree-`d` multiple-cover count `1/(d·[d]_q²)`.
#[derive(Clone, Debug)]
pub struct Multicover {
    pub d: i64,
    /// ħ-Laurent series with a double pole.
    pub hbar: HSeries<GaussianRational>,
    pub q_series: QSeries<GaussianRational>,
    pub closed_form: QRational<GaussianRational>,
    /// Sign of the leading coefficient `±1/d` at `q^d`.
    pub sign: i32,
    /// Whether the signs of the coefficients at `q^{kd}` alternate in `k`.
    pub alternating: bool,
}

impl Multicover {
    /// The coefficients at `q^d, q^{2d}, …` within the expanded window.
    pub fn coefficients(&self) -> Vec<GaussianRational> {
        let step = 2 * self.d;
        (1..)
            .map(|k| self.q_series.coeff(k * step))
            .take_while(Option::is_some)
            .map(Option::unwrap)
            .collect()
    }
}

#[derive(Serialize)]
struct MulticoverDoc {
    d: i64,
    hbar: HSeries<GaussianRational>,
    q_series: QSeriesDoc,
    closed_form: QRationalDoc,
    sign: i32,
    alternating: bool,
}

impl Serialize for Multicover {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MulticoverDoc {
            d: self.d,
            hbar: self.hbar.clone(),
            q_series: QSeriesDoc::from_series(&self.q_series),
            closed_form: (&self.closed_form).into(),
            sign: self.sign,
            alternating: self.alternating,
        }
        .serialize(s)
    }
}

/// The multiple-cover series through `ħ^order` and through `order` steps of
/// `q^d`.
pub fn multicover_series(d: i64, order: i64) -> Result<Multicover, GwdtError> {
    if d < 1 {
        return Err(GwdtError::NonPositive("d"));
    }
    if order < 1 {
        return Err(GwdtError::NonPositive("order"));
    }
    let qd = q_integer_laurent(d);
    let den = (&qd * &qd).scale(&GaussianRational::from(d));
    let closed_form = QRational::new(QLaurent::one(), den)?;
    let hbar = q_substitute_hbar_rational(&closed_form, order)?;
    let q_series = closed_form.expand((2 * d * (order - 1) + 1) as usize);
    let lead = q_series.coeff(2 * d).expect("window covers q^d");
    debug_assert!(lead.is_real() && !lead.is_zero());
    let sign = if lead.re().is_negative() { -1 } else { 1 };
    let second = q_series.coeff(4 * d);
    let alternating = second.is_some_and(|c| c.re().is_negative() != lead.re().is_negative());
    Ok(Multicover { d, hbar, q_series, closed_form, sign, alternating })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn frac(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn wall_examples() {
        let w = wall_invariant(1, 3).unwrap();
        assert_eq!(w.series.lead(), 1);
        let got: Vec<_> = (1..=5).map(|k| w.series.coeff(k).unwrap()).collect();
        assert_eq!(got, vec![g("-1"), g("0"), g("1"), g("0"), g("-1")]);
        assert_eq!(w.label, "z3=0");

        let w = wall_invariant(2, 3).unwrap();
        assert_eq!(w.series.coeff(2), Some(g("-i")));
        assert_eq!(w.series.coeff(6), Some(g("-i")));
        assert_eq!(w.series.coeff(10), Some(g("-i")));
        assert_eq!(w.series.coeff(4), Some(g("0")));
    }

    #[test]
    fn closed_form_times_qint() {
        for n in 1..=6 {
            let prod = wall_closed_form(n).mul_laurent(&q_integer_laurent(n));
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(prod, QRational::from_laurent(QLaurent::constant(GaussianRational::from(sign))));
        }
    }

    #[test]
    fn multicover_d2() {
        let m = multicover_series(2, 6).unwrap();
        assert_eq!(m.sign, -1);
        assert!(!m.alternating);
        let cs = m.coefficients();
        assert_eq!(cs.len(), 6);
        for (k, c) in cs.iter().enumerate() {
            assert_eq!(*c, GaussianRational::real(frac(-(k as i64 + 1), 2)));
        }
        // leading ħ term 1/(d³ħ²)
        assert_eq!(m.hbar.valuation(), -2);
        assert_eq!(m.hbar.coeff(-2), g("1/8"));
    }

    #[test]
    fn multicover_d1_leading() {
        let m = multicover_series(1, 4).unwrap();
        assert_eq!(m.hbar.coeff(-2), g("1"));
        assert_eq!(m.hbar.coeff(0), g("1/12"));
        assert_eq!(m.sign, 1);
        assert!(m.alternating);
    }
}
