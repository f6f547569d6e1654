//! Dense univariate polynomials over a field, coefficients low to high.
//! Only what the rational-function normalisation needs.

use super::traits::Field;

pub(crate) fn trim<F: Field>(p: &mut Vec<F>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn div_rem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let lead_inv = b.last().expect("nonzero divisor").checked_inv().expect("nonzero lead");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap().clone() * lead_inv.clone();
        for (j, bc) in b.iter().enumerate() {
            let v = r[shift + j].clone() - f.clone() * bc.clone();
            r[shift + j] = v;
        }
        q[shift] = f;
        trim(&mut r);
    }
    (q, r)
}

/// Monic greatest common divisor.
pub(crate) fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        let inv = lead.checked_inv().unwrap();
        for c in x.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn p(cs: &[i64]) -> Vec<BigRational> {
        cs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1+x)(1-x) and (1+x)^2
        let g = gcd(&p(&[1, 0, -1]), &p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn division_exact() {
        let (q, r) = div_rem(&p(&[-1, 0, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_empty());
    }
}
