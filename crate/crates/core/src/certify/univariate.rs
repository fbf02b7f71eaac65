//! Dense univariate polynomials as coefficient vectors, lowest degree first.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// Coefficients of `p` as a polynomial in `x_{var}` alone; fails if any
/// other variable occurs.
pub fn univariate_coefficients(p: &Polynomial, var: usize) -> Result<Vec<Rational>> {
    if var >= p.arity() {
        return Err(Error::IndexOutOfRange {
            index: var,
            arity: p.arity(),
        });
    }
    let mut out = vec![Rational::zero(); p.degree_in(var) as usize + 1];
    for (e, c) in p.terms() {
        if e.degree() != e.get(var) {
            return Err(Error::Invalid(format!("polynomial is not univariate in x{}", var + 1)));
        }
        out[e.get(var) as usize] = c.clone();
    }
    trim(&mut out);
    Ok(out)
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(k.into()))
        .collect()
}

/// Remainder of `a` divided by nonzero `b`.
fn remainder(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let q = r.last().expect("nonempty") / lead;
        let shift = r.len() - b.len();
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &q * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Number of distinct real roots, by a Sturm sequence. The zero polynomial
/// is rejected.
pub fn sturm_real_root_count(p: &[Rational]) -> Result<usize> {
    let mut p0 = p.to_vec();
    trim(&mut p0);
    if p0.is_empty() {
        return Err(Error::Invalid("zero polynomial has infinitely many roots".into()));
    }
    let mut seq = vec![p0.clone(), derivative(&p0)];
    while !seq.last().expect("nonempty").is_empty() {
        let n = seq.len();
        let r = remainder(&seq[n - 2], &seq[n - 1]);
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq.pop();
    // signs at +infinity are the leading coefficients; at -infinity they
    // flip for odd degree
    let at = |neg: bool| {
        let signs: Vec<bool> = seq
            .iter()
            .map(|q| {
                let lead = q.last().expect("nonzero").is_positive();
                if neg && (q.len() - 1) % 2 == 1 {
                    !lead
                } else {
                    lead
                }
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    Ok(at(true) - at(false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn root_counts() {
        assert_eq!(sturm_real_root_count(&q(&[13, 6, 1])).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&q(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&q(&[0, 13, 6, 1])).unwrap(), 1);
        assert_eq!(sturm_real_root_count(&q(&[1, 2, 1])).unwrap(), 1);
        assert_eq!(sturm_real_root_count(&q(&[5])).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&q(&[0, -1, 0, 1])).unwrap(), 3);
        assert!(sturm_real_root_count(&q(&[0])).is_err());
    }

    #[test]
    fn extraction() {
        let p = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 0], 3)]);
        assert_eq!(univariate_coefficients(&p, 0).unwrap(), q(&[3, 0, 1]));
        assert!(univariate_coefficients(&p, 1).is_err());
        let mixed = Polynomial::from_int_terms(2, &[(&[1, 1], 1)]);
        assert!(univariate_coefficients(&mixed, 0).is_err());
    }
}
