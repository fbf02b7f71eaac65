use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial, Rational};

fn binomial(n: u32, k: u32) -> BigInt {
    let mut b = BigInt::from(1);
    for t in 0..k {
        b = b * (n - t) / (t + 1);
    }
    b
}

/// Ultra-log-concavity test for a bivariate homogeneous polynomial with
/// nonnegative coefficients `sum a_k x1^k x2^{d-k}`: the sequence has no
/// internal zeros and `a_k^2 / C(d,k)^2 >= a_{k-1} a_{k+1} / (C(d,k-1) C(d,k+1))`.
pub fn bivariate_ulc(h: &Polynomial) -> Result<bool> {
    if h.arity() != 2 {
        return Err(Error::ArityMismatch {
            left: 2,
            right: h.arity(),
        });
    }
    let Some(d) = h.total_degree() else {
        return Ok(true);
    };
    if !h.is_homogeneous() {
        return Err(Error::WrongDegree { expected: d });
    }
    if !h.has_nonnegative_coefficients() {
        return Err(Error::Invalid("negative coefficient".into()));
    }
    let a: Vec<Rational> = (0..=d)
        .map(|k| h.coefficient(&ExponentVector::new(vec![k, d - k])))
        .collect();
    let nonzero: Vec<usize> = (0..a.len()).filter(|&k| !a[k].is_zero()).collect();
    let (lo, hi) = (nonzero[0], *nonzero.last().expect("nonzero polynomial"));
    if nonzero.len() != hi - lo + 1 {
        return Ok(false);
    }
    let scaled: Vec<Rational> = (0..=d)
        .map(|k| &a[k as usize] / Rational::from_integer(binomial(d, k)))
        .collect();
    Ok((1..d as usize).all(|k| &scaled[k] * &scaled[k] >= &scaled[k - 1] * &scaled[k + 1]))
}

/// `c(mu)^2 >= c(mu + e_i - e_j) * c(mu + e_j - e_i)` for the coefficients
/// of `p`; exponents leaving `N^n` count as zero.
pub fn discrete_root_log_concavity(p: &Polynomial, mu: &ExponentVector, i: usize, j: usize) -> bool {
    let c = |e: Option<ExponentVector>| e.map_or_else(Rational::zero, |e| p.coefficient(&e));
    let centre = p.coefficient(mu);
    &centre * &centre >= c(mu.shifted(i, j)) * c(mu.shifted(j, i))
}

/// Every `(mu, i, j)` with `|mu| = degree`, `i < j`, violating
/// [`discrete_root_log_concavity`].
pub fn root_log_concavity_violations(p: &Polynomial, degree: u32) -> Vec<(ExponentVector, usize, usize)> {
    let n = p.arity();
    let mut out = Vec::new();
    for mu in ExponentVector::all_of_degree(n, degree) {
        for i in 0..n {
            for j in i + 1..n {
                if !discrete_root_log_concavity(p, &mu, i, j) {
                    out.push((mu.clone(), i, j));
                }
            }
        }
    }
    out
}

/// First and second partial derivatives of `h`, computed once and reused
/// at every evaluation point.
struct Derivatives {
    firsts: Vec<Polynomial>,
    seconds: Vec<Vec<Polynomial>>,
}

impl Derivatives {
    fn of(h: &Polynomial) -> Result<Self> {
        let n = h.arity();
        let firsts: Vec<Polynomial> = (0..n).map(|i| h.partial_derivative(i)).collect::<Result<_>>()?;
        let seconds = firsts
            .iter()
            .enumerate()
            .map(|(i, f)| (i..n).map(|j| f.partial_derivative(j)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Ok(Derivatives { firsts, seconds })
    }

    fn max_eigenvalue(&self, h: &Polynomial, point: &[Rational]) -> Result<f64> {
        let n = h.arity();
        if point.iter().any(|x| !x.is_positive()) {
            return Err(Error::Invalid("point must be strictly positive".into()));
        }
        let value = h.evaluate(point)?;
        if value.is_zero() {
            return Err(Error::Invalid("polynomial vanishes at the point".into()));
        }
        let grad: Vec<Rational> = self.firsts.iter().map(|f| f.evaluate(point)).collect::<Result<_>>()?;
        let square = &value * &value;
        let mut m = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let hij = self.seconds[i][j - i].evaluate(point)?;
                let entry = (&value * hij - &grad[i] * &grad[j]) / &square;
                let f = entry.to_f64().unwrap_or(f64::NAN);
                m[(i, j)] = f;
                m[(j, i)] = f;
            }
        }
        let eig = SymmetricEigen::new(m);
        Ok(eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }
}

/// Largest eigenvalue of the Hessian of `log h` at a positive point. The
/// Hessian `(h H - g g^T) / h^2` is assembled exactly and only then rounded.
pub fn log_hessian_max_eigenvalue(h: &Polynomial, point: &[Rational]) -> Result<f64> {
    Derivatives::of(h)?.max_eigenvalue(h, point)
}

/// Advisory numeric check that `log h` is concave at each point: no
/// eigenvalue of its Hessian exceeds `tol`.
pub fn numeric_log_concavity_spot(h: &Polynomial, points: &[Vec<Rational>], tol: f64) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::Invalid("zero polynomial".into()));
    }
    let d = Derivatives::of(h)?;
    for p in points {
        if d.max_eigenvalue(h, p)? > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(c: &[i64]) -> Polynomial {
        // c[k] is the coefficient of x1^k x2^(d-k)
        let d = c.len() as u32 - 1;
        let terms: Vec<(Vec<u32>, i64)> = c
            .iter()
            .enumerate()
            .map(|(k, &x)| (vec![k as u32, d - k as u32], x))
            .collect();
        let refs: Vec<(&[u32], i64)> = terms.iter().map(|(e, x)| (e.as_slice(), *x)).collect();
        Polynomial::from_int_terms(2, &refs)
    }

    #[test]
    fn ulc_examples() {
        assert!(bivariate_ulc(&bi(&[1, 2, 1])).unwrap());
        assert!(!bivariate_ulc(&bi(&[1, 1, 1])).unwrap());
        assert!(!bivariate_ulc(&bi(&[1, 0, 1])).unwrap());
        assert!(bivariate_ulc(&bi(&[0, 0, 3])).unwrap());
        assert!(bivariate_ulc(&Polynomial::zero(2)).unwrap());
        assert!(bivariate_ulc(&Polynomial::one(3)).is_err());
    }

    #[test]
    fn root_inequality() {
        let s20 = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert!(discrete_root_log_concavity(&s20, &vec![1, 1].into(), 0, 1));
        assert!(discrete_root_log_concavity(&s20, &vec![2, 0].into(), 0, 1));
        assert!(root_log_concavity_violations(&s20, 2).is_empty());
        let bad = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        assert_eq!(root_log_concavity_violations(&bad, 2).len(), 1);
    }

    #[test]
    fn log_hessian_of_product() {
        let h = Polynomial::from_int_terms(2, &[(&[1, 1], 1)]);
        let one = Rational::from_integer(1.into());
        let top = log_hessian_max_eigenvalue(&h, &[one.clone(), one.clone()]).unwrap();
        assert!((top + 1.0).abs() < 1e-12);
        assert!(numeric_log_concavity_spot(&h, &[vec![one.clone(), one]], 1e-8).unwrap());
    }
}
