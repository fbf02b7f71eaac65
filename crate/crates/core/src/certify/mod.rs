//! Exact Lorentzian certification with re-checkable witnesses.
//!
//! A homogeneous polynomial `h` of degree `d` passes when its coefficients
//! are nonnegative, its support is M-convex, and for every multiset
//! `{i_1, ..., i_{d-2}}` the quadratic form `∂_{i_1} ... ∂_{i_{d-2}} h` has
//! at most one positive eigenvalue. Multisets suffice because mixed
//! partials commute.

mod logconcave;
mod matrix;
mod mconvex;
pub mod univariate;

use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{factorials, ExponentVector, Polynomial, Rational};

pub use logconcave::{
    bivariate_ulc, discrete_root_log_concavity, log_hessian_max_eigenvalue, numeric_log_concavity_spot,
    root_log_concavity_violations,
};
pub use matrix::{characteristic_polynomial, inertia, quadratic_form_matrix, InertiaSignature, SymmetricMatrix};
pub use mconvex::{is_m_convex, m_convex_witness, ExchangeWitness, SupportSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Lorentzian,
    NotLorentzian,
}

/// Why a polynomial is not Lorentzian. Variable indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// Two distinct total degrees present in the polynomial.
    NotHomogeneous {
        degrees: (u32, u32),
    },
    NegativeCoefficient {
        exponent: ExponentVector,
        coefficient: Rational,
    },
    SupportNotMConvex(ExchangeWitness),
    /// The quadratic form of `∂^multiset h` has more than one positive
    /// eigenvalue. `multiset` is sorted.
    HessianFailure {
        multiset: Vec<usize>,
        inertia: InertiaSignature,
    },
}

/// 1-based, like the JSON form.
impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotHomogeneous { degrees: (a, b) } => write!(f, "terms of degrees {a} and {b}"),
            Failure::NegativeCoefficient { exponent, coefficient } => {
                write!(f, "coefficient {coefficient} at exponent {exponent}")
            }
            Failure::SupportNotMConvex(w) => {
                write!(f, "exchange fails for alpha={} beta={} i={}", w.alpha, w.beta, w.i + 1)
            }
            Failure::HessianFailure { multiset, inertia } => {
                let m: Vec<String> = multiset.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "quadratic form of d^{{{}}} has inertia {inertia}", m.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

/// One stage of the certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    /// Number of quadratic forms examined; only for the Hessian stage.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
}

pub const CHECK_NAMES: [&str; 4] = ["homogeneous", "nonnegative", "m_convex", "hessians"];

/// Outcome of [`lorentzian_certify`].
///
/// Serializes to JSON with 1-based variable indices:
///
/// ```json
/// {"verdict": "not_lorentzian", "degree": 2, "arity": 2,
///  "checks": [{"name": "homogeneous", "status": "passed"}, ...],
///  "failure": {"kind": "hessian_failure", "multiset": [],
///              "inertia": {"positive": 2, "negative": 0, "zero": 0}}}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CertificateRecord", try_from = "CertificateRecord")]
pub struct LorentzCertificate {
    pub verdict: Verdict,
    /// Total degree; `None` for the zero polynomial.
    pub degree: Option<u32>,
    pub arity: usize,
    pub checks: Vec<Check>,
    pub failure: Option<Failure>,
}

impl LorentzCertificate {
    pub fn is_lorentzian(&self) -> bool {
        self.verdict == Verdict::Lorentzian
    }

    /// Independently re-verifies the certificate against `h`: a failure
    /// witness must fail again when checked directly, and a positive
    /// verdict must be reproduced.
    pub fn recheck(&self, h: &Polynomial) -> bool {
        if h.arity() != self.arity {
            return false;
        }
        match &self.failure {
            None => self.is_lorentzian() && lorentzian_certify(h).is_lorentzian(),
            Some(_) if self.is_lorentzian() => false,
            Some(Failure::NotHomogeneous { degrees: (a, b) }) => {
                let present = h.degrees();
                a != b && present.contains(a) && present.contains(b)
            }
            Some(Failure::NegativeCoefficient { exponent, coefficient }) => {
                coefficient.is_negative() && h.coefficient(exponent) == *coefficient
            }
            Some(Failure::SupportNotMConvex(w)) => w.holds_in(&SupportSet::of(h)),
            Some(Failure::HessianFailure { multiset, inertia: sig }) => {
                let Some(d) = h.total_degree() else { return false };
                if multiset.len() + 2 != d as usize || multiset.iter().any(|&i| i >= h.arity()) {
                    return false;
                }
                let mut mu = vec![0u32; h.arity()];
                for &i in multiset {
                    mu[i] += 1;
                }
                let q = h
                    .partial_derivative_multi(&ExponentVector::new(mu))
                    .and_then(|q| quadratic_form_matrix(&q));
                match q {
                    Ok(m) => {
                        let found = inertia(&m);
                        found == *sig && found.positive >= 2
                    }
                    Err(_) => false,
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn checks(statuses: [CheckStatus; 4], count: Option<usize>) -> Vec<Check> {
    CHECK_NAMES
        .iter()
        .zip(statuses)
        .map(|(name, status)| Check {
            name: (*name).to_string(),
            status,
            count: if *name == "hessians" && status != CheckStatus::Skipped {
                count
            } else {
                None
            },
        })
        .collect()
}

/// Decides whether `h` is Lorentzian. Checks run in order (homogeneity,
/// nonnegativity, M-convex support, quadratic forms) and stop at the first
/// failure. Degree below two, and the zero polynomial, need only the first
/// three.
///
/// When several quadratic forms fail, the reported multiset is the
/// lexicographically smallest sorted index list.
pub fn lorentzian_certify(h: &Polynomial) -> LorentzCertificate {
    use CheckStatus::{Failed, Passed, Skipped};
    let arity = h.arity();
    let degree = h.total_degree();
    let fail = |statuses, failure| LorentzCertificate {
        verdict: Verdict::NotLorentzian,
        degree,
        arity,
        checks: checks(statuses, None),
        failure: Some(failure),
    };

    let degrees = h.degrees();
    if degrees.len() > 1 {
        let mut it = degrees.iter().copied();
        let a = it.next().expect("two degrees");
        let b = it.next().expect("two degrees");
        return fail(
            [Failed, Skipped, Skipped, Skipped],
            Failure::NotHomogeneous { degrees: (a, b) },
        );
    }
    if let Some((e, c)) = h.terms().find(|(_, c)| c.is_negative()) {
        return fail(
            [Passed, Failed, Skipped, Skipped],
            Failure::NegativeCoefficient {
                exponent: e.clone(),
                coefficient: c.clone(),
            },
        );
    }
    if let Some(w) = m_convex_witness(&SupportSet::of(h)) {
        return fail([Passed, Passed, Failed, Skipped], Failure::SupportNotMConvex(w));
    }
    let d = degree.unwrap_or(0);
    if d < 2 {
        return LorentzCertificate {
            verdict: Verdict::Lorentzian,
            degree,
            arity,
            checks: checks([Passed; 4], Some(0)),
            failure: None,
        };
    }
    let forms = quadratic_forms(h);
    let count = forms.len();
    for (multiset, m) in forms {
        let sig = inertia(&m);
        if sig.positive > 1 {
            return LorentzCertificate {
                verdict: Verdict::NotLorentzian,
                degree,
                arity,
                checks: checks([Passed, Passed, Passed, Failed], Some(count)),
                failure: Some(Failure::HessianFailure { multiset, inertia: sig }),
            };
        }
    }
    LorentzCertificate {
        verdict: Verdict::Lorentzian,
        degree,
        arity,
        checks: checks([Passed; 4], Some(count)),
        failure: None,
    }
}

/// The nonzero quadratic forms `∂^kappa h`, `|kappa| = d - 2`, keyed by the
/// sorted index list of `kappa` and returned in lexicographic order.
///
/// Built in one pass over the terms: `c x^alpha` contributes `c alpha! / 2`
/// to entry `(a, b)` of the form for `kappa = alpha - e_a - e_b`.
pub fn quadratic_forms(h: &Polynomial) -> Vec<(Vec<usize>, SymmetricMatrix)> {
    let n = h.arity();
    let top = h
        .terms()
        .flat_map(|(e, _)| e.entries().iter().copied())
        .max()
        .unwrap_or(0);
    let fact = factorials(top);
    let half = Rational::new(1.into(), 2.into());
    let mut forms: HashMap<ExponentVector, SymmetricMatrix> = HashMap::new();
    for (alpha, c) in h.terms() {
        let alpha_fact = alpha
            .entries()
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, &k| acc * &fact[k as usize]);
        let weight = c * Rational::from_integer(alpha_fact) * &half;
        for a in 0..n {
            for b in a..n {
                let Some(kappa) = alpha
                    .checked_sub(&ExponentVector::unit(n, a))
                    .and_then(|x| x.checked_sub(&ExponentVector::unit(n, b)))
                else {
                    continue;
                };
                forms
                    .entry(kappa)
                    .or_insert_with(|| SymmetricMatrix::zeros(n))
                    .add_symmetric(a, b, &weight);
            }
        }
    }
    let mut out: Vec<(Vec<usize>, SymmetricMatrix)> = forms
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(kappa, m)| (multiset_of(&kappa), m))
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

fn multiset_of(kappa: &ExponentVector) -> Vec<usize> {
    (0..kappa.arity())
        .flat_map(|i| std::iter::repeat(i).take(kappa.get(i) as usize))
        .collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateRecord {
    verdict: Verdict,
    degree: Option<u32>,
    arity: usize,
    checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    failure: Option<FailureRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum FailureRecord {
    NotHomogeneous {
        degrees: [u32; 2],
    },
    NegativeCoefficient {
        exponent: Vec<u32>,
        coefficient: String,
    },
    SupportNotMConvex {
        alpha: Vec<u32>,
        beta: Vec<u32>,
        i: usize,
    },
    HessianFailure {
        multiset: Vec<usize>,
        inertia: InertiaSignature,
    },
}

impl From<LorentzCertificate> for CertificateRecord {
    fn from(c: LorentzCertificate) -> Self {
        let failure = c.failure.map(|f| match f {
            Failure::NotHomogeneous { degrees: (a, b) } => FailureRecord::NotHomogeneous { degrees: [a, b] },
            Failure::NegativeCoefficient { exponent, coefficient } => FailureRecord::NegativeCoefficient {
                exponent: exponent.into_entries(),
                coefficient: coefficient.to_string(),
            },
            Failure::SupportNotMConvex(w) => FailureRecord::SupportNotMConvex {
                alpha: w.alpha.into_entries(),
                beta: w.beta.into_entries(),
                i: w.i + 1,
            },
            Failure::HessianFailure { multiset, inertia } => FailureRecord::HessianFailure {
                multiset: multiset.into_iter().map(|i| i + 1).collect(),
                inertia,
            },
        });
        CertificateRecord {
            verdict: c.verdict,
            degree: c.degree,
            arity: c.arity,
            checks: c.checks,
            failure,
        }
    }
}

impl TryFrom<CertificateRecord> for LorentzCertificate {
    type Error = Error;

    fn try_from(r: CertificateRecord) -> Result<Self> {
        let one_based = |i: usize| {
            i.checked_sub(1)
                .ok_or_else(|| Error::Invalid("variable indices start at 1".into()))
        };
        let failure = match r.failure {
            None => None,
            Some(FailureRecord::NotHomogeneous { degrees: [a, b] }) => {
                Some(Failure::NotHomogeneous { degrees: (a, b) })
            }
            Some(FailureRecord::NegativeCoefficient { exponent, coefficient }) => Some(Failure::NegativeCoefficient {
                exponent: ExponentVector::new(exponent),
                coefficient: coefficient
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad coefficient {coefficient:?}")))?,
            }),
            Some(FailureRecord::SupportNotMConvex { alpha, beta, i }) => {
                Some(Failure::SupportNotMConvex(ExchangeWitness {
                    alpha: ExponentVector::new(alpha),
                    beta: ExponentVector::new(beta),
                    i: one_based(i)?,
                }))
            }
            Some(FailureRecord::HessianFailure { multiset, inertia }) => Some(Failure::HessianFailure {
                multiset: multiset.into_iter().map(one_based).collect::<Result<_>>()?,
                inertia,
            }),
        };
        if failure.is_some() != (r.verdict == Verdict::NotLorentzian) {
            return Err(Error::Invalid(
                "a failure is present exactly when the verdict is not_lorentzian".into(),
            ));
        }
        Ok(LorentzCertificate {
            verdict: r.verdict,
            degree: r.degree,
            arity: r.arity,
            checks: r.checks,
            failure,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s20() -> Polynomial {
        Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
    }

    #[test]
    fn schur_two_is_not_lorentzian() {
        let cert = lorentzian_certify(&s20());
        assert_eq!(cert.verdict, Verdict::NotLorentzian);
        assert_eq!(
            cert.failure,
            Some(Failure::HessianFailure {
                multiset: vec![],
                inertia: InertiaSignature {
                    positive: 2,
                    negative: 0,
                    zero: 0
                }
            })
        );
        assert!(cert.recheck(&s20()));
        assert!(lorentzian_certify(&s20().normalize()).is_lorentzian());
    }

    #[test]
    fn early_failures() {
        let mixed = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        let c = lorentzian_certify(&mixed);
        assert_eq!(c.failure, Some(Failure::NotHomogeneous { degrees: (0, 1) }));
        assert!(c.recheck(&mixed));

        let neg = Polynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let c = lorentzian_certify(&neg);
        assert!(matches!(c.failure, Some(Failure::NegativeCoefficient { .. })));
        assert!(c.recheck(&neg));

        let gap = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        let c = lorentzian_certify(&gap);
        assert!(matches!(c.failure, Some(Failure::SupportNotMConvex(_))));
        assert!(c.recheck(&gap));
    }

    #[test]
    fn low_degree_convention() {
        assert!(lorentzian_certify(&Polynomial::zero(3)).is_lorentzian());
        assert!(lorentzian_certify(&Polynomial::one(2)).is_lorentzian());
        let lin = Polynomial::from_int_terms(3, &[(&[1, 0, 0], 2), (&[0, 0, 1], 1)]);
        assert!(lorentzian_certify(&lin).is_lorentzian());
    }

    #[test]
    fn smallest_failing_multiset_is_reported() {
        let h = Polynomial::from_int_terms(3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 3], 1)]);
        let forms = quadratic_forms(&h);
        let keys: Vec<Vec<usize>> = forms.iter().map(|(k, _)| k.clone()).collect();
        assert_eq!(keys, vec![vec![0], vec![1], vec![2]]);
        // support is not M-convex, so the Hessian stage is never reached
        assert!(matches!(
            lorentzian_certify(&h).failure,
            Some(Failure::SupportNotMConvex(_))
        ));
    }

    #[test]
    fn forms_match_direct_derivatives() {
        let h = Polynomial::from_int_terms(3, &[(&[2, 1, 0], 3), (&[1, 1, 1], 2), (&[0, 1, 2], 5), (&[0, 0, 3], 1)]);
        for (multiset, m) in quadratic_forms(&h) {
            let mut mu = vec![0u32; 3];
            for i in multiset {
                mu[i] += 1;
            }
            let q = h.partial_derivative_multi(&ExponentVector::new(mu)).unwrap();
            assert_eq!(quadratic_form_matrix(&q).unwrap(), m);
        }
    }

    #[test]
    fn json_round_trip_uses_one_based_indices() {
        let gap = Polynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]);
        let c = lorentzian_certify(&gap);
        let json = c.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["verdict"], "not_lorentzian");
        assert_eq!(v["failure"]["kind"], "support_not_m_convex");
        assert_eq!(v["failure"]["i"], 1);
        let back: LorentzCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);

        let ok = lorentzian_certify(&s20().normalize());
        let v: serde_json::Value = serde_json::from_str(&ok.to_json()).unwrap();
        assert!(v.get("failure").is_none());
        assert_eq!(v["checks"][3]["count"], 1);
    }
}
