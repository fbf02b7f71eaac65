use num_traits::Zero;

use super::{factorials, ExponentVector, Polynomial, Rational};
use crate::error::{Error, Result};

/// The Laurent polynomial `x^{-shift} * body`.
///
/// Only truncation followed by normalization is supported; there is no
/// Laurent arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedLaurent {
    shift: ExponentVector,
    body: Polynomial,
}

impl ShiftedLaurent {
    /// Builds the canonical representative: common factors `x_i` are moved
    /// out of the body while `shift_i > 0`.
    pub fn new(shift: ExponentVector, body: Polynomial) -> Result<Self> {
        if shift.arity() != body.arity() {
            return Err(Error::ArityMismatch {
                left: shift.arity(),
                right: body.arity(),
            });
        }
        if body.is_zero() {
            return Ok(ShiftedLaurent { shift, body });
        }
        let arity = body.arity();
        let mut cancel = vec![0u32; arity];
        for (i, slot) in cancel.iter_mut().enumerate() {
            let common = body.terms().map(|(e, _)| e.get(i)).min().unwrap_or(0);
            *slot = common.min(shift.get(i));
        }
        let cancel = ExponentVector::new(cancel);
        let shift = shift.checked_sub(&cancel).expect("bounded by shift");
        let body = Polynomial::from_terms(
            arity,
            body.terms()
                .map(|(e, c)| (e.checked_sub(&cancel).expect("bounded by body"), c.clone())),
        )?;
        Ok(ShiftedLaurent { shift, body })
    }

    pub fn shift(&self) -> &ExponentVector {
        &self.shift
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    /// Drops every term with a negative exponent and applies `N` to the rest.
    pub fn normalize_truncated(&self) -> Polynomial {
        let arity = self.body.arity();
        let kept: Vec<(ExponentVector, Rational)> = self
            .body
            .terms()
            .filter_map(|(e, c)| e.checked_sub(&self.shift).map(|a| (a, c.clone())))
            .collect();
        let top = kept
            .iter()
            .flat_map(|(e, _)| e.entries().iter().copied())
            .max()
            .unwrap_or(0);
        let table = factorials(top);
        let terms = kept.into_iter().map(|(e, c)| {
            let f = e
                .entries()
                .iter()
                .fold(num_bigint::BigInt::from(1), |acc, &k| acc * &table[k as usize]);
            (e, c / Rational::from_integer(f))
        });
        let p = Polynomial::from_terms(arity, terms).expect("arity preserved");
        debug_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        p
    }
}
