use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial};

/// A finite set of lattice points of a common arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    arity: usize,
    points: BTreeSet<ExponentVector>,
}

impl SupportSet {
    pub fn new(arity: usize, points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let points: BTreeSet<ExponentVector> = points.into_iter().collect();
        if let Some(bad) = points.iter().find(|p| p.arity() != arity) {
            return Err(Error::ArityMismatch {
                left: arity,
                right: bad.arity(),
            });
        }
        Ok(SupportSet { arity, points })
    }

    /// The exponents of the nonzero terms of `p`.
    pub fn of(p: &Polynomial) -> Self {
        SupportSet {
            arity: p.arity(),
            points: p.support().into_iter().collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.points.contains(e)
    }

    pub fn points(&self) -> impl Iterator<Item = &ExponentVector> {
        self.points.iter()
    }
}

/// A failed exchange: no `j` with `alpha_j < beta_j` makes both
/// `alpha - e_i + e_j` and `beta - e_j + e_i` members. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub alpha: ExponentVector,
    pub beta: ExponentVector,
    pub i: usize,
}

impl ExchangeWitness {
    /// Re-checks the failure directly against `set`.
    pub fn holds_in(&self, set: &SupportSet) -> bool {
        let (a, b, i) = (&self.alpha, &self.beta, self.i);
        set.contains(a) && set.contains(b) && a.get(i) > b.get(i) && !exchange_exists(set, a, b, i)
    }
}

fn exchange_exists(set: &SupportSet, a: &ExponentVector, b: &ExponentVector, i: usize) -> bool {
    (0..set.arity).any(|j| {
        a.get(j) < b.get(j)
            && a.shifted(j, i).is_some_and(|x| set.contains(&x))
            && b.shifted(i, j).is_some_and(|y| set.contains(&y))
    })
}

/// First failing `(alpha, beta, i)`, scanning points in descending
/// graded-lex order, if any.
pub fn m_convex_witness(set: &SupportSet) -> Option<ExchangeWitness> {
    for a in set.points.iter().rev() {
        for b in set.points.iter().rev() {
            if a == b {
                continue;
            }
            for i in 0..set.arity {
                if a.get(i) > b.get(i) && !exchange_exists(set, a, b, i) {
                    return Some(ExchangeWitness {
                        alpha: a.clone(),
                        beta: b.clone(),
                        i,
                    });
                }
            }
        }
    }
    None
}

/// Symmetric exchange property of M-convex sets.
pub fn is_m_convex(set: &SupportSet) -> bool {
    m_convex_witness(set).is_none()
}
