//! Exact sparse multivariate polynomials over the rationals.
//!
//! Variables are indexed from 0 in the Rust API; the text format and all
//! user-facing output use `x1, x2, ...`.

mod laurent;
pub mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use laurent::ShiftedLaurent;

/// Exact coefficient type.
pub type Rational = BigRational;

/// A point of `N^n`: the exponent of a monomial, a weight, or a composition.
///
/// Ordered graded-lexicographically (total degree first, then `x1 > x2 > ...`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    /// The standard unit vector `e_i`.
    pub fn unit(arity: usize, i: usize) -> Self {
        let mut v = vec![0; arity];
        v[i] = 1;
        ExponentVector(v)
    }

    /// `(k, k, ..., k)`.
    pub fn constant(arity: usize, k: u32) -> Self {
        ExponentVector(vec![k; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self + e_i - e_j`, or `None` if an entry would go negative.
    pub fn shifted(&self, i: usize, j: usize) -> Option<ExponentVector> {
        let mut v = self.0.clone();
        v[j] = v[j].checked_sub(1)?;
        v[i] += 1;
        Some(ExponentVector(v))
    }

    /// `mu! = prod mu_i!`.
    pub fn factorial(&self) -> BigInt {
        let table = factorials(self.0.iter().copied().max().unwrap_or(0));
        self.factorial_with(&table)
    }

    fn factorial_with(&self, table: &[BigInt]) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &e| acc * &table[e as usize])
    }

    /// All vectors in `N^arity` with entries summing to `degree`, in
    /// descending graded-lex order.
    pub fn all_of_degree(arity: usize, degree: u32) -> Vec<ExponentVector> {
        fn rec(rest: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if rest == 1 {
                cur.push(left);
                out.push(ExponentVector(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(rest - 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if arity == 0 {
            if degree == 0 {
                out.push(ExponentVector(Vec::new()));
            }
            return out;
        }
        rec(arity, degree, &mut Vec::with_capacity(arity), &mut out);
        out
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `0!, 1!, ..., n!`.
pub fn factorials(n: u32) -> Vec<BigInt> {
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(BigInt::one());
    for k in 1..=n {
        let next = &table[k as usize - 1] * BigInt::from(k);
        table.push(next);
    }
    table
}

/// What to substitute for a variable in [`Polynomial::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    Value(Rational),
    Variable(usize),
}

/// A polynomial in a fixed number of variables with exact rational
/// coefficients. The zero polynomial has no terms; no stored coefficient is
/// ever zero, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(ExponentVector::zeros(arity), c)
    }

    pub fn monomial(exponent: ExponentVector, c: Rational) -> Self {
        let arity = exponent.arity();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Polynomial { arity, terms }
    }

    /// `x^exponent` with coefficient 1.
    pub fn x_pow(exponent: ExponentVector) -> Self {
        Self::monomial(exponent, Rational::one())
    }

    pub fn variable(arity: usize, i: usize) -> Self {
        Self::x_pow(ExponentVector::unit(arity, i))
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Polynomial::zero(arity);
        for (e, c) in terms {
            if e.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.arity(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Like [`Polynomial::from_terms`] for small integer coefficients.
    pub fn from_int_terms(arity: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            arity,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::new(e.to_vec()), Rational::from_integer((*c).into()))),
        )
        .expect("exponent arity")
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn from_hash(arity: usize, acc: HashMap<ExponentVector, Rational>) -> Self {
        Polynomial {
            arity,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_ref(&self, e: &ExponentVector) -> Option<&Rational> {
        self.terms.get(e)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(ExponentVector::degree)
    }

    /// Distinct total degrees of the terms.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(ExponentVector::degree).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Degree in a single variable; 0 for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.get(var)).max().unwrap_or(0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                *acc.entry(a.add(b)).or_insert_with(Rational::zero) += c;
            }
        }
        Ok(Self::from_hash(self.arity, acc))
    }

    /// Product that discards every term with some exponent above `cap`.
    /// Exponents only grow under multiplication by polynomials, so this is
    /// the same as truncating the full product.
    pub fn mul_capped(&self, other: &Polynomial, cap: &ExponentVector) -> Result<Polynomial> {
        self.check_arity(other)?;
        if cap.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: cap.arity(),
            });
        }
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.add(b);
                if cap.dominates(&e) {
                    *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
                }
            }
        }
        Ok(Self::from_hash(self.arity, acc))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// `x^mu * self`.
    pub fn mul_monomial(&self, mu: &ExponentVector) -> Result<Polynomial> {
        if mu.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: mu.arity(),
            });
        }
        Ok(Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.add(mu), c.clone())).collect(),
        })
    }

    /// The normalization operator `N(x^mu) = x^mu / mu!`, extended linearly.
    pub fn normalize(&self) -> Polynomial {
        let top = self
            .terms
            .keys()
            .flat_map(|e| e.entries().iter().copied())
            .max()
            .unwrap_or(0);
        let table = factorials(top);
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let f = e.factorial_with(&table);
                    (e.clone(), c / Rational::from_integer(f))
                })
                .collect(),
        }
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.arity);
        for (e, c) in &self.terms {
            let k = e.get(i);
            if k == 0 {
                continue;
            }
            let mut v = e.0.clone();
            v[i] -= 1;
            out.terms
                .insert(ExponentVector(v), c * Rational::from_integer(k.into()));
        }
        Ok(out)
    }

    /// `∂^mu = (∂/∂x_1)^{mu_1} ... (∂/∂x_n)^{mu_n}`.
    pub fn partial_derivative_multi(&self, mu: &ExponentVector) -> Result<Polynomial> {
        if mu.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: mu.arity(),
            });
        }
        let mut out = Polynomial::zero(self.arity);
        for (e, c) in &self.terms {
            let Some(rest) = e.checked_sub(mu) else { continue };
            // e! / (e - mu)!
            let mut falling = BigInt::one();
            for (a, b) in e.entries().iter().zip(mu.entries()) {
                for t in 0..*b {
                    falling *= BigInt::from(a - t);
                }
            }
            out.terms.insert(rest, c * Rational::from_integer(falling));
        }
        Ok(out)
    }

    /// `x^mu * p(1/x_1, ..., 1/x_n)`; requires `mu_i >= deg_{x_i} p`.
    pub fn dualize(&self, mu: &ExponentVector) -> Result<Polynomial> {
        if mu.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: mu.arity(),
            });
        }
        for var in 0..self.arity {
            let d = self.degree_in(var);
            if d > mu.get(var) {
                return Err(Error::ExponentDeficit {
                    var,
                    needed: d,
                    available: mu.get(var),
                });
            }
        }
        Ok(Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (mu.checked_sub(e).expect("checked above"), c.clone()))
                .collect(),
        })
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Interchange `x_i` and `x_j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.0.clone();
                    v.swap(i, j);
                    (ExponentVector(v), c.clone())
                })
                .collect(),
        })
    }

    /// Simultaneous substitution. Unassigned variables are left alone; the
    /// arity is unchanged (substituted variables simply stop appearing).
    pub fn specialize(&self, assignments: &BTreeMap<usize, Substitution>) -> Result<Polynomial> {
        for (&var, sub) in assignments {
            self.check_index(var)?;
            if let Substitution::Variable(target) = sub {
                self.check_index(*target)?;
            }
        }
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut v = e.0.clone();
            let mut moved = vec![0u32; self.arity];
            for (&var, sub) in assignments {
                let k = e.get(var);
                v[var] = 0;
                match sub {
                    Substitution::Value(x) => coeff *= num_traits::pow(x.clone(), k as usize),
                    Substitution::Variable(t) => moved[*t] += k,
                }
            }
            for (slot, m) in v.iter_mut().zip(moved) {
                *slot += m;
            }
            *acc.entry(ExponentVector(v)).or_insert_with(Rational::zero) += coeff;
        }
        Ok(Self::from_hash(self.arity, acc))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.entries()) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Reinterpret in `new_arity >= arity` variables; the new ones are
    /// appended and do not occur.
    pub fn embed(&self, new_arity: usize) -> Result<Polynomial> {
        if new_arity < self.arity {
            return Err(Error::Invalid(format!(
                "cannot embed arity {} into {new_arity}",
                self.arity
            )));
        }
        Ok(Polynomial {
            arity: new_arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.0.clone();
                    v.resize(new_arity, 0);
                    (ExponentVector(v), c.clone())
                })
                .collect(),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on arity mismatch; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_polynomial(self))
    }
}
