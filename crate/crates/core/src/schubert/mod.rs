//! Permutation combinatorics and the operator recursions for Schubert,
//! Grothendieck, key and degree polynomials.

mod bruhat;
mod perm;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial};

pub use bruhat::{
    bruhat_covers, bruhat_down_covers, chevalley_multiplicity, degree_polynomial, saturated_chain_count, BruhatCover,
};
pub use perm::{grassmannian_for, Permutation};

/// Divided difference `∂_i f = (f - s_i f) / (x_i - x_{i+1})` (0-based `i`).
///
/// Computed termwise: `(x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})`
/// is a geometric sum.
pub fn divided_difference(p: &Polynomial, i: usize) -> Result<Polynomial> {
    let n = p.arity();
    if i + 1 >= n {
        return Err(Error::IndexOutOfRange { index: i, arity: n });
    }
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        let (a, b) = (e.get(i), e.get(i + 1));
        if a == b {
            continue;
        }
        let (lo, hi, coeff) = if a > b { (b, a, c.clone()) } else { (a, b, -c.clone()) };
        for k in 0..hi - lo {
            let mut v = e.entries().to_vec();
            v[i] = lo + k;
            v[i + 1] = hi - 1 - k;
            terms.push((ExponentVector::new(v), coeff.clone()));
        }
    }
    let out = Polynomial::from_terms(n, terms)?;
    debug_assert_eq!(
        {
            let lin = &Polynomial::variable(n, i) - &Polynomial::variable(n, i + 1);
            &lin * &out
        },
        p - &p.swap_variables(i, i + 1).expect("in range"),
        "divided difference is not an exact quotient"
    );
    Ok(out)
}

/// Isobaric divided difference `π_i = ∂_i - ∂_i x_{i+1}`.
pub fn demazure_pi(p: &Polynomial, i: usize) -> Result<Polynomial> {
    let n = p.arity();
    if i + 1 >= n {
        return Err(Error::IndexOutOfRange { index: i, arity: n });
    }
    let shifted = p.mul_monomial(&ExponentVector::unit(n, i + 1))?;
    Ok(&divided_difference(p, i)? - &divided_difference(&shifted, i)?)
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn staircase(n: usize) -> Polynomial {
    Polynomial::x_pow(ExponentVector::new((0..n).map(|i| (n - 1 - i) as u32).collect()))
}

/// Which ascent to climb through when walking from `w` up to `w0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentOrder {
    Smallest,
    Largest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorFamily {
    /// `∂_i` from the staircase: Schubert polynomials.
    Schubert,
    /// `π_i` from the staircase: Grothendieck polynomials.
    Grothendieck,
}

impl OperatorFamily {
    fn apply(self, p: &Polynomial, i: usize) -> Polynomial {
        match self {
            OperatorFamily::Schubert => divided_difference(p, i),
            OperatorFamily::Grothendieck => demazure_pi(p, i),
        }
        .expect("index below n - 1")
    }
}

fn descend(w: &Permutation, family: OperatorFamily, order: DescentOrder) -> Polynomial {
    // climb to w0 recording the ascents used, then apply operators back down
    let mut path = Vec::new();
    let mut cur = w.clone();
    loop {
        let asc = cur.ascents();
        let pick = match order {
            DescentOrder::Smallest => asc.first(),
            DescentOrder::Largest => asc.last(),
        };
        let Some(&i) = pick else { break };
        path.push(i);
        cur = cur.swap_positions(i, i + 1);
    }
    let mut p = staircase(w.n());
    for &i in path.iter().rev() {
        p = family.apply(&p, i);
    }
    p
}

/// Schubert polynomial `S_w(x_1, ..., x_n)`.
pub fn schubert(w: &Permutation) -> Polynomial {
    descend(w, OperatorFamily::Schubert, DescentOrder::Smallest)
}

pub fn schubert_with(w: &Permutation, order: DescentOrder) -> Polynomial {
    descend(w, OperatorFamily::Schubert, order)
}

/// Grothendieck polynomial `G_w(x_1, ..., x_n)`.
pub fn grothendieck(w: &Permutation) -> Polynomial {
    descend(w, OperatorFamily::Grothendieck, DescentOrder::Smallest)
}

pub fn grothendieck_with(w: &Permutation, order: DescentOrder) -> Polynomial {
    descend(w, OperatorFamily::Grothendieck, order)
}

/// `N(x_1^{n-1} ... x_n^{n-1} S_w(1/x_1, ..., 1/x_n))`.
pub fn schubert_dual(w: &Permutation) -> Polynomial {
    schubert_dual_of(&schubert(w))
}

/// The dual construction applied to an already computed `S_w`.
pub fn schubert_dual_of(schubert_poly: &Polynomial) -> Polynomial {
    let n = schubert_poly.arity();
    schubert_poly
        .dualize(&ExponentVector::constant(n, n as u32 - 1))
        .expect("deg_{x_i} S_w <= n - 1")
        .normalize()
}

/// `G^k_w`: the degree `l(w) + k` component of `G_w`.
pub fn grothendieck_component(w: &Permutation, k: u32) -> Polynomial {
    grothendieck(w).homogeneous_component(w.length() + k)
}

/// `sum_k (-1)^k G^k_w z^{d(w) - l(w) - k}` in `n + 1` variables, `z` last.
pub fn homogeneous_grothendieck(w: &Permutation) -> Polynomial {
    homogenize_grothendieck(&grothendieck(w), w.length())
}

/// Homogenization of an already computed `G_w` with `l(w) = length`.
pub fn homogenize_grothendieck(g: &Polynomial, length: u32) -> Polynomial {
    let n = g.arity();
    let top = g.total_degree().unwrap_or(length);
    let terms = g.terms().map(|(e, c)| {
        let k = e.degree() - length;
        let mut v = e.entries().to_vec();
        v.push(top - e.degree());
        let sign = if k % 2 == 0 { c.clone() } else { -c.clone() };
        (ExponentVector::new(v), sign)
    });
    Polynomial::from_terms(n + 1, terms).expect("arity n + 1")
}

/// Key polynomial `kappa_mu`: the monomial `x^mu` when `mu` is weakly
/// decreasing, otherwise `∂_i x_i kappa_{mu s_i}` at the first `i` with
/// `mu_i < mu_{i+1}`.
pub fn key_polynomial(mu: &ExponentVector) -> Polynomial {
    let n = mu.arity();
    assert!(n >= 1, "need at least one variable");
    let mut path = Vec::new();
    let mut cur = mu.entries().to_vec();
    while let Some(i) = (0..n - 1).find(|&i| cur[i] < cur[i + 1]) {
        path.push(i);
        cur.swap(i, i + 1);
    }
    let mut p = Polynomial::x_pow(ExponentVector::new(cur));
    for &i in path.iter().rev() {
        let lifted = p.mul_monomial(&ExponentVector::unit(n, i)).expect("arity n");
        p = divided_difference(&lifted, i).expect("i < n - 1");
    }
    p
}

/// Every polynomial of one operator family over `S_n`, each computed once
/// from its parent `w s_i` (smallest ascent).
#[derive(Clone, Debug)]
pub struct FamilyTable {
    n: usize,
    family: OperatorFamily,
    polys: HashMap<Permutation, Polynomial>,
}

impl FamilyTable {
    pub fn build(n: usize, family: OperatorFamily) -> Self {
        let mut by_length: Vec<Vec<Permutation>> = vec![Vec::new(); n * n.saturating_sub(1) / 2 + 1];
        for w in Permutation::all(n) {
            by_length[w.length() as usize].push(w);
        }
        let mut polys = HashMap::with_capacity(by_length.iter().map(Vec::len).sum());
        polys.insert(Permutation::longest(n), staircase(n));
        for level in by_length.iter().rev().skip(1) {
            for w in level {
                let i = w.ascents()[0];
                let parent = &polys[&w.swap_positions(i, i + 1)];
                let p = family.apply(parent, i);
                polys.insert(w.clone(), p);
            }
        }
        FamilyTable { n, family, polys }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> OperatorFamily {
        self.family
    }

    pub fn get(&self, w: &Permutation) -> Option<&Polynomial> {
        self.polys.get(w)
    }

    /// Entries in lexicographic order of the permutation.
    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &Polynomial)> {
        let mut keys: Vec<&Permutation> = self.polys.keys().collect();
        keys.sort();
        keys.into_iter().map(move |k| (k, &self.polys[k]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn poly(arity: usize, t: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_int_terms(arity, t)
    }

    #[test]
    fn divided_difference_examples() {
        let x1 = Polynomial::variable(2, 0);
        let x2 = Polynomial::variable(2, 1);
        assert_eq!(divided_difference(&x1, 0).unwrap(), Polynomial::one(2));
        assert_eq!(divided_difference(&x2, 0).unwrap(), -&Polynomial::one(2));
        assert_eq!(
            divided_difference(&poly(2, &[(&[2, 1], 1)]), 0).unwrap(),
            poly(2, &[(&[1, 1], 1)])
        );
        assert!(divided_difference(&x1, 1).is_err());
    }

    #[test]
    fn pi_examples() {
        let x1 = Polynomial::variable(2, 0);
        assert_eq!(demazure_pi(&x1, 0).unwrap(), Polynomial::one(2));
        assert_eq!(demazure_pi(&Polynomial::one(2), 0).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert(&w("321")), poly(3, &[(&[2, 1, 0], 1)]));
        assert_eq!(schubert(&w("123")), Polynomial::one(3));
        assert_eq!(schubert(&w("132")), poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]));
        assert_eq!(schubert(&w("1")), Polynomial::one(1));
    }

    #[test]
    fn schubert_dual_examples() {
        assert_eq!(schubert_dual(&w("12")), poly(2, &[(&[1, 1], 1)]));
        assert_eq!(schubert_dual(&w("21")), Polynomial::variable(2, 1));
    }

    #[test]
    fn grothendieck_examples() {
        assert_eq!(grothendieck(&w("321")), staircase(3));
        assert_eq!(grothendieck(&w("123")), Polynomial::one(3));
        let g132 = poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[1, 1, 0], -1)]);
        assert_eq!(grothendieck(&w("132")), g132);
        assert_eq!(grothendieck_with(&w("132"), DescentOrder::Largest), g132);
        assert_eq!(grothendieck_component(&w("132"), 0), schubert(&w("132")));
        assert_eq!(grothendieck_component(&w("132"), 1), poly(3, &[(&[1, 1, 0], -1)]));
        assert!(grothendieck_component(&w("132"), 5).is_zero());
    }

    #[test]
    fn homogeneous_grothendieck_examples() {
        assert_eq!(homogeneous_grothendieck(&w("321")), staircase(3).embed(4).unwrap());
        // x1 z + x2 z + x1 x2
        assert_eq!(
            homogeneous_grothendieck(&w("132")),
            poly(4, &[(&[1, 0, 0, 1], 1), (&[0, 1, 0, 1], 1), (&[1, 1, 0, 0], 1)])
        );
    }

    #[test]
    fn key_examples() {
        assert_eq!(key_polynomial(&vec![2, 1].into()), poly(2, &[(&[2, 1], 1)]));
        assert_eq!(
            key_polynomial(&vec![0, 1].into()),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            key_polynomial(&vec![0, 2].into()),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
    }

    #[test]
    fn table_matches_direct() {
        let t = FamilyTable::build(4, OperatorFamily::Schubert);
        for p in Permutation::all(4) {
            assert_eq!(t.get(&p).unwrap(), &schubert(&p));
        }
        let g = FamilyTable::build(3, OperatorFamily::Grothendieck);
        assert_eq!(g.get(&w("132")).unwrap(), &grothendieck(&w("132")));
        assert_eq!(g.iter().count(), 6);
    }
}
