use std::collections::HashMap;

use super::perm::Permutation;
use num_traits::One;

use crate::poly::{ExponentVector, Polynomial, Rational};

/// A covering relation `lower < upper = lower * (i j)` in Bruhat order,
/// where `(i j)` exchanges the entries in positions `i < j` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatCover {
    pub lower: Permutation,
    pub upper: Permutation,
    pub i: usize,
    pub j: usize,
}

/// Upward covers: `w(i) < w(j)` and no position strictly between holds a
/// value strictly between them. Each raises the length by exactly one.
pub fn bruhat_covers(w: &Permutation) -> Vec<BruhatCover> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (w.value(i), w.value(j));
            if a < b && !(i + 1..j).any(|k| a < w.value(k) && w.value(k) < b) {
                out.push(BruhatCover {
                    lower: w.clone(),
                    upper: w.swap_positions(i, j),
                    i,
                    j,
                });
            }
        }
    }
    out
}

/// Downward covers of `w`.
pub fn bruhat_down_covers(w: &Permutation) -> Vec<BruhatCover> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (w.value(i), w.value(j));
            if a > b && !(i + 1..j).any(|k| b < w.value(k) && w.value(k) < a) {
                out.push(BruhatCover {
                    lower: w.swap_positions(i, j),
                    upper: w.clone(),
                    i,
                    j,
                });
            }
        }
    }
    out
}

/// `x_i + x_{i+1} + ... + x_{j-1}` in `arity` variables (0-based positions).
pub fn chevalley_multiplicity(i: usize, j: usize, arity: usize) -> Polynomial {
    Polynomial::from_terms(arity, (i..j).map(|k| (ExponentVector::unit(arity, k), Rational::one()))).expect("arity")
}

/// Degree polynomial: sum over saturated chains from the identity to `w` of
/// the product of Chevalley multiplicities, in `n - 1` variables (one
/// variable when `n = 1`).
///
/// Chains are walked depth first from `w` downwards with the running
/// product carried along the path.
pub fn degree_polynomial(w: &Permutation) -> Polynomial {
    let arity = w.n().saturating_sub(1).max(1);
    let mut total = Polynomial::zero(arity);
    let acc = Polynomial::one(arity);
    walk(w, &acc, arity, &mut total);
    total
}

fn walk(v: &Permutation, acc: &Polynomial, arity: usize, total: &mut Polynomial) {
    if v.length() == 0 {
        *total = &*total + acc;
        return;
    }
    for cover in bruhat_down_covers(v) {
        let next = acc * &chevalley_multiplicity(cover.i, cover.j, arity);
        walk(&cover.lower, &next, arity, total);
    }
}

/// Number of saturated chains from the identity to `w`, by memoized
/// recursion over the down-cover graph.
pub fn saturated_chain_count(w: &Permutation) -> u64 {
    fn rec(v: &Permutation, memo: &mut HashMap<Permutation, u64>) -> u64 {
        if v.length() == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(v) {
            return c;
        }
        let c = bruhat_down_covers(v).iter().map(|cv| rec(&cv.lower, memo)).sum();
        memo.insert(v.clone(), c);
        c
    }
    rec(w, &mut HashMap::new())
}
