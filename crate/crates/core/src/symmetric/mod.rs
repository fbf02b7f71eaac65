//! Schur-family generators, Kostka numbers, the Kostant partition function
//! and truncated Verma characters.

mod kostant;
mod partition;
mod tableaux;

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use crate::poly::{ExponentVector, Polynomial};

pub use kostant::{kostant_partition, verma_truncated_normalized, verma_truncated_with_bound};
pub use partition::{complement_partition, Partition, SkewShape, StrictPartition, WeightVector};

/// `s_lambda(x_1, ..., x_m)` by enumerating semistandard tableaux. Zero if
/// `lambda` has more than `m` parts.
pub fn schur(lambda: &Partition, m: usize) -> Polynomial {
    assert!(m >= 1, "need at least one variable");
    tableaux::ssyt_polynomial(&SkewShape::straight(lambda.clone()), m)
}

/// Skew Schur polynomial `s_{lambda/nu}(x_1, ..., x_m)`.
pub fn skew_schur(shape: &SkewShape, m: usize) -> Polynomial {
    assert!(m >= 1, "need at least one variable");
    tableaux::ssyt_polynomial(shape, m)
}

/// Schur P-polynomial `P_lambda(x_1, ..., x_m)` from marked shifted
/// tableaux with unprimed diagonal.
pub fn schur_p(lambda: &StrictPartition, m: usize) -> Polynomial {
    assert!(m >= 1, "need at least one variable");
    tableaux::marked_shifted_polynomial(lambda, m)
}

/// `h_k(x_1, ..., x_m)`: every degree-`k` monomial with coefficient 1.
pub fn complete_homogeneous(k: u32, m: usize) -> Polynomial {
    assert!(m >= 1, "need at least one variable");
    Polynomial::from_terms(
        m,
        ExponentVector::all_of_degree(m, k)
            .into_iter()
            .map(|e| (e, BigRational::one())),
    )
    .expect("arity m")
}

/// Kostka number `K_{lambda mu}`: the number of semistandard tableaux of
/// shape `lambda` and weight `mu`.
///
/// Counted by peeling off horizontal strips (Gelfand-Tsetlin patterns),
/// independently of the tableau enumeration behind [`schur`].
pub fn kostka(lambda: &Partition, mu: &ExponentVector) -> u64 {
    if lambda.size() != mu.degree() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(lambda.parts(), mu.entries(), &mut memo)
}

fn kostka_rec(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
    if mu.is_empty() {
        return u64::from(lambda.is_empty());
    }
    if lambda.len() > mu.len() {
        return 0;
    }
    let key = (lambda.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (last, rest) = mu.split_last().expect("nonempty");
    let mut total = 0;
    let mut nu = vec![0u32; lambda.len()];
    strips(lambda, 0, *last, &mut nu, &mut |nu| {
        let mut trimmed = nu.to_vec();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `f` with every `nu` such that `lambda / nu` is a horizontal strip of
/// `size` boxes, i.e. `lambda_{i+1} <= nu_i <= lambda_i`.
fn strips(lambda: &[u32], i: usize, size: u32, nu: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if i == lambda.len() {
        if size == 0 {
            f(nu);
        }
        return;
    }
    let lo = lambda.get(i + 1).copied().unwrap_or(0);
    let hi = lambda[i];
    for v in lo..=hi {
        let removed = hi - v;
        if removed > size {
            continue;
        }
        nu[i] = v;
        strips(lambda, i + 1, size - removed, nu, f);
    }
}
