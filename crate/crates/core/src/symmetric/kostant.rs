use std::collections::HashMap;

use super::partition::WeightVector;
use num_traits::One;

use crate::poly::{ExponentVector, Polynomial, Rational, ShiftedLaurent};

/// Number of ways to write `v` as a sum (multiset) of negative roots
/// `e_b - e_a`, `a < b`.
///
/// Roots are processed in lexicographic order of `(a, b)`; the multiplicity
/// of each is bounded because every root crossing the cut after position `c`
/// lowers the prefix sum `v_1 + ... + v_c` by one.
pub fn kostant_partition(v: &WeightVector) -> u64 {
    let n = v.arity();
    if v.0.iter().sum::<i64>() != 0 {
        return 0;
    }
    let roots: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut memo = HashMap::new();
    count(&roots, 0, v.0.clone(), &mut memo)
}

fn count(roots: &[(usize, usize)], idx: usize, rest: Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), u64>) -> u64 {
    if idx == roots.len() {
        return u64::from(rest.iter().all(|&x| x == 0));
    }
    let prefix: Vec<i64> = rest
        .iter()
        .scan(0i64, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect();
    if prefix.iter().any(|&s| s > 0) {
        return 0;
    }
    let key = (idx, rest);
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let (a, b) = roots[idx];
    let bound = (a..b).map(|c| -prefix[c]).min().unwrap_or(0);
    let mut total = 0;
    let mut cur = key.1.clone();
    for k in 0..=bound {
        if k > 0 {
            // subtract one more copy of e_b - e_a
            cur[b] -= 1;
            cur[a] += 1;
        }
        total += count(roots, idx + 1, cur.clone(), memo);
    }
    memo.insert(key, total);
    total
}

/// `N(x^delta * ch)` where `ch = prod_{i>j} (1 + x_i/x_j + x_i^2/x_j^2 + ...)`
/// is the shifted Verma character. Each geometric factor is truncated at
/// exponent `sum(delta)`, which is enough for every surviving monomial.
pub fn verma_truncated_normalized(delta: &ExponentVector) -> Polynomial {
    verma_truncated_with_bound(delta, delta.degree())
}

/// As [`verma_truncated_normalized`] with an explicit per-factor bound.
/// Bounds below `sum(delta)` may lose terms.
pub fn verma_truncated_with_bound(delta: &ExponentVector, bound: u32) -> Polynomial {
    let m = delta.arity();
    assert!(m >= 1, "need at least one variable");
    // factor (i, j), i > j, written as x_j^{-B} * sum_k x_i^k x_j^{B-k}
    let shift: Vec<u32> = (0..m).map(|j| bound * (m - 1 - j) as u32).collect();
    let total = delta.degree();
    // a surviving monomial has every exponent <= sum(delta) after the shift
    let cap = ExponentVector::new(shift.iter().map(|s| s + total).collect());
    let mut body = Polynomial::x_pow(delta.clone());
    for j in 0..m {
        for i in j + 1..m {
            let factor = Polynomial::from_terms(
                m,
                (0..=bound).map(|k| {
                    let mut e = vec![0u32; m];
                    e[i] = k;
                    e[j] = bound - k;
                    (ExponentVector::new(e), Rational::one())
                }),
            )
            .expect("arity m");
            body = body.mul_capped(&factor, &cap).expect("arity m");
        }
    }
    ShiftedLaurent::new(ExponentVector::new(shift), body)
        .expect("arity m")
        .normalize_truncated()
}
