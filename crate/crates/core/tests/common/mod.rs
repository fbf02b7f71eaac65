//! Independent oracles shared by the integration test targets. Nothing here
//! calls the code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use lorentz_core::poly::ExponentVector;
use lorentz_core::schubert::Permutation;
use lorentz_core::{InertiaSignature, Partition, Polynomial, Rational, SymmetricMatrix};
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut sign = Rational::one();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            sign = -sign;
        }
        let pivot = a[col][col].clone();
        d *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    sign * d
}

/// Rank by Gaussian elimination.
pub fn rank(mut a: Vec<Vec<Rational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for k in c..cols {
                let sub = &f * &a[r][k];
                a[i][k] -= sub;
            }
        }
        r += 1;
    }
    r
}

fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `det(tI - M) / t^z` at `t != 0`.
fn reduced_charpoly_sign(rows: &[Vec<Rational>], t: &Rational, z: usize) -> i8 {
    let n = rows.len();
    let shifted: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = -rows[i][j].clone();
                    if i == j {
                        e + t
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let s = sign(&det(shifted));
    if t.is_negative() && z % 2 == 1 {
        -s
    } else {
        s
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Inertia by bracketing eigenvalues: the zero count is `n - rank`; the
/// nonzero eigenvalues are the roots of `g(t) = det(tI - M) / t^z`, located
/// by sign changes of `g` on a grid over the Gershgorin interval, refined
/// until the number of sign changes equals the number of nonzero
/// eigenvalues. `g(0)` has the sign of `(-1)^r` times the sum of the
/// principal `r x r` minors. `None` if the grid limit is reached first.
pub fn bracket_inertia(m: &SymmetricMatrix) -> Option<InertiaSignature> {
    let rows = m.rows();
    let n = rows.len();
    let r = rank(rows.clone());
    let z = n - r;
    if r == 0 {
        return Some(InertiaSignature {
            positive: 0,
            negative: 0,
            zero: n,
        });
    }
    let radius = rows
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).fold(Rational::zero(), |a, b| a + b))
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::one();
    let minors = subsets(n, r)
        .into_iter()
        .map(|s| {
            det(s
                .iter()
                .map(|&i| s.iter().map(|&j| rows[i][j].clone()).collect())
                .collect())
        })
        .fold(Rational::zero(), |a, b| a + b);
    let at_zero = if r % 2 == 0 { sign(&minors) } else { -sign(&minors) };
    if at_zero == 0 {
        return None;
    }
    let mut steps: i64 = 8;
    while steps <= 1 << 14 {
        let count = |positive: bool| {
            let mut last = at_zero;
            let mut changes = 0;
            for k in 1..=steps {
                let mut t = &radius * q(k, steps);
                if !positive {
                    t = -t;
                }
                let s = reduced_charpoly_sign(&rows, &t, z);
                // a root on the grid: the neighbours still bracket it
                if s == 0 {
                    continue;
                }
                if s != last {
                    changes += 1;
                }
                last = s;
            }
            changes
        };
        let (p, ng) = (count(true), count(false));
        if p + ng == r {
            return Some(InertiaSignature {
                positive: p,
                negative: ng,
                zero: z,
            });
        }
        steps *= 2;
    }
    None
}

/// A random symmetric matrix: half the time with small rational entries,
/// otherwise `A^T D A` for a random `k x n` matrix `A`, `k < n`, and random
/// diagonal signs `D`, so that zero eigenvalues occur.
pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> SymmetricMatrix {
    let entry = |rng: &mut dyn rand::RngCore| q(rng.gen_range(-6..=6), rng.gen_range(1..=4));
    let mut rows = vec![vec![Rational::zero(); n]; n];
    if rng.gen_bool(0.5) || n == 1 {
        for i in 0..n {
            for j in i..n {
                let e = entry(rng);
                rows[i][j] = e.clone();
                rows[j][i] = e;
            }
        }
    } else {
        let k = rng.gen_range(1..n);
        let a: Vec<Vec<Rational>> = (0..k).map(|_| (0..n).map(|_| entry(rng)).collect()).collect();
        let d: Vec<Rational> = (0..k).map(|_| int(if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = (0..k)
                    .map(|l| &a[l][i] * &d[l] * &a[l][j])
                    .fold(Rational::zero(), |x, y| x + y);
            }
        }
    }
    SymmetricMatrix::from_rows(rows).expect("symmetric by construction")
}

/// Random bivariate homogeneous polynomial of degree `d` with nonnegative
/// coefficients, drawn from a mix of products of linear forms, products
/// with one perturbed coefficient, and unstructured sequences.
pub fn random_bivariate(rng: &mut impl Rng, d: u32) -> Polynomial {
    let linear = |rng: &mut dyn rand::RngCore| {
        let a = int(rng.gen_range(0..=4));
        let b = int(rng.gen_range(0..=4));
        Polynomial::from_terms(
            2,
            [
                (ExponentVector::new(vec![1, 0]), a),
                (ExponentVector::new(vec![0, 1]), b),
            ],
        )
        .unwrap()
    };
    let mut p = Polynomial::one(2);
    match rng.gen_range(0..3) {
        0 | 1 => {
            for _ in 0..d {
                p = &p * &linear(rng);
            }
            if p.is_zero() {
                p = Polynomial::x_pow(ExponentVector::new(vec![d, 0]));
            }
            if rng.gen_bool(0.5) {
                let k = rng.gen_range(0..=d);
                let e = ExponentVector::new(vec![k, d - k]);
                let bump = Polynomial::monomial(e, q(rng.gen_range(-3..=6), rng.gen_range(1..=3)));
                let candidate = &p + &bump;
                if candidate.has_nonnegative_coefficients() {
                    p = candidate;
                }
            }
        }
        _ => {
            let terms: Vec<(ExponentVector, Rational)> = (0..=d)
                .map(|k| (ExponentVector::new(vec![k, d - k]), int(rng.gen_range(0..=5))))
                .collect();
            p = Polynomial::from_terms(2, terms).unwrap();
        }
    }
    p
}

/// Random polynomial with integer coefficients in `[-5, 5]`, arity and
/// degree bounded.
pub fn random_polynomial(rng: &mut impl Rng, arity: usize, max_degree: u32) -> Polynomial {
    let count = rng.gen_range(0..=6);
    let terms: Vec<(ExponentVector, Rational)> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let mut e = vec![0u32; arity];
            for _ in 0..deg {
                e[rng.gen_range(0..arity)] += 1;
            }
            (ExponentVector::new(e), int(rng.gen_range(-5..=5)))
        })
        .collect();
    let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for (e, c) in terms {
        *acc.entry(e).or_insert_with(Rational::zero) += c;
    }
    Polynomial::from_terms(arity, acc).unwrap()
}

/// Random point of the positive orthant with coordinates in `[1/10, 3]`.
pub fn random_positive_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| q(rng.gen_range(1..=30), 10)).collect()
}

/// Exact quotient of `p` by `x_i - x_j`, or `None` if the division leaves a
/// remainder. Synthetic division in `x_i` with root `x_j`.
pub fn divide_by_difference(p: &Polynomial, i: usize, j: usize) -> Option<Polynomial> {
    let n = p.arity();
    let top = p.degree_in(i) as usize;
    // coefficient polynomials a_k(x without x_i)
    let mut a = vec![Polynomial::zero(n); top + 1];
    for (e, c) in p.terms() {
        let mut rest = e.entries().to_vec();
        let k = rest[i] as usize;
        rest[i] = 0;
        a[k] = &a[k] + &Polynomial::monomial(ExponentVector::new(rest), c.clone());
    }
    if top == 0 {
        return if p.is_zero() { Some(p.clone()) } else { None };
    }
    let xj = Polynomial::variable(n, j);
    let mut b = vec![Polynomial::zero(n); top];
    b[top - 1] = a[top].clone();
    for k in (1..top).rev() {
        b[k - 1] = &a[k] + &(&xj * &b[k]);
    }
    let remainder = &a[0] + &(&xj * &b[0]);
    if !remainder.is_zero() {
        return None;
    }
    let xi = Polynomial::variable(n, i);
    let mut out = Polynomial::zero(n);
    for (k, bk) in b.iter().enumerate() {
        out = &out + &(bk * &xi.pow(k as u32));
    }
    Some(out)
}

/// Determinant of a square matrix of polynomials by the Leibniz expansion.
pub fn poly_det(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    let arity = rows[0][0].arity();
    let mut out = Polynomial::zero(arity);
    for perm in Permutation::all(n) {
        let mut term = Polynomial::one(arity);
        for (r, row) in rows.iter().enumerate() {
            term = &term * &row[perm.value(r)];
        }
        if perm.length() % 2 == 1 {
            term = -&term;
        }
        out = &out + &term;
    }
    out
}

/// `s_lambda(x_1..x_m)` as `det(x_i^{lambda_j + m - j}) / prod_{i<j}(x_i - x_j)`.
pub fn bialternant_schur(lambda: &Partition, m: usize) -> Option<Polynomial> {
    if lambda.len() > m {
        return Some(Polynomial::zero(m));
    }
    let parts = lambda.padded(m);
    let rows: Vec<Vec<Polynomial>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut e = vec![0u32; m];
                    e[i] = parts[j] + (m - 1 - j) as u32;
                    Polynomial::x_pow(ExponentVector::new(e))
                })
                .collect()
        })
        .collect();
    let mut p = poly_det(&rows);
    for i in 0..m {
        for j in i + 1..m {
            p = divide_by_difference(&p, i, j)?;
        }
    }
    Some(p)
}

/// All weak compositions of length `len` with sum at most `max`.
pub fn compositions(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(len, left - v, cur, out);
            cur.pop();
        }
    }
    rec(len, max, &mut Vec::new(), &mut out);
    out
}
