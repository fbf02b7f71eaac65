use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// A square matrix over the rationals with exactly equal `(i, j)` and
/// `(j, i)` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    /// From rows; fails unless the rows form an exactly symmetric square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Invalid(format!(
                        "entries ({}, {}) and ({}, {}) differ",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(SymmetricMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v.clone();
        self.entries[j * self.n + i] = v;
    }

    /// Adds `v` to `(i, j)` and, off the diagonal, to `(j, i)`.
    pub fn add_symmetric(&mut self, i: usize, j: usize, v: &Rational) {
        self.entries[i * self.n + j] += v;
        if i != j {
            self.entries[j * self.n + i] += v;
        }
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `L * M` with integer entries for the least positive `L`, plus `L`.
    fn cleared(&self) -> (Vec<BigInt>, BigInt) {
        let l = self.entries.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints = self.entries.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        (ints, l)
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InertiaSignature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl InertiaSignature {
    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

impl fmt::Display for InertiaSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Faddeev-LeVerrier over the integers. Returns `c_0, ..., c_n` with
/// `det(tI - A) = sum c_k t^k`; every division is exact for integer `A`.
fn charpoly_integer(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    // m holds M_k; start from M_0 = 0 so that M_1 = I
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut next = vec![BigInt::zero(); n * n];
        if k == 1 {
            for i in 0..n {
                next[i * n + i] = BigInt::one();
            }
        } else {
            for i in 0..n {
                for j in 0..n {
                    let mut s = BigInt::zero();
                    for l in 0..n {
                        let x = &a[i * n + l];
                        if !x.is_zero() {
                            s += x * &m[l * n + j];
                        }
                    }
                    next[i * n + j] = s;
                }
                next[i * n + i] += &c[n + 1 - k];
            }
        }
        m = next;
        // trace(A M_k)
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i * n + l] * &m[l * n + i];
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division not exact");
        c[n - k] = -q;
    }
    c
}

/// Coefficients `c_0, ..., c_n` of `det(tI - M)`, lowest degree first.
pub fn characteristic_polynomial(m: &SymmetricMatrix) -> Vec<Rational> {
    let n = m.dimension();
    let (ints, l) = m.cleared();
    let c = charpoly_integer(&ints, n);
    // det(tI - A/L) = L^{-n} det((Lt)I - A), so c_k(M) = c_k(A) / L^{n-k}
    let mut scale = BigInt::one();
    let mut out = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        out[k] = Rational::new(c[k].clone(), scale.clone());
        scale *= &l;
    }
    out
}

fn sign_variations<'a>(signs: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for x in signs {
        let s = if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Exact inertia of a symmetric matrix.
///
/// The characteristic polynomial of a real symmetric matrix has only real
/// roots, so after removing the factor `t^z` Descartes' rule of signs counts
/// positive roots exactly, and the same rule on `p(-t)` counts negative ones.
pub fn inertia(m: &SymmetricMatrix) -> InertiaSignature {
    let n = m.dimension();
    if m.is_zero() {
        return InertiaSignature {
            positive: 0,
            negative: 0,
            zero: n,
        };
    }
    let (ints, _) = m.cleared();
    let c = charpoly_integer(&ints, n);
    let zero = c.iter().take_while(|x| x.is_zero()).count();
    let rest = &c[zero..];
    let positive = sign_variations(rest.iter());
    let flipped: Vec<BigInt> = rest
        .iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() })
        .collect();
    let negative = sign_variations(flipped.iter());
    debug_assert_eq!(positive + negative + zero, n);
    InertiaSignature {
        positive,
        negative,
        zero,
    }
}

/// The symmetric matrix of a quadratic form: `H_ii` is the coefficient of
/// `x_i^2` and `H_ij` half the coefficient of `x_i x_j`.
pub fn quadratic_form_matrix(q: &Polynomial) -> Result<SymmetricMatrix> {
    let n = q.arity();
    let mut h = SymmetricMatrix::zeros(n);
    let half = Rational::new(1.into(), 2.into());
    for (e, c) in q.terms() {
        if e.degree() != 2 {
            return Err(Error::WrongDegree { expected: 2 });
        }
        let idx: Vec<usize> = (0..n)
            .flat_map(|i| std::iter::repeat(i).take(e.get(i) as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            h.set(i, i, c.clone());
        } else {
            h.set(i, j, c * &half);
        }
    }
    Ok(h)
}
