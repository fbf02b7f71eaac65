//! Shared inputs for the criterion benches in `benches/`.

use lorentz_core::schubert::{schubert, Permutation};
use lorentz_core::symmetric::schur;
use lorentz_core::{Partition, Polynomial, Rational, SymmetricMatrix};

/// `N(s_lambda)` in `m` variables.
pub fn normalized_schur(lambda: &str, m: usize) -> Polynomial {
    schur(&Partition::parse(lambda).expect("valid partition"), m).normalize()
}

/// `N(S_w)`.
pub fn normalized_schubert(w: &str) -> Polynomial {
    schubert(&Permutation::parse(w).expect("valid permutation")).normalize()
}

/// Dense `n x n` symmetric matrix with entries `(i + 2j) / (i + j + 1)`
/// above the diagonal.
pub fn dense_matrix(n: usize) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let (a, b) = (i as i64 + 2 * j as i64, i as i64 + j as i64 + 1);
            m.set(i, j, Rational::new(a.into(), b.into()));
        }
    }
    m
}
