use std::fmt;

use crate::error::{Error, Result};
use crate::poly::ExponentVector;
use crate::symmetric::Partition;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Stored 0-based; displayed and parsed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From 1-based one-line notation.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Invalid(format!("not a permutation of 1..{n}: {values:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(values.iter().map(|v| v - 1).collect()))
    }

    /// Accepts `1432` (single digits) or `1,4,3,2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Invalid(format!("bad permutation {s:?}")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Invalid(format!("bad permutation {s:?}")))?
        };
        if values.is_empty() {
            return Err(Error::Invalid("empty permutation".into()));
        }
        Self::from_one_line(&values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// `w0 = n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((0..n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 0-based value at 0-based position.
    pub fn value(&self, pos: usize) -> usize {
        self.0[pos]
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> u32 {
        let mut l = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `w * s_{i,j}`: the values at positions `i` and `j` exchanged.
    pub fn swap_positions(&self, i: usize, j: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i, j);
        Permutation(v)
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.0.len().saturating_sub(1))
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect()
    }

    /// Positions `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> Vec<usize> {
        (0..self.0.len().saturating_sub(1))
            .filter(|&i| self.0[i] < self.0[i + 1])
            .collect()
    }

    /// `L(w)_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> ExponentVector {
        let n = self.0.len();
        ExponentVector::new(
            (0..n)
                .map(|i| (i + 1..n).filter(|&j| self.0[j] < self.0[i]).count() as u32)
                .collect(),
        )
    }

    /// Inverse of [`Permutation::lehmer_code`].
    pub fn from_lehmer_code(code: &[u32]) -> Result<Self> {
        let n = code.len();
        let mut free: Vec<usize> = (0..n).collect();
        let mut out = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c as usize > n - 1 - i {
                return Err(Error::Invalid(format!(
                    "Lehmer code entry {c} at position {} exceeds {}",
                    i + 1,
                    n - 1 - i
                )));
            }
            out.push(free.remove(c as usize));
        }
        Ok(Permutation(out))
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation(cur.clone())];
        loop {
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Permutation(cur.clone()));
        }
        out
    }

    /// Whether no subsequence of `self` is order-isomorphic to `pattern`.
    pub fn avoids_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        let n = self.n();
        if k > n {
            return true;
        }
        let mut pos: Vec<usize> = (0..k).collect();
        loop {
            let matches =
                (0..k).all(|a| (a + 1..k).all(|b| (self.0[pos[a]] < self.0[pos[b]]) == (pattern.0[a] < pattern.0[b])));
            if matches {
                return false;
            }
            // next k-subset of positions
            let Some(i) = (0..k).rev().find(|&i| pos[i] < n - k + i) else {
                return true;
            };
            pos[i] += 1;
            for j in i + 1..k {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals = self.one_line();
        if vals.len() <= 9 {
            for v in vals {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = vals.iter().map(usize::to_string).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

/// The Grassmannian permutation in `S_n` with Lehmer code
/// `(kappa_m, ..., kappa_1, 0, ..., 0)`; its only descent is at `m`.
pub fn grassmannian_for(kappa: &Partition, m: usize, n: usize) -> Result<Permutation> {
    if kappa.len() > m {
        return Err(Error::Invalid(format!("{kappa} has more than {m} parts")));
    }
    if n < m + kappa.part(0) as usize {
        return Err(Error::Invalid(format!(
            "n = {n} is too small: need at least m + kappa_1 = {}",
            m + kappa.part(0) as usize
        )));
    }
    let mut code: Vec<u32> = kappa.padded(m).into_iter().rev().collect();
    code.resize(n, 0);
    Permutation::from_lehmer_code(&code)
}
