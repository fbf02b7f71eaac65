use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped, so `(2,0)` and `(2)` are the same partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses a comma-separated list such as `3,1,1`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `m` (`m >= len`).
    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(m.max(v.len()), 0);
        v
    }

    /// Length of column `c` (0-based), i.e. the conjugate partition entry.
    pub fn column_length(&self, c: u32) -> usize {
        self.0.iter().take_while(|&&p| p > c).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `size` with at most `max_parts` parts, each at most
    /// `max_part`, in reverse lexicographic order.
    pub fn all(size: u32, max_parts: usize, max_part: u32) -> Vec<Partition> {
        fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_part, max_parts, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `max_size` boxes and `max_parts` parts.
    pub fn up_to(max_size: u32, max_parts: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|n| Partition::all(n, max_parts, n)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!(
                "inner shape {inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.last() == Some(&0) {
            return Err(Error::Invalid(format!(
                "strict partition parts must be strictly decreasing and positive: {parts:?}"
            )));
        }
        Ok(StrictPartition(parts))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All strict partitions with largest part at most `max_part` and at
    /// most `max_parts` parts (including the empty one).
    pub fn all(max_part: u32, max_parts: usize) -> Vec<StrictPartition> {
        fn rec(cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition(cur.clone()));
            if slots == 0 {
                return;
            }
            for p in (1..=cap).rev() {
                cur.push(p);
                rec(p - 1, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(max_part, max_parts, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// An integer vector, used for weights such as `mu - lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Invalid(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

/// `kappa_i = l - lambda_{m+1-i}`: the complement of `lambda` in the
/// `m x l` rectangle.
pub fn complement_partition(lambda: &Partition, m: usize, width: u32) -> Result<Partition> {
    if lambda.len() > m {
        return Err(Error::Invalid(format!("{lambda} has more than {m} parts")));
    }
    if lambda.part(0) > width {
        return Err(Error::Invalid(format!(
            "box width {width} is smaller than the first part of {lambda}"
        )));
    }
    let padded = lambda.padded(m);
    Partition::new(padded.iter().rev().map(|p| width - p).collect())
}
