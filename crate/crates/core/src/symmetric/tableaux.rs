//! Tableau enumeration. Cells are filled column by column, top to bottom,
//! so the left and upper neighbours of a cell are always already filled.

use std::collections::HashMap;

use num_rational::BigRational;

use super::partition::{SkewShape, StrictPartition};
use crate::poly::{ExponentVector, Polynomial};

struct Grid {
    cells: Vec<(usize, u32)>,
    // index into `cells` of the left / upper neighbour, if in the shape
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    below_in_column: Vec<u32>,
    diagonal: Vec<bool>,
}

impl Grid {
    fn build(cells: Vec<(usize, u32)>, diagonal_col: impl Fn(usize) -> u32) -> Grid {
        let index: HashMap<(usize, u32), usize> = cells.iter().enumerate().map(|(k, &rc)| (rc, k)).collect();
        let left = cells
            .iter()
            .map(|&(r, c)| c.checked_sub(1).and_then(|c| index.get(&(r, c)).copied()))
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| r.checked_sub(1).and_then(|r| index.get(&(r, c)).copied()))
            .collect();
        let below_in_column = cells
            .iter()
            .map(|&(r, c)| {
                let mut k = 0;
                while index.contains_key(&(r + k as usize + 1, c)) {
                    k += 1;
                }
                k
            })
            .collect();
        let diagonal = cells.iter().map(|&(r, c)| c == diagonal_col(r)).collect();
        Grid {
            cells,
            left,
            above,
            below_in_column,
            diagonal,
        }
    }
}

fn weights_to_polynomial(m: usize, counts: HashMap<Vec<u32>, u64>) -> Polynomial {
    Polynomial::from_terms(
        m,
        counts
            .into_iter()
            .map(|(w, c)| (ExponentVector::new(w), BigRational::from_integer(c.into()))),
    )
    .expect("weights have arity m")
}

/// Generating function of semistandard tableaux of a skew shape with
/// entries in `1..=m`, keyed by weight.
pub(crate) fn ssyt_weights(shape: &SkewShape, m: usize) -> HashMap<Vec<u32>, u64> {
    let outer = shape.outer();
    let inner = shape.inner();
    let mut cells = Vec::new();
    for c in 0..outer.part(0) {
        for r in inner.column_length(c)..outer.column_length(c) {
            cells.push((r, c));
        }
    }
    let grid = Grid::build(cells, |_| u32::MAX);
    let mut values = vec![0u32; grid.cells.len()];
    let mut weight = vec![0u32; m];
    let mut out = HashMap::new();
    if m == 0 {
        if grid.cells.is_empty() {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    fill_ssyt(&grid, 0, m as u32, &mut values, &mut weight, &mut out);
    out
}

fn fill_ssyt(grid: &Grid, k: usize, m: u32, values: &mut [u32], weight: &mut [u32], out: &mut HashMap<Vec<u32>, u64>) {
    if k == grid.cells.len() {
        *out.entry(weight.to_vec()).or_insert(0) += 1;
        return;
    }
    let mut lo = 1;
    if let Some(l) = grid.left[k] {
        lo = lo.max(values[l]);
    }
    if let Some(a) = grid.above[k] {
        lo = lo.max(values[a] + 1);
    }
    let hi = m.saturating_sub(grid.below_in_column[k]);
    for v in lo..=hi {
        values[k] = v;
        weight[v as usize - 1] += 1;
        fill_ssyt(grid, k + 1, m, values, weight, out);
        weight[v as usize - 1] -= 1;
    }
}

/// Generating function of marked shifted tableaux with unprimed diagonal.
///
/// Letters `1' < 1 < 2' < 2 < ...` are encoded as `2k-1` (primed) and `2k`
/// (unprimed). Rows and columns weakly increase; a primed letter occurs at
/// most once per row and an unprimed letter at most once per column.
pub(crate) fn marked_shifted_weights(lambda: &StrictPartition, m: usize) -> HashMap<Vec<u32>, u64> {
    let parts = lambda.parts();
    let mut cells = Vec::new();
    let width = parts.first().copied().unwrap_or(0);
    for c in 0..width {
        for (r, &p) in parts.iter().enumerate() {
            if (r as u32) <= c && c < r as u32 + p {
                cells.push((r, c));
            }
        }
    }
    let grid = Grid::build(cells, |r| r as u32);
    let mut values = vec![0u32; grid.cells.len()];
    let mut weight = vec![0u32; m];
    let mut out = HashMap::new();
    if grid.cells.is_empty() {
        out.insert(vec![0; m], 1);
        return out;
    }
    if m == 0 {
        return out;
    }
    fill_marked(&grid, 0, 2 * m as u32, &mut values, &mut weight, &mut out);
    out
}

fn fill_marked(
    grid: &Grid,
    k: usize,
    top: u32,
    values: &mut [u32],
    weight: &mut [u32],
    out: &mut HashMap<Vec<u32>, u64>,
) {
    if k == grid.cells.len() {
        *out.entry(weight.to_vec()).or_insert(0) += 1;
        return;
    }
    let left = grid.left[k].map(|l| values[l]);
    let above = grid.above[k].map(|a| values[a]);
    let lo = left.unwrap_or(1).max(above.unwrap_or(1)).max(1);
    for v in lo..=top {
        let primed = v % 2 == 1;
        if primed && (grid.diagonal[k] || left == Some(v)) {
            continue;
        }
        if !primed && above == Some(v) {
            continue;
        }
        values[k] = v;
        let letter = v.div_ceil(2) as usize - 1;
        weight[letter] += 1;
        fill_marked(grid, k + 1, top, values, weight, out);
        weight[letter] -= 1;
    }
}

pub(crate) fn ssyt_polynomial(shape: &SkewShape, m: usize) -> Polynomial {
    weights_to_polynomial(m, ssyt_weights(shape, m))
}

pub(crate) fn marked_shifted_polynomial(lambda: &StrictPartition, m: usize) -> Polynomial {
    weights_to_polynomial(m, marked_shifted_weights(lambda, m))
}
