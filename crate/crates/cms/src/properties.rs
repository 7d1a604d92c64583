//! Predicate layer: magic, natural, associative, pandiagonal and
//! ultramagic checks, plus the 8-element symmetry group of a square.

use crate::error::{Error, Result};
use crate::matrix::IntSquareMatrix;
use serde::Serialize;

/// Exhaustive line-sum analysis of one square.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub row_sums: Vec<i128>,
    pub col_sums: Vec<i128>,
    pub main_diagonal_sums: [i128; 2],
    /// 2n wrap-around diagonal sums: n forward offsets, then n backward.
    pub broken_diagonal_sums: Vec<i128>,
    pub is_magic: bool,
    pub is_natural: bool,
    pub is_associative: bool,
    pub is_pandiagonal: bool,
    pub is_ultramagic: bool,
    /// The common line sum when magic; otherwise the first row sum.
    pub magic_constant: i128,
}

/// Computes all 2n+2 straight lines, the 2n broken diagonals, and the
/// antipodal-pair test. Associativity is checked against twice the
/// center value (the antipodal sum of the first/last cells), which
/// handles non-natural parameterized squares uniformly.
pub fn analyze_properties(m: &IntSquareMatrix) -> PropertyReport {
    let n = m.order();
    let row_sums: Vec<i128> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).sum())
        .collect();
    let col_sums: Vec<i128> = (0..n)
        .map(|j| (0..n).map(|i| m.get(i, j)).sum())
        .collect();
    let diag: i128 = (0..n).map(|i| m.get(i, i)).sum();
    let anti: i128 = (0..n).map(|i| m.get(i, n - 1 - i)).sum();

    let mut broken = Vec::with_capacity(2 * n);
    for c in 0..n {
        broken.push((0..n).map(|i| m.get(i, (i + c) % n)).sum());
    }
    for c in 0..n {
        broken.push((0..n).map(|i| m.get(i, (c + n - i) % n)).sum());
    }

    let s = row_sums[0];
    let is_magic = row_sums.iter().all(|&x| x == s)
        && col_sums.iter().all(|&x| x == s)
        && diag == s
        && anti == s;
    let is_pandiagonal = broken.iter().all(|&x| x == broken[0]);

    let pair_sum = m.get(0, 0) + m.get(n - 1, n - 1);
    let is_associative = (0..n).all(|i| {
        (0..n).all(|j| m.get(i, j) + m.get(n - 1 - i, n - 1 - j) == pair_sum)
    });

    let is_natural = m.is_natural();

    PropertyReport {
        order: n,
        row_sums,
        col_sums,
        main_diagonal_sums: [diag, anti],
        broken_diagonal_sums: broken,
        is_magic,
        is_natural,
        is_associative,
        is_pandiagonal,
        is_ultramagic: is_associative && is_pandiagonal,
        magic_constant: s,
    }
}

/// The dihedral orbit of a square: four rotations of itself and of its
/// transpose. Contains the square itself; elements repeat when the
/// square has a symmetry.
pub fn symmetry_variants(m: &IntSquareMatrix) -> Vec<IntSquareMatrix> {
    let mut out = Vec::with_capacity(8);
    let mut cur = m.clone();
    for _ in 0..4 {
        out.push(cur.clone());
        cur = cur.rotate();
    }
    let mut cur = m.transpose();
    for _ in 0..4 {
        out.push(cur.clone());
        cur = cur.rotate();
    }
    out
}

/// True iff b lies in the symmetry orbit of a.
pub fn equivalent_up_to_symmetry(a: &IntSquareMatrix, b: &IntSquareMatrix) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(symmetry_variants(a).iter().any(|v| v == b))
}
