//! Exact integer rank by fraction-free elimination.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Row echelon form built one row at a time over the integers.
///
/// Each incoming row is reduced against the stored pivot rows by
/// cross-multiplication `a·row - b·pivot`, then divided by its content, so
/// every intermediate stays an integer vector and no fractions appear.
#[derive(Debug, Default, Clone)]
pub struct IntegerEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl IntegerEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead_col) {
                None => {
                    make_primitive(&mut row);
                    self.pivots.insert(lead_col, row);
                    return true;
                }
                Some(pivot) => {
                    let pivot_lead = &pivot[0].1;
                    let g = pivot_lead.gcd(&lead_val);
                    let a = pivot_lead / &g;
                    let b = &lead_val / &g;
                    row = combine(&row, &a, pivot, &b);
                    make_primitive(&mut row);
                }
            }
        }
    }
}

// a·x - b·y on sparse rows.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (col, val) = if take_x {
            i += 1;
            (x[i - 1].0, a * &x[i - 1].1)
        } else if take_y {
            j += 1;
            (y[j - 1].0, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn make_primitive(row: &mut SparseRow) {
    let mut content = BigInt::zero();
    for (_, v) in row.iter() {
        content = content.gcd(v);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &content;
    }
}

/// Rank of a set of sparse integer rows.
pub fn sparse_rank<I: IntoIterator<Item = SparseRow>>(rows: I) -> usize {
    let mut echelon = IntegerEchelon::new();
    for row in rows {
        echelon.insert(row);
    }
    echelon.rank()
}

/// Rank of a dense integer matrix by Bareiss elimination with row and
/// column search for nonzero pivots. Every division is exact.
pub fn bareiss_rank(matrix: &[Vec<BigInt>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in bottom {
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *v = (&pivot * &*v - &factor * p) / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
