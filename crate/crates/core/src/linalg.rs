//! Exact rank computations.
//!
//! [`sparse_rank`] is the production path for boundary matrices: column
//! reduction on sorted sparse columns, pivoting on the lowest non-zero row and
//! visiting columns in order of increasing support. [`dense_rank`] is plain
//! row echelon on dense rows.

use crate::field::Field;

/// A sparse column: `(row, value)` pairs, rows strictly increasing, no zeros.
pub type SparseColumn<E> = Vec<(u32, E)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRank {
    pub rank: usize,
    /// Pivot row of every independent column after reduction.
    pub pivot_rows: Vec<u32>,
}

/// Rank of the matrix with the given columns over `field`.
pub fn sparse_rank<F: Field>(field: &F, nrows: usize, columns: Vec<SparseColumn<F::Elem>>) -> SparseRank {
    let mut order: Vec<usize> = (0..columns.len()).collect();
    order.sort_by_key(|&c| columns[c].len());
    let mut columns: Vec<Option<SparseColumn<F::Elem>>> = columns.into_iter().map(Some).collect();

    // pivot_of[row] = index into `reduced` of the column whose lowest entry
    // (normalised to 1) sits on `row`.
    let mut pivot_of: Vec<u32> = vec![u32::MAX; nrows];
    let mut reduced: Vec<SparseColumn<F::Elem>> = Vec::new();
    let mut pivot_rows = Vec::new();

    for c in order {
        let mut col = columns[c].take().expect("each column visited once");
        loop {
            let Some((low, low_val)) = col.last().cloned() else {
                break;
            };
            let owner = pivot_of[low as usize];
            if owner == u32::MAX {
                let scale = field.inv(&low_val);
                for entry in &mut col {
                    entry.1 = field.mul(&entry.1, &scale);
                }
                pivot_of[low as usize] = reduced.len() as u32;
                pivot_rows.push(low);
                reduced.push(col);
                break;
            }
            col = axpy(field, &col, &low_val, &reduced[owner as usize]);
        }
    }
    SparseRank {
        rank: pivot_rows.len(),
        pivot_rows,
    }
}

/// `a - factor * b` on sorted sparse columns.
fn axpy<F: Field>(field: &F, a: &[(u32, F::Elem)], factor: &F::Elem, b: &[(u32, F::Elem)]) -> SparseColumn<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = field.sub(&field.zero(), &field.mul(factor, &b[j].1));
            out.push((b[j].0, v));
            j += 1;
        } else {
            let v = field.sub(&a[i].1, &field.mul(factor, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a dense matrix given by rows.
pub fn dense_rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][col]);
        let pivot: Vec<F::Elem> = rows[rank].iter().map(|v| field.mul(v, &inv)).collect();
        for r in rank + 1..rows.len() {
            if field.is_zero(&rows[r][col]) {
                continue;
            }
            let factor = rows[r][col].clone();
            for (k, pv) in pivot.iter().enumerate().skip(col) {
                let v = field.sub(&rows[r][k], &field.mul(&factor, pv));
                rows[r][k] = v;
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
