//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::Graph;

/// Rank of the 0/1 adjacency matrix over the rationals.
pub fn adjacency_rank(g: &Graph) -> usize {
    let rows = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(i64::from).collect())
        .collect();
    integer_rank(rows)
}

/// Rank of an integer matrix, computed without any rounding.
///
/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact.
pub fn integer_rank(rows: Vec<Vec<i64>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            for j in col + 1..ncols {
                let v = (&prow[col] * &row[j] - &row[col] * &prow[j]) / &prev;
                row[j] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
