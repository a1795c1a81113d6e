//! Integer matrices and their exact rank over the rationals.

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense row-major integer matrix. Shape is kept explicitly so that `0 x n`
/// and `n x 0` matrices are distinguishable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Returns `None` if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Like `from_rows`, but with the column count fixed up front so that a
    /// matrix with no rows still has a width.
    pub fn from_rows_with_shape(rows: &[Vec<i64>], nrows: usize, ncols: usize) -> Option<Self> {
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return None;
        }
        Some(Self {
            rows: nrows,
            cols: ncols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Exact product, or `None` on a shape mismatch.
    pub fn mul_exact(&self, other: &Self) -> Option<Vec<Vec<BigInt>>> {
        if self.cols != other.rows {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|i| {
                    (0..other.cols)
                        .map(|j| {
                            (0..self.cols)
                                .map(|k| BigInt::from(self[(i, k)]) * other[(k, j)])
                                .sum()
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank over Q by fraction-free (Bareiss) elimination on arbitrary-precision
/// integers.
///
/// Every entry kept after a step is a minor of the input, so the division by
/// the previous pivot is exact.
pub fn rational_rank(matrix: &IntMatrix) -> usize {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| matrix.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev_pivot = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..rows {
            let factor = a[i][col].clone();
            for j in col + 1..cols {
                let v = &pivot * &a[i][j] - &factor * &a[rank][j];
                a[i][j] = v / &prev_pivot;
            }
            a[i][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}
