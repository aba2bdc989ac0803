use super::PrimeField;
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
    pub reduced: PrimeFieldMatrix,
}

impl PrimeFieldMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.modulus();
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod p.
    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidParams(format!(
                "matrix data has {} entries, expected {rows}x{cols}",
                data.len()
            )));
        }
        let p = field.modulus();
        let data = data.into_iter().map(|x| x % p).collect();
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from signed integer rows. All rows must have equal length.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParams("ragged matrix rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| field.elem(x)).collect();
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.field.modulus();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let p = self.field.modulus();
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b % p) % p)
            })
            .collect()
    }

    /// Rank by forward elimination only; cheaper than a full [`Self::rref`].
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        forward_eliminate(self.field, &mut work, self.rows, self.cols, false).len()
    }

    pub fn rref(&self) -> Rref {
        let mut work = self.data.clone();
        let pivots = forward_eliminate(self.field, &mut work, self.rows, self.cols, true);
        Rref {
            rank: pivots.len(),
            pivots,
            reduced: Self {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                data: work,
            },
        }
    }

    /// Rank together with a kernel basis.
    ///
    /// There is one basis vector per free column `f`: it has a 1 in position
    /// `f`, zeros at every other free column, and the negated RREF entries at
    /// the pivot columns. Listed in increasing order of `f`.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<u64>>) {
        let rref = self.rref();
        let kernel = rref.kernel_basis();
        (rref.rank, kernel)
    }
}

impl Rref {
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.reduced.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.reduced.cols).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.reduced.field;
        let cols = self.reduced.cols;
        self.free_columns()
            .into_iter()
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1 % f.modulus();
                for (row, &pc) in self.pivots.iter().enumerate() {
                    v[pc] = f.neg(self.reduced.get(row, free));
                }
                v
            })
            .collect()
    }
}

/// In-place Gaussian elimination on a row-major buffer. Returns the pivot
/// columns. With `reduce` set, pivots are normalised to 1 and cleared above
/// as well as below (reduced row echelon form).
fn forward_eliminate(
    field: PrimeField,
    data: &mut [u64],
    rows: usize,
    cols: usize,
    reduce: bool,
) -> Vec<usize> {
    let p = field.modulus();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let Some(found) = (prow..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if found != prow {
            for c in col..cols {
                data.swap(found * cols + c, prow * cols + c);
            }
        }
        let inv = field.inv(data[prow * cols + col]);
        if reduce {
            for c in col..cols {
                let x = &mut data[prow * cols + c];
                *x = *x * inv % p;
            }
        }
        let (head, tail) = data.split_at_mut((prow + 1) * cols);
        let (above, pivot_row) = head.split_at_mut(prow * cols);
        let pivot_row = &*pivot_row;
        let lead = pivot_row[col];
        let scale = if reduce { 1 } else { inv };
        let clear = |row: &mut [u64]| {
            let x = row[col];
            if x == 0 {
                return;
            }
            // row -= (x / lead) * pivot_row
            let factor = p - x * scale % p;
            for c in col..cols {
                row[c] = (row[c] + factor * pivot_row[c]) % p;
            }
        };
        debug_assert!(!reduce || lead == 1);
        for row in tail.chunks_exact_mut(cols) {
            clear(row);
        }
        if reduce {
            for row in above.chunks_exact_mut(cols) {
                clear(row);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    pivots
}
