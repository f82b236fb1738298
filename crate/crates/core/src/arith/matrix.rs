use num_traits::Zero;

use super::BigRat;
use crate::error::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRat::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        let n = rows.len();
        Ok(RatMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, v: &[BigRat]) -> Result<Vec<BigRat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch);
        }
        Ok((0..self.rows).map(|r| (0..self.cols).fold(BigRat::zero(), |acc, c| acc + self.get(r, c) * &v[c])).collect())
    }
}

/// Exact Gauss-Jordan solve of `M·s = rhs`.
///
/// Pivots are the first nonzero entry in row order; free variables are
/// set to zero, so the returned solution is deterministic. `Ok(None)`
/// means the system is inconsistent.
pub fn solve_linear(m: &RatMatrix, rhs: &[BigRat]) -> Result<Option<Vec<BigRat>>> {
    if rhs.len() != m.rows {
        return Err(Error::DimensionMismatch);
    }
    let width = m.cols + 1;
    let mut aug: Vec<Vec<BigRat>> = (0..m.rows)
        .map(|r| {
            let mut row: Vec<BigRat> = (0..m.cols).map(|c| m.get(r, c).clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        let Some(p) = (row..m.rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].recip();
        for x in &mut aug[row][col..width] {
            *x = &*x * &inv;
        }
        for r in 0..m.rows {
            if r == row || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            let pivot_row = aug[row].clone();
            for (x, y) in aug[r][col..width].iter_mut().zip(&pivot_row[col..width]) {
                *x -= &factor * y;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.rows {
            break;
        }
    }
    if aug[row..].iter().any(|r| !r[m.cols].is_zero()) {
        return Ok(None);
    }
    let mut sol = vec![BigRat::zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = aug[r][m.cols].clone();
    }
    Ok(Some(sol))
}
