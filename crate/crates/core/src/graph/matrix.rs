use crate::{Error, Result};

/// Dense real symmetric matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Validates squareness and symmetry (entries may differ by at most
    /// machine epsilon relative to their magnitude).
    pub fn from_row_major(order: usize, data: Vec<f64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != order * order {
            return Err(Error::DimensionMismatch { expected: order * order, found: data.len() });
        }
        for row in 0..order {
            for col in row + 1..order {
                let a = data[row * order + col];
                let b = data[col * order + row];
                let scale = a.abs().max(b.abs()).max(1.0);
                let close = (a - b).abs() <= f64::EPSILON * scale;
                if !close {
                    return Err(Error::NotSymmetric { row: row + 1, col: col + 1 });
                }
            }
        }
        Ok(Self { order, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            let found = rows.iter().map(Vec::len).sum();
            return Err(Error::DimensionMismatch { expected: order * order, found });
        }
        Self::from_row_major(order, rows.concat())
    }

    pub(crate) fn from_row_major_unchecked(order: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), order * order);
        Self { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[(row - 1) * self.order + (col - 1)]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.order).map(<[f64]>::to_vec).collect()
    }

    /// Principal submatrix on 1-based indices, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> SymmetricMatrix {
        let m = indices.len();
        let mut data = Vec::with_capacity(m * m);
        for &i in indices {
            for &j in indices {
                data.push(self.get(i, j));
            }
        }
        Self::from_row_major_unchecked(m, data)
    }

    /// Nonzero off-diagonal positions `(i, j)` with `i < j`, 1-based.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.order)
            .flat_map(move |i| (i + 1..=self.order).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.get(i, j) != 0.0)
    }

    /// Row sum of 1-based vertex `v`.
    pub fn degree(&self, v: usize) -> usize {
        let row = &self.data[(v - 1) * self.order..v * self.order];
        row.iter().filter(|&&x| x != 0.0).count()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}
