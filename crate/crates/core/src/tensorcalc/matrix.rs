//! Exact matrices of rational functions.
//!
//! Used for endomorphisms, the musical maps of bivectors and 2-forms, and
//! Jacobians of polynomial maps. Inversion is Gauss-Jordan over the rational
//! function field (no pivoting heuristics are needed: any symbolically
//! nonzero pivot is exact).

use std::fmt;

use crate::coeffring::{Chart, RatFunc};
use crate::error::{Error, Result};

/// A rows x cols matrix of rational functions on one chart.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    chart: Chart,
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl Matrix {
    pub fn zero(chart: &Chart, rows: usize, cols: usize) -> Matrix {
        Matrix {
            chart: chart.clone(),
            rows,
            cols,
            entries: vec![RatFunc::zero(chart); rows * cols],
        }
    }

    pub fn identity(chart: &Chart, n: usize) -> Matrix {
        let mut m = Matrix::zero(chart, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = RatFunc::one(chart);
        }
        m
    }

    pub fn from_rows(chart: &Chart, rows: Vec<Vec<RatFunc>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for e in row {
                chart.assert_same(e.chart());
                entries.push(e);
            }
        }
        Matrix { chart: chart.clone(), rows: r, cols: c, entries }
    }

    pub fn from_fn(chart: &Chart, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Matrix {
        let mut m = Matrix::zero(chart, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut RatFunc {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.chart, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        Matrix::from_fn(&self.chart, self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        Matrix::from_fn(&self.chart, self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(&self.chart, self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn scale(&self, f: &RatFunc) -> Matrix {
        Matrix::from_fn(&self.chart, self.rows, self.cols, |i, j| self.at(i, j) * f)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.chart.assert_same(&other.chart);
        assert_eq!(self.cols, other.rows, "matrix shape mismatch in product");
        Matrix::from_fn(&self.chart, self.rows, other.cols, |i, j| {
            let mut acc = RatFunc::zero(&self.chart);
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * other.at(k, j));
            }
            acc
        })
    }

    /// Apply to a coefficient vector.
    pub fn apply(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFunc::zero(&self.chart);
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * &v[k]);
                }
                acc
            })
            .collect()
    }

    /// Exact determinant by fraction-aware Gaussian elimination.
    pub fn determinant(&self) -> Result<RatFunc> {
        if self.rows != self.cols {
            return Err(Error::Degenerate("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = RatFunc::one(&self.chart);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot_row else {
                return Ok(RatFunc::zero(&self.chart));
            };
            if p != col {
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(col, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(col, j) = a;
                }
                det = -&det;
            }
            let pivot = m.at(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.invert().expect("pivot is nonzero");
            for r in (col + 1)..n {
                let factor = &m.at(r, col).clone() * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * m.at(col, j);
                    *m.at_mut(r, j) = &m.at(r, j).clone() - &delta;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse; `Degenerate` when the determinant vanishes.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Degenerate("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(&self.chart, n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot_row else {
                return Err(Error::Degenerate("singular matrix".into()));
            };
            if p != col {
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(col, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(col, j) = a;
                    let a = inv.at(p, j).clone();
                    let b = inv.at(col, j).clone();
                    *inv.at_mut(p, j) = b;
                    *inv.at_mut(col, j) = a;
                }
            }
            let pivot_inv = m.at(col, col).invert().expect("pivot is nonzero");
            for j in 0..n {
                *m.at_mut(col, j) = &m.at(col, j).clone() * &pivot_inv;
                *inv.at_mut(col, j) = &inv.at(col, j).clone() * &pivot_inv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let dm = &factor * m.at(col, j);
                    let di = &factor * inv.at(col, j);
                    *m.at_mut(r, j) = &m.at(r, j).clone() - &dm;
                    *inv.at_mut(r, j) = &inv.at(r, j).clone() - &di;
                }
            }
        }
        Ok(inv)
    }

    /// Substitute polynomials for the chart variables entry-wise, landing on
    /// the chart of `args`.
    pub fn compose(&self, args: &[crate::coeffring::Poly]) -> Result<Matrix> {
        let target = args
            .first()
            .ok_or_else(|| Error::InvalidChart("substitution needs at least one argument".into()))?
            .chart()
            .clone();
        let mut out = Matrix::zero(&target, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).compose(args)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
