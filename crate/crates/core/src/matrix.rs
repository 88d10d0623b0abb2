//! Dense matrices over [`LaurentPoly`].
//!
//! A morphism `X → Y` is represented by a `dim Y × dim X` matrix acting on
//! column vectors, so the first-then composite `f ; g` is the product
//! `M(g) · M(f)`.

use std::fmt;

use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {op} of {lhs:?} and {rhs:?}")]
    Shape {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("{rows}x{cols} matrix is not invertible over Z[q, q^-1]")]
    NotInvertible { rows: usize, cols: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

/// First position where two equally shaped matrices differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub left: LaurentPoly,
    pub right: LaurentPoly,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.cols + col] = value;
    }

    /// `self · rhs`
    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Shape {
                op: "product",
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of the first-then composite: `other · self`.
    pub fn then(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        other.mul(self)
    }

    pub fn add(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.shape() != rhs.shape() {
            return Err(MatrixError::Shape {
                op: "sum",
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product with `self` as the outer (slow) index.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Exactly one nonzero entry in every row and column, each a unit `±q^e`.
    pub fn is_monomial(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut col_seen = vec![false; self.cols];
        for r in 0..self.rows {
            let mut found = None;
            for (c, seen) in col_seen.iter().enumerate() {
                let e = self.get(r, c);
                if e.is_zero() {
                    continue;
                }
                if found.is_some() || !e.is_unit() || *seen {
                    return false;
                }
                found = Some(c);
            }
            match found {
                Some(c) => col_seen[c] = true,
                None => return false,
            }
        }
        true
    }

    /// Exact inverse over `ℤ[q, q⁻¹]`.
    ///
    /// Monomial matrices (every structural isomorphism evaluates to one) are
    /// inverted by transposing and inverting entries. Otherwise Gauss-Jordan
    /// elimination is attempted with unit pivots only; a matrix that admits
    /// no unit pivot at some stage is reported as not invertible.
    pub fn inverse(&self) -> Result<PolyMatrix, MatrixError> {
        let not_invertible = MatrixError::NotInvertible {
            rows: self.rows,
            cols: self.cols,
        };
        if !self.is_square() {
            return Err(not_invertible);
        }
        if self.is_monomial() {
            let mut out = PolyMatrix::zeros(self.cols, self.rows);
            for r in 0..self.rows {
                for c in 0..self.cols {
                    if let Some(inv) = self.get(r, c).unit_inverse() {
                        out.set(c, r, inv);
                    }
                }
            }
            return Ok(out);
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = PolyMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| work.get(r, col).is_unit())
                .ok_or_else(|| not_invertible.clone())?;
            work.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p_inv = work.get(col, col).unit_inverse().expect("unit pivot");
            work.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                work.sub_scaled_row(r, col, &factor);
                inv.sub_scaled_row(r, col, &factor);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &LaurentPoly) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.entries[idx] = &self.entries[idx] * s;
        }
    }

    /// row[target] -= factor · row[source]
    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &LaurentPoly) {
        for c in 0..self.cols {
            let s = &self.entries[source * self.cols + c] * factor;
            let idx = target * self.cols + c;
            self.entries[idx] = &self.entries[idx] - &s;
        }
    }

    /// First differing entry in row-major order, `None` when equal. Shapes
    /// must agree; see [`matrix_equal`] for the shape-tolerant comparison.
    pub fn first_mismatch(&self, other: &PolyMatrix) -> Option<Mismatch> {
        debug_assert_eq!(self.shape(), other.shape());
        self.entries
            .iter()
            .zip(&other.entries)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| Mismatch {
                row: i / self.cols,
                col: i % self.cols,
                left: a.clone(),
                right: b.clone(),
            })
    }
}

/// Exact equality: same shape and identical Laurent-polynomial entries.
pub fn matrix_equal(m: &PolyMatrix, n: &PolyMatrix) -> bool {
    m == n
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[] ({}x{})", self.rows, self.cols);
        }
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                write!(f, " {:>width$}", cells[r * self.cols + c])?;
            }
            f.write_str(" ]")?;
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    fn z() -> LaurentPoly {
        LaurentPoly::zero()
    }

    #[test]
    fn single_entry_products() {
        let a = PolyMatrix::from_rows(vec![vec![q(1)]]);
        let b = PolyMatrix::from_rows(vec![vec![q(-1)]]);
        assert!(matrix_equal(&a.mul(&b).unwrap(), &PolyMatrix::identity(1)));
        let c = PolyMatrix::from_rows(vec![vec![q(2)]]);
        assert!(!matrix_equal(&c, &PolyMatrix::identity(1)));
    }

    #[test]
    fn shapes_must_match() {
        let a = PolyMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(MatrixError::Shape { .. })));
        assert!(!matrix_equal(
            &PolyMatrix::zeros(0, 0),
            &PolyMatrix::zeros(1, 0)
        ));
    }

    #[test]
    fn kron_orders_outer_index_first() {
        let a = PolyMatrix::from_rows(vec![vec![z(), q(1)], vec![q(2), z()]]);
        let i = PolyMatrix::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.get(0, 2), &q(1));
        assert_eq!(k.get(1, 3), &q(1));
        assert_eq!(k.get(2, 0), &q(2));
        assert_eq!(k.get(0, 1), &z());
    }

    #[test]
    fn monomial_inverse() {
        let a = PolyMatrix::from_rows(vec![
            vec![z(), q(3), z()],
            vec![z(), z(), -q(-1)],
            vec![q(0), z(), z()],
        ]);
        assert!(a.is_monomial());
        let inv = a.inverse().unwrap();
        assert!(inv.mul(&a).unwrap().is_identity());
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn general_inverse_with_unit_pivots() {
        // [[1, q], [0, 1]] has inverse [[1, -q], [0, 1]]
        let a = PolyMatrix::from_rows(vec![vec![q(0), q(1)], vec![z(), q(0)]]);
        assert!(!a.is_monomial());
        let inv = a.inverse().unwrap();
        assert_eq!(inv.get(0, 1), &-q(1));
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn non_unit_determinant_is_rejected() {
        let a = PolyMatrix::from_rows(vec![vec![LaurentPoly::constant(2)]]);
        assert!(matches!(
            a.inverse(),
            Err(MatrixError::NotInvertible { .. })
        ));
    }

    #[test]
    fn empty_matrix_is_identity_and_invertible() {
        let e = PolyMatrix::zeros(0, 0);
        assert!(e.is_identity());
        assert_eq!(e.inverse().unwrap(), e);
        assert_eq!(e.to_string(), "[] (0x0)");
    }

    #[test]
    fn first_mismatch_is_row_major() {
        let a = PolyMatrix::identity(2);
        let mut b = PolyMatrix::identity(2);
        b.set(1, 0, q(1));
        b.set(1, 1, q(2));
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.row, m.col), (1, 0));
        assert!(a.first_mismatch(&a).is_none());
    }

    #[test]
    fn display_single_entry() {
        assert_eq!(PolyMatrix::from_rows(vec![vec![q(1)]]).to_string(), "[ q ]");
    }
}
