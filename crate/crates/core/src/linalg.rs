//! Dense matrices over `F_{q^t}` with exact Gaussian elimination.

use crate::error::{Error, Result};
use crate::gf::{ExtensionField, FieldElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &ExtensionField, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &ExtensionField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            data.extend(cols.iter().map(|&c| self.get(r, c)));
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            data.extend((0..self.rows).map(|r| self.get(r, c)));
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in r0..r0 + rows {
            data.extend_from_slice(&self.row(r)[c0..c0 + cols]);
        }
        Matrix { rows, cols, data }
    }
}

/// Reduces `m` to row echelon form in place; returns the pivot columns.
fn echelon(field: &ExtensionField, m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                let tmp = m.get(p, j);
                m.set(p, j, m.get(r, j));
                m.set(r, j, tmp);
            }
        }
        let inv = field.inv(m.get(r, c)).expect("pivot is nonzero");
        for i in r + 1..m.rows {
            let f = m.get(i, c);
            if f.is_zero() {
                continue;
            }
            let f = field.mul(f, inv);
            for j in c..m.cols {
                let v = field.sub(m.get(i, j), field.mul(f, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &ExtensionField, m: &Matrix) -> usize {
    let mut work = m.clone();
    echelon(field, &mut work).len()
}

pub fn determinant(field: &ExtensionField, m: &Matrix) -> Result<FieldElement> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let mut work = m.clone();
    let n = m.rows;
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !work.get(i, c).is_zero()) else {
            return Ok(field.zero());
        };
        if p != c {
            for j in 0..n {
                let tmp = work.get(p, j);
                work.set(p, j, work.get(c, j));
                work.set(c, j, tmp);
            }
            det = field.neg(det);
        }
        let pivot = work.get(c, c);
        det = field.mul(det, pivot);
        let inv = field.inv(pivot)?;
        for i in c + 1..n {
            let f = work.get(i, c);
            if f.is_zero() {
                continue;
            }
            let f = field.mul(f, inv);
            for j in c..n {
                let v = field.sub(work.get(i, j), field.mul(f, work.get(c, j)));
                work.set(i, j, v);
            }
        }
    }
    Ok(det)
}

/// Row vector times matrix.
pub fn vec_mat(field: &ExtensionField, u: &[FieldElement], m: &Matrix) -> Vec<FieldElement> {
    debug_assert_eq!(u.len(), m.rows);
    let mut out = vec![field.zero(); m.cols];
    for (r, &ur) in u.iter().enumerate() {
        if ur.is_zero() {
            continue;
        }
        for (c, o) in out.iter_mut().enumerate() {
            *o = field.add(*o, field.mul(ur, m.get(r, c)));
        }
    }
    out
}

/// Solves `u * m = rhs` for `u`.
///
/// Returns [`Error::Inconsistent`] when no solution exists and
/// [`Error::Unrecoverable`] when the solution is not unique.
pub fn solve_left(
    field: &ExtensionField,
    m: &Matrix,
    rhs: &[FieldElement],
) -> Result<Vec<FieldElement>> {
    if rhs.len() != m.cols {
        return Err(Error::Dimension(format!(
            "right-hand side has {} entries for {} columns",
            rhs.len(),
            m.cols
        )));
    }
    // u m = rhs  <=>  m^T u^T = rhs^T; eliminate on the augmented transpose.
    let unknowns = m.rows;
    let mut aug = Matrix::zeros(field, m.cols, unknowns + 1);
    for c in 0..m.cols {
        for r in 0..m.rows {
            aug.set(c, r, m.get(r, c));
        }
        aug.set(c, unknowns, rhs[c]);
    }
    let pivots = echelon(field, &mut aug);
    if pivots.last() == Some(&unknowns) {
        return Err(Error::Inconsistent);
    }
    if pivots.len() < unknowns {
        return Err(Error::Unrecoverable);
    }
    let mut u = vec![field.zero(); unknowns];
    for (i, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = aug.get(i, unknowns);
        for j in pc + 1..unknowns {
            acc = field.sub(acc, field.mul(aug.get(i, j), u[j]));
        }
        u[pc] = field.div(acc, aug.get(i, pc))?;
    }
    Ok(u)
}
