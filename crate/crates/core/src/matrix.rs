//! Dense exact matrices acting on column vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Q;

pub type Vector = Vec<Q>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vector(v: &[Q]) -> bool {
    v.iter().all(Q::is_zero)
}

pub fn add_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scale(c: &Q, v: &[Q]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vectors(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vectors(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A `rows × cols` matrix mapping `Q^cols → Q^rows`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows × cols");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_row_major(rows, cols, entries.iter().map(|&x| Q::from_int(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length must match matrix columns");
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| c * a).collect() }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            data.extend_from_slice(&b.data);
        }
        Matrix { rows, cols, data }
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place(None);
        Echelon { matrix: m, pivots }
    }

    /// Row-reduces in place, mirroring every row operation on `shadow`.
    fn rref_in_place(&mut self, mut shadow: Option<&mut Matrix>) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                if let Some(s) = shadow.as_deref_mut() {
                    s.swap_rows(p, r);
                }
            }
            let inv = self[(r, c)].recip();
            self.scale_row(r, &inv);
            if let Some(s) = shadow.as_deref_mut() {
                s.scale_row(r, &inv);
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = -self[(i, c)].clone();
                    self.add_row_multiple(i, r, &f);
                    if let Some(s) = shadow.as_deref_mut() {
                        s.add_row_multiple(i, r, &f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Q) {
        for j in 0..self.cols {
            let x = &mut self.data[r * self.cols + j];
            *x = &*x * c;
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, f: &Q) {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if !s.is_zero() {
                self.data[target * self.cols + j] += f * &s;
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn null_space_basis(&self) -> Vec<Vector> {
        let e = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = zero_vector(self.cols);
            v[free] = Q::one();
            for (r, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.matrix[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// A left inverse `L` with `L · self = I`, or `None` when `self` is not injective.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let mut work = self.clone();
        let mut shadow = Matrix::identity(self.rows);
        let pivots = work.rref_in_place(Some(&mut shadow));
        if pivots.len() != self.cols {
            return None;
        }
        let mut l = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.cols {
            for j in 0..self.rows {
                l[(i, j)] = shadow[(i, j)].clone();
            }
        }
        Some(l)
    }

    /// Some solution `x` of `self · x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (r, &p) in e.pivots.iter().enumerate() {
            x[p] = e.matrix[(r, self.cols)].clone();
        }
        Some(x)
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_nullity_on_small_matrix() {
        let m = Matrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.null_space_basis().len(), 2);
        for v in m.null_space_basis() {
            assert!(is_zero_vector(&m.apply(&v)));
        }
    }

    #[test]
    fn left_inverse_of_injective_map() {
        let m = Matrix::from_i64(3, 2, &[1, 0, 1, 1, 0, 2]);
        let l = m.left_inverse().unwrap();
        assert_eq!(l.compose(&m), Matrix::identity(2));
        assert!(Matrix::from_i64(2, 2, &[1, 1, 1, 1]).left_inverse().is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_i64(2, 1, &[1, 1]);
        assert_eq!(m.solve(&[Q::from_int(2), Q::from_int(2)]), Some(alloc::vec![Q::from_int(2)]));
        assert_eq!(m.solve(&[Q::from_int(1), Q::from_int(2)]), None);
    }

    #[test]
    fn empty_matrices_compose() {
        let a = Matrix::zeros(0, 3);
        let b = Matrix::zeros(3, 0);
        assert_eq!(b.compose(&a), Matrix::zeros(3, 3));
        assert_eq!(a.compose(&b), Matrix::zeros(0, 0));
        assert_eq!(Matrix::zeros(0, 2).rank(), 0);
        assert_eq!(Matrix::zeros(0, 2).null_space_basis().len(), 2);
    }
}
