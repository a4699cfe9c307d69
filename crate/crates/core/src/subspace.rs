//! Subspaces of coordinate spaces in canonical reduced echelon form.

use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::matrix::{is_zero_vector, Matrix, Vector};
use crate::scalar::Q;

/// A subspace of `Q^ambient_dim`, stored as the nonzero rows of its reduced echelon basis.
///
/// Two subspaces are equal iff their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        let rows: Vec<Vector> =
            (0..ambient_dim).map(|i| crate::matrix::unit_vector(ambient_dim, i)).collect();
        Self::span(ambient_dim, &rows)
    }

    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        let e = Matrix::from_rows(ambient_dim, vectors).rref();
        let basis = (0..e.pivots.len()).map(|r| e.matrix.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis, pivots: e.pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    /// Coordinates in the echelon basis, or `None` when `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::matrix::add_scaled(&mut residual, &-c, b);
        }
        is_zero_vector(&residual).then_some(coords)
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn from_coordinates(&self, coords: &[Q]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut v = crate::matrix::zero_vector(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::matrix::add_scaled(&mut v, c, b);
        }
        v
    }

    /// Vectors `w` with `⟨w, b⟩ = 0` for every basis vector `b`.
    pub fn annihilator(&self) -> Subspace {
        let m = Matrix::from_rows(self.ambient_dim, &self.basis);
        Subspace::span(self.ambient_dim, &m.null_space_basis())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, AlgebraError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AlgebraError::DimensionMismatch {
                context: "subspace intersection",
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let ann = Matrix::from_rows(self.ambient_dim, other.annihilator().basis());
        let a = self.basis_matrix();
        let combos = ann.compose(&a).null_space_basis();
        let vectors: Vec<Vector> = combos.iter().map(|l| a.apply(l)).collect();
        Ok(Subspace::span(self.ambient_dim, &vectors))
    }
}

/// Exact null space of `m` in canonical form.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(m.cols(), &m.null_space_basis())
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    let cols: Vec<Vector> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::span(m.rows(), &cols)
}
