//! Finite-dimensional Lie algebras given by structure constants.

use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::matrix::{is_zero_vector, zero_vector, Matrix, Vector};
use crate::scalar::Q;

/// A dense rank-3 array; `entry(i, j)` is the length-`c` fibre at `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    a: usize,
    b: usize,
    c: usize,
    data: Vec<Q>,
}

impl Tensor3 {
    pub fn zeros(a: usize, b: usize, c: usize) -> Self {
        Tensor3 { a, b, c, data: alloc::vec![Q::zero(); a * b * c] }
    }

    /// Panics if `data.len() != a * b * c`.
    pub fn from_flat(a: usize, b: usize, c: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), a * b * c, "tensor entry count must match its shape");
        Tensor3 { a, b, c, data }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.a, self.b, self.c)
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Q] {
        let start = (i * self.b + j) * self.c;
        &self.data[start..start + self.c]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut [Q] {
        let start = (i * self.b + j) * self.c;
        &mut self.data[start..start + self.c]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &[Q]) {
        self.entry_mut(i, j).clone_from_slice(v);
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.data[(i * self.b + j) * self.c + k]
    }

    pub fn flat(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    /// Bilinear evaluation `Σ x_i y_j T[i][j]`.
    pub fn eval(&self, x: &[Q], y: &[Q]) -> Vector {
        assert_eq!(x.len(), self.a);
        assert_eq!(y.len(), self.b);
        let mut out = zero_vector(self.c);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                crate::matrix::add_scaled(&mut out, &w, self.entry(i, j));
            }
        }
        out
    }

    /// `(x, y) ↦ out · T(left · x, right · y)`.
    pub fn transport(&self, left: &Matrix, right: &Matrix, out: &Matrix) -> Tensor3 {
        assert_eq!((left.rows(), right.rows(), out.cols()), (self.a, self.b, self.c));
        let mut t = Tensor3::zeros(left.cols(), right.cols(), out.rows());
        for i in 0..left.cols() {
            let x = left.column(i);
            for j in 0..right.cols() {
                t.set(i, j, &out.apply(&self.eval(&x, &right.column(j))));
            }
        }
        t
    }
}

/// A Lie algebra over ℚ with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    constants: Tensor3,
    nonzero: Vec<(usize, usize, usize, Q)>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { constants: Tensor3::zeros(dim, dim, dim), nonzero: Vec::new() }
    }

    /// Validates antisymmetry and the Jacobi identity on every basis triple.
    pub fn from_structure_constants(constants: Tensor3) -> Result<Self, AlgebraError> {
        let (a, b, c) = constants.shape();
        if a != b || b != c {
            return Err(AlgebraError::DimensionMismatch {
                context: "structure constants must be n×n×n",
                expected: a,
                found: if a != b { b } else { c },
            });
        }
        for i in 0..a {
            for j in i..a {
                let sym_ok = constants
                    .entry(i, j)
                    .iter()
                    .zip(constants.entry(j, i))
                    .all(|(x, y)| (x + y).is_zero());
                if !sym_ok {
                    return Err(AlgebraError::NotAntisymmetric { i, j });
                }
            }
        }
        let g = Self::from_constants_unchecked(constants);
        if let Some((i, j, l)) = g.jacobi_violations().into_iter().next() {
            return Err(AlgebraError::JacobiFails { i, j, l });
        }
        Ok(g)
    }

    /// Builds from a generating list `[e_i, e_j] = v` (with `i < j`); the rest follows by antisymmetry.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Self, AlgebraError> {
        let mut t = Tensor3::zeros(dim, dim, dim);
        for (i, j, v) in brackets {
            if *i >= dim || *j >= dim || v.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    context: "bracket entry",
                    expected: dim,
                    found: (*i).max(*j).max(v.len()),
                });
            }
            if i == j {
                if !is_zero_vector(v) {
                    return Err(AlgebraError::NotAntisymmetric { i: *i, j: *j });
                }
                continue;
            }
            let neg: Vector = v.iter().map(|x| -x).collect();
            t.set(*i, *j, v);
            t.set(*j, *i, &neg);
        }
        Self::from_structure_constants(t)
    }

    /// Skips the antisymmetry and Jacobi checks; pair with [`validate_lie_algebra`].
    pub fn from_constants_unchecked(constants: Tensor3) -> Self {
        let (n, _, _) = constants.shape();
        let mut nonzero = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, x) in constants.entry(i, j).iter().enumerate() {
                    if !x.is_zero() {
                        nonzero.push((i, j, k, x.clone()));
                    }
                }
            }
        }
        LieAlgebra { constants, nonzero }
    }

    pub fn dim(&self) -> usize {
        self.constants.shape().0
    }

    pub fn structure_constants(&self) -> &Tensor3 {
        &self.constants
    }

    pub fn is_abelian(&self) -> bool {
        self.nonzero.is_empty()
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Result<Vector, AlgebraError> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                context: "bracket argument",
                expected: n,
                found: if x.len() != n { x.len() } else { y.len() },
            });
        }
        Ok(self.br(x, y))
    }

    /// Unchecked bracket; callers guarantee argument lengths.
    pub(crate) fn br(&self, x: &[Q], y: &[Q]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, j, k, c) in &self.nonzero {
            let (xi, yj) = (&x[*i], &y[*j]);
            if xi.is_zero() || yj.is_zero() {
                continue;
            }
            out[*k] += c * &(xi * yj);
        }
        out
    }

    /// Basis triples `i < j < l` where the cyclic Jacobi sum is nonzero.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut sparse: Vec<Vec<(usize, &Q)>> = alloc::vec![Vec::new(); n * n];
        for (i, j, k, c) in &self.nonzero {
            sparse[i * n + j].push((*k, c));
        }
        let mut bad = Vec::new();
        let mut acc = zero_vector(n);
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let mut touched = false;
                    for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                        for (k, x) in &sparse[a * n + b] {
                            for (m, y) in &sparse[k * n + c] {
                                acc[*m] += *x * *y;
                                touched = true;
                            }
                        }
                    }
                    if touched {
                        if !is_zero_vector(&acc) {
                            bad.push((i, j, l));
                        }
                        acc.iter_mut().for_each(|x| *x = Q::zero());
                    }
                }
            }
        }
        bad
    }
}

/// Basis pairs `(i, j)` on which `m[e_i, e_j] ≠ [m e_i, m e_j]`.
pub fn lie_morphism_defects(
    m: &Matrix,
    source: &LieAlgebra,
    target: &LieAlgebra,
) -> Result<Vec<(usize, usize)>, AlgebraError> {
    if m.cols() != source.dim() || m.rows() != target.dim() {
        return Err(AlgebraError::DimensionMismatch {
            context: "morphism shape",
            expected: source.dim(),
            found: m.cols(),
        });
    }
    let n = source.dim();
    let images: Vec<Vector> = (0..n).map(|j| m.column(j)).collect();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = m.apply(source.structure_constants().entry(i, j));
            let rhs = target.br(&images[i], &images[j]);
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

pub fn is_lie_morphism(m: &Matrix, source: &LieAlgebra, target: &LieAlgebra) -> Result<bool, AlgebraError> {
    Ok(lie_morphism_defects(m, source, target)?.is_empty())
}

/// Antisymmetry and Jacobi on every basis pair and triple.
pub fn validate_lie_algebra(g: &LieAlgebra) -> crate::report::Report {
    let mut r = crate::report::Report::new();
    let t = g.structure_constants();
    let n = g.dim();
    for i in 0..n {
        for j in i..n {
            let s: Vector = t.entry(i, j).iter().zip(t.entry(j, i)).map(|(a, b)| a + b).collect();
            if !is_zero_vector(&s) {
                r.push("lie-antisymmetry", alloc::vec![], alloc::vec![i, j], alloc::format!("c[i][j] + c[j][i] = {s:?}"));
            }
        }
    }
    if r.is_empty() {
        for (i, j, l) in g.jacobi_violations() {
            r.push("lie-jacobi", alloc::vec![], alloc::vec![i, j, l], "cyclic sum of [[e_i, e_j], e_l] is nonzero");
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    /// span{E, F} with [E, F] = F.
    fn affine_line() -> LieAlgebra {
        LieAlgebra::from_brackets(2, &[(0, 1, vec![q(0), q(1)])]).unwrap()
    }

    #[test]
    fn bracket_of_e_and_f_is_f() {
        let g = affine_line();
        assert_eq!(g.bracket(&[q(1), q(0)], &[q(0), q(1)]).unwrap(), vec![q(0), q(1)]);
    }

    #[test]
    fn self_bracket_vanishes() {
        let g = affine_line();
        let x = vec![q(3), q(-7)];
        assert!(is_zero_vector(&g.bracket(&x, &x).unwrap()));
    }

    #[test]
    fn abelian_brackets_vanish() {
        let g = LieAlgebra::abelian(3);
        assert!(is_zero_vector(&g.bracket(&[q(1), q(2), q(3)], &[q(0), q(5), q(1)]).unwrap()));
    }

    #[test]
    fn bracket_dimension_mismatch() {
        assert!(affine_line().bracket(&[q(1)], &[q(0), q(1)]).is_err());
    }

    #[test]
    fn rejects_non_antisymmetric_constants() {
        let mut t = Tensor3::zeros(2, 2, 2);
        t.set(0, 1, &[q(0), q(1)]);
        assert_eq!(
            LieAlgebra::from_structure_constants(t),
            Err(AlgebraError::NotAntisymmetric { i: 0, j: 1 })
        );
    }

    #[test]
    fn rejects_jacobi_failure() {
        // [e0,e1]=e2, [e1,e2]=e0, [e0,e2]=e0 is antisymmetric but not Lie.
        let r = LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![q(0), q(0), q(1)]), (1, 2, vec![q(1), q(0), q(0)]), (0, 2, vec![q(1), q(0), q(0)])],
        );
        assert_eq!(r, Err(AlgebraError::JacobiFails { i: 0, j: 1, l: 2 }));
    }

    #[test]
    fn accepts_sl2() {
        // h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h.
        let g = LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![q(0), q(2), q(0)]), (0, 2, vec![q(0), q(0), q(-2)]), (1, 2, vec![q(1), q(0), q(0)])],
        );
        assert!(g.is_ok());
    }

    #[test]
    fn identity_and_zero_maps_are_morphisms() {
        let g = affine_line();
        assert!(is_lie_morphism(&Matrix::identity(2), &g, &g).unwrap());
        assert!(is_lie_morphism(&Matrix::zeros(2, 2), &g, &g).unwrap());
    }

    #[test]
    fn abelian_line_into_affine_line_is_morphism() {
        let h = LieAlgebra::abelian(1);
        let m = Matrix::from_i64(2, 1, &[0, 1]);
        assert!(is_lie_morphism(&m, &h, &affine_line()).unwrap());
        // Projection onto F is not a morphism: [E,F]=F maps to F but [0,F]=0.
        let p = Matrix::from_i64(2, 2, &[0, 0, 0, 1]);
        assert!(!is_lie_morphism(&p, &affine_line(), &affine_line()).unwrap());
    }
}
