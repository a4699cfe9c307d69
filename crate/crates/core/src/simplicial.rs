//! Truncated simplicial Lie algebras and their Moore complexes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::combinatorics::{enum_s, MultiIndex};
use crate::error::AlgebraError;
use crate::lie::{lie_morphism_defects, LieAlgebra};
use crate::matrix::{Matrix, Vector};
use crate::report::Report;
use crate::scalar::Q;
use crate::subspace::{kernel, Subspace};

/// Levels `0..=K` of a simplicial Lie algebra together with all faces and degeneracies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialLieAlgebra {
    levels: Vec<LieAlgebra>,
    // faces[n - 1][i] = ∂_i : 𝔤_n → 𝔤_{n−1}
    faces: Vec<Vec<Matrix>>,
    // degeneracies[n][i] = s_i : 𝔤_n → 𝔤_{n+1}
    degeneracies: Vec<Vec<Matrix>>,
}

impl SimplicialLieAlgebra {
    /// `faces[n − 1]` lists `∂_0..∂_n` out of level `n`; `degeneracies[n]` lists `s_0..s_n` out of level `n`.
    ///
    /// Only shapes are checked here; the identities are checked by [`validate_simplicial`].
    pub fn new(
        levels: Vec<LieAlgebra>,
        faces: Vec<Vec<Matrix>>,
        degeneracies: Vec<Vec<Matrix>>,
    ) -> Result<Self, AlgebraError> {
        if levels.is_empty() {
            return Err(AlgebraError::DimensionMismatch { context: "number of levels", expected: 1, found: 0 });
        }
        let k = levels.len() - 1;
        if faces.len() != k || degeneracies.len() != k {
            return Err(AlgebraError::DimensionMismatch {
                context: "face/degeneracy level count",
                expected: k,
                found: if faces.len() != k { faces.len() } else { degeneracies.len() },
            });
        }
        for n in 1..=k {
            if faces[n - 1].len() != n + 1 {
                return Err(AlgebraError::DimensionMismatch {
                    context: "faces per level",
                    expected: n + 1,
                    found: faces[n - 1].len(),
                });
            }
            for m in &faces[n - 1] {
                if m.cols() != levels[n].dim() || m.rows() != levels[n - 1].dim() {
                    return Err(AlgebraError::DimensionMismatch {
                        context: "face matrix shape",
                        expected: levels[n].dim(),
                        found: m.cols(),
                    });
                }
            }
        }
        for n in 0..k {
            if degeneracies[n].len() != n + 1 {
                return Err(AlgebraError::DimensionMismatch {
                    context: "degeneracies per level",
                    expected: n + 1,
                    found: degeneracies[n].len(),
                });
            }
            for m in &degeneracies[n] {
                if m.cols() != levels[n].dim() || m.rows() != levels[n + 1].dim() {
                    return Err(AlgebraError::DimensionMismatch {
                        context: "degeneracy matrix shape",
                        expected: levels[n].dim(),
                        found: m.cols(),
                    });
                }
            }
        }
        Ok(SimplicialLieAlgebra { levels, faces, degeneracies })
    }

    /// Every level equal to `g`, every structure map the identity.
    pub fn constant(g: &LieAlgebra, truncation: usize) -> Self {
        let id = Matrix::identity(g.dim());
        SimplicialLieAlgebra {
            levels: alloc::vec![g.clone(); truncation + 1],
            faces: (1..=truncation).map(|n| alloc::vec![id.clone(); n + 1]).collect(),
            degeneracies: (0..truncation).map(|n| alloc::vec![id.clone(); n + 1]).collect(),
        }
    }

    /// The stored top level `K`.
    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &LieAlgebra {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[LieAlgebra] {
        &self.levels
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].dim()
    }

    /// `∂_i : 𝔤_n → 𝔤_{n−1}`.
    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n - 1][i]
    }

    /// `s_i : 𝔤_n → 𝔤_{n+1}`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &Matrix {
        &self.degeneracies[n][i]
    }

    pub fn faces(&self) -> &[Vec<Matrix>] {
        &self.faces
    }

    pub fn degeneracies(&self) -> &[Vec<Matrix>] {
        &self.degeneracies
    }

    /// Replaces one structure map; used to build corrupted inputs.
    pub fn with_degeneracy(mut self, n: usize, i: usize, m: Matrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (self.dim(n + 1), self.dim(n)));
        self.degeneracies[n][i] = m;
        self
    }

    pub fn with_face(mut self, n: usize, i: usize, m: Matrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (self.dim(n - 1), self.dim(n)));
        self.faces[n - 1][i] = m;
        self
    }

    /// Keeps levels `0..=k`.
    pub fn truncate(&self, k: usize) -> Self {
        assert!(k <= self.truncation());
        SimplicialLieAlgebra {
            levels: self.levels[..=k].to_vec(),
            faces: self.faces[..k].to_vec(),
            degeneracies: self.degeneracies[..k].to_vec(),
        }
    }
}

fn describe_difference(diff: &Matrix) -> String {
    let mut parts = Vec::new();
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            if !diff[(i, j)].is_zero() {
                parts.push(format!("({i},{j})={}", diff[(i, j)]));
            }
        }
    }
    let total = parts.len();
    parts.truncate(6);
    let mut s = parts.join(" ");
    if total > 6 {
        s.push_str(&format!(" (+{} more)", total - 6));
    }
    format!("difference {}x{}: {s}", diff.rows(), diff.cols())
}

fn check_equal(report: &mut Report, law: &str, levels: Vec<usize>, witness: Vec<usize>, lhs: &Matrix, rhs: &Matrix) {
    if lhs != rhs {
        report.push(law, levels, witness, describe_difference(&lhs.sub(rhs)));
    }
}

/// Checks every simplicial identity and that every structure map is a Lie morphism.
///
/// Violations are sorted by level, law name, and indices. Levels are source levels.
pub fn validate_simplicial(g: &SimplicialLieAlgebra) -> Report {
    let mut r = Report::new();
    let k = g.truncation();
    for n in 2..=k {
        for j in 1..=n {
            for i in 0..j {
                let lhs = g.face(n - 1, i).compose(g.face(n, j));
                let rhs = g.face(n - 1, j - 1).compose(g.face(n, i));
                check_equal(&mut r, "face-face", alloc::vec![n], alloc::vec![i, j], &lhs, &rhs);
            }
        }
    }
    for n in 0..k.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let lhs = g.degeneracy(n + 1, i).compose(g.degeneracy(n, j));
                let rhs = g.degeneracy(n + 1, j + 1).compose(g.degeneracy(n, i));
                check_equal(&mut r, "degeneracy-degeneracy", alloc::vec![n], alloc::vec![i, j], &lhs, &rhs);
            }
        }
    }
    for n in 0..k {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = g.face(n + 1, i).compose(g.degeneracy(n, j));
                let (law, rhs) = if i == j || i == j + 1 {
                    ("face-degeneracy-identity", Matrix::identity(g.dim(n)))
                } else if i < j {
                    ("face-degeneracy-lower", g.degeneracy(n - 1, j - 1).compose(g.face(n, i)))
                } else {
                    ("face-degeneracy-upper", g.degeneracy(n - 1, j).compose(g.face(n, i - 1)))
                };
                check_equal(&mut r, law, alloc::vec![n], alloc::vec![i, j], &lhs, &rhs);
            }
        }
    }
    for n in 1..=k {
        for i in 0..=n {
            for (a, b) in lie_morphism_defects(g.face(n, i), g.level(n), g.level(n - 1)).unwrap_or_default() {
                r.push("face-morphism", alloc::vec![n], alloc::vec![i, a, b], "bracket not preserved on basis pair");
            }
        }
    }
    for n in 0..k {
        for i in 0..=n {
            for (a, b) in lie_morphism_defects(g.degeneracy(n, i), g.level(n), g.level(n + 1)).unwrap_or_default() {
                r.push("degeneracy-morphism", alloc::vec![n], alloc::vec![i, a, b], "bracket not preserved on basis pair");
            }
        }
    }
    r.sorted()
}

/// `s_α : 𝔤_{n−♯α} → 𝔤_n`, applying the smallest index first.
pub fn s_alpha(g: &SimplicialLieAlgebra, alpha: MultiIndex, n: usize) -> Result<Matrix, AlgebraError> {
    if n > g.truncation() {
        return Err(AlgebraError::LevelOutOfRange { level: n, max: g.truncation() });
    }
    if !alpha.fits(n) {
        return Err(AlgebraError::IndexOutOfRange { index: alpha.descending()[0], level: n });
    }
    let mut m = n - alpha.len();
    let mut out = Matrix::identity(g.dim(m));
    for i in alpha.ascending() {
        out = g.degeneracy(m, i).compose(&out);
        m += 1;
    }
    Ok(out)
}

/// `p_n = p_n^1 ∘ p_n^2 ∘ … ∘ p_n^n` with `p_n^i = id − s_{i−1}∂_i`; `p_0` is the identity.
pub fn moore_projector(g: &SimplicialLieAlgebra, n: usize) -> Result<Matrix, AlgebraError> {
    if n > g.truncation() {
        return Err(AlgebraError::LevelOutOfRange { level: n, max: g.truncation() });
    }
    let id = Matrix::identity(g.dim(n));
    let mut p = id.clone();
    for i in (1..=n).rev() {
        let factor = id.sub(&g.degeneracy(n - 1, i - 1).compose(g.face(n, i)));
        p = factor.compose(&p);
    }
    Ok(p)
}

/// The normalized complex with `N𝔤_n = ∩_{i≥1} ker ∂_i` and `δ_n = ∂_0|N𝔤_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreComplex {
    length: usize,
    spaces: Vec<Subspace>,
    // deltas[n] : N𝔤_n → N𝔤_{n−1} in subspace coordinates; deltas[0] is 0×dim.
    deltas: Vec<Matrix>,
    projectors: Vec<Matrix>,
}

impl MooreComplex {
    /// Largest `n` with `N𝔤_n ≠ 0` among stored levels.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn truncation(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, n: usize) -> &Subspace {
        &self.spaces[n]
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// `δ_n` for `n ≥ 1`, in the echelon bases of `N𝔤_n` and `N𝔤_{n−1}`.
    pub fn delta(&self, n: usize) -> &Matrix {
        &self.deltas[n]
    }

    pub fn projector(&self, n: usize) -> &Matrix {
        &self.projectors[n]
    }

    /// Ambient vector of the element with the given Moore coordinates.
    pub fn embed(&self, n: usize, coords: &[Q]) -> Vector {
        self.spaces[n].from_coordinates(coords)
    }

    /// `N𝔤_n → 𝔤_n` as a matrix.
    pub fn inclusion(&self, n: usize) -> Matrix {
        self.spaces[n].basis_matrix()
    }

    pub fn coordinates(&self, n: usize, v: &[Q]) -> Result<Vector, AlgebraError> {
        self.spaces[n]
            .coordinates(v)
            .ok_or_else(|| AlgebraError::NotInSubspace { context: format!("Moore space at level {n}") })
    }
}

/// Computes the Moore complex of a valid simplicial Lie algebra.
pub fn moore_complex(g: &SimplicialLieAlgebra) -> Result<MooreComplex, AlgebraError> {
    let report = validate_simplicial(g);
    if !report.is_empty() {
        return Err(AlgebraError::Invalid(report));
    }
    Ok(moore_complex_unchecked(g))
}

/// As [`moore_complex`] without re-validating the input.
pub fn moore_complex_unchecked(g: &SimplicialLieAlgebra) -> MooreComplex {
    let k = g.truncation();
    let mut spaces = Vec::with_capacity(k + 1);
    spaces.push(Subspace::whole(g.dim(0)));
    for n in 1..=k {
        let blocks: Vec<Matrix> = (1..=n).map(|i| g.face(n, i).clone()).collect();
        spaces.push(kernel(&Matrix::vstack(g.dim(n), &blocks)));
    }
    let mut deltas = alloc::vec![Matrix::zeros(0, g.dim(0))];
    for n in 1..=k {
        let cols: Vec<Vector> = spaces[n]
            .basis()
            .iter()
            .map(|b| {
                let image = g.face(n, 0).apply(b);
                spaces[n - 1].coordinates(&image).expect("∂_0 preserves Moore spaces in a simplicial object")
            })
            .collect();
        deltas.push(Matrix::from_columns(spaces[n - 1].dim(), &cols));
    }
    let projectors = (0..=k).map(|n| moore_projector(g, n).expect("level in range")).collect();
    let length = (0..=k).rev().find(|&n| spaces[n].dim() > 0).unwrap_or(0);
    MooreComplex { length, spaces, deltas, projectors }
}

/// Whether the images `s_α N𝔤_{n−♯α}`, `α ∈ S(n)`, form a direct-sum decomposition of `𝔤_n`.
pub fn decomposition_check(g: &SimplicialLieAlgebra, moore: &MooreComplex, n: usize) -> Result<bool, AlgebraError> {
    if n > g.truncation() {
        return Err(AlgebraError::LevelOutOfRange { level: n, max: g.truncation() });
    }
    let mut total = 0;
    let mut vectors = Vec::new();
    for alpha in enum_s(n) {
        let m = n - alpha.len();
        let s = s_alpha(g, alpha, n)?;
        total += moore.dim(m);
        for b in moore.space(m).basis() {
            vectors.push(s.apply(b));
        }
    }
    Ok(total == g.dim(n) && Subspace::span(g.dim(n), &vectors).dim() == g.dim(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn affine_line() -> LieAlgebra {
        LieAlgebra::from_brackets(2, &[(0, 1, vec![Q::zero(), Q::one()])]).unwrap()
    }

    #[test]
    fn constant_object_is_valid_with_trivial_moore_complex() {
        let g = SimplicialLieAlgebra::constant(&affine_line(), 3);
        assert!(validate_simplicial(&g).is_empty());
        let m = moore_complex(&g).unwrap();
        assert_eq!(m.dims(), vec![2, 0, 0, 0]);
        assert_eq!(m.length(), 0);
        assert!(moore_projector(&g, 1).unwrap().is_zero());
        for n in 0..=3 {
            assert!(decomposition_check(&g, &m, n).unwrap());
        }
    }

    #[test]
    fn zeroed_degeneracy_violates_identity_law() {
        let g = SimplicialLieAlgebra::constant(&affine_line(), 2).with_degeneracy(0, 0, Matrix::zeros(2, 2));
        let r = validate_simplicial(&g);
        assert!(r.mentions("face-degeneracy-identity"));
        assert!(moore_complex(&g).is_err());
    }

    #[test]
    fn projector_out_of_range() {
        let g = SimplicialLieAlgebra::constant(&affine_line(), 1);
        assert!(moore_projector(&g, 2).is_err());
    }

    #[test]
    fn s_alpha_of_empty_index_is_identity() {
        let g = SimplicialLieAlgebra::constant(&affine_line(), 2);
        assert_eq!(s_alpha(&g, MultiIndex::EMPTY, 2).unwrap(), Matrix::identity(2));
        assert!(s_alpha(&g, MultiIndex::singleton(2), 2).is_err());
    }

    #[test]
    fn shape_errors_are_reported() {
        let g = affine_line();
        let bad = SimplicialLieAlgebra::new(vec![g.clone(), g], vec![vec![Matrix::identity(2)]], vec![vec![Matrix::identity(2)]]);
        assert!(bad.is_err());
    }
}
