//! Small named inputs used by tests, examples and the CLI fixture files.

use alloc::vec;
use alloc::vec::Vec;

use crate::hypercrossed::{CrossedModuleSpec, TwoCrossedModuleSpec};
use crate::lie::{LieAlgebra, Tensor3};
use crate::matrix::Matrix;
use crate::scalar::Q;
use crate::simplicial::SimplicialLieAlgebra;

fn q(n: i64) -> Q {
    Q::from_int(n)
}

/// `span{E, F}` with `[E, F] = F`.
pub fn affine_line() -> LieAlgebra {
    LieAlgebra::from_brackets(2, &[(0, 1, vec![q(0), q(1)])]).expect("affine line is a Lie algebra")
}

/// `span{X, Y, Z}` with `[X, Y] = Z`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, vec![q(0), q(0), q(1)])]).expect("Heisenberg algebra")
}

/// `span{H, E, F}` with `[H, E] = 2E`, `[H, F] = −2F`, `[E, F] = H`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[(0, 1, vec![q(0), q(2), q(0)]), (0, 2, vec![q(0), q(0), q(-2)]), (1, 2, vec![q(1), q(0), q(0)])],
    )
    .expect("sl2")
}

/// An ideal spanned by the columns of `basis`, included into `g`, with the adjoint action.
///
/// Returns `None` if the span is not an ideal or the columns are dependent.
pub fn ideal_crossed_module(g: &LieAlgebra, basis: &Matrix) -> Option<CrossedModuleSpec> {
    let lift = basis.left_inverse()?;
    let (n, m) = (g.dim(), basis.cols());
    let mut h = Tensor3::zeros(m, m, m);
    let mut action = Tensor3::zeros(n, m, m);
    for j in 0..m {
        let u = basis.column(j);
        for i in 0..m {
            let z = g.bracket(&basis.column(i), &u).ok()?;
            if basis.apply(&lift.apply(&z)) != z {
                return None;
            }
            h.set(i, j, &lift.apply(&z));
        }
        for i in 0..n {
            let z = g.bracket(&crate::matrix::unit_vector(n, i), &u).ok()?;
            if basis.apply(&lift.apply(&z)) != z {
                return None;
            }
            action.set(i, j, &lift.apply(&z));
        }
    }
    Some(CrossedModuleSpec { d: g.clone(), h: LieAlgebra::from_structure_constants(h).ok()?, delta1: basis.clone(), action })
}

/// `g` acting on an abelian copy of itself by the adjoint action, with `δ₁ = 0`.
pub fn adjoint_module_crossed_module(g: &LieAlgebra) -> CrossedModuleSpec {
    let n = g.dim();
    CrossedModuleSpec {
        d: g.clone(),
        h: LieAlgebra::abelian(n),
        delta1: Matrix::zeros(n, n),
        action: g.structure_constants().clone(),
    }
}

/// `𝔡 = span{E, F}`, `𝔥 = span{X}`, `δ₁X = F`, `E·X = X`, `F·X = 0`.
pub fn crossed_module_fixture() -> CrossedModuleSpec {
    let mut action = Tensor3::zeros(2, 1, 1);
    action.set(0, 0, &[q(1)]);
    CrossedModuleSpec {
        d: affine_line(),
        h: LieAlgebra::abelian(1),
        delta1: Matrix::from_i64(2, 1, &[0, 1]),
        action,
    }
}

/// Everything abelian with zero actions and the given differential.
pub fn abelian_crossed_module(delta1: Matrix) -> CrossedModuleSpec {
    let (nd, nh) = (delta1.rows(), delta1.cols());
    CrossedModuleSpec { d: LieAlgebra::abelian(nd), h: LieAlgebra::abelian(nh), delta1, action: Tensor3::zeros(nd, nh, nh) }
}

/// Abelian chain complex `𝔥 → 𝔡 → 𝔨`; requires `delta1 ∘ delta2 = 0`.
pub fn abelian_two_crossed_module(delta1: Matrix, delta2: Matrix) -> TwoCrossedModuleSpec {
    let (nk, nd, nh) = (delta1.rows(), delta1.cols(), delta2.cols());
    TwoCrossedModuleSpec {
        k: LieAlgebra::abelian(nk),
        d: LieAlgebra::abelian(nd),
        h: LieAlgebra::abelian(nh),
        delta1,
        delta2,
        action_d: Tensor3::zeros(nk, nd, nd),
        action_h: Tensor3::zeros(nk, nh, nh),
        pairing: Tensor3::zeros(nd, nd, nh),
    }
}

/// One-dimensional `𝔨`, `𝔡 = span{D₁}`, `𝔥 = span{X}`, all maps and actions zero, `{D₁, D₁} = X`.
pub fn peiffer_fixture() -> TwoCrossedModuleSpec {
    let mut spec = abelian_two_crossed_module(Matrix::zeros(1, 1), Matrix::zeros(1, 1));
    spec.pairing.set(0, 0, &[q(1)]);
    spec
}

/// A crossed module viewed as a 2-crossed module with zero top term.
pub fn crossed_module_as_two_crossed(cm: &CrossedModuleSpec) -> TwoCrossedModuleSpec {
    let (nk, nd) = (cm.d.dim(), cm.h.dim());
    TwoCrossedModuleSpec {
        k: cm.d.clone(),
        d: cm.h.clone(),
        h: LieAlgebra::abelian(0),
        delta1: cm.delta1.clone(),
        delta2: Matrix::zeros(nd, 0),
        action_d: cm.action.clone(),
        action_h: Tensor3::zeros(nk, 0, 0),
        pairing: Tensor3::zeros(nd, nd, 0),
    }
}

/// `𝔢` as a 2-crossed module `𝔢 → 𝔢 → 0` with `δ₂ = id`, adjoint action of `𝔨 = 0`, `{e, f} = [e, f]`.
pub fn identity_two_crossed_module(e: &LieAlgebra) -> TwoCrossedModuleSpec {
    let n = e.dim();
    TwoCrossedModuleSpec {
        k: LieAlgebra::abelian(0),
        d: e.clone(),
        h: e.clone(),
        delta1: Matrix::zeros(0, n),
        delta2: Matrix::identity(n),
        action_d: Tensor3::zeros(0, n, n),
        action_h: Tensor3::zeros(0, n, n),
        pairing: e.structure_constants().clone(),
    }
}

/// Monomials of degree in `lo..=hi` in the variables `0..vars`, as sorted multisets.
fn monomials(vars: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(m) = stack.pop() {
        if m.len() >= lo {
            out.push(m.clone());
        }
        if m.len() < hi {
            let start = m.last().copied().unwrap_or(0);
            for v in (start..vars).rev() {
                let mut next = m.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// The levelwise tensor product `𝔨 ⊗ A` with `A_n` the symmetric algebra on `Ṽ_n`,
/// keeping monomial degrees `lo..=hi`.
///
/// `Ṽ` is the reduced linear span of the simplicial circle `Δ[1]/∂Δ[1]`, so
/// `dim Ṽ_n = n`. With `lo = 0` the algebra is unital and `N_0 = 𝔨`;
/// with `hi = 3` the Moore complex has length 3.
pub fn tensor_with_symmetric_powers(k: &LieAlgebra, lo: usize, hi: usize, truncation: usize) -> SimplicialLieAlgebra {
    let dk = k.dim();
    let monos: Vec<Vec<Vec<usize>>> = (0..=truncation).map(|n| monomials(n, lo, hi)).collect();
    let index = |n: usize, m: &[usize]| monos[n].iter().position(|x| x == m);
    let dim = |n: usize| monos[n].len() * dk;

    // Variable v (0-based) at level n is the simplex with v + 1 leading zeros.
    let map_monomial = |n_to: usize, m: &[usize], f: &dyn Fn(usize) -> Option<usize>| -> Option<usize> {
        let mut image = Vec::with_capacity(m.len());
        for &v in m {
            image.push(f(v)?);
        }
        image.sort();
        index(n_to, &image)
    };
    let linear = |n_from: usize, n_to: usize, f: &dyn Fn(usize) -> Option<usize>| -> Matrix {
        let mut mat = Matrix::zeros(dim(n_to), dim(n_from));
        for (c, m) in monos[n_from].iter().enumerate() {
            if let Some(r) = map_monomial(n_to, m, f) {
                for b in 0..dk {
                    mat[(r * dk + b, c * dk + b)] = Q::one();
                }
            }
        }
        mat
    };

    let faces: Vec<Vec<Matrix>> = (1..=truncation)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let f = move |v: usize| {
                        let j = v + 1;
                        let j2 = if i < j { j - 1 } else { j };
                        (1..n).contains(&j2).then(|| j2 - 1)
                    };
                    linear(n, n - 1, &f)
                })
                .collect()
        })
        .collect();
    let degeneracies: Vec<Vec<Matrix>> = (0..truncation)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let f = move |v: usize| {
                        let j = v + 1;
                        Some(if i < j { j } else { j - 1 })
                    };
                    linear(n, n + 1, &f)
                })
                .collect()
        })
        .collect();
    let levels: Vec<LieAlgebra> = (0..=truncation)
        .map(|n| {
            let d = dim(n);
            let mut t = Tensor3::zeros(d, d, d);
            for (ia, ma) in monos[n].iter().enumerate() {
                for (ib, mb) in monos[n].iter().enumerate() {
                    let mut prod: Vec<usize> = ma.iter().chain(mb).copied().collect();
                    prod.sort();
                    let Some(ic) = index(n, &prod) else { continue };
                    for x in 0..dk {
                        for y in 0..dk {
                            let src = k.structure_constants().entry(x, y);
                            let out = t.entry_mut(ia * dk + x, ib * dk + y);
                            for (z, c) in src.iter().enumerate() {
                                out[ic * dk + z] = c.clone();
                            }
                        }
                    }
                }
            }
            LieAlgebra::from_structure_constants(t).expect("tensor of a Lie algebra with a commutative algebra")
        })
        .collect();
    SimplicialLieAlgebra::new(levels, faces, degeneracies).expect("shapes are consistent by construction")
}
