//! Seeded generators of crossed modules, 2-crossed modules and direct simplicial inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdgla_core::fixtures::*;
use sdgla_core::hypercrossed::{extract, reconstruct, CrossedModuleSpec, HypercrossedData, TwoCrossedModuleSpec};
use sdgla_core::simplicial::{moore_complex, SimplicialLieAlgebra};
use sdgla_core::{Matrix, Q};

use crate::format::*;

#[derive(Clone, Debug)]
pub enum Spec {
    Crossed(CrossedModuleSpec),
    TwoCrossed(TwoCrossedModuleSpec),
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub name: String,
    pub spec: Spec,
}

fn small(rng: &mut ChaCha8Rng) -> Q {
    Q::from_int(rng.gen_range(-2..=2))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_row_major(rows, cols, (0..rows * cols).map(|_| small(rng)).collect())
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// `count` random combinations of the left null vectors of `m`, as the rows of a matrix `M` with `M m = 0`.
fn annihilating_rows(rng: &mut ChaCha8Rng, count: usize, m: &Matrix) -> Matrix {
    let left_null = m.transpose().null_space_basis();
    let rows: Vec<Vec<Q>> = (0..count)
        .map(|_| {
            let mut row = vec![Q::zero(); m.rows()];
            for v in &left_null {
                let c = small(rng);
                for (r, x) in row.iter_mut().zip(v) {
                    *r += &(&c * x);
                }
            }
            row
        })
        .collect();
    Matrix::from_rows(m.rows(), &rows)
}

/// `δ₁ δ₂ = 0` with `δ₂` random.
pub fn random_chain(rng: &mut ChaCha8Rng, nk: usize, nd: usize, nh: usize) -> (Matrix, Matrix) {
    let delta2 = random_matrix(rng, nd, nh);
    (annihilating_rows(rng, nk, &delta2), delta2)
}

fn crossed(name: impl Into<String>, s: CrossedModuleSpec) -> Generated {
    Generated { name: name.into(), spec: Spec::Crossed(s) }
}

fn two(name: impl Into<String>, s: TwoCrossedModuleSpec) -> Generated {
    Generated { name: name.into(), spec: Spec::TwoCrossed(s) }
}

fn rebased_crossed(rng: &mut ChaCha8Rng, s: &CrossedModuleSpec) -> CrossedModuleSpec {
    let (p, r) = (random_invertible(rng, s.d.dim()), random_invertible(rng, s.h.dim()));
    s.change_basis(&p, &r).expect("invertible change of basis")
}

fn rebased_two(rng: &mut ChaCha8Rng, s: &TwoCrossedModuleSpec) -> TwoCrossedModuleSpec {
    let (p, r, t) = (random_invertible(rng, s.k.dim()), random_invertible(rng, s.d.dim()), random_invertible(rng, s.h.dim()));
    s.change_basis(&p, &r, &t).expect("invertible change of basis")
}

/// Crossed and 2-crossed modules with every component of dimension at most 4.
pub fn corpus(seed: u64) -> Vec<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    out.push(crossed("crossed module fixture", crossed_module_fixture()));
    out.push(crossed("crossed module fixture, new basis", rebased_crossed(&mut rng, &crossed_module_fixture())));
    for (nd, nh) in [(1, 1), (2, 3), (3, 2), (4, 4)] {
        let d = random_matrix(&mut rng, nd, nh);
        out.push(crossed(format!("abelian crossed module {nd}x{nh}, random delta"), abelian_crossed_module(d)));
    }
    let z = Matrix::from_i64(3, 1, &[0, 0, 1]);
    let yz = Matrix::from_i64(3, 2, &[0, 0, 1, 0, 0, 1]);
    let f = Matrix::from_i64(2, 1, &[0, 1]);
    out.push(crossed("Heisenberg centre", ideal_crossed_module(&heisenberg(), &z).expect("ideal")));
    let hyz = ideal_crossed_module(&heisenberg(), &yz).expect("ideal");
    out.push(crossed("Heisenberg ideal span(Y, Z), new basis", rebased_crossed(&mut rng, &hyz)));
    out.push(crossed("affine line ideal span(F)", ideal_crossed_module(&affine_line(), &f).expect("ideal")));
    let sl = ideal_crossed_module(&sl2(), &Matrix::identity(3)).expect("ideal");
    out.push(crossed("sl2 identity, new basis", rebased_crossed(&mut rng, &sl)));
    out.push(crossed("sl2 adjoint module", adjoint_module_crossed_module(&sl2())));
    out.push(crossed("affine line adjoint module, new basis", rebased_crossed(&mut rng, &adjoint_module_crossed_module(&affine_line()))));

    out.push(two("Peiffer fixture", peiffer_fixture()));
    out.push(two("Peiffer fixture, new basis", rebased_two(&mut rng, &peiffer_fixture())));
    for (nk, nd, nh) in [(1, 1, 1), (2, 3, 1), (1, 2, 2), (3, 4, 2)] {
        let (d1, d2) = random_chain(&mut rng, nk, nd, nh);
        out.push(two(format!("abelian 2-crossed module {nk}x{nd}x{nh}, random delta"), abelian_two_crossed_module(d1, d2)));
    }
    out.push(two("identity 2-crossed module on the affine line", identity_two_crossed_module(&affine_line())));
    out.push(two("identity 2-crossed module on Heisenberg", identity_two_crossed_module(&heisenberg())));
    out.push(two("identity 2-crossed module on sl2, new basis", rebased_two(&mut rng, &identity_two_crossed_module(&sl2()))));
    out.push(two("crossed module fixture as a 2-crossed module", crossed_module_as_two_crossed(&crossed_module_fixture())));
    out.push(two("tensor construction of length 2", tensor_two_crossed_module()));
    out
}

/// The 2-crossed module underlying the length-2 tensor construction, dims `(2, 4, 2)`.
pub fn tensor_two_crossed_module() -> TwoCrossedModuleSpec {
    let g = tensor_with_symmetric_powers(&affine_line(), 0, 2, 3);
    let m = moore_complex(&g).expect("valid by construction");
    TwoCrossedModuleSpec::from_hypercrossed(&extract(&g, &m).expect("in range")).expect("Moore length 2")
}

/// An abelian simplicial Lie algebra with Moore complex `dims` and random differentials, truncated at `len(dims)`.
pub fn random_abelian_simplicial(seed: u64, dims: &[usize]) -> SimplicialLieAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = dims.len() - 1;
    let mut deltas: Vec<Matrix> = Vec::new();
    let mut above: Option<Matrix> = None;
    for m in (1..=top).rev() {
        let d = match &above {
            None => random_matrix(&mut rng, dims[m - 1], dims[m]),
            Some(up) => annihilating_rows(&mut rng, dims[m - 1], up),
        };
        above = Some(d.clone());
        deltas.push(d);
    }
    deltas.reverse();
    let data = HypercrossedData::new(dims.to_vec(), deltas).expect("shapes match");
    reconstruct(&data, top + 1).expect("abelian data reconstructs")
}

/// Direct simplicial inputs of Moore length 3.
pub fn length_three_inputs() -> Vec<(String, SimplicialLieAlgebra)> {
    vec![
        ("tensor construction, degrees 1..3".to_string(), tensor_with_symmetric_powers(&affine_line(), 1, 3, 4)),
        ("tensor construction, degrees 0..3".to_string(), tensor_with_symmetric_powers(&affine_line(), 0, 3, 4)),
        ("abelian, random delta, dims 1,2,2,1".to_string(), random_abelian_simplicial(7, &[1, 2, 2, 1])),
        ("abelian, random delta, dims 2,3,2,1".to_string(), random_abelian_simplicial(11, &[2, 3, 2, 1])),
    ]
}

fn render(doc: &InputDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Contents of every file under `fixtures/`, by file name.
pub fn fixture_files() -> Vec<(&'static str, String)> {
    let cm = input_document(Kind::CrossedModule, crossed_module_to_doc(&crossed_module_fixture()), Options::default());
    let peiffer = input_document(Kind::TwoCrossedModule, two_crossed_module_to_doc(&peiffer_fixture()), Options::default());
    let (d1, d2) = (Matrix::from_i64(1, 2, &[1, 1]), Matrix::from_i64(2, 1, &[1, -1]));
    let abelian = input_document(Kind::TwoCrossedModule, two_crossed_module_to_doc(&abelian_two_crossed_module(d1, d2)), Options::default());
    let direct = input_document(
        Kind::Simplicial,
        simplicial_to_doc(&random_abelian_simplicial(7, &[1, 2, 2, 1])),
        Options::default(),
    );

    // [e0, e1] = e0, [e1, e2] = e1: antisymmetric, but the Jacobi sum on (e0, e1, e2) is −e0.
    let mut non_jacobi = crossed_module_to_doc(&abelian_crossed_module(Matrix::zeros(3, 1)));
    non_jacobi.d.structure_constants = vec![
        (0, 1, 0, "1".into()),
        (1, 0, 0, "-1".into()),
        (1, 2, 1, "1".into()),
        (2, 1, 1, "-1".into()),
    ];
    let non_jacobi = input_document(Kind::CrossedModule, non_jacobi, Options::default());

    let mut bad = cm.clone();
    bad.payload["delta1"]["entries"][1] = serde_json::Value::String("1/0".into());

    vec![
        ("crossed_module.json", render(&cm)),
        ("peiffer.json", render(&peiffer)),
        ("abelian_two_crossed.json", render(&abelian)),
        ("abelian_length3.json", render(&direct)),
        ("non_jacobi.json", render(&non_jacobi)),
        ("bad_rational.json", render(&bad)),
    ]
}
