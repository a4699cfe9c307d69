use sdgla_core::combinatorics::{enum_s, PeifferPair};
use sdgla_core::fixtures::*;
use sdgla_core::hypercrossed::*;
use sdgla_core::matrix::{unit_vector, Matrix};
use sdgla_core::simplicial::{decomposition_check, moore_complex, s_alpha, validate_simplicial, SimplicialLieAlgebra};
use sdgla_core::{MultiIndex, Q};

/// Checks that `e_{α,a} ↦ s_α b_a` carries `h` isomorphically onto `g`.
fn assert_isomorphic_via_decomposition(g: &SimplicialLieAlgebra, h: &SimplicialLieAlgebra) {
    let moore = moore_complex(g).unwrap();
    let k = g.truncation().min(h.truncation());
    let iso: Vec<Matrix> = (0..=k)
        .map(|n| {
            let mut cols = Vec::new();
            for alpha in enum_s(n) {
                let s = s_alpha(g, alpha, n).unwrap();
                for b in moore.space(n - alpha.len()).basis() {
                    cols.push(s.apply(b));
                }
            }
            Matrix::from_columns(g.dim(n), &cols)
        })
        .collect();
    for n in 0..=k {
        assert_eq!(iso[n].cols(), h.dim(n), "dimension at level {n}");
        assert_eq!(iso[n].rank(), g.dim(n), "decomposition spans level {n}");
        let dh = h.dim(n);
        for p in 0..dh {
            for q in 0..dh {
                let (x, y) = (unit_vector(dh, p), unit_vector(dh, q));
                let lhs = iso[n].apply(&h.level(n).bracket(&x, &y).unwrap());
                let rhs = g.level(n).bracket(&iso[n].apply(&x), &iso[n].apply(&y)).unwrap();
                assert_eq!(lhs, rhs, "bracket at level {n} on ({p}, {q})");
            }
        }
        if n > 0 {
            for i in 0..=n {
                assert_eq!(iso[n - 1].compose(h.face(n, i)), g.face(n, i).compose(&iso[n]), "face {i} at {n}");
            }
        }
        if n < k {
            for i in 0..=n {
                assert_eq!(iso[n + 1].compose(h.degeneracy(n, i)), g.degeneracy(n, i).compose(&iso[n]));
            }
        }
    }
}

#[test]
fn crossed_module_fixture_builds_a_valid_nerve() {
    let spec = crossed_module_fixture();
    assert!(validate_crossed_module(&spec).is_empty());
    let g = from_crossed_module(&spec, 3).unwrap();
    assert!(validate_simplicial(&g).is_empty());
    assert_eq!((0..=3).map(|n| g.dim(n)).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
    let m = moore_complex(&g).unwrap();
    assert_eq!(m.dims(), vec![2, 1, 0, 0]);
    assert_eq!(m.delta(1), &Matrix::from_i64(2, 1, &[0, 1]));
    for n in 0..=3 {
        assert!(decomposition_check(&g, &m, n).unwrap());
    }
    let back = CrossedModuleSpec::from_hypercrossed(&extract(&g, &m).unwrap()).unwrap();
    assert_eq!(back, spec);
}

#[test]
fn peiffer_fixture_builds_and_round_trips() {
    let spec = peiffer_fixture();
    assert!(validate_two_crossed_module(&spec).is_empty());
    let g = from_two_crossed_module(&spec, 3).unwrap();
    let m = moore_complex(&g).unwrap();
    assert_eq!(m.dims(), vec![1, 1, 1, 0]);
    let data = extract(&g, &m).unwrap();
    assert_eq!(data, spec.to_hypercrossed().unwrap());
    let pair = PeifferPair { n: 2, alpha: MultiIndex::singleton(0), beta: MultiIndex::singleton(1) };
    let d = m.embed(1, &[Q::one()]);
    let x = peiffer(&g, &m, &pair, &d, &d).unwrap();
    assert_eq!(x, m.embed(2, &[Q::one()]));
}

#[test]
fn identity_two_crossed_module_round_trips() {
    let spec = identity_two_crossed_module(&affine_line());
    let r = validate_two_crossed_module(&spec);
    assert!(r.is_empty(), "{r}");
    let g = from_two_crossed_module(&spec, 3).unwrap();
    let m = moore_complex(&g).unwrap();
    assert_eq!(m.dims(), vec![0, 2, 2, 0]);
    assert_eq!(extract(&g, &m).unwrap(), spec.to_hypercrossed().unwrap());
}

#[test]
fn tensor_construction_of_length_two_round_trips() {
    let g = tensor_with_symmetric_powers(&affine_line(), 0, 2, 3);
    let r = validate_simplicial(&g);
    assert!(r.is_empty(), "{r}");
    let m = moore_complex(&g).unwrap();
    assert_eq!(m.dims(), vec![2, 4, 2, 0]);
    let data = extract(&g, &m).unwrap();
    let spec = TwoCrossedModuleSpec::from_hypercrossed(&data).unwrap();
    let r = validate_two_crossed_module(&spec);
    assert!(r.is_empty(), "{r}");
    assert_eq!(spec.to_hypercrossed().unwrap(), data);
    let h = reconstruct(&data, 3).unwrap();
    assert_isomorphic_via_decomposition(&g, &h);
}

#[test]
fn tensor_construction_of_length_three_round_trips() {
    let g = tensor_with_symmetric_powers(&affine_line(), 1, 3, 4);
    let m = moore_complex(&g).unwrap();
    assert_eq!(m.dims(), vec![0, 6, 6, 2, 0]);
    let data = extract(&g, &m).unwrap();
    let h = reconstruct(&data, 4).unwrap();
    assert_isomorphic_via_decomposition(&g, &h);
}
