use sdgla_core::dgla::*;
use sdgla_core::fixtures::*;
use sdgla_core::hypercrossed::*;
use sdgla_core::lie::Tensor3;
use sdgla_core::matrix::Matrix;
use sdgla_core::simplicial::{moore_complex, MooreComplex, SimplicialLieAlgebra};
use sdgla_core::superfield::{oracle_bracket_table, oracle_differential};
use sdgla_core::{LieAlgebra, Q};

fn q(n: i64) -> Q {
    Q::from_int(n)
}

fn clean(g: &SimplicialLieAlgebra) -> (MooreComplex, Dgla) {
    let m = moore_complex(g).unwrap();
    let l = build_dgla(g, &m).unwrap();
    let r = verify_dgla(&l);
    assert!(r.passed(), "{}", r.axioms);
    (m, l)
}

#[test]
fn crossed_module_fixture_gives_the_strict_lie_two_algebra() {
    let spec = crossed_module_fixture();
    let g = from_crossed_module(&spec, 3).unwrap();
    let (_, l) = clean(&g);
    assert_eq!(l.dims(), &[2, 1]);
    assert_eq!(l.differential(1), &spec.delta1.scaled(&q(DIFFERENTIAL_SIGN as i64)));
    assert_eq!(l.bracket_table(0, 0).unwrap(), spec.d.structure_constants());
    assert_eq!(l.bracket_table(0, 1).unwrap(), &spec.action);
    let mut back = Tensor3::zeros(1, 2, 1);
    back.set(0, 0, &[q(-1)]);
    assert_eq!(l.bracket_table(1, 0).unwrap(), &back);
    assert!(l.bracket_table(1, 1).is_none());
}

#[test]
fn frozen_oracle_values_on_the_crossed_module_fixture() {
    let g = from_crossed_module(&crossed_module_fixture(), 3).unwrap();
    let m = moore_complex(&g).unwrap();
    assert_eq!(oracle_differential(&g, &m, 0).unwrap(), Matrix::from_i64(2, 1, &[0, -1]));
    let t = oracle_bracket_table(&g, &m, 0, 1).unwrap();
    assert_eq!(t.flat(), &[q(1), q(0)]);
    let t = oracle_bracket_table(&g, &m, 1, 0).unwrap();
    assert_eq!(t.flat(), &[q(1), q(0)]);
}

#[test]
fn peiffer_fixture_has_a_degree_minus_two_bracket() {
    let g = from_two_crossed_module(&peiffer_fixture(), 3).unwrap();
    let (m, l) = clean(&g);
    assert_eq!(l.dims(), &[1, 1, 1]);
    assert_eq!(l.bracket_table(1, 1).unwrap().flat(), &[q(-2)]);
    assert_eq!(oracle_bracket_table(&g, &m, 1, 1).unwrap().flat(), &[q(-2)]);
    let r = oracle_compare(&g, &m, &l).unwrap();
    assert!(r.oracle.is_empty());
    let n2: Vec<_> = r.sign_table.iter().filter(|e| e.pair.n == 2).collect();
    assert_eq!(n2.len(), 1);
    assert_eq!((n2[0].prose, n2[0].forward, n2[0].reverse), (-1, -1, -1));
}

#[test]
fn abelian_two_crossed_module_gives_a_chain_complex() {
    let spec = abelian_two_crossed_module(Matrix::from_i64(1, 2, &[1, 1]), Matrix::from_i64(2, 1, &[1, -1]));
    let g = from_two_crossed_module(&spec, 3).unwrap();
    let (_, l) = clean(&g);
    assert!(l.bracket_tables().values().all(Tensor3::is_zero));
    assert_eq!(l.differential(2), &spec.delta2.scaled(&q(-1)));
}

#[test]
fn constant_object_gives_a_plain_lie_algebra() {
    let g = SimplicialLieAlgebra::constant(&sl2(), 2);
    let (_, l) = clean(&g);
    assert_eq!(l.top(), 0);
    assert_eq!(l.bracket_table(0, 0).unwrap(), sl2().structure_constants());
}

#[test]
fn length_three_inputs_agree_with_the_oracle() {
    for (lo, hi) in [(1, 3), (0, 3)] {
        let g = tensor_with_symmetric_powers(&affine_line(), lo, hi, 4);
        let m = moore_complex(&g).unwrap();
        assert_eq!(m.length(), 3);
        let (l, r) = verify_against_oracle(&g, &m).unwrap();
        assert!(r.passed(), "{}\n{}", r.axioms, r.oracle);
        assert!(l.bracket_tables().iter().any(|(&(a, b), t)| a >= 1 && b >= 1 && !t.is_zero()));
        assert!(r.sign_table.iter().any(|e| e.pair.n == 3));
    }
}

#[test]
fn action_matches_the_crossed_module_action() {
    let spec = crossed_module_fixture();
    let g = from_crossed_module(&spec, 3).unwrap();
    let m = moore_complex(&g).unwrap();
    let e = m.embed(0, &[q(1), q(0)]);
    let x = m.embed(1, &[q(1)]);
    assert_eq!(action(&g, 1, &e, &x).unwrap(), x);
    assert_eq!(action(&g, 1, &[q(0), q(0)], &x).unwrap(), vec![q(0); g.dim(1)]);
    let lie = action(&g, 0, &e, &m.embed(0, &[q(0), q(1)])).unwrap();
    assert_eq!(lie, vec![q(0), q(1)]);
}

#[test]
fn perturbed_structure_constant_is_reported() {
    let g = tensor_with_symmetric_powers(&affine_line(), 0, 2, 3);
    let (_, l) = clean(&g);
    let mut t = l.bracket_table(0, 1).unwrap().clone();
    let v: Vec<Q> = t.entry(0, 1).iter().enumerate().map(|(i, c)| if i == 1 { c + &q(1) } else { c.clone() }).collect();
    t.set(0, 1, &v);
    let bad = l.with_bracket_table(0, 1, t);
    let r = verify_dgla(&bad);
    assert!(!r.passed());
    let laws: Vec<&str> = r.axioms.violations.iter().map(|v| v.law.as_str()).collect();
    assert!(laws.iter().any(|&w| w == "jacobi" || w == "leibniz"), "{laws:?}");
    assert!(r.axioms.violations.iter().all(|v| !v.witness.is_empty()));
}

#[test]
fn zero_dgla_verifies() {
    let l = Dgla::new(vec![0, 0], vec![Matrix::zeros(0, 0), Matrix::zeros(0, 0)], Default::default()).unwrap();
    assert!(verify_dgla(&l).passed());
}

#[test]
fn build_requires_room_for_the_oracle() {
    let g = from_crossed_module(&crossed_module_fixture(), 3).unwrap().truncate(1);
    let m = moore_complex(&g).unwrap();
    assert!(matches!(build_dgla(&g, &m), Err(sdgla_core::AlgebraError::MooreLengthExceedsTruncation { .. })));
}

#[test]
fn changed_bases_still_verify() {
    let spec = ideal_crossed_module(&heisenberg(), &Matrix::from_i64(3, 2, &[0, 0, 1, 0, 0, 1])).unwrap();
    let spec = spec.change_basis(&Matrix::from_i64(3, 3, &[1, 2, 0, 0, 1, 0, 1, 0, 1]), &Matrix::from_i64(2, 2, &[2, 1, 1, 1])).unwrap();
    assert!(validate_crossed_module(&spec).is_empty());
    clean(&from_crossed_module(&spec, 3).unwrap());
    let e: LieAlgebra = sl2();
    let spec = identity_two_crossed_module(&e);
    assert!(validate_two_crossed_module(&spec).is_empty());
    clean(&from_two_crossed_module(&spec, 3).unwrap());
    clean(&from_crossed_module(&adjoint_module_crossed_module(&sl2()), 3).unwrap());
}
