use proptest::prelude::*;

use sdgla_core::dgla::{verify_against_oracle, verify_dgla};
use sdgla_core::fixtures::{abelian_crossed_module, abelian_two_crossed_module};
use sdgla_core::hypercrossed::*;
use sdgla_core::matrix::Matrix;
use sdgla_core::simplicial::moore_complex;
use sdgla_core::superfield::{Direction, GrassmannPoly, Symbol};
use sdgla_core::Q;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| Matrix::from_i64(rows, cols, &v))
}

fn crossed() -> impl Strategy<Value = CrossedModuleSpec> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(nd, nh)| matrix(nd, nh)).prop_map(abelian_crossed_module)
}

fn two_crossed() -> impl Strategy<Value = TwoCrossedModuleSpec> {
    (1usize..=2, 1usize..=3, 1usize..=2)
        .prop_flat_map(|(nk, nd, nh)| (matrix(nk, nd), prop::collection::vec(-2i64..=2, nd * nh), Just(nh)))
        .prop_map(|(d1, coeffs, nh)| {
            // Columns of δ₂ are combinations of the kernel of δ₁.
            let kernel = d1.null_space_basis();
            let nd = d1.cols();
            let cols: Vec<Vec<Q>> = (0..nh)
                .map(|j| {
                    let mut c = vec![Q::zero(); nd];
                    for (t, v) in kernel.iter().enumerate() {
                        let w = Q::from_int(coeffs[(j * nd + t) % coeffs.len()]);
                        for (x, y) in c.iter_mut().zip(v) {
                            *x += &(&w * y);
                        }
                    }
                    c
                })
                .collect();
            abelian_two_crossed_module(d1, Matrix::from_columns(nd, &cols))
        })
}

/// Scalar polynomials in up to 4 generators mixing one even and one odd symbol.
fn poly(n: usize) -> impl Strategy<Value = GrassmannPoly> {
    let term = (0u32..(1 << n), 0usize..4, -3i64..=3);
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = GrassmannPoly::zero(n, 1);
        let monos = [vec![], vec![Symbol::new(0, false)], vec![Symbol::new(1, true)], vec![Symbol::new(0, false), Symbol::new(1, true)]];
        for (mask, m, c) in terms {
            p.add_term(&monos[m], mask, &Q::from_int(c), &[Q::one()]);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn abelian_crossed_modules_give_verified_dglas(spec in crossed()) {
        prop_assert!(validate_crossed_module(&spec).is_empty());
        let g = from_crossed_module(&spec, 3).unwrap();
        let m = moore_complex(&g).unwrap();
        prop_assert_eq!(CrossedModuleSpec::from_hypercrossed(&extract(&g, &m).unwrap()).unwrap(), spec);
        let (_, r) = verify_against_oracle(&g, &m).unwrap();
        prop_assert!(r.passed(), "{}\n{}", r.axioms, r.oracle);
    }

    #[test]
    fn abelian_two_crossed_modules_give_verified_dglas(spec in two_crossed()) {
        prop_assert!(validate_two_crossed_module(&spec).is_empty());
        let g = from_two_crossed_module(&spec, 3).unwrap();
        let m = moore_complex(&g).unwrap();
        prop_assert_eq!(TwoCrossedModuleSpec::from_hypercrossed(&extract(&g, &m).unwrap()).unwrap(), spec);
        let (l, r) = verify_against_oracle(&g, &m).unwrap();
        prop_assert!(r.passed(), "{}\n{}", r.axioms, r.oracle);
        prop_assert!(verify_dgla(&l).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grassmann_product_is_associative(a in poly(3), b in poly(3), c in poly(3)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn change_of_variables_round_trips(p in poly(4)) {
        let there = p.change_vars(Direction::BarToTheta);
        prop_assert_eq!(there.change_vars(Direction::ThetaToBar), p.clone());
        prop_assert_eq!(p.change_vars(Direction::ThetaToBar).change_vars(Direction::BarToTheta), p);
    }

    #[test]
    fn derivative_is_a_graded_derivation(a in poly(3), b in poly(3), i in 0usize..3) {
        let mut even = GrassmannPoly::zero(3, 1);
        for (m, mask, v) in a.terms() {
            if (mask.count_ones() as usize + m.iter().filter(|s| s.is_odd()).count()) % 2 == 0 {
                even.add_term(m, mask, &Q::one(), v);
            }
        }
        let odd = GrassmannPoly::theta(3, (i + 1) % 3).mul(&even).unwrap();
        let lhs = odd.mul(&b).unwrap().derive(i).unwrap();
        let rhs = odd.derive(i).unwrap().mul(&b).unwrap().add(&odd.mul(&b.derive(i).unwrap()).unwrap().scale(&-Q::one()));
        prop_assert_eq!(lhs, rhs);
    }
}
