//! Property tests for the structural invariants, over fixtures moved to
//! random bases and over random small operators.

use num_traits::Zero;
use plab_core::algebra::{
    check_averaging, check_leibniz, check_lie, check_pre_lie, induced_leibniz, sub_adjacent_lie,
};
use plab_core::linalg::Tensor3;
use plab_core::representation::{
    check_S_admissible, check_avg_representation, check_leibniz_representation,
    coregular_representation, induced_leibniz_representation, regular_representation,
    semidirect_product_raw,
};
use plab_core::rota_baxter::{
    check_equiva3, descendent_avg_prelie, lift_T_to_r, lift_tensor, RelativeRB,
};
use plab_core::yang_baxter::{delta_r, double_bracket_rr, RTensor};
use plab_core::{fixtures, Algebra, AveragingAlgebra, AvgRepresentation, Matrix, Rational, Scalar};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(lo..=hi, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| q(v[i * cols + j])))
}

/// `L·U` with unit diagonals, so always invertible.
fn change_of_basis(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n, -1, 1), matrix(n, n, -1, 1)).prop_map(move |(a, b)| {
        let l = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                q(1)
            } else if i > j {
                a[(i, j)].clone()
            } else {
                q(0)
            }
        });
        let u = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                q(1)
            } else if i < j {
                b[(i, j)].clone()
            } else {
                q(0)
            }
        });
        &l * &u
    })
}

fn avg_fixtures() -> Vec<AveragingAlgebra> {
    vec![
        fixtures::ut2_avg(),
        fixtures::nc2_avg(),
        AveragingAlgebra::new(fixtures::d4(), fixtures::d4_p()).unwrap(),
        AveragingAlgebra::new(fixtures::d4(), fixtures::d4_sym_p()).unwrap(),
        AveragingAlgebra::new(fixtures::b3(), Matrix::identity(3)).unwrap(),
    ]
}

/// `(A, P)` in the basis `g`: product `g⁻¹(gx∘gy)`, operator `g⁻¹Pg`.
fn moved(avg: &AveragingAlgebra, g: &Matrix) -> AveragingAlgebra {
    let gi = g.invert().unwrap().unwrap();
    let alg = avg.base().transport(g).unwrap();
    AveragingAlgebra::new(alg, &(&gi * avg.op()) * g).unwrap()
}

fn fixture_and_basis() -> impl Strategy<Value = AveragingAlgebra> {
    (0..avg_fixtures().len()).prop_flat_map(|k| {
        let avg = avg_fixtures().swap_remove(k);
        change_of_basis(avg.dim()).prop_map(move |g| moved(&avg, &g))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solutions_satisfy_the_system(a in matrix(3, 4, -3, 3), x in matrix(4, 1, -3, 3)) {
        let rhs = &a * &x;
        let sol = a.solve_linear(&rhs).unwrap().expect("consistent by construction");
        prop_assert_eq!(&a * &sol.particular, rhs);
        for v in &sol.nullspace {
            prop_assert!(a.apply(v).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(sol.nullspace.len(), 4 - a.rank());
    }

    #[test]
    fn inverse_gives_identity(a in matrix(4, 4, -3, 3)) {
        match a.invert().unwrap() {
            Some(inv) => {
                prop_assert_eq!(&a * &inv, Matrix::identity(4));
                prop_assert_eq!(&inv * &a, Matrix::identity(4));
            }
            None => prop_assert!(a.determinant().unwrap().is_zero()),
        }
    }

    #[test]
    fn literals_are_reduced(num in -50i64..50, den in 1i64..50) {
        let x = Rational::from_fraction(num, den);
        let lit = x.to_literal();
        let back = Rational::parse_literal(&format!("{}/{}", num * 3, den * 3)).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_literal(), lit);
        prop_assert!(x.denom() > &num_bigint::BigInt::zero());
    }

    #[test]
    fn pre_lie_structure_survives_change_of_basis(avg in fixture_and_basis()) {
        let alg = avg.base();
        prop_assert!(check_pre_lie(alg).passed);
        prop_assert!(check_lie(&sub_adjacent_lie(alg).unwrap()).passed);
        prop_assert!(check_averaging(alg, &Matrix::identity(alg.dim())).unwrap().passed);
        prop_assert!(check_leibniz(&induced_leibniz(&avg).unwrap()).passed);
        prop_assert!(check_S_admissible(&avg, avg.op()).unwrap().passed);
    }

    #[test]
    fn regular_representation_induces_leibniz_representation(avg in fixture_and_basis()) {
        let reg = regular_representation(&avg);
        let leib = induced_leibniz(&avg).unwrap();
        let lrep = induced_leibniz_representation(&avg, &reg).unwrap();
        prop_assert!(check_leibniz_representation(&leib, &lrep).unwrap().passed);
    }

    #[test]
    fn semidirect_averaging_iff_averaging_representation(k in 0usize..5, a in matrix(4, 4, -1, 1)) {
        let avg = avg_fixtures().swap_remove(k);
        let n = avg.dim();
        let alpha = a.block(0, 0, n, n);
        for rep in [regular_representation(&avg).rep, coregular_representation(&avg, avg.op()).unwrap().rep] {
            let avgrep = AvgRepresentation { rep, alpha: alpha.clone() };
            let (big, op) = semidirect_product_raw(avg.base(), avg.op(), &avgrep).unwrap();
            prop_assert_eq!(
                check_averaging(&big, &op).unwrap().passed,
                check_avg_representation(&avg, &avgrep).unwrap().passed
            );
        }
    }

    #[test]
    fn double_bracket_is_quadratic(k in 0usize..5, c in matrix(4, 4, -2, 2), lambda in -3i64..=3) {
        let alg = avg_fixtures().swap_remove(k).base().clone();
        let n = alg.dim();
        let r = RTensor::new(c.block(0, 0, n, n)).unwrap();
        let l = q(lambda);
        let scaled = double_bracket_rr(&alg, &r.scale(&l)).unwrap();
        prop_assert_eq!(scaled, double_bracket_rr(&alg, &r).unwrap().scale(&(l.clone() * &l)));
    }

    #[test]
    fn coboundary_is_linear(k in 0usize..5, a in matrix(4, 4, -2, 2), b in matrix(4, 4, -2, 2)) {
        let alg = avg_fixtures().swap_remove(k).base().clone();
        let n = alg.dim();
        let r1 = RTensor::new(a.block(0, 0, n, n)).unwrap();
        let r2 = RTensor::new(b.block(0, 0, n, n)).unwrap();
        let sum = delta_r(&alg, &r1.try_add(&r2).unwrap()).unwrap();
        let parts = delta_r(&alg, &r1).unwrap().coproduct().try_add(delta_r(&alg, &r2).unwrap().coproduct()).unwrap();
        prop_assert_eq!(sum.coproduct(), &parts);
    }

    #[test]
    fn lifted_tensor_is_symmetric(t in matrix(3, 2, -2, 2)) {
        let r = lift_tensor(&t);
        prop_assert!(r.is_symmetric());
        prop_assert_eq!(r.coeff().transpose(), r.coeff().clone());
        prop_assert_eq!(r.dim(), 5);
    }

    #[test]
    fn lift_reports_symmetric_tensor(t in matrix(3, 3, -1, 1)) {
        let avg = fixtures::ut2_avg();
        let avgrep = coregular_representation(&avg, &fixtures::ut2_s()).unwrap();
        let (r, rep) = lift_T_to_r(&avg, &avgrep, &t, &fixtures::ut2_s(), &fixtures::ut2_rrb_beta()).unwrap();
        prop_assert!(r.is_symmetric());
        prop_assert_eq!(rep.parts[0].passed, rep.parts[1].passed);
    }

    #[test]
    fn equivalent_admissibility_conditions_agree(k in 0usize..5, s in matrix(4, 4, -1, 1), a in matrix(4, 4, -1, 1), b in matrix(4, 4, -1, 1)) {
        let avg = avg_fixtures().swap_remove(k);
        let n = avg.dim();
        let rep = regular_representation(&avg).rep;
        let rep3 = check_equiva3(&avg, &rep, &s.block(0, 0, n, n), &a.block(0, 0, n, n), &b.block(0, 0, n, n)).unwrap();
        prop_assert!(rep3.passed);
        prop_assert!(rep3.parts.windows(2).all(|w| w[0].passed == w[1].passed));
    }
}

/// Relative Rota-Baxter operators found on the coregular UT2 representation
/// give averaging descendents.
#[test]
fn descendents_are_averaging() {
    let avg = fixtures::ut2_avg();
    let avgrep = coregular_representation(&avg, &fixtures::ut2_s()).unwrap();
    let found = plab_core::rota_baxter::search_relative_rb(
        &avg,
        &avgrep,
        &[q(-1), q(0), q(1)],
        &plab_core::algebra::SearchLimits::default(),
    )
    .unwrap();
    assert_eq!(found.len(), 15);
    for t in found {
        let rrb = RelativeRB::new(avg.clone(), avgrep.clone(), t).unwrap();
        let desc = descendent_avg_prelie(&rrb).unwrap();
        assert!(check_averaging(desc.base(), desc.op()).unwrap().passed);
    }
}

/// Every dim-2 pre-Lie algebra with constants in {−1, 0, 1}.
#[test]
fn searched_pre_lie_algebras() {
    let cands = [q(-1), q(0), q(1)];
    let found =
        plab_core::algebra::search_pre_lie_algebras(2, &cands, &Default::default()).unwrap();
    assert!(found.len() > 1);
    for alg in &found {
        assert!(check_lie(&sub_adjacent_lie(alg).unwrap()).passed);
        assert!(check_averaging(alg, &Matrix::identity(2)).unwrap().passed);
    }
    let zero = Algebra::new("Z", Tensor3::cube(2)).unwrap();
    assert!(found.iter().any(|a| a.product() == zero.product()));
}
