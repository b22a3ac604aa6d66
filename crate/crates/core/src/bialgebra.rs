//! Pre-Lie bialgebras, averaging pre-Lie bialgebras, balanced bialgebras and
//! the averaging Lie bialgebras they induce.

use crate::algebra::{
    averaging_report, check_lie, check_pre_lie, square_of, sub_adjacent_lie, Algebra,
};
use crate::coalgebra::{
    check_lie_coalgebra, check_prelie_coalgebra, coaveraging_report, dual_algebra, tensor_apply,
    Coalgebra,
};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{basis_vector, vec_sub, Matrix};
use crate::matched_pair::MatchedPairPreLie;
use crate::report::{CheckReport, Checker};
use crate::representation::{coregular, failed_kind, s_admissible_report};
use crate::scalar::Scalar;

fn same_dim<T: Scalar>(alg: &Algebra<T>, co: &Coalgebra<T>) -> Result<()> {
    ensure_dim(alg.dim() == co.dim(), || {
        format!(
            "algebra has dimension {}, coalgebra {}",
            alg.dim(),
            co.dim()
        )
    })
}

/// Both compatibility conditions between `∘` and `Δ`:
/// `Δ([x,y]) = (L_x⊗id + id⊗(L_x−R_x))Δ(y) − (L_y⊗id + id⊗(L_y−R_y))Δ(x)`
/// and `(1−τ)Δ(x∘y) = (1−τ)(id⊗R_y)Δ(x) + (1−τ)(L_x⊗id + id⊗L_x)Δ(y)`.
pub(crate) fn bialgebra_report<T: Scalar>(alg: &Algebra<T>, co: &Coalgebra<T>) -> CheckReport {
    let n = alg.dim();
    let id = Matrix::identity(n);
    let (ls, rs) = (alg.lefts(), alg.rights());
    let images: Vec<Matrix<T>> = (0..n).map(|i| co.basis_image(i)).collect();
    let mut ck = Checker::new("bialgebra");
    for i in 0..n {
        let ad_i = &ls[i] - &rs[i];
        for j in 0..n {
            let ad_j = &ls[j] - &rs[j];
            let (tx, ty) = (&images[i], &images[j]);
            let comm = vec_sub(&alg.basis_product(i, j), &alg.basis_product(j, i));
            let lhs = co.apply(&comm);
            let rhs = &(&tensor_apply(&ls[i], &id, ty) + &tensor_apply(&id, &ad_i, ty))
                - &(&tensor_apply(&ls[j], &id, tx) + &tensor_apply(&id, &ad_j, tx));
            ck.eq(
                "coproduct_of_commutator",
                &[i, j],
                lhs.entries(),
                rhs.entries(),
            );

            let d = co.apply(&alg.basis_product(i, j));
            let lhs = &d - &d.transpose();
            let u = tensor_apply(&id, &rs[j], tx);
            let v = &tensor_apply(&ls[i], &id, ty) + &tensor_apply(&id, &ls[i], ty);
            let rhs = &(&u - &u.transpose()) + &(&v - &v.transpose());
            ck.eq(
                "skew_coproduct_of_product",
                &[i, j],
                lhs.entries(),
                rhs.entries(),
            );
        }
    }
    ck.finish()
}

pub fn check_prelie_bialgebra<T: Scalar>(
    alg: &Algebra<T>,
    co: &Coalgebra<T>,
) -> Result<CheckReport> {
    same_dim(alg, co)?;
    alg.require_pre_lie()?;
    co.require_pre_lie()?;
    Ok(bialgebra_report(alg, co))
}

/// `(P⊗S)Δ(x) = (id⊗S)Δ(P(x)) = (P⊗id)Δ(P(x))` and
/// `(S⊗P)Δ(x) = (S⊗id)Δ(P(x)) = (id⊗P)Δ(P(x))`.
pub(crate) fn coalgebra_admissible_report<T: Scalar>(
    co: &Coalgebra<T>,
    p: &Matrix<T>,
    s: &Matrix<T>,
) -> CheckReport {
    let n = co.dim();
    let id = Matrix::identity(n);
    let mut ck = Checker::new("coalgebra_admissible");
    for i in 0..n {
        let d = co.basis_image(i);
        let dp = co.apply(&p.column(i));
        let l = tensor_apply(p, s, &d);
        ck.eq(
            "co_left_shift",
            &[i],
            l.entries(),
            tensor_apply(&id, s, &dp).entries(),
        );
        ck.eq(
            "co_left_absorb",
            &[i],
            l.entries(),
            tensor_apply(p, &id, &dp).entries(),
        );
        let r = tensor_apply(s, p, &d);
        ck.eq(
            "co_right_shift",
            &[i],
            r.entries(),
            tensor_apply(s, &id, &dp).entries(),
        );
        ck.eq(
            "co_right_absorb",
            &[i],
            r.entries(),
            tensor_apply(&id, p, &dp).entries(),
        );
    }
    ck.finish()
}

/// `(A, ∘, Δ, P, S)`. Fields are public so that arbitrary data can be
/// checked; [`AvgBialgebra::new`] only accepts data passing the full check.
#[derive(Clone, Debug, PartialEq)]
pub struct AvgBialgebra<T> {
    pub alg: Algebra<T>,
    pub p: Matrix<T>,
    pub co: Coalgebra<T>,
    pub s: Matrix<T>,
}

impl<T: Scalar> AvgBialgebra<T> {
    pub fn new(alg: Algebra<T>, p: Matrix<T>, co: Coalgebra<T>, s: Matrix<T>) -> Result<Self> {
        let bi = Self::unchecked(alg, p, co, s)?;
        let r = check_avg_prelie_bialgebra(&bi)?;
        if !r.passed {
            return Err(failed_kind("not an averaging pre-Lie bialgebra", &r));
        }
        let AvgBialgebra { alg, p, co, s } = bi;
        Ok(AvgBialgebra {
            alg: alg.into_pre_lie()?,
            p,
            co: co.into_pre_lie()?,
            s,
        })
    }

    /// Shape validation only.
    pub fn unchecked(
        alg: Algebra<T>,
        p: Matrix<T>,
        co: Coalgebra<T>,
        s: Matrix<T>,
    ) -> Result<Self> {
        same_dim(&alg, &co)?;
        square_of(&p, alg.dim(), "algebra operator")?;
        square_of(&s, alg.dim(), "coalgebra operator")?;
        Ok(AvgBialgebra { alg, p, co, s })
    }

    /// `Δ = 0`.
    pub fn trivial(alg: Algebra<T>, p: Matrix<T>, s: Matrix<T>) -> Result<Self> {
        let co = Coalgebra::zero(format!("{}*", alg.label()), alg.dim());
        Self::new(alg, p, co, s)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

/// One sub-report per defining item: averaging algebra, averaging
/// coalgebra, bialgebra compatibility, `S`-admissibility of `(A, P)`, and
/// `P*`-admissibility of the dual.
pub fn check_avg_prelie_bialgebra<T: Scalar>(bi: &AvgBialgebra<T>) -> Result<CheckReport> {
    same_dim(&bi.alg, &bi.co)?;
    square_of(&bi.p, bi.dim(), "algebra operator")?;
    square_of(&bi.s, bi.dim(), "coalgebra operator")?;
    let items = vec![
        CheckReport::all_of(
            "averaging_algebra",
            vec![
                check_pre_lie(&bi.alg),
                averaging_report(&bi.alg, &bi.p, "averaging"),
            ],
        ),
        CheckReport::all_of(
            "averaging_coalgebra",
            vec![
                check_prelie_coalgebra(&bi.co),
                coaveraging_report(&bi.co, &bi.s, "coaveraging"),
            ],
        ),
        bialgebra_report(&bi.alg, &bi.co),
        s_admissible_report(&bi.alg, &bi.p, &bi.s),
        coalgebra_admissible_report(&bi.co, &bi.p, &bi.s),
    ];
    Ok(CheckReport::all_of("averaging_bialgebra", items))
}

/// The matched pair `(A, A*, L* − R*, −R*, L*_{∘*} − R*_{∘*}, −R*_{∘*})`
/// with operators `P` and `Sᵀ`.
pub fn bialgebra_matched_pair<T: Scalar>(bi: &AvgBialgebra<T>) -> Result<MatchedPairPreLie<T>> {
    let dual = dual_algebra(&bi.co).with_label(format!("{}*", bi.alg.label()));
    let on_b = coregular(&bi.alg);
    let on_a = coregular(&dual);
    MatchedPairPreLie::new(bi.alg.clone(), dual, on_b, on_a)?
        .with_operators(bi.p.clone(), bi.s.transpose())
}

/// `x₁∘y ⊗ x₂ + y₂ ⊗ y₁∘x = y₁∘x ⊗ y₂ + x₂ ⊗ x₁∘y`, without preconditions.
pub(crate) fn balanced_report<T: Scalar>(alg: &Algebra<T>, co: &Coalgebra<T>) -> CheckReport {
    let n = alg.dim();
    let rs = alg.rights();
    let mut ck = Checker::new("balanced");
    for i in 0..n {
        let tx = co.basis_image(i);
        for j in 0..n {
            let ty = co.basis_image(j);
            // (R_y⊗id)Δx and (R_x⊗id)Δy
            let a = &rs[j] * &tx;
            let b = &rs[i] * &ty;
            let lhs = &a + &b.transpose();
            let rhs = &b + &a.transpose();
            ck.eq("balanced", &[i, j], lhs.entries(), rhs.entries());
        }
    }
    ck.finish()
}

pub fn check_balanced<T: Scalar>(alg: &Algebra<T>, co: &Coalgebra<T>) -> Result<CheckReport> {
    let r = check_prelie_bialgebra(alg, co)?;
    if !r.passed {
        return Err(failed_kind("not a pre-Lie bialgebra", &r));
    }
    Ok(balanced_report(alg, co))
}

/// `(A, [,], δ, P, S)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBialgebra<T> {
    pub lie: Algebra<T>,
    pub delta: Coalgebra<T>,
    pub p: Matrix<T>,
    pub s: Matrix<T>,
}

/// `[x,y] = x∘y − y∘x` and `δ = Δ − τΔ` on a balanced averaging pre-Lie
/// bialgebra.
pub fn induced_lie_bialgebra<T: Scalar>(bi: &AvgBialgebra<T>) -> Result<LieBialgebra<T>> {
    let r = check_avg_prelie_bialgebra(bi)?;
    if !r.passed {
        return Err(failed_kind("not an averaging pre-Lie bialgebra", &r));
    }
    if !balanced_report(&bi.alg, &bi.co).passed {
        return Err(Error::NotBalanced);
    }
    let lie = sub_adjacent_lie(&bi.alg)?;
    let delta = bi.co.antisymmetrized();
    Ok(LieBialgebra {
        lie,
        delta,
        p: bi.p.clone(),
        s: bi.s.clone(),
    })
}

/// Averaging Lie algebra, averaging Lie coalgebra, the cocycle condition
/// `δ([x,y]) = (ad_x⊗id + id⊗ad_x)δ(y) − (ad_y⊗id + id⊗ad_y)δ(x)`, and
/// `[P(x),S(y)] = S[P(x),y] = S[x,S(y)]`,
/// `(S⊗P)δ(x) = (S⊗id)δ(P(x)) = (id⊗P)δ(P(x))`.
pub fn check_avg_lie_bialgebra<T: Scalar>(
    lie: &Algebra<T>,
    delta: &Coalgebra<T>,
    p: &Matrix<T>,
    s: &Matrix<T>,
) -> Result<CheckReport> {
    same_dim(lie, delta)?;
    let n = lie.dim();
    square_of(p, n, "algebra operator")?;
    square_of(s, n, "coalgebra operator")?;
    let id = Matrix::identity(n);
    let ads = lie.lefts();

    let mut co = Checker::new("lie_bialgebra");
    for i in 0..n {
        let tx = delta.basis_image(i);
        for j in 0..n {
            let ty = delta.basis_image(j);
            let lhs = delta.apply(&lie.basis_product(i, j));
            let rhs = &(&tensor_apply(&ads[i], &id, &ty) + &tensor_apply(&id, &ads[i], &ty))
                - &(&tensor_apply(&ads[j], &id, &tx) + &tensor_apply(&id, &ads[j], &tx));
            co.eq("cocycle", &[i, j], lhs.entries(), rhs.entries());
        }
    }

    let mut adm = Checker::new("admissible");
    for i in 0..n {
        let (ei, pi) = (basis_vector(n, i), p.column(i));
        for j in 0..n {
            let (ej, sj) = (basis_vector(n, j), s.column(j));
            let l = lie.mul(&pi, &sj);
            adm.eq(
                "bracket_shift",
                &[i, j],
                &l,
                &s.apply_unchecked(&lie.mul(&pi, &ej)),
            );
            adm.eq(
                "bracket_absorb",
                &[i, j],
                &l,
                &s.apply_unchecked(&lie.mul(&ei, &sj)),
            );
        }
        let d = delta.basis_image(i);
        let dp = delta.apply(&pi);
        let r = tensor_apply(s, p, &d);
        adm.eq(
            "co_right_shift",
            &[i],
            r.entries(),
            tensor_apply(s, &id, &dp).entries(),
        );
        adm.eq(
            "co_right_absorb",
            &[i],
            r.entries(),
            tensor_apply(&id, p, &dp).entries(),
        );
    }

    Ok(CheckReport::all_of(
        "averaging_lie_bialgebra",
        vec![
            CheckReport::all_of(
                "averaging_lie_algebra",
                vec![check_lie(lie), averaging_report(lie, p, "averaging")],
            ),
            CheckReport::all_of(
                "averaging_lie_coalgebra",
                vec![
                    check_lie_coalgebra(delta),
                    coaveraging_report(delta, s, "coaveraging"),
                ],
            ),
            co.finish(),
            adm.finish(),
        ],
    ))
}
