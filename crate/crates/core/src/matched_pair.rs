//! Matched pairs of (averaging) pre-Lie algebras and of Leibniz algebras,
//! their doubles, and the Leibniz matched pair induced by averaging operators.

use crate::algebra::{check_averaging, square_of, Algebra, AveragingAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_sub, Matrix, Tensor3};
use crate::report::{CheckReport, Checker};
use crate::representation::{
    check_avg_representation, check_leibniz_representation, check_prelie_representation,
    failed_kind, induced_leibniz_representation_raw, AvgRepresentation, LeibnizRepresentation,
    Representation,
};
use crate::scalar::Scalar;

/// `(A, 𝔟, ρ_A, φ_A, ρ_𝔟, φ_𝔟)`, optionally with averaging operators on both
/// sides. `on_b` is the representation of `A` on `𝔟`, `on_a` the one of `𝔟`
/// on `A`. All four action families are stored independently.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedPairPreLie<T> {
    pub a: Algebra<T>,
    pub b: Algebra<T>,
    pub on_b: Representation<T>,
    pub on_a: Representation<T>,
    pub ops: Option<(Matrix<T>, Matrix<T>)>,
}

impl<T: Scalar> MatchedPairPreLie<T> {
    pub fn new(
        a: Algebra<T>,
        b: Algebra<T>,
        on_b: Representation<T>,
        on_a: Representation<T>,
    ) -> Result<Self> {
        on_b.ensure_for(&a)?;
        on_a.ensure_for(&b)?;
        if on_b.module_dim() != b.dim() || on_a.module_dim() != a.dim() {
            return Err(Error::DimensionMismatch(
                "cross actions must act on the other algebra".into(),
            ));
        }
        Ok(MatchedPairPreLie {
            a,
            b,
            on_b,
            on_a,
            ops: None,
        })
    }

    /// All four actions zero.
    pub fn zero(a: Algebra<T>, b: Algebra<T>) -> Self {
        let on_b = Representation::zero(&a, b.dim());
        let on_a = Representation::zero(&b, a.dim());
        MatchedPairPreLie {
            a,
            b,
            on_b,
            on_a,
            ops: None,
        }
    }

    pub fn with_operators(mut self, p_a: Matrix<T>, p_b: Matrix<T>) -> Result<Self> {
        square_of(&p_a, self.a.dim(), "operator on the first algebra")?;
        square_of(&p_b, self.b.dim(), "operator on the second algebra")?;
        self.ops = Some((p_a, p_b));
        Ok(self)
    }

    pub fn from_averaging(
        a: &AveragingAlgebra<T>,
        b: &AveragingAlgebra<T>,
        on_b: Representation<T>,
        on_a: Representation<T>,
    ) -> Result<Self> {
        Self::new(a.base().clone(), b.base().clone(), on_b, on_a)?
            .with_operators(a.op().clone(), b.op().clone())
    }

    fn averaging_reps(&self) -> Option<(AvgRepresentation<T>, AvgRepresentation<T>)> {
        self.ops.as_ref().map(|(pa, pb)| {
            (
                AvgRepresentation {
                    rep: self.on_b.clone(),
                    alpha: pb.clone(),
                },
                AvgRepresentation {
                    rep: self.on_a.clone(),
                    alpha: pa.clone(),
                },
            )
        })
    }
}

/// Compatibility of two cross actions, stated for the representation of
/// `first` on `second`; calling it again with the roles swapped yields the
/// other half.
fn prelie_compatibility<T: Scalar>(
    ck: &mut Checker,
    first: &Algebra<T>,
    second: &Algebra<T>,
    on_second: &Representation<T>,
    on_first: &Representation<T>,
    names: [&str; 2],
) {
    let (n, m) = (first.dim(), second.dim());
    for i in 0..n {
        let (rho_i, phi_i) = (on_second.rho(i), on_second.phi(i));
        for p in 0..m {
            let (rho_p, phi_p) = (on_first.rho(p), on_first.phi(p));
            for q in 0..m {
                let (rho_q, phi_q) = (on_first.rho(q), on_first.phi(q));
                let ep = crate::linalg::basis_vector(m, p);
                let eq = crate::linalg::basis_vector(m, q);
                // ρ(x)(a∘b) = −ρ(ρ'(a)x − φ'(a)x)b + (ρ(x)a − φ(x)a)∘b + φ(φ'(b)x)a + a∘(ρ(x)b)
                let lhs = rho_i.apply_unchecked(&second.basis_product(p, q));
                let shifted = vec_sub(&rho_p.column(i), &phi_p.column(i));
                let mut rhs = on_second.rho_of(&shifted).column(q);
                rhs = vec_sub(
                    &second.mul(&vec_sub(&rho_i.column(p), &phi_i.column(p)), &eq),
                    &rhs,
                );
                rhs = vec_add(&rhs, &on_second.phi_of(&phi_q.column(i)).column(p));
                rhs = vec_add(&rhs, &second.mul(&ep, &rho_i.column(q)));
                ck.eq(names[0], &[i, p, q], &lhs, &rhs);

                // φ(x)(a∘b − b∘a) = φ(ρ'(b)x)a − φ(ρ'(a)x)b + a∘(φ(x)b) − b∘(φ(x)a)
                let comm = vec_sub(&second.basis_product(p, q), &second.basis_product(q, p));
                let lhs = phi_i.apply_unchecked(&comm);
                let mut rhs = vec_sub(
                    &on_second.phi_of(&rho_q.column(i)).column(p),
                    &on_second.phi_of(&rho_p.column(i)).column(q),
                );
                rhs = vec_add(&rhs, &second.mul(&ep, &phi_i.column(q)));
                rhs = vec_sub(&rhs, &second.mul(&eq, &phi_i.column(p)));
                ck.eq(names[1], &[i, p, q], &lhs, &rhs);
            }
        }
    }
}

/// Verifies both cross representations (and their averaging compatibility
/// when operators are present) and the four matched-pair identities.
pub fn check_matched_pair_prelie<T: Scalar>(mp: &MatchedPairPreLie<T>) -> Result<CheckReport> {
    mp.a.require_pre_lie()?;
    mp.b.require_pre_lie()?;
    let mut parts = vec![
        named(
            check_prelie_representation(&mp.a, &mp.on_b)?,
            "representation_on_second",
        ),
        named(
            check_prelie_representation(&mp.b, &mp.on_a)?,
            "representation_on_first",
        ),
    ];
    let mut ck = Checker::new("matched_pair_identities");
    prelie_compatibility(
        &mut ck,
        &mp.a,
        &mp.b,
        &mp.on_b,
        &mp.on_a,
        ["rho_a_on_product", "phi_a_on_commutator"],
    );
    prelie_compatibility(
        &mut ck,
        &mp.b,
        &mp.a,
        &mp.on_a,
        &mp.on_b,
        ["rho_b_on_product", "phi_b_on_commutator"],
    );
    parts.push(ck.finish());
    if let Some((pa, pb)) = &mp.ops {
        parts.push(named(check_averaging(&mp.a, pa)?, "first_averaging"));
        parts.push(named(check_averaging(&mp.b, pb)?, "second_averaging"));
        if parts[0].passed && parts[1].passed && parts[3].passed && parts[4].passed {
            let (rb, ra) = mp.averaging_reps().expect("operators present");
            let a_avg = AveragingAlgebra::new(mp.a.clone(), pa.clone())?;
            let b_avg = AveragingAlgebra::new(mp.b.clone(), pb.clone())?;
            parts.push(named(
                check_avg_representation(&a_avg, &rb)?,
                "averaging_on_second",
            ));
            parts.push(named(
                check_avg_representation(&b_avg, &ra)?,
                "averaging_on_first",
            ));
        }
    }
    Ok(CheckReport::all_of("matched_pair_prelie", parts))
}

fn named(mut r: CheckReport, name: &str) -> CheckReport {
    r.name = name.to_string();
    r
}

/// Block structure constants on `G₁ ⊕ G₂` where
/// `x·ξ = left12(x)ξ + right21(ξ)x` and `ξ·x = right12(x)ξ + left21(ξ)x`.
fn double_tensor<T: Scalar>(
    first: &Algebra<T>,
    second: &Algebra<T>,
    left12: &[Matrix<T>],
    right12: &[Matrix<T>],
    left21: &[Matrix<T>],
    right21: &[Matrix<T>],
) -> Tensor3<T> {
    let (n, m) = (first.dim(), second.dim());
    let mut t = Tensor3::cube(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t[(i, j, k)] = first.product()[(i, j, k)].clone();
            }
        }
    }
    for p in 0..m {
        for q in 0..m {
            for r in 0..m {
                t[(n + p, n + q, n + r)] = second.product()[(p, q, r)].clone();
            }
        }
    }
    for i in 0..n {
        for q in 0..m {
            for r in 0..m {
                t[(i, n + q, n + r)] = left12[i][(r, q)].clone();
                t[(n + q, i, n + r)] = right12[i][(r, q)].clone();
            }
            for k in 0..n {
                t[(i, n + q, k)] = right21[q][(k, i)].clone();
                t[(n + q, i, k)] = left21[q][(k, i)].clone();
            }
        }
    }
    t
}

/// `(x+a)∘(y+b) = x∘y + ρ_𝔟(a)y + φ_𝔟(b)x + a∘b + ρ_A(x)b + φ_A(y)a`,
/// without checks, together with `P_A ⊕ P_𝔟` when operators are present.
pub fn build_double_raw<T: Scalar>(
    mp: &MatchedPairPreLie<T>,
) -> Result<(Algebra<T>, Option<Matrix<T>>)> {
    let t = double_tensor(
        &mp.a,
        &mp.b,
        mp.on_b.rhos(),
        mp.on_b.phis(),
        mp.on_a.rhos(),
        mp.on_a.phis(),
    );
    let alg = Algebra::new(format!("{}⋈{}", mp.a.label(), mp.b.label()), t)?;
    Ok((alg, mp.ops.as_ref().map(|(pa, pb)| pa.direct_sum(pb))))
}

/// The double of a verified matched pair, as a pre-Lie algebra.
pub fn build_double_algebra<T: Scalar>(mp: &MatchedPairPreLie<T>) -> Result<Algebra<T>> {
    let r = check_matched_pair_prelie(mp)?;
    if !r.passed {
        return Err(failed_kind("not a matched pair of pre-Lie algebras", &r));
    }
    build_double_raw(mp)?.0.into_pre_lie()
}

/// The double of a verified matched pair of averaging pre-Lie algebras.
pub fn build_double<T: Scalar>(mp: &MatchedPairPreLie<T>) -> Result<AveragingAlgebra<T>> {
    if mp.ops.is_none() {
        return Err(Error::Kind(
            "matched pair carries no averaging operators".into(),
        ));
    }
    let r = check_matched_pair_prelie(mp)?;
    if !r.passed {
        return Err(failed_kind(
            "not a matched pair of averaging pre-Lie algebras",
            &r,
        ));
    }
    let (alg, op) = build_double_raw(mp)?;
    AveragingAlgebra::new(alg, op.expect("operators present"))
}

/// `(G₁, G₂; (ρ^L, ρ^R), (μ^L, μ^R))`: `on_second` holds `ρ^L, ρ^R`
/// (actions of `G₁` on `G₂`), `on_first` holds `μ^L, μ^R`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedPairLeibniz<T> {
    pub g1: Algebra<T>,
    pub g2: Algebra<T>,
    pub on_second: LeibnizRepresentation<T>,
    pub on_first: LeibnizRepresentation<T>,
}

impl<T: Scalar> MatchedPairLeibniz<T> {
    pub fn new(
        g1: Algebra<T>,
        g2: Algebra<T>,
        on_second: LeibnizRepresentation<T>,
        on_first: LeibnizRepresentation<T>,
    ) -> Result<Self> {
        let g1 = if g1.require_leibniz().is_ok() {
            g1
        } else {
            g1.into_leibniz()?
        };
        let g2 = if g2.require_leibniz().is_ok() {
            g2
        } else {
            g2.into_leibniz()?
        };
        if on_second.left.len() != g1.dim()
            || on_first.left.len() != g2.dim()
            || on_second.module_dim != g2.dim()
            || on_first.module_dim != g1.dim()
        {
            return Err(Error::DimensionMismatch(
                "cross actions must act on the other algebra".into(),
            ));
        }
        Ok(MatchedPairLeibniz {
            g1,
            g2,
            on_second,
            on_first,
        })
    }

    pub fn zero(g1: Algebra<T>, g2: Algebra<T>) -> Result<Self> {
        let on_second = LeibnizRepresentation::zero(&g1, g2.dim());
        let on_first = LeibnizRepresentation::zero(&g2, g1.dim());
        Self::new(g1, g2, on_second, on_first)
    }
}

/// First three of the six identities, for the actions on `second`.
fn leibniz_compatibility<T: Scalar>(
    ck: &mut Checker,
    first: &Algebra<T>,
    second: &Algebra<T>,
    on_second: &LeibnizRepresentation<T>,
    on_first: &LeibnizRepresentation<T>,
    names: [&str; 3],
) {
    let (n, m) = (first.dim(), second.dim());
    let (rl, rr) = (&on_second.left, &on_second.right);
    let (ml, mr) = (&on_first.left, &on_first.right);
    for i in 0..n {
        for p in 0..m {
            let ep = crate::linalg::basis_vector(m, p);
            for q in 0..m {
                let eq = crate::linalg::basis_vector(m, q);
                let br = second.basis_product(p, q);

                // ρR(x)[ξ,η] − [ξ,ρR(x)η] + [η,ρR(x)ξ] − ρR(μL(η)x)ξ + ρR(μL(ξ)x)η
                let mut v = rr[i].apply_unchecked(&br);
                v = vec_sub(&v, &second.mul(&ep, &rr[i].column(q)));
                v = vec_add(&v, &second.mul(&eq, &rr[i].column(p)));
                v = vec_sub(&v, &on_second.right_of(&ml[q].column(i)).column(p));
                v = vec_add(&v, &on_second.right_of(&ml[p].column(i)).column(q));
                ck.eq(names[0], &[i, p, q], &v, &zeros(m));

                // ρL(x)[ξ,η] − [ρL(x)ξ,η] − [ξ,ρL(x)η] − ρL(μR(ξ)x)η − ρR(μR(η)x)ξ
                let mut v = rl[i].apply_unchecked(&br);
                v = vec_sub(&v, &second.mul(&rl[i].column(p), &eq));
                v = vec_sub(&v, &second.mul(&ep, &rl[i].column(q)));
                v = vec_sub(&v, &on_second.left_of(&mr[p].column(i)).column(q));
                v = vec_sub(&v, &on_second.right_of(&mr[q].column(i)).column(p));
                ck.eq(names[1], &[i, p, q], &v, &zeros(m));

                // [ρL(x)ξ,η] + ρL(μR(ξ)x)η + [ρR(x)ξ,η] + ρL(μL(ξ)x)η
                let mut v = second.mul(&rl[i].column(p), &eq);
                v = vec_add(&v, &on_second.left_of(&mr[p].column(i)).column(q));
                v = vec_add(&v, &second.mul(&rr[i].column(p), &eq));
                v = vec_add(&v, &on_second.left_of(&ml[p].column(i)).column(q));
                ck.eq(names[2], &[i, p, q], &v, &zeros(m));
            }
        }
    }
}

fn zeros<T: Scalar>(n: usize) -> Vec<T> {
    vec![T::zero(); n]
}

pub fn check_matched_pair_leibniz<T: Scalar>(mp: &MatchedPairLeibniz<T>) -> Result<CheckReport> {
    let mut parts = vec![
        named(
            check_leibniz_representation(&mp.g1, &mp.on_second)?,
            "representation_on_second",
        ),
        named(
            check_leibniz_representation(&mp.g2, &mp.on_first)?,
            "representation_on_first",
        ),
    ];
    let mut ck = Checker::new("matched_pair_identities");
    leibniz_compatibility(
        &mut ck,
        &mp.g1,
        &mp.g2,
        &mp.on_second,
        &mp.on_first,
        [
            "rho_right_on_bracket",
            "rho_left_on_bracket",
            "rho_left_right_sum",
        ],
    );
    leibniz_compatibility(
        &mut ck,
        &mp.g2,
        &mp.g1,
        &mp.on_first,
        &mp.on_second,
        [
            "mu_right_on_bracket",
            "mu_left_on_bracket",
            "mu_left_right_sum",
        ],
    );
    parts.push(ck.finish());
    Ok(CheckReport::all_of("matched_pair_leibniz", parts))
}

/// `[x+ξ, y+η] = [x,y] + μL(ξ)y + μR(η)x + [ξ,η] + ρL(x)η + ρR(y)ξ`,
/// without checks.
pub fn build_leibniz_double_raw<T: Scalar>(mp: &MatchedPairLeibniz<T>) -> Result<Algebra<T>> {
    let t = double_tensor(
        &mp.g1,
        &mp.g2,
        &mp.on_second.left,
        &mp.on_second.right,
        &mp.on_first.left,
        &mp.on_first.right,
    );
    Algebra::new(format!("{}⋈{}", mp.g1.label(), mp.g2.label()), t)
}

pub fn build_leibniz_double<T: Scalar>(mp: &MatchedPairLeibniz<T>) -> Result<Algebra<T>> {
    let r = check_matched_pair_leibniz(mp)?;
    if !r.passed {
        return Err(failed_kind("not a matched pair of Leibniz algebras", &r));
    }
    build_leibniz_double_raw(mp)?.into_leibniz()
}

/// The matched pair of induced Leibniz algebras:
/// `ρL(x) = ρ_A(P_A x) − φ_A(P_A x)`, `ρR(x) = (−ρ_A(x) + φ_A(x))P_𝔟`,
/// `μL(ξ) = ρ_𝔟(P_𝔟 ξ) − φ_𝔟(P_𝔟 ξ)`, `μR(ξ) = (−ρ_𝔟(ξ) + φ_𝔟(ξ))P_A`.
pub fn induced_leibniz_matched_pair<T: Scalar>(
    mp: &MatchedPairPreLie<T>,
) -> Result<MatchedPairLeibniz<T>> {
    let Some((pa, pb)) = &mp.ops else {
        return Err(Error::Kind(
            "matched pair carries no averaging operators".into(),
        ));
    };
    let r = check_matched_pair_prelie(mp)?;
    if !r.passed {
        return Err(failed_kind(
            "not a matched pair of averaging pre-Lie algebras",
            &r,
        ));
    }
    let a = AveragingAlgebra::new(mp.a.clone(), pa.clone())?;
    let b = AveragingAlgebra::new(mp.b.clone(), pb.clone())?;
    let (rb, ra) = mp.averaging_reps().expect("operators present");
    let on_second = induced_leibniz_representation_raw(a.label(), pa, &rb);
    let on_first = induced_leibniz_representation_raw(b.label(), pb, &ra);
    MatchedPairLeibniz::new(
        crate::algebra::induced_leibniz(&a)?,
        crate::algebra::induced_leibniz(&b)?,
        on_second,
        on_first,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_leibniz, check_pre_lie, induced_leibniz};
    use crate::representation::regular_representation;
    use crate::{fixtures, Rational};

    type M = Matrix<Rational>;

    /// `A ⋉ A*` with the coregular action and zero product on `A*`:
    /// the double of the trivial bialgebra on `A`, with `P ⊕ Pᵀ`.
    fn trivial_double(avg: &AveragingAlgebra<Rational>) -> MatchedPairPreLie<Rational> {
        let a = avg.base();
        let dual = Algebra::zero(format!("{}*", a.label()), a.dim());
        let on_b = Representation::new(
            a,
            (0..a.dim())
                .map(|i| &a.right(i).transpose() - &a.left(i).transpose())
                .collect(),
            (0..a.dim()).map(|i| a.right(i).transpose()).collect(),
        )
        .unwrap();
        let on_a = Representation::zero(&dual, a.dim());
        MatchedPairPreLie::new(a.clone(), dual, on_b, on_a)
            .unwrap()
            .with_operators(avg.op().clone(), avg.op().transpose())
            .unwrap()
    }

    #[test]
    fn zero_matched_pair() {
        let mp = MatchedPairPreLie::zero(fixtures::z2(), fixtures::z2())
            .with_operators(M::identity(2), M::identity(2))
            .unwrap();
        assert!(check_matched_pair_prelie(&mp).unwrap().passed);
        let d = build_double(&mp).unwrap();
        assert!(d.base().product().is_zero());
        assert_eq!(d.op(), &M::identity(4));
        let lmp = induced_leibniz_matched_pair(&mp).unwrap();
        assert!(check_matched_pair_leibniz(&lmp).unwrap().passed);
        assert!(build_leibniz_double(&lmp).unwrap().product().is_zero());
    }

    #[test]
    fn coregular_double_of_ut2() {
        let mp = trivial_double(&fixtures::ut2_avg());
        let r = check_matched_pair_prelie(&mp).unwrap();
        assert!(r.passed, "{:?}", r.first_failure());
        let d = build_double(&mp).unwrap();
        assert_eq!(d.dim(), 6);
        assert!(check_pre_lie(d.base()).passed);
    }

    #[test]
    fn induced_doubles_agree() {
        for avg in [fixtures::ut2_avg(), fixtures::nc2_avg()] {
            let mp = trivial_double(&avg);
            let lmp = induced_leibniz_matched_pair(&mp).unwrap();
            let r = check_matched_pair_leibniz(&lmp).unwrap();
            assert!(r.passed, "{:?}", r.first_failure());
            let via_pairs = build_leibniz_double(&lmp).unwrap();
            let via_double = induced_leibniz(&build_double(&mp).unwrap()).unwrap();
            assert_eq!(via_pairs.product(), via_double.product());
            assert!(check_leibniz(&via_pairs).passed);
        }
    }

    #[test]
    fn regular_actions_on_itself_violate_compatibility() {
        // Both algebras NC2, each acting on the other by its regular
        // representation: both representations are valid, the pair is not.
        let a = fixtures::nc2();
        let reg = Representation::new(&a, a.lefts(), a.rights()).unwrap();
        let b = a.clone().with_label("NC2'");
        let on_a = Representation::new(&b, b.lefts(), b.rights()).unwrap();
        let mp = MatchedPairPreLie::new(a, b, reg, on_a).unwrap();
        let r = check_matched_pair_prelie(&mp).unwrap();
        assert!(r.part("representation_on_second").unwrap().passed);
        assert!(r.part("representation_on_first").unwrap().passed);
        assert!(!r.passed);
        // The double is then not pre-Lie.
        assert!(!check_pre_lie(&build_double_raw(&mp).unwrap().0).passed);
        assert!(build_double_algebra(&mp).is_err());
    }

    #[test]
    fn broken_first_half_shows_in_the_double() {
        // Rescaling the action of 𝔟 on A breaks the pair through the
        // identities alone; the double stops being pre-Lie.
        let mut mp = trivial_double(&fixtures::ut2_avg());
        let dual = mp.b.clone();
        let on_a =
            Representation::new(&dual, vec![M::identity(3); 3], vec![M::zeros(3, 3); 3]).unwrap();
        mp.on_a = on_a;
        let r = check_matched_pair_prelie(&mp).unwrap();
        assert!(!r.passed);
        assert!(!check_pre_lie(&build_double_raw(&mp).unwrap().0).passed);
    }

    #[test]
    fn averaging_of_double_tracks_cross_compatibility() {
        let good = trivial_double(&fixtures::ut2_avg());
        let (alg, op) = build_double_raw(&good).unwrap();
        assert!(check_averaging(&alg, &op.unwrap()).unwrap().passed);

        let mut bad = good.clone();
        bad.ops = Some((fixtures::ut2_r(), M::identity(3)));
        let r = check_matched_pair_prelie(&bad).unwrap();
        assert!(!r.part("averaging_on_second").unwrap().passed);
        let (alg, op) = build_double_raw(&bad).unwrap();
        assert!(!check_averaging(&alg, &op.unwrap()).unwrap().passed);
        assert!(build_double(&bad).is_err());
    }

    #[test]
    fn regular_semidirect_is_a_matched_pair() {
        let avg = fixtures::nc2_avg();
        let reg = regular_representation(&avg);
        let b = Algebra::zero("V", 2);
        let mp = MatchedPairPreLie::new(
            avg.base().clone(),
            b.clone(),
            reg.rep,
            Representation::zero(&b, 2),
        )
        .unwrap()
        .with_operators(avg.op().clone(), reg.alpha)
        .unwrap();
        assert!(check_matched_pair_prelie(&mp).unwrap().passed);
    }

    #[test]
    fn identity_actions_fail_on_a_nonabelian_leibniz_pair() {
        let g = induced_leibniz(&fixtures::nc2_avg()).unwrap();
        let id = vec![M::identity(2); 2];
        let rep = LeibnizRepresentation::new(&g, id.clone(), id.clone()).unwrap();
        let g2 = g.clone().with_label("G2");
        let rep2 = LeibnizRepresentation::new(&g2, id.clone(), id).unwrap();
        let mp = MatchedPairLeibniz::new(g, g2, rep, rep2).unwrap();
        let r = check_matched_pair_leibniz(&mp).unwrap();
        assert!(!r.passed);
        assert!(!check_leibniz(&build_leibniz_double_raw(&mp).unwrap()).passed);
    }

    #[test]
    fn left_identity_on_zero_brackets() {
        // μ^L = id with zero brackets: the double has [ξ,x] = x as its only
        // nonzero bracket, which is a Leibniz algebra, so the pair is valid.
        let g1 = fixtures::z2();
        let g2 = Algebra::zero("Z2'", 2);
        let on_first =
            LeibnizRepresentation::new(&g2, vec![M::identity(2); 2], vec![M::zeros(2, 2); 2])
                .unwrap();
        let on_second = LeibnizRepresentation::zero(&g1, 2);
        let mp = MatchedPairLeibniz::new(g1, g2, on_second, on_first).unwrap();
        let r = check_matched_pair_leibniz(&mp).unwrap();
        assert!(r.passed);
        assert!(check_leibniz(&build_leibniz_double(&mp).unwrap()).passed);
        // Making [x,ξ] = x as well breaks it.
        let mut bad = mp.clone();
        bad.on_first.right = vec![M::identity(2); 2];
        assert!(!check_matched_pair_leibniz(&bad).unwrap().passed);
        assert!(!check_leibniz(&build_leibniz_double_raw(&bad).unwrap()).passed);
    }
}
