//! Rota-Baxter operators of weight λ, quadratic Rota-Baxter algebras and the
//! averaging bialgebras they induce, and relative Rota-Baxter operators on
//! averaging pre-Lie algebras.

use crate::algebra::{
    averaging_report, check_algebra_homomorphism, ensure_budget, for_each_assignment, search_size,
    square_of, Algebra, AveragingAlgebra, SearchLimits,
};
use crate::bialgebra::AvgBialgebra;
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{basis_vector, Matrix};
use crate::manin::{check_quadratic, omega_sharp, BilinearForm};
use crate::matched_pair::MatchedPairPreLie;
use crate::report::{CheckReport, Checker};
use crate::representation::{
    check_avg_representation, check_beta_admissible, coregular_representation, dual_representation,
    failed_kind, s_admissible_report, semidirect_algebra, AvgRepresentation, Representation,
};
use crate::scalar::Scalar;
use crate::yang_baxter::{
    admissible_cybe_report, build_coboundary_avg_bialgebra, check_S_equation,
    check_admissible_cybe, check_factorizable, r_difference, r_plus_minus, RTensor,
};

/// `B(x)∘B(y) = B(B(x)∘y + x∘B(y) + λ x∘y)`.
pub fn check_rb<T: Scalar>(alg: &Algebra<T>, b: &Matrix<T>, weight: &T) -> Result<CheckReport> {
    let n = alg.dim();
    square_of(b, n, "Rota-Baxter operator")?;
    let mut ck = Checker::new("rota_baxter");
    for i in 0..n {
        let (ei, bi) = (basis_vector(n, i), b.column(i));
        for j in 0..n {
            let (ej, bj) = (basis_vector(n, j), b.column(j));
            let lhs = alg.mul(&bi, &bj);
            let mut inner = alg.basis_product(i, j);
            inner.iter_mut().for_each(|v| *v = v.clone() * weight);
            let inner: Vec<T> = inner
                .iter()
                .zip(alg.mul(&bi, &ej))
                .zip(alg.mul(&ei, &bj))
                .map(|((w, a), c)| w.clone() + a + c)
                .collect();
            ck.eq("rota_baxter", &[i, j], &lhs, &b.apply_unchecked(&inner));
        }
    }
    Ok(ck.finish())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RBOperator<T> {
    pub alg: Algebra<T>,
    pub b: Matrix<T>,
    pub weight: T,
}

impl<T: Scalar> RBOperator<T> {
    pub fn new(alg: Algebra<T>, b: Matrix<T>, weight: T) -> Result<Self> {
        let r = check_rb(&alg, &b, &weight)?;
        if !r.passed {
            return Err(failed_kind("not a Rota-Baxter operator", &r));
        }
        Ok(RBOperator { alg, b, weight })
    }
}

/// `x ∘_B y = B(x)∘y + x∘B(y) + λ x∘y`.
pub fn descendent_product<T: Scalar>(rb: &RBOperator<T>) -> Result<Algebra<T>> {
    let alg = &rb.alg;
    let n = alg.dim();
    let b = &rb.b;
    Algebra::from_basis_products(format!("{}_B", alg.label()), n, |i, j| {
        let (ei, ej) = (basis_vector(n, i), basis_vector(n, j));
        alg.mul(&b.column(i), &ej)
            .into_iter()
            .zip(alg.mul(&ei, &b.column(j)))
            .zip(alg.basis_product(i, j))
            .map(|((x, y), z)| x + y + z * &rb.weight)
            .collect()
    })
    .into_pre_lie()
}

/// `PB = BP`; when it holds, also reports that `P` is averaging on the
/// descendent algebra.
pub fn check_avg_commutes_rb<T: Scalar>(rb: &RBOperator<T>, p: &Matrix<T>) -> Result<CheckReport> {
    square_of(p, rb.alg.dim(), "averaging operator")?;
    let avg = averaging_report(&rb.alg, p, "averaging");
    if !avg.passed {
        return Err(failed_kind("not an averaging operator", &avg));
    }
    let mut ck = Checker::new("commutes_with_rb");
    let commutes = ck.eq(
        "pb_eq_bp",
        &[],
        (p * &rb.b).entries(),
        (&rb.b * p).entries(),
    );
    let mut out = CheckReport::all_of("avg_commutes_rb", vec![ck.finish()]);
    if commutes {
        out = out.with_part(averaging_report(
            &descendent_product(rb)?,
            p,
            "descendent_averaging",
        ));
    }
    Ok(out)
}

/// `M^{*,ω}` with `ω(Mx, y) = ω(x, M^{*,ω}y)`, i.e. `Ω⁻¹ Mᵀ Ω`.
pub fn adjoint_wrt_form<T: Scalar>(m: &Matrix<T>, omega: &BilinearForm<T>) -> Result<Matrix<T>> {
    square_of(m, omega.dim(), "operator")?;
    let om = omega.matrix();
    let inv = om.invert()?.ok_or(Error::SingularForm)?;
    let adj = &(&inv * &m.transpose()) * om;
    debug_assert_eq!(&m.transpose() * om, om * &adj);
    Ok(adj)
}

/// `ω(Bx, y) + ω(x, By) + λ ω(x, y) = 0`.
fn form_compatibility<T: Scalar>(
    b: &Matrix<T>,
    omega: &BilinearForm<T>,
    weight: &T,
) -> CheckReport {
    let om = omega.matrix();
    let lhs = &(&(&b.transpose() * om) + &(om * b)) + &om.scale(weight);
    let mut ck = Checker::new("form_compatibility");
    ck.eq(
        "form_compatible",
        &[],
        lhs.entries(),
        Matrix::zeros(om.rows(), om.cols()).entries(),
    );
    ck.finish()
}

pub fn check_qrb<T: Scalar>(rb: &RBOperator<T>, omega: &BilinearForm<T>) -> Result<CheckReport> {
    let rbr = check_rb(&rb.alg, &rb.b, &rb.weight)?;
    let quad = check_quadratic(&rb.alg, omega, None)?;
    Ok(CheckReport::all_of(
        "quadratic_rota_baxter",
        vec![rbr, quad, form_compatibility(&rb.b, omega, &rb.weight)],
    ))
}

/// A quadratic Rota-Baxter pre-Lie algebra of weight λ.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticRB<T> {
    pub rb: RBOperator<T>,
    pub omega: BilinearForm<T>,
}

impl<T: Scalar> QuadraticRB<T> {
    pub fn new(rb: RBOperator<T>, omega: BilinearForm<T>) -> Result<Self> {
        let r = check_qrb(&rb, &omega)?;
        if !r.passed {
            return Err(failed_kind(
                "not a quadratic Rota-Baxter pre-Lie algebra",
                &r,
            ));
        }
        Ok(QuadraticRB { rb, omega })
    }

    pub fn alg(&self) -> &Algebra<T> {
        &self.rb.alg
    }

    pub fn weight(&self) -> &T {
        &self.rb.weight
    }
}

/// `P` averaging and `B P^{*,ω} = −P B`. For nonzero weight this forces
/// `P^{*,ω} = −P`, reported as `skew_adjoint`.
pub fn check_avg_on_qrb<T: Scalar>(qrb: &QuadraticRB<T>, p: &Matrix<T>) -> Result<CheckReport> {
    square_of(p, qrb.alg().dim(), "averaging operator")?;
    let adj = adjoint_wrt_form(p, &qrb.omega)?;
    let b = &qrb.rb.b;
    let mut ck = Checker::new("qrb_averaging");
    let anti = ck.eq(
        "adjoint_anticommutes",
        &[],
        (b * &adj).entries(),
        (-&(p * b)).entries(),
    );
    if anti && !qrb.weight().is_zero() {
        ck.eq("skew_adjoint", &[], adj.entries(), (-p).entries());
    }
    Ok(CheckReport::all_of(
        "avg_on_qrb",
        vec![averaging_report(qrb.alg(), p, "averaging"), ck.finish()],
    ))
}

/// Whether `−P^{*,ω}` is averaging on the descendent algebra.
pub fn descendent_neg_adjoint_avg<T: Scalar>(
    qrb: &QuadraticRB<T>,
    p: &Matrix<T>,
) -> Result<CheckReport> {
    let pre = check_avg_on_qrb(qrb, p)?;
    if let Some(w) = pre.first_failure() {
        return Err(Error::PreconditionFailed(format!(
            "not an averaging operator on the quadratic Rota-Baxter algebra: {} at {:?}",
            w.identity, w.indices
        )));
    }
    let neg = -&adjoint_wrt_form(p, &qrb.omega)?;
    Ok(averaging_report(
        &descendent_product(&qrb.rb)?,
        &neg,
        "descendent_averaging",
    ))
}

/// `J_ω: A* → A` with `⟨J_ω⁻¹x, y⟩ = ω(x, y)`.
pub fn j_omega<T: Scalar>(omega: &BilinearForm<T>) -> Result<Matrix<T>> {
    omega_sharp(omega)?.invert()?.ok_or(Error::SingularForm)
}

/// `r` with `r₊ = (1/λ)(B + λ id) J_ω`.
pub fn build_r_from_qrb<T: Scalar>(qrb: &QuadraticRB<T>) -> Result<RTensor<T>> {
    let lambda = qrb.weight();
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let n = qrb.alg().dim();
    let shifted = &qrb.rb.b + &Matrix::scalar(n, lambda.clone());
    let plus = (&shifted * &j_omega(&qrb.omega)?).scale(&(T::one() / lambda));
    let r = RTensor::new(plus.transpose())?;
    debug_assert!(check_qrb_r(qrb, &r).map(|c| c.passed).unwrap_or(false));
    Ok(r)
}

/// `ξ ·_r η = ad*_{r₊(ξ)}η − R*_{r₋(η)}ξ`, with `ad* = −adᵀ` and `R* = −Rᵀ`.
pub fn dual_product_r<T: Scalar>(
    alg: &Algebra<T>,
    r: &RTensor<T>,
    xi: &[T],
    eta: &[T],
) -> Result<Vec<T>> {
    let n = alg.dim();
    if r.dim() != n || xi.len() != n || eta.len() != n {
        return Err(dim_mismatch(format!("dual product needs dimension {n}")));
    }
    let (plus, minus) = r_plus_minus(r);
    let a = plus.apply_unchecked(xi);
    let b = minus.apply_unchecked(eta);
    let ad = &alg.left_of(&a) - &alg.right_of(&a);
    let first = (-&ad.transpose()).apply_unchecked(eta);
    let second = alg.right_of(&b).transpose().apply_unchecked(xi);
    Ok(first.into_iter().zip(second).map(|(x, y)| x + y).collect())
}

/// The S-equation for `r` and the transfer identity
/// `J⁻¹x ·_r J⁻¹y = (1/λ) J⁻¹(x ∘_B y)` on basis pairs.
pub fn check_qrb_r<T: Scalar>(qrb: &QuadraticRB<T>, r: &RTensor<T>) -> Result<CheckReport> {
    let lambda = qrb.weight();
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let alg = qrb.alg();
    let n = alg.dim();
    let s_eq = check_S_equation(alg, r)?;
    let jinv = omega_sharp(&qrb.omega)?;
    let desc = descendent_product(&qrb.rb)?;
    let inv_l = T::one() / lambda;
    let mut ck = Checker::new("dual_transfer");
    for i in 0..n {
        for j in 0..n {
            let lhs = dual_product_r(alg, r, &jinv.column(i), &jinv.column(j))?;
            let rhs: Vec<T> = jinv
                .apply_unchecked(&desc.basis_product(i, j))
                .into_iter()
                .map(|v| v * &inv_l)
                .collect();
            ck.eq("descendent_transfer", &[i, j], &lhs, &rhs);
        }
    }
    Ok(CheckReport::all_of("qrb_r_matrix", vec![s_eq, ck.finish()]))
}

/// `(B_I, ω_I)` with `B_I = λ r₋ I⁻¹` and `ω_I(x, y) = ⟨I⁻¹x, y⟩`.
pub fn factorizable_to_qrb<T: Scalar>(
    alg: &Algebra<T>,
    r: &RTensor<T>,
    weight: T,
) -> Result<QuadraticRB<T>> {
    let f = check_factorizable(alg, r)?;
    if !f.passed {
        return Err(failed_kind("r is not factorizable", &f));
    }
    let inv = r_difference(r).invert()?.ok_or(Error::SingularForm)?;
    let (_, minus) = r_plus_minus(r);
    let b = (&minus * &inv).scale(&weight);
    let omega = BilinearForm::new(inv.transpose())?;
    let rb = RBOperator::new(alg.clone(), b, weight)?;
    QuadraticRB::new(rb, omega)
}

/// `(A, ∘, Δ_r, P, −P)` with `r` built from the quadratic Rota-Baxter data.
/// Admissibility of `−P` amounts to `P(x)∘P(y) = 0`, which follows from
/// `P` being ω-skew and averaging with ω invariant.
pub fn avg_bialgebra_from_qrb<T: Scalar>(
    qrb: &QuadraticRB<T>,
    p: &Matrix<T>,
) -> Result<AvgBialgebra<T>> {
    if qrb.weight().is_zero() {
        return Err(Error::ZeroWeight);
    }
    let pre = check_avg_on_qrb(qrb, p)?;
    if let Some(w) = pre.first_failure() {
        return Err(Error::PreconditionFailed(format!(
            "not an averaging operator on the quadratic Rota-Baxter algebra: {} at {:?}",
            w.identity, w.indices
        )));
    }
    let alg = qrb.alg();
    let neg = -p;
    debug_assert!(s_admissible_report(alg, p, &neg).passed);
    let r = build_r_from_qrb(qrb)?;
    let co = crate::yang_baxter::delta_r(alg, &r)?;
    AvgBialgebra::new(alg.clone(), p.clone(), co, neg)
}

/// `T(u)∘T(v) = T(ρ(Tu)v + φ(Tv)u)` and `P T = T α`.
pub fn check_relative_rb<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
    t: &Matrix<T>,
) -> Result<CheckReport> {
    let pre = check_avg_representation(avg, avgrep)?;
    if !pre.passed {
        return Err(failed_kind(
            "not a representation of the averaging algebra",
            &pre,
        ));
    }
    relative_rb_report(avg.base(), avg.op(), &avgrep.rep, &avgrep.alpha, t)
}

fn relative_rb_report<T: Scalar>(
    alg: &Algebra<T>,
    p: &Matrix<T>,
    rep: &Representation<T>,
    alpha: &Matrix<T>,
    t: &Matrix<T>,
) -> Result<CheckReport> {
    let m = rep.module_dim();
    if t.rows() != alg.dim() || t.cols() != m {
        return Err(dim_mismatch(format!(
            "T must be {}×{m}, got {}×{}",
            alg.dim(),
            t.rows(),
            t.cols()
        )));
    }
    let mut ck = Checker::new("relative_rota_baxter");
    for u in 0..m {
        let tu = t.column(u);
        let rho_u = rep.rho_of(&tu);
        for v in 0..m {
            let tv = t.column(v);
            let inner: Vec<T> = rho_u
                .column(v)
                .into_iter()
                .zip(rep.phi_of(&tv).column(u))
                .map(|(a, b)| a + b)
                .collect();
            ck.eq(
                "relative_rota_baxter",
                &[u, v],
                &alg.mul(&tu, &tv),
                &t.apply_unchecked(&inner),
            );
        }
    }
    let pt = p * t;
    let ta = t * alpha;
    for u in 0..m {
        ck.eq("operator_intertwined", &[u], &pt.column(u), &ta.column(u));
    }
    Ok(ck.finish())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeRB<T> {
    pub avg: AveragingAlgebra<T>,
    pub avgrep: AvgRepresentation<T>,
    pub t: Matrix<T>,
}

impl<T: Scalar> RelativeRB<T> {
    pub fn new(
        avg: AveragingAlgebra<T>,
        avgrep: AvgRepresentation<T>,
        t: Matrix<T>,
    ) -> Result<Self> {
        let r = check_relative_rb(&avg, &avgrep, &t)?;
        if !r.passed {
            return Err(failed_kind("not a relative Rota-Baxter operator", &r));
        }
        Ok(RelativeRB { avg, avgrep, t })
    }
}

/// `u ∘_T v = ρ(Tu)v + φ(Tv)u` on `V`, with operator `α`.
pub fn descendent_avg_prelie<T: Scalar>(rrb: &RelativeRB<T>) -> Result<AveragingAlgebra<T>> {
    let rep = &rrb.avgrep.rep;
    let t = &rrb.t;
    let m = rep.module_dim();
    let alg = Algebra::from_basis_products(format!("{}_T", rrb.avg.label()), m, |u, v| {
        let (tu, tv) = (t.column(u), t.column(v));
        rep.rho_of(&tu)
            .column(v)
            .into_iter()
            .zip(rep.phi_of(&tv).column(u))
            .map(|(a, b)| a + b)
            .collect()
    })
    .into_pre_lie()?;
    AveragingAlgebra::new(alg, rrb.avgrep.alpha.clone())
}

/// The matched pair of `(A, P)` and the descendent `(V, α)` with
/// `ρ′(u)x = −T(φ(x)u) + Tu∘x` and `φ′(u)x = −T(ρ(x)u) + x∘Tu`.
pub fn matched_pair_from_rrb<T: Scalar>(rrb: &RelativeRB<T>) -> Result<MatchedPairPreLie<T>> {
    let desc = descendent_avg_prelie(rrb)?;
    let alg = rrb.avg.base();
    let rep = &rrb.avgrep.rep;
    let t = &rrb.t;
    let n = alg.dim();
    let m = rep.module_dim();
    let mut rho = Vec::with_capacity(m);
    let mut phi = Vec::with_capacity(m);
    for u in 0..m {
        let tu = t.column(u);
        let (l, r) = (alg.left_of(&tu), alg.right_of(&tu));
        let mut a = Matrix::zeros(n, n);
        let mut b = Matrix::zeros(n, n);
        for x in 0..n {
            let back_phi = t.apply_unchecked(&rep.phi(x).column(u));
            let back_rho = t.apply_unchecked(&rep.rho(x).column(u));
            for k in 0..n {
                a[(k, x)] = l[(k, x)].clone() - &back_phi[k];
                b[(k, x)] = r[(k, x)].clone() - &back_rho[k];
            }
        }
        rho.push(a);
        phi.push(b);
    }
    let on_a = Representation::new(desc.base(), rho, phi)?;
    let on_b = rep.clone().relabel(alg)?;
    MatchedPairPreLie::new(alg.clone(), desc.base().clone(), on_b, on_a)?
        .with_operators(rrb.avg.op().clone(), rrb.avgrep.alpha.clone())
}

/// For symmetric `r`: if `r₊` is a relative Rota-Baxter operator with respect
/// to `((A*, L* − R*, −R*), S*)`, then `r` solves the S-admissible classical
/// Yang-Baxter equation. Both sides are computed; the report is the implication.
pub fn rrb_to_cybe_solution<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
    r: &RTensor<T>,
) -> Result<CheckReport> {
    if !r.is_symmetric() {
        return Err(Error::PreconditionFailed("r must be symmetric".into()));
    }
    let co = coregular_representation(avg, s)?;
    let (plus, _) = r_plus_minus(r);
    let hypothesis = check_relative_rb(avg, &co, &plus)?;
    let conclusion = check_admissible_cybe(avg, s, r)?;
    Ok(CheckReport::implication(
        "rrb_to_cybe",
        hypothesis,
        conclusion,
    ))
}

/// On a quadratic averaging algebra, `T: A* → A` is relative Rota-Baxter for
/// the coregular representation with `P*` iff `T ω♯` is a weight-0
/// Rota-Baxter operator commuting with `P`.
pub fn rrb_equiv_rb0<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    omega: &BilinearForm<T>,
    t: &Matrix<T>,
) -> Result<CheckReport> {
    let q = check_quadratic(avg.base(), omega, Some(avg.op()))?;
    if !q.passed {
        return Err(failed_kind("not a quadratic averaging algebra", &q));
    }
    let co = coregular_representation(avg, avg.op())?;
    let relative = check_relative_rb(avg, &co, t)?;
    let b = t * &omega_sharp(omega)?;
    let p = avg.op();
    let mut ck = Checker::new("commutes");
    ck.eq("pb_eq_bp", &[], (p * &b).entries(), (&b * p).entries());
    let weight_zero = CheckReport::all_of(
        "weight_zero_averaging_rb",
        vec![check_rb(avg.base(), &b, &T::zero())?, ck.finish()],
    );
    Ok(CheckReport::equivalence(
        "rrb_equiv_rb0",
        vec![relative, weight_zero],
    ))
}

/// `β ρ(x) α = ρ(S x) α = β ρ(S x)` and the same for `φ`.
fn companion_report<T: Scalar>(
    rep: &Representation<T>,
    s: &Matrix<T>,
    alpha: &Matrix<T>,
    beta: &Matrix<T>,
) -> CheckReport {
    let mut ck = Checker::new("companion");
    for i in 0..rep.algebra_dim() {
        let sx = s.column(i);
        let pairs = [
            (
                rep.rho(i),
                rep.rho_of(&sx),
                ["rho_companion_left", "rho_companion_right"],
            ),
            (
                rep.phi(i),
                rep.phi_of(&sx),
                ["phi_companion_left", "phi_companion_right"],
            ),
        ];
        for (x, xs, names) in pairs {
            let mid = &xs * alpha;
            ck.eq(
                names[0],
                &[i],
                (&(beta * x) * alpha).entries(),
                mid.entries(),
            );
            ck.eq(names[1], &[i], mid.entries(), (beta * &xs).entries());
        }
    }
    ck.finish()
}

/// The three equivalent conditions: `S + β` admissible to `(A ⋉ V, P + α)`;
/// `S + α*` admissible to `(A ⋉ V*, P + β*)`; and the componentwise list.
pub fn check_equiva3<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    rep: &Representation<T>,
    s: &Matrix<T>,
    alpha: &Matrix<T>,
    beta: &Matrix<T>,
) -> Result<CheckReport> {
    let alg = avg.base();
    let p = avg.op();
    let pre = crate::representation::check_prelie_representation(alg, rep)?;
    if !pre.passed {
        return Err(failed_kind("not a representation", &pre));
    }
    let m = rep.module_dim();
    square_of(s, alg.dim(), "admissibility map")?;
    square_of(alpha, m, "alpha")?;
    square_of(beta, m, "beta")?;

    let big = semidirect_algebra(alg, rep)?;
    let op = p.direct_sum(alpha);
    let item_a = CheckReport::all_of(
        "semidirect",
        vec![
            averaging_report(&big, &op, "averaging"),
            s_admissible_report(&big, &op, &s.direct_sum(beta)),
        ],
    );

    let (dual, beta_t) = dual_representation(rep, beta)?;
    let big_dual = semidirect_algebra(alg, &dual)?;
    let op_dual = p.direct_sum(&beta_t);
    let item_b = CheckReport::all_of(
        "dual_semidirect",
        vec![
            averaging_report(&big_dual, &op_dual, "averaging"),
            s_admissible_report(&big_dual, &op_dual, &s.direct_sum(&alpha.transpose())),
        ],
    );

    let with_alpha = AvgRepresentation {
        rep: rep.clone(),
        alpha: alpha.clone(),
    };
    let item_c = CheckReport::all_of(
        "components",
        vec![
            check_avg_representation(avg, &with_alpha)?,
            s_admissible_report(alg, p, s),
            check_beta_admissible(avg, rep, beta)?,
            companion_report(rep, s, alpha, beta),
        ],
    );
    Ok(CheckReport::equivalence(
        "equiva3",
        vec![item_a, item_b, item_c],
    ))
}

/// The averaging algebra `(A ⋉ V*, P + β*)` built from the dual representation.
pub fn dual_semidirect<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    rep: &Representation<T>,
    beta: &Matrix<T>,
) -> Result<(Algebra<T>, Matrix<T>)> {
    let (dual, beta_t) = dual_representation(rep, beta)?;
    Ok((
        semidirect_algebra(avg.base(), &dual)?,
        avg.op().direct_sum(&beta_t),
    ))
}

/// `r = T + τ(T)` on `A ⊕ V*` for `T: V → A`, i.e. `Σ T(e_i)⊗e^i + e^i⊗T(e_i)`.
pub fn lift_tensor<T: Scalar>(t: &Matrix<T>) -> RTensor<T> {
    let (n, m) = (t.rows(), t.cols());
    let mut c = Matrix::zeros(n + m, n + m);
    for a in 0..n {
        for i in 0..m {
            c[(a, n + i)] = t[(a, i)].clone();
            c[(n + i, a)] = t[(a, i)].clone();
        }
    }
    RTensor::new(c).expect("square by construction")
}

/// Builds `r = T + τ(T)` and reports the equivalence between `r` solving the
/// `(S + α*)`-admissible classical Yang-Baxter equation in
/// `(A ⋉ V*, P + β*)` and `T` being relative Rota-Baxter with `Tβ = ST`.
#[allow(non_snake_case)]
pub fn lift_T_to_r<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
    t: &Matrix<T>,
    s: &Matrix<T>,
    beta: &Matrix<T>,
) -> Result<(RTensor<T>, CheckReport)> {
    let pre = check_avg_representation(avg, avgrep)?;
    if !pre.passed {
        return Err(failed_kind(
            "not a representation of the averaging algebra",
            &pre,
        ));
    }
    square_of(s, avg.dim(), "admissibility map")?;
    square_of(beta, avgrep.module_dim(), "beta")?;
    let (big, op) = dual_semidirect(avg, &avgrep.rep, beta)?;
    let big_s = s.direct_sum(&avgrep.alpha.transpose());
    let r = lift_tensor(t);
    let cybe = admissible_cybe_report(&big, &op, &big_s, &r)?;
    let rrb = relative_rb_report(avg.base(), avg.op(), &avgrep.rep, &avgrep.alpha, t)?;
    let mut ck = Checker::new("companion_intertwined");
    ck.eq(
        "t_beta_eq_s_t",
        &[],
        (t * beta).entries(),
        (s * t).entries(),
    );
    let operator_side = CheckReport::all_of(
        "relative_rota_baxter_with_companion",
        vec![rrb, ck.finish()],
    );
    Ok((
        r,
        CheckReport::equivalence("lift", vec![cybe, operator_side]),
    ))
}

/// The averaging bialgebra `(A ⋉ V*, P + β*, Δ_r, S + α*)` for `r = T + τ(T)`.
/// Needs `β`-admissibility for the algebra, and `S`-admissibility together with
/// the companion identities for `S + α*` to be admissible.
#[allow(non_snake_case)]
pub fn lift_T_to_bialgebra<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
    t: &Matrix<T>,
    s: &Matrix<T>,
    beta: &Matrix<T>,
) -> Result<AvgBialgebra<T>> {
    let (r, rep) = lift_T_to_r(avg, avgrep, t, s, beta)?;
    let operator_side = &rep.parts[1];
    if let Some(w) = operator_side.first_failure() {
        return Err(Error::PreconditionFailed(format!(
            "T is not a relative Rota-Baxter operator with Tβ = ST: {} at {:?}",
            w.identity, w.indices
        )));
    }
    let ba = check_beta_admissible(avg, &avgrep.rep, beta)?;
    let sa = s_admissible_report(avg.base(), avg.op(), s);
    let comp = companion_report(&avgrep.rep, s, &avgrep.alpha, beta);
    for part in [&ba, &sa, &comp] {
        if let Some(w) = part.first_failure() {
            return Err(Error::PreconditionFailed(format!(
                "{}: {} at {:?}",
                part.name, w.identity, w.indices
            )));
        }
    }
    let (big, op) = dual_semidirect(avg, &avgrep.rep, beta)?;
    let big_avg = AveragingAlgebra::new(big.into_pre_lie()?, op)?;
    build_coboundary_avg_bialgebra(&big_avg, &s.direct_sum(&avgrep.alpha.transpose()), &r)
}

/// `T` is a homomorphism from the descendent averaging algebra to `(A, P)`.
pub fn check_descendent_homomorphism<T: Scalar>(rrb: &RelativeRB<T>) -> Result<CheckReport> {
    let desc = descendent_avg_prelie(rrb)?;
    crate::algebra::check_homomorphism(&desc, &rrb.avg, &rrb.t)
}

/// `B` is a homomorphism from the descendent algebra `A_B` to `A`.
pub fn check_rb_homomorphism<T: Scalar>(rb: &RBOperator<T>) -> Result<CheckReport> {
    check_algebra_homomorphism(&descendent_product(rb)?, &rb.alg, &rb.b)
}

fn ensure_search_dim(n: usize, limits: &SearchLimits) -> Result<()> {
    if n > limits.max_dim {
        return Err(Error::PreconditionFailed(format!(
            "dimension {n} exceeds the search bound {}",
            limits.max_dim
        )));
    }
    Ok(())
}

/// All Rota-Baxter operators of the given weight with entries from `candidates`.
pub fn search_rb_operators<T: Scalar>(
    alg: &Algebra<T>,
    weight: &T,
    candidates: &[T],
    limits: &SearchLimits,
) -> Result<Vec<Matrix<T>>> {
    let n = alg.dim();
    ensure_search_dim(n, limits)?;
    ensure_budget(search_size(candidates.len(), n * n), limits)?;
    let mut found = Vec::new();
    for_each_assignment(candidates, n * n, |vals| {
        let b = Matrix::from_fn(n, n, |i, j| vals[i * n + j].clone());
        if check_rb(alg, &b, weight).map(|r| r.passed).unwrap_or(false) {
            found.push(b);
        }
    });
    Ok(found)
}

/// All relative Rota-Baxter operators `V → A` with entries from `candidates`.
pub fn search_relative_rb<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
    candidates: &[T],
    limits: &SearchLimits,
) -> Result<Vec<Matrix<T>>> {
    let (n, m) = (avg.dim(), avgrep.module_dim());
    ensure_search_dim(n.max(m), limits)?;
    ensure_budget(search_size(candidates.len(), n * m), limits)?;
    let pre = check_avg_representation(avg, avgrep)?;
    if !pre.passed {
        return Err(failed_kind(
            "not a representation of the averaging algebra",
            &pre,
        ));
    }
    let mut found = Vec::new();
    for_each_assignment(candidates, n * m, |vals| {
        let t = Matrix::from_fn(n, m, |i, j| vals[i * m + j].clone());
        if relative_rb_report(avg.base(), avg.op(), &avgrep.rep, &avgrep.alpha, &t)
            .map(|r| r.passed)
            .unwrap_or(false)
        {
            found.push(t);
        }
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_averaging, check_pre_lie};
    use crate::bialgebra::check_avg_prelie_bialgebra;
    use crate::matched_pair::{build_double, check_matched_pair_prelie};
    use crate::representation::regular_representation;
    use crate::{fixtures, Rational};

    type M = Matrix<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn half(n: i64) -> Rational {
        Rational::from_fraction(n, 2)
    }

    fn sp2() -> QuadraticRB<Rational> {
        let rb = RBOperator::new(fixtures::z2(), fixtures::sp2_rb(), q(1)).unwrap();
        QuadraticRB::new(rb, BilinearForm::new(fixtures::symplectic2()).unwrap()).unwrap()
    }

    fn d4() -> QuadraticRB<Rational> {
        let rb = RBOperator::new(fixtures::d4(), fixtures::d4_rb(), q(1)).unwrap();
        QuadraticRB::new(rb, BilinearForm::standard_double(2)).unwrap()
    }

    /// `(ξ·η)(y) = −η(a∘y − y∘a) + ξ(y∘b)` with `a = r₊ξ`, `b = r₋η`.
    fn naive_dual_product(
        alg: &Algebra<Rational>,
        r: &RTensor<Rational>,
        xi: &[Rational],
        eta: &[Rational],
    ) -> Vec<Rational> {
        let n = alg.dim();
        let c = r.coeff();
        // r₊(ξ) = Σ r^{ij} ξ_i e_j, r₋(η) = Σ r^{ij} η_j e_i
        let a: Vec<Rational> = (0..n)
            .map(|j| (0..n).map(|i| c[(i, j)].clone() * &xi[i]).sum())
            .collect();
        let b: Vec<Rational> = (0..n)
            .map(|i| (0..n).map(|j| c[(i, j)].clone() * &eta[j]).sum())
            .collect();
        let pair = |f: &[Rational], v: &[Rational]| -> Rational {
            f.iter().zip(v).map(|(x, y)| x.clone() * y).sum()
        };
        (0..n)
            .map(|y| {
                let ey = basis_vector(n, y);
                let br = alg.commutator(&a, &ey);
                -pair(eta, &br) + pair(xi, &alg.mul(&ey, &b))
            })
            .collect()
    }

    #[test]
    fn rota_baxter_identity() {
        let any = M::from_i64_rows(&[&[1, 2], &[-3, 5]]);
        assert!(check_rb(&fixtures::z2(), &any, &q(7)).unwrap().passed);
        assert!(
            check_rb(&fixtures::ut2(), &M::zeros(3, 3), &q(3))
                .unwrap()
                .passed
        );
        let neg = -&M::identity(3);
        assert!(check_rb(&fixtures::ut2(), &neg, &q(1)).unwrap().passed);
        // id gives x∘y on the left and 3 x∘y on the right
        let r = check_rb(&fixtures::ut2(), &M::identity(3), &q(1)).unwrap();
        assert_eq!(r.first_failure().unwrap().indices, vec![0, 0]);
        assert!(matches!(
            check_rb(&fixtures::ut2(), &M::identity(2), &q(1)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn descendent_of_negative_identity_is_opposite_sign() {
        let rb = RBOperator::new(fixtures::ut2(), -&M::identity(3), q(1)).unwrap();
        let d = descendent_product(&rb).unwrap();
        assert_eq!(d.product(), fixtures::ut2().negated().product());
        assert!(check_pre_lie(&d).passed);
        assert!(check_rb_homomorphism(&rb).unwrap().passed);

        let zero = RBOperator::new(fixtures::nc2(), M::zeros(2, 2), q(0)).unwrap();
        assert!(descendent_product(&zero).unwrap().product().is_zero());

        let q4 = d4();
        assert!(check_rb_homomorphism(&q4.rb).unwrap().passed);
    }

    #[test]
    fn averaging_commuting_with_rb() {
        let rb = RBOperator::new(fixtures::ut2(), -&M::identity(3), q(1)).unwrap();
        let r = check_avg_commutes_rb(&rb, &M::identity(3)).unwrap();
        assert!(r.passed);
        assert_eq!(r.parts.len(), 2);
        let r = check_avg_commutes_rb(&rb, &fixtures::ut2_r()).unwrap();
        assert!(r.passed && r.parts.len() == 2);

        let z =
            RBOperator::new(fixtures::z2(), M::from_i64_rows(&[&[0, 1], &[0, 0]]), q(1)).unwrap();
        let p = M::diagonal(&[q(1), q(0)]);
        let r = check_avg_commutes_rb(&z, &p).unwrap();
        assert!(!r.passed);
        assert_eq!(r.first_failure().unwrap().identity, "pb_eq_bp");
        assert_eq!(r.parts.len(), 1);

        assert!(matches!(
            check_avg_commutes_rb(
                &rb,
                &M::from_i64_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]])
            ),
            Err(Error::Kind(_))
        ));
    }

    #[test]
    fn adjoint_for_forms() {
        let om = BilinearForm::new(fixtures::symplectic2()).unwrap();
        assert_eq!(
            adjoint_wrt_form(&M::identity(2), &om).unwrap(),
            M::identity(2)
        );
        assert_eq!(
            adjoint_wrt_form(&fixtures::sp2_p(), &om).unwrap(),
            -&fixtures::sp2_p()
        );
        let m = M::from_i64_rows(&[&[1, 2, 0, -1], &[3, 0, 1, 1], &[0, 0, 2, 5], &[1, 1, 1, 1]]);
        let std = BilinearForm::standard_double(2);
        let adj = adjoint_wrt_form(&m, &std).unwrap();
        assert_eq!(adjoint_wrt_form(&adj, &std).unwrap(), m);
        for i in 0..4 {
            for j in 0..4 {
                let (ei, ej) = (basis_vector(4, i), basis_vector(4, j));
                assert_eq!(std.eval(&m.column(i), &ej), std.eval(&ei, &adj.column(j)));
            }
        }
    }

    #[test]
    fn quadratic_rota_baxter_fixtures() {
        assert!(check_qrb(&sp2().rb, &sp2().omega).unwrap().passed);
        assert!(check_qrb(&d4().rb, &d4().omega).unwrap().passed);
        // the projection onto the other Lagrangian works as well
        let other = M::diagonal(&[q(0), q(0), q(-1), q(-1)]);
        let rb = RBOperator::new(fixtures::d4(), other, q(1)).unwrap();
        assert!(QuadraticRB::new(rb, BilinearForm::standard_double(2)).is_ok());
        // −id satisfies the weight-1 identity but not the form compatibility
        let rb = RBOperator::new(fixtures::z2(), -&M::identity(2), q(1)).unwrap();
        let r = check_qrb(&rb, &sp2().omega).unwrap();
        assert_eq!(r.first_failure().unwrap().identity, "form_compatible");
    }

    #[test]
    fn averaging_on_quadratic_rb() {
        let s = sp2();
        assert!(check_avg_on_qrb(&s, &fixtures::sp2_p()).unwrap().passed);
        assert!(check_avg_on_qrb(&s, &M::zeros(2, 2)).unwrap().passed);
        let r = check_avg_on_qrb(&s, &M::identity(2)).unwrap();
        assert_eq!(r.first_failure().unwrap().identity, "adjoint_anticommutes");

        let d = d4();
        assert!(check_avg_on_qrb(&d, &fixtures::d4_p()).unwrap().passed);
        let r = check_avg_on_qrb(&d, &fixtures::d4_sym_p()).unwrap();
        assert!(!r.passed);

        assert!(
            descendent_neg_adjoint_avg(&s, &fixtures::sp2_p())
                .unwrap()
                .passed
        );
        assert!(
            descendent_neg_adjoint_avg(&s, &M::zeros(2, 2))
                .unwrap()
                .passed
        );
        assert!(
            descendent_neg_adjoint_avg(&d, &fixtures::d4_p())
                .unwrap()
                .passed
        );
        assert!(matches!(
            descendent_neg_adjoint_avg(&s, &M::identity(2)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn r_matrix_from_quadratic_rb() {
        let r = build_r_from_qrb(&sp2()).unwrap();
        let (plus, _) = r_plus_minus(&r);
        assert_eq!(
            plus,
            M::from_rows(vec![vec![q(0), half(1)], vec![half(-1), q(0)]]).unwrap()
        );
        assert_eq!(plus, j_omega(&sp2().omega).unwrap().scale(&half(1)));

        // B = −λ id gives r = 0; on a zero algebra this is still Rota-Baxter
        let mut flat = sp2();
        flat.rb.b = -&M::identity(2);
        assert!(build_r_from_qrb(&flat).unwrap().is_zero());

        let mut zero_weight = sp2();
        zero_weight.rb.weight = q(0);
        assert!(matches!(
            build_r_from_qrb(&zero_weight),
            Err(Error::ZeroWeight)
        ));

        let d = d4();
        let r = build_r_from_qrb(&d).unwrap();
        assert!(!r.is_zero());
        assert!(check_qrb_r(&d, &r).unwrap().passed);
        assert!(
            check_qrb_r(&sp2(), &build_r_from_qrb(&sp2()).unwrap())
                .unwrap()
                .passed
        );
    }

    #[test]
    fn dual_product_matches_pairing_oracle() {
        let ut2 = fixtures::ut2();
        let r = RTensor::new(M::from_i64_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap();
        let e1 = basis_vector(3, 0);
        assert_eq!(
            dual_product_r(&ut2, &r, &e1, &e1).unwrap(),
            vec![q(-1), q(0), q(0)]
        );
        assert!(dual_product_r(&ut2, &RTensor::zero(3), &e1, &e1)
            .unwrap()
            .iter()
            .all(|v| v == &q(0)));
        let z = dual_product_r(
            &fixtures::z2(),
            &RTensor::new(M::identity(2)).unwrap(),
            &basis_vector(2, 0),
            &basis_vector(2, 1),
        );
        assert_eq!(z.unwrap(), vec![q(0), q(0)]);

        let algs = [
            fixtures::ut2(),
            fixtures::nc2(),
            fixtures::d4(),
            fixtures::b3(),
        ];
        for alg in &algs {
            let n = alg.dim();
            let c = M::from_fn(n, n, |i, j| q(((3 * i + 5 * j + 1) % 5) as i64 - 2));
            let r = RTensor::new(c).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let (xi, eta) = (basis_vector(n, i), basis_vector(n, j));
                    assert_eq!(
                        dual_product_r(alg, &r, &xi, &eta).unwrap(),
                        naive_dual_product(alg, &r, &xi, &eta)
                    );
                }
            }
        }
    }

    #[test]
    fn factorizable_round_trip() {
        let s = sp2();
        let r = build_r_from_qrb(&s).unwrap();
        let back = factorizable_to_qrb(&fixtures::z2(), &r, q(1)).unwrap();
        assert_eq!(back, s);
        assert_eq!(build_r_from_qrb(&back).unwrap(), r);

        // any skew nondegenerate r on Z2 gives B = −id/2
        let skew = RTensor::new(M::from_i64_rows(&[&[0, 3], &[-3, 0]])).unwrap();
        let qrb = factorizable_to_qrb(&fixtures::z2(), &skew, q(1)).unwrap();
        assert_eq!(qrb.rb.b, fixtures::sp2_rb());
        assert_eq!(build_r_from_qrb(&qrb).unwrap(), skew);

        let d = d4();
        let r = build_r_from_qrb(&d).unwrap();
        let back = factorizable_to_qrb(&fixtures::d4(), &r, q(1)).unwrap();
        assert_eq!(back, d);

        // weight 3 scales B and keeps the form
        let back3 = factorizable_to_qrb(&fixtures::d4(), &r, q(3)).unwrap();
        assert_eq!(back3.rb.b, fixtures::d4_rb().scale(&q(3)));
        assert_eq!(back3.omega, d.omega);
        assert_eq!(build_r_from_qrb(&back3).unwrap(), r);

        let not_fact = RTensor::new(M::identity(2)).unwrap();
        assert!(matches!(
            factorizable_to_qrb(&fixtures::z2(), &not_fact, q(1)),
            Err(Error::Kind(_))
        ));
    }

    #[test]
    fn bialgebras_from_quadratic_rb() {
        let s = sp2();
        let bi = avg_bialgebra_from_qrb(&s, &fixtures::sp2_p()).unwrap();
        assert!(check_avg_prelie_bialgebra(&bi).unwrap().passed);
        assert_eq!(bi.s, -&fixtures::sp2_p());
        let bi = avg_bialgebra_from_qrb(&s, &M::zeros(2, 2)).unwrap();
        assert!(check_avg_prelie_bialgebra(&bi).unwrap().passed);

        let d = d4();
        let bi = avg_bialgebra_from_qrb(&d, &fixtures::d4_p()).unwrap();
        assert!(check_avg_prelie_bialgebra(&bi).unwrap().passed);
        assert!(!bi.co.is_zero());

        assert!(matches!(
            avg_bialgebra_from_qrb(&d, &fixtures::d4_sym_p()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    /// Every ω-skew averaging operator on the quadratic algebra `D4`
    /// (`P = Ω⁻¹X`, `X` symmetric) has `P(x)∘P(y) = 0`; so on the Rota-Baxter
    /// data every operator satisfying the hypotheses yields a bialgebra.
    #[test]
    fn skew_averaging_operators_square_to_zero() {
        let d = d4();
        let alg = d.alg();
        let oinv = d.omega.matrix().invert().unwrap().unwrap();
        let vals = [q(-1), q(0), q(1)];
        let mut skew_avg = 0;
        crate::algebra::for_each_assignment(&vals, 10, |e| {
            let mut x = M::zeros(4, 4);
            let mut k = 0;
            for i in 0..4 {
                for j in i..4 {
                    x[(i, j)] = e[k].clone();
                    x[(j, i)] = e[k].clone();
                    k += 1;
                }
            }
            let p = &oinv * &x;
            if !check_averaging(alg, &p).unwrap().passed {
                return;
            }
            skew_avg += 1;
            assert_eq!(adjoint_wrt_form(&p, &d.omega).unwrap(), -&p);
            assert!(s_admissible_report(alg, &p, &-&p).passed);
        });
        assert!(skew_avg > 100);

        let r = build_r_from_qrb(&d).unwrap();
        let co = crate::yang_baxter::delta_r(alg, &r).unwrap();
        let mut hits = 0;
        crate::algebra::for_each_assignment(&vals, 8, |e| {
            let mut p = M::zeros(4, 4);
            for (k, v) in e.iter().enumerate() {
                let blk = 2 * (k / 4);
                p[(blk + (k % 4) / 2, blk + k % 2)] = v.clone();
            }
            if !check_avg_on_qrb(&d, &p).unwrap().passed {
                return;
            }
            hits += 1;
            let direct = AvgBialgebra::unchecked(alg.clone(), p.clone(), co.clone(), -&p).unwrap();
            assert!(check_avg_prelie_bialgebra(&direct).unwrap().passed);
            let built = avg_bialgebra_from_qrb(&d, &p).unwrap();
            assert_eq!(built.co.coproduct(), direct.co.coproduct());
            assert_eq!((built.p, built.s), (direct.p, direct.s));
        });
        assert!(hits > 1);
    }

    fn z2_rrb() -> RelativeRB<Rational> {
        let avg = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let reg = regular_representation(&avg);
        RelativeRB::new(avg, reg, M::identity(2)).unwrap()
    }

    fn ut2_rrb() -> RelativeRB<Rational> {
        let avg = fixtures::ut2_avg();
        let co = coregular_representation(&avg, &fixtures::ut2_s()).unwrap();
        RelativeRB::new(avg, co, fixtures::ut2_rrb()).unwrap()
    }

    #[test]
    fn relative_rota_baxter_examples() {
        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg);
        assert!(
            check_relative_rb(&avg, &reg, &M::zeros(3, 3))
                .unwrap()
                .passed
        );
        let r = check_relative_rb(&avg, &reg, &M::identity(3)).unwrap();
        let w = r.first_failure().unwrap();
        assert_eq!(
            (w.identity.as_str(), w.indices.clone()),
            ("relative_rota_baxter", vec![0, 0])
        );
        let _ = z2_rrb();
        let _ = ut2_rrb();

        // the weight-0 identity holds for T but α does not intertwine
        let co = coregular_representation(&avg, &fixtures::ut2_s()).unwrap();
        let mut bad = co.clone();
        bad.alpha = fixtures::ut2_s();
        let rrb = &ut2_rrb();
        let r = relative_rb_report(
            avg.base(),
            avg.op(),
            &rrb.avgrep.rep,
            &M::identity(3),
            &rrb.t,
        )
        .unwrap();
        assert_eq!(r.first_failure().unwrap().identity, "operator_intertwined");
        assert!(matches!(
            check_relative_rb(&avg, &co, &M::zeros(3, 2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn descendent_averaging_algebra() {
        for rrb in [z2_rrb(), ut2_rrb()] {
            let desc = descendent_avg_prelie(&rrb).unwrap();
            assert!(check_pre_lie(desc.base()).passed);
            assert!(check_averaging(desc.base(), desc.op()).unwrap().passed);
            assert!(check_descendent_homomorphism(&rrb).unwrap().passed);
        }
        assert!(descendent_avg_prelie(&z2_rrb())
            .unwrap()
            .base()
            .product()
            .is_zero());
        assert!(!descendent_avg_prelie(&ut2_rrb())
            .unwrap()
            .base()
            .product()
            .is_zero());

        let mut zero = ut2_rrb();
        zero.t = M::zeros(3, 3);
        assert!(descendent_avg_prelie(&zero)
            .unwrap()
            .base()
            .product()
            .is_zero());
    }

    #[test]
    fn matched_pairs_from_relative_rb() {
        let mut zero = ut2_rrb();
        zero.t = M::zeros(3, 3);
        for rrb in [z2_rrb(), ut2_rrb(), zero] {
            let mp = matched_pair_from_rrb(&rrb).unwrap();
            assert!(check_matched_pair_prelie(&mp).unwrap().passed);
            let double = build_double(&mp).unwrap();
            assert!(check_averaging(double.base(), double.op()).unwrap().passed);
        }
    }

    fn symmetric_tensors(n: usize, vals: &[Rational]) -> Vec<RTensor<Rational>> {
        let slots = n * (n + 1) / 2;
        let mut out = Vec::new();
        crate::algebra::for_each_assignment(vals, slots, |e| {
            let mut c = M::zeros(n, n);
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    c[(i, j)] = e[k].clone();
                    c[(j, i)] = e[k].clone();
                    k += 1;
                }
            }
            out.push(RTensor::new(c).unwrap());
        });
        out
    }

    #[test]
    fn relative_rb_gives_cybe_solutions() {
        let avg = fixtures::ut2_avg();
        let s = fixtures::ut2_s();
        let r = rrb_to_cybe_solution(&avg, &s, &RTensor::zero(3)).unwrap();
        assert!(r.passed && r.parts.iter().all(|p| p.passed));

        let z = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let r = rrb_to_cybe_solution(&z, &M::identity(2), &RTensor::new(M::identity(2)).unwrap())
            .unwrap();
        assert!(r.parts.iter().all(|p| p.passed));

        let mut hyp = 0;
        for t in symmetric_tensors(3, &[q(-1), q(0), q(1)]) {
            let r = rrb_to_cybe_solution(&avg, &s, &t).unwrap();
            assert!(r.passed);
            hyp += r.parts[0].passed as usize;
        }
        assert!(hyp > 1);
        assert!(matches!(
            rrb_to_cybe_solution(
                &avg,
                &s,
                &RTensor::new(
                    fixtures::ut2_rrb()
                        .scale(&q(0))
                        .try_add(&M::from_i64_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]))
                        .unwrap()
                )
                .unwrap()
            ),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn relative_rb_against_weight_zero_rb() {
        let sp = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let om = BilinearForm::new(fixtures::symplectic2()).unwrap();
        let r = rrb_equiv_rb0(&sp, &om, &M::zeros(2, 2)).unwrap();
        assert!(r.passed && r.parts.iter().all(|p| p.passed));
        let r = rrb_equiv_rb0(&sp, &om, &j_omega(&om).unwrap()).unwrap();
        assert!(r.passed && r.parts.iter().all(|p| p.passed));

        let d = AveragingAlgebra::new(fixtures::d4(), fixtures::d4_sym_p()).unwrap();
        let std = BilinearForm::standard_double(2);
        let j = j_omega(&std).unwrap();
        let mut sides = [0usize; 2];
        let vals = [q(-1), q(0), q(1)];
        crate::algebra::for_each_assignment(&vals, 6, |e| {
            // weight-0 RB operators supported on the nilpotent part, mapped back through J
            let mut b = M::zeros(4, 4);
            let spots = [(1, 0), (2, 3), (1, 3), (2, 0), (1, 2), (2, 1)];
            for ((i, k), v) in spots.iter().zip(e) {
                b[(*i, *k)] = v.clone();
            }
            let r = rrb_equiv_rb0(&d, &std, &(&b * &j)).unwrap();
            assert!(r.passed);
            sides[r.parts[0].passed as usize] += 1;
        });
        assert!(sides[0] > 0 && sides[1] > 1);
        assert!(matches!(
            rrb_equiv_rb0(
                &AveragingAlgebra::new(fixtures::d4(), fixtures::d4_p()).unwrap(),
                &std,
                &j
            ),
            Err(Error::Kind(_))
        ));
    }

    #[test]
    fn three_way_equivalence() {
        let z = AveragingAlgebra::new(fixtures::z2(), M::zeros(2, 2)).unwrap();
        let rep = Representation::zero(z.base(), 2);
        let zero = M::zeros(2, 2);
        let r = check_equiva3(&z, &rep, &zero, &zero, &zero).unwrap();
        assert!(r.passed && r.parts.iter().all(|p| p.passed));

        let zi = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let reg = regular_representation(&zi).rep;
        let id = M::identity(2);
        let r = check_equiva3(&zi, &reg, &id, &id, &id).unwrap();
        assert!(r.passed && r.parts.iter().all(|p| p.passed));

        // regular rep of (UT2, R), S = α = R, β = id: β ρ(x) α ≠ ρ(Sx) α
        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg).rep;
        let rr = fixtures::ut2_r();
        let r = check_equiva3(&avg, &reg, &rr, &rr, &M::identity(3)).unwrap();
        assert!(r.passed);
        assert!(r.parts.iter().all(|p| !p.passed));
        let comp = &r.parts[2].parts[3];
        assert!(comp
            .failures
            .iter()
            .any(|w| w.identity.starts_with("rho_companion")));
    }

    #[test]
    fn lift_of_relative_rb() {
        let z = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let reg = regular_representation(&z);
        let id = M::identity(2);
        let (r, rep) = lift_T_to_r(&z, &reg, &id, &id, &id).unwrap();
        assert!(rep.passed && rep.parts.iter().all(|p| p.passed));
        assert_eq!(
            r.coeff(),
            &M::from_i64_rows(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]])
        );
        let (r, rep) = lift_T_to_r(&z, &reg, &M::zeros(2, 2), &id, &id).unwrap();
        assert!(r.is_zero() && rep.parts.iter().all(|p| p.passed));

        let fix = ut2_rrb();
        let (s, beta) = (fixtures::ut2_s(), fixtures::ut2_rrb_beta());
        let (r, rep) = lift_T_to_r(&fix.avg, &fix.avgrep, &fix.t, &s, &beta).unwrap();
        assert!(r.is_symmetric());
        assert!(rep.passed && rep.parts.iter().all(|p| p.passed));
        let (_, rep) = lift_T_to_r(&fix.avg, &fix.avgrep, &fix.t, &s, &M::identity(3)).unwrap();
        assert!(rep.passed && rep.parts.iter().all(|p| !p.passed));

        let bi = lift_T_to_bialgebra(&fix.avg, &fix.avgrep, &fix.t, &s, &beta).unwrap();
        assert!(check_avg_prelie_bialgebra(&bi).unwrap().passed);
        assert!(!bi.co.is_zero());
        assert!(matches!(
            lift_T_to_bialgebra(&fix.avg, &fix.avgrep, &fix.t, &s, &M::identity(3)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn searches_find_known_operators() {
        let vals = [q(-1), q(0), q(1)];
        let limits = SearchLimits::default();
        let found = search_rb_operators(&fixtures::ut2(), &q(1), &vals, &limits).unwrap();
        assert!(found.contains(&-&M::identity(3)));
        assert!(found.contains(&M::zeros(3, 3)));
        assert!(found
            .iter()
            .all(|b| check_rb(&fixtures::ut2(), b, &q(1)).unwrap().passed));

        let avg = fixtures::ut2_avg();
        let co = coregular_representation(&avg, &fixtures::ut2_s()).unwrap();
        let found = search_relative_rb(&avg, &co, &vals, &limits).unwrap();
        assert_eq!(found.len(), 15);
        assert!(found.contains(&fixtures::ut2_rrb()));
        let reg = regular_representation(&avg);
        assert_eq!(
            search_relative_rb(&avg, &reg, &vals, &limits).unwrap(),
            vec![M::zeros(3, 3)]
        );

        let tight = SearchLimits {
            max_dim: 3,
            budget: 100,
        };
        assert!(matches!(
            search_rb_operators(&fixtures::ut2(), &q(1), &vals, &tight),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        assert!(matches!(
            search_rb_operators(&fixtures::d4(), &q(1), &vals, &limits),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
