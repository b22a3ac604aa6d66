//! Representations of pre-Lie and averaging pre-Lie algebras, their duals,
//! admissibility conditions, semidirect products and induced Leibniz
//! representations.
//!
//! A representation `(V, ρ, φ)` stores `ρ(e_i)` and `φ(e_i)` as matrices on
//! `V`; values at other vectors follow by linearity. Dual spaces use the dual
//! basis, so the dual of an operator `M` is `M* = −Mᵀ`.

use crate::algebra::{combine, square_of, Algebra, AveragingAlgebra};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{basis_vector, Matrix, Tensor3};
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Representation<T> {
    alg_label: String,
    alg_dim: usize,
    module_dim: usize,
    rho: Vec<Matrix<T>>,
    phi: Vec<Matrix<T>>,
}

impl<T: Scalar> Representation<T> {
    pub fn new(alg: &Algebra<T>, rho: Vec<Matrix<T>>, phi: Vec<Matrix<T>>) -> Result<Self> {
        Self::for_label(alg.label(), alg.dim(), rho, phi)
    }

    pub(crate) fn for_label(
        label: &str,
        alg_dim: usize,
        rho: Vec<Matrix<T>>,
        phi: Vec<Matrix<T>>,
    ) -> Result<Self> {
        ensure_dim(rho.len() == alg_dim && phi.len() == alg_dim, || {
            format!(
                "expected {alg_dim} action matrices, got {} and {}",
                rho.len(),
                phi.len()
            )
        })?;
        let m = rho.first().map_or(0, Matrix::rows);
        for a in rho.iter().chain(&phi) {
            square_of(a, m, "action matrix")?;
        }
        Ok(Representation {
            alg_label: label.to_string(),
            alg_dim,
            module_dim: m,
            rho,
            phi,
        })
    }

    pub fn zero(alg: &Algebra<T>, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(module_dim, module_dim); alg.dim()];
        Representation {
            alg_label: alg.label().to_string(),
            alg_dim: alg.dim(),
            module_dim,
            rho: z.clone(),
            phi: z,
        }
    }

    pub fn algebra_label(&self) -> &str {
        &self.alg_label
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn rho(&self, i: usize) -> &Matrix<T> {
        &self.rho[i]
    }

    pub fn phi(&self, i: usize) -> &Matrix<T> {
        &self.phi[i]
    }

    pub fn rhos(&self) -> &[Matrix<T>] {
        &self.rho
    }

    pub fn phis(&self) -> &[Matrix<T>] {
        &self.phi
    }

    pub fn rho_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.rho, x, self.module_dim)
    }

    pub fn phi_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.phi, x, self.module_dim)
    }

    /// Rebinds to another algebra of the same dimension.
    pub fn relabel(mut self, alg: &Algebra<T>) -> Result<Self> {
        ensure_dim(alg.dim() == self.alg_dim, || {
            "algebra dimension differs".into()
        })?;
        self.alg_label = alg.label().to_string();
        Ok(self)
    }

    /// Kind error unless this representation was built for `alg`.
    pub fn ensure_for(&self, alg: &Algebra<T>) -> Result<()> {
        if self.alg_label != alg.label() || self.alg_dim != alg.dim() {
            return Err(Error::Kind(format!(
                "representation of `{}` used with `{}`",
                self.alg_label,
                alg.label()
            )));
        }
        Ok(())
    }
}

/// A representation together with its averaging companion `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct AvgRepresentation<T> {
    pub rep: Representation<T>,
    pub alpha: Matrix<T>,
}

impl<T: Scalar> AvgRepresentation<T> {
    /// Verified construction.
    pub fn new(
        avg: &AveragingAlgebra<T>,
        rep: Representation<T>,
        alpha: Matrix<T>,
    ) -> Result<Self> {
        let out = AvgRepresentation { rep, alpha };
        let r = check_avg_representation(avg, &out)?;
        if !r.passed {
            return Err(failed_kind(
                "not a representation of the averaging algebra",
                &r,
            ));
        }
        Ok(out)
    }

    pub fn module_dim(&self) -> usize {
        self.rep.module_dim()
    }
}

pub(crate) fn failed_kind(what: &str, r: &CheckReport) -> Error {
    Error::Kind(format!(
        "{what}{}",
        r.first_failure()
            .map(|w| format!(" ({} fails at {:?})", w.identity, w.indices))
            .unwrap_or_default()
    ))
}

pub fn check_prelie_representation<T: Scalar>(
    alg: &Algebra<T>,
    rep: &Representation<T>,
) -> Result<CheckReport> {
    rep.ensure_for(alg)?;
    let n = alg.dim();
    let mut ck = Checker::new("representation");
    for i in 0..n {
        for j in 0..n {
            let ij = alg.basis_product(i, j);
            let ji = alg.basis_product(j, i);
            let (ri, rj, pi, pj) = (rep.rho(i), rep.rho(j), rep.phi(i), rep.phi(j));
            let lhs = &rep.rho_of(&ij) - &rep.rho_of(&ji);
            let rhs = &(ri * rj) - &(rj * ri);
            ck.eq("rep_commutator", &[i, j], lhs.entries(), rhs.entries());
            let lhs = rep.phi_of(&ij);
            let rhs = &(&(ri * pj) - &(pj * ri)) + &(pj * pi);
            ck.eq("rep_right_action", &[i, j], lhs.entries(), rhs.entries());
        }
    }
    Ok(ck.finish())
}

fn require_rep<T: Scalar>(alg: &Algebra<T>, rep: &Representation<T>) -> Result<()> {
    let r = check_prelie_representation(alg, rep)?;
    if r.passed {
        Ok(())
    } else {
        Err(failed_kind(
            "not a representation of the pre-Lie algebra",
            &r,
        ))
    }
}

/// `(A, L, R)` with companion `P`.
pub fn regular_representation<T: Scalar>(avg: &AveragingAlgebra<T>) -> AvgRepresentation<T> {
    let alg = avg.base();
    AvgRepresentation {
        rep: Representation {
            alg_label: alg.label().to_string(),
            alg_dim: alg.dim(),
            module_dim: alg.dim(),
            rho: alg.lefts(),
            phi: alg.rights(),
        },
        alpha: avg.op().clone(),
    }
}

/// `(A*, L* − R*, −R*)`, that is `ρ(e_i) = R_iᵀ − L_iᵀ` and `φ(e_i) = R_iᵀ`.
pub fn coregular<T: Scalar>(alg: &Algebra<T>) -> Representation<T> {
    let n = alg.dim();
    Representation {
        alg_label: alg.label().to_string(),
        alg_dim: n,
        module_dim: n,
        rho: (0..n)
            .map(|i| &alg.right(i).transpose() - &alg.left(i).transpose())
            .collect(),
        phi: (0..n).map(|i| alg.right(i).transpose()).collect(),
    }
}

/// `f ρ₁(x) = ρ₂(x) f`, `f φ₁(x) = φ₂(x) f` and `f α₁ = α₂ f`.
pub fn check_rep_homomorphism<T: Scalar>(
    from: &AvgRepresentation<T>,
    to: &AvgRepresentation<T>,
    f: &Matrix<T>,
) -> Result<CheckReport> {
    ensure_dim(
        from.rep.alg_dim == to.rep.alg_dim
            && f.cols() == from.module_dim()
            && f.rows() == to.module_dim(),
        || "map does not go between the two modules".into(),
    )?;
    let mut ck = Checker::new("representation_homomorphism");
    for i in 0..from.rep.alg_dim {
        let a = f * from.rep.rho(i);
        let b = to.rep.rho(i) * f;
        ck.eq("intertwines_rho", &[i], a.entries(), b.entries());
        let a = f * from.rep.phi(i);
        let b = to.rep.phi(i) * f;
        ck.eq("intertwines_phi", &[i], a.entries(), b.entries());
    }
    let a = f * &from.alpha;
    let b = &to.alpha * f;
    ck.eq("intertwines_operator", &[], a.entries(), b.entries());
    Ok(ck.finish())
}

/// `(A*, L* − R*, −R*)` with companion `Sᵀ`.
pub fn coregular_representation<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
) -> Result<AvgRepresentation<T>> {
    let reg = regular_representation(avg);
    let (rep, beta) = dual_representation(&reg.rep, s)?;
    Ok(AvgRepresentation { rep, alpha: beta })
}

/// Shared shape of the averaging compatibility: for every basis index,
/// `X(P e_i) β = β X(P e_i) = β X(e_i) β` for `X = ρ` and `X = φ`.
fn operator_compatibility<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    rep: &Representation<T>,
    beta: &Matrix<T>,
    name: &str,
    labels: [&str; 4],
) -> Result<CheckReport> {
    rep.ensure_for(avg.base())?;
    square_of(beta, rep.module_dim(), "companion map")?;
    let mut ck = Checker::new(name);
    for i in 0..avg.dim() {
        let pe = avg.op().column(i);
        for (k, (fam, fam_p)) in [(rep.rho(i), rep.rho_of(&pe)), (rep.phi(i), rep.phi_of(&pe))]
            .into_iter()
            .enumerate()
        {
            let lhs = &fam_p * beta;
            let commuted = beta * &fam_p;
            let absorbed = &(beta * fam) * beta;
            ck.eq(labels[2 * k], &[i], lhs.entries(), commuted.entries());
            ck.eq(labels[2 * k + 1], &[i], lhs.entries(), absorbed.entries());
        }
    }
    Ok(ck.finish())
}

/// `ρ(P x)α = αρ(P x) = αρ(x)α` and the same for `φ`.
pub fn check_avg_representation<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
) -> Result<CheckReport> {
    require_rep(avg.base(), &avgrep.rep)?;
    operator_compatibility(
        avg,
        &avgrep.rep,
        &avgrep.alpha,
        "averaging_representation",
        ["rho_commute", "rho_absorb", "phi_commute", "phi_absorb"],
    )
}

/// `(V*, ρ* − φ*, −φ*)` with companion `βᵀ`.
pub fn dual_representation<T: Scalar>(
    rep: &Representation<T>,
    beta: &Matrix<T>,
) -> Result<(Representation<T>, Matrix<T>)> {
    square_of(beta, rep.module_dim(), "companion map")?;
    let rho = rep
        .rho
        .iter()
        .zip(&rep.phi)
        .map(|(r, p)| &p.transpose() - &r.transpose())
        .collect();
    let phi = rep.phi.iter().map(Matrix::transpose).collect();
    Ok((
        Representation {
            alg_label: rep.alg_label.clone(),
            alg_dim: rep.alg_dim,
            module_dim: rep.module_dim,
            rho,
            phi,
        },
        beta.transpose(),
    ))
}

/// Conditions under which the dual representation with `β*` is a
/// representation of the averaging algebra.
pub fn check_beta_admissible<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    rep: &Representation<T>,
    beta: &Matrix<T>,
) -> Result<CheckReport> {
    require_rep(avg.base(), rep)?;
    operator_compatibility(
        avg,
        rep,
        beta,
        "beta_admissible",
        ["rho_commute", "rho_absorb", "phi_commute", "phi_absorb"],
    )
}

/// `P(x)∘S(y) = S(P(x)∘y) = S(x∘S(y))` and `S(x)∘P(y) = S(x∘P(y)) = S(S(x)∘y)`.
#[allow(non_snake_case)]
pub fn check_S_admissible<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
) -> Result<CheckReport> {
    square_of(s, avg.dim(), "admissibility map")?;
    Ok(s_admissible_report(avg.base(), avg.op(), s))
}

pub(crate) fn s_admissible_report<T: Scalar>(
    alg: &Algebra<T>,
    p: &Matrix<T>,
    s: &Matrix<T>,
) -> CheckReport {
    let n = alg.dim();
    let mut ck = Checker::new("s_admissible");
    for i in 0..n {
        let (ei, pi, si) = (basis_vector(n, i), p.column(i), s.column(i));
        for j in 0..n {
            let (ej, pj, sj) = (basis_vector(n, j), p.column(j), s.column(j));
            let l = alg.mul(&pi, &sj);
            ck.eq(
                "left_shift",
                &[i, j],
                &l,
                &s.apply_unchecked(&alg.mul(&pi, &ej)),
            );
            ck.eq(
                "left_absorb",
                &[i, j],
                &l,
                &s.apply_unchecked(&alg.mul(&ei, &sj)),
            );
            let r = alg.mul(&si, &pj);
            ck.eq(
                "right_shift",
                &[i, j],
                &r,
                &s.apply_unchecked(&alg.mul(&ei, &pj)),
            );
            ck.eq(
                "right_absorb",
                &[i, j],
                &r,
                &s.apply_unchecked(&alg.mul(&si, &ej)),
            );
        }
    }
    ck.finish()
}

/// `φ(x)φ(y) = −φ(y)φ(x)`.
pub fn check_phi_anticommute<T: Scalar>(rep: &Representation<T>) -> CheckReport {
    let mut ck = Checker::new("phi_anticommute");
    for i in 0..rep.alg_dim {
        for j in i..rep.alg_dim {
            let a = rep.phi(i) * rep.phi(j);
            let b = -&(rep.phi(j) * rep.phi(i));
            ck.eq("phi_anticommute", &[i, j], a.entries(), b.entries());
        }
    }
    ck.finish()
}

/// `(x+u)∘(y+v) = x∘y + ρ(x)v + φ(y)u` on `A ⊕ V`, without checks.
pub fn semidirect_algebra<T: Scalar>(
    alg: &Algebra<T>,
    rep: &Representation<T>,
) -> Result<Algebra<T>> {
    rep.ensure_for(alg)?;
    let n = alg.dim();
    let m = rep.module_dim();
    let mut t = Tensor3::cube(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t[(i, j, k)] = alg.product()[(i, j, k)].clone();
            }
        }
        for a in 0..m {
            for b in 0..m {
                t[(i, n + a, n + b)] = rep.rho(i)[(b, a)].clone();
                t[(n + a, i, n + b)] = rep.phi(i)[(b, a)].clone();
            }
        }
    }
    Algebra::new(format!("{}⋉{}", alg.label(), m), t)
}

/// Semidirect product with operator `P ⊕ α`, without checks.
pub fn semidirect_product_raw<T: Scalar>(
    avg_alg: &Algebra<T>,
    p: &Matrix<T>,
    avgrep: &AvgRepresentation<T>,
) -> Result<(Algebra<T>, Matrix<T>)> {
    let alg = semidirect_algebra(avg_alg, &avgrep.rep)?;
    square_of(&avgrep.alpha, avgrep.module_dim(), "companion map")?;
    Ok((alg, p.direct_sum(&avgrep.alpha)))
}

pub fn semidirect_product<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
) -> Result<AveragingAlgebra<T>> {
    let r = check_avg_representation(avg, avgrep)?;
    if !r.passed {
        return Err(failed_kind(
            "not a representation of the averaging algebra",
            &r,
        ));
    }
    let (alg, op) = semidirect_product_raw(avg.base(), avg.op(), avgrep)?;
    AveragingAlgebra::new(alg, op)
}

/// A representation `(W; ρ^L, ρ^R)` of a Leibniz algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizRepresentation<T> {
    pub alg_label: String,
    pub module_dim: usize,
    pub left: Vec<Matrix<T>>,
    pub right: Vec<Matrix<T>>,
}

impl<T: Scalar> LeibnizRepresentation<T> {
    pub fn new(alg: &Algebra<T>, left: Vec<Matrix<T>>, right: Vec<Matrix<T>>) -> Result<Self> {
        ensure_dim(left.len() == alg.dim() && right.len() == alg.dim(), || {
            "one left and one right action per basis vector".into()
        })?;
        let m = left.first().map_or(0, Matrix::rows);
        for a in left.iter().chain(&right) {
            square_of(a, m, "action matrix")?;
        }
        Ok(LeibnizRepresentation {
            alg_label: alg.label().to_string(),
            module_dim: m,
            left,
            right,
        })
    }

    pub fn zero(alg: &Algebra<T>, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(module_dim, module_dim); alg.dim()];
        LeibnizRepresentation {
            alg_label: alg.label().to_string(),
            module_dim,
            left: z.clone(),
            right: z,
        }
    }

    pub fn left_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.left, x, self.module_dim)
    }

    pub fn right_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.right, x, self.module_dim)
    }
}

/// `ρ^L(x) = ρ(Px) − φ(Px)` and `ρ^R(x) = (−ρ(x) + φ(x))α`, as a
/// representation of the induced Leibniz algebra.
pub fn induced_leibniz_representation<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    avgrep: &AvgRepresentation<T>,
) -> Result<LeibnizRepresentation<T>> {
    let r = check_avg_representation(avg, avgrep)?;
    if !r.passed {
        return Err(failed_kind(
            "not a representation of the averaging algebra",
            &r,
        ));
    }
    Ok(induced_leibniz_representation_raw(
        avg.label(),
        avg.op(),
        avgrep,
    ))
}

pub(crate) fn induced_leibniz_representation_raw<T: Scalar>(
    label: &str,
    p: &Matrix<T>,
    avgrep: &AvgRepresentation<T>,
) -> LeibnizRepresentation<T> {
    let rep = &avgrep.rep;
    let n = rep.algebra_dim();
    let left = (0..n)
        .map(|i| {
            let pe = p.column(i);
            &rep.rho_of(&pe) - &rep.phi_of(&pe)
        })
        .collect();
    let right = (0..n)
        .map(|i| &(rep.phi(i) - rep.rho(i)) * &avgrep.alpha)
        .collect();
    LeibnizRepresentation {
        alg_label: format!("leibniz({label})"),
        module_dim: rep.module_dim(),
        left,
        right,
    }
}

/// The three Leibniz representation identities, reading `ρ^R(y)∘ρ^L(x)` as
/// composition of operators.
pub fn check_leibniz_representation<T: Scalar>(
    leib: &Algebra<T>,
    rep: &LeibnizRepresentation<T>,
) -> Result<CheckReport> {
    leib.require_leibniz()?;
    ensure_dim(
        rep.left.len() == leib.dim() && rep.right.len() == leib.dim(),
        || "action count differs from the algebra dimension".into(),
    )?;
    let n = leib.dim();
    let mut ck = Checker::new("leibniz_representation");
    for i in 0..n {
        for j in 0..n {
            let b = leib.basis_product(i, j);
            let (li, lj, ri, rj) = (&rep.left[i], &rep.left[j], &rep.right[i], &rep.right[j]);
            let lhs = rep.left_of(&b);
            let rhs = &(li * lj) - &(lj * li);
            ck.eq("leibniz_left", &[i, j], lhs.entries(), rhs.entries());
            let lhs = rep.right_of(&b);
            let rhs = &(li * rj) - &(rj * li);
            ck.eq("leibniz_right", &[i, j], lhs.entries(), rhs.entries());
            // ρ^R(e_j)ρ^L(e_i) = −ρ^R(e_j)ρ^R(e_i)
            let lhs = rj * li;
            let rhs = -&(rj * ri);
            ck.eq("leibniz_right_kills", &[i, j], lhs.entries(), rhs.entries());
        }
    }
    Ok(ck.finish())
}

/// Leibniz semidirect product `[x+u, y+v] = [x,y] + ρ^L(x)v + ρ^R(y)u`.
pub fn leibniz_semidirect<T: Scalar>(
    leib: &Algebra<T>,
    rep: &LeibnizRepresentation<T>,
) -> Result<Algebra<T>> {
    let n = leib.dim();
    let m = rep.module_dim;
    let mut t = Tensor3::cube(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t[(i, j, k)] = leib.product()[(i, j, k)].clone();
            }
        }
        for a in 0..m {
            for b in 0..m {
                t[(i, n + a, n + b)] = rep.left[i][(b, a)].clone();
                t[(n + a, i, n + b)] = rep.right[i][(b, a)].clone();
            }
        }
    }
    Algebra::new(format!("{}⋉{}", leib.label(), m), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_averaging, check_leibniz, check_pre_lie, induced_leibniz};
    use crate::{fixtures, Rational};

    type M = Matrix<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn regular_representation_of_ut2() {
        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg);
        assert!(
            check_prelie_representation(avg.base(), &reg.rep)
                .unwrap()
                .passed
        );
        assert!(check_avg_representation(&avg, &reg).unwrap().passed);
    }

    #[test]
    fn zero_representation_passes() {
        let a = fixtures::ut2();
        assert!(
            check_prelie_representation(&a, &Representation::zero(&a, 2))
                .unwrap()
                .passed
        );
    }

    #[test]
    fn swapped_regular_representation() {
        // UT2 is commutative, so swapping L and R changes nothing.
        let a = fixtures::ut2();
        let rep = Representation::new(&a, a.rights(), a.lefts()).unwrap();
        assert!(check_prelie_representation(&a, &rep).unwrap().passed);
        let b = fixtures::nc2();
        let rep = Representation::new(&b, b.rights(), b.lefts()).unwrap();
        assert!(!check_prelie_representation(&b, &rep).unwrap().passed);
    }

    #[test]
    fn wrong_companion_fails_operator_compatibility() {
        let avg = fixtures::ut2_avg();
        let mut reg = regular_representation(&avg);
        reg.alpha = M::identity(3);
        let r = check_avg_representation(&avg, &reg).unwrap();
        assert!(!r.passed);
        assert!(r.violates("rho_absorb") || r.violates("phi_absorb"));
    }

    #[test]
    fn zero_product_representations_are_trivial() {
        let avg =
            AveragingAlgebra::new(fixtures::z2(), M::from_i64_rows(&[&[1, 1], &[0, 0]])).unwrap();
        let reg = regular_representation(&avg);
        assert!(check_avg_representation(&avg, &reg).unwrap().passed);
    }

    #[test]
    fn coregular_representation_is_a_representation() {
        let avg = fixtures::ut2_avg();
        let co = coregular_representation(&avg, avg.op()).unwrap();
        assert!(
            check_prelie_representation(avg.base(), &co.rep)
                .unwrap()
                .passed
        );
        assert!(check_avg_representation(&avg, &co).unwrap().passed);
        // (L* − R*)(e_i) = −L_iᵀ + R_iᵀ
        let a = avg.base();
        assert_eq!(
            co.rep.rho(0),
            &(&a.right(0).transpose() - &a.left(0).transpose())
        );
        assert_eq!(co.rep.phi(2), &a.right(2).transpose());
    }

    #[test]
    fn dual_of_dual_is_the_original() {
        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg);
        let (d, b) = dual_representation(&reg.rep, &reg.alpha).unwrap();
        let (dd, bb) = dual_representation(&d, &b).unwrap();
        assert_eq!(dd, reg.rep);
        assert_eq!(bb, reg.alpha);
        let z = Representation::zero(avg.base(), 2);
        assert_eq!(dual_representation(&z, &M::identity(2)).unwrap().0, z);
    }

    #[test]
    fn beta_admissibility_examples() {
        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg);
        assert!(
            check_beta_admissible(&avg, &reg.rep, &fixtures::ut2_r())
                .unwrap()
                .passed
        );
        assert!(
            !check_beta_admissible(&avg, &reg.rep, &M::identity(3))
                .unwrap()
                .passed
        );
        let z2 = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let zr = Representation::zero(z2.base(), 3);
        let any = M::from_i64_rows(&[&[1, 2, 3], &[0, 1, 0], &[5, 0, 0]]);
        assert!(check_beta_admissible(&z2, &zr, &any).unwrap().passed);
    }

    #[test]
    fn s_admissibility_examples() {
        let avg = fixtures::ut2_avg();
        assert!(check_S_admissible(&avg, avg.op()).unwrap().passed);
        // Every product landing in span(e2) has a factor e2 or e3, so the
        // middle projection survives both conditions.
        let mid = M::diagonal(&[q(0), q(1), q(0)]);
        assert!(check_S_admissible(&avg, &mid).unwrap().passed);
        assert!(!check_S_admissible(&avg, &M::identity(3)).unwrap().passed);
        let z2 = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        assert!(
            check_S_admissible(&z2, &M::from_i64_rows(&[&[3, 1], &[4, 1]]))
                .unwrap()
                .passed
        );
    }

    #[test]
    fn phi_anticommutation_examples() {
        let a = fixtures::ut2();
        assert!(check_phi_anticommute(&Representation::zero(&a, 3)).passed);
        let z = fixtures::z2();
        let zreg = Representation::new(&z, z.lefts(), z.rights()).unwrap();
        assert!(check_phi_anticommute(&zreg).passed);
        let reg = Representation::new(&a, a.lefts(), a.rights()).unwrap();
        assert!(!check_phi_anticommute(&reg).passed);
    }

    #[test]
    fn semidirect_products() {
        let z2 = AveragingAlgebra::new(fixtures::z2(), M::identity(2)).unwrap();
        let zr = AvgRepresentation {
            rep: Representation::zero(z2.base(), 1),
            alpha: M::zeros(1, 1),
        };
        let sd = semidirect_product(&z2, &zr).unwrap();
        assert_eq!(sd.dim(), 3);
        assert!(sd.base().product().is_zero());
        assert_eq!(sd.op(), &M::identity(2).direct_sum(&M::zeros(1, 1)));

        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg);
        let big = semidirect_product(&avg, &reg).unwrap();
        assert_eq!(big.dim(), 6);
        assert!(check_pre_lie(big.base()).passed);

        let bad = AvgRepresentation {
            rep: reg.rep.clone(),
            alpha: M::identity(3),
        };
        let (alg, op) = semidirect_product_raw(avg.base(), avg.op(), &bad).unwrap();
        assert!(!check_averaging(&alg, &op).unwrap().passed);
        assert!(semidirect_product(&avg, &bad).is_err());
    }

    #[test]
    fn induced_leibniz_representation_of_ut2() {
        let avg = fixtures::ut2_avg();
        let reg = regular_representation(&avg);
        let lr = induced_leibniz_representation(&avg, &reg).unwrap();
        let leib = induced_leibniz(&avg).unwrap();
        assert!(check_leibniz_representation(&leib, &lr).unwrap().passed);
        // The semidirect product is then a Leibniz algebra.
        assert!(check_leibniz(&leibniz_semidirect(&leib, &lr).unwrap()).passed);

        let avg = fixtures::nc2_avg();
        let reg = regular_representation(&avg);
        let lr = induced_leibniz_representation(&avg, &reg).unwrap();
        let leib = induced_leibniz(&avg).unwrap();
        assert!(check_leibniz_representation(&leib, &lr).unwrap().passed);
        assert!(check_leibniz(&leibniz_semidirect(&leib, &lr).unwrap()).passed);
    }

    #[test]
    fn zero_leibniz_representation_passes() {
        let leib = induced_leibniz(&fixtures::ut2_avg()).unwrap();
        let z = LeibnizRepresentation::zero(&leib, 2);
        assert!(check_leibniz_representation(&leib, &z).unwrap().passed);
    }

    #[test]
    fn identity_actions_fail_on_a_nonabelian_leibniz_algebra() {
        let leib = induced_leibniz(&fixtures::nc2_avg()).unwrap();
        assert!(!leib.product().is_zero());
        let id = vec![M::identity(2); 2];
        let rep = LeibnizRepresentation::new(&leib, id.clone(), id).unwrap();
        let r = check_leibniz_representation(&leib, &rep).unwrap();
        assert!(r.violates("leibniz_left"));
    }

    #[test]
    fn cross_algebra_use_is_a_kind_error() {
        let a = fixtures::ut2();
        let rep = Representation::zero(&a, 3);
        let other = fixtures::ut2().with_label("other");
        assert!(matches!(
            check_prelie_representation(&other, &rep),
            Err(Error::Kind(_))
        ));
    }
}
