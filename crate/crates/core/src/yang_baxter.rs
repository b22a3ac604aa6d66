//! Tensors `r ∈ A⊗A`, the coboundary coproduct `Δ_r`, the S-equation and the
//! conditions under which `Δ_r` yields an (averaging) pre-Lie bialgebra.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    ensure_budget, for_each_assignment, search_size, square_of, Algebra, AveragingAlgebra,
    SearchLimits,
};
use crate::bialgebra::AvgBialgebra;
use crate::coalgebra::{tensor_apply, Coalgebra};
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::report::{CheckReport, Checker};
use crate::representation::{failed_kind, s_admissible_report};
use crate::scalar::Scalar;

/// `r = Σ coeff[(i, j)] e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RTensor<T> {
    coeff: Matrix<T>,
}

impl<T: Scalar> RTensor<T> {
    pub fn new(coeff: Matrix<T>) -> Result<Self> {
        square_of(&coeff, coeff.rows(), "r coefficients")?;
        Ok(RTensor { coeff })
    }

    pub fn zero(dim: usize) -> Self {
        RTensor {
            coeff: Matrix::zeros(dim, dim),
        }
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, T)]) -> Result<Self> {
        let mut coeff: Matrix<T> = Matrix::zeros(dim, dim);
        for (i, j, v) in entries {
            if *i >= dim || *j >= dim {
                return Err(dim_mismatch(format!(
                    "r entry ({i}, {j}) outside dimension {dim}"
                )));
            }
            coeff[(*i, *j)] = coeff[(*i, *j)].clone() + v;
        }
        Ok(RTensor { coeff })
    }

    pub fn dim(&self) -> usize {
        self.coeff.rows()
    }

    pub fn coeff(&self) -> &Matrix<T> {
        &self.coeff
    }

    pub fn into_coeff(self) -> Matrix<T> {
        self.coeff
    }

    /// `τr`.
    pub fn flipped(&self) -> Self {
        RTensor {
            coeff: self.coeff.transpose(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeff.is_symmetric()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        RTensor {
            coeff: self.coeff.scale(s),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(RTensor {
            coeff: self.coeff.try_add(&other.coeff)?,
        })
    }
}

fn ensure_r_dim<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<()> {
    if alg.dim() != r.dim() {
        return Err(dim_mismatch(format!(
            "r has dimension {} but {} has dimension {}",
            r.dim(),
            alg.label(),
            alg.dim()
        )));
    }
    Ok(())
}

/// `(Λ, a)` with `Λ = (r + τr)/2` and `a = (r − τr)/2`.
pub fn split_sym_skew<T: Scalar>(r: &RTensor<T>) -> (RTensor<T>, RTensor<T>) {
    let half = T::one() / (T::one() + T::one());
    let t = r.coeff.transpose();
    let sym = (&r.coeff + &t).scale(&half);
    let skew = (&r.coeff - &t).scale(&half);
    (RTensor { coeff: sym }, RTensor { coeff: skew })
}

/// `Δ_r(x) = (L_x⊗id + id⊗(L_x − R_x))r`.
pub fn delta_r<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<Coalgebra<T>> {
    ensure_r_dim(alg, r)?;
    let n = alg.dim();
    let id = Matrix::identity(n);
    Coalgebra::from_images(format!("delta_r({})", alg.label()), n, |i| {
        let l = alg.left(i);
        let ad = &l - &alg.right(i);
        &tensor_apply(&l, &id, &r.coeff) + &tensor_apply(&id, &ad, &r.coeff)
    })
}

/// `[[r,r]] = Σ (a_i ⊗ b_i∘a_j ⊗ b_j + a_i ⊗ a_j ⊗ b_i∘b_j)
///          − Σ (a_i∘a_j ⊗ b_i ⊗ b_j + a_i ⊗ a_j ⊗ b_j∘b_i)`.
pub fn double_bracket_rr<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<Tensor3<T>> {
    ensure_r_dim(alg, r)?;
    let n = alg.dim();
    let c = alg.product();
    let r = &r.coeff;
    let sum = |f: &dyn Fn(usize) -> T| (0..n).fold(T::zero(), |acc, m| acc + f(m));
    // Contractions of one copy of r against the product.
    let right_on_second = Tensor3::from_fn(n, n, n, |q, k, t| {
        sum(&|s| c[(q, s, k)].clone() * &r[(s, t)])
    });
    let second_on_right = Tensor3::from_fn(n, n, n, |q, s, k| {
        sum(&|t| r[(s, t)].clone() * &c[(q, t, k)])
    });
    let second_on_left = Tensor3::from_fn(n, n, n, |p, t, k| {
        sum(&|s| r[(s, t)].clone() * &c[(p, s, k)])
    });
    let second_from_left = Tensor3::from_fn(n, n, n, |q, s, k| {
        sum(&|t| r[(s, t)].clone() * &c[(t, q, k)])
    });
    Ok(Tensor3::from_fn(n, n, n, |x, y, z| {
        sum(&|m| {
            let rm = &r[(x, m)];
            rm.clone() * &right_on_second[(m, y, z)] + rm.clone() * &second_on_right[(m, y, z)]
                - r[(m, y)].clone() * &second_on_left[(m, z, x)]
                - rm.clone() * &second_from_left[(m, y, z)]
        })
    }))
}

/// `(M applied in slot)X` for a three-fold tensor.
pub(crate) fn apply_slot<T: Scalar>(x: &Tensor3<T>, m: &Matrix<T>, slot: usize) -> Tensor3<T> {
    let [a, b, c] = x.dims();
    let sum = |len: usize, f: &dyn Fn(usize) -> T| (0..len).fold(T::zero(), |acc, t| acc + f(t));
    match slot {
        0 => Tensor3::from_fn(m.rows(), b, c, |p, q, s| {
            sum(a, &|t| m[(p, t)].clone() * &x[(t, q, s)])
        }),
        1 => Tensor3::from_fn(a, m.rows(), c, |p, q, s| {
            sum(b, &|t| m[(q, t)].clone() * &x[(p, t, s)])
        }),
        _ => Tensor3::from_fn(a, b, m.rows(), |p, q, s| {
            sum(c, &|t| m[(s, t)].clone() * &x[(p, q, t)])
        }),
    }
}

fn zeros<T: Scalar>(len: usize) -> Vec<T> {
    vec![T::zero(); len]
}

/// `[[r,r]] = 0`.
#[allow(non_snake_case)]
pub fn check_S_equation<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<CheckReport> {
    let x = double_bracket_rr(alg, r)?;
    let mut ck = Checker::new("s_equation");
    ck.eq(
        "double_bracket",
        &[],
        x.entries(),
        &zeros(x.entries().len()),
    );
    Ok(ck.finish())
}

/// `Q(x)[[r,r]] = 0` with `Q(x) = L_x⊗id⊗id + id⊗L_x⊗id + id⊗id⊗ad_x`.
#[allow(non_snake_case)]
pub fn check_Q_condition<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<CheckReport> {
    let x = double_bracket_rr(alg, r)?;
    let mut ck = Checker::new("q_condition");
    let z = zeros(x.entries().len());
    for i in 0..alg.dim() {
        let l = alg.left(i);
        let ad = &l - &alg.right(i);
        let q = apply_slot(&x, &l, 0)
            .try_add(&apply_slot(&x, &l, 1))?
            .try_add(&apply_slot(&x, &ad, 2))?;
        ck.eq("q_kills_double_bracket", &[i], q.entries(), &z);
    }
    Ok(ck.finish())
}

/// `ℓ(x)t = (L_x⊗id + id⊗L_x)t`.
fn ell_op<T: Scalar>(l: &Matrix<T>, t: &Matrix<T>) -> Matrix<T> {
    &(l * t) + &(t * &l.transpose())
}

/// `(ℓ(x∘y) − ℓ(x)ℓ(y))a = 0` on the skew part `a` of `r`.
pub fn check_skew_condition<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<CheckReport> {
    ensure_r_dim(alg, r)?;
    let n = alg.dim();
    let (_, a) = split_sym_skew(r);
    let lefts = alg.lefts();
    let mut ck = Checker::new("skew_condition");
    let z = zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            let lij = alg.left_of(&alg.basis_product(i, j));
            let lhs = &ell_op(&lij, &a.coeff) - &ell_op(&lefts[i], &ell_op(&lefts[j], &a.coeff));
            ck.eq("ell_multiplicative", &[i, j], lhs.entries(), &z);
        }
    }
    Ok(ck.finish())
}

/// `[[r,r]] = 0` and `(L_x⊗id + id⊗ad_x)a = 0` on the skew part.
pub fn check_quasi_triangular<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<CheckReport> {
    let s_eq = check_S_equation(alg, r)?;
    let n = alg.dim();
    let (_, a) = split_sym_skew(r);
    let id = Matrix::identity(n);
    let mut ck = Checker::new("skew_invariance");
    let z = zeros(n * n);
    for i in 0..n {
        let l = alg.left(i);
        let ad = &l - &alg.right(i);
        let t = tensor_apply(&l, &id, &a.coeff);
        let u = tensor_apply(&id, &ad, &a.coeff);
        ck.eq("skew_part_invariant", &[i], (&t + &u).entries(), &z);
    }
    Ok(CheckReport::all_of(
        "quasi_triangular",
        vec![s_eq, ck.finish()],
    ))
}

/// `(r₊, r₋)` as maps `A* → A`: `⟨r₊(ξ), η⟩ = ⟨r, ξ⊗η⟩`, `⟨r₋(ξ), η⟩ = ⟨r, η⊗ξ⟩`.
pub fn r_plus_minus<T: Scalar>(r: &RTensor<T>) -> (Matrix<T>, Matrix<T>) {
    (r.coeff.transpose(), r.coeff.clone())
}

/// `I = r₊ − r₋`.
pub fn r_difference<T: Scalar>(r: &RTensor<T>) -> Matrix<T> {
    let (p, m) = r_plus_minus(r);
    &p - &m
}

/// Quasi-triangular with `I = r₊ − r₋` invertible.
pub fn check_factorizable<T: Scalar>(alg: &Algebra<T>, r: &RTensor<T>) -> Result<CheckReport> {
    let qt = check_quasi_triangular(alg, r)?;
    if !qt.passed {
        return Err(failed_kind("r is not quasi-triangular", &qt));
    }
    let mut ck = Checker::new("factorizable");
    if r_difference(r).invert()?.is_none() {
        ck.flag("difference_invertible", &[]);
    }
    Ok(ck.finish())
}

fn require_s_admissible<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
    r: &RTensor<T>,
) -> Result<()> {
    ensure_r_dim(avg.base(), r)?;
    square_of(s, avg.dim(), "admissible operator")?;
    let rep = s_admissible_report(avg.base(), avg.op(), s);
    if !rep.passed {
        return Err(failed_kind(
            "the averaging algebra is not S-admissible",
            &rep,
        ));
    }
    Ok(())
}

/// The S-equation together with `(S⊗id − id⊗P)r = 0` and `(P⊗id − id⊗S)r = 0`.
pub fn check_admissible_cybe<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
    r: &RTensor<T>,
) -> Result<CheckReport> {
    require_s_admissible(avg, s, r)?;
    admissible_cybe_report(avg.base(), avg.op(), s, r)
}

/// [`check_admissible_cybe`] without the admissibility precondition.
pub(crate) fn admissible_cybe_report<T: Scalar>(
    alg: &Algebra<T>,
    p: &Matrix<T>,
    s: &Matrix<T>,
    r: &RTensor<T>,
) -> Result<CheckReport> {
    let s_eq = check_S_equation(alg, r)?;
    let id = Matrix::identity(alg.dim());
    let mut ck = Checker::new("operator_compatibility");
    let left = ck.eq(
        "s_left_p_right",
        &[],
        tensor_apply(s, &id, &r.coeff).entries(),
        tensor_apply(&id, p, &r.coeff).entries(),
    );
    let right = ck.eq(
        "p_left_s_right",
        &[],
        tensor_apply(p, &id, &r.coeff).entries(),
        tensor_apply(&id, s, &r.coeff).entries(),
    );
    if r.is_symmetric() {
        // The two conditions are transposes of each other.
        assert_eq!(
            left, right,
            "symmetric r: the two compatibility conditions must agree"
        );
    }
    Ok(CheckReport::all_of(
        "admissible_cybe",
        vec![s_eq, ck.finish()],
    ))
}

/// The six tensor identities equivalent, for `Δ_r`, to the coaveraging
/// condition and the two mixed compatibilities with `(P, S)`.
pub fn check_combined_conditions<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
    r: &RTensor<T>,
) -> Result<CheckReport> {
    require_s_admissible(avg, s, r)?;
    let n = avg.dim();
    let alg = avg.base();
    let p = avg.op();
    let id = Matrix::identity(n);
    let t = &r.coeff;
    let z = zeros(n * n);
    let ta = |a: &Matrix<T>, b: &Matrix<T>, x: &Matrix<T>| tensor_apply(a, b, x);
    let mut co = Checker::new("coaveraging");
    let mut left = Checker::new("left_mixed");
    let mut right = Checker::new("right_mixed");
    for i in 0..n {
        let (lx, rx) = (alg.left(i), alg.right(i));
        let adx = &lx - &rx;
        let sx = s.column(i);
        let px = p.column(i);
        let (ls, ads) = (alg.left_of(&sx), &alg.left_of(&sx) - &alg.right_of(&sx));
        let (lp, adp) = (alg.left_of(&px), &alg.left_of(&px) - &alg.right_of(&px));

        let lhs = &ta(&(s * &lx), s, t) + &ta(s, &(s * &adx), t);
        let rhs = &ta(&(&ls * p), &id, t) + &ta(s, &ads, t);
        co.eq("outer", &[i], lhs.entries(), rhs.entries());
        let lhs = ta(&ls, &id, &(&ta(p, &id, t) - &ta(&id, s, t)));
        let rhs = ta(&id, &ads, &(&ta(&id, p, t) - &ta(s, &id, t)));
        co.eq("inner", &[i], lhs.entries(), rhs.entries());

        let lhs = &ta(&(p * &lx), s, t) + &ta(p, &(s * &adx), t);
        let rhs = &ta(&(&lp * p), &id, t) + &ta(p, &adp, t);
        left.eq("outer", &[i], lhs.entries(), rhs.entries());
        let u = &ta(&id, s, t) - &ta(p, &id, t);
        let lhs = &ta(&lp, &id, &u) + &ta(&id, &adp, &u);
        left.eq("inner", &[i], lhs.entries(), &z);

        let lhs = &ta(&(s * &lx), p, t) + &ta(s, &(p * &adx), t);
        let rhs = &ta(&(&lp * s), &id, t) + &ta(s, &adp, t);
        right.eq("outer", &[i], lhs.entries(), rhs.entries());
        let u = &ta(s, &id, t) - &ta(&id, p, t);
        let lhs = &ta(&lp, &id, &u) + &ta(&id, &adp, &u);
        right.eq("inner", &[i], lhs.entries(), &z);
    }
    Ok(CheckReport::all_of(
        "combined_conditions",
        vec![co.finish(), left.finish(), right.finish()],
    ))
}

/// `(A, ∘, Δ_r, P, S)` for a symmetric solution `r` of the S-admissible
/// classical Yang-Baxter equation.
pub fn build_coboundary_avg_bialgebra<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
    r: &RTensor<T>,
) -> Result<AvgBialgebra<T>> {
    if !r.is_symmetric() {
        return Err(Error::PreconditionFailed("r must be symmetric".into()));
    }
    let cy = match check_admissible_cybe(avg, s, r) {
        Ok(rep) => rep,
        Err(Error::Kind(msg)) => return Err(Error::PreconditionFailed(msg)),
        Err(e) => return Err(e),
    };
    if let Some(w) = cy.first_failure() {
        return Err(Error::PreconditionFailed(format!(
            "admissible classical Yang-Baxter equation fails: {} at {:?}",
            w.identity, w.indices
        )));
    }
    let co = delta_r(avg.base(), r)?;
    AvgBialgebra::new(avg.base().clone(), avg.op().clone(), co, s.clone())
}

/// Symmetric `r` with entries from `candidates` solving the S-admissible
/// classical Yang-Baxter equation in `(avg, s)`.
pub fn search_symmetric_solutions<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    s: &Matrix<T>,
    candidates: &[T],
    limits: &SearchLimits,
) -> Result<Vec<RTensor<T>>> {
    let n = avg.dim();
    if n > limits.max_dim {
        return Err(Error::PreconditionFailed(format!(
            "dimension {n} exceeds the search bound {}",
            limits.max_dim
        )));
    }
    require_s_admissible(avg, s, &RTensor::zero(n))?;
    let slots = n * (n + 1) / 2;
    ensure_budget(search_size(candidates.len(), slots), limits)?;
    let mut found = Vec::new();
    let mut err = None;
    for_each_assignment(candidates, slots, |vals| {
        if err.is_some() {
            return;
        }
        let mut coeff = Matrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                coeff[(i, j)] = vals[k].clone();
                coeff[(j, i)] = vals[k].clone();
                k += 1;
            }
        }
        let r = RTensor { coeff };
        match check_admissible_cybe(avg, s, &r) {
            Ok(rep) if rep.passed => found.push(r),
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found),
    }
}
