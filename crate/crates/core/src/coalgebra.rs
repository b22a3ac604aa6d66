//! Coalgebras given by coproduct constants, and the tensor operations on
//! `A⊗A` and `A⊗A⊗A` they need.
//!
//! `coproduct[(i, j, k)] = d_i^{jk}` means `Δ(e_i) = sum d_i^{jk} e_j⊗e_k`.
//! An element `t` of `A⊗A` is a matrix with `t[(j, k)]` the coefficient of
//! `e_j⊗e_k`; then `(M⊗N)t = M t Nᵀ` and `τt = tᵀ`.

use serde::{Deserialize, Serialize};

use crate::algebra::{square_of, Algebra, AveragingAlgebra};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{Matrix, Tensor3};
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoKind {
    Unchecked,
    PreLie,
    Lie,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra<T> {
    label: String,
    coproduct: Tensor3<T>,
    kind: CoKind,
}

impl<T: Scalar> Coalgebra<T> {
    pub fn new(label: impl Into<String>, coproduct: Tensor3<T>) -> Result<Self> {
        let [a, b, c] = coproduct.dims();
        ensure_dim(a == b && b == c, || {
            format!("coproduct constants of shape {a}x{b}x{c} are not cubic")
        })?;
        Ok(Coalgebra {
            label: label.into(),
            coproduct,
            kind: CoKind::Unchecked,
        })
    }

    pub fn zero(label: impl Into<String>, dim: usize) -> Self {
        Coalgebra {
            label: label.into(),
            coproduct: Tensor3::cube(dim),
            kind: CoKind::Unchecked,
        }
    }

    /// Builds from sparse 0-based `(i, j, k, d_i^{jk})` entries.
    pub fn from_entries(
        label: impl Into<String>,
        dim: usize,
        entries: &[(usize, usize, usize, T)],
    ) -> Result<Self> {
        let mut t = Tensor3::cube(dim);
        for (i, j, k, v) in entries {
            ensure_dim(*i < dim && *j < dim && *k < dim, || {
                format!("entry ({i},{j},{k}) outside dimension {dim}")
            })?;
            t[(*i, *j, *k)] = v.clone();
        }
        Self::new(label, t)
    }

    /// Builds from `Δ(e_i) = f(i)`.
    pub fn from_images(
        label: impl Into<String>,
        dim: usize,
        mut f: impl FnMut(usize) -> Matrix<T>,
    ) -> Result<Self> {
        let mut t = Tensor3::cube(dim);
        for i in 0..dim {
            let m = f(i);
            square_of(&m, dim, "coproduct image")?;
            for j in 0..dim {
                for k in 0..dim {
                    t[(i, j, k)] = m[(j, k)].clone();
                }
            }
        }
        Self::new(label, t)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.coproduct.dims()[0]
    }

    pub fn kind(&self) -> CoKind {
        self.kind
    }

    pub fn coproduct(&self) -> &Tensor3<T> {
        &self.coproduct
    }

    pub fn is_zero(&self) -> bool {
        self.coproduct.is_zero()
    }

    /// `Δ(e_i)`.
    pub fn basis_image(&self, i: usize) -> Matrix<T> {
        self.coproduct.slice(i)
    }

    /// `Δ(x)`.
    pub fn apply(&self, x: &[T]) -> Matrix<T> {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let d = &self.coproduct[(i, j, k)];
                    if !d.is_zero() {
                        out[(j, k)] += &(c.clone() * d);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        Coalgebra {
            label: self.label.clone(),
            coproduct: self.coproduct.scale(s),
            kind: CoKind::Unchecked,
        }
    }

    /// `Δ − τΔ`.
    pub fn antisymmetrized(&self) -> Self {
        let n = self.dim();
        let t = Tensor3::from_fn(n, n, n, |i, j, k| {
            self.coproduct[(i, j, k)].clone() - &self.coproduct[(i, k, j)]
        });
        Coalgebra {
            label: format!("skew({})", self.label),
            coproduct: t,
            kind: CoKind::Unchecked,
        }
    }

    /// `(Δ⊗id)t`.
    pub fn apply_left(&self, t: &Matrix<T>) -> Tensor3<T> {
        let n = self.dim();
        Tensor3::from_fn(n, n, n, |j, k, b| {
            (0..n).fold(T::zero(), |acc, a| {
                let s = &t[(a, b)];
                if s.is_zero() {
                    acc
                } else {
                    acc + s.clone() * &self.coproduct[(a, j, k)]
                }
            })
        })
    }

    /// `(id⊗Δ)t`.
    pub fn apply_right(&self, t: &Matrix<T>) -> Tensor3<T> {
        let n = self.dim();
        Tensor3::from_fn(n, n, n, |a, j, k| {
            (0..n).fold(T::zero(), |acc, b| {
                let s = &t[(a, b)];
                if s.is_zero() {
                    acc
                } else {
                    acc + s.clone() * &self.coproduct[(b, j, k)]
                }
            })
        })
    }

    pub fn into_pre_lie(mut self) -> Result<Self> {
        let r = check_prelie_coalgebra(&self);
        if !r.passed {
            return Err(co_kind_error(&self.label, "pre-Lie", &r));
        }
        self.kind = CoKind::PreLie;
        Ok(self)
    }

    pub fn into_lie(mut self) -> Result<Self> {
        let r = check_lie_coalgebra(&self);
        if !r.passed {
            return Err(co_kind_error(&self.label, "Lie", &r));
        }
        self.kind = CoKind::Lie;
        Ok(self)
    }

    pub fn require_pre_lie(&self) -> Result<()> {
        if self.kind == CoKind::PreLie {
            return Ok(());
        }
        let r = check_prelie_coalgebra(self);
        if r.passed {
            Ok(())
        } else {
            Err(co_kind_error(&self.label, "pre-Lie", &r))
        }
    }
}

fn co_kind_error(label: &str, what: &str, r: &CheckReport) -> Error {
    Error::Kind(format!(
        "`{label}` is not a {what} coalgebra{}",
        r.first_failure()
            .map(|w| format!(" ({} fails at {:?})", w.identity, w.indices))
            .unwrap_or_default()
    ))
}

/// `(M⊗N)t = M t Nᵀ`.
pub fn tensor_apply<T: Scalar>(m: &Matrix<T>, n: &Matrix<T>, t: &Matrix<T>) -> Matrix<T> {
    &(m * t) * &n.transpose()
}

/// `(τ⊗id)X`.
pub fn swap12<T: Scalar>(x: &Tensor3<T>) -> Tensor3<T> {
    x.permute([1, 0, 2])
}

/// `σ(x⊗y⊗z) = z⊗x⊗y`, so `(σX)[p][q][r] = X[q][r][p]`.
pub fn cycle<T: Scalar>(x: &Tensor3<T>) -> Tensor3<T> {
    let [a, b, c] = x.dims();
    Tensor3::from_fn(c, a, b, |p, q, r| x[(q, r, p)].clone())
}

/// The coproduct dual to a product: `d_k^{ij} = c_{ij}^k`.
pub fn dualize_product<T: Scalar>(alg: &Algebra<T>) -> Coalgebra<T> {
    let n = alg.dim();
    let c = alg.product();
    Coalgebra {
        label: format!("{}*", alg.label()),
        coproduct: Tensor3::from_fn(n, n, n, |k, i, j| c[(i, j, k)].clone()),
        kind: CoKind::Unchecked,
    }
}

/// The product on `A*` dual to a coproduct: `c*_{ij}^k = d_k^{ij}`.
pub fn dual_algebra<T: Scalar>(co: &Coalgebra<T>) -> Algebra<T> {
    let n = co.dim();
    let d = co.coproduct();
    Algebra::from_basis_products(format!("{}*", co.label()), n, |i, j| {
        (0..n).map(|k| d[(k, i, j)].clone()).collect()
    })
}

/// `(Δ⊗id)Δ(x) − (id⊗Δ)Δ(x)` is symmetric in its first two factors.
pub fn check_prelie_coalgebra<T: Scalar>(co: &Coalgebra<T>) -> CheckReport {
    let mut ck = Checker::new("pre_lie_coalgebra");
    for i in 0..co.dim() {
        let d = co.basis_image(i);
        let x = co
            .apply_left(&d)
            .try_sub(&co.apply_right(&d))
            .expect("same shape");
        ck.eq("pre_lie_coalgebra", &[i], x.entries(), swap12(&x).entries());
    }
    ck.finish()
}

/// Antisymmetry `δ = −τδ` and co-Jacobi `(id + σ + σ²)(id⊗δ)δ = 0`.
pub fn check_lie_coalgebra<T: Scalar>(co: &Coalgebra<T>) -> CheckReport {
    let n = co.dim();
    let mut ck = Checker::new("lie_coalgebra");
    for i in 0..n {
        let d = co.basis_image(i);
        ck.eq(
            "co_antisymmetry",
            &[i],
            d.entries(),
            (-&d.transpose()).entries(),
        );
    }
    for i in 0..n {
        let x = co.apply_right(&co.basis_image(i));
        let s1 = cycle(&x);
        let s2 = cycle(&s1);
        let sum = x
            .try_add(&s1)
            .and_then(|t| t.try_add(&s2))
            .expect("same shape");
        ck.eq("co_jacobi", &[i], sum.entries(), Tensor3::cube(n).entries());
    }
    ck.finish()
}

/// `(S⊗S)Δ(x) = (S⊗id)Δ(S(x)) = (id⊗S)Δ(S(x))`, without the coalgebra
/// precondition.
pub(crate) fn coaveraging_report<T: Scalar>(
    co: &Coalgebra<T>,
    s: &Matrix<T>,
    name: &str,
) -> CheckReport {
    let n = co.dim();
    let id = Matrix::identity(n);
    let mut ck = Checker::new(name);
    for i in 0..n {
        let d = co.basis_image(i);
        let ds = co.apply(&s.column(i));
        let both = tensor_apply(s, s, &d);
        ck.eq(
            "coaveraging_left",
            &[i],
            both.entries(),
            tensor_apply(s, &id, &ds).entries(),
        );
        ck.eq(
            "coaveraging_right",
            &[i],
            both.entries(),
            tensor_apply(&id, s, &ds).entries(),
        );
    }
    ck.finish()
}

pub fn check_avg_coalgebra<T: Scalar>(co: &Coalgebra<T>, s: &Matrix<T>) -> Result<CheckReport> {
    square_of(s, co.dim(), "coalgebra operator")?;
    co.require_pre_lie()?;
    Ok(coaveraging_report(co, s, "averaging_coalgebra"))
}

/// `((A*, ∘*), Sᵀ)` from an averaging pre-Lie coalgebra `((A, Δ), S)`.
pub fn dualize_coalgebra<T: Scalar>(
    co: &Coalgebra<T>,
    s: &Matrix<T>,
) -> Result<AveragingAlgebra<T>> {
    let r = check_avg_coalgebra(co, s)?;
    if !r.passed {
        return Err(co_kind_error(co.label(), "averaging pre-Lie", &r));
    }
    AveragingAlgebra::new(dual_algebra(co), s.transpose())
}

/// `((A, Δ), S)` from `((A*, ∘*), S*)`: the inverse of [`dualize_coalgebra`].
pub fn dualize_averaging_algebra<T: Scalar>(
    avg: &AveragingAlgebra<T>,
) -> Result<(Coalgebra<T>, Matrix<T>)> {
    let co = dualize_product(avg.base());
    let s = avg.op().transpose();
    let r = coaveraging_report(&co, &s, "averaging_coalgebra");
    debug_assert!(r.passed, "dual of an averaging operator is coaveraging");
    Ok((co.into_pre_lie()?, s))
}
