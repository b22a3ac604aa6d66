//! Algebras given by structure constants, and their base axiom checkers.
//!
//! `product[(i, j, k)] = c_{ij}^k` means `e_i ∘ e_j = sum_k c_{ij}^k e_k`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{basis_vector, contract_unchecked, vec_add, vec_sub, Matrix, Tensor3};
use crate::report::{CheckReport, Checker};
use crate::scalar::Scalar;

/// Which axioms an algebra has been verified to satisfy. Tags are only ever
/// set by running the matching checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Unchecked,
    PreLie,
    Lie,
    Leibniz,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<T> {
    label: String,
    product: Tensor3<T>,
    kind: Kind,
}

impl<T: Scalar> Algebra<T> {
    pub fn new(label: impl Into<String>, product: Tensor3<T>) -> Result<Self> {
        let [a, b, c] = product.dims();
        ensure_dim(a == b && b == c, || {
            format!("structure constants of shape {a}x{b}x{c} are not cubic")
        })?;
        Ok(Algebra {
            label: label.into(),
            product,
            kind: Kind::Unchecked,
        })
    }

    pub fn zero(label: impl Into<String>, dim: usize) -> Self {
        Algebra {
            label: label.into(),
            product: Tensor3::cube(dim),
            kind: Kind::Unchecked,
        }
    }

    /// Builds from sparse 0-based `(i, j, k, c_{ij}^k)` entries.
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

    /// Builds from the basis products `e_i ∘ e_j = f(i, j)`.
    pub fn from_basis_products(
        label: impl Into<String>,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<T>,
    ) -> Self {
        let mut t = Tensor3::cube(dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, v) in f(i, j).into_iter().enumerate() {
                    t[(i, j, k)] = v;
                }
            }
        }
        Algebra {
            label: label.into(),
            product: t,
            kind: Kind::Unchecked,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.product.dims()[0]
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn product(&self) -> &Tensor3<T> {
        &self.product
    }

    /// Forgets any earned tag.
    pub fn unchecked(mut self) -> Self {
        self.kind = Kind::Unchecked;
        self
    }

    /// `x ∘ y`; panics on length mismatch.
    pub fn mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        assert!(
            x.len() == self.dim() && y.len() == self.dim(),
            "vector length"
        );
        contract_unchecked(&self.product, x, y)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<T> {
        self.product.fiber(i, j)
    }

    /// `[x, y] = x∘y − y∘x`.
    pub fn commutator(&self, x: &[T], y: &[T]) -> Vec<T> {
        vec_sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Matrix of `L_{e_i} : y ↦ e_i ∘ y`, so `L_i[k][j] = c_{ij}^k`.
    pub fn left(&self, i: usize) -> Matrix<T> {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.product[(i, j, k)].clone())
    }

    /// Matrix of `R_{e_i} : y ↦ y ∘ e_i`, so `R_i[k][j] = c_{ji}^k`.
    pub fn right(&self, i: usize) -> Matrix<T> {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.product[(j, i, k)].clone())
    }

    pub fn left_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.lefts(), x, self.dim())
    }

    pub fn right_of(&self, x: &[T]) -> Matrix<T> {
        combine(&self.rights(), x, self.dim())
    }

    /// `ad_x = L_x − R_x`.
    pub fn ad_of(&self, x: &[T]) -> Matrix<T> {
        &self.left_of(x) - &self.right_of(x)
    }

    pub fn lefts(&self) -> Vec<Matrix<T>> {
        (0..self.dim()).map(|i| self.left(i)).collect()
    }

    pub fn rights(&self) -> Vec<Matrix<T>> {
        (0..self.dim()).map(|i| self.right(i)).collect()
    }

    /// Same constants with every product negated.
    pub fn negated(&self) -> Self {
        Algebra {
            label: self.label.clone(),
            product: self.product.scale(&-T::one()),
            kind: Kind::Unchecked,
        }
    }

    /// Transports the product along an invertible `g`: `x ∘' y = g⁻¹(gx ∘ gy)`.
    pub fn transport(&self, g: &Matrix<T>) -> Result<Self> {
        let n = self.dim();
        ensure_dim(g.rows() == n && g.cols() == n, || {
            "change of basis has the wrong size".into()
        })?;
        let gi = g
            .invert()?
            .ok_or_else(|| Error::PreconditionFailed("change of basis is singular".into()))?;
        let cols: Vec<Vec<T>> = (0..n).map(|i| g.column(i)).collect();
        Ok(Self::from_basis_products(self.label.clone(), n, |i, j| {
            gi.apply_unchecked(&self.mul(&cols[i], &cols[j]))
        }))
    }

    /// Direct product: the two factors annihilate each other.
    pub fn direct_sum(&self, other: &Self, label: impl Into<String>) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut t = Tensor3::cube(n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t[(i, j, k)] = self.product[(i, j, k)].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    t[(n + i, n + j, n + k)] = other.product[(i, j, k)].clone();
                }
            }
        }
        Algebra {
            label: label.into(),
            product: t,
            kind: Kind::Unchecked,
        }
    }

    fn tag_with(mut self, kind: Kind, report: CheckReport) -> Result<Self> {
        if report.passed {
            self.kind = kind;
            Ok(self)
        } else {
            Err(kind_error(&self.label, kind, &report))
        }
    }

    /// Verifies the pre-Lie identity and records the tag.
    pub fn into_pre_lie(self) -> Result<Self> {
        let r = check_pre_lie(&self);
        self.tag_with(Kind::PreLie, r)
    }

    pub fn into_lie(self) -> Result<Self> {
        let r = check_lie(&self);
        self.tag_with(Kind::Lie, r)
    }

    pub fn into_leibniz(self) -> Result<Self> {
        let r = check_leibniz(&self);
        self.tag_with(Kind::Leibniz, r)
    }

    /// Succeeds when the algebra is tagged pre-Lie or passes the check now.
    pub fn require_pre_lie(&self) -> Result<()> {
        self.require(Kind::PreLie, check_pre_lie)
    }

    pub fn require_lie(&self) -> Result<()> {
        self.require(Kind::Lie, check_lie)
    }

    /// Lie algebras are Leibniz, so either tag suffices.
    pub fn require_leibniz(&self) -> Result<()> {
        if self.kind == Kind::Lie {
            return Ok(());
        }
        self.require(Kind::Leibniz, check_leibniz)
    }

    fn require(&self, kind: Kind, check: fn(&Self) -> CheckReport) -> Result<()> {
        if self.kind == kind {
            return Ok(());
        }
        let r = check(self);
        if r.passed {
            Ok(())
        } else {
            Err(kind_error(&self.label, kind, &r))
        }
    }
}

fn kind_error(label: &str, kind: Kind, report: &CheckReport) -> Error {
    let detail = report
        .first_failure()
        .map(|w| format!(" ({} fails at {:?})", w.identity, w.indices))
        .unwrap_or_default();
    Error::Kind(format!("`{label}` is not a {kind:?} algebra{detail}"))
}

/// `sum_i x_i m_i`.
pub(crate) fn combine<T: Scalar>(ms: &[Matrix<T>], x: &[T], n: usize) -> Matrix<T> {
    let mut out = Matrix::zeros(n, n);
    for (m, c) in ms.iter().zip(x) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

pub fn check_pre_lie<T: Scalar>(alg: &Algebra<T>) -> CheckReport {
    let n = alg.dim();
    let mut ck = Checker::new("pre_lie");
    let prods = basis_products(alg);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ek = basis_vector(n, k);
                let lhs = vec_sub(
                    &alg.mul(&prods[i][j], &ek),
                    &alg.left(i).apply_unchecked(&prods[j][k]),
                );
                let rhs = vec_sub(
                    &alg.mul(&prods[j][i], &ek),
                    &alg.left(j).apply_unchecked(&prods[i][k]),
                );
                ck.eq("pre_lie", &[i, j, k], &lhs, &rhs);
            }
        }
    }
    ck.finish()
}

pub fn check_lie<T: Scalar>(alg: &Algebra<T>) -> CheckReport {
    let n = alg.dim();
    let mut ck = Checker::new("lie");
    let prods = basis_products(alg);
    for i in 0..n {
        for j in 0..n {
            let neg: Vec<T> = prods[j][i].iter().map(|v| -v.clone()).collect();
            ck.eq("antisymmetry", &[i, j], &prods[i][j], &neg);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
                let a = alg.left(i).apply_unchecked(&prods[j][k]);
                let b = alg.left(j).apply_unchecked(&prods[k][i]);
                let c = alg.left(k).apply_unchecked(&prods[i][j]);
                let sum = vec_add(&vec_add(&a, &b), &c);
                ck.eq("jacobi", &[i, j, k], &sum, &vec![T::zero(); n]);
            }
        }
    }
    ck.finish()
}

/// Left Leibniz identity `[[x,y],z] + [y,[x,z]] = [x,[y,z]]`.
pub fn check_leibniz<T: Scalar>(alg: &Algebra<T>) -> CheckReport {
    let n = alg.dim();
    let mut ck = Checker::new("leibniz");
    let prods = basis_products(alg);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ek = basis_vector(n, k);
                let lhs = vec_add(
                    &alg.mul(&prods[i][j], &ek),
                    &alg.left(j).apply_unchecked(&prods[i][k]),
                );
                let rhs = alg.left(i).apply_unchecked(&prods[j][k]);
                ck.eq("leibniz", &[i, j, k], &lhs, &rhs);
            }
        }
    }
    ck.finish()
}

fn basis_products<T: Scalar>(alg: &Algebra<T>) -> Vec<Vec<Vec<T>>> {
    let n = alg.dim();
    (0..n)
        .map(|i| (0..n).map(|j| alg.basis_product(i, j)).collect())
        .collect()
}

/// `P(x)∘P(y) = P(P(x)∘y)` (`averaging_left`) and `P(x)∘P(y) = P(x∘P(y))`
/// (`averaging_right`) on basis pairs.
pub fn check_averaging<T: Scalar>(alg: &Algebra<T>, p: &Matrix<T>) -> Result<CheckReport> {
    square_of(p, alg.dim(), "averaging operator")?;
    Ok(averaging_report(alg, p, "averaging"))
}

pub(crate) fn averaging_report<T: Scalar>(
    alg: &Algebra<T>,
    p: &Matrix<T>,
    name: &str,
) -> CheckReport {
    let n = alg.dim();
    let mut ck = Checker::new(name);
    let pe: Vec<Vec<T>> = (0..n).map(|i| p.column(i)).collect();
    for i in 0..n {
        let ei = basis_vector(n, i);
        for j in 0..n {
            let ej = basis_vector(n, j);
            let both = alg.mul(&pe[i], &pe[j]);
            let left = p.apply_unchecked(&alg.mul(&pe[i], &ej));
            let right = p.apply_unchecked(&alg.mul(&ei, &pe[j]));
            ck.eq("averaging_left", &[i, j], &both, &left);
            ck.eq("averaging_right", &[i, j], &both, &right);
        }
    }
    ck.finish()
}

pub(crate) fn square_of<T: Scalar>(m: &Matrix<T>, n: usize, what: &str) -> Result<()> {
    ensure_dim(m.rows() == n && m.cols() == n, || {
        format!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols())
    })
}

/// An algebra (pre-Lie or Lie) with a verified averaging operator.
#[derive(Clone, Debug, PartialEq)]
pub struct AveragingAlgebra<T> {
    base: Algebra<T>,
    op: Matrix<T>,
}

impl<T: Scalar> AveragingAlgebra<T> {
    /// Verifies that the base is pre-Lie (or Lie) and `op` is averaging.
    pub fn new(base: Algebra<T>, op: Matrix<T>) -> Result<Self> {
        let base = match base.kind() {
            Kind::PreLie | Kind::Lie => base,
            _ => match base.clone().into_pre_lie() {
                Ok(b) => b,
                Err(e) => base.into_lie().map_err(|_| e)?,
            },
        };
        let r = check_averaging(&base, &op)?;
        if !r.passed {
            return Err(Error::Kind(format!(
                "operator is not averaging on `{}`{}",
                base.label(),
                r.first_failure()
                    .map(|w| format!(" ({} fails at {:?})", w.identity, w.indices))
                    .unwrap_or_default()
            )));
        }
        Ok(AveragingAlgebra { base, op })
    }

    pub fn base(&self) -> &Algebra<T> {
        &self.base
    }

    pub fn op(&self) -> &Matrix<T> {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn label(&self) -> &str {
        self.base.label()
    }

    pub fn into_parts(self) -> (Algebra<T>, Matrix<T>) {
        (self.base, self.op)
    }
}

/// Commutator algebra of a pre-Lie algebra.
pub fn sub_adjacent_lie<T: Scalar>(alg: &Algebra<T>) -> Result<Algebra<T>> {
    alg.require_pre_lie()?;
    let n = alg.dim();
    let t = Tensor3::from_fn(n, n, n, |i, j, k| {
        alg.product()[(i, j, k)].clone() - &alg.product()[(j, i, k)]
    });
    Algebra::new(format!("lie({})", alg.label()), t)?.into_lie()
}

/// `[x, y]_P = P(x)∘y − y∘P(x)`.
pub fn induced_leibniz<T: Scalar>(avg: &AveragingAlgebra<T>) -> Result<Algebra<T>> {
    let alg = avg.base();
    let n = alg.dim();
    let raw = Algebra::from_basis_products(format!("leibniz({})", alg.label()), n, |i, j| {
        let px = avg.op().column(i);
        let ej = basis_vector(n, j);
        alg.commutator(&px, &ej)
    });
    raw.into_leibniz()
}

/// Product and operator compatibility of `f` between two algebras with operators.
pub fn check_homomorphism<T: Scalar>(
    src: &AveragingAlgebra<T>,
    dst: &AveragingAlgebra<T>,
    f: &Matrix<T>,
) -> Result<CheckReport> {
    let mut r = check_algebra_homomorphism(src.base(), dst.base(), f)?;
    let fp = f * src.op();
    let pf = dst.op() * f;
    let mut ck = Checker::new("operator");
    for j in 0..src.dim() {
        ck.eq("hom_operator", &[j], &fp.column(j), &pf.column(j));
    }
    r = r.with_part(ck.finish());
    r.name = "homomorphism".into();
    Ok(r)
}

/// `f(e_i∘e_j) = f(e_i)∘'f(e_j)` only.
pub fn check_algebra_homomorphism<T: Scalar>(
    src: &Algebra<T>,
    dst: &Algebra<T>,
    f: &Matrix<T>,
) -> Result<CheckReport> {
    ensure_dim(f.rows() == dst.dim() && f.cols() == src.dim(), || {
        format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim(),
            src.dim()
        )
    })?;
    let mut ck = Checker::new("product");
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = f.apply_unchecked(&src.basis_product(i, j));
            let rhs = dst.mul(&f.column(i), &f.column(j));
            ck.eq("hom_product", &[i, j], &lhs, &rhs);
        }
    }
    Ok(CheckReport::all_of(
        "algebra_homomorphism",
        vec![ck.finish()],
    ))
}

/// Limits on exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_dim: usize,
    /// Largest number of candidates that may be enumerated.
    pub budget: u128,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_dim: 3,
            budget: 1 << 20,
        }
    }
}

/// `|candidates|^slots`, saturating.
pub(crate) fn search_size(candidates: usize, slots: usize) -> u128 {
    let mut size: u128 = 1;
    for _ in 0..slots {
        size = size.saturating_mul(candidates as u128);
    }
    size
}

pub(crate) fn ensure_budget(size: u128, limits: &SearchLimits) -> Result<()> {
    if size > limits.budget {
        Err(Error::SearchSpaceTooLarge {
            size,
            budget: limits.budget,
        })
    } else {
        Ok(())
    }
}

/// Calls `visit` with every assignment of `slots` values from `candidates`,
/// in lexicographic order of candidate positions.
pub(crate) fn for_each_assignment<T: Scalar>(
    candidates: &[T],
    slots: usize,
    mut visit: impl FnMut(&[T]),
) {
    if candidates.is_empty() && slots > 0 {
        return;
    }
    let mut idx = vec![0usize; slots];
    let mut vals: Vec<T> = vec![candidates.first().cloned().unwrap_or_else(T::zero); slots];
    loop {
        visit(&vals);
        let mut pos = slots;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < candidates.len() {
                vals[pos] = candidates[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            vals[pos] = candidates[0].clone();
        }
    }
}

/// All `dim × dim` matrices with entries from `candidates` that are
/// averaging operators on `alg`.
pub fn search_averaging_operators<T: Scalar>(
    alg: &Algebra<T>,
    candidates: &[T],
    limits: &SearchLimits,
) -> Result<Vec<Matrix<T>>> {
    let n = alg.dim();
    if n > limits.max_dim {
        return Err(Error::PreconditionFailed(format!(
            "dimension {n} exceeds the search bound {}",
            limits.max_dim
        )));
    }
    ensure_budget(search_size(candidates.len(), n * n), limits)?;
    let mut found = Vec::new();
    for_each_assignment(candidates, n * n, |vals| {
        let p = Matrix::from_fn(n, n, |i, j| vals[i * n + j].clone());
        if averaging_report(alg, &p, "averaging").passed {
            found.push(p);
        }
    });
    Ok(found)
}

/// All pre-Lie structure-constant tensors of dimension `dim` with entries
/// from `candidates`, tagged pre-Lie.
pub fn search_pre_lie_algebras<T: Scalar>(
    dim: usize,
    candidates: &[T],
    limits: &SearchLimits,
) -> Result<Vec<Algebra<T>>> {
    if dim > limits.max_dim {
        return Err(Error::PreconditionFailed(format!(
            "dimension {dim} exceeds the search bound {}",
            limits.max_dim
        )));
    }
    let slots = dim * dim * dim;
    ensure_budget(search_size(candidates.len(), slots), limits)?;
    let mut found = Vec::new();
    let mut count = 0usize;
    for_each_assignment(candidates, slots, |vals| {
        let t = Tensor3::from_fn(dim, dim, dim, |i, j, k| {
            vals[(i * dim + j) * dim + k].clone()
        });
        let alg = Algebra {
            label: format!("found{count}"),
            product: t,
            kind: Kind::Unchecked,
        };
        count += 1;
        if let Ok(a) = alg.into_pre_lie() {
            found.push(a);
        }
    });
    Ok(found)
}
