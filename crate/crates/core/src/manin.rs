//! Skew-symmetric bilinear forms, quadratic (averaging) pre-Lie algebras,
//! Manin triples and their correspondence with averaging pre-Lie bialgebras.

use serde::{Deserialize, Serialize};

use crate::algebra::{square_of, Algebra, AveragingAlgebra};
use crate::bialgebra::{bialgebra_matched_pair, check_avg_prelie_bialgebra, AvgBialgebra};
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Tensor3};
use crate::matched_pair::build_double;
use crate::report::{CheckReport, Checker};
use crate::representation::{
    check_rep_homomorphism, coregular, failed_kind, regular_representation, AvgRepresentation,
};
use crate::scalar::Scalar;

/// `matrix[(i, j)] = ω(e_i, e_j)`. The flags are computed on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<T> {
    matrix: Matrix<T>,
    skew: bool,
    nondegenerate: bool,
}

impl<T: Scalar> BilinearForm<T> {
    pub fn new(matrix: Matrix<T>) -> Result<Self> {
        square_of(&matrix, matrix.rows(), "form matrix")?;
        let skew = matrix.is_skew();
        let nondegenerate = matrix.invert()?.is_some();
        Ok(BilinearForm {
            matrix,
            skew,
            nondegenerate,
        })
    }

    /// `ω(x+ξ, y+η) = ⟨ξ,y⟩ − ⟨η,x⟩` on `A ⊕ A*`, with `A*` in the dual basis.
    pub fn standard_double(n: usize) -> Self {
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m[(n + i, i)] = T::one();
            m[(i, n + i)] = -T::one();
        }
        BilinearForm {
            matrix: m,
            skew: true,
            nondegenerate: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn is_skew(&self) -> bool {
        self.skew
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn eval(&self, x: &[T], y: &[T]) -> T {
        dot(x, &self.matrix.apply_unchecked(y))
    }
}

/// Skewness, nondegeneracy and invariance `ω(x∘y, z) + ω(y, x∘z − z∘x) = 0`;
/// with an operator, also `ω(Px, y) = ω(x, Py)`.
pub fn check_quadratic<T: Scalar>(
    alg: &Algebra<T>,
    omega: &BilinearForm<T>,
    p: Option<&Matrix<T>>,
) -> Result<CheckReport> {
    alg.require_pre_lie()?;
    let n = alg.dim();
    square_of(omega.matrix(), n, "form matrix")?;
    let mut ck = Checker::new("quadratic");
    if !omega.is_skew() {
        ck.flag("skew", &[]);
    }
    if !omega.is_nondegenerate() {
        ck.flag("nondegenerate", &[]);
    }
    let om = omega.matrix();
    // ω(v, e_k) for each product vector v
    let prods: Vec<Vec<Vec<T>>> = (0..n)
        .map(|i| (0..n).map(|j| alg.basis_product(i, j)).collect())
        .collect();
    let pair = |v: &[T], k: usize| -> T { dot(v, &om.column(k)) };
    let pair_rev = |k: usize, v: &[T]| -> T { dot(&om.row(k), v) };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = pair(&prods[i][j], k);
                let b = pair_rev(j, &prods[i][k]) - pair_rev(j, &prods[k][i]);
                ck.eq("invariant", &[i, j, k], &[a + b], &[T::zero()]);
            }
        }
    }
    if let Some(p) = p {
        square_of(p, n, "operator")?;
        for i in 0..n {
            for j in 0..n {
                let a = pair(&p.column(i), j);
                let b = pair_rev(i, &p.column(j));
                ck.eq("operator_symmetric", &[i, j], &[a], &[b]);
            }
        }
    }
    Ok(ck.finish())
}

/// `⟨ω♯(x), y⟩ = ω(x, y)`; in the dual basis `ω♯ = Ωᵀ`.
pub fn omega_sharp<T: Scalar>(omega: &BilinearForm<T>) -> Result<Matrix<T>> {
    if !omega.is_nondegenerate() {
        return Err(Error::SingularForm);
    }
    Ok(omega.matrix().transpose())
}

/// Whether `ω♯` intertwines `((A, L, R), P)` with `((A*, L* − R*, −R*), P*)`.
pub fn verify_rep_isomorphism<T: Scalar>(
    avg: &AveragingAlgebra<T>,
    omega: &BilinearForm<T>,
) -> Result<CheckReport> {
    avg.base().require_pre_lie()?;
    square_of(omega.matrix(), avg.dim(), "form matrix")?;
    let f = omega_sharp(omega)?;
    let reg = regular_representation(avg);
    let co = AvgRepresentation {
        rep: coregular(avg.base()),
        alpha: avg.op().transpose(),
    };
    check_rep_homomorphism(&reg, &co, &f)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ManinTriple<T> {
    pub total: AveragingAlgebra<T>,
    pub omega: BilinearForm<T>,
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

fn validate_partition(n: usize, part_a: &[usize], part_b: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &i in part_a.iter().chain(part_b) {
        if i >= n {
            return Err(Error::Partition(format!("index {i} outside dimension {n}")));
        }
        if seen[i] {
            return Err(Error::Partition(format!("index {i} appears twice")));
        }
        seen[i] = true;
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::Partition(format!("index {i} is in neither part")));
    }
    Ok(())
}

/// Quadratic with the operator; both parts closed under the product and the
/// operator; both isotropic; equal halves of an even dimension.
pub fn check_manin_triple<T: Scalar>(
    total: &AveragingAlgebra<T>,
    omega: &BilinearForm<T>,
    part_a: &[usize],
    part_b: &[usize],
) -> Result<CheckReport> {
    let n = total.dim();
    validate_partition(n, part_a, part_b)?;
    let quad = check_quadratic(total.base(), omega, Some(total.op()))?;
    let mut ck = Checker::new("manin_split");
    if !n.is_multiple_of(2) || part_a.len() != part_b.len() {
        ck.flag("half_dimension", &[part_a.len(), part_b.len()]);
    }
    let alg = total.base();
    let p = total.op();
    for (part, tag) in [(part_a, "first"), (part_b, "second")] {
        let outside: Vec<usize> = (0..n).filter(|k| !part.contains(k)).collect();
        let zeros = vec![T::zero(); outside.len()];
        for &i in part {
            for &j in part {
                let v = alg.basis_product(i, j);
                let out: Vec<T> = outside.iter().map(|&k| v[k].clone()).collect();
                ck.eq(&format!("closed_{tag}"), &[i, j], &out, &zeros);
                let w = omega.matrix()[(i, j)].clone();
                ck.eq(&format!("isotropic_{tag}"), &[i, j], &[w], &[T::zero()]);
            }
            let pi = p.column(i);
            let out: Vec<T> = outside.iter().map(|&k| pi[k].clone()).collect();
            ck.eq(&format!("operator_closed_{tag}"), &[i], &out, &zeros);
        }
    }
    Ok(CheckReport::all_of("manin_triple", vec![quad, ck.finish()]))
}

/// The double `A ⋈ A*` with `P ⊕ Sᵀ` and the standard form.
/// Requires `S = P`, the case in which the correspondence holds.
pub fn bialgebra_to_manin<T: Scalar>(bi: &AvgBialgebra<T>) -> Result<ManinTriple<T>> {
    if bi.s != bi.p {
        return Err(Error::PreconditionFailed(
            "the Manin-triple correspondence needs the coalgebra operator to equal the algebra operator".into(),
        ));
    }
    let r = check_avg_prelie_bialgebra(bi)?;
    if !r.passed {
        return Err(failed_kind("not an averaging pre-Lie bialgebra", &r));
    }
    let n = bi.dim();
    let total = build_double(&bialgebra_matched_pair(bi)?)?;
    Ok(ManinTriple {
        total,
        omega: BilinearForm::standard_double(n),
        part_a: (0..n).collect(),
        part_b: (n..2 * n).collect(),
    })
}

/// Sign of the product read off the first part.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProductSign {
    /// `x∘y = −x∘_𝒜 y`.
    #[default]
    Negate,
    /// `x∘y = x∘_𝒜 y`; inverse of [`bialgebra_to_manin`] on the nose.
    Keep,
}

/// Identifies the second part with `A*` through `⟨ξ, x⟩ = ω(ξ, x)`, reads the
/// product and operator of `A` from the first part, and the coproduct and
/// coalgebra operator by dualizing the second.
pub fn manin_to_bialgebra<T: Scalar>(
    mt: &ManinTriple<T>,
    sign: ProductSign,
) -> Result<AvgBialgebra<T>> {
    let r = check_manin_triple(&mt.total, &mt.omega, &mt.part_a, &mt.part_b)?;
    if !r.passed {
        return Err(failed_kind("not a Manin triple", &r));
    }
    let n = mt.part_a.len();
    let big = 2 * n;
    let om = mt.omega.matrix();
    // pairing[p][i] = ω(f_p, e_i)
    let pairing = Matrix::from_fn(n, n, |p, i| om[(mt.part_b[p], mt.part_a[i])].clone());
    let inv = pairing.invert()?.ok_or(Error::SingularForm)?;
    // Columns: e_{a_i}, then the preimage of the dual basis ε^j.
    let mut g = Matrix::zeros(big, big);
    for (i, &a) in mt.part_a.iter().enumerate() {
        g[(a, i)] = T::one();
    }
    for j in 0..n {
        for (p, &b) in mt.part_b.iter().enumerate() {
            g[(b, n + j)] = inv[(j, p)].clone();
        }
    }
    let g_inv = g.invert()?.ok_or(Error::SingularForm)?;
    let moved = mt.total.base().transport(&g)?;
    let op = &(&g_inv * mt.total.op()) * &g;
    let c = moved.product();
    let scale = match sign {
        ProductSign::Negate => -T::one(),
        ProductSign::Keep => T::one(),
    };
    let label = mt.total.label().to_string();
    let alg = Algebra::new(
        format!("{label}|A"),
        Tensor3::from_fn(n, n, n, |i, j, k| c[(i, j, k)].clone() * &scale),
    )?;
    let co = Coalgebra::new(
        format!("{label}|A*"),
        Tensor3::from_fn(n, n, n, |k, i, j| c[(n + i, n + j, n + k)].clone()),
    )?;
    let p = op.block(0, 0, n, n);
    let s = op.block(n, n, n, n).transpose();
    AvgBialgebra::new(alg, p, co, s)
}
