//! Small named algebras over the rationals, shared by tests and the CLI.

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::{Algebra, AveragingAlgebra, Matrix, Rational};

/// 2-dim algebra with zero product.
pub fn z2() -> Algebra {
    Algebra::zero("Z2", 2)
}

/// 2-dim algebra with `e1∘e1 = e2` and every other product zero.
pub fn n2() -> Algebra {
    Algebra::from_entries("N2", 2, &[(0, 0, 1, Rational::one())]).expect("in range")
}

/// Upper-triangular 2x2 matrices with basis `e1 = E11, e2 = E12, e3 = E22`
/// and product `x∘y = R(x)y − yR(x) − xy`, where `R` keeps the diagonal.
/// Nonzero products: `e1∘e1 = −e1`, `e3∘e3 = −e3`, `e2∘e3 = e3∘e2 = −e2`.
pub fn ut2() -> Algebra {
    let m = -Rational::one();
    Algebra::from_entries(
        "UT2",
        3,
        &[
            (0, 0, 0, m.clone()),
            (2, 2, 2, m.clone()),
            (1, 2, 1, m.clone()),
            (2, 1, 1, m),
        ],
    )
    .expect("in range")
}

/// The diagonal projection `diag(1, 0, 1)` on [`ut2`].
pub fn ut2_r() -> Matrix {
    Matrix::diagonal(&[Rational::one(), Rational::zero(), Rational::one()])
}

pub fn ut2_avg() -> AveragingAlgebra {
    AveragingAlgebra::new(ut2(), ut2_r()).expect("R is averaging on UT2")
}

/// Standard symplectic form `[[0, 1], [-1, 0]]` on a 2-dim space.
pub fn symplectic2() -> Matrix {
    Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]])
}

/// Rota-Baxter operator `−id/2` of weight 1 on [`z2`].
pub fn sp2_rb() -> Matrix {
    Matrix::scalar(2, Rational::from_fraction(-1, 2))
}

/// Averaging operator `diag(1, −1)` on the quadratic Rota-Baxter [`z2`].
pub fn sp2_p() -> Matrix {
    Matrix::diagonal(&[Rational::one(), -Rational::one()])
}

/// 2-dim noncommutative pre-Lie algebra with `e1∘e2 = e2` and every other
/// product zero.
pub fn nc2() -> Algebra {
    Algebra::from_entries("NC2", 2, &[(0, 1, 1, Rational::one())]).expect("in range")
}

/// [`nc2`] with the identity operator; its induced Leibniz bracket is the
/// commutator, which is nonzero.
pub fn nc2_avg() -> AveragingAlgebra {
    AveragingAlgebra::new(nc2(), Matrix::identity(2)).expect("identity is averaging")
}

/// 3-dim pre-Lie algebra where `e1` acts as the identity on `span(e2, e3)`
/// from the left: `e1∘e2 = e2`, `e1∘e3 = e3`.
pub fn b3() -> Algebra {
    let one = Rational::one();
    Algebra::from_entries("B3", 3, &[(0, 1, 1, one.clone()), (0, 2, 2, one)])
        .expect("in range")
        .into_pre_lie()
        .expect("B3 is pre-Lie")
}

/// The coboundary coproduct of `r = e1⊗e1` on [`b3`]:
/// `Δ(e2) = −e1⊗e2`, `Δ(e3) = −e1⊗e3`. A bialgebra that is not balanced.
pub fn b3_coproduct() -> crate::Coalgebra {
    let m = -Rational::one();
    crate::Coalgebra::from_entries("B3*", 3, &[(1, 0, 1, m.clone()), (2, 0, 2, m)])
        .expect("in range")
}

/// The double `N2 ⋉ N2*` of the trivial bialgebra on [`n2`], 4-dim:
/// `e1∘e1 = e2`, `e4∘e1 = e3`. Quadratic for the standard double form.
pub fn d4() -> Algebra {
    let one = Rational::one();
    Algebra::from_entries("D4", 4, &[(0, 0, 1, one.clone()), (3, 0, 2, one)])
        .expect("in range")
        .into_pre_lie()
        .expect("D4 is pre-Lie")
}

/// `−π` with `π` the projection onto `span(e1, e2)` along `span(e3, e4)`.
/// Both spans are isotropic subalgebras of [`d4`], so this is a Rota-Baxter
/// operator of weight 1 compatible with the standard form.
pub fn d4_rb() -> Matrix {
    let m = -Rational::one();
    Matrix::diagonal(&[m.clone(), m, Rational::zero(), Rational::zero()])
}

/// `diag(0, 1, 0, −1)`: averaging on [`d4`], skew for the standard form,
/// commutes with [`d4_rb`] and squares to zero under the product.
pub fn d4_p() -> Matrix {
    Matrix::diagonal(&[
        Rational::zero(),
        Rational::one(),
        Rational::zero(),
        -Rational::one(),
    ])
}

/// An averaging operator on [`d4`] that is symmetric for the standard form.
pub fn d4_sym_p() -> Matrix {
    Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[-1, 1, 0, 0], &[0, 0, 1, -1], &[0, 0, 0, 1]])
}

/// `diag(0, 1, 0)`: an admissible map for [`ut2_avg`].
pub fn ut2_s() -> Matrix {
    Matrix::diagonal(&[Rational::zero(), Rational::one(), Rational::zero()])
}

/// A relative Rota-Baxter operator `UT2* → UT2` for the coregular
/// representation twisted by [`ut2_s`].
pub fn ut2_rrb() -> Matrix {
    Matrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])
}

/// `diag(1, 0, 1)` on `UT2*`; satisfies `T β = S T` for [`ut2_rrb`].
pub fn ut2_rrb_beta() -> Matrix {
    Matrix::diagonal(&[Rational::one(), Rational::zero(), Rational::one()])
}
