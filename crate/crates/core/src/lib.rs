//! Exact verification and construction of averaging pre-Lie structures.
//!
//! Everything is generic over a [`Scalar`] field; the aliases at the crate
//! root fix it to arbitrary-precision rationals.

// index loops follow the tensor notation
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bialgebra;
pub mod coalgebra;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod manin;
pub mod matched_pair;
pub mod report;
pub mod representation;
pub mod rota_baxter;
pub mod scalar;
pub mod yang_baxter;

pub use error::{Error, Result};
pub use report::{CheckReport, Witness};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Matrix = linalg::Matrix<Rational>;
pub type Tensor3 = linalg::Tensor3<Rational>;
pub type Algebra = algebra::Algebra<Rational>;
pub type AveragingAlgebra = algebra::AveragingAlgebra<Rational>;
pub type Representation = representation::Representation<Rational>;
pub type AvgRepresentation = representation::AvgRepresentation<Rational>;
pub type LeibnizRepresentation = representation::LeibnizRepresentation<Rational>;
pub type MatchedPairPreLie = matched_pair::MatchedPairPreLie<Rational>;
pub type MatchedPairLeibniz = matched_pair::MatchedPairLeibniz<Rational>;
pub type Coalgebra = coalgebra::Coalgebra<Rational>;
pub type AvgBialgebra = bialgebra::AvgBialgebra<Rational>;
pub type LieBialgebra = bialgebra::LieBialgebra<Rational>;
pub type BilinearForm = manin::BilinearForm<Rational>;
pub type ManinTriple = manin::ManinTriple<Rational>;
pub type RTensor = yang_baxter::RTensor<Rational>;
pub type RBOperator = rota_baxter::RBOperator<Rational>;
pub type QuadraticRB = rota_baxter::QuadraticRB<Rational>;
pub type RelativeRB = rota_baxter::RelativeRB<Rational>;
