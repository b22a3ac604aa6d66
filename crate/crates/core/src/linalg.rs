//! Dense exact matrices, rank-3 tensors and linear solving.
//!
//! A matrix used as a linear map sends `e_j` to `sum_i m[i][j] e_i`; columns
//! are images. Vectors are plain `Vec<T>` in basis coordinates.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{dim_mismatch, ensure_dim, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrices double as linear maps.
pub type LinearMap<T> = Matrix<T>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn scalar(n: usize, value: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        ensure_dim(rows.iter().all(|row| row.len() == c), || {
            "ragged rows".to_string()
        })?;
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds from integer rows; panics on ragged input. Handy for fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
            .collect();
        Self::from_rows(v).expect("ragged rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, columns: &[Vec<T>]) -> Self {
        Self::from_fn(n_rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.cols == other.rows, || {
            format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )
        })?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a.clone() * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        ensure_dim(self.rows == other.rows && self.cols == other.cols, || {
            format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )
        })
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s).collect(),
        }
    }

    /// `M v`.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        ensure_dim(v.len() == self.cols, || {
            format!(
                "vector of length {} for a {}x{} map",
                v.len(),
                self.rows,
                self.cols
            )
        })?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let m = &self[(i, j)];
                if !m.is_zero() {
                    *o += &(m.clone() * x);
                }
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r + i, c + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r + i, c + j)].clone())
    }

    pub fn solve_linear(&self, rhs: &Self) -> Result<Option<Solution<T>>> {
        ensure_dim(self.rows == rhs.rows, || {
            format!("{} equations but {} right-hand rows", self.rows, rhs.rows)
        })?;
        Ok(solve(self, rhs))
    }

    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let rhs = Self::zeros(self.rows, 0);
        solve(self, &rhs)
            .expect("homogeneous systems are consistent")
            .nullspace
    }

    pub fn rank(&self) -> usize {
        let rhs = Self::zeros(self.rows, 0);
        bareiss_echelon(self, &rhs).pivots.len()
    }

    pub fn determinant(&self) -> Result<T> {
        ensure_dim(self.is_square(), || {
            "determinant of a non-square matrix".into()
        })?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let e = bareiss_echelon(self, &Self::zeros(n, 0));
        if e.pivots.len() < n {
            return Ok(T::zero());
        }
        // The last Bareiss pivot equals the determinant up to the swap sign.
        let d = e.work[(n - 1, n - 1)].clone();
        Ok(if e.swaps % 2 == 1 { -d } else { d })
    }

    /// Exact inverse, or `None` when singular.
    pub fn invert(&self) -> Result<Option<Self>> {
        ensure_dim(self.is_square(), || {
            format!("cannot invert a {}x{} matrix", self.rows, self.cols)
        })?;
        let sol = solve(self, &Self::identity(self.rows));
        Ok(sol.filter(|s| s.nullspace.is_empty()).map(|s| s.particular))
    }
}

/// Result of [`Matrix::solve_linear`]: `a * particular = rhs`, and every
/// vector in `nullspace` is killed by `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<T> {
    pub particular: Matrix<T>,
    pub nullspace: Vec<Vec<T>>,
}

struct Echelon<T> {
    /// Augmented `[a | rhs]` after elimination.
    work: Matrix<T>,
    /// Pivot column of each leading row.
    pivots: Vec<usize>,
    swaps: usize,
}

// Fraction-free forward elimination on the augmented matrix. Each update
// `a_ij <- (p a_ij - a_ic a_rj) / prev` divides exactly when the input is
// integral, which keeps intermediate numerators small; over a field it is an
// invertible row operation either way.
fn bareiss_echelon<T: Scalar>(a: &Matrix<T>, rhs: &Matrix<T>) -> Echelon<T> {
    let m = a.rows;
    let n = a.cols;
    let total = n + rhs.cols;
    let mut w = Matrix::zeros(m, total);
    w.set_block(0, 0, a);
    w.set_block(0, n, rhs);
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !w[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..total {
                w.data.swap(p * total + j, r * total + j);
            }
            swaps += 1;
        }
        let piv = w[(r, c)].clone();
        for i in r + 1..m {
            let lead = w[(i, c)].clone();
            for j in c + 1..total {
                let v = (piv.clone() * &w[(i, j)] - lead.clone() * &w[(r, j)]) / &prev;
                w[(i, j)] = v;
            }
            w[(i, c)] = T::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Echelon {
        work: w,
        pivots,
        swaps,
    }
}

fn solve<T: Scalar>(a: &Matrix<T>, rhs: &Matrix<T>) -> Option<Solution<T>> {
    let n = a.cols;
    let k = rhs.cols;
    let Echelon {
        work: mut w,
        pivots,
        ..
    } = bareiss_echelon(a, rhs);
    let rank = pivots.len();
    for i in rank..a.rows {
        if (n..n + k).any(|j| !w[(i, j)].is_zero()) {
            return None;
        }
    }
    // Back-substitute to reduced row echelon form.
    for (r, &c) in pivots.iter().enumerate().rev() {
        let piv = w[(r, c)].clone();
        for j in c..n + k {
            let v = w[(r, j)].clone() / &piv;
            w[(r, j)] = v;
        }
        for i in 0..r {
            let f = w[(i, c)].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..n + k {
                let v = w[(i, j)].clone() - f.clone() * &w[(r, j)];
                w[(i, j)] = v;
            }
        }
    }
    let mut particular = Matrix::zeros(n, k);
    for (r, &c) in pivots.iter().enumerate() {
        for j in 0..k {
            particular[(c, j)] = w[(r, n + j)].clone();
        }
    }
    let mut nullspace = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![T::zero(); n];
        v[f] = T::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -w[(r, f)].clone();
        }
        nullspace.push(v);
    }
    Some(Solution {
        particular,
        nullspace,
    })
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; the `try_*`/`mat_mul` methods report it.
impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.mat_mul(rhs).expect("matrix product shape")
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_add(rhs).expect("matrix sum shape")
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_sub(rhs).expect("matrix difference shape")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense rank-3 array indexed `(i, j, k)`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Tensor3<T> {
    dims: [usize; 3],
    data: Vec<T>,
}

impl<T: Scalar> Tensor3<T> {
    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            dims: [d1, d2, d3],
            data: vec![T::zero(); d1 * d2 * d3],
        }
    }

    pub fn cube(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn from_fn(
        d1: usize,
        d2: usize,
        d3: usize,
        mut f: impl FnMut(usize, usize, usize) -> T,
    ) -> Self {
        let mut data = Vec::with_capacity(d1 * d2 * d3);
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d3 {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 {
            dims: [d1, d2, d3],
            data,
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// The vector `t[i][j][..]`.
    pub fn fiber(&self, i: usize, j: usize) -> Vec<T> {
        let start = (i * self.dims[1] + j) * self.dims[2];
        self.data[start..start + self.dims[2]].to_vec()
    }

    /// The matrix `t[i][..][..]`.
    pub fn slice(&self, i: usize) -> Matrix<T> {
        Matrix::from_fn(self.dims[1], self.dims[2], |j, k| self[(i, j, k)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(|a| a.clone() * s).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dims == other.dims, || "tensor shapes differ".into())?;
        Ok(Tensor3 {
            dims: self.dims,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dims == other.dims, || "tensor shapes differ".into())?;
        Ok(Tensor3 {
            dims: self.dims,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    /// Reorders axes so that output axis `p` is input axis `perm[p]`.
    /// `permute([1, 0, 2])` swaps the first two factors.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let d = self.dims;
        let od = [d[perm[0]], d[perm[1]], d[perm[2]]];
        Self::from_fn(od[0], od[1], od[2], |a, b, c| {
            let out = [a, b, c];
            let mut src = [0; 3];
            for (pos, &ax) in perm.iter().enumerate() {
                src[ax] = out[pos];
            }
            self[(src[0], src[1], src[2])].clone()
        })
    }
}

impl<T> Index<(usize, usize, usize)> for Tensor3<T> {
    type Output = T;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &T {
        let [a, b, c] = self.dims;
        assert!(i < a && j < b && k < c, "index ({i},{j},{k}) out of range");
        &self.data[(i * b + j) * c + k]
    }
}

impl<T> IndexMut<(usize, usize, usize)> for Tensor3<T> {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut T {
        let [a, b, c] = self.dims;
        assert!(i < a && j < b && k < c, "index ({i},{j},{k}) out of range");
        &mut self.data[(i * b + j) * c + k]
    }
}

/// `(x∘y)_k = sum_{i,j} x_i y_j t[i][j][k]`.
pub fn contract<T: Scalar>(product: &Tensor3<T>, x: &[T], y: &[T]) -> Result<Vec<T>> {
    let [a, b, _] = product.dims;
    if x.len() != a || y.len() != b {
        return Err(dim_mismatch(format!(
            "contracting vectors of length {} and {} against a {}x{}x{} tensor",
            x.len(),
            y.len(),
            a,
            b,
            product.dims[2]
        )));
    }
    Ok(contract_unchecked(product, x, y))
}

pub(crate) fn contract_unchecked<T: Scalar>(product: &Tensor3<T>, x: &[T], y: &[T]) -> Vec<T> {
    let [a, b, c] = product.dims;
    let mut out = vec![T::zero(); c];
    for i in 0..a {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..b {
            if y[j].is_zero() {
                continue;
            }
            let w = x[i].clone() * &y[j];
            for (k, o) in out.iter_mut().enumerate() {
                let t = &product[(i, j, k)];
                if !t.is_zero() {
                    *o += &(w.clone() * t);
                }
            }
        }
    }
    out
}

pub fn basis_vector<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

pub fn vec_add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
}

pub fn vec_sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

pub fn vec_scale<T: Scalar>(a: &[T], s: &T) -> Vec<T> {
    a.iter().map(|x| x.clone() * s).collect()
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type Q = Ratio<BigInt>;
    type M = Matrix<Q>;

    fn q(n: i64, d: i64) -> Q {
        Q::from_fraction(n, d)
    }

    #[test]
    fn identity_times_identity() {
        let i = M::identity(2);
        assert_eq!(i.mat_mul(&i).unwrap(), i);
    }

    #[test]
    fn inverse_pair_multiplies_to_identity() {
        let a = M::from_rows(vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(1, 3)]]).unwrap();
        let b = M::from_i64_rows(&[&[2, 0], &[0, 3]]);
        assert_eq!(a.mat_mul(&b).unwrap(), M::identity(2));
    }

    #[test]
    fn hand_multiplication() {
        let a = M::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let b = M::from_i64_rows(&[&[1, 2], &[0, 1]]);
        assert_eq!(
            a.mat_mul(&b).unwrap(),
            M::from_i64_rows(&[&[1, 3], &[0, 1]])
        );
    }

    #[test]
    fn mismatched_product_is_an_error() {
        let a = M::zeros(2, 3);
        assert!(a.mat_mul(&a).is_err());
    }

    #[test]
    fn solve_identity_system() {
        let v = M::from_i64_rows(&[&[4], &[-1], &[7]]);
        let s = M::identity(3).solve_linear(&v).unwrap().unwrap();
        assert_eq!(s.particular, v);
        assert!(s.nullspace.is_empty());
    }

    #[test]
    fn solve_zero_system_has_full_nullspace() {
        let s = M::zeros(2, 2)
            .solve_linear(&M::zeros(2, 1))
            .unwrap()
            .unwrap();
        assert!(s.particular.is_zero());
        assert_eq!(s.nullspace.len(), 2);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let a = M::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let rhs = M::from_i64_rows(&[&[1], &[2]]);
        assert!(a.solve_linear(&rhs).unwrap().is_none());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(M::identity(4).invert().unwrap().unwrap(), M::identity(4));
        let j = M::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        let ji = j.invert().unwrap().unwrap();
        assert_eq!(ji, M::from_i64_rows(&[&[0, -1], &[1, 0]]));
        assert_eq!(&j * &ji, M::identity(2));
        assert!(M::from_i64_rows(&[&[1, 1], &[1, 1]])
            .invert()
            .unwrap()
            .is_none());
        assert!(M::zeros(2, 3).invert().is_err());
    }

    #[test]
    fn determinant_and_rank() {
        let a = M::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant().unwrap(), q(18, 1));
        let swapped = M::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(swapped.determinant().unwrap(), q(-1, 1));
        assert_eq!(M::from_i64_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn contraction_of_zero_vector_is_zero() {
        let mut t = Tensor3::<Q>::cube(2);
        t[(0, 1, 1)] = q(3, 1);
        let x = vec![q(0, 1); 2];
        let y = vec![q(1, 1), q(2, 1)];
        assert!(contract(&t, &x, &y).unwrap().iter().all(Zero::is_zero));
        assert_eq!(contract(&t, &y, &y).unwrap(), vec![q(0, 1), q(6, 1)]);
        assert!(contract(&t, &[q(1, 1)], &y).is_err());
    }

    #[test]
    fn permute_swaps_axes() {
        let t = Tensor3::<Q>::from_fn(2, 3, 4, |i, j, k| q((100 * i + 10 * j + k) as i64, 1));
        let s = t.permute([1, 0, 2]);
        assert_eq!(s.dims(), [3, 2, 4]);
        assert_eq!(s[(2, 1, 3)], t[(1, 2, 3)]);
        let c = t.permute([2, 0, 1]);
        assert_eq!(c.dims(), [4, 2, 3]);
        assert_eq!(c[(3, 1, 2)], t[(1, 2, 3)]);
    }
}
