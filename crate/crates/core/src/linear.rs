//! Exact rational linear algebra.
//!
//! Scalars are arbitrary-precision rationals. Matrices act on column
//! vectors: `m.apply(v)[i] = Σ_j m[i][j] v[j]`, so the matrix of a linear
//! map `f` has the image of `e_j` in column `j`. The matrix of the dual map
//! `f*` in the dual basis is the transpose.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector in a fixed basis.
pub type Vector = Vec<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn vec_from_i64(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(s: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| s * x).collect()
}

/// `acc += s * a`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, a: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += s * y;
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, s: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j].clone())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
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

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| s * x).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn try_apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.apply(v))
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (r0, c0) = (a.rows, a.cols);
        Matrix::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < r0, j < c0) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - c0)].clone(),
                (false, true) => c[(i - r0, j)].clone(),
                (false, false) => d[(i - r0, j - c0)].clone(),
            }
        })
    }

    pub fn block_diag(a: &Matrix, d: &Matrix) -> Matrix {
        Matrix::block2(
            a,
            &Matrix::zeros(a.rows, d.cols),
            &Matrix::zeros(d.rows, a.cols),
            d,
        )
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let (mut ints, _) = self.integer_rows();
        bareiss_forward(&mut ints, self.rows, self.cols, self.cols)
    }

    /// Exact inverse; `SingularMatrix` when the rank is deficient.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let (scaled, scales) = self.integer_rows();
        // [D·M | I] with D the row scaling that clears denominators.
        let width = 2 * n;
        let mut aug = vec![BigInt::zero(); n * width];
        for i in 0..n {
            for j in 0..n {
                aug[i * width + j] = scaled[i * n + j].clone();
            }
            aug[i * width + n + i] = BigInt::one();
        }
        let r = bareiss_forward(&mut aug, n, width, n);
        if r < n {
            return Err(Error::SingularMatrix);
        }
        // Back substitution on the upper-triangular left block.
        let mut x = Matrix::zeros(n, n);
        for col in 0..n {
            for i in (0..n).rev() {
                let mut acc = Scalar::from_integer(aug[i * width + n + col].clone());
                for k in i + 1..n {
                    let u = &aug[i * width + k];
                    if !u.is_zero() {
                        acc -= Scalar::from_integer(u.clone()) * &x[(k, col)];
                    }
                }
                x[(i, col)] = acc / Scalar::from_integer(aug[i * width + i].clone());
            }
        }
        // M⁻¹ = (D·M)⁻¹·D
        for j in 0..n {
            let s = &scales[j];
            for i in 0..n {
                x[(i, j)] = &x[(i, j)] * s;
            }
        }
        Ok(x)
    }

    /// Scales each row by the LCM of its denominators; returns the integer
    /// entries and the per-row scale factors.
    fn integer_rows(&self) -> (Vec<BigInt>, Vec<Scalar>) {
        let mut out = Vec::with_capacity(self.data.len());
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let l = self
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            for x in self.row(i) {
                out.push(x.numer() * (&l / x.denom()));
            }
            scales.push(Scalar::from_integer(l));
        }
        (out, scales)
    }
}

/// Fraction-free (Bareiss) forward elimination in place on a row-major
/// integer matrix. Only columns `< pivot_cols` are used as pivots. Returns
/// the number of pivots found; rows `0..rank` then form an echelon block.
fn bareiss_forward(a: &mut [BigInt], rows: usize, cols: usize, pivot_cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + col].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pivot = a[r * cols + col].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + col].clone();
            for j in 0..cols {
                if j == col {
                    continue;
                }
                let num = &pivot * &a[i * cols + j] - &lead * &a[r * cols + j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i * cols + j] = q;
            }
            a[i * cols + col] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs)
            .expect("matrix product dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &rhs.data),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &rhs.data),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

pub fn matrix_inverse(m: &Matrix) -> Result<Matrix> {
    m.inverse()
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Dense order-3 array `c[i][j][k]`.
///
/// As structure constants: `op(e_i, e_j) = Σ_k c[i][j][k] e_k`. As a
/// comultiplication: `Δ(e_i) = Σ_{j,k} c[i][j][k] e_j ⊗ e_k`. As a plain
/// element of `A⊗A⊗A` the three indices are the three tensor slots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3(n={}; ", self.n)?;
        let mut first = true;
        for (idx, v) in self.nonzero() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{:?}={}", idx, v)?;
        }
        write!(f, ")")
    }
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    /// Builds structure constants from `op(e_i, e_j)` given as vectors.
    pub fn from_op(n: usize, mut op: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = op(i, j);
                assert_eq!(v.len(), n);
                t.data[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&v);
            }
        }
        t
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { n, data }
    }

    /// Builds a coproduct-shaped tensor from `Δ(e_i)` given as an n×n matrix.
    pub fn from_slices(n: usize, mut slice: impl FnMut(usize) -> Matrix) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..n {
            let m = slice(i);
            assert_eq!((m.rows(), m.cols()), (n, n));
            t.data[i * n * n..(i + 1) * n * n].clone_from_slice(m.entries());
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.n;
        self.data[(i * n + j) * n + k] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let n = self.n;
        self.data[(i * n + j) * n + k] += v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// `op(e_i, e_j)` as a vector.
    pub fn pair(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.n;
        &self.data[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// First-index slice `c[i][·][·]` as an n×n matrix (e.g. `Δ(e_i)`).
    pub fn slice(&self, i: usize) -> Matrix {
        let n = self.n;
        Matrix::from_fn(n, n, |j, k| self.get(i, j, k).clone())
    }

    /// Linear extension of [`Tensor3::slice`]: `Σ_i x_i c[i][·][·]`.
    pub fn slice_combination(&self, x: &[Scalar]) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        m[(j, k)] += xi * c;
                    }
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| ((idx / (n * n), (idx / n) % n, idx % n), v))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(|x| s * x).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &Tensor3) -> Self {
        assert_eq!(self.n, other.n);
        Tensor3 {
            n: self.n,
            data: vec_add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Self {
        assert_eq!(self.n, other.n);
        Tensor3 {
            n: self.n,
            data: vec_sub(&self.data, &other.data),
        }
    }

    /// Reindexes so that `out[i][j][k] = self[p(i,j,k)]`.
    pub fn permuted(&self, p: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> Self {
        Self::from_fn(self.n, |i, j, k| {
            let (a, b, c) = p(i, j, k);
            self.get(a, b, c).clone()
        })
    }

    /// Exchange of the first and third tensor slots.
    pub fn swap13(&self) -> Self {
        self.permuted(|i, j, k| (k, j, i))
    }

    /// Exchange of the two input indices (`op(e_j, e_i)`).
    pub fn swap12(&self) -> Self {
        self.permuted(|i, j, k| (j, i, k))
    }

    /// Exchange of the two output slots of a coproduct-shaped tensor.
    pub fn swap23(&self) -> Self {
        self.permuted(|i, j, k| (i, k, j))
    }

    /// Applies the linear map `f` in tensor slot `slot` (0, 1 or 2).
    pub fn apply_slot(&self, slot: usize, f: &Matrix) -> Self {
        let n = self.n;
        assert_eq!((f.rows(), f.cols()), (n, n));
        let mut out = Tensor3::zeros(n);
        for ((i, j, k), v) in self.nonzero() {
            for m in 0..n {
                let (col, target) = match slot {
                    0 => (i, (m, j, k)),
                    1 => (j, (i, m, k)),
                    2 => (k, (i, j, m)),
                    _ => panic!("slot out of range"),
                };
                let c = &f[(m, col)];
                if !c.is_zero() {
                    out.add_at(target.0, target.1, target.2, &(c * v));
                }
            }
        }
        out
    }
}

/// `result_k = Σ_{i,j} u_i v_j t[i][j][k]`.
pub fn contract_bilinear(t: &Tensor3, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
    let n = t.dim();
    for len in [u.len(), v.len()] {
        if len != n {
            return Err(Error::DimMismatch {
                expected: n,
                found: len,
            });
        }
    }
    let mut out = zero_vec(n);
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            axpy(&mut out, &(ui * vj), t.pair(i, j));
        }
    }
    Ok(out)
}

/// An element `r = Σ r[i][j] e_i ⊗ e_j` of `A⊗A`.
///
/// The attached maps `A* → A` are, as column-convention matrices,
/// `r₊ = rᵀ` and `r₋ = −r`, so that `⟨r₊(x*), y*⟩ = −⟨x*, r₋(y*)⟩ = ⟨r, x*⊗y*⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTensor(Matrix);

impl TwoTensor {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        Ok(TwoTensor(m))
    }

    pub fn zeros(n: usize) -> Self {
        TwoTensor(Matrix::zeros(n, n))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        TwoTensor::new(Matrix::from_i64(rows)).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.0[(i, j)]
    }

    /// The flip `τ(r)`.
    pub fn flip(&self) -> Self {
        TwoTensor(self.0.transpose())
    }

    pub fn split(&self) -> (TwoTensor, TwoTensor) {
        let half = frac(1, 2);
        let t = self.0.transpose();
        (
            TwoTensor((&self.0 + &t).scale(&half)),
            TwoTensor((&self.0 - &t).scale(&half)),
        )
    }

    pub fn symmetric_part(&self) -> TwoTensor {
        self.split().0
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.0.is_antisymmetric()
    }

    /// `r₊: A* → A`.
    pub fn r_plus(&self) -> Matrix {
        self.0.transpose()
    }

    /// `r₋: A* → A`.
    pub fn r_minus(&self) -> Matrix {
        -&self.0
    }

    /// `I_r = r₊ − r₋`.
    pub fn i_r(&self) -> Matrix {
        &self.r_plus() - &self.r_minus()
    }

    /// `(F ⊗ G)(r)`.
    pub fn act(&self, f: &Matrix, g: &Matrix) -> Matrix {
        &(f * &self.0) * &g.transpose()
    }

    /// The 2-tensor whose `r₊` is the given map `A* → A`.
    pub fn from_r_plus(m: &Matrix) -> Result<Self> {
        TwoTensor::new(m.transpose())
    }

    pub fn add(&self, other: &TwoTensor) -> TwoTensor {
        TwoTensor(&self.0 + &other.0)
    }

    pub fn scale(&self, s: &Scalar) -> TwoTensor {
        TwoTensor(self.0.scale(s))
    }
}

/// `(S, Λ) = ((r + rᵀ)/2, (r − rᵀ)/2)`.
pub fn split_two_tensor(r: &TwoTensor) -> (TwoTensor, TwoTensor) {
    r.split()
}

/// Formats a scalar as `p` or `p/q`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` exactly.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (text, None),
    };
    let n: BigInt = num.parse().ok()?;
    match den {
        None => Some(Scalar::from_integer(n)),
        Some(d) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Scalar::new(n, d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_identity() {
        let id = Matrix::identity(3);
        assert_eq!(matrix_inverse(&id).unwrap(), id);
    }

    #[test]
    fn inverse_of_rotation() {
        let m = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(m.inverse().unwrap(), Matrix::from_i64(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn singular_rank_one() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_with_fractions() {
        let m = Matrix::from_rows(&[
            vec![frac(1, 2), frac(1, 3), int(0)],
            vec![int(2), frac(-5, 7), int(1)],
            vec![int(0), int(4), frac(3, 11)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert_eq!(&inv * &m, Matrix::identity(3));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&Matrix::zeros(3, 3)), 0);
        assert_eq!(rank(&Matrix::identity(4)), 4);
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(
            rank(&Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 2], &[1, 0, 0]])),
            2
        );
        assert_eq!(
            rank(&Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            2
        );
    }

    #[test]
    fn contract_examples() {
        let mut t = Tensor3::zeros(2);
        t.set(0, 1, 0, int(1));
        let e0 = basis_vec(2, 0);
        let e1 = basis_vec(2, 1);
        assert_eq!(contract_bilinear(&t, &e0, &e1).unwrap(), e0);
        assert_eq!(
            contract_bilinear(&t, &zero_vec(2), &e1).unwrap(),
            zero_vec(2)
        );
        assert!(matches!(
            contract_bilinear(&t, &zero_vec(3), &e1),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn contract_matches_term_by_term_sum() {
        let t = Tensor3::from_fn(3, |i, j, k| int((i * 7 + j * 3 + k) as i64 % 5 - 2));
        let u = vec_from_i64(&[1, -2, 3]);
        let v = vec_from_i64(&[2, 0, -1]);
        let mut expect = zero_vec(3);
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    expect[k] += &u[i] * &v[j] * t.get(i, j, k);
                }
            }
        }
        assert_eq!(contract_bilinear(&t, &u, &v).unwrap(), expect);
    }

    #[test]
    fn split_examples() {
        let sym = TwoTensor::from_i64(&[&[1, 2], &[2, 3]]);
        assert_eq!(split_two_tensor(&sym), (sym.clone(), TwoTensor::zeros(2)));
        let anti = TwoTensor::from_i64(&[&[0, 2], &[-2, 0]]);
        assert_eq!(split_two_tensor(&anti), (TwoTensor::zeros(2), anti.clone()));
        let r = TwoTensor::from_i64(&[&[1, 2], &[0, 1]]);
        let (s, l) = split_two_tensor(&r);
        assert_eq!(s, TwoTensor::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(l, TwoTensor::from_i64(&[&[0, 1], &[-1, 0]]));
        assert_eq!(s.add(&l), r);
    }

    #[test]
    fn r_plus_pairing() {
        let r = TwoTensor::from_i64(&[&[1, 2], &[3, 4]]);
        for a in 0..2 {
            for b in 0..2 {
                let x = basis_vec(2, a);
                let y = basis_vec(2, b);
                let lhs = dot(&r.r_plus().apply(&x), &y);
                let mid = -dot(&x, &r.r_minus().apply(&y));
                assert_eq!(lhs, *r.get(a, b));
                assert_eq!(mid, *r.get(a, b));
            }
        }
        assert!(r.i_r().is_symmetric());
        assert_eq!(r.flip().r_plus(), -&r.r_minus());
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("1/3"), Some(frac(1, 3)));
        assert_eq!(parse_scalar("-4"), Some(int(-4)));
        assert_eq!(parse_scalar("2/4"), Some(frac(1, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
        assert_eq!(fmt_scalar(&frac(-6, 4)), "-3/2");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec((-4i64..=4, 1i64..=3), n * n).prop_map(move |xs| {
            Matrix::from_fn(n, n, |i, j| {
                let (a, b) = xs[i * n + j];
                frac(a, b)
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(m in (1usize..=4).prop_flat_map(small_matrix)) {
            let n = m.rows();
            match m.inverse() {
                Ok(inv) => {
                    prop_assert_eq!(m.rank(), n);
                    prop_assert_eq!(&m * &inv, Matrix::identity(n));
                    prop_assert_eq!(&inv * &m, Matrix::identity(n));
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::SingularMatrix);
                    prop_assert!(m.rank() < n);
                }
            }
        }

        #[test]
        fn rank_is_transpose_invariant(m in (1usize..=4).prop_flat_map(small_matrix)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn split_is_idempotent(m in (1usize..=4).prop_flat_map(small_matrix)) {
            let r = TwoTensor::new(m).unwrap();
            let (s, l) = r.split();
            prop_assert_eq!(s.split(), (s.clone(), TwoTensor::zeros(r.dim())));
            prop_assert_eq!(l.split(), (TwoTensor::zeros(r.dim()), l.clone()));
            prop_assert_eq!(s.add(&l), r);
        }

        #[test]
        fn addition_is_exact(a in (-50i64..50, 1i64..20), b in (-50i64..50, 1i64..20)) {
            let x = frac(a.0, a.1);
            let y = frac(b.0, b.1);
            prop_assert_eq!(&x + &y - &y, x);
        }
    }
}
