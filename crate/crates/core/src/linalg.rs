//! Exact rational linear algebra.
//!
//! Everything here works over arbitrary-precision rationals; no operation ever
//! rounds. Matrices act on column vectors, so column `j` of a matrix holds the
//! coordinates of the image of the `j`-th basis vector.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ensure_dim, Error, Result};

/// Exact rational scalar, always kept in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as an exact rational. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"`, `"-p"` or `"p/q"` into a scalar.
pub fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty rational".into());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator in {t:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid denominator in {t:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {t:?}"));
    }
    Ok(Scalar::new(num, den))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `dst += c * src`
pub fn axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
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
        Self::from_fn(n, n, |r, c| if r == c { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            ensure_dim(cols, row.len())?;
            data.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| int(rows[r][c]))
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        for c in columns {
            ensure_dim(rows, c.len())?;
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
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

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        ensure_dim(self.cols, rhs.rows)?;
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                let (lo, hi) = (r * rhs.cols, (r + 1) * rhs.cols);
                axpy(&mut out.data[lo..hi], a, rhs.row(k));
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        ensure_dim(self.cols, v.len())?;
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        ensure_dim(self.rows, rhs.rows)?;
        ensure_dim(self.cols, rhs.cols)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Scalar::one())
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: u32) -> Result<Matrix> {
        ensure_dim(self.rows, self.cols)?;
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix]) -> Result<Matrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            ensure_dim(cols, b.cols)?;
            rows += b.rows;
            data.extend_from_slice(&b.data);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Extracts the submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Determinant by exact elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        ensure_dim(self.rows, self.cols)?;
        Ok(determinant(self))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|r| {
                self.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>()
            }))
            .finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form and the ascending list of pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..a.cols {
        if lead == a.rows {
            break;
        }
        let Some(p) = (lead..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        swap_rows(&mut a, lead, p);
        let inv = a[(lead, col)].recip();
        for c in col..a.cols {
            let v = &a[(lead, c)] * &inv;
            a[(lead, c)] = v;
        }
        let pivot_row = a.row(lead).to_vec();
        for r in 0..a.rows {
            if r == lead || a[(r, col)].is_zero() {
                continue;
            }
            let factor = -a[(r, col)].clone();
            let (lo, hi) = (r * a.cols, (r + 1) * a.cols);
            axpy(&mut a.data[lo..hi], &factor, &pivot_row);
        }
        pivots.push(col);
        lead += 1;
    }
    (a, pivots)
}

fn swap_rows(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols {
        a.data.swap(i * a.cols + c, j * a.cols + c);
    }
}

fn determinant(m: &Matrix) -> Scalar {
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            swap_rows(&mut a, p, col);
            det = -det;
        }
        let pivot = a[(col, col)].clone();
        det *= &pivot;
        let pivot_row = a.row(col).to_vec();
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let factor = -(&a[(r, col)] / &pivot);
            let (lo, hi) = (r * n, (r + 1) * n);
            axpy(&mut a.data[lo..hi], &factor, &pivot_row);
        }
    }
    det
}

/// Basis of `{v : m·v = 0}` in reduced row-echelon form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vector(n);
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect();
    Subspace::span_unchecked(n, vectors)
}

/// Exact inverse of a square matrix.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    ensure_dim(m.rows, m.cols)?;
    let n = m.rows;
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= n) {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
}

/// A linear subspace of `K^ambient_dim`, stored by its RREF basis so that equal
/// subspaces have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            ensure_dim(ambient_dim, v.len())?;
        }
        Ok(Self::span_unchecked(ambient_dim, vectors))
    }

    pub(crate) fn span_unchecked(ambient_dim: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = Matrix {
            rows: vectors.len(),
            cols: ambient_dim,
            data: vectors.into_iter().flatten().collect(),
        };
        let (r, pivots) = rref(&m);
        Subspace {
            ambient_dim,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span_unchecked(m.rows, (0..m.cols).map(|c| m.column(c)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_fn(self.ambient_dim, self.basis.len(), |r, c| self.basis[c][r].clone())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect()
    }

    /// Residual of `v` after reduction against the basis; zero iff `v` lies in
    /// the subspace.
    pub fn residual(&self, v: &[Scalar]) -> Result<Vector> {
        ensure_dim(self.ambient_dim, v.len())?;
        let mut res = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if !res[p].is_zero() {
                let c = -res[p].clone();
                axpy(&mut res, &c, row);
            }
        }
        Ok(res)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.residual(v)?))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        ensure_dim(other.ambient_dim, self.ambient_dim)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        ensure_dim(self.ambient_dim, other.ambient_dim)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span_unchecked(self.ambient_dim, vectors))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        ensure_dim(self.ambient_dim, other.ambient_dim)?;
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        // x_1 a_1 + ... + x_p a_p - y_1 b_1 - ... - y_q b_q = 0
        let m = Matrix::from_fn(self.ambient_dim, p + q, |r, c| {
            if c < p {
                self.basis[c][r].clone()
            } else {
                -other.basis[c - p][r].clone()
            }
        });
        let vectors = kernel_basis(&m)
            .basis
            .iter()
            .map(|coeffs| {
                let mut v = zero_vector(self.ambient_dim);
                for (c, a) in coeffs[..p].iter().zip(&self.basis) {
                    axpy(&mut v, c, a);
                }
                v
            })
            .collect();
        Ok(Self::span_unchecked(self.ambient_dim, vectors))
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        ensure_dim(m.cols, self.ambient_dim)?;
        let vectors = self
            .basis
            .iter()
            .map(|v| m.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span_unchecked(m.rows, vectors))
    }

    /// `{v in self : m·v = 0}`.
    pub fn kernel_of(&self, m: &Matrix) -> Result<Subspace> {
        ensure_dim(m.cols, self.ambient_dim)?;
        let b = self.basis_matrix();
        let coeffs = kernel_basis(&m.mul(&b)?);
        let vectors = coeffs
            .basis
            .iter()
            .map(|c| b.apply(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span_unchecked(self.ambient_dim, vectors))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient_dim", &self.ambient_dim)
            .field(
                "basis",
                &self
                    .basis
                    .iter()
                    .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Formats a vector as `(a, b, c)`.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Formats `Σ c_i e_{i+1}` with exact coefficients, e.g. `2e2 - 3e1` style.
pub fn format_combination(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            if abs.is_integer() {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("({abs})"));
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
