//! Twisted derivations `Der_{α^k β^l}(L)` and inner derivations, as exact
//! solution spaces.
//!
//! A linear map `D` on an `n`-dimensional algebra is encoded as an `n²` vector
//! by column-major flattening: entry `D[r][c]` sits at index `c·n + r`. This is
//! the same ordering as degree-1 cochains with values in the adjoint module.

use crate::algebra::BihomLieAlgebra;
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{
    add_vectors, is_zero_vector, kernel_basis, sub_vectors, Matrix, Scalar, Subspace, Vector,
};

/// `α^k β^l` as a single matrix.
pub fn twist_power(l: &BihomLieAlgebra, k: i64, lpow: i64) -> Result<Matrix> {
    l.twist_power(k, lpow)
}

pub fn flatten(d: &Matrix) -> Vector {
    let n = d.rows();
    (0..d.cols())
        .flat_map(|c| (0..n).map(move |r| (r, c)))
        .map(|(r, c)| d[(r, c)].clone())
        .collect()
}

pub fn unflatten(n: usize, v: &[Scalar]) -> Result<Matrix> {
    ensure_dim(n * n, v.len())?;
    Ok(Matrix::from_fn(n, n, |r, c| v[c * n + r].clone()))
}

/// Stacked residuals of the derivation identities: `Dα - αD`, `Dβ - βD`,
/// and `D[e_i,e_j] - [D e_i, T e_j] - [T e_i, D e_j]` for `T = α^k β^l`.
fn derivation_residual(l: &BihomLieAlgebra, twist: &Matrix, d: &Matrix) -> Vector {
    let n = l.dim();
    let mut out = Vec::with_capacity(2 * n * n + n * n * n);
    for m in [l.alpha(), l.beta()] {
        let lhs = d.mul(m).expect("square");
        let rhs = m.mul(d).expect("square");
        out.extend(lhs.sub(&rhs).expect("square").entries().iter().cloned());
    }
    let d_e: Vec<Vector> = (0..n).map(|i| d.column(i)).collect();
    let t_e: Vec<Vector> = (0..n).map(|i| twist.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(l.basis_bracket(i, j)).expect("square");
            let rhs = add_vectors(&l.bracket(&d_e[i], &t_e[j]), &l.bracket(&t_e[i], &d_e[j]));
            out.extend(sub_vectors(&lhs, &rhs));
        }
    }
    out
}

/// Direct check that `d` is an `α^k β^l`-derivation.
pub fn is_derivation(l: &BihomLieAlgebra, d: &Matrix, k: i64, lpow: i64) -> Result<bool> {
    ensure_dim(l.dim(), d.rows())?;
    ensure_dim(l.dim(), d.cols())?;
    let twist = l.twist_power(k, lpow)?;
    Ok(is_zero_vector(&derivation_residual(l, &twist, d)))
}

/// All `α^k β^l`-derivations, as a subspace of flattened `n × n` matrices.
pub fn derivation_space(l: &BihomLieAlgebra, k: i64, lpow: i64) -> Result<Subspace> {
    let n = l.dim();
    let twist = l.twist_power(k, lpow)?;
    // the residual is linear in D; its value on each elementary matrix is a column
    let columns: Vec<Vector> = (0..n * n)
        .map(|idx| {
            let mut e = Matrix::zeros(n, n);
            e[(idx % n, idx / n)] = Scalar::from_integer(1.into());
            derivation_residual(l, &twist, &e)
        })
        .collect();
    let rows = 2 * n * n + n * n * n;
    let system = Matrix::from_columns(rows, &columns)?;
    Ok(kernel_basis(&system))
}

/// Elements fixed by both twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointSet {
    pub subspace: Subspace,
}

pub fn fixed_point_set(l: &BihomLieAlgebra) -> FixedPointSet {
    let n = l.dim();
    let id = Matrix::identity(n);
    let system = Matrix::vstack(&[
        l.alpha().sub(&id).expect("square"),
        l.beta().sub(&id).expect("square"),
    ])
    .expect("same width");
    FixedPointSet {
        subspace: kernel_basis(&system),
    }
}

/// The inner map `v ↦ -[α^{k-1}β^l(v), u]` for a fixed point `u`.
pub fn inner_derivation(l: &BihomLieAlgebra, k: i64, lpow: i64, u: &[Scalar]) -> Result<Matrix> {
    ensure_dim(l.dim(), u.len())?;
    let twist = l.twist_power(k - 1, lpow)?;
    let cols: Vec<Vector> = (0..l.dim())
        .map(|j| {
            l.bracket(&twist.column(j), u)
                .into_iter()
                .map(|x| -x)
                .collect()
        })
        .collect();
    Matrix::from_columns(l.dim(), &cols)
}

/// `Inn_{α^k β^l}(L)`: span of `v ↦ -[α^{k-1}β^l(v), u]` over `u` fixed by
/// `α` and `β`.
pub fn inner_derivation_space(l: &BihomLieAlgebra, k: i64, lpow: i64) -> Result<Subspace> {
    let fixed = fixed_point_set(l);
    let maps = fixed
        .subspace
        .basis()
        .iter()
        .map(|u| inner_derivation(l, k, lpow, u).map(|d| flatten(&d)))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(l.dim() * l.dim(), maps)
}

/// A map together with its twist degree `(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedDerivation {
    pub k: i64,
    pub l: i64,
    pub map: Matrix,
}

impl TypedDerivation {
    /// Fails with `InvalidInput` when `map` is not an `α^k β^l`-derivation.
    pub fn new(alg: &BihomLieAlgebra, k: i64, l: i64, map: Matrix) -> Result<Self> {
        if !is_derivation(alg, &map, k, l)? {
            return Err(Error::InvalidInput(format!(
                "map is not an alpha^{k} beta^{l}-derivation"
            )));
        }
        Ok(TypedDerivation { k, l, map })
    }

    pub fn flattened(&self) -> Vector {
        flatten(&self.map)
    }
}

/// `[D1, D2] = D1∘D2 - D2∘D1`, typed at the summed degree.
pub fn derivation_bracket(
    alg: &BihomLieAlgebra,
    d1: &TypedDerivation,
    d2: &TypedDerivation,
) -> Result<TypedDerivation> {
    let map = d1.map.mul(&d2.map)?.sub(&d2.map.mul(&d1.map)?)?;
    let (k, l) = (d1.k + d2.k, d1.l + d2.l);
    if !is_derivation(alg, &map, k, l)? {
        return Err(Error::InternalInvariantViolation(format!(
            "commutator of derivations left Der_(alpha^{k} beta^{l})"
        )));
    }
    Ok(TypedDerivation { k, l, map })
}
