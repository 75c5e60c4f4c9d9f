//! Representations and the twisted cochain complex.
//!
//! A `k`-cochain `f: Λ^k L → M` is stored by its values on ordered basis
//! `k`-subsets: coordinate `(S, b)` is the `b`-th component of `f(e_S)`, with
//! subsets in lexicographic order and `b` varying fastest. For `k = 1` the
//! coordinate of `(i, b)` is therefore `i·m + b`.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::algebra::{commutator_violation, Axiom, AxiomReport, BihomLieAlgebra, Violation};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{is_zero_vector, Matrix, Scalar, Subspace, Vector};

/// A representation `(M, ρ, α_M, β_M)` of a Bihom-Lie algebra. `rho[i]` is the
/// action of the `i`-th basis vector as an `m × m` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: BihomLieAlgebra,
    rho: Vec<Matrix>,
    alpha_m: Matrix,
    beta_m: Matrix,
}

impl Representation {
    pub fn new(
        algebra: BihomLieAlgebra,
        rho: Vec<Matrix>,
        alpha_m: Matrix,
        beta_m: Matrix,
    ) -> Result<Self> {
        ensure_dim(algebra.dim(), rho.len())?;
        let m = alpha_m.rows();
        for mat in rho.iter().chain([&alpha_m, &beta_m]) {
            ensure_dim(m, mat.rows())?;
            ensure_dim(m, mat.cols())?;
        }
        Ok(Representation {
            algebra,
            rho,
            alpha_m,
            beta_m,
        })
    }

    pub fn algebra(&self) -> &BihomLieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.alpha_m.rows()
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn alpha_m(&self) -> &Matrix {
        &self.alpha_m
    }

    pub fn beta_m(&self) -> &Matrix {
        &self.beta_m
    }

    /// `ρ(x)` for an arbitrary element `x`.
    pub fn action(&self, x: &[Scalar]) -> Matrix {
        let m = self.module_dim();
        let mut out = Matrix::zeros(m, m);
        for (c, r) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                out = out.add(&r.scale(c)).expect("same shape");
            }
        }
        out
    }
}

fn first_nonzero_column(diff: &Matrix, prefix: &[usize]) -> Option<Violation> {
    (0..diff.cols()).find_map(|b| {
        let col = diff.column(b);
        (!is_zero_vector(&col)).then(|| Violation {
            indices: prefix.iter().copied().chain([b]).collect(),
            defect: col,
        })
    })
}

/// Checks commuting module twists, `ρ(α x)α_M = α_M ρ(x)`,
/// `ρ(β x)β_M = β_M ρ(x)` and
/// `ρ([β x, y])β_M = ρ(αβ x)ρ(y) - ρ(β y)ρ(α x)`.
pub fn check_representation(rep: &Representation) -> AxiomReport {
    let l = &rep.algebra;
    let n = l.dim();
    let mut report = AxiomReport::default();
    report.push(
        Axiom::ModuleTwistsCommute,
        commutator_violation(&rep.alpha_m, &rep.beta_m),
    );
    for (axiom, t, t_m) in [
        (Axiom::AlphaEquivariance, l.alpha(), &rep.alpha_m),
        (Axiom::BetaEquivariance, l.beta(), &rep.beta_m),
    ] {
        let violation = (0..n).find_map(|i| {
            let lhs = rep.action(&t.column(i)).mul(t_m).expect("square");
            let rhs = t_m.mul(&rep.rho[i]).expect("square");
            first_nonzero_column(&lhs.sub(&rhs).expect("square"), &[i])
        });
        report.push(axiom, violation);
    }
    let ab = l.alpha().mul(l.beta()).expect("square");
    let rho_beta: Vec<Matrix> = (0..n).map(|i| rep.action(&l.beta().column(i))).collect();
    let rho_alpha: Vec<Matrix> = (0..n).map(|i| rep.action(&l.alpha().column(i))).collect();
    let rho_ab: Vec<Matrix> = (0..n).map(|i| rep.action(&ab.column(i))).collect();
    let mut compat = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = rep
                .action(&l.bracket(&l.beta().column(i), &l.basis_vector(j)))
                .mul(&rep.beta_m)
                .expect("square");
            let rhs = rho_ab[i]
                .mul(&rep.rho[j])
                .expect("square")
                .sub(&rho_beta[j].mul(&rho_alpha[i]).expect("square"))
                .expect("square");
            if let Some(v) = first_nonzero_column(&lhs.sub(&rhs).expect("square"), &[i, j]) {
                compat = Some(v);
                break 'outer;
            }
        }
    }
    report.push(Axiom::ActionCompatibility, compat);
    report
}

/// The one-dimensional module with zero action and identity twists.
pub fn trivial_representation(l: &BihomLieAlgebra) -> Representation {
    Representation {
        algebra: l.clone(),
        rho: vec![Matrix::zeros(1, 1); l.dim()],
        alpha_m: Matrix::identity(1),
        beta_m: Matrix::identity(1),
    }
}

/// `ad_{s,t}`: `ρ(x)(v) = [α^s β^t x, v]` on `M = L` with `α_M = α`, `β_M = β`.
pub fn adjoint_representation(l: &BihomLieAlgebra, s: i64, t: i64) -> Result<Representation> {
    l.require_regular()?;
    let twist = l.twist_power(s, t)?;
    let n = l.dim();
    let rho = (0..n)
        .map(|i| {
            let x = twist.column(i);
            let cols: Vec<Vector> = (0..n).map(|j| l.bracket(&x, &l.basis_vector(j))).collect();
            Matrix::from_columns(n, &cols)
        })
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(l.clone(), rho, l.alpha().clone(), l.beta().clone())?;
    let report = check_representation(&rep);
    if let Some(failure) = report.first_failure() {
        return Err(Error::InternalInvariantViolation(format!(
            "ad_({s},{t}) fails {}",
            failure.axiom.label()
        )));
    }
    Ok(rep)
}

/// Ascending `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

fn subset_index(n: usize, k: usize) -> HashMap<Vec<usize>, usize> {
    k_subsets(n, k)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect()
}

fn minor(v: &Matrix, rows: &[usize]) -> Scalar {
    let cols: Vec<usize> = (0..v.cols()).collect();
    v.submatrix(rows, &cols).determinant().expect("square minor")
}

/// `Λ^k(t)` in the subset basis: entry `(S', S)` is `det t[S', S]`.
fn exterior_power(t: &Matrix, k: usize) -> Matrix {
    let subsets = k_subsets(t.rows(), k);
    Matrix::from_fn(subsets.len(), subsets.len(), |r, c| {
        t.submatrix(&subsets[r], &subsets[c])
            .determinant()
            .expect("square minor")
    })
}

/// Compatible `k`-cochains: `α_M∘f = f∘α^{∧k}` and `β_M∘f = f∘β^{∧k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainBasis {
    pub degree: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub compatible: Subspace,
}

impl CochainBasis {
    pub fn ambient_dim(&self) -> usize {
        self.compatible.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.compatible.dim()
    }

    pub fn subsets(&self) -> Vec<Vec<usize>> {
        k_subsets(self.algebra_dim, self.degree)
    }
}

fn compatibility_operator(t: &Matrix, t_m: &Matrix, k: usize) -> Matrix {
    let m = t_m.rows();
    let ext = exterior_power(t, k);
    let size = ext.rows();
    Matrix::from_fn(size * m, size * m, |row, col| {
        let (s_out, b_out) = (row / m, row % m);
        let (s_in, b_in) = (col / m, col % m);
        let mut v = if s_out == s_in {
            t_m[(b_out, b_in)].clone()
        } else {
            Scalar::zero()
        };
        if b_out == b_in {
            v -= &ext[(s_in, s_out)];
        }
        v
    })
}

pub fn cochain_space(rep: &Representation, degree: usize) -> Result<CochainBasis> {
    let l = &rep.algebra;
    let n = l.dim();
    if degree > n {
        return Err(Error::DegreeOutOfRange { degree, max: n });
    }
    let system = Matrix::vstack(&[
        compatibility_operator(l.alpha(), &rep.alpha_m, degree),
        compatibility_operator(l.beta(), &rep.beta_m, degree),
    ])?;
    Ok(CochainBasis {
        degree,
        algebra_dim: n,
        module_dim: rep.module_dim(),
        compatible: crate::linalg::kernel_basis(&system),
    })
}

/// `d_k` as a matrix from the ambient `k`-cochains to the ambient
/// `(k+1)`-cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMap {
    pub degree: usize,
    pub matrix: Matrix,
}

impl CoboundaryMap {
    pub fn apply(&self, cochain: &[Scalar]) -> Result<Vector> {
        self.matrix.apply(cochain)
    }
}

fn sign(exp: usize) -> Scalar {
    if exp.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// The coboundary
/// `d f(u_1..u_{k+1}) = Σ_i (-1)^i ρ(αβ^{k-1} u_i) f(..û_i..)
///   + Σ_{i<j} (-1)^{i+j+1} f([α⁻¹β u_i, u_j], β u_1, ..û_i..û_j.., β u_{k+1})`.
pub fn coboundary_matrix(rep: &Representation, degree: usize) -> Result<CoboundaryMap> {
    let l = &rep.algebra;
    let n = l.dim();
    if degree > n {
        return Err(Error::DegreeOutOfRange { degree, max: n });
    }
    let m = rep.module_dim();
    let k = degree;
    let alpha_inv = l.alpha_inverse()?;
    let twist = l.twist_power(1, k as i64 - 1)?;
    let shift = alpha_inv.mul(l.beta())?;
    let domain = k_subsets(n, k);
    let codomain = k_subsets(n, k + 1);
    let index = subset_index(n, k);
    let mut d = Matrix::zeros(codomain.len() * m, domain.len() * m);

    let rho_twisted: Vec<Matrix> = (0..n).map(|i| rep.action(&twist.column(i))).collect();
    let beta_cols: Vec<Vector> = (0..n).map(|i| l.beta().column(i)).collect();
    let shifted: Vec<Vector> = (0..n).map(|i| shift.column(i)).collect();

    for (ti, t) in codomain.iter().enumerate() {
        for p in 0..=k {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &x)| x).collect();
            let si = index[&rest];
            let s = sign(p + 1);
            let block = &rho_twisted[t[p]];
            for a in 0..m {
                for b in 0..m {
                    d[(ti * m + a, si * m + b)] += &s * &block[(a, b)];
                }
            }
        }
        for p in 0..=k {
            for q in p + 1..=k {
                let s = sign(p + q + 1);
                let mut args = vec![l.bracket(&shifted[t[p]], &l.basis_vector(t[q]))];
                for (r, &x) in t.iter().enumerate() {
                    if r != p && r != q {
                        args.push(beta_cols[x].clone());
                    }
                }
                let v = Matrix::from_columns(n, &args)?;
                for (si, sub) in domain.iter().enumerate() {
                    let c = minor(&v, sub);
                    if c.is_zero() {
                        continue;
                    }
                    let c = &s * c;
                    for b in 0..m {
                        d[(ti * m + b, si * m + b)] += &c;
                    }
                }
            }
        }
    }
    Ok(CoboundaryMap {
        degree,
        matrix: d,
    })
}

/// `Z^k`, `B^k` and `H^k` of the compatible subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub cochains: Subspace,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
}

pub fn cohomology(rep: &Representation, degree: usize) -> Result<CohomologyReport> {
    rep.algebra.require_regular()?;
    let cochains = cochain_space(rep, degree)?.compatible;
    let d = coboundary_matrix(rep, degree)?;
    let cocycles = cochains.kernel_of(&d.matrix)?;
    let coboundaries = if degree == 0 {
        Subspace::zero(cochains.ambient_dim())
    } else {
        let prev = cochain_space(rep, degree - 1)?.compatible;
        prev.map(&coboundary_matrix(rep, degree - 1)?.matrix)?
    };
    if !coboundaries.is_subspace_of(&cocycles)? {
        return Err(Error::InternalInvariantViolation(format!(
            "B^{degree} is not contained in Z^{degree}"
        )));
    }
    Ok(CohomologyReport {
        degree,
        dim_z: cocycles.dim(),
        dim_b: coboundaries.dim(),
        dim_h: cocycles.dim() - coboundaries.dim(),
        cochains,
        cocycles,
        coboundaries,
    })
}
