//! Constructions producing new Bihom-Lie algebras from old ones.
//!
//! In every extension the new basis vectors come last: for `L ⊕ M` the module
//! basis occupies indices `n..n+m`, and the extra generator of a derivation or
//! central extension has index `n`.

use num_traits::{One, Zero};

use crate::algebra::{
    check_bihom_associative, check_bihom_lie, check_multiplicative, hom_jacobi_defect, AlgebraMap,
    BihomAssociativeAlgebra, BihomLieAlgebra, StructureTensor,
};
use crate::cohomology::{
    check_representation, coboundary_matrix, trivial_representation, Representation,
};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{
    dot, is_zero_vector, scale_vector, sub_vectors, unit_vector, zero_vector, Matrix, Scalar,
    Vector,
};

fn describe_failure(what: &str, report: &crate::AxiomReport) -> String {
    match report.first_failure() {
        Some(check) => format!("{what} fails {}", check.axiom.label()),
        None => format!("{what} fails its axioms"),
    }
}

/// `[a, a'] = aa' - (α⁻¹β a')(αβ⁻¹ a)` on a regular Bihom-associative algebra.
pub fn commutator_bihom_lie(a: &BihomAssociativeAlgebra) -> Result<BihomLieAlgebra> {
    let alpha_inv = crate::linalg::invert(a.alpha())
        .map_err(|_| Error::NotRegular("alpha is not invertible".into()))?;
    let beta_inv = crate::linalg::invert(a.beta())
        .map_err(|_| Error::NotRegular("beta is not invertible".into()))?;
    let report = check_bihom_associative(a);
    if !report.is_bihom_associative() {
        return Err(Error::InvalidInput(describe_failure("input algebra", &report)));
    }
    let left = alpha_inv.mul(a.beta())?;
    let right = a.alpha().mul(&beta_inv)?;
    let bracket = StructureTensor::from_fn(a.dim(), |i, j| {
        let direct = a.product_tensor().basis_product(i, j).to_vec();
        let swapped = a.product(&left.column(j), &right.column(i));
        sub_vectors(&direct, &swapped)
    })?;
    let out = BihomLieAlgebra::new(bracket, a.alpha().clone(), a.beta().clone())?;
    Ok(match a.name() {
        Some(name) => out.with_name(format!("L({name})")),
        None => out,
    })
}

/// `{a, b} = [α(a), β(b)]` for an ordinary Lie bracket and two commuting
/// bracket automorphisms.
pub fn yau_twist(bracket: &StructureTensor, alpha: &Matrix, beta: &Matrix) -> Result<BihomLieAlgebra> {
    let n = bracket.dim();
    for m in [alpha, beta] {
        ensure_dim(n, m.rows())?;
        ensure_dim(n, m.cols())?;
    }
    if !bracket.is_antisymmetric() {
        return Err(Error::InvalidInput("bracket is not antisymmetric".into()));
    }
    let id = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
                if !is_zero_vector(&hom_jacobi_defect(bracket, &id, &x, &y, &z)?) {
                    return Err(Error::InvalidInput(format!(
                        "bracket violates the Jacobi identity at ({}, {}, {})",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
    }
    if alpha.mul(beta)? != beta.mul(alpha)? {
        return Err(Error::InvalidInput("alpha and beta do not commute".into()));
    }
    let plain = BihomLieAlgebra::new(bracket.clone(), alpha.clone(), beta.clone())?;
    if !check_multiplicative(&plain).is_multiplicative() {
        return Err(Error::InvalidInput(
            "alpha and beta must be bracket homomorphisms".into(),
        ));
    }
    let twisted = StructureTensor::from_fn(n, |i, j| bracket.eval(&alpha.column(i), &beta.column(j)))?;
    BihomLieAlgebra::new(twisted, alpha.clone(), beta.clone())
}

/// Block bracket and block-diagonal twists on `L1 ⊕ L2`.
pub fn direct_sum(l1: &BihomLieAlgebra, l2: &BihomLieAlgebra) -> Result<BihomLieAlgebra> {
    for (what, l) in [("first summand", l1), ("second summand", l2)] {
        let report = check_bihom_lie(l);
        if !report.is_bihom_lie() {
            return Err(Error::InvalidInput(describe_failure(what, &report)));
        }
    }
    let (n1, n2) = (l1.dim(), l2.dim());
    let n = n1 + n2;
    let bracket = StructureTensor::from_fn(n, |i, j| {
        let mut v = zero_vector(n);
        if i < n1 && j < n1 {
            v[..n1].clone_from_slice(l1.basis_bracket(i, j));
        } else if i >= n1 && j >= n1 {
            v[n1..].clone_from_slice(l2.basis_bracket(i - n1, j - n1));
        }
        v
    })?;
    let out = BihomLieAlgebra::new(
        bracket,
        l1.alpha().block_diag(l2.alpha()),
        l1.beta().block_diag(l2.beta()),
    )?;
    match (l1.explicit_labels(), l2.explicit_labels()) {
        (Some(a), Some(b)) if a.iter().all(|x| !b.contains(x)) => {
            out.with_labels(a.iter().chain(b).cloned().collect())
        }
        _ => Ok(out),
    }
}

/// `L ⋉ M` with
/// `[(x, a), (y, b)] = ([x, y], ρ(x)b - ρ(α⁻¹β y)(α_M β_M⁻¹ a))`
/// and twists `α ⊕ α_M`, `β ⊕ β_M`.
pub fn semidirect_product(rep: &Representation) -> Result<BihomLieAlgebra> {
    let report = check_representation(rep);
    if let Some(failure) = report.first_failure() {
        return Err(Error::InvalidRepresentation(format!(
            "representation fails {}",
            failure.axiom.label()
        )));
    }
    let l = rep.algebra();
    let alpha_inv = l.alpha_inverse()?;
    let beta_m_inv = crate::linalg::invert(rep.beta_m())
        .map_err(|_| Error::NotRegular("beta_M is not invertible".into()))?;
    let (n, m) = (l.dim(), rep.module_dim());
    let shift = alpha_inv.mul(l.beta())?;
    let module_shift = rep.alpha_m().mul(&beta_m_inv)?;
    let bracket = StructureTensor::from_fn(n + m, |i, j| {
        let mut v = zero_vector(n + m);
        match (i < n, j < n) {
            (true, true) => v[..n].clone_from_slice(l.basis_bracket(i, j)),
            (true, false) => v[n..].clone_from_slice(&rep.rho()[i].column(j - n)),
            (false, true) => {
                let act = rep.action(&shift.column(j));
                let image = act.apply(&module_shift.column(i - n)).expect("square");
                v[n..].clone_from_slice(&scale_vector(&-Scalar::one(), &image));
            }
            (false, false) => {}
        }
        v
    })?;
    BihomLieAlgebra::new(
        bracket,
        l.alpha().block_diag(rep.alpha_m()),
        l.beta().block_diag(rep.beta_m()),
    )
}

/// `L ⊕ 𝕂D` with `[D, u] = D(u)`, `[u, D] = -αβ⁻¹D(u)`, `[D, D] = 0` and
/// twists `α ⊕ 1`, `β ⊕ 1`.
pub fn derivation_extension(l: &BihomLieAlgebra, d: &Matrix) -> Result<BihomLieAlgebra> {
    ensure_dim(l.dim(), d.rows())?;
    ensure_dim(l.dim(), d.cols())?;
    l.require_regular()?;
    let n = l.dim();
    let beta_inv = l.beta_inverse()?;
    let back = l.alpha().mul(&beta_inv)?.mul(d)?;
    let bracket = StructureTensor::from_fn(n + 1, |i, j| {
        let mut v = zero_vector(n + 1);
        match (i < n, j < n) {
            (true, true) => v[..n].clone_from_slice(l.basis_bracket(i, j)),
            (false, true) => v[..n].clone_from_slice(&d.column(j)),
            (true, false) => v[..n].clone_from_slice(&scale_vector(&-Scalar::one(), &back.column(i))),
            (false, false) => {}
        }
        v
    })?;
    let one = Matrix::identity(1);
    let out = BihomLieAlgebra::new(
        bracket,
        l.alpha().block_diag(&one),
        l.beta().block_diag(&one),
    )?;
    match l.explicit_labels() {
        Some(labels) if !labels.iter().any(|x| x == "D") => {
            out.with_labels(labels.iter().cloned().chain(["D".to_string()]).collect())
        }
        _ => Ok(out),
    }
}

/// A scalar 2-cochain `θ(x, y) = xᵀ Θ y` given by an antisymmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCocycle {
    theta: Matrix,
}

impl ExtensionCocycle {
    pub fn new(theta: Matrix) -> Result<Self> {
        if !theta.is_square() {
            return Err(Error::DimensionMismatch {
                expected: theta.rows(),
                found: theta.cols(),
            });
        }
        if theta.transpose() != theta.neg() {
            return Err(Error::InvalidInput("theta must be antisymmetric".into()));
        }
        Ok(ExtensionCocycle { theta })
    }

    pub fn zero(n: usize) -> Self {
        ExtensionCocycle {
            theta: Matrix::zeros(n, n),
        }
    }

    /// From trivial-module 2-cochain coordinates (pairs `i < j`, lex order).
    pub fn from_cochain(n: usize, coords: &[Scalar]) -> Result<Self> {
        ensure_dim(n * n.saturating_sub(1) / 2, coords.len())?;
        let mut theta = Matrix::zeros(n, n);
        let mut it = coords.iter();
        for i in 0..n {
            for j in i + 1..n {
                let c = it.next().expect("length checked");
                theta[(i, j)] = c.clone();
                theta[(j, i)] = -c.clone();
            }
        }
        Ok(ExtensionCocycle { theta })
    }

    pub fn to_cochain(&self) -> Vector {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.theta[(i, j)].clone())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.theta.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.theta
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.theta.apply(y).expect("checked shape"))
    }

    /// `θ∘(α ⊗ α) = θ` and `θ∘(β ⊗ β) = θ`.
    pub fn is_compatible(&self, l: &BihomLieAlgebra) -> bool {
        [l.alpha(), l.beta()].into_iter().all(|t| {
            t.transpose()
                .mul(&self.theta)
                .and_then(|m| m.mul(t))
                .is_ok_and(|m| m == self.theta)
        })
    }
}

/// `L ⊕ 𝕂c` with `[(u, s), (v, t)] = ([u, v], θ(αβ⁻¹u, v))` and twists
/// `α ⊕ 1`, `β ⊕ 1`.
pub fn central_extension(l: &BihomLieAlgebra, theta: &ExtensionCocycle) -> Result<BihomLieAlgebra> {
    ensure_dim(l.dim(), theta.dim())?;
    l.require_regular()?;
    if !theta.is_compatible(l) {
        return Err(Error::InvalidCocycleCompatibility(
            "theta is not invariant under alpha and beta".into(),
        ));
    }
    let n = l.dim();
    let shift = l.alpha().mul(&l.beta_inverse()?)?;
    let bracket = StructureTensor::from_fn(n + 1, |i, j| {
        let mut v = zero_vector(n + 1);
        if i < n && j < n {
            v[..n].clone_from_slice(l.basis_bracket(i, j));
            v[n] = theta.eval(&shift.column(i), &unit_vector(n, j));
        }
        v
    })?;
    let one = Matrix::identity(1);
    BihomLieAlgebra::new(
        bracket,
        l.alpha().block_diag(&one),
        l.beta().block_diag(&one),
    )
}

/// `φ(u, s) = (u, s - f(u))` from the extension by `θ1` to the extension by
/// `θ2`, provided `θ1 - θ2 = d f` for a compatible scalar 1-cochain `f`.
pub fn extension_isomorphism(
    l: &BihomLieAlgebra,
    theta1: &ExtensionCocycle,
    theta2: &ExtensionCocycle,
    f: &[Scalar],
) -> Result<AlgebraMap> {
    let n = l.dim();
    ensure_dim(n, f.len())?;
    let source = central_extension(l, theta1)?;
    let target = central_extension(l, theta2)?;
    for t in [l.alpha(), l.beta()] {
        if t.transpose().apply(f)? != f {
            return Err(Error::InvalidInput(
                "f is not invariant under alpha and beta".into(),
            ));
        }
    }
    let df = coboundary_matrix(&trivial_representation(l), 1)?.apply(f)?;
    let diff = sub_vectors(&theta1.to_cochain(), &theta2.to_cochain());
    if df != diff {
        return Err(Error::NotCohomologous);
    }
    let phi = Matrix::from_fn(n + 1, n + 1, |r, c| match (r < n, c < n) {
        (true, true) if r == c => Scalar::one(),
        (false, true) => -f[c].clone(),
        (false, false) => Scalar::one(),
        _ => Scalar::zero(),
    });
    AlgebraMap::new(source, target, phi)
}
