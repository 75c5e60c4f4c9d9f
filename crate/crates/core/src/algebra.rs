//! Bihom-Lie and Bihom-associative algebras given by structure constants, and
//! the axiom checkers for them.
//!
//! Every axiom is bilinear or trilinear, so it is checked on basis tuples only.
//! Failures are reported with the first violating tuple and its exact defect.

use std::fmt;

use num_traits::Zero;

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{
    add_vectors, axpy, format_vector, invert, is_zero_vector, sub_vectors, unit_vector, zero_vector,
    Matrix, Scalar, Subspace, Vector,
};

/// Structure constants `c[i][j][k]` of a bilinear product:
/// `e_i * e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    data: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        StructureTensor {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Builds the tensor from the products of basis pairs.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                ensure_dim(dim, v.len())?;
                data.extend(v);
            }
        }
        Ok(StructureTensor { dim, data })
    }

    /// `nested[i][j][k]`
    pub fn from_nested(nested: Vec<Vec<Vector>>) -> Result<Self> {
        let dim = nested.len();
        let mut data = Vec::with_capacity(dim * dim * dim);
        for row in nested {
            ensure_dim(dim, row.len())?;
            for v in row {
                ensure_dim(dim, v.len())?;
                data.extend(v);
            }
        }
        Ok(StructureTensor { dim, data })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.dim;
        self.data[(i * n + j) * n + k] = value;
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.dim, "left operand has wrong dimension");
        assert_eq!(y.len(), self.dim, "right operand has wrong dimension");
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    /// True when `e_i * e_j = -e_j * e_i` for all basis pairs.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                is_zero_vector(&add_vectors(self.basis_product(i, j), self.basis_product(j, i)))
            })
        })
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// A finite-dimensional algebra with bracket and two twist maps.
///
/// The bracket tensor is not required to be antisymmetric; only the twisted
/// skew-symmetry `[β(a), α(b)] = -[β(b), α(a)]` is part of the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BihomLieAlgebra {
    name: Option<String>,
    labels: Option<Vec<String>>,
    bracket: StructureTensor,
    alpha: Matrix,
    beta: Matrix,
}

impl BihomLieAlgebra {
    pub fn new(bracket: StructureTensor, alpha: Matrix, beta: Matrix) -> Result<Self> {
        let n = bracket.dim();
        for m in [&alpha, &beta] {
            ensure_dim(n, m.rows())?;
            ensure_dim(n, m.cols())?;
        }
        Ok(BihomLieAlgebra {
            name: None,
            labels: None,
            bracket,
            alpha,
            beta,
        })
    }

    /// Zero bracket with identity twists.
    pub fn abelian(dim: usize) -> Self {
        BihomLieAlgebra {
            name: None,
            labels: None,
            bracket: StructureTensor::zeros(dim),
            alpha: Matrix::identity(dim),
            beta: Matrix::identity(dim),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        ensure_dim(self.dim(), labels.len())?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn explicit_labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Basis labels, defaulting to `e1, ..., en`.
    pub fn labels(&self) -> Vec<String> {
        self.labels.clone().unwrap_or_else(|| default_labels(self.dim()))
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket_tensor(&self) -> &StructureTensor {
        &self.bracket
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.eval(x, y)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        self.bracket.basis_product(i, j)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn alpha_inverse(&self) -> Result<Matrix> {
        invert(&self.alpha).map_err(|_| Error::NotRegular("alpha is not invertible".into()))
    }

    pub fn beta_inverse(&self) -> Result<Matrix> {
        invert(&self.beta).map_err(|_| Error::NotRegular("beta is not invertible".into()))
    }

    pub fn is_regular(&self) -> bool {
        self.alpha.is_invertible() && self.beta.is_invertible()
    }

    /// `α^k β^l`; negative exponents use the inverses and require regularity.
    pub fn twist_power(&self, k: i64, l: i64) -> Result<Matrix> {
        let a = signed_power(&self.alpha, k, || self.alpha_inverse())?;
        let b = signed_power(&self.beta, l, || self.beta_inverse())?;
        a.mul(&b)
    }

    /// Fails with `NotRegular` unless both twists are invertible and bracket
    /// homomorphisms.
    pub fn require_regular(&self) -> Result<()> {
        self.alpha_inverse()?;
        self.beta_inverse()?;
        let report = check_multiplicative(self);
        if !report.all_passed() {
            return Err(Error::NotRegular("twist maps are not multiplicative".into()));
        }
        Ok(())
    }
}

fn signed_power(m: &Matrix, e: i64, inverse: impl FnOnce() -> Result<Matrix>) -> Result<Matrix> {
    let exp = u32::try_from(e.unsigned_abs())
        .map_err(|_| Error::InvalidInput(format!("exponent {e} too large")))?;
    if e >= 0 {
        m.pow(exp)
    } else {
        inverse()?.pow(exp)
    }
}

/// A Bihom-associative algebra: product `μ` and twists `α`, `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BihomAssociativeAlgebra {
    name: Option<String>,
    product: StructureTensor,
    alpha: Matrix,
    beta: Matrix,
}

impl BihomAssociativeAlgebra {
    pub fn new(product: StructureTensor, alpha: Matrix, beta: Matrix) -> Result<Self> {
        let n = product.dim();
        for m in [&alpha, &beta] {
            ensure_dim(n, m.rows())?;
            ensure_dim(n, m.cols())?;
        }
        Ok(BihomAssociativeAlgebra {
            name: None,
            product,
            alpha,
            beta,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product_tensor(&self) -> &StructureTensor {
        &self.product
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.product.eval(x, y)
    }
}

/// The individual identities reported by the checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    CommutingTwists,
    SkewSymmetry,
    BihomJacobi,
    BihomAssociativity,
    AlphaMultiplicative,
    BetaMultiplicative,
    AlphaRegular,
    BetaRegular,
    ModuleTwistsCommute,
    AlphaEquivariance,
    BetaEquivariance,
    ActionCompatibility,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::CommutingTwists => "commuting twists",
            Axiom::SkewSymmetry => "skew-symmetry",
            Axiom::BihomJacobi => "bihom-jacobi",
            Axiom::BihomAssociativity => "bihom-associativity",
            Axiom::AlphaMultiplicative => "alpha multiplicative",
            Axiom::BetaMultiplicative => "beta multiplicative",
            Axiom::AlphaRegular => "alpha regular",
            Axiom::BetaRegular => "beta regular",
            Axiom::ModuleTwistsCommute => "module twists commute",
            Axiom::AlphaEquivariance => "rho(alpha x) alpha_M = alpha_M rho(x)",
            Axiom::BetaEquivariance => "rho(beta x) beta_M = beta_M rho(x)",
            Axiom::ActionCompatibility => "rho([beta x, y]) beta_M = rho(alpha beta x) rho(y) - rho(beta y) rho(alpha x)",
        }
    }
}

/// First failing basis tuple and the exact defect there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub defect: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub violation: Option<Violation>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub(crate) fn push(&mut self, axiom: Axiom, violation: Option<Violation>) {
        self.checks.push(AxiomCheck { axiom, violation });
    }

    pub(crate) fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[AxiomCheck] {
        &self.checks
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    /// Whether `axiom` was checked and held.
    pub fn passed(&self, axiom: Axiom) -> bool {
        self.get(axiom).is_some_and(AxiomCheck::passed)
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.get(axiom).and_then(|c| c.violation.as_ref())
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    /// Commuting twists, twisted skew-symmetry and the Bihom-Jacobi identity.
    pub fn is_bihom_lie(&self) -> bool {
        [Axiom::CommutingTwists, Axiom::SkewSymmetry, Axiom::BihomJacobi]
            .into_iter()
            .all(|a| self.passed(a))
    }

    pub fn is_bihom_associative(&self) -> bool {
        self.passed(Axiom::CommutingTwists) && self.passed(Axiom::BihomAssociativity)
    }

    pub fn is_multiplicative(&self) -> bool {
        self.passed(Axiom::AlphaMultiplicative) && self.passed(Axiom::BetaMultiplicative)
    }

    pub fn is_regular(&self) -> bool {
        self.passed(Axiom::AlphaRegular) && self.passed(Axiom::BetaRegular)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.violation {
                None => writeln!(f, "  {:<24} pass", check.axiom.label())?,
                Some(v) => {
                    let idx: Vec<String> = v.indices.iter().map(|i| (i + 1).to_string()).collect();
                    writeln!(
                        f,
                        "  {:<24} FAIL at ({}) defect {}",
                        check.axiom.label(),
                        idx.join(", "),
                        format_vector(&v.defect)
                    )?
                }
            }
        }
        Ok(())
    }
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

/// First column `j` with `(a·b - b·a) e_j ≠ 0`.
pub(crate) fn commutator_violation(a: &Matrix, b: &Matrix) -> Option<Violation> {
    let ab = a.mul(b).expect("square twists");
    let ba = b.mul(a).expect("square twists");
    let diff = ab.sub(&ba).expect("square twists");
    (0..diff.cols()).find_map(|j| {
        let col = diff.column(j);
        (!is_zero_vector(&col)).then(|| Violation {
            indices: vec![j],
            defect: col,
        })
    })
}

fn multiplicative_violation(tensor: &StructureTensor, m: &Matrix) -> Option<Violation> {
    let n = tensor.dim();
    let images = columns(m);
    for i in 0..n {
        for j in 0..n {
            let lhs = m.apply(tensor.basis_product(i, j)).expect("square map");
            let rhs = tensor.eval(&images[i], &images[j]);
            let defect = sub_vectors(&lhs, &rhs);
            if !is_zero_vector(&defect) {
                return Some(Violation {
                    indices: vec![i, j],
                    defect,
                });
            }
        }
    }
    None
}

fn regular_violation(m: &Matrix) -> Option<Violation> {
    (!m.is_invertible()).then(|| Violation {
        indices: vec![],
        defect: vec![],
    })
}

/// Whether `α` and `β` are homomorphisms of the bracket.
pub fn check_multiplicative(l: &BihomLieAlgebra) -> AxiomReport {
    let mut report = AxiomReport::default();
    report.push(Axiom::AlphaMultiplicative, multiplicative_violation(&l.bracket, &l.alpha));
    report.push(Axiom::BetaMultiplicative, multiplicative_violation(&l.bracket, &l.beta));
    report
}

/// Whether `α` and `β` are bijective.
pub fn check_regular(l: &BihomLieAlgebra) -> AxiomReport {
    let mut report = AxiomReport::default();
    report.push(Axiom::AlphaRegular, regular_violation(&l.alpha));
    report.push(Axiom::BetaRegular, regular_violation(&l.beta));
    report
}

/// Checks commuting twists, twisted skew-symmetry, the Bihom-Jacobi identity,
/// multiplicativity and regularity. Use [`AxiomReport::is_bihom_lie`] for the
/// defining axioms alone.
pub fn check_bihom_lie(l: &BihomLieAlgebra) -> AxiomReport {
    let n = l.dim();
    let mut report = AxiomReport::default();
    report.push(Axiom::CommutingTwists, commutator_violation(&l.alpha, &l.beta));

    let alpha_e = columns(&l.alpha);
    let beta_e = columns(&l.beta);
    let beta2_e = columns(&l.beta.mul(&l.beta).expect("square twist"));

    let mut skew = None;
    'skew: for i in 0..n {
        for j in i..n {
            let defect = add_vectors(
                &l.bracket(&beta_e[i], &alpha_e[j]),
                &l.bracket(&beta_e[j], &alpha_e[i]),
            );
            if !is_zero_vector(&defect) {
                skew = Some(Violation {
                    indices: vec![i, j],
                    defect,
                });
                break 'skew;
            }
        }
    }
    report.push(Axiom::SkewSymmetry, skew);

    // [β(e_j), α(e_k)] for all ordered pairs
    let inner: Vec<Vec<Vector>> = (0..n)
        .map(|j| (0..n).map(|k| l.bracket(&beta_e[j], &alpha_e[k])).collect())
        .collect();
    let mut jacobi = None;
    'jac: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut defect = l.bracket(&beta2_e[i], &inner[j][k]);
                defect = add_vectors(&defect, &l.bracket(&beta2_e[j], &inner[k][i]));
                defect = add_vectors(&defect, &l.bracket(&beta2_e[k], &inner[i][j]));
                if !is_zero_vector(&defect) {
                    jacobi = Some(Violation {
                        indices: vec![i, j, k],
                        defect,
                    });
                    break 'jac;
                }
            }
        }
    }
    report.push(Axiom::BihomJacobi, jacobi);
    report.extend(check_multiplicative(l));
    report.extend(check_regular(l));
    report
}

/// Checks commuting twists, `α(a)(a'a'') = (aa')β(a'')`, and multiplicativity
/// of both twists with respect to the product.
pub fn check_bihom_associative(a: &BihomAssociativeAlgebra) -> AxiomReport {
    let n = a.dim();
    let mut report = AxiomReport::default();
    report.push(Axiom::CommutingTwists, commutator_violation(&a.alpha, &a.beta));
    let alpha_e = columns(&a.alpha);
    let beta_e = columns(&a.beta);
    let mut assoc = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = a.product(&alpha_e[i], a.product.basis_product(j, k));
                let rhs = a.product(a.product.basis_product(i, j), &beta_e[k]);
                let defect = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&defect) {
                    assoc = Some(Violation {
                        indices: vec![i, j, k],
                        defect,
                    });
                    break 'outer;
                }
            }
        }
    }
    report.push(Axiom::BihomAssociativity, assoc);
    report.push(Axiom::AlphaMultiplicative, multiplicative_violation(&a.product, &a.alpha));
    report.push(Axiom::BetaMultiplicative, multiplicative_violation(&a.product, &a.beta));
    report
}

/// `[α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]]` for the supplied bracket.
pub fn hom_jacobi_defect(
    bracket: &StructureTensor,
    alpha: &Matrix,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Vector> {
    let n = bracket.dim();
    ensure_dim(n, alpha.rows())?;
    ensure_dim(n, alpha.cols())?;
    for v in [x, y, z] {
        ensure_dim(n, v.len())?;
    }
    let term = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| -> Result<Vector> {
        Ok(bracket.eval(&alpha.apply(a)?, &bracket.eval(b, c)))
    };
    let mut total = term(x, y, z)?;
    total = add_vectors(&total, &term(y, z, x)?);
    total = add_vectors(&total, &term(z, x, y)?);
    Ok(total)
}

/// Whether `h` is closed under both twists and the bracket.
pub fn check_subalgebra(l: &BihomLieAlgebra, h: &Subspace) -> Result<bool> {
    ensure_dim(l.dim(), h.ambient_dim())?;
    for v in h.basis() {
        if !h.contains(&l.alpha.apply(v)?)? || !h.contains(&l.beta.apply(v)?)? {
            return Ok(false);
        }
    }
    for u in h.basis() {
        for v in h.basis() {
            if !h.contains(&l.bracket(u, v))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A linear map between two algebras, `matrix` of shape `target.dim × source.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    source: BihomLieAlgebra,
    target: BihomLieAlgebra,
    matrix: Matrix,
}

impl AlgebraMap {
    pub fn new(source: BihomLieAlgebra, target: BihomLieAlgebra, matrix: Matrix) -> Result<Self> {
        ensure_dim(target.dim(), matrix.rows())?;
        ensure_dim(source.dim(), matrix.cols())?;
        Ok(AlgebraMap {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &BihomLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &BihomLieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Graph `{(u, f(u))}` as a subspace of `source ⊕ target`.
    pub fn graph(&self) -> Subspace {
        let (n, m) = (self.source.dim(), self.target.dim());
        let vectors = (0..n)
            .map(|i| {
                let mut v = unit_vector(n + m, i);
                for r in 0..m {
                    v[n + r] = self.matrix[(r, i)].clone();
                }
                v
            })
            .collect();
        Subspace::span_unchecked(n + m, vectors)
    }
}

/// Whether `f` intertwines both twist pairs and preserves the bracket.
pub fn check_morphism(f: &AlgebraMap) -> bool {
    let (src, tgt, m) = (&f.source, &f.target, &f.matrix);
    let intertwines = |a_src: &Matrix, a_tgt: &Matrix| compose(a_tgt, m) == compose(m, a_src);
    if !intertwines(&src.alpha, &tgt.alpha) || !intertwines(&src.beta, &tgt.beta) {
        return false;
    }
    let images = columns(m);
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = m.apply(src.basis_bracket(i, j)).expect("checked shape");
            let rhs = tgt.bracket(&images[i], &images[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn compose(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("checked shape")
}
