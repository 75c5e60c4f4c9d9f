//! Parameterized example algebras.
//!
//! * `assoc2d(m, n)`: the two-dimensional Bihom-associative algebra with
//!   `e_i e_j = λ_i e_j`, `λ = (m, n)`, `α(e_2) = e_1/m + (n-1)/n e_2`, `β = id`.
//! * `sl2_twist(k, l)`: ordinary `sl(2)` in the basis `X, Y, H` together with the
//!   commuting automorphisms `A_k`, `A_l`, where
//!   `A_k(X) = X`, `A_k(Y) = -k²X + Y + kH`, `A_k(H) = -2kX + H`.
//!   Feed it to [`crate::yau_twist`] to obtain a Bihom-Lie algebra.
//! * `sl2_remark(k)`: the twisted bracket `{a, b} = [A_k(a), b]` with `α = A_k`,
//!   `β = id`.
//! * `abelian(n)`: zero bracket, identity twists.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{BihomAssociativeAlgebra, BihomLieAlgebra, StructureTensor};
use crate::construct::yau_twist;
use crate::error::{Error, Result};
use crate::io::AnyAlgebra;
use crate::linalg::{int, zero_vector, Matrix, Scalar};

pub const EXAMPLE_NAMES: [&str; 4] = ["assoc2d", "sl2_twist", "sl2_remark", "abelian"];

pub fn assoc2d(m: &Scalar, n: &Scalar) -> Result<BihomAssociativeAlgebra> {
    if m.is_zero() || n.is_zero() || n.is_one() {
        return Err(Error::InvalidParams(format!(
            "assoc2d requires m != 0, n != 0, n != 1 (got m={m}, n={n})"
        )));
    }
    let lambda = [m.clone(), n.clone()];
    let product = StructureTensor::from_fn(2, |i, j| {
        let mut v = zero_vector(2);
        v[j] = lambda[i].clone();
        v
    })?;
    let alpha = Matrix::from_fn(2, 2, |r, c| match (r, c) {
        (0, 0) => Scalar::one(),
        (0, 1) => m.recip(),
        (1, 1) => (n - Scalar::one()) / n,
        _ => Scalar::zero(),
    });
    Ok(BihomAssociativeAlgebra::new(product, alpha, Matrix::identity(2))?
        .with_name(format!("assoc2d(m={m}, n={n})")))
}

/// Bracket of `sl(2)` in the basis `X, Y, H`.
pub fn sl2_bracket() -> StructureTensor {
    let mut t = StructureTensor::zeros(3);
    let (x, y, h) = (0, 1, 2);
    t.set(x, y, h, int(1));
    t.set(y, x, h, int(-1));
    t.set(h, x, x, int(2));
    t.set(x, h, x, int(-2));
    t.set(h, y, y, int(-2));
    t.set(y, h, y, int(2));
    t
}

/// The automorphism `A_k` of `sl(2)`; columns are the images of `X, Y, H`.
pub fn sl2_automorphism(k: &Scalar) -> Matrix {
    Matrix::from_fn(3, 3, |r, c| match (r, c) {
        (0, 0) | (1, 1) | (2, 2) => Scalar::one(),
        (0, 1) => -(k * k),
        (0, 2) => -(k * int(2)),
        (2, 1) => k.clone(),
        _ => Scalar::zero(),
    })
}

fn sl2_labels() -> Vec<String> {
    vec!["X".into(), "Y".into(), "H".into()]
}

/// Ordinary `sl(2)` carrying `α = A_k`, `β = A_l` (input data for the Yau twist).
pub fn sl2_twist(k: &Scalar, l: &Scalar) -> Result<BihomLieAlgebra> {
    BihomLieAlgebra::new(sl2_bracket(), sl2_automorphism(k), sl2_automorphism(l))?
        .with_name(format!("sl2_twist(k={k}, l={l})"))
        .with_labels(sl2_labels())
}

/// `{a, b} = [A_k(a), b]` with `α = A_k`, `β = id`.
pub fn sl2_remark(k: &Scalar) -> Result<BihomLieAlgebra> {
    if k.is_zero() {
        return Err(Error::InvalidParams("sl2_remark requires k != 0".into()));
    }
    let alpha = sl2_automorphism(k);
    yau_twist(&sl2_bracket(), &alpha, &Matrix::identity(3))?
        .with_name(format!("sl2_remark(k={k})"))
        .with_labels(sl2_labels())
}

pub fn abelian(n: usize) -> BihomLieAlgebra {
    BihomLieAlgebra::abelian(n).with_name(format!("abelian({n})"))
}

/// Instantiates a named example with rational parameters.
pub fn generate_example(name: &str, params: &BTreeMap<String, Scalar>) -> Result<AnyAlgebra> {
    let expect = |allowed: &[&str]| -> Result<()> {
        for key in params.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::InvalidParams(format!(
                    "unknown parameter {key:?} for {name} (expected {})",
                    allowed.join(", ")
                )));
            }
        }
        for key in allowed {
            if !params.contains_key(*key) {
                return Err(Error::InvalidParams(format!("{name} requires parameter {key}")));
            }
        }
        Ok(())
    };
    match name {
        "assoc2d" => {
            expect(&["m", "n"])?;
            Ok(AnyAlgebra::Associative(assoc2d(&params["m"], &params["n"])?))
        }
        "sl2_twist" => {
            expect(&["k", "l"])?;
            Ok(AnyAlgebra::Lie(sl2_twist(&params["k"], &params["l"])?))
        }
        "sl2_remark" => {
            expect(&["k"])?;
            Ok(AnyAlgebra::Lie(sl2_remark(&params["k"])?))
        }
        "abelian" => {
            expect(&["n"])?;
            let n = &params["n"];
            let dim = n
                .to_integer()
                .try_into()
                .ok()
                .filter(|_| n.is_integer())
                .ok_or_else(|| Error::InvalidParams(format!("abelian needs a nonnegative integer n, got {n}")))?;
            Ok(AnyAlgebra::Lie(abelian(dim)))
        }
        other => Err(Error::InvalidParams(format!(
            "unknown example {other:?} (expected one of {})",
            EXAMPLE_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_bihom_associative, check_bihom_lie, check_multiplicative};
    use crate::construct::commutator_bihom_lie;
    use crate::linalg::ratio;

    fn params(pairs: &[(&str, Scalar)]) -> BTreeMap<String, Scalar> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn assoc2d_data() {
        let a = assoc2d(&int(2), &int(3)).unwrap();
        assert_eq!(a.alpha().column(1), vec![ratio(1, 2), ratio(2, 3)]);
        assert_eq!(a.product_tensor().basis_product(0, 0), &[int(2), int(0)]);
        assert_eq!(a.product_tensor().basis_product(0, 1), &[int(0), int(2)]);
        assert_eq!(a.product_tensor().basis_product(1, 0), &[int(3), int(0)]);
        assert_eq!(a.product_tensor().basis_product(1, 1), &[int(0), int(3)]);
        assert!(a.beta().is_identity());
    }

    #[test]
    fn assoc2d_rejects_bad_params() {
        for (m, n) in [(0, 3), (2, 0), (2, 1)] {
            assert!(matches!(assoc2d(&int(m), &int(n)), Err(Error::InvalidParams(_))));
        }
    }

    #[test]
    fn sl2_twist_identity_case() {
        let l = sl2_twist(&int(0), &int(0)).unwrap();
        assert!(l.alpha().is_identity() && l.beta().is_identity());
        assert_eq!(l.bracket_tensor(), &sl2_bracket());
    }

    #[test]
    fn sl2_remark_data() {
        let l = sl2_remark(&int(1)).unwrap();
        assert!(l.beta().is_identity());
        assert_eq!(l.alpha(), &sl2_automorphism(&int(1)));
        assert!(matches!(sl2_remark(&int(0)), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn generator_sweeps_pass_their_checks() {
        let values = [int(1), int(2), int(-3), ratio(1, 2), ratio(-5, 7)];
        for m in &values {
            for n in [int(2), int(3), int(-1), ratio(1, 3), ratio(7, 5)] {
                let a = assoc2d(m, &n).unwrap();
                assert!(check_bihom_associative(&a).all_passed(), "assoc2d({m},{n})");
                let lie = commutator_bihom_lie(&a).unwrap();
                assert!(check_bihom_lie(&lie).is_bihom_lie());
            }
        }
        for k in &values {
            for l in &values {
                let base = sl2_twist(k, l).unwrap();
                assert!(check_multiplicative(&base).all_passed());
                let tw = yau_twist(base.bracket_tensor(), base.alpha(), base.beta()).unwrap();
                assert!(check_bihom_lie(&tw).all_passed(), "sl2_twist({k},{l})");
            }
            assert!(check_bihom_lie(&sl2_remark(k).unwrap()).all_passed());
        }
        for n in 0..5 {
            assert!(check_bihom_lie(&abelian(n)).all_passed());
        }
    }

    #[test]
    fn generate_by_name() {
        let g = generate_example("assoc2d", &params(&[("m", int(2)), ("n", int(3))])).unwrap();
        assert!(matches!(g, AnyAlgebra::Associative(_)));
        let g = generate_example("abelian", &params(&[("n", int(4))])).unwrap();
        assert!(matches!(g, AnyAlgebra::Lie(ref l) if l.dim() == 4));
        assert!(generate_example("abelian", &params(&[("n", ratio(1, 2))])).is_err());
        assert!(generate_example("sl2_twist", &params(&[("k", int(1))])).is_err());
        assert!(generate_example("sl2_twist", &params(&[("k", int(1)), ("l", int(0)), ("q", int(0))])).is_err());
        assert!(generate_example("nope", &params(&[])).is_err());
    }
}
