//! Exact-arithmetic workbench for finite-dimensional Bihom-Lie algebras.
//!
//! Algebras are given by structure constants over the rationals together with
//! two twist maps `alpha` and `beta`. The crate checks the Bihom-Lie and
//! Bihom-associative axioms, builds the standard constructions (commutator
//! algebra, Yau twist, direct sum, semidirect product, derivation and central
//! extensions), computes spaces of twisted derivations, and computes the
//! cohomology of the twisted cochain complex with coefficients in the trivial,
//! adjoint or a user-supplied representation.
//!
//! All arithmetic is exact; every check is an equality.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cohomology;
pub mod construct;
pub mod derivation;
pub mod error;
pub mod examples;
pub mod io;
pub mod linalg;

pub use algebra::{
    check_bihom_associative, check_bihom_lie, check_morphism, check_multiplicative,
    check_regular, check_subalgebra, hom_jacobi_defect, AlgebraMap, Axiom, AxiomReport,
    BihomAssociativeAlgebra, BihomLieAlgebra, StructureTensor, Violation,
};
pub use cohomology::{
    adjoint_representation, check_representation, coboundary_matrix, cochain_space, cohomology,
    trivial_representation, CoboundaryMap, CochainBasis, CohomologyReport, Representation,
};
pub use construct::{
    central_extension, commutator_bihom_lie, derivation_extension, direct_sum,
    extension_isomorphism, semidirect_product, yau_twist, ExtensionCocycle,
};
pub use derivation::{
    derivation_bracket, derivation_space, inner_derivation_space, twist_power, FixedPointSet,
    TypedDerivation,
};
pub use error::{Error, Result};
pub use linalg::{invert, kernel_basis, rref, Matrix, Scalar, Subspace, Vector};
