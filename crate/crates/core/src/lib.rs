//! Exact-arithmetic workbench for the graded Lie algebras of the five smooth
//! nonhomogeneous projective horospherical varieties of Picard number one.
//!
//! Each such variety has automorphism Lie algebra `g = (l + C) ⋉ U`, where `l`
//! is a simple Lie algebra graded by a characteristic element and `U` is an
//! irreducible `l`-module. This crate constructs the five algebras over the
//! rationals with exact structure constants and certifies their algebraic
//! properties: gradation tables, fundamentality, transitivity, vanishing of
//! first Spencer cohomology in positive degrees, the prolongation property,
//! the positive-definite Hermitian forms, the Hodge decomposition, and the
//! equivariance identities.
//!
//! Module layout:
//!
//! - [`exactlinalg`] — rational scalars and sparse matrices, fraction-free
//!   rank/kernel computation
//! - [`rootdata`] — root systems of types A, B, C, F4, G2 and weight formulas
//! - [`chevalley`] — Chevalley bases with integer structure constants
//! - [`repbuilder`] — irreducible highest-weight modules with exact matrices
//! - [`horolie`] — assembly of the five horospherical models
//! - [`spencer`] — the bigraded Spencer cochain complex and its cohomology
//! - [`prolong`] — degree-by-degree Tanaka prolongation
//! - [`report`] — check runner and JSON report emission

pub mod chevalley;
pub mod exactlinalg;
pub mod horolie;
mod lowering;
pub mod prolong;
pub mod repbuilder;
pub mod report;
pub mod rootdata;
pub mod spencer;

pub use chevalley::GradedLieAlgebra;
pub use exactlinalg::{Rational, SparseMatrix, Subspace};
pub use rootdata::{CharacteristicElement, Family, RootSystem, Weight};
