//! Exact computational kernel for crossed modules of finite-dimensional
//! commutative algebras over prime fields.
//!
//! The crate is layered bottom-up:
//!
//! - [`linalg`]: exact Gaussian elimination over `F_p`, canonical subspaces
//!   and quotient spaces — the substrate everything else reduces to.
//! - [`algebra`]: commutative associative algebras given by structure
//!   constants, with ideals, quotients, products, morphisms and the
//!   multiplier algebra `M(R)`.
//! - [`xmod`]: algebra actions, crossed-module validation (equivariance and
//!   the Peiffer identity), the canonical constructors, and exhaustive
//!   morphism enumeration.
//! - [`basechange`]: the pullback and induced functors along an algebra
//!   morphism, their closed-form specializations, and brute-force verifiers
//!   for the universal properties and the adjunction between them.
//! - [`koszul`]: free crossed modules presented through the degree-two
//!   Koszul differential.
//!
//! Everything is deterministic: canonical bases are reduced row echelon
//! forms, searches enumerate in lexicographic order, and no randomness is
//! used anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod basechange;
pub mod koszul;
pub mod linalg;
pub mod xmod;

pub use algebra::{
    Algebra, AlgebraError, AlgebraMorphism, Ideal, SearchTooLarge, DEFAULT_MAX_SEARCH,
};
pub use linalg::{FpMatrix, Prime, QuotientSpace, Subspace};
pub use xmod::{AlgebraAction, CrossedModule, XModError, XModMorphism};
