//! Exact computation in Artin monoids presented by Coxeter matrices, and
//! analysis of the KMS inverse-temperature space of the associated
//! semigroup C*-algebra under the length dynamics.
//!
//! The crate is organized around two independent computational routes that
//! cross-validate each other:
//!
//! * [`word`] — the brute-force route: equivalence classes by homogeneous
//!   rewriting, divisibility by class scanning, ball enumeration;
//! * [`reversing`] — the fast route: complements and right LCMs by subword
//!   reversing from the atom complement table.
//!
//! On top of these sit [`cliques`] (clique enumeration, clique
//! polynomials, the minimal closure set), [`lambda`] (lists over the
//! monoid, the branching recursion and its tree, the inclusion–exclusion
//! polynomial), [`sets`] (the symbolic algebra of cells `pΩ_K`), and
//! [`kms`] (exact root isolation and assembly of the inverse-temperature
//! space, gap detection, and the finitely additive measure on cells).

pub mod cliques;
pub mod error;
pub mod fixtures;
pub mod kms;
pub mod lambda;
pub mod poly;
pub mod presentation;
pub mod reversing;
pub mod sets;
pub mod word;

pub use error::{Error, Result};
pub use poly::{IntPoly, RootInterval};
pub use presentation::{
    classify, direct_product, free_product, Classification, CoxeterMatrix, GeneratorId,
    MonoidPresentation, TypeLabel,
};
pub use word::{Ball, EquivClass, Word};
