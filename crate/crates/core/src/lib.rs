//! Exact computations with finite semigroups and their subdirect powers.
//!
//! Everything here works on Cayley tables and on finite descriptions of
//! elements of the countable power `S^ℕ`:
//!
//! - [`semigroup`]: validated Cayley tables, direct powers, subsemigroup closure.
//! - [`tuple`](mod@tuple): finite sets of tuples closed under componentwise product.
//! - [`iso`]: isomorphism-invariant fingerprints and a backtracking isomorphism oracle.
//! - [`structure`]: idempotents, archimedean components, kernels, nilpotency,
//!   Rees quotients and rectangular bands.
//! - [`semilattice`]: order utilities for semilattices.
//! - [`seq`]: eventually periodic sequences with exact pointwise arithmetic.
//! - [`constructions`]: witness families of pairwise non-isomorphic subdirect powers.
//! - [`certify`]: non-isomorphism certificates.
//! - [`classify`]: the decision procedure for the subdirect power type.
//! - [`enumerate`]: exhaustive census of subdirect subsemigroups of small powers.
//! - [`catalog`]: named small semigroups and parameterised families.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod catalog;
pub mod certify;
pub mod classify;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod iso;
pub mod semigroup;
pub mod semilattice;
pub mod seq;
pub mod structure;
pub mod tuple;

pub use error::{Error, Result};
pub use semigroup::{Elem, FiniteSemigroup};
pub use semilattice::Semilattice;
pub use seq::EpSeq;
pub use tuple::{Tuple, TupleAlgebra};
