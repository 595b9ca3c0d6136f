//! Computation in irreducible Artin groups of finite type.
//!
//! The four infinite families `A_n`, `B_n`, `D_n`, `I2(m)` are supported in
//! full: exact arithmetic in the associated finite Coxeter groups, the word
//! problem for the Artin monoid (both a Garside left-greedy normal form and
//! an independent rewriting-closure oracle), the fundamental element Δ, the
//! center generator, k-th roots of central elements, and the first-order
//! sentences Φ_k / Ψ_n that separate the elementary theories of
//! non-isomorphic groups in these families. Sporadic diagrams (E6–E8, F4,
//! H3, H4) can be constructed and explored through a generic reflection
//! model, but carry no center/root data.
//!
//! Entry points:
//! - [`coxeter`]: diagrams, the group-spec grammar, bipartitions.
//! - [`coxgroup`]: faithful models of the finite Coxeter groups, lengths,
//!   descent sets, enumeration.
//! - [`monoid`]: positive words, normal forms, equality deciders, group
//!   element arithmetic.
//! - [`center`]: 𝒥, Δ, the Coxeter number, the center generator.
//! - [`roots`]: root existence decisions, witnesses, root spectra.
//! - [`theory`]: sentences, finite-model evaluation, distinguishing verdicts.
//! - [`mcg`]: the mapping-class-group order bound and its Ψ-distinguisher.

pub mod caps;
pub mod center;
pub mod coxeter;
pub mod coxgroup;
mod error;
pub mod mcg;
pub mod monoid;
pub mod roots;
pub mod theory;

pub use caps::Caps;
pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
