//! Exact computations around the twisted commutative algebras
//! `Sym(Sym²ℂ^∞)`, `Sym(Λ²ℂ^∞)` and `Sym(ℂ^∞ ⊗ ℂ^∞)` at finite rank.
//!
//! The crate is split into four layers:
//!
//! * [`partitions`]: partitions, Littlewood–Richardson coefficients, Schur
//!   characters and the decomposition of each algebra into irreducibles.
//! * [`poset`]: the poset of matchings with its type I / type II moves, the
//!   orders used for initial terms, and comparability search.
//! * [`algebra`]: rank-`n` truncations of the algebras, the `gl_n` action,
//!   equivariant ideals, initial sets and move-closure verification.
//! * [`tor`]: Koszul homology of quotients by equivariant ideals, with
//!   Schur-decomposed Tor tables and stabilization reports.
//!
//! Everything is computed over the rationals with exact arithmetic.

pub mod algebra;
pub mod error;
pub mod flavor;
pub mod partitions;
pub mod poset;
pub mod rational;
pub mod tor;

pub use error::{Error, Result};
pub use flavor::Flavor;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/matchings.md")]
    mod matchings {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/tor.md")]
    mod tor {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
