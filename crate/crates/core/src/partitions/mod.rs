//! Partition combinatorics and Schur-character arithmetic over exact integers.

mod decompose;
mod lr;
mod partition;
mod symfun;

pub use decompose::{algebra_character, closed_form_algebra, decompose_algebra};
pub use lr::lr_coefficient;
pub use partition::{contains, transpose, Partition};
pub use symfun::{
    decompose_into_schur, schur_character, schur_character_pair, CharacterTable, Irrep, Kostka, SymPolynomial,
};
