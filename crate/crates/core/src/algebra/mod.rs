//! Rank-`n` truncations of the three algebras, their `gl_n` action, and
//! equivariant ideals.

mod closure;
mod ideal;
mod initial;
mod linalg;
mod matrix;
mod poly;
mod vars;

pub use closure::{rep_closure, RepClosure};
pub use ideal::{
    admissible_vector, dominant_weights, ideal_component, ideal_contains_isotypic, isotypic_support, monomials_of_degree,
    monomials_of_weight, relabel, subsets, weight_orbit, weights_of_degree, EquivariantIdeal, DEFAULT_DEGREE_BOUND,
};
pub use initial::{
    admissible_component, degree_one_initial_set, degree_one_vector, initial_matching, initial_set, matching_coordinates,
    monomial_matching, verify_degree_one_closure, verify_move_closure, MoveClosureReport, MoveViolation,
};
pub use linalg::{Echelon, SparseVec};
pub use matrix::{entry, highest_weight_vector, isotypic_label, minor, pfaffian};
pub use poly::{lie_act, Monomial, PolyDisplay, SparsePolynomial};
pub use vars::{indicator_weight, weight_leq, weight_sub, GlGenerator, SystemKind, VarId, VariableSystem, Weight};
