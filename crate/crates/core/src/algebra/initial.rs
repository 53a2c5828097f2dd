//! Initial terms of admissible vectors and move-closure of initial sets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use super::ideal::{subsets, EquivariantIdeal};
use super::linalg::Echelon;
use super::poly::{Monomial, SparsePolynomial};
use super::vars::{indicator_weight, SystemKind, VariableSystem};
use crate::poset::{
    degree_one_moves, total_order_with, type1_moves, type2_moves, Color, ColoredMove, ColoredSet, EdgeReading, Matching, Move,
};
use crate::rational::Q;
use crate::{Error, Flavor, Result};

/// Echelon key ordering matchings `⪯`-descending, so that each pivot is the
/// initial term of its row.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Desc {
    m: Matching,
    reading: EdgeReading,
}

impl Ord for Desc {
    fn cmp(&self, other: &Self) -> Ordering {
        total_order_with(&other.m, &self.m, self.reading)
    }
}

impl PartialOrd for Desc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn require_matching_model(sys: &VariableSystem) -> Result<()> {
    match sys.flavor() {
        Some(Flavor::Symmetric) | Some(Flavor::Antisymmetric) => Ok(()),
        _ => Err(Error::UnsupportedFlavor(format!("{sys} has no matching model"))),
    }
}

/// The matching `Γ` of an admissible monomial `m_Γ`.
pub fn monomial_matching(sys: &VariableSystem, m: &Monomial) -> Result<Matching> {
    Matching::new(m.vars().iter().map(|&v| sys.label(v)))
}

/// Coordinates of an admissible vector in the `m_Γ` basis.
pub fn matching_coordinates(sys: &VariableSystem, f: &SparsePolynomial) -> Result<BTreeMap<Matching, Q>> {
    require_matching_model(sys)?;
    let mut out = BTreeMap::new();
    for (m, c) in f.terms() {
        if m.weight(sys).iter().any(|&x| x > 1) {
            return Err(Error::InvalidMatching(format!("{} is not admissible", f.display(sys))));
        }
        out.insert(monomial_matching(sys, m)?, c.clone());
    }
    Ok(out)
}

/// The `⪯`-largest matching with nonzero coefficient.
pub fn initial_matching(sys: &VariableSystem, f: &SparsePolynomial, reading: EdgeReading) -> Result<Matching> {
    let coords = matching_coordinates(sys, f)?;
    coords
        .into_keys()
        .max_by(|a, b| total_order_with(a, b, reading))
        .ok_or(Error::ZeroVector)
}

/// Basis of `I ∩ span{m_Γ : Γ perfect on support}` in matching coordinates,
/// in reduced echelon form with respect to `⪯` (descending).
pub fn admissible_component(
    ideal: &EquivariantIdeal,
    support: &[u32],
    reading: EdgeReading,
) -> Result<Vec<BTreeMap<Matching, Q>>> {
    Ok(admissible_echelon(ideal, support, reading)?
        .into_reduced()
        .rows()
        .iter()
        .map(|r| r.iter().map(|(k, c)| (k.m.clone(), c.clone())).collect())
        .collect())
}

fn admissible_echelon(ideal: &EquivariantIdeal, support: &[u32], reading: EdgeReading) -> Result<Echelon<Desc>> {
    let sys = ideal.system();
    require_matching_model(sys)?;
    let mut out = Echelon::new();
    if support.len() % 2 == 1 {
        return Ok(out);
    }
    let w = indicator_weight(sys.rank(), support);
    for row in ideal.weight_space(support.len() / 2, &w)?.rows() {
        let f = SparsePolynomial::from_terms(row.clone());
        let v = matching_coordinates(sys, &f)?.into_iter().map(|(m, c)| (Desc { m, reading }, c)).collect();
        out.insert(v);
    }
    Ok(out)
}

/// `in(I)` restricted to matchings with at most `max_edges` edges on
/// vertices `1..=vertex_bound`.
pub fn initial_set(
    ideal: &EquivariantIdeal,
    max_edges: usize,
    vertex_bound: u32,
    reading: EdgeReading,
) -> Result<BTreeSet<Matching>> {
    let vertices: Vec<u32> = (1..=vertex_bound).collect();
    let mut out = BTreeSet::new();
    for e in 0..=max_edges {
        for support in subsets(&vertices, 2 * e) {
            let ech = admissible_echelon(ideal, &support, reading)?;
            out.extend(ech.pivots().map(|k| k.m.clone()));
        }
    }
    Ok(out)
}

/// A move out of the initial set that lands outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveViolation<S, M> {
    pub from: S,
    pub mv: M,
    pub to: S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveClosureReport<S, M> {
    pub initial: BTreeSet<S>,
    pub moves_checked: usize,
    pub violations: Vec<MoveViolation<S, M>>,
}

impl<S, M> MoveClosureReport<S, M> {
    pub fn is_closed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the truncated initial set is closed under every type I and
/// type II move that stays inside the truncation.
pub fn verify_move_closure(
    ideal: &EquivariantIdeal,
    max_edges: usize,
    vertex_bound: u32,
    reading: EdgeReading,
) -> Result<MoveClosureReport<Matching, Move>> {
    let initial = initial_set(ideal, max_edges, vertex_bound, reading)?;
    let mut moves_checked = 0;
    let mut violations = Vec::new();
    for g in &initial {
        let mut moves = type1_moves(g, vertex_bound);
        moves.extend(type2_moves(g));
        for (mv, next) in moves {
            if next.edge_count() > max_edges {
                continue;
            }
            moves_checked += 1;
            if !initial.contains(&next) {
                violations.push(MoveViolation { from: g.clone(), mv, to: next });
            }
        }
    }
    Ok(MoveClosureReport { initial, moves_checked, violations })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct DescColored(std::cmp::Reverse<ColoredSet>);

fn colored_set(sys: &VariableSystem, m: &Monomial) -> ColoredSet {
    ColoredSet::new(m.vars().iter().map(|&v| {
        let (i, c) = sys.label(v);
        (i, if c == 0 { Color::Red } else { Color::Blue })
    }))
}

/// `in(I)` for an ideal of the degree-one algebra `ℂ[x_i, y_i]`: colored
/// sets with at most `max_len` elements in `1..=bound`. `x_i` is red.
pub fn degree_one_initial_set(ideal: &EquivariantIdeal, max_len: usize, bound: u32) -> Result<BTreeSet<ColoredSet>> {
    let sys = ideal.system();
    if sys.kind() != SystemKind::DegreeOne {
        return Err(Error::UnsupportedFlavor(format!("{sys} is not the degree-one algebra")));
    }
    let vertices: Vec<u32> = (1..=bound).collect();
    let mut out = BTreeSet::new();
    for k in 0..=max_len {
        for support in subsets(&vertices, k) {
            let w = indicator_weight(sys.rank(), &support);
            let mut ech: Echelon<DescColored> = Echelon::new();
            for row in ideal.weight_space(k, &w)?.rows() {
                ech.insert(row.iter().map(|(m, c)| (DescColored(std::cmp::Reverse(colored_set(sys, m))), c.clone())).collect());
            }
            out.extend(ech.pivots().map(|k| k.0 .0.clone()));
        }
    }
    Ok(out)
}

pub fn verify_degree_one_closure(
    ideal: &EquivariantIdeal,
    max_len: usize,
    bound: u32,
) -> Result<MoveClosureReport<ColoredSet, ColoredMove>> {
    let initial = degree_one_initial_set(ideal, max_len, bound)?;
    let mut moves_checked = 0;
    let mut violations = Vec::new();
    for s in &initial {
        for (mv, next) in degree_one_moves(s, bound) {
            if next.len() > max_len {
                continue;
            }
            moves_checked += 1;
            if !initial.contains(&next) {
                violations.push(MoveViolation { from: s.clone(), mv, to: next });
            }
        }
    }
    Ok(MoveClosureReport { initial, moves_checked, violations })
}

/// `Σ c_k · (monomial of colored set k)` over all colorings of `support`,
/// colorings enumerated as binary words with `x` (red) as 0.
pub fn degree_one_vector(sys: &VariableSystem, support: &[u32], coeffs: &[i64]) -> Result<SparsePolynomial> {
    let mut out = SparsePolynomial::zero();
    for (word, &c) in (0u32..1 << support.len()).zip(coeffs) {
        let mut vars = Vec::new();
        for (k, &i) in support.iter().enumerate() {
            let color = (word >> (support.len() - 1 - k)) & 1;
            vars.push(sys.var(i, color)?.expect("degree-one variables never vanish").0);
        }
        out.add_term(Monomial::from_vars(vars), Q::from_integer(c.into()));
    }
    Ok(out)
}
