use std::fmt;

use super::matching::{Edge, Matching};
use crate::{Error, Result};

/// A single rewrite of a matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Type I: add the edge `(a, b)` on two unused vertices.
    AddEdge { edge: Edge },
    /// Type I: move endpoint `from` of `edge` to the unused vertex `from + 1`.
    ShiftEndpoint { edge: Edge, from: u32 },
    /// Type II, nested case: `(k,ℓ)` around `(i,j)` with `k<i<j<ℓ`
    /// becomes `(k,j), (i,ℓ)`.
    TypeIINested { outer: Edge, inner: Edge },
    /// Type II, crossing case: `(i,j)` and `(k,ℓ)` with `i<k<j<ℓ`
    /// become `(i,k), (j,ℓ)`.
    TypeIICrossing { left: Edge, right: Edge },
}

impl Move {
    pub fn is_type1(&self) -> bool {
        matches!(self, Move::AddEdge { .. } | Move::ShiftEndpoint { .. })
    }

    /// Applies the move, checking every side condition.
    pub fn apply(&self, g: &Matching) -> Result<Matching> {
        let fail = |why: &str| Err(Error::InvalidMatching(format!("move {self} not applicable to {g}: {why}")));
        match *self {
            Move::AddEdge { edge: (a, b) } => {
                if g.contains_vertex(a) || g.contains_vertex(b) {
                    return fail("vertex in use");
                }
                g.replace(&[], &[(a, b)])
            }
            Move::ShiftEndpoint { edge, from } => {
                if !g.has_edge(edge) || (edge.0 != from && edge.1 != from) {
                    return fail("no such endpoint");
                }
                if g.contains_vertex(from + 1) {
                    return fail("target vertex in use");
                }
                let other = if edge.0 == from { edge.1 } else { edge.0 };
                g.replace(&[edge], &[(other, from + 1)])
            }
            Move::TypeIINested { outer: (k, l), inner: (i, j) } => {
                if !(k < i && i < j && j < l) || !g.has_edge((k, l)) || !g.has_edge((i, j)) {
                    return fail("edges not nested");
                }
                if !gap_condition(g, k, i, j) {
                    return fail("a vertex between k and i is matched at or below j");
                }
                g.replace(&[(k, l), (i, j)], &[(k, j), (i, l)])
            }
            Move::TypeIICrossing { left: (i, j), right: (k, l) } => {
                if !(i < k && k < j && j < l) || !g.has_edge((i, j)) || !g.has_edge((k, l)) {
                    return fail("edges not crossing");
                }
                if !gap_condition(g, k, j, j) {
                    return fail("a vertex between k and j is matched at or below j");
                }
                g.replace(&[(i, j), (k, l)], &[(i, k), (j, l)])
            }
        }
    }
}

/// Every vertex strictly between `lo` and `hi` that lies on an edge of `g`
/// is matched to something larger than `bound`. Unmatched vertices impose no
/// condition.
fn gap_condition(g: &Matching, lo: u32, hi: u32, bound: u32) -> bool {
    (lo + 1..hi).all(|v| g.partner(v).map_or(true, |p| p > bound))
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::AddEdge { edge: (a, b) } => write!(f, "add({a},{b})"),
            Move::ShiftEndpoint { edge: (a, b), from } => write!(f, "shift({a},{b}):{from}->{}", from + 1),
            Move::TypeIINested { outer: (k, l), inner: (i, j) } => write!(f, "nested({k},{l})({i},{j})"),
            Move::TypeIICrossing { left: (i, j), right: (k, l) } => write!(f, "crossing({i},{j})({k},{l})"),
        }
    }
}

/// All single type I moves whose result only uses vertices `≤ vertex_bound`.
pub fn type1_moves(g: &Matching, vertex_bound: u32) -> Vec<(Move, Matching)> {
    let mut out = Vec::new();
    let free: Vec<u32> = (1..=vertex_bound).filter(|&v| !g.contains_vertex(v)).collect();
    for (x, &a) in free.iter().enumerate() {
        for &b in &free[x + 1..] {
            let mv = Move::AddEdge { edge: (a, b) };
            let next = mv.apply(g).expect("free vertices");
            out.push((mv, next));
        }
    }
    for &edge in g.edges() {
        for from in [edge.0, edge.1] {
            if from < vertex_bound && !g.contains_vertex(from + 1) {
                let mv = Move::ShiftEndpoint { edge, from };
                let next = mv.apply(g).expect("target vertex is free");
                out.push((mv, next));
            }
        }
    }
    out
}

/// All single type II moves. They keep both the vertex set and the number of
/// edges.
pub fn type2_moves(g: &Matching) -> Vec<(Move, Matching)> {
    let mut out = Vec::new();
    for &(i, j) in g.edges() {
        for &(k, l) in g.edges() {
            if j >= l {
                continue;
            }
            let mv = if k < i {
                Move::TypeIINested { outer: (k, l), inner: (i, j) }
            } else if i < k && k < j {
                Move::TypeIICrossing { left: (i, j), right: (k, l) }
            } else {
                continue;
            };
            if let Ok(next) = mv.apply(g) {
                out.push((mv, next));
            }
        }
    }
    out
}

/// Type I moves within `vertex_bound` followed by all type II moves.
pub fn all_moves(g: &Matching, vertex_bound: u32) -> Vec<(Move, Matching)> {
    let mut out = type1_moves(g, vertex_bound);
    out.extend(type2_moves(g));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching;
    use std::collections::BTreeSet;

    fn results(moves: &[(Move, Matching)]) -> BTreeSet<Matching> {
        moves.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Oracle: every matching on `1..=n` with one more edge or the same edges
    /// with one vertex bumped by one, found by scanning all matchings.
    fn type1_oracle(g: &Matching, n: u32) -> BTreeSet<Matching> {
        let k = g.edge_count();
        let mut out = BTreeSet::new();
        for cand in crate::poset::enumerate_matchings(k + 1, n) {
            if g.edges().iter().all(|e| cand.has_edge(*e)) {
                out.insert(cand);
            }
        }
        for cand in crate::poset::enumerate_matchings(k, n) {
            let removed: Vec<_> = g.edges().iter().filter(|e| !cand.has_edge(**e)).collect();
            let added: Vec<_> = cand.edges().iter().filter(|e| !g.has_edge(**e)).collect();
            if removed.len() == 1 && added.len() == 1 {
                let (r, a) = (*removed[0], *added[0]);
                let bumped = [(r.0, r.1), (r.1, r.0)].into_iter().any(|(x, y)| {
                    !g.contains_vertex(x + 1) && (y.min(x + 1), y.max(x + 1)) == a
                });
                if bumped {
                    out.insert(cand);
                }
            }
        }
        out
    }

    #[test]
    fn type1_examples() {
        let got = type1_moves(&Matching::empty(), 2);
        assert_eq!(results(&got), [matching![(1, 2)]].into_iter().collect());

        let got = type1_moves(&matching![(1, 2)], 3);
        assert_eq!(results(&got), [matching![(1, 3)]].into_iter().collect());

        let got = type1_moves(&matching![(1, 4)], 6);
        let expected: BTreeSet<Matching> = [
            matching![(1, 4), (2, 3)],
            matching![(1, 4), (2, 5)],
            matching![(1, 4), (2, 6)],
            matching![(1, 4), (3, 5)],
            matching![(1, 4), (3, 6)],
            matching![(1, 4), (5, 6)],
            matching![(1, 5)],
            matching![(2, 4)],
        ]
        .into_iter()
        .collect();
        assert_eq!(results(&got), expected);
    }

    #[test]
    fn type1_matches_oracle() {
        for n in 2..=7 {
            for k in 0..=2 {
                for g in crate::poset::enumerate_matchings(k, n) {
                    assert_eq!(results(&type1_moves(&g, n)), type1_oracle(&g, n), "{g} n={n}");
                }
            }
        }
    }

    #[test]
    fn pictured_moves() {
        let got = type2_moves(&matching![(1, 4), (2, 3)]);
        assert_eq!(results(&got), [matching![(1, 3), (2, 4)]].into_iter().collect());
        let got = type2_moves(&matching![(1, 3), (2, 4)]);
        assert_eq!(results(&got), [matching![(1, 2), (3, 4)]].into_iter().collect());
        assert!(type2_moves(&matching![(1, 2), (3, 4)]).is_empty());
        assert!(type2_moves(&matching![(1, 2)]).is_empty());
    }

    #[test]
    fn side_conditions() {
        // nested (1,6) ⊃ (3,4) with 2 matched to 5 ≤ 4? no: 5 > 4, allowed
        let g = matching![(1, 6), (3, 4), (2, 5)];
        let mv = Move::TypeIINested { outer: (1, 6), inner: (3, 4) };
        assert_eq!(mv.apply(&g).unwrap(), matching![(1, 4), (3, 6), (2, 5)]);
        // 2 matched to 7 > 4 still fine; matched below j blocks the move
        let g = matching![(1, 6), (4, 5), (2, 3)];
        let mv = Move::TypeIINested { outer: (1, 6), inner: (4, 5) };
        assert!(mv.apply(&g).is_err());
        // unmatched vertices in the gap impose nothing
        let g = matching![(1, 6), (3, 4)];
        assert!(Move::TypeIINested { outer: (1, 6), inner: (3, 4) }.apply(&g).is_ok());
        // crossing (1,4),(2,6) with 3 matched to 5 > 4: allowed
        let g = matching![(1, 4), (2, 6), (3, 5)];
        let mv = Move::TypeIICrossing { left: (1, 4), right: (2, 6) };
        assert_eq!(mv.apply(&g).unwrap(), matching![(1, 2), (4, 6), (3, 5)]);
    }

    #[test]
    fn move_invariants_under_fuzzing() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let bound = 14;
        let mut g = Matching::empty();
        for _ in 0..10_000 {
            let mut moves = all_moves(&g, bound);
            if moves.is_empty() || g.edge_count() >= 6 && rng.gen_bool(0.3) {
                g = Matching::empty();
                continue;
            }
            let (mv, next) = moves.swap_remove(rng.gen_range(0..moves.len()));
            assert_eq!(mv.apply(&g).unwrap(), next);
            // valence ≤ 1 is re-checked by construction
            assert!(Matching::new(next.edges().iter().copied()).is_ok());
            match mv {
                Move::AddEdge { .. } => {
                    assert_eq!(next.edge_count(), g.edge_count() + 1);
                }
                Move::ShiftEndpoint { .. } => {
                    assert_eq!(next.edge_count(), g.edge_count());
                    assert_eq!(next.label_sum(), g.label_sum() + 1);
                }
                Move::TypeIINested { .. } | Move::TypeIICrossing { .. } => {
                    assert_eq!(next.edge_count(), g.edge_count());
                    assert_eq!(next.vertices(), g.vertices());
                    // type II moves go up in ⪯
                    assert!(next > g);
                }
            }
            g = next;
        }
    }
}
