//! Comparability by breadth-first search.
//!
//! Every move weakly increases the edge count, the largest vertex and the
//! label sum, so when searching for a path to `b` we can discard states that
//! exceed `b` in any of them. The remaining state space is finite, which makes
//! both searches decision procedures rather than semi-decisions.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::matching::Matching;
use super::moves::{all_moves, type1_moves, Move};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Which order a comparability query is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetOrder {
    /// `≤`, generated by type I moves.
    Type1,
    /// `⊑`, generated by moves of both types.
    Full,
}

impl std::str::FromStr for PosetOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "type1" | "le" | "<=" => Ok(PosetOrder::Type1),
            "full" | "sq" => Ok(PosetOrder::Full),
            other => Err(format!("unknown order '{other}' (expected type1 or full)")),
        }
    }
}

/// Generic BFS from `start` to `target`. Returns the path of (move, state)
/// pairs, `None` when the target is unreachable, or an error once more than
/// `budget` states have been visited.
pub fn bfs_path<S, M>(
    start: &S,
    target: &S,
    budget: usize,
    mut successors: impl FnMut(&S) -> Vec<(M, S)>,
) -> Result<Option<Vec<(M, S)>>>
where
    S: Clone + Eq + Hash,
    M: Clone,
{
    if start == target {
        return Ok(Some(Vec::new()));
    }
    let mut parent: HashMap<S, Option<(S, M)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (mv, next) in successors(&cur) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((cur.clone(), mv)));
            if &next == target {
                let mut path = Vec::new();
                let mut at = next;
                while let Some(Some((prev, mv))) = parent.get(&at).cloned() {
                    path.push((mv, at));
                    at = prev;
                }
                path.reverse();
                return Ok(Some(path));
            }
            if parent.len() > budget {
                return Err(Error::SearchBudgetExceeded(budget));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

fn within(m: &Matching, b: &Matching) -> bool {
    m.edge_count() <= b.edge_count() && m.max_vertex() <= b.max_vertex() && m.label_sum() <= b.label_sum()
}

/// Path of moves from `a` to `b` under the chosen order, if one exists.
pub fn comparability_witness(
    a: &Matching,
    b: &Matching,
    order: PosetOrder,
    budget: usize,
) -> Result<Option<Vec<(Move, Matching)>>> {
    if !within(a, b) {
        return Ok(None);
    }
    let bound = b.max_vertex();
    bfs_path(a, b, budget, |m| {
        let moves = match order {
            PosetOrder::Type1 => type1_moves(m, bound),
            PosetOrder::Full => all_moves(m, bound),
        };
        moves.into_iter().filter(|(_, next)| within(next, b)).collect()
    })
}

/// Decides `a ≤ b`.
pub fn leq_type1(a: &Matching, b: &Matching, budget: usize) -> Result<bool> {
    Ok(comparability_witness(a, b, PosetOrder::Type1, budget)?.is_some())
}

/// Decides `a ⊑ b`, returning a replayable move sequence when it holds.
pub fn leq_full(a: &Matching, b: &Matching, budget: usize) -> Result<Option<Vec<(Move, Matching)>>> {
    comparability_witness(a, b, PosetOrder::Full, budget)
}

pub fn leq(a: &Matching, b: &Matching, order: PosetOrder, budget: usize) -> Result<bool> {
    Ok(comparability_witness(a, b, order, budget)?.is_some())
}

/// Replays a witness from `start`, returning the final matching.
pub fn replay(start: &Matching, path: &[(Move, Matching)]) -> Result<Matching> {
    let mut cur = start.clone();
    for (mv, expected) in path {
        cur = mv.apply(&cur)?;
        if &cur != expected {
            return Err(Error::InvalidMatching(format!("replay of {mv} gave {cur}, expected {expected}")));
        }
    }
    Ok(cur)
}

/// Greedy antichain: walks `candidates` in order and keeps each element that
/// is incomparable with everything kept so far. The result is maximal by
/// inclusion within `candidates`.
pub fn antichain_search(candidates: &[Matching], order: PosetOrder, budget: usize) -> Result<Vec<Matching>> {
    let mut chosen: Vec<Matching> = Vec::new();
    for c in candidates {
        let mut free = true;
        for x in &chosen {
            if leq(x, c, order, budget)? || leq(c, x, order, budget)? {
                free = false;
                break;
            }
        }
        if free {
            chosen.push(c.clone());
        }
    }
    Ok(chosen)
}

/// Greedy antichain among all `edge_count`-edge matchings on `1..=vertex_bound`,
/// enumerated in `⪯` order.
pub fn antichain_search_bounded(
    edge_count: usize,
    vertex_bound: u32,
    order: PosetOrder,
    budget: usize,
) -> Result<Vec<Matching>> {
    antichain_search(&super::enumerate_matchings(edge_count, vertex_bound), order, budget)
}

/// Width (largest antichain) of a finite poset given by its `≤` relation,
/// via Dilworth's theorem: width = size − maximum matching in the strict
/// comparability graph.
pub fn poset_width(len: usize, leq: impl Fn(usize, usize) -> bool) -> usize {
    let succ: Vec<Vec<usize>> = (0..len).map(|a| (0..len).filter(|&b| a != b && leq(a, b)).collect()).collect();
    let mut match_right: Vec<Option<usize>> = vec![None; len];
    fn augment(a: usize, succ: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for &b in &succ[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if match_right[b].map_or(true, |a2| augment(a2, succ, seen, match_right)) {
                match_right[b] = Some(a);
                return true;
            }
        }
        false
    }
    let mut matched = 0;
    for a in 0..len {
        let mut seen = vec![false; len];
        if augment(a, &succ, &mut seen, &mut match_right) {
            matched += 1;
        }
    }
    len - matched
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching;
    use crate::poset::{enumerate_matchings, example_gamma};

    const B: usize = DEFAULT_BUDGET;

    #[test]
    fn reflexive() {
        let g = matching![(1, 3), (2, 5)];
        assert!(leq_type1(&g, &g, B).unwrap());
        assert_eq!(leq_full(&g, &g, B).unwrap(), Some(Vec::new()));
    }

    #[test]
    fn shifting_both_endpoints() {
        let path = comparability_witness(&matching![(1, 2)], &matching![(2, 3)], PosetOrder::Type1, B)
            .unwrap()
            .unwrap();
        assert_eq!(path.len(), 2);
        assert_eq!(replay(&matching![(1, 2)], &path).unwrap(), matching![(2, 3)]);
    }

    #[test]
    fn full_order_examples() {
        // no moves out of two disjoint unnested edges keep the label sum
        assert_eq!(leq_full(&matching![(1, 2), (3, 4)], &matching![(1, 4), (2, 3)], B).unwrap(), None);
        // the pictured chain
        let path = leq_full(&matching![(1, 4), (2, 3)], &matching![(1, 2), (3, 4)], B).unwrap().unwrap();
        assert_eq!(path.len(), 2);
    }

    #[test]
    fn gamma_three_four() {
        let g3 = example_gamma(3).unwrap();
        let g4 = example_gamma(4).unwrap();
        assert!(!leq_type1(&g3, &g4, B).unwrap());
        assert!(!leq_type1(&g4, &g3, B).unwrap());
        let path = leq_full(&g3, &g4, B).unwrap().expect("Γ3 ⊑ Γ4");
        assert_eq!(replay(&g3, &path).unwrap(), g4);
    }

    #[test]
    fn budget_is_reported() {
        let g3 = example_gamma(3).unwrap();
        let g5 = example_gamma(5).unwrap();
        assert_eq!(leq_full(&g3, &g5, 10), Err(Error::SearchBudgetExceeded(10)));
    }

    /// ≤ implies ⊑, ⊑ is reflexive, transitive and antisymmetric on all
    /// matchings with at most 3 edges on 8 vertices.
    #[test]
    #[ignore = "exhaustive; run with --ignored (about a minute)"]
    fn order_properties_exhaustive() {
        let all: Vec<Matching> = (0..=3).flat_map(|k| enumerate_matchings(k, 8)).collect();
        check_order_properties(&all);
    }

    #[test]
    fn order_properties_small() {
        let all: Vec<Matching> = (0..=2).flat_map(|k| enumerate_matchings(k, 6)).collect();
        check_order_properties(&all);
    }

    fn check_order_properties(all: &[Matching]) {
        let n = all.len();
        let mut full = vec![false; n * n];
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                let t1 = leq_type1(a, b, B).unwrap();
                let f = leq_full(a, b, B).unwrap();
                if t1 {
                    assert!(f.is_some(), "{a} ≤ {b} but not ⊑");
                }
                if let Some(path) = &f {
                    assert_eq!(&replay(a, path).unwrap(), b);
                }
                full[i * n + j] = f.is_some();
            }
        }
        for i in 0..n {
            assert!(full[i * n + i]);
            for j in 0..n {
                if i != j && full[i * n + j] {
                    assert!(!full[j * n + i], "antisymmetry fails: {} and {}", all[i], all[j]);
                }
                for k in 0..n {
                    if full[i * n + j] && full[j * n + k] {
                        assert!(full[i * n + k]);
                    }
                }
            }
        }
    }

    #[test]
    fn single_edge_antichains() {
        let found = antichain_search_bounded(1, 4, PosetOrder::Type1, B).unwrap();
        // (1,2) comes first in ⪯ order and lies below every other edge
        assert_eq!(found, vec![matching![(1, 2)]]);
        // but the poset itself is not a chain: (2,3) and (1,4) are incomparable
        let all = enumerate_matchings(1, 4);
        let width = poset_width(all.len(), |a, b| leq_type1(&all[a], &all[b], B).unwrap());
        assert_eq!(width, 2);
    }

    #[test]
    fn width_of_small_posets() {
        // a chain
        assert_eq!(poset_width(4, |a, b| a <= b), 1);
        // an antichain
        assert_eq!(poset_width(4, |a, b| a == b), 4);
        // boolean lattice on 3 atoms has width 3
        assert_eq!(poset_width(8, |a, b| a & b == a), 3);
    }
}
