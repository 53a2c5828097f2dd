use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// An edge `(i, j)` stored with `i < j`.
pub type Edge = (u32, u32);

/// `(i,j) ⪯ (k,ℓ)` iff `j < ℓ`, or `j = ℓ` and `i ≤ k`.
pub fn edge_leq(e1: Edge, e2: Edge) -> bool {
    edge_cmp(e1, e2) != Ordering::Greater
}

pub fn edge_cmp(e1: Edge, e2: Edge) -> Ordering {
    (e1.1, e1.0).cmp(&(e2.1, e2.0))
}

fn canonical_edge(a: u32, b: u32) -> Edge {
    (a.min(b), a.max(b))
}

/// A finite matching on `{1, 2, …}`: a graph in which every vertex has
/// valence at most one. Edges are kept sorted increasingly under `⪯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut out: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 {
                return Err(Error::InvalidMatching(format!("vertex 0 in edge ({a},{b})")));
            }
            if a == b {
                return Err(Error::InvalidMatching(format!("loop at {a}")));
            }
            out.push(canonical_edge(a, b));
        }
        out.sort_by(|x, y| edge_cmp(*x, *y));
        let mut seen: Vec<u32> = out.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMatching(format!("vertex {} has valence > 1", w[0])));
        }
        Ok(Matching { edges: out })
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted vertex set.
    pub fn vertices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }

    pub fn max_vertex(&self) -> u32 {
        self.edges.last().map_or(0, |e| e.1)
    }

    pub fn label_sum(&self) -> u64 {
        self.edges.iter().map(|&(a, b)| u64::from(a) + u64::from(b)).sum()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.partner(v).is_some()
    }

    pub fn partner(&self, v: u32) -> Option<u32> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        let e = canonical_edge(e.0, e.1);
        self.edges.contains(&e)
    }

    /// Replaces the listed edges with new ones, re-validating the result.
    pub(crate) fn replace(&self, remove: &[Edge], add: &[Edge]) -> Result<Matching> {
        let mut edges: Vec<Edge> = self.edges.iter().copied().filter(|e| !remove.contains(e)).collect();
        if edges.len() + remove.len() != self.edges.len() {
            return Err(Error::InvalidMatching(format!("edges {remove:?} not all present in {self}")));
        }
        edges.extend_from_slice(add);
        Matching::new(edges)
    }

    /// Relabels every vertex through `f`.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Result<Matching> {
        Matching::new(self.edges.iter().map(|&(a, b)| (f(a), f(b))))
    }
}

/// How the sorted edge lists of two matchings with the same number of edges
/// are compared lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeReading {
    /// Compare the `⪯`-largest edges first, then the next largest, and so on.
    /// This is the reading under which initial sets are closed under type II
    /// moves, and the one used by `Ord for Matching`.
    #[default]
    LargestFirst,
    /// Compare the `⪯`-smallest edges first.
    SmallestFirst,
}

/// Total order `⪯` on matchings: more edges is larger; equal edge counts are
/// compared lexicographically on the `⪯`-sorted edge lists, read as `reading`
/// says.
pub fn total_order_with(a: &Matching, b: &Matching, reading: EdgeReading) -> Ordering {
    a.edge_count().cmp(&b.edge_count()).then_with(|| {
        let pairs = a.edges.iter().zip(&b.edges);
        let mut cmp = Ordering::Equal;
        let mut step = |(x, y): (&Edge, &Edge)| {
            if cmp == Ordering::Equal {
                cmp = edge_cmp(*x, *y);
            }
        };
        match reading {
            EdgeReading::LargestFirst => pairs.rev().for_each(&mut step),
            EdgeReading::SmallestFirst => pairs.for_each(&mut step),
        }
        cmp
    })
}

pub fn total_order(a: &Matching, b: &Matching) -> Ordering {
    total_order_with(a, b, EdgeReading::LargestFirst)
}

impl Ord for Matching {
    fn cmp(&self, other: &Self) -> Ordering {
        total_order(self, other)
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for Matching {
    type Err = Error;

    /// Parses `{(1,4),(2,3)}`; braces are optional.
    fn from_str(s: &str) -> Result<Self> {
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = body.trim_start_matches('{').trim_end_matches('}');
        let bad = || Error::InvalidMatching(format!("cannot parse '{s}'"));
        let mut edges = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let rest1 = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = rest1.find(')').ok_or_else(bad)?;
            let (a, b) = rest1[..close].split_once(',').ok_or_else(bad)?;
            edges.push((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?));
            rest = rest1[close + 1..].trim_start_matches(',');
        }
        Matching::new(edges)
    }
}

/// All matchings with exactly `k` edges on vertices `1..=n`, sorted by `⪯`.
pub fn enumerate_matchings(k: usize, n: u32) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut used = vec![false; n as usize + 1];
    let mut edges = Vec::new();
    // Choose edges in increasing order of their smaller endpoint.
    fn go(k: usize, n: u32, from: u32, used: &mut Vec<bool>, edges: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        if edges.len() == k {
            out.push(Matching::new(edges.iter().copied()).expect("disjoint edges"));
            return;
        }
        for a in from..=n {
            if used[a as usize] {
                continue;
            }
            for b in a + 1..=n {
                if used[b as usize] {
                    continue;
                }
                used[a as usize] = true;
                used[b as usize] = true;
                edges.push((a, b));
                go(k, n, a + 1, used, edges, out);
                edges.pop();
                used[a as usize] = false;
                used[b as usize] = false;
            }
        }
    }
    go(k, n, 1, &mut used, &mut edges, &mut out);
    out.sort();
    out
}

/// Perfect matchings on the given vertex set.
pub fn perfect_matchings(support: &[u32]) -> Vec<Matching> {
    fn go(rest: &[u32], edges: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(Matching::new(edges.iter().copied()).expect("disjoint edges"));
            return;
        };
        for (k, &other) in tail.iter().enumerate() {
            let mut remaining = tail.to_vec();
            remaining.remove(k);
            edges.push((first, other));
            go(&remaining, edges, out);
            edges.pop();
        }
    }
    let mut out = Vec::new();
    if support.len() % 2 == 0 {
        let mut s = support.to_vec();
        s.sort_unstable();
        go(&s, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

#[macro_export]
macro_rules! matching {
    ($(($a:expr, $b:expr)),* $(,)?) => {
        $crate::poset::Matching::new(vec![$(($a as u32, $b as u32)),*]).expect("valid matching literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Matching::new([(1, 2), (2, 3)]).is_err());
        assert!(Matching::new([(1, 1)]).is_err());
        assert!(Matching::new([(0, 1)]).is_err());
        let m = Matching::new([(4, 1), (2, 3)]).unwrap();
        assert_eq!(m.edges(), &[(2, 3), (1, 4)]);
        assert_eq!(m.to_string(), "{(2,3),(1,4)}");
        assert_eq!("{(1,4),(2,3)}".parse::<Matching>().unwrap(), m);
        assert_eq!("{}".parse::<Matching>().unwrap(), Matching::empty());
    }

    #[test]
    fn edge_order() {
        assert!(edge_leq((1, 2), (1, 3)));
        assert!(!edge_leq((1, 3), (1, 2)));
        assert!(edge_leq((1, 3), (2, 3)));
        assert!(edge_leq((2, 3), (1, 4)));
    }

    #[test]
    fn more_edges_is_larger() {
        assert!(matching![(1, 2)] < matching![(1, 2), (3, 4)]);
        assert!(matching![(7, 9)] < matching![(1, 2), (3, 4)]);
    }

    #[test]
    fn equal_support_comparisons() {
        let a = matching![(1, 2), (3, 4)];
        let b = matching![(1, 3), (2, 4)];
        let c = matching![(1, 4), (2, 3)];
        // Reading from the largest edge: (3,4) ≻ (2,4) ≻ (1,4).
        assert!(c < b && b < a);
        // Reading from the smallest edge: (1,2) ≺ (1,3) ≺ (2,3).
        assert_eq!(total_order_with(&a, &b, EdgeReading::SmallestFirst), Ordering::Less);
        assert_eq!(total_order_with(&b, &c, EdgeReading::SmallestFirst), Ordering::Less);
    }

    #[test]
    fn matching_counts() {
        // number of k-matchings on n vertices: n! / (k! 2^k (n-2k)!)
        assert_eq!(enumerate_matchings(1, 4).len(), 6);
        assert_eq!(enumerate_matchings(2, 6).len(), 45);
        assert_eq!(enumerate_matchings(3, 6).len(), 15);
        assert_eq!(perfect_matchings(&[1, 2, 3, 4]).len(), 3);
        assert_eq!(perfect_matchings(&[1, 2, 3, 4, 5, 6]).len(), 15);
        assert!(perfect_matchings(&[1, 2, 3]).is_empty());
        assert_eq!(perfect_matchings(&[]), vec![Matching::empty()]);
    }

    #[test]
    fn total_order_is_total_on_fixed_support() {
        let all = perfect_matchings(&[1, 2, 3, 4, 5, 6]);
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(a.cmp(b), i.cmp(&j));
            }
        }
    }
}
