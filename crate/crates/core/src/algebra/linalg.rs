//! Row echelon forms over ℚ for sparse vectors indexed by any ordered key.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use num_traits::{One, Zero};

use crate::rational::Q;

pub type SparseVec<K> = BTreeMap<K, Q>;

/// An echelon basis: every row has coefficient 1 at its pivot, which is its
/// smallest key, and no two rows share a pivot.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new() }
    }
}

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Q, row: &SparseVec<K>) {
    use std::collections::btree_map::Entry;
    for (k, x) in row {
        let d = c * x;
        match v.entry(k.clone()) {
            Entry::Vacant(e) => {
                e.insert(d);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += d;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.pivots.contains_key(k)
    }

    /// Fully reduces `v`: afterwards no pivot key appears in it.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut cursor: Option<K> = None;
        loop {
            let hit = match &cursor {
                None => v.iter().find(|(k, _)| self.pivots.contains_key(*k)),
                Some(c) => v.range((Excluded(c), Unbounded)).find(|(k, _)| self.pivots.contains_key(*k)),
            };
            let Some((k, c)) = hit else { break };
            let (k, c) = (k.clone(), c.clone());
            axpy(&mut v, &-c, &self.rows[self.pivots[&k]]);
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns the new normalized row when `v` was
    /// independent of the current rows.
    pub fn insert(&mut self, v: SparseVec<K>) -> Option<&SparseVec<K>> {
        let mut r = self.reduce(v);
        let (pivot, lead) = r.iter().next().map(|(k, c)| (k.clone(), c.clone()))?;
        if !lead.is_one() {
            let inv = lead.recip();
            for x in r.values_mut() {
                *x *= &inv;
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(r);
        self.rows.last()
    }

    /// Reduces every row against the others, so each pivot column is a unit
    /// vector. Row order is by pivot afterwards.
    pub fn into_reduced(self) -> Echelon<K> {
        let mut rows = self.rows;
        rows.sort_by(|a, b| a.keys().next().cmp(&b.keys().next()));
        let mut out = Echelon::new();
        for k in (0..rows.len()).rev() {
            let r = out.reduce(rows[k].clone());
            let pivot = r.keys().next().expect("independent rows").clone();
            out.pivots.insert(pivot, out.rows.len());
            out.rows.push(r);
        }
        out.rows.reverse();
        let len = out.rows.len();
        for idx in out.pivots.values_mut() {
            *idx = len - 1 - *idx;
        }
        out
    }
}
