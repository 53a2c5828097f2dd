//! The degree-one model: finite subsets of `{1, 2, …}` with each element
//! colored red or blue.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::search::bfs_path;
use crate::Result;

/// Red sorts before blue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ColoredSet {
    elems: BTreeMap<u32, Color>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ColoredMove {
    Add { at: u32, color: Color },
    Shift { from: u32 },
}

impl ColoredSet {
    pub fn new(elems: impl IntoIterator<Item = (u32, Color)>) -> Self {
        ColoredSet { elems: elems.into_iter().collect() }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.elems.keys().next_back().copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<u32> {
        self.elems.keys().copied().collect()
    }

    pub fn color(&self, i: u32) -> Option<Color> {
        self.elems.get(&i).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Color)> + '_ {
        self.elems.iter().map(|(&i, &c)| (i, c))
    }

    fn label_sum(&self) -> u64 {
        self.elems.keys().map(|&i| u64::from(i)).sum()
    }

    pub fn apply(&self, mv: &ColoredMove) -> Option<ColoredSet> {
        let mut out = self.clone();
        match *mv {
            ColoredMove::Add { at, color } => {
                if at == 0 || self.elems.contains_key(&at) {
                    return None;
                }
                out.elems.insert(at, color);
            }
            ColoredMove::Shift { from } => {
                let color = *self.elems.get(&from)?;
                if self.elems.contains_key(&(from + 1)) {
                    return None;
                }
                out.elems.remove(&from);
                out.elems.insert(from + 1, color);
            }
        }
        Some(out)
    }
}

/// Single moves that stay within `1..=bound`.
pub fn degree_one_moves(s: &ColoredSet, bound: u32) -> Vec<(ColoredMove, ColoredSet)> {
    let mut out = Vec::new();
    for at in 1..=bound {
        for color in [Color::Red, Color::Blue] {
            let mv = ColoredMove::Add { at, color };
            if let Some(next) = s.apply(&mv) {
                out.push((mv, next));
            }
        }
    }
    for from in s.support() {
        if from < bound {
            let mv = ColoredMove::Shift { from };
            if let Some(next) = s.apply(&mv) {
                out.push((mv, next));
            }
        }
    }
    out
}

/// Decides `a ≤ b` for colored sets by search.
pub fn degree_one_leq(a: &ColoredSet, b: &ColoredSet, budget: usize) -> Result<bool> {
    let within = |s: &ColoredSet| s.len() <= b.len() && s.max() <= b.max() && s.label_sum() <= b.label_sum();
    if !within(a) {
        return Ok(false);
    }
    let bound = b.max();
    Ok(bfs_path(a, b, budget, |s| degree_one_moves(s, bound).into_iter().filter(|(_, n)| within(n)).collect())?
        .is_some())
}

/// All colored sets with at most `max_len` elements in `1..=bound`.
pub fn enumerate_colored_sets(max_len: usize, bound: u32) -> Vec<ColoredSet> {
    let mut out = Vec::new();
    fn go(from: u32, bound: u32, left: usize, cur: &mut ColoredSet, out: &mut Vec<ColoredSet>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for at in from..=bound {
            for color in [Color::Red, Color::Blue] {
                cur.elems.insert(at, color);
                go(at + 1, bound, left - 1, cur, out);
                cur.elems.remove(&at);
            }
        }
    }
    go(1, bound, max_len, &mut ColoredSet::empty(), &mut out);
    out.sort();
    out
}

/// `⪯`: compare supports by their largest elements first (a set that runs
/// out is smaller), then colors as words over `R ≺ B` read left to right.
impl Ord for ColoredSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.elems.keys().rev();
        let b = other.elems.keys().rev();
        a.cmp(b).then_with(|| self.elems.values().cmp(other.elems.values()))
    }
}

impl PartialOrd for ColoredSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColoredSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}{}", c.letter())?;
        }
        write!(f, "}}")
    }
}

impl Color {
    fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for ColoredMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoredMove::Add { at, color } => write!(f, "add {at}{}", color.letter()),
            ColoredMove::Shift { from } => write!(f, "shift {from}"),
        }
    }
}
