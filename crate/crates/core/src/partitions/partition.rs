use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// An integer partition, stored without trailing zeros.
///
/// The derived `Ord` is lexicographic on the parts, which refines the
/// dominance order on partitions of a fixed size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Zero parts are
    /// dropped; anything else out of order is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary exponent vector into a partition.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The `k`-th part (0-based), reading missing parts as zero.
    pub fn part(&self, k: usize) -> u32 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Young-diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.rows() <= other.rows() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Every part multiplied by two.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// Pads (or truncates, if all trailing entries are zero) to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// True if `self / inner` is a horizontal strip (no two boxes in a column).
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        inner.contained_in(self)
            && (0..self.rows()).all(|k| k + 1 >= self.rows() || self.part(k + 1) <= inner.part(k))
    }

    /// All partitions `κ ⊆ self` such that `self / κ` is a horizontal strip of
    /// exactly `k` boxes.
    pub fn remove_horizontal_strips(&self, k: u32) -> Vec<Partition> {
        let rows = self.rows();
        let mut out = Vec::new();
        let mut cur = vec![0u32; rows];
        fn go(lam: &Partition, row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == cur.len() {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("strip removal keeps order"));
                }
                return;
            }
            // κ_row lies between λ_{row+1} and λ_row.
            let hi = lam.part(row);
            let lo = lam.part(row + 1);
            for kr in (lo..=hi).rev() {
                let removed = hi - kr;
                if removed > left {
                    break;
                }
                cur[row] = kr;
                go(lam, row + 1, left - removed, cur, out);
            }
        }
        go(self, 0, k, &mut cur, &mut out);
        out
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                go(left - p, p, cur, out);
                cur.pop();
            }
        }
        go(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with at most `rows` rows.
    pub fn all_of_size_with_rows(n: u32, rows: usize) -> Vec<Partition> {
        Self::all_of_size(n).into_iter().filter(|p| p.rows() <= rows).collect()
    }

    /// All partitions of size at most `n`, by size then decreasing lex.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }
}

/// `lambda ⊆ mu` as Young diagrams.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contained_in(mu)
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidPartition(Vec::new())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[macro_export]
macro_rules! part {
    ($($p:expr),* $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p as u32),*]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment() {
        assert!(contains(&part![1], &part![2, 1]));
        assert!(!contains(&part![2, 2], &part![3, 1]));
        for lam in Partition::all_up_to(6) {
            assert!(contains(&Partition::empty(), &lam));
        }
    }

    #[test]
    fn transposes() {
        assert_eq!(part![3, 1].transpose(), part![2, 1, 1]);
        assert_eq!(part![2, 2].transpose(), part![2, 2]);
        assert_eq!(part![4].transpose(), part![1, 1, 1, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part![2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), part![3, 1]);
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(part![3, 1].to_string(), "(3,1)");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn horizontal_strips() {
        let lam = part![3, 1];
        let mut got = lam.remove_horizontal_strips(2);
        got.sort();
        // (3,1) minus a 2-strip: (1,1), (2)
        assert_eq!(got, vec![part![1, 1], part![2]]);
        for k in got {
            assert!(lam.is_horizontal_strip_over(&k));
        }
        assert!(part![2, 2].is_horizontal_strip_over(&part![2]));
        assert!(!part![2, 2].is_horizontal_strip_over(&part![1, 1]));
    }
}
