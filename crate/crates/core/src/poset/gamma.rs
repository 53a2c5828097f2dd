//! The sequence `Γ_n` of matchings that is an infinite antichain for `≤`,
//! and a replay of the argument that the same sequence is a chain for `⊑`.

use super::matching::Matching;
use super::moves::type2_moves;
use super::search::leq_type1;
use crate::{Error, Result};

/// `Γ_n`: edges `(2i+1, 2i+4)` for `i = 0, …, n−2` together with `(2, 2n−1)`.
pub fn example_gamma(n: usize) -> Result<Matching> {
    if n < 3 {
        return Err(Error::IndexTooSmall(n));
    }
    let n = n as u32;
    let mut edges: Vec<(u32, u32)> = (0..=n - 2).map(|i| (2 * i + 1, 2 * i + 4)).collect();
    edges.push((2, 2 * n - 1));
    Matching::new(edges)
}

/// The permutation `σ_i = (i, i+1)⋯(3,4)(2,3)`, composed right to left, as a
/// map on vertex labels: `2 ↦ i+1` and `k ↦ k−1` for `3 ≤ k ≤ i+1`.
pub fn sigma(i: u32, v: u32) -> u32 {
    if i < 2 {
        v
    } else if v == 2 {
        i + 1
    } else if (3..=i + 1).contains(&v) {
        v - 1
    } else {
        v
    }
}

/// One checked step of the replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayStep {
    pub description: String,
    pub from: Matching,
    pub to: Matching,
    pub valid: bool,
}

/// Result of replaying the `σ_i` argument for `Γ_n ⊑ Γ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkReplay {
    pub n: usize,
    pub m: usize,
    pub steps: Vec<ReplayStep>,
}

impl RemarkReplay {
    pub fn all_valid(&self) -> bool {
        self.steps.iter().all(|s| s.valid)
    }

    pub fn first_invalid(&self) -> Option<&ReplayStep> {
        self.steps.iter().find(|s| !s.valid)
    }
}

fn is_single_type2(from: &Matching, to: &Matching) -> bool {
    type2_moves(from).iter().any(|(_, next)| next == to)
}

/// Replays the chain `Γ_n = σ_1Γ_n ⇒ σ_2Γ_n ⇒ … ⇒ σ_{2n−3}Γ_n`, the final
/// swap of `2n−1` and `2n`, and the type I embedding into `Γ_m`. Each step is
/// checked independently; nothing here is taken as ground truth.
pub fn replay_remark(n: usize, m: usize, budget: usize) -> Result<RemarkReplay> {
    let gamma = example_gamma(n)?;
    let target = example_gamma(m)?;
    let top = 2 * n as u32;
    let mut steps = Vec::new();
    let mut cur = gamma.clone();
    for i in 1..=(top - 4) {
        let next = gamma.relabel(|v| sigma(i + 1, v))?;
        steps.push(ReplayStep {
            description: format!("σ_{i}Γ_{n} ⇒ σ_{}Γ_{n}", i + 1),
            valid: is_single_type2(&cur, &next),
            from: cur.clone(),
            to: next.clone(),
        });
        cur = next;
    }
    let swapped = cur.relabel(|v| match v {
        v if v == top - 1 => top,
        v if v == top => top - 1,
        v => v,
    })?;
    steps.push(ReplayStep {
        description: format!("swap {} and {}", top - 1, top),
        valid: is_single_type2(&cur, &swapped),
        from: cur.clone(),
        to: swapped.clone(),
    });
    steps.push(ReplayStep {
        description: format!("type I embedding into Γ_{m}"),
        valid: leq_type1(&swapped, &target, budget)?,
        from: swapped,
        to: target,
    });
    Ok(RemarkReplay { n, m, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching;

    #[test]
    fn gamma_values() {
        assert_eq!(example_gamma(3).unwrap(), matching![(1, 4), (3, 6), (2, 5)]);
        assert_eq!(example_gamma(4).unwrap(), matching![(1, 4), (3, 6), (5, 8), (2, 7)]);
        assert_eq!(example_gamma(2), Err(Error::IndexTooSmall(2)));
        for n in 3..=9 {
            let g = example_gamma(n).unwrap();
            assert_eq!(g.vertices(), (1..=2 * n as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn sigma_is_a_cycle() {
        // σ_3 = (3,4)(2,3): 2→4, 3→2, 4→3
        assert_eq!((1..=5).map(|v| sigma(3, v)).collect::<Vec<_>>(), vec![1, 4, 2, 3, 5]);
        assert_eq!((1..=4).map(|v| sigma(1, v)).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }
}
