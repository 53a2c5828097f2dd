//! Littlewood–Richardson coefficients by enumerating LR skew tableaux.
//!
//! A tableau of shape ν/λ and content μ is counted when its rows weakly
//! increase, its columns strictly increase, and its reverse reading word
//! (right to left, top row first) is a lattice word. Rows are filled one at a
//! time and the count is memoized on (row, running content, previous row).

use std::collections::HashMap;

use super::Partition;

pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !lambda.contained_in(nu) || !mu.contained_in(nu) {
        return 0;
    }
    let mut solver = LrSolver { lambda, mu, nu, memo: HashMap::new() };
    solver.rows_from(0, vec![0; mu.rows()], Vec::new())
}

struct LrSolver<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    memo: HashMap<(usize, Vec<u32>, Vec<u32>), u64>,
}

impl LrSolver<'_> {
    /// `prev` holds the entries of the previous row's skew cells, left to right.
    fn rows_from(&mut self, row: usize, counts: Vec<u32>, prev: Vec<u32>) -> u64 {
        if row == self.nu.rows() {
            return u64::from(counts.iter().enumerate().all(|(k, &c)| c == self.mu.part(k)));
        }
        let key = (row, counts.clone(), prev.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let start = self.lambda.part(row) as usize;
        let end = self.nu.part(row) as usize;
        let prev_start = if row == 0 { 0 } else { self.lambda.part(row - 1) as usize };
        let mut total = 0;
        let mut fill = vec![0u32; end - start];
        let mut counts = counts;
        self.fill_row(row, start, end, prev_start, &prev, end, &mut fill, &mut counts, &mut total);
        self.memo.insert(key, total);
        total
    }

    /// Fills columns right to left; `col` is one past the next cell to fill.
    #[allow(clippy::too_many_arguments)]
    fn fill_row(
        &mut self,
        row: usize,
        start: usize,
        col: usize,
        prev_start: usize,
        prev: &[u32],
        end: usize,
        fill: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if col == start {
            let row_fill = fill.clone();
            *total += self.rows_from(row + 1, counts.clone(), row_fill);
            return;
        }
        let c = col - 1;
        // Right neighbour bounds the entry from above (rows weakly increase).
        let upper = if c + 1 < end { fill[c + 1 - start] } else { self.mu.rows() as u32 };
        // Cell above, if it is a skew cell, bounds from below (strict).
        let lower = if row > 0 && c >= prev_start { prev[c - prev_start] + 1 } else { 1 };
        for v in lower..=upper {
            let k = (v - 1) as usize;
            if counts[k] >= self.mu.part(k) {
                continue;
            }
            // Lattice condition after appending v.
            if k > 0 && counts[k] + 1 > counts[k - 1] {
                continue;
            }
            counts[k] += 1;
            fill[c - start] = v;
            self.fill_row(row, start, c, prev_start, prev, end, fill, counts, total);
            counts[k] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::symfun::{decompose_into_schur, schur_character};
    use crate::partitions::Irrep;
    use proptest::prelude::*;

    /// Independent route: expand s_λ·s_μ in enough variables and read off s_ν.
    fn lr_by_product(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let n = lambda.rows() + mu.rows();
        if nu.rows() > n {
            return 0;
        }
        let prod = schur_character(lambda, n).mul(&schur_character(mu, n));
        let t = decompose_into_schur(&prod, false).unwrap();
        t.get(&Irrep::Single(nu.clone())) as u64
    }

    #[test]
    fn known_values() {
        assert_eq!(lr_coefficient(&part![1], &part![1], &part![2]), 1);
        assert_eq!(lr_coefficient(&part![1], &part![1, 1], &part![2, 1]), 1);
        assert_eq!(lr_coefficient(&part![2, 1], &part![2, 1], &part![3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&part![2, 1], &part![2, 1], &part![4, 2]), 1);
        assert_eq!(lr_coefficient(&part![1], &part![1], &part![3]), 0);
        assert_eq!(lr_coefficient(&Partition::empty(), &part![2, 1], &part![2, 1]), 1);
    }

    #[test]
    fn matches_product_expansion() {
        for a in 0..=4 {
            for lam in Partition::all_of_size(a) {
                for b in 0..=(5 - a.min(5)) {
                    for mu in Partition::all_of_size(b) {
                        for nu in Partition::all_of_size(a + b) {
                            assert_eq!(
                                lr_coefficient(&lam, &mu, &nu),
                                lr_by_product(&lam, &mu, &nu),
                                "c^{nu}_{lam},{mu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_rule() {
        for size in 0..=5 {
            for lam in Partition::all_of_size(size) {
                for k in 0..=3 {
                    for nu in Partition::all_of_size(size + k) {
                        let c = lr_coefficient(&lam, &part![k], &nu);
                        let strip = nu.is_horizontal_strip_over(&lam);
                        assert_eq!(c, u64::from(strip), "{lam} {k} {nu}");
                    }
                }
            }
        }
    }

    fn small_partition() -> impl Strategy<Value = Partition> {
        (0u32..=5).prop_flat_map(|n| {
            let all = Partition::all_of_size(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn symmetric_in_lambda_mu(lam in small_partition(), mu in small_partition(), pick in 0usize..64) {
            let size = lam.size() + mu.size();
            prop_assume!(size <= 8);
            let all = Partition::all_of_size(size);
            let nu = &all[pick % all.len()];
            prop_assert_eq!(lr_coefficient(&lam, &mu, nu), lr_coefficient(&mu, &lam, nu));
        }
    }
}
