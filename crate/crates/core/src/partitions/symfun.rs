use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use super::Partition;
use crate::rational::{as_integer, q, Q};
use crate::{Error, Result};

/// A polynomial in `blocks × rank` variables, meant to be symmetric under
/// permutations inside each block of `rank` variables.
///
/// One block carries `GL_n` characters; two blocks carry `GL_n × GL_n`
/// characters of the bivariate algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPolynomial {
    rank: usize,
    blocks: usize,
    coeffs: BTreeMap<Vec<u32>, Q>,
}

impl SymPolynomial {
    pub fn zero(rank: usize) -> Self {
        SymPolynomial { rank, blocks: 1, coeffs: BTreeMap::new() }
    }

    pub fn zero_bivariate(rank: usize) -> Self {
        SymPolynomial { rank, blocks: 2, coeffs: BTreeMap::new() }
    }

    pub fn with_blocks(rank: usize, blocks: usize) -> Self {
        assert!(blocks == 1 || blocks == 2);
        SymPolynomial { rank, blocks, coeffs: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Q {
        self.coeffs.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Q) {
        assert_eq!(exp.len(), self.rank * self.blocks, "exponent length");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SymPolynomial, c: &Q) {
        assert_eq!((self.rank, self.blocks), (other.rank, other.blocks));
        for (e, v) in &other.coeffs {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn mul(&self, other: &SymPolynomial) -> SymPolynomial {
        assert_eq!((self.rank, self.blocks), (other.rank, other.blocks));
        let mut out = SymPolynomial::with_blocks(self.rank, self.blocks);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Sum of all coefficients, i.e. the dimension of a character.
    pub fn evaluate_at_ones(&self) -> Q {
        self.coeffs.values().cloned().fold(Q::zero(), |a, b| a + b)
    }

    /// Checks invariance under every adjacent transposition inside each block.
    /// Returns the first exponent whose transposed partner disagrees.
    pub fn symmetry_violation(&self) -> Option<Vec<u32>> {
        for (e, c) in &self.coeffs {
            for b in 0..self.blocks {
                for i in 0..self.rank.saturating_sub(1) {
                    let (x, y) = (b * self.rank + i, b * self.rank + i + 1);
                    if e[x] == e[y] {
                        continue;
                    }
                    let mut t = e.clone();
                    t.swap(x, y);
                    if self.coeffs.get(&t) != Some(c) {
                        return Some(e.clone());
                    }
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }
}

/// Label of an irreducible: a partition for `GL_n`, or a pair for
/// `GL_n × GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Irrep {
    Single(Partition),
    Pair(Partition, Partition),
}

impl Irrep {
    pub fn max_rows(&self) -> usize {
        match self {
            Irrep::Single(p) => p.rows(),
            Irrep::Pair(a, b) => a.rows().max(b.rows()),
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irrep::Single(p) => write!(f, "{p}"),
            Irrep::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl From<Partition> for Irrep {
    fn from(p: Partition) -> Self {
        Irrep::Single(p)
    }
}

/// Multiplicities of irreducibles in a representation of rank `rank_bound`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterTable {
    entries: BTreeMap<Irrep, i64>,
    rank_bound: usize,
}

impl CharacterTable {
    pub fn new(rank_bound: usize) -> Self {
        CharacterTable { entries: BTreeMap::new(), rank_bound }
    }

    pub fn rank_bound(&self) -> usize {
        self.rank_bound
    }

    pub fn add(&mut self, label: Irrep, mult: i64) {
        debug_assert!(label.max_rows() <= self.rank_bound);
        let e = self.entries.entry(label.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.entries.remove(&label);
        }
    }

    pub fn get(&self, label: &Irrep) -> i64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Irrep, &i64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// Same entries, ignoring the rank the table was computed at.
    pub fn same_entries(&self, other: &CharacterTable) -> bool {
        self.entries == other.entries
    }

    /// Entries whose labels have at most `rows` rows.
    pub fn restricted_to_rows(&self, rows: usize) -> CharacterTable {
        CharacterTable {
            entries: self.entries.iter().filter(|(k, _)| k.max_rows() <= rows).map(|(k, v)| (k.clone(), *v)).collect(),
            rank_bound: rows.min(self.rank_bound),
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &Irrep> {
        self.entries.keys()
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (label, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}:{m}")?;
        }
        write!(f, "}}")
    }
}

/// Kostka numbers `K_{λ,μ}` (semistandard tableaux of shape λ and content μ),
/// memoized by strip removal.
#[derive(Default)]
pub struct Kostka {
    memo: HashMap<(Partition, Vec<u32>), u64>,
}

impl Kostka {
    pub fn new() -> Self {
        Self::default()
    }

    /// `content` may be any composition; Kostka numbers are invariant under
    /// permuting it, but we peel entries off the end exactly as given.
    pub fn get(&mut self, shape: &Partition, content: &[u32]) -> u64 {
        let total: u32 = content.iter().sum();
        if total != shape.size() {
            return 0;
        }
        if shape.is_empty() {
            return 1;
        }
        let nonzero = content.iter().filter(|&&c| c > 0).count();
        if shape.rows() > nonzero {
            return 0;
        }
        let key = (shape.clone(), content.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (&last, rest) = content.split_last().expect("nonempty content");
        let mut total_count = 0;
        for inner in shape.remove_horizontal_strips(last) {
            total_count += self.get(&inner, rest);
        }
        self.memo.insert(key, total_count);
        total_count
    }
}

/// Character `s_λ(x₁,…,x_n)`, enumerated from semistandard tableaux.
pub fn schur_character(lambda: &Partition, n: usize) -> SymPolynomial {
    let mut out = SymPolynomial::zero(n);
    if lambda.rows() > n {
        return out;
    }
    // Fill entries n, n-1, …, 1 as successive horizontal strips removed from λ.
    fn go(shape: &Partition, entry: usize, exp: &mut Vec<u32>, out: &mut SymPolynomial) {
        if entry == 0 {
            if shape.is_empty() {
                out.add_term(exp.clone(), q(1));
            }
            return;
        }
        if shape.rows() > entry {
            return;
        }
        for k in 0..=shape.part(0).min(shape.size()) {
            for inner in shape.remove_horizontal_strips(k) {
                exp[entry - 1] = k;
                go(&inner, entry - 1, exp, out);
            }
        }
        exp[entry - 1] = 0;
    }
    let mut exp = vec![0; n];
    go(lambda, n, &mut exp, &mut out);
    out
}

/// `s_α(x) s_β(y)` in `2n` variables.
pub fn schur_character_pair(alpha: &Partition, beta: &Partition, n: usize) -> SymPolynomial {
    let a = schur_character(alpha, n);
    let b = schur_character(beta, n);
    let mut out = SymPolynomial::zero_bivariate(n);
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let mut e = ea.clone();
            e.extend_from_slice(eb);
            out.add_term(e, ca * cb);
        }
    }
    out
}

fn is_dominant(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Expands a symmetric polynomial in the Schur basis.
///
/// Works on dominant exponents only: repeatedly take the lexicographically
/// largest dominant exponent λ, record its coefficient `c` as the multiplicity
/// of `s_λ` and subtract `c·K_{λ,μ}` from every dominant μ. Kostka
/// unitriangularity makes this terminate. With `allow_virtual` negative
/// multiplicities are kept; otherwise they are an error.
pub fn decompose_into_schur(p: &SymPolynomial, allow_virtual: bool) -> Result<CharacterTable> {
    if let Some(bad) = p.symmetry_violation() {
        return Err(Error::NonSymmetricInput(bad));
    }
    let n = p.rank();
    let mut table = CharacterTable::new(n);
    let mut kostka = Kostka::new();
    // Dominant coefficients, keyed by the block exponents.
    let mut dominant: BTreeMap<Vec<Vec<u32>>, Q> = BTreeMap::new();
    for (e, c) in p.terms() {
        let blocks: Vec<Vec<u32>> = e.chunks(n.max(1)).map(|b| b.to_vec()).collect();
        let blocks = if n == 0 { vec![Vec::new(); p.blocks()] } else { blocks };
        if blocks.iter().all(|b| is_dominant(b)) {
            dominant.insert(blocks, c.clone());
        }
    }
    while let Some((lead, c)) = dominant.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let shapes: Vec<Partition> = lead.iter().map(|b| Partition::from_unsorted(b)).collect();
        let label = if shapes.len() == 1 {
            Irrep::Single(shapes[0].clone())
        } else {
            Irrep::Pair(shapes[0].clone(), shapes[1].clone())
        };
        let mult = match as_integer(&c) {
            Some(m) => m,
            None => {
                return Err(Error::NonIntegralMultiplicity { label: label.to_string(), value: c.to_string() })
            }
        };
        if mult < 0 && !allow_virtual {
            return Err(Error::NegativeMultiplicity { label: label.to_string(), mult });
        }
        table.add(label, mult);
        // Subtract c · (product of Kostka numbers) from every dominant weight
        // of s_λ, including weights not yet present.
        let per_block: Vec<Vec<(Vec<u32>, u64)>> = shapes
            .iter()
            .map(|shape| {
                Partition::all_of_size_with_rows(shape.size(), n)
                    .into_iter()
                    .filter_map(|mu| {
                        let content = mu.padded(n);
                        let k = kostka.get(shape, &content);
                        (k > 0).then_some((content, k))
                    })
                    .collect()
            })
            .collect();
        let mut combos: Vec<(Vec<Vec<u32>>, u64)> = vec![(Vec::new(), 1)];
        for block in &per_block {
            combos = combos
                .into_iter()
                .flat_map(|(key, k)| block.iter().map(move |(c, kb)| {
                    let mut key = key.clone();
                    key.push(c.clone());
                    (key, k * kb)
                }))
                .collect();
        }
        for (key, k) in combos {
            let entry = dominant.entry(key.clone()).or_insert_with(Q::zero);
            *entry -= &c * q(k as i64);
            if entry.is_zero() {
                dominant.remove(&key);
            }
        }
        debug_assert!(!dominant.contains_key(&lead));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SymPolynomial {
        let mut p = SymPolynomial::zero(n);
        for (e, c) in terms {
            p.add_term(e.to_vec(), q(*c));
        }
        p
    }

    #[test]
    fn small_schur_characters() {
        assert_eq!(schur_character(&part![1], 2), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert!(schur_character(&part![1, 1, 1], 2).is_zero());
        assert_eq!(schur_character(&part![2], 2), poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]));
        assert_eq!(schur_character(&Partition::empty(), 3), poly(3, &[(&[0, 0, 0], 1)]));
    }

    /// Counts SSYT by brute force: every filling of the diagram with entries
    /// in 1..=n checked for row/column conditions.
    fn ssyt_by_brute_force(lambda: &Partition, n: usize) -> SymPolynomial {
        let cells: Vec<(usize, usize)> =
            (0..lambda.rows()).flat_map(|r| (0..lambda.part(r) as usize).map(move |c| (r, c))).collect();
        let mut out = SymPolynomial::zero(n);
        let total = (n as u64).pow(cells.len() as u32);
        for code in 0..total {
            let mut x = code;
            let mut fill = HashMap::new();
            for &cell in &cells {
                fill.insert(cell, (x % n as u64) as usize);
                x /= n as u64;
            }
            let ok = cells.iter().all(|&(r, c)| {
                let v = fill[&(r, c)];
                (c == 0 || fill[&(r, c - 1)] <= v) && (r == 0 || fill[&(r - 1, c)] < v)
            });
            if ok {
                let mut e = vec![0; n];
                for v in fill.values() {
                    e[*v] += 1;
                }
                out.add_term(e, q(1));
            }
        }
        out
    }

    #[test]
    fn schur_matches_brute_force() {
        for n in 1..=3 {
            for lam in Partition::all_up_to(4) {
                assert_eq!(schur_character(&lam, n), ssyt_by_brute_force(&lam, n), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn kostka_values() {
        let mut k = Kostka::new();
        assert_eq!(k.get(&part![2, 1], &[1, 1, 1]), 2);
        assert_eq!(k.get(&part![2, 2], &[1, 1, 1, 1]), 2);
        assert_eq!(k.get(&part![3, 2], &[2, 2, 1]), 2);
        assert_eq!(k.get(&part![2], &[1, 1]), 1);
        assert_eq!(k.get(&part![1, 1], &[2]), 0);
    }

    #[test]
    fn decompose_round_trips() {
        let mut p = schur_character(&part![2], 2);
        p.add_assign_scaled(&schur_character(&part![1, 1], 2), &q(1));
        let t = decompose_into_schur(&p, false).unwrap();
        assert_eq!(t.get(&part![2].into()), 1);
        assert_eq!(t.get(&part![1, 1].into()), 1);
        assert_eq!(t.len(), 2);

        assert!(decompose_into_schur(&SymPolynomial::zero(3), false).unwrap().is_empty());
    }

    #[test]
    fn tensor_square_of_standard() {
        // weights of C^2 ⊗ C^2 counted directly: e_a + e_b for all a, b
        let mut p = SymPolynomial::zero(2);
        for a in 0..2 {
            for b in 0..2 {
                let mut e = vec![0; 2];
                e[a] += 1;
                e[b] += 1;
                p.add_term(e, q(1));
            }
        }
        let t = decompose_into_schur(&p, false).unwrap();
        assert_eq!(t.to_string(), "{(1,1):1, (2):1}");
    }

    #[test]
    fn rejects_bad_input() {
        let p = poly(2, &[(&[1, 0], 1)]);
        assert!(matches!(decompose_into_schur(&p, false), Err(Error::NonSymmetricInput(_))));

        let mut virt = schur_character(&part![2], 2);
        virt.add_assign_scaled(&schur_character(&part![1, 1], 2), &q(-1));
        assert!(matches!(decompose_into_schur(&virt, false), Err(Error::NegativeMultiplicity { .. })));
        let t = decompose_into_schur(&virt, true).unwrap();
        assert_eq!(t.get(&part![1, 1].into()), -1);
    }

    #[test]
    fn bivariate_round_trip() {
        let mut p = schur_character_pair(&part![2], &part![1, 1], 3);
        p.add_assign_scaled(&schur_character_pair(&part![1], &part![1], 3), &q(2));
        let t = decompose_into_schur(&p, false).unwrap();
        assert_eq!(t.get(&Irrep::Pair(part![2], part![1, 1])), 1);
        assert_eq!(t.get(&Irrep::Pair(part![1], part![1])), 2);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn schur_then_decompose_is_identity() {
        for n in 1..=6 {
            for lam in Partition::all_up_to(6) {
                let t = decompose_into_schur(&schur_character(&lam, n), false).unwrap();
                if lam.rows() > n {
                    assert!(t.is_empty());
                } else {
                    assert_eq!(t.len(), 1, "{lam} n={n}");
                    assert_eq!(t.get(&lam.clone().into()), 1);
                }
            }
        }
    }
}
