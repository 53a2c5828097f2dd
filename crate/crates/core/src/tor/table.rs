use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::koszul::{KoszulComplex, Strand};
use crate::algebra::{dominant_weights, weight_orbit, weights_of_degree, EquivariantIdeal, VariableSystem};
use crate::partitions::{decompose_into_schur, CharacterTable, Irrep, Partition, SymPolynomial};
use crate::rational::Q;
use crate::{Error, Flavor, Result};

/// "Forms of rank at most `r`" in the rank-`n` truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeterminantalSpec {
    pub flavor: Flavor,
    pub rank: usize,
    pub rank_bound: usize,
}

impl DeterminantalSpec {
    pub fn new(flavor: Flavor, rank: usize, rank_bound: usize) -> Self {
        DeterminantalSpec { flavor, rank, rank_bound }
    }

    /// Size of the vanishing minors (Pfaffians for alternating forms, whose
    /// rank is even).
    pub fn minor_size(&self) -> usize {
        match self.flavor {
            Flavor::Antisymmetric => 2 * (self.rank_bound / 2) + 2,
            _ => self.rank_bound + 1,
        }
    }

    /// No minors of that size exist: the ideal is zero.
    pub fn is_trivial(&self) -> bool {
        self.minor_size() > self.rank
    }

    /// `E_{(1^{r+1})}` (or `E_{(k)}` for Pfaffians of size `2k`) spans
    /// exactly the minors, so it generates the ideal.
    pub fn generating_isotypic(&self) -> Partition {
        let s = self.minor_size() as u32;
        match self.flavor {
            Flavor::Antisymmetric => Partition::new(vec![s / 2]).expect("single row"),
            _ => Partition::new(vec![1; s as usize]).expect("single column"),
        }
    }
}

impl fmt::Display for DeterminantalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.flavor {
            Flavor::Antisymmetric => "Pfaffians",
            _ => "minors",
        };
        write!(f, "{} n={} r={} ({what} of size {})", self.flavor, self.rank, self.rank_bound, self.minor_size())
    }
}

pub fn determinantal_ideal(spec: &DeterminantalSpec) -> Result<EquivariantIdeal> {
    let sys = VariableSystem::new(spec.flavor, spec.rank);
    if spec.is_trivial() {
        return Ok(EquivariantIdeal::zero(&sys));
    }
    EquivariantIdeal::isotypic(&sys, &spec.generating_isotypic())
}

/// `Tor_p` in internal degree `q`, for `p ≤ p_max`, `q ≤ q_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    pub rank: usize,
    pub p_max: usize,
    pub q_max: usize,
    entries: BTreeMap<(usize, usize), CharacterTable>,
}

/// One line of a serialized table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorRecord {
    pub p: usize,
    pub q: usize,
    pub label: Irrep,
    pub multiplicity: i64,
    pub n: usize,
}

impl TorTable {
    /// The entry at `(p, q)`; empty when that Tor vanishes.
    pub fn get(&self, p: usize, q: usize) -> CharacterTable {
        self.entries.get(&(p, q)).cloned().unwrap_or_else(|| CharacterTable::new(self.rank))
    }

    /// Nonzero entries.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &CharacterTable)> {
        self.entries.iter()
    }

    pub fn labels(&self, p: usize) -> BTreeSet<Irrep> {
        self.entries.iter().filter(|((pp, _), _)| *pp == p).flat_map(|(_, t)| t.labels().cloned()).collect()
    }

    pub fn records(&self) -> Vec<TorRecord> {
        let mut out = Vec::new();
        for (&(p, q), t) in &self.entries {
            for (label, &m) in t.iter() {
                out.push(TorRecord { p, q, label: label.clone(), multiplicity: m, n: self.rank });
            }
        }
        out
    }

    /// Entries agree after keeping only labels with at most `rows` rows.
    pub fn agrees_at(&self, other: &TorTable, p: usize, q: usize, rows: usize) -> bool {
        self.get(p, q).restricted_to_rows(rows).same_entries(&other.get(p, q).restricted_to_rows(rows))
    }
}

impl fmt::Display for TorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&(p, q), t) in &self.entries {
            writeln!(f, "Tor_{p} q={q}: {t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorOptions {
    pub p_max: usize,
    pub q_max: usize,
    /// Compute every weight instead of dominant ones only; the characters
    /// are then checked for symmetry rather than symmetric by construction.
    pub all_weights: bool,
}

pub fn tor_table(ideal: &EquivariantIdeal, p_max: usize, q_max: usize) -> Result<TorTable> {
    tor_table_with(ideal, TorOptions { p_max, q_max, all_weights: false })
}

pub fn tor_table_with(ideal: &EquivariantIdeal, opts: TorOptions) -> Result<TorTable> {
    let sys = ideal.system();
    let n = sys.rank();
    if opts.q_max > ideal.degree_bound() {
        return Err(Error::DegreeOverflow { degree: opts.q_max, bound: ideal.degree_bound() });
    }
    let complex = KoszulComplex::new(ideal);
    let mut entries = BTreeMap::new();
    for q in 0..=opts.q_max {
        let mut chars: Vec<SymPolynomial> = (0..=opts.p_max.min(q)).map(|_| empty_char(sys)).collect();
        let weights = if opts.all_weights {
            weights_of_degree(sys, q)
        } else {
            dominant_weights(sys, q)
        };
        for w in weights {
            let strand = strand_upto(&complex, q, &w, opts.p_max)?;
            for (p, ch) in chars.iter_mut().enumerate() {
                let h = strand.homology(p);
                if h == 0 {
                    continue;
                }
                let orbit = if opts.all_weights { vec![w.clone()] } else { weight_orbit(&w, n) };
                for u in orbit {
                    ch.add_term(u, Q::from_integer(h.into()));
                }
            }
        }
        for (p, ch) in chars.into_iter().enumerate() {
            if ch.is_zero() {
                continue;
            }
            if !ch.is_symmetric() {
                return Err(Error::NonSymmetricCharacter { p, q });
            }
            entries.insert((p, q), decompose_into_schur(&ch, false)?);
        }
    }
    Ok(TorTable { rank: n, p_max: opts.p_max, q_max: opts.q_max, entries })
}

fn empty_char(sys: &VariableSystem) -> SymPolynomial {
    if sys.is_bivariate() {
        SymPolynomial::zero_bivariate(sys.rank())
    } else {
        SymPolynomial::zero(sys.rank())
    }
}

/// The strand truncated after `∂_{p_max+1}`, which is all `Tor_{≤p_max}` needs.
fn strand_upto(complex: &KoszulComplex<'_>, q: usize, w: &[u32], p_max: usize) -> Result<Strand> {
    if p_max >= q {
        complex.strand(q, w)
    } else {
        complex.strand_truncated(q, w, p_max + 1)
    }
}

/// Per `(p, q)`: the smallest `n` from which all consecutive tables in the
/// range agree, or `None` when the last two still differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCell {
    pub p: usize,
    pub q: usize,
    pub first_stable_n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationReport {
    pub flavor: Flavor,
    pub rank_bound: usize,
    pub tables: Vec<TorTable>,
    pub cells: Vec<StabilityCell>,
}

impl StabilizationReport {
    pub fn never_stabilized(&self) -> Vec<(usize, usize)> {
        self.cells.iter().filter(|c| c.first_stable_n.is_none()).map(|c| (c.p, c.q)).collect()
    }

    pub fn table(&self, n: usize) -> Option<&TorTable> {
        self.tables.iter().find(|t| t.rank == n)
    }
}

pub fn stabilization_report(
    flavor: Flavor,
    rank_bound: usize,
    p_max: usize,
    q_max: usize,
    ranks: &[usize],
) -> Result<StabilizationReport> {
    let tables = ranks
        .iter()
        .map(|&n| tor_table(&determinantal_ideal(&DeterminantalSpec::new(flavor, n, rank_bound))?, p_max, q_max))
        .collect::<Result<Vec<_>>>()?;
    let cells = stability_cells(&tables, p_max, q_max);
    Ok(StabilizationReport { flavor, rank_bound, tables, cells })
}

fn stability_cells(tables: &[TorTable], p_max: usize, q_max: usize) -> Vec<StabilityCell> {
    let mut cells = Vec::new();
    for q in 0..=q_max {
        for p in 0..=p_max.min(q) {
            let mut first = tables.last().map(|t| t.rank);
            for k in (0..tables.len().saturating_sub(1)).rev() {
                let (a, b) = (&tables[k], &tables[k + 1]);
                if a.agrees_at(b, p, q, a.rank) {
                    first = Some(a.rank);
                } else {
                    if k + 2 == tables.len() {
                        first = None;
                    }
                    break;
                }
            }
            cells.push(StabilityCell { p, q, first_stable_n: first });
        }
    }
    cells
}

/// For each `p`, the labels occurring in `Tor_p` (over `q ≤ q_max`) at each
/// rank; `stable` when the last two ranks give the same list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtRow {
    pub p: usize,
    pub labels_by_rank: Vec<(usize, BTreeSet<Irrep>)>,
    pub stable: bool,
}

pub fn ft_check(
    family: impl Fn(usize) -> Result<EquivariantIdeal>,
    p_max: usize,
    q_max: usize,
    ranks: &[usize],
) -> Result<Vec<FtRow>> {
    let tables = ranks.iter().map(|&n| tor_table(&family(n)?, p_max, q_max)).collect::<Result<Vec<_>>>()?;
    Ok((0..=p_max)
        .map(|p| {
            let labels_by_rank: Vec<_> = tables.iter().map(|t| (t.rank, t.labels(p))).collect();
            let stable = match labels_by_rank.as_slice() {
                [.., (_, a), (_, b)] => a == b,
                _ => true,
            };
            FtRow { p, labels_by_rank, stable }
        })
        .collect())
}
