use std::collections::HashMap;
use std::fmt;

use crate::{Error, Flavor, Result};

pub type VarId = u32;

/// A weight vector: `n` entries for one copy of `GL_n`, `2n` (rows then
/// columns) for `GL_n × GL_n`.
pub type Weight = Vec<u32>;

/// Which polynomial ring a [`VariableSystem`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemKind {
    Quadratic(Flavor),
    /// `ℂ[x_i, y_i]`, the degree-one algebra `Sym(ℂⁿ ⊕ ℂⁿ)`.
    DegreeOne,
}

/// Degree-one variables of a rank-`n` truncation and their weights.
///
/// Variables are numbered so that ids increase with their *lead index*: the
/// smaller index for `x[i,j]` in the (anti)symmetric case, the row for the
/// generic case, and `i` for `x_i`/`y_i`. Weight-space enumeration relies on
/// this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableSystem {
    kind: SystemKind,
    rank: usize,
    labels: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), VarId>,
}

/// A generator `e_{ab}` of `gl_n`, or of one factor of `gl_n × gl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlGenerator {
    Diagonal(u32, u32),
    Left(u32, u32),
    Right(u32, u32),
}

impl VariableSystem {
    pub fn new(flavor: Flavor, rank: usize) -> Self {
        let n = rank as u32;
        let mut labels = Vec::new();
        for i in 1..=n {
            match flavor {
                Flavor::Symmetric => labels.extend((i..=n).map(|j| (i, j))),
                Flavor::Antisymmetric => labels.extend((i + 1..=n).map(|j| (i, j))),
                Flavor::Generic => labels.extend((1..=n).map(|j| (i, j))),
            }
        }
        Self::from_labels(SystemKind::Quadratic(flavor), rank, labels)
    }

    /// `x_i` is labelled `(i, 0)` and `y_i` is `(i, 1)`.
    pub fn degree_one(rank: usize) -> Self {
        let labels = (1..=rank as u32).flat_map(|i| [(i, 0), (i, 1)]).collect();
        Self::from_labels(SystemKind::DegreeOne, rank, labels)
    }

    fn from_labels(kind: SystemKind, rank: usize, labels: Vec<(u32, u32)>) -> Self {
        let index = labels.iter().enumerate().map(|(k, &l)| (l, k as VarId)).collect();
        VariableSystem { kind, rank, labels, index }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn flavor(&self) -> Option<Flavor> {
        match self.kind {
            SystemKind::Quadratic(f) => Some(f),
            SystemKind::DegreeOne => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: VarId) -> (u32, u32) {
        self.labels[v as usize]
    }

    pub fn is_bivariate(&self) -> bool {
        self.kind == SystemKind::Quadratic(Flavor::Generic)
    }

    pub fn weight_len(&self) -> usize {
        if self.is_bivariate() {
            2 * self.rank
        } else {
            self.rank
        }
    }

    /// Tensor degree of a degree-one variable (2 for the quadratic algebras).
    pub fn variable_tensor_degree(&self) -> u32 {
        match self.kind {
            SystemKind::Quadratic(_) => 2,
            SystemKind::DegreeOne => 1,
        }
    }

    pub fn zero_weight(&self) -> Weight {
        vec![0; self.weight_len()]
    }

    /// The variable `x[i,j]` (1-based) as an id with a sign, or `None` when it
    /// is identically zero (`x[i,i]` in the antisymmetric algebra).
    pub fn var(&self, i: u32, j: u32) -> Result<Option<(VarId, i64)>> {
        let n = self.rank as u32;
        let out_of_range = || Error::VariableOutOfRange(i, j, self.rank);
        match self.kind {
            SystemKind::DegreeOne => {
                if i == 0 || i > n || j > 1 {
                    return Err(out_of_range());
                }
                Ok(Some((self.index[&(i, j)], 1)))
            }
            SystemKind::Quadratic(flavor) => {
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(out_of_range());
                }
                Ok(match flavor {
                    Flavor::Symmetric => Some((self.index[&(i.min(j), i.max(j))], 1)),
                    Flavor::Antisymmetric if i == j => None,
                    Flavor::Antisymmetric if i < j => Some((self.index[&(i, j)], 1)),
                    Flavor::Antisymmetric => Some((self.index[&(j, i)], -1)),
                    Flavor::Generic => Some((self.index[&(i, j)], 1)),
                })
            }
        }
    }

    /// Index of the weight slot that decides enumeration order.
    pub(crate) fn lead_index(&self, v: VarId) -> usize {
        (self.label(v).0 - 1) as usize
    }

    pub fn add_var_weight(&self, w: &mut [u32], v: VarId) {
        let (i, j) = self.label(v);
        let (i, j) = ((i - 1) as usize, j as usize);
        match self.kind {
            SystemKind::DegreeOne => w[i] += 1,
            SystemKind::Quadratic(Flavor::Generic) => {
                w[i] += 1;
                w[self.rank + j - 1] += 1;
            }
            SystemKind::Quadratic(_) => {
                w[i] += 1;
                w[j - 1] += 1;
            }
        }
    }

    pub fn var_weight(&self, v: VarId) -> Weight {
        let mut w = self.zero_weight();
        self.add_var_weight(&mut w, v);
        w
    }

    /// Off-diagonal generators; on weight vectors the diagonal ones act by
    /// scalars, so these suffice to generate subrepresentations.
    pub fn lie_generators(&self) -> Vec<GlGenerator> {
        let n = self.rank as u32;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                if self.is_bivariate() {
                    out.push(GlGenerator::Left(a, b));
                    out.push(GlGenerator::Right(a, b));
                } else {
                    out.push(GlGenerator::Diagonal(a, b));
                }
            }
        }
        out
    }

    /// `e_{ab}` applied to a single variable: at most two signed variables.
    pub fn act_on_var(&self, g: GlGenerator, v: VarId) -> Vec<(VarId, i64)> {
        let (i, j) = self.label(v);
        let mut out = Vec::with_capacity(2);
        let mut push = |x: Result<Option<(VarId, i64)>>, c: i64| {
            if let Ok(Some((id, s))) = x {
                out.push((id, s * c));
            }
        };
        match (self.kind, g) {
            (SystemKind::DegreeOne, GlGenerator::Diagonal(a, b)) => {
                if b == i {
                    push(self.var(a, j), 1);
                }
            }
            (SystemKind::Quadratic(Flavor::Generic), GlGenerator::Left(a, b)) => {
                if b == i {
                    push(self.var(a, j), 1);
                }
            }
            (SystemKind::Quadratic(Flavor::Generic), GlGenerator::Right(a, b)) => {
                if b == j {
                    push(self.var(i, a), 1);
                }
            }
            (SystemKind::Quadratic(Flavor::Generic), GlGenerator::Diagonal(a, b)) => {
                if b == i {
                    push(self.var(a, j), 1);
                }
                if b == j {
                    push(self.var(i, a), 1);
                }
            }
            (SystemKind::Quadratic(_), GlGenerator::Diagonal(a, b)) => {
                if b == i {
                    push(self.var(a, j), 1);
                }
                if b == j {
                    push(self.var(i, a), 1);
                }
            }
            _ => {}
        }
        // merge x[a,a] appearing twice (e.g. e_{ab} x[b,b] = 2 x[a,b])
        out.sort_unstable();
        let mut merged: Vec<(VarId, i64)> = Vec::with_capacity(out.len());
        for (id, c) in out {
            match merged.last_mut() {
                Some((last, lc)) if *last == id => *lc += c,
                _ => merged.push((id, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        merged
    }

    pub fn name(&self, v: VarId) -> String {
        let (i, j) = self.label(v);
        match self.kind {
            SystemKind::DegreeOne => format!("{}[{i}]", if j == 0 { 'x' } else { 'y' }),
            SystemKind::Quadratic(_) => format!("x[{i},{j}]"),
        }
    }
}

impl fmt::Display for VariableSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SystemKind::Quadratic(fl) => write!(f, "{fl} rank {}", self.rank),
            SystemKind::DegreeOne => write!(f, "degree-one rank {}", self.rank),
        }
    }
}

/// Componentwise `a ≤ b`.
pub fn weight_leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn weight_sub(a: &[u32], b: &[u32]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Indicator weight of a support set (1-based).
pub fn indicator_weight(n: usize, support: &[u32]) -> Weight {
    let mut w = vec![0; n];
    for &s in support {
        w[(s - 1) as usize] = 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_counts() {
        for f in Flavor::ALL {
            for n in 1..=5 {
                assert_eq!(VariableSystem::new(f, n).len(), f.variable_count(n));
            }
        }
        assert_eq!(VariableSystem::degree_one(3).len(), 6);
    }

    #[test]
    fn normalization() {
        let s = VariableSystem::new(Flavor::Symmetric, 3);
        assert_eq!(s.var(2, 1).unwrap(), s.var(1, 2).unwrap());
        let a = VariableSystem::new(Flavor::Antisymmetric, 3);
        assert_eq!(a.var(2, 2).unwrap(), None);
        let (id, sign) = a.var(3, 1).unwrap().unwrap();
        assert_eq!((a.label(id), sign), ((1, 3), -1));
        assert!(a.var(4, 1).is_err());
    }

    #[test]
    fn ids_follow_lead_index() {
        for sys in [
            VariableSystem::new(Flavor::Symmetric, 4),
            VariableSystem::new(Flavor::Antisymmetric, 4),
            VariableSystem::new(Flavor::Generic, 4),
            VariableSystem::degree_one(4),
        ] {
            let leads: Vec<usize> = (0..sys.len() as VarId).map(|v| sys.lead_index(v)).collect();
            assert!(leads.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn action_on_variables() {
        let s = VariableSystem::new(Flavor::Symmetric, 2);
        let x22 = s.var(2, 2).unwrap().unwrap().0;
        let x12 = s.var(1, 2).unwrap().unwrap().0;
        let x11 = s.var(1, 1).unwrap().unwrap().0;
        assert_eq!(s.act_on_var(GlGenerator::Diagonal(1, 2), x22), vec![(x12, 2)]);
        assert!(s.act_on_var(GlGenerator::Diagonal(1, 2), x11).is_empty());

        let a = VariableSystem::new(Flavor::Antisymmetric, 3);
        let x12 = a.var(1, 2).unwrap().unwrap().0;
        let x13 = a.var(1, 3).unwrap().unwrap().0;
        // e_{31} x[1,2] = x[3,2] = -x[2,3]
        let x23 = a.var(2, 3).unwrap().unwrap().0;
        assert_eq!(a.act_on_var(GlGenerator::Diagonal(3, 1), x12), vec![(x23, -1)]);
        // e_{21} x[1,2] = x[2,2] = 0
        assert!(a.act_on_var(GlGenerator::Diagonal(2, 1), x12).is_empty());
        assert_eq!(a.act_on_var(GlGenerator::Diagonal(3, 2), x12), vec![(x13, 1)]);
    }
}
