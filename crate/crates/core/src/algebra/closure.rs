use std::collections::{BTreeMap, VecDeque};

use super::linalg::Echelon;
use super::poly::{Monomial, SparsePolynomial};
use super::vars::{VariableSystem, Weight};
use crate::partitions::SymPolynomial;
use crate::rational::Q;
use crate::{Error, Result};

/// The smallest `gl_n`-stable subspace containing some polynomials, stored
/// as an echelon basis per `(degree, weight)`.
#[derive(Clone, Debug)]
pub struct RepClosure {
    sys: VariableSystem,
    spaces: BTreeMap<(usize, Weight), Echelon<Monomial>>,
}

impl RepClosure {
    /// Fails with `NotHomogeneous` for mixed-degree inputs and with
    /// `DegreeOverflow` when a generator has degree above `degree_bound`.
    pub fn new(sys: &VariableSystem, gens: &[SparsePolynomial], degree_bound: usize) -> Result<Self> {
        let mut out = RepClosure { sys: sys.clone(), spaces: BTreeMap::new() };
        let mut queue: VecDeque<SparsePolynomial> = VecDeque::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let d = g.degree().ok_or(Error::NotHomogeneous)?;
            if d > degree_bound {
                return Err(Error::DegreeOverflow { degree: d, bound: degree_bound });
            }
            for (key, piece) in g.weight_components(sys) {
                if out.insert(key, piece.clone()) {
                    queue.push_back(piece);
                }
            }
        }
        let ops = sys.lie_generators();
        while let Some(v) = queue.pop_front() {
            for &op in &ops {
                let w = v.act(sys, op);
                if w.is_zero() {
                    continue;
                }
                let key = w.weight(sys).expect("generators map weight vectors to weight vectors");
                if out.insert(key, w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        Ok(out)
    }

    fn insert(&mut self, key: (usize, Weight), v: SparsePolynomial) -> bool {
        self.spaces.entry(key).or_default().insert(v.into_terms()).is_some()
    }

    pub fn system(&self) -> &VariableSystem {
        &self.sys
    }

    pub fn dim(&self) -> usize {
        self.spaces.values().map(Echelon::rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn weight_spaces(&self) -> impl Iterator<Item = (&(usize, Weight), &Echelon<Monomial>)> {
        self.spaces.iter()
    }

    pub fn weight_space(&self, degree: usize, weight: &[u32]) -> Option<&Echelon<Monomial>> {
        self.spaces.get(&(degree, weight.to_vec()))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.spaces.keys().map(|(d, _)| *d).collect();
        d.dedup();
        d
    }

    /// A basis of the whole space, weight space by weight space.
    pub fn basis(&self) -> Vec<SparsePolynomial> {
        self.spaces
            .values()
            .flat_map(|e| e.rows().iter().map(|r| SparsePolynomial::from_terms(r.clone())))
            .collect()
    }

    pub fn contains(&self, f: &SparsePolynomial) -> bool {
        f.weight_components(&self.sys)
            .into_iter()
            .all(|(key, piece)| self.spaces.get(&key).is_some_and(|e| e.contains(piece.terms())))
    }

    /// The `GL_n` (or `GL_n × GL_n`) character of the degree-`d` part.
    pub fn character(&self, degree: usize) -> SymPolynomial {
        let mut ch = if self.sys.is_bivariate() {
            SymPolynomial::zero_bivariate(self.sys.rank())
        } else {
            SymPolynomial::zero(self.sys.rank())
        };
        for ((d, w), e) in &self.spaces {
            if *d == degree {
                ch.add_term(w.clone(), Q::from_integer(e.rank().into()));
            }
        }
        ch
    }
}

/// Convenience wrapper with the default degree bound.
pub fn rep_closure(sys: &VariableSystem, gens: &[SparsePolynomial]) -> Result<RepClosure> {
    RepClosure::new(sys, gens, super::DEFAULT_DEGREE_BOUND)
}
