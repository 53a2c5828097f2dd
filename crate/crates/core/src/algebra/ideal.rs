use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::closure::RepClosure;
use super::linalg::Echelon;
use super::matrix::highest_weight_vector;
use super::poly::{Monomial, SparsePolynomial};
use super::vars::{indicator_weight, weight_leq, weight_sub, SystemKind, VarId, VariableSystem, Weight};
use crate::partitions::{Partition, SymPolynomial};
use crate::rational::Q;
use crate::{Error, Flavor, Result};

/// All monomials of the given degree and weight, sorted.
pub fn monomials_of_weight(sys: &VariableSystem, degree: usize, weight: &[u32]) -> Vec<Monomial> {
    let total: u32 = weight.iter().sum();
    if total as usize != degree * sys.variable_tensor_degree() as usize {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rem = weight.to_vec();
    let mut cur = Vec::with_capacity(degree);
    go(sys, 0, &mut rem, &mut cur, degree, &mut out);
    out
}

fn go(sys: &VariableSystem, start: VarId, rem: &mut [u32], cur: &mut Vec<VarId>, degree: usize, out: &mut Vec<Monomial>) {
    if cur.len() == degree {
        if rem.iter().all(|&r| r == 0) {
            out.push(Monomial::from_vars(cur.clone()));
        }
        return;
    }
    // the smallest lead index with weight left must be covered next
    let Some(lead) = rem[..sys.rank()].iter().position(|&r| r > 0) else { return };
    for v in start..sys.len() as VarId {
        let l = sys.lead_index(v);
        if l < lead {
            continue;
        }
        if l > lead {
            break;
        }
        let w = sys.var_weight(v);
        if !weight_leq(&w, rem) {
            continue;
        }
        for (r, x) in rem.iter_mut().zip(&w) {
            *r -= x;
        }
        cur.push(v);
        go(sys, v, rem, cur, degree, out);
        cur.pop();
        for (r, x) in rem.iter_mut().zip(&w) {
            *r += x;
        }
    }
}

/// All monomials of a degree.
pub fn monomials_of_degree(sys: &VariableSystem, degree: usize) -> Vec<Monomial> {
    fn rec(n: VarId, start: VarId, left: usize, cur: &mut Vec<VarId>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_vars(cur.clone()));
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, v, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sys.len() as VarId, 0, degree, &mut Vec::new(), &mut out);
    out
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weights of degree-`d` monomials whose blocks are weakly decreasing.
pub fn dominant_weights(sys: &VariableSystem, degree: usize) -> Vec<Weight> {
    let n = sys.rank();
    let blocks: Vec<Vec<Vec<u32>>> = if sys.is_bivariate() {
        let p: Vec<Vec<u32>> = Partition::all_of_size_with_rows(degree as u32, n).iter().map(|p| p.padded(n)).collect();
        vec![p.clone(), p]
    } else {
        let total = degree as u32 * sys.variable_tensor_degree();
        vec![Partition::all_of_size_with_rows(total, n).iter().map(|p| p.padded(n)).collect()]
    };
    let mut out: Vec<Weight> = vec![vec![]];
    for b in blocks {
        out = out.into_iter().flat_map(|w| b.iter().map(move |x| [w.clone(), x.clone()].concat())).collect();
    }
    out.retain(|w| !monomials_of_weight(sys, degree, w).is_empty());
    out
}

/// Every weight occurring in degree `d`.
pub fn weights_of_degree(sys: &VariableSystem, degree: usize) -> Vec<Weight> {
    let n = sys.rank();
    let mut out: Vec<Weight> = if sys.is_bivariate() {
        let c = compositions(degree as u32, n);
        c.iter().flat_map(|a| c.iter().map(move |b| [a.clone(), b.clone()].concat())).collect()
    } else {
        compositions(degree as u32 * sys.variable_tensor_degree(), n)
    };
    out.retain(|w| !monomials_of_weight(sys, degree, w).is_empty());
    out
}

/// Distinct rearrangements of `w` inside each block of `rank` entries.
pub fn weight_orbit(w: &[u32], rank: usize) -> Vec<Weight> {
    fn perms(block: &[u32]) -> Vec<Vec<u32>> {
        let mut v = block.to_vec();
        v.sort_unstable();
        let mut out = vec![v.clone()];
        // next lexicographic permutation
        loop {
            let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else { break };
            let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
            v.swap(i, j);
            v[i + 1..].reverse();
            out.push(v.clone());
        }
        out
    }
    let mut out: Vec<Weight> = vec![vec![]];
    for block in w.chunks(rank) {
        let p = perms(block);
        out = out.into_iter().flat_map(|w| p.iter().map(move |x| [w.clone(), x.clone()].concat())).collect();
    }
    out
}

/// Substitutes vertex labels: `x[i,j] ↦ x[φ(i),φ(j)]` (`x_i ↦ x_{φ(i)}` in the
/// degree-one algebra).
pub fn relabel(sys: &VariableSystem, f: &SparsePolynomial, phi: impl Fn(u32) -> u32) -> Result<SparsePolynomial> {
    let mut out = SparsePolynomial::zero();
    'terms: for (m, c) in f.terms() {
        let mut vars = Vec::with_capacity(m.degree());
        let mut sign = 1i64;
        for &v in m.vars() {
            let (i, j) = sys.label(v);
            let image = match sys.kind() {
                SystemKind::DegreeOne => sys.var(phi(i), j)?,
                SystemKind::Quadratic(_) => sys.var(phi(i), phi(j))?,
            };
            match image {
                Some((w, s)) => {
                    vars.push(w);
                    sign *= s;
                }
                None => continue 'terms,
            }
        }
        out.add_term(Monomial::from_vars(vars), c * Q::from_integer(sign.into()));
    }
    Ok(out)
}

/// Largest degree handled unless configured otherwise.
pub const DEFAULT_DEGREE_BOUND: usize = 16;

/// A `gl_n`-stable ideal of a rank-`n` truncation, given by generators.
///
/// Weight components are computed on demand and cached. When every
/// generator is admissible (multilinear in the vertex labels), weight spaces
/// at admissible weights are built from relabelled generators instead of the
/// full `gl_n` closure: on multilinear weight spaces the submodule generated
/// by a vector is spanned by its images under vertex permutations.
pub struct EquivariantIdeal {
    sys: VariableSystem,
    generators: Vec<SparsePolynomial>,
    degree_bound: usize,
    closure: OnceLock<Result<RepClosure>>,
    /// Per generator degree: span of permuted generators on `1..=k`.
    admissible: Option<BTreeMap<usize, Echelon<Monomial>>>,
    cache: Mutex<HashMap<(usize, Weight), Arc<Echelon<Monomial>>>>,
}

impl std::fmt::Debug for EquivariantIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EquivariantIdeal")
            .field("system", &self.sys)
            .field("generators", &self.generators.len())
            .finish()
    }
}

fn is_indicator(w: &[u32]) -> bool {
    w.iter().all(|&x| x <= 1)
}

impl EquivariantIdeal {
    pub fn new(sys: &VariableSystem, generators: Vec<SparsePolynomial>) -> Result<Self> {
        Self::with_degree_bound(sys, generators, DEFAULT_DEGREE_BOUND)
    }

    pub fn with_degree_bound(sys: &VariableSystem, generators: Vec<SparsePolynomial>, degree_bound: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            let d = g.degree().ok_or(Error::NotHomogeneous)?;
            if d > degree_bound {
                return Err(Error::DegreeOverflow { degree: d, bound: degree_bound });
            }
            gens.push(g);
        }
        let admissible = Self::admissible_spans(sys, &gens)?;
        Ok(EquivariantIdeal {
            sys: sys.clone(),
            generators: gens,
            degree_bound,
            closure: OnceLock::new(),
            admissible,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// The ideal generated by the isotypic piece `E_λ`.
    pub fn isotypic(sys: &VariableSystem, lambda: &Partition) -> Result<Self> {
        let gens = highest_weight_vector(sys, lambda)?.into_iter().collect();
        Self::new(sys, gens)
    }

    pub fn zero(sys: &VariableSystem) -> Self {
        Self::new(sys, Vec::new()).expect("no generators")
    }

    /// Forces the full `gl_n` closure even for admissible generators.
    pub fn without_shortcut(mut self) -> Self {
        self.admissible = None;
        self
    }

    fn admissible_spans(sys: &VariableSystem, gens: &[SparsePolynomial]) -> Result<Option<BTreeMap<usize, Echelon<Monomial>>>> {
        if sys.is_bivariate() {
            return Ok(None);
        }
        let t = sys.variable_tensor_degree() as usize;
        let mut pieces = Vec::new();
        for g in gens {
            for ((d, w), piece) in g.weight_components(sys) {
                if !is_indicator(&w) {
                    return Ok(None);
                }
                let support: Vec<u32> = (1..=sys.rank() as u32).filter(|&i| w[(i - 1) as usize] == 1).collect();
                debug_assert_eq!(support.len(), d * t);
                // move onto 1..=k, order preserving
                let to_front = |v: u32| support.iter().position(|&s| s == v).map_or(v, |p| p as u32 + 1);
                pieces.push((d, relabel(sys, &piece, to_front)?));
            }
        }
        let mut spans: BTreeMap<usize, Echelon<Monomial>> = BTreeMap::new();
        for (d, piece) in pieces {
            let k = (d * t) as u32;
            let span = spans.entry(d).or_default();
            let mut queue = Vec::new();
            if span.insert(piece.clone().into_terms()).is_some() {
                queue.push(piece);
            }
            while let Some(v) = queue.pop() {
                for s in 1..k {
                    let swapped = relabel(sys, &v, |x| if x == s { s + 1 } else if x == s + 1 { s } else { x })?;
                    if span.insert(swapped.clone().into_terms()).is_some() {
                        queue.push(swapped);
                    }
                }
            }
        }
        Ok(Some(spans))
    }

    pub fn system(&self) -> &VariableSystem {
        &self.sys
    }

    pub fn generators(&self) -> &[SparsePolynomial] {
        &self.generators
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// The `gl_n`-closure of the generators (computed on first use).
    pub fn closure(&self) -> Result<&RepClosure> {
        self.closure
            .get_or_init(|| RepClosure::new(&self.sys, &self.generators, self.degree_bound))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `I_{d,w}` as an echelon basis over monomials.
    pub fn weight_space(&self, degree: usize, weight: &[u32]) -> Result<Arc<Echelon<Monomial>>> {
        if degree > self.degree_bound {
            return Err(Error::DegreeOverflow { degree, bound: self.degree_bound });
        }
        let key = (degree, weight.to_vec());
        if let Some(e) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(e.clone());
        }
        let e = Arc::new(match (&self.admissible, is_indicator(weight)) {
            (Some(spans), true) => self.admissible_weight_space(spans, degree, weight)?,
            _ => self.closure_weight_space(degree, weight)?,
        });
        self.cache.lock().expect("cache lock").insert(key, e.clone());
        Ok(e)
    }

    fn closure_weight_space(&self, degree: usize, weight: &[u32]) -> Result<Echelon<Monomial>> {
        let closure = self.closure()?;
        let mut out = Echelon::new();
        for ((e, w), space) in closure.weight_spaces() {
            if *e > degree || !weight_leq(w, weight) {
                continue;
            }
            let cofactors = monomials_of_weight(&self.sys, degree - e, &weight_sub(weight, w));
            for row in space.rows() {
                let g = SparsePolynomial::from_terms(row.clone());
                for m in &cofactors {
                    out.insert(g.mul_monomial(m).into_terms());
                }
            }
        }
        Ok(out)
    }

    fn admissible_weight_space(&self, spans: &BTreeMap<usize, Echelon<Monomial>>, degree: usize, weight: &[u32]) -> Result<Echelon<Monomial>> {
        let t = self.sys.variable_tensor_degree() as usize;
        let support: Vec<u32> = (1..=self.sys.rank() as u32).filter(|&i| weight[(i - 1) as usize] == 1).collect();
        let mut out = Echelon::new();
        for (&e, span) in spans {
            let k = e * t;
            if e > degree || k > support.len() {
                continue;
            }
            for sub in subsets(&support, k) {
                let phi = |v: u32| sub[(v - 1) as usize];
                let rest = weight_sub(weight, &indicator_weight(self.sys.rank(), &sub));
                let cofactors = monomials_of_weight(&self.sys, degree - e, &rest);
                for row in span.rows() {
                    let g = relabel(&self.sys, &SparsePolynomial::from_terms(row.clone()), phi)?;
                    for m in &cofactors {
                        out.insert(g.mul_monomial(m).into_terms());
                    }
                }
            }
        }
        Ok(out)
    }

    /// A basis of the degree-`d` component.
    pub fn component(&self, degree: usize) -> Result<Vec<SparsePolynomial>> {
        let mut out = Vec::new();
        for w in weights_of_degree(&self.sys, degree) {
            let e = self.weight_space(degree, &w)?;
            out.extend(e.rows().iter().map(|r| SparsePolynomial::from_terms(r.clone())));
        }
        Ok(out)
    }

    /// Character of the degree-`d` component, computed on dominant weights
    /// and spread over their orbits.
    pub fn component_character(&self, degree: usize) -> Result<SymPolynomial> {
        let n = self.sys.rank();
        let mut ch = if self.sys.is_bivariate() {
            SymPolynomial::zero_bivariate(n)
        } else {
            SymPolynomial::zero(n)
        };
        for w in dominant_weights(&self.sys, degree) {
            let r = self.weight_space(degree, &w)?.rank();
            if r > 0 {
                for u in weight_orbit(&w, n) {
                    ch.add_term(u, Q::from_integer(r.into()));
                }
            }
        }
        Ok(ch)
    }

    pub fn contains(&self, f: &SparsePolynomial) -> Result<bool> {
        for ((d, w), piece) in f.weight_components(&self.sys) {
            if !self.weight_space(d, &w)?.contains(piece.terms()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `E_μ ⊆ I`, tested on its highest weight vector. Vacuously true
    /// when `E_μ` vanishes at this rank.
    pub fn contains_isotypic(&self, mu: &Partition) -> Result<bool> {
        match highest_weight_vector(&self.sys, mu)? {
            Some(v) => self.contains(&v),
            None => Ok(true),
        }
    }

    /// Normal form of `f` modulo `I` (in weight-space echelon terms).
    pub fn normal_form(&self, f: &SparsePolynomial) -> Result<SparsePolynomial> {
        let mut out = SparsePolynomial::zero();
        for ((d, w), piece) in f.weight_components(&self.sys) {
            let r = self.weight_space(d, &w)?.reduce(piece.into_terms());
            out.add_scaled(&SparsePolynomial::from_terms(r), &Q::one());
        }
        Ok(out)
    }
}

/// Subsets of `items` of size `k`, in lexicographic order.
pub fn subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn rec(items: &[u32], k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in 0..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(&items[i + 1..], k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, &mut Vec::new(), &mut out);
    out
}

pub fn ideal_component(ideal: &EquivariantIdeal, degree: usize) -> Result<Vec<SparsePolynomial>> {
    ideal.component(degree)
}

pub fn ideal_contains_isotypic(ideal: &EquivariantIdeal, mu: &Partition) -> Result<bool> {
    ideal.contains_isotypic(mu)
}

/// Partitions `μ` with `|μ| ≤ max_size` and `E_μ ⊆ I` (and `E_μ ≠ 0`).
pub fn isotypic_support(ideal: &EquivariantIdeal, max_size: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for mu in Partition::all_up_to(max_size) {
        if highest_weight_vector(ideal.system(), &mu)?.is_some() && ideal.contains_isotypic(&mu)? {
            out.push(mu);
        }
    }
    Ok(out)
}

/// `Σ c_k m_{Γ_k}` over the perfect matchings `Γ_k` of `support`, in the
/// order of [`crate::poset::perfect_matchings`].
pub fn admissible_vector(sys: &VariableSystem, support: &[u32], coeffs: &[i64]) -> Result<SparsePolynomial> {
    match sys.flavor() {
        Some(Flavor::Symmetric) | Some(Flavor::Antisymmetric) => {}
        _ => return Err(Error::UnsupportedFlavor(sys.to_string())),
    }
    let mut out = SparsePolynomial::zero();
    for (m, &c) in crate::poset::perfect_matchings(support).iter().zip(coeffs) {
        let mut p = SparsePolynomial::constant(Q::from_integer(c.into()));
        for &(a, b) in m.edges() {
            p = p.mul(&SparsePolynomial::var(sys, a, b)?);
        }
        out.add_scaled(&p, &Q::one());
    }
    Ok(out)
}
