use num_traits::{One, Zero};

use crate::algebra::{
    monomials_of_weight, weight_leq, weight_sub, Echelon, EquivariantIdeal, Monomial, SparseVec, VarId, VariableSystem, Weight,
};
use crate::rational::Q;
use crate::{Error, Result};

/// Basis element `v_P ⊗ m` of `Λᵖ(W) ⊗ A/I`: `P` strictly increasing, `m` a
/// standard monomial of the quotient.
pub type ChainKey = (Vec<VarId>, Monomial);

/// The Koszul complex `Λ•(W) ⊗ A/I` whose homology is `Tor^A_•(A/I, ℂ)`.
/// It splits into finite strands by internal degree `q` and weight `w`:
/// `K_{p,q,w} = ⊕_P v_P ⊗ (A/I)_{q−p, w−wt(P)}`.
pub struct KoszulComplex<'a> {
    ideal: &'a EquivariantIdeal,
}

/// One strand: chain dimensions for `p = 0..=q` and ranks of `∂_p` for
/// `p = 1..=q` (index `p`; index 0 unused and zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub q: usize,
    pub weight: Weight,
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl Strand {
    pub fn homology(&self, p: usize) -> usize {
        if p >= self.dims.len() {
            return 0;
        }
        let out = self.ranks[p];
        let inc = self.ranks.get(p + 1).copied().unwrap_or(0);
        self.dims[p] - out - inc
    }

    pub fn euler_chain(&self) -> i64 {
        self.dims.iter().enumerate().map(|(p, &d)| sign(p) * d as i64).sum()
    }

    pub fn euler_homology(&self) -> i64 {
        (0..self.dims.len()).map(|p| sign(p) * self.homology(p) as i64).sum()
    }
}

fn sign(p: usize) -> i64 {
    if p % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<'a> KoszulComplex<'a> {
    pub fn new(ideal: &'a EquivariantIdeal) -> Self {
        KoszulComplex { ideal }
    }

    fn sys(&self) -> &VariableSystem {
        self.ideal.system()
    }

    /// Standard monomials of `(A/I)_{e,w}`.
    pub fn quotient_basis(&self, degree: usize, weight: &[u32]) -> Result<Vec<Monomial>> {
        let space = self.ideal.weight_space(degree, weight)?;
        Ok(monomials_of_weight(self.sys(), degree, weight).into_iter().filter(|m| !space.is_pivot(m)).collect())
    }

    /// Basis of `K_{p,q,w}`.
    pub fn chain_basis(&self, p: usize, q: usize, weight: &[u32]) -> Result<Vec<ChainKey>> {
        let mut out = Vec::new();
        if p > q {
            return Ok(out);
        }
        let sys = self.sys();
        let mut subsets = Vec::new();
        wedge_subsets(sys, 0, p, &mut sys.zero_weight(), weight, &mut Vec::new(), &mut subsets);
        for (set, w) in subsets {
            for m in self.quotient_basis(q - p, &weight_sub(weight, &w))? {
                out.push((set.clone(), m));
            }
        }
        Ok(out)
    }

    /// `∂(v_P ⊗ m) = Σ_k (−1)^k v_{P∖p_k} ⊗ NF(x_{p_k} m)`, extended linearly.
    pub fn boundary(&self, chain: &SparseVec<ChainKey>) -> Result<SparseVec<ChainKey>> {
        let sys = self.sys();
        let mut out: SparseVec<ChainKey> = SparseVec::new();
        for ((set, m), c) in chain {
            for (k, &x) in set.iter().enumerate() {
                let mut rest = set.clone();
                rest.remove(k);
                let prod = m.mul(&Monomial::from_vars(vec![x]));
                let space = self.ideal.weight_space(prod.degree(), &prod.weight(sys))?;
                let nf = space.reduce([(prod, Q::one())].into_iter().collect());
                let s = if k % 2 == 0 { c.clone() } else { -c.clone() };
                for (mono, v) in nf {
                    let e = out.entry((rest.clone(), mono)).or_insert_with(Q::zero);
                    *e += &s * v;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Dimensions and boundary ranks of the `(q, w)` strand; checks `∂² = 0`
    /// on every basis element.
    pub fn strand(&self, q: usize, weight: &[u32]) -> Result<Strand> {
        self.strand_truncated(q, weight, q)
    }

    /// The strand up to `K_{p_top}`. Homology is only meaningful below `p_top`.
    pub fn strand_truncated(&self, q: usize, weight: &[u32], p_top: usize) -> Result<Strand> {
        let top = p_top.min(q);
        let mut dims = Vec::with_capacity(top + 1);
        let mut ranks = vec![0; top + 1];
        for p in 0..=top {
            let basis = self.chain_basis(p, q, weight)?;
            dims.push(basis.len());
            if p == 0 {
                continue;
            }
            let mut image: Echelon<ChainKey> = Echelon::new();
            for b in basis {
                let d = self.boundary(&[(b, Q::one())].into_iter().collect())?;
                if p >= 2 && !self.boundary(&d)?.is_empty() {
                    return Err(Error::BoundaryNotNilpotent { p, q });
                }
                image.insert(d);
            }
            ranks[p] = image.rank();
        }
        Ok(Strand { q, weight: weight.to_vec(), dims, ranks })
    }
}

fn wedge_subsets(
    sys: &VariableSystem,
    start: VarId,
    left: usize,
    acc: &mut Weight,
    bound: &[u32],
    cur: &mut Vec<VarId>,
    out: &mut Vec<(Vec<VarId>, Weight)>,
) {
    if left == 0 {
        out.push((cur.clone(), acc.clone()));
        return;
    }
    for v in start..sys.len() as VarId {
        sys.add_var_weight(acc, v);
        if weight_leq(acc, bound) {
            cur.push(v);
            wedge_subsets(sys, v + 1, left - 1, acc, bound, cur, out);
            cur.pop();
        }
        let w = sys.var_weight(v);
        for (a, x) in acc.iter_mut().zip(&w) {
            *a -= x;
        }
    }
}
