use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::vars::{GlGenerator, VarId, VariableSystem, Weight};
use crate::rational::Q;
use crate::{Error, Result};

/// A monomial as a sorted list of variable ids with repetition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<VarId>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<VarId>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[VarId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x <= y {
                        v.push(x);
                        a.next();
                    } else {
                        v.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => v.extend(a.by_ref()),
                (None, Some(_)) => v.extend(b.by_ref()),
                (None, None) => break,
            }
        }
        Monomial(v)
    }

    pub fn weight(&self, sys: &VariableSystem) -> Weight {
        let mut w = sys.zero_weight();
        for &v in &self.0 {
            sys.add_var_weight(&mut w, v);
        }
        w
    }

    fn replace_at(&self, pos: usize, var: VarId) -> Monomial {
        let mut v = self.0.clone();
        v[pos] = var;
        Monomial::from_vars(v)
    }
}

/// A polynomial with rational coefficients over a [`VariableSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The variable `x[i,j]`, zero when it vanishes identically.
    pub fn var(sys: &VariableSystem, i: u32, j: u32) -> Result<Self> {
        Ok(match sys.var(i, j)? {
            Some((id, s)) => Self::term(Monomial(vec![id]), Q::from_integer(s.into())),
            None => Self::zero(),
        })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Q> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparsePolynomial, c: &Q) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        out
    }

    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn scale(&self, c: &Q) -> SparsePolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePolynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePolynomial {
        SparsePolynomial { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SparsePolynomial {
        (0..k).fold(Self::constant(Q::one()), |acc, _| acc.mul(self))
    }

    /// Common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Splits into `(degree, weight)`-homogeneous pieces.
    pub fn weight_components(&self, sys: &VariableSystem) -> BTreeMap<(usize, Weight), SparsePolynomial> {
        let mut out: BTreeMap<(usize, Weight), SparsePolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.degree(), m.weight(sys))).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// `(degree, weight)` when the polynomial is a nonzero weight vector.
    pub fn weight(&self, sys: &VariableSystem) -> Option<(usize, Weight)> {
        let comps = self.weight_components(sys);
        if comps.len() == 1 {
            comps.into_keys().next()
        } else {
            None
        }
    }

    /// Action of a Lie algebra generator, extended as a derivation.
    pub fn act(&self, sys: &VariableSystem, g: GlGenerator) -> SparsePolynomial {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let vars = m.vars();
            for (pos, &v) in vars.iter().enumerate() {
                if pos > 0 && vars[pos - 1] == v {
                    continue;
                }
                let mult = vars[pos..].iter().take_while(|&&u| u == v).count() as i64;
                for (w, s) in sys.act_on_var(g, v) {
                    out.add_term(m.replace_at(pos, w), c * Q::from_integer((s * mult).into()));
                }
            }
        }
        out
    }

    /// Multiplies through so the coefficient of the first term is 1.
    pub fn normalized(&self) -> SparsePolynomial {
        match self.terms.values().next() {
            Some(c) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    pub fn require_homogeneous(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        self.degree().ok_or(Error::NotHomogeneous)
    }

    pub fn display<'a>(&'a self, sys: &'a VariableSystem) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, sys }
    }
}

/// `e_{ab} · f` for the diagonal `gl_n` action.
pub fn lie_act(sys: &VariableSystem, a: u32, b: u32, f: &SparsePolynomial) -> SparsePolynomial {
    f.act(sys, GlGenerator::Diagonal(a, b))
}

/// Renders in the input syntax, e.g. `2 * x[1,1] * x[2,2] - x[1,2]^2`.
pub struct PolyDisplay<'a> {
    poly: &'a SparsePolynomial,
    sys: &'a VariableSystem,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            let vars = m.vars();
            let mut i = 0;
            while i < vars.len() {
                let e = vars[i..].iter().take_while(|&&u| u == vars[i]).count();
                let name = self.sys.name(vars[i]);
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
                i += e;
            }
            write!(f, "{}", factors.join(" * "))?;
        }
        Ok(())
    }
}
