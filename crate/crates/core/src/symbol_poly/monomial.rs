//! Variables and exponent vectors.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exterior_clifford::MAX_Q;

/// Total dimension `n`, codimension `q` and bundle rank `a`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dims {
    pub n: usize,
    pub q: usize,
    pub a: usize,
}

impl Dims {
    pub fn new(n: usize, q: usize, a: usize) -> Result<Dims> {
        if q > n || q > MAX_Q || a == 0 || n == 0 {
            return Err(Error::DimensionMismatch(format!("invalid dims n={n} q={q} a={a}")));
        }
        Ok(Dims { n, q, a })
    }

    /// Leaf dimension `p = n − q`.
    pub fn p_leaf(&self) -> usize {
        self.n - self.q
    }

    /// Number of unprimed variables: `n` ξ's plus `p` σ's.
    pub fn unprimed_vars(&self) -> usize {
        self.n + self.p_leaf()
    }

    /// All unprimed variables in slot order.
    pub fn variables(&self) -> Vec<VarId> {
        let xs = (1..=self.n).map(VarId::xi);
        xs.chain((self.q + 1..=self.n).map(VarId::sigma)).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    Xi,
    Sigma,
    XiPrimed,
    SigmaPrimed,
}

/// A symbol variable. ξ indices run over `1..=n`, σ indices over `q+1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId {
    pub kind: VarKind,
    pub index: usize,
}

impl VarId {
    pub fn xi(i: usize) -> VarId {
        VarId { kind: VarKind::Xi, index: i }
    }

    pub fn sigma(i: usize) -> VarId {
        VarId { kind: VarKind::Sigma, index: i }
    }

    pub fn xi_primed(i: usize) -> VarId {
        VarId { kind: VarKind::XiPrimed, index: i }
    }

    pub fn sigma_primed(i: usize) -> VarId {
        VarId { kind: VarKind::SigmaPrimed, index: i }
    }

    pub fn is_primed(&self) -> bool {
        matches!(self.kind, VarKind::XiPrimed | VarKind::SigmaPrimed)
    }

    pub fn is_sigma(&self) -> bool {
        matches!(self.kind, VarKind::Sigma | VarKind::SigmaPrimed)
    }

    pub fn primed(self) -> VarId {
        let kind = match self.kind {
            VarKind::Xi | VarKind::XiPrimed => VarKind::XiPrimed,
            VarKind::Sigma | VarKind::SigmaPrimed => VarKind::SigmaPrimed,
        };
        VarId { kind, index: self.index }
    }

    /// Position in the exponent vector.
    pub fn slot(&self, d: Dims) -> Result<usize> {
        let bad = || Error::IndexOutOfRange(format!("variable {self} for n={} q={}", d.n, d.q));
        let v = d.unprimed_vars();
        match self.kind {
            VarKind::Xi | VarKind::XiPrimed => {
                if !(1..=d.n).contains(&self.index) {
                    return Err(bad());
                }
            }
            VarKind::Sigma | VarKind::SigmaPrimed => {
                if !(d.q + 1..=d.n).contains(&self.index) {
                    return Err(bad());
                }
            }
        }
        Ok(match self.kind {
            VarKind::Xi => self.index - 1,
            VarKind::Sigma => d.n + self.index - d.q - 1,
            VarKind::XiPrimed => v + self.index - 1,
            VarKind::SigmaPrimed => v + d.n + self.index - d.q - 1,
        })
    }

    pub fn from_slot(d: Dims, s: usize) -> VarId {
        let v = d.unprimed_vars();
        let (base, primed) = if s >= v { (s - v, true) } else { (s, false) };
        let u = if base < d.n { VarId::xi(base + 1) } else { VarId::sigma(base - d.n + d.q + 1) };
        if primed {
            u.primed()
        } else {
            u
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::Xi => write!(f, "xi{}", self.index),
            VarKind::Sigma => write!(f, "sigma{}", self.index),
            VarKind::XiPrimed => write!(f, "xi{}'", self.index),
            VarKind::SigmaPrimed => write!(f, "sigma{}'", self.index),
        }
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<VarId> {
        let bad = || Error::Parse(format!("bad variable `{s}`"));
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (kind, idx) = if let Some(i) = body.strip_prefix("sigma") {
            (VarKind::Sigma, i)
        } else if let Some(i) = body.strip_prefix("xi") {
            (VarKind::Xi, i)
        } else {
            return Err(bad());
        };
        let index: usize = idx.parse().map_err(|_| bad())?;
        let v = VarId { kind, index };
        Ok(if primed { v.primed() } else { v })
    }
}

/// Exponent vector over all (unprimed and primed) variables of a [`Dims`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one(d: Dims) -> Monomial {
        Monomial(vec![0; 2 * d.unprimed_vars()])
    }

    pub fn var(d: Dims, v: VarId) -> Result<Monomial> {
        let mut m = Monomial::one(d);
        m.0[v.slot(d)?] = 1;
        Ok(m)
    }

    pub fn from_exponents(d: Dims, exps: &[(VarId, u8)]) -> Result<Monomial> {
        let mut m = Monomial::one(d);
        for (v, e) in exps {
            let s = v.slot(d)?;
            m.0[s] = m.0[s].checked_add(*e).ok_or_else(|| Error::Parse("exponent overflow".into()))?;
        }
        Ok(m)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exponent(&self, d: Dims, v: VarId) -> u8 {
        v.slot(d).map(|s| self.0[s]).unwrap_or(0)
    }

    /// Nonzero exponents with their variables, in slot order.
    pub fn support(&self, d: Dims) -> Vec<(VarId, u8)> {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(s, e)| (VarId::from_slot(d, s), *e)).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn sigma_degree(&self, d: Dims) -> usize {
        let v = d.unprimed_vars();
        let p = d.p_leaf();
        self.0[d.n..v].iter().chain(&self.0[v + d.n..v + d.n + p]).map(|&e| e as usize).sum()
    }

    pub fn xi_degree(&self, d: Dims) -> usize {
        self.degree() - self.sigma_degree(d)
    }

    pub fn has_primed(&self, d: Dims) -> bool {
        self.0[d.unprimed_vars()..].iter().any(|&e| e > 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a.checked_add(*b).expect("exponent overflow")).collect())
    }

    /// `∂/∂v` at a slot, as `(exponent, lowered monomial)`.
    pub fn diff_slot(&self, s: usize) -> Option<(u8, Monomial)> {
        let e = self.0[s];
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.0[s] -= 1;
        Some((e, m))
    }

    pub fn to_primed(&self, d: Dims) -> Monomial {
        let v = d.unprimed_vars();
        let mut m = Monomial::one(d);
        for s in 0..v {
            m.0[v + s] = self.0[s];
        }
        m
    }

    pub fn identify_primed(&self, d: Dims) -> Monomial {
        let v = d.unprimed_vars();
        let mut m = Monomial::one(d);
        for s in 0..v {
            m.0[s] = self.0[s] + self.0[v + s];
        }
        m
    }

    pub fn collapse_sigma(&self, d: Dims) -> Monomial {
        let v = d.unprimed_vars();
        let p = d.p_leaf();
        let mut m = self.clone();
        for base in [0, v] {
            for j in 0..p {
                let e = m.0[base + d.n + j];
                m.0[base + d.n + j] = 0;
                m.0[base + d.q + j] += e;
            }
        }
        m
    }

    pub fn display(&self, d: Dims) -> String {
        let parts: Vec<String> = self
            .support(d)
            .into_iter()
            .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
