//! Polynomial-in-`x` states carrying an implicit plane wave.

use std::collections::BTreeMap;

use crate::exterior_clifford::Multivector;
use crate::symbol_poly::{Dims, PolySymbol};

/// Exponents of `x₁..x_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XMono(pub Vec<u8>);

impl XMono {
    pub fn one(n: usize) -> XMono {
        XMono(vec![0; n])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn times_var(&self, l: usize) -> XMono {
        let mut m = self.clone();
        m.0[l] += 1;
        m
    }
}

/// `Σ_α x^α P_α(ξ,σ) · e^{i⟨x,(ξ,σ)⟩}` with the exponential left implicit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelState {
    dims: Dims,
    terms: BTreeMap<XMono, PolySymbol>,
}

impl ModelState {
    pub fn zero(dims: Dims) -> ModelState {
        ModelState { dims, terms: BTreeMap::new() }
    }

    /// The plane wave times the identity section.
    pub fn unit(dims: Dims) -> ModelState {
        let mut s = ModelState::zero(dims);
        s.add(XMono::one(dims.n), PolySymbol::one(dims));
        s
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn terms(&self) -> &BTreeMap<XMono, PolySymbol> {
        &self.terms
    }

    pub fn add(&mut self, m: XMono, p: PolySymbol) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                x.add_assign(&p);
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, p);
            }
        }
    }

    pub fn add_state(&mut self, o: &ModelState) {
        for (m, p) in &o.terms {
            self.add(m.clone(), p.clone());
        }
    }

    /// Left Clifford multiplication of every coefficient.
    pub fn mv_mul_left(&self, c: &Multivector) -> ModelState {
        let mut out = ModelState::zero(self.dims);
        for (m, p) in &self.terms {
            out.add(m.clone(), p.mv_mul_left(c));
        }
        out
    }

    /// Drops monomials of `x`-degree above `d`.
    pub fn truncate(&mut self, d: usize) {
        self.terms.retain(|m, _| m.degree() <= d);
    }

    pub fn max_x_degree(&self) -> usize {
        self.terms.keys().map(XMono::degree).max().unwrap_or(0)
    }

    /// Evaluation at `x = 0`: the symbol.
    pub fn eval0(&self) -> PolySymbol {
        self.terms.get(&XMono::one(self.dims.n)).cloned().unwrap_or_else(|| PolySymbol::zero(self.dims))
    }
}
