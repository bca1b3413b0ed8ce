//! Polynomial symbols in `(ξ, σ)` (and primed copies) with multivector
//! coefficients.

mod monomial;
mod rescale;

pub use monomial::{Dims, Monomial, VarId, VarKind};
pub use rescale::{rescale, unrescale, Rescaled};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::exterior_clifford::{Endo, Multivector, Scalar};

/// A polynomial symbol `Σ c_α ⊗ (ξ,σ)^α` frozen at one point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolySymbol {
    dims: Dims,
    primed: bool,
    terms: BTreeMap<Monomial, Multivector>,
}

impl PolySymbol {
    pub fn zero(dims: Dims) -> Self {
        PolySymbol { dims, primed: false, terms: BTreeMap::new() }
    }

    pub fn zero_primed(dims: Dims) -> Self {
        PolySymbol { dims, primed: true, terms: BTreeMap::new() }
    }

    pub fn constant(dims: Dims, c: Multivector) -> Self {
        PolySymbol::from_term(dims, Monomial::one(dims), c)
    }

    pub fn one(dims: Dims) -> Self {
        PolySymbol::constant(dims, Multivector::one(dims.q, dims.a))
    }

    pub fn scalar(dims: Dims, s: Scalar) -> Self {
        PolySymbol::constant(dims, Multivector::scalar(dims.q, dims.a, s))
    }

    pub fn from_term(dims: Dims, m: Monomial, c: Multivector) -> Self {
        let mut p = PolySymbol { dims, primed: m.has_primed(dims), terms: BTreeMap::new() };
        p.add_term(m, c);
        p
    }

    /// The variable `v` with unit coefficient.
    pub fn var(dims: Dims, v: VarId) -> Result<Self> {
        let m = Monomial::var(dims, v)?;
        Ok(PolySymbol::from_term(dims, m, Multivector::one(dims.q, dims.a)))
    }

    /// `⟨iX, ξ⟩ = i Σ_j X_j ξ_j`.
    pub fn pairing_xi(dims: Dims, x: &[Scalar]) -> Self {
        assert_eq!(x.len(), dims.n, "direction must have n components");
        let mut p = PolySymbol::zero(dims);
        for (j, c) in x.iter().enumerate() {
            if !c.is_zero() {
                let m = Monomial::var(dims, VarId::xi(j + 1)).unwrap();
                p.add_term(m, Multivector::scalar(dims.q, dims.a, &Scalar::i() * c));
            }
        }
        p
    }

    /// `⟨iY, σ⟩ = i Σ_{j>q} Y_j σ_j`; components `j ≤ q` must vanish.
    pub fn pairing_sigma(dims: Dims, y: &[Scalar]) -> Self {
        assert_eq!(y.len(), dims.n, "direction must have n components");
        assert!(y[..dims.q].iter().all(Scalar::is_zero), "leafwise direction has conormal components");
        let mut p = PolySymbol::zero(dims);
        for (j, c) in y.iter().enumerate().skip(dims.q) {
            if !c.is_zero() {
                let m = Monomial::var(dims, VarId::sigma(j + 1)).unwrap();
                p.add_term(m, Multivector::scalar(dims.q, dims.a, &Scalar::i() * c));
            }
        }
        p
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Multivector> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Multivector> {
        self.terms.get(m)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_part(&self) -> Multivector {
        self.terms
            .get(&Monomial::one(self.dims))
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.dims.q, self.dims.a))
    }

    pub fn add_term(&mut self, m: Monomial, c: Multivector) {
        if c.is_zero() {
            return;
        }
        if m.has_primed(self.dims) {
            self.primed = true;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                x.add_assign(&c);
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, o: &PolySymbol) {
        self.check(o).expect("symbol dimension mismatch");
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &Scalar) -> PolySymbol {
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(s));
        }
        out
    }

    /// `c · p` with `c` multiplied on the left by the Clifford product.
    pub fn mv_mul_left(&self, c: &Multivector) -> PolySymbol {
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (m, x) in &self.terms {
            out.add_term(m.clone(), c.clifford(x));
        }
        out
    }

    pub fn endo_mul_left(&self, e: &Endo) -> PolySymbol {
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.endo_mul_left(e));
        }
        out
    }

    fn check(&self, o: &PolySymbol) -> Result<()> {
        if self.dims != o.dims {
            return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", self.dims, o.dims)));
        }
        Ok(())
    }

    fn product(&self, o: &PolySymbol, f: impl Fn(&Multivector, &Multivector) -> Multivector) -> PolySymbol {
        self.check(o).expect("symbol dimension mismatch");
        let mut out = PolySymbol::zero(self.dims);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), f(c1, c2));
            }
        }
        out
    }

    /// Pointwise product with Clifford-multiplied coefficients.
    pub fn clifford_mul(&self, o: &PolySymbol) -> PolySymbol {
        self.product(o, Multivector::clifford)
    }

    /// Pointwise product with wedge-multiplied coefficients.
    pub fn wedge_mul(&self, o: &PolySymbol) -> PolySymbol {
        self.product(o, Multivector::wedge)
    }

    pub fn pow_clifford(&self, e: u32) -> PolySymbol {
        let mut out = PolySymbol::one(self.dims);
        for _ in 0..e {
            out = out.clifford_mul(self);
        }
        out
    }

    /// Grading `blade degree + polynomial degree` of one term.
    pub fn term_grading(m: &Monomial, c: &Multivector) -> usize {
        m.degree() + c.degree().unwrap_or(0)
    }

    /// Maximum term grading; `None` for the zero symbol.
    pub fn grading(&self) -> Option<usize> {
        self.terms.iter().map(|(m, c)| c.terms().keys().map(|b| b.degree() + m.degree()).max().unwrap()).max()
    }

    /// Sum of the terms of grading exactly `g`.
    pub fn grade_component(&self, g: usize) -> PolySymbol {
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let d = m.degree();
            if d <= g && g - d <= self.dims.q {
                out.add_term(m.clone(), c.grade_project(g - d));
            }
        }
        out
    }

    /// Split into homogeneous grade components.
    pub fn grade_components(&self) -> BTreeMap<usize, PolySymbol> {
        let mut out: BTreeMap<usize, PolySymbol> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (b, e) in c.terms() {
                let g = m.degree() + b.degree();
                let entry = out.entry(g).or_insert_with(|| PolySymbol::zero(self.dims));
                entry.add_term(m.clone(), Multivector::from_term(self.dims.q, self.dims.a, *b, e.clone()));
            }
        }
        out
    }

    /// `p(ξ,σ) ∧ q(ξ′,σ′)`: renames `q`'s variables to primed copies and
    /// wedges the coefficients in the order `p` then `q`.
    pub fn tensor_doubled(p: &PolySymbol, q: &PolySymbol) -> Result<PolySymbol> {
        p.check(q)?;
        if p.primed || q.primed {
            return Err(Error::Precondition("tensor_doubled needs unprimed symbols".into()));
        }
        let mut out = PolySymbol::zero_primed(p.dims);
        for (m1, c1) in &p.terms {
            for (m2, c2) in &q.terms {
                out.add_term(m1.mul(&m2.to_primed(p.dims)), c1.wedge(c2));
            }
        }
        Ok(out)
    }

    /// Substitutes `ξ′ → ξ`, `σ′ → σ`.
    pub fn identify_primed(&self) -> PolySymbol {
        let mut out = PolySymbol::zero(self.dims);
        for (m, c) in &self.terms {
            out.add_term(m.identify_primed(self.dims), c.clone());
        }
        out
    }

    /// Formal partial derivative in `v`.
    pub fn diff(&self, v: VarId) -> Result<PolySymbol> {
        let slot = v.slot(self.dims)?;
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            if let Some((k, dm)) = m.diff_slot(slot) {
                out.add_term(dm, c.scale(&Scalar::int(k as i64)));
            }
        }
        Ok(out)
    }

    /// Substitutes `σ_j → ξ_j` for the leafwise indices.
    pub fn collapse_sigma(&self) -> PolySymbol {
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.collapse_sigma(self.dims), c.clone());
        }
        out
    }

    /// Product with a scalar linear form `Σ c_v v`.
    pub fn mul_linear(&self, lin: &[(VarId, Scalar)]) -> PolySymbol {
        let mut out = PolySymbol { dims: self.dims, primed: self.primed, terms: BTreeMap::new() };
        for (v, s) in lin {
            let vm = Monomial::var(self.dims, *v).expect("variable out of range");
            for (m, c) in &self.terms {
                out.add_term(m.mul(&vm), c.scale(s));
            }
        }
        out
    }

    /// Largest σ-degree (primed included) over all terms.
    pub fn max_sigma_degree(&self) -> usize {
        self.terms.keys().map(|m| m.sigma_degree(self.dims)).max().unwrap_or(0)
    }

    pub fn max_poly_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }
}

impl<'a> Add<&'a PolySymbol> for &'a PolySymbol {
    type Output = PolySymbol;
    fn add(self, o: &PolySymbol) -> PolySymbol {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
}

impl Neg for &PolySymbol {
    type Output = PolySymbol;
    fn neg(self) -> PolySymbol {
        self.scale(&Scalar::int(-1))
    }
}

impl<'a> Sub<&'a PolySymbol> for &'a PolySymbol {
    type Output = PolySymbol;
    fn sub(self, o: &PolySymbol) -> PolySymbol {
        self + &(-o)
    }
}

impl fmt::Debug for PolySymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("[{c:?}]{}", m.display(self.dims))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests;
