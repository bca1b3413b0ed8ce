//! Formal differential operators: sums of coefficient × word.

use crate::error::{Error, Result};
use crate::exterior_clifford::{Blade, Multivector, Scalar};
use crate::symbol_poly::Dims;

/// A constant-coefficient vector field `Σ c_i ∂/∂x_i`, tagged leafwise or
/// global. A leafwise generator differentiates into `σ`, a global one into `ξ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub direction: Vec<Scalar>,
    pub leafwise: bool,
}

impl Generator {
    pub fn global(direction: Vec<Scalar>) -> Generator {
        Generator { direction, leafwise: false }
    }

    /// Rejects directions with conormal components (indices `1..=q`).
    pub fn leafwise(q: usize, direction: Vec<Scalar>) -> Result<Generator> {
        if direction.iter().take(q).any(|c| !c.is_zero()) {
            return Err(Error::Precondition("leafwise generator with conormal components".into()));
        }
        Ok(Generator { direction, leafwise: true })
    }

    /// `∂/∂x_i`.
    pub fn coord(n: usize, i: usize) -> Generator {
        Generator::global(crate::geometry_model::basis_vector(n, i))
    }

    /// `∂/∂x_i` tagged leafwise; `i > q` required.
    pub fn coord_leafwise(d: Dims, i: usize) -> Generator {
        assert!(i > d.q && i <= d.n, "leafwise coordinate index must lie in q+1..=n");
        Generator { direction: crate::geometry_model::basis_vector(d.n, i), leafwise: true }
    }

    pub fn check(&self, d: Dims) -> Result<()> {
        if self.direction.len() != d.n {
            return Err(Error::DimensionMismatch(format!(
                "generator has {} components, n = {}",
                self.direction.len(),
                d.n
            )));
        }
        if self.leafwise && self.direction.iter().take(d.q).any(|c| !c.is_zero()) {
            return Err(Error::Precondition("leafwise generator with conormal components".into()));
        }
        Ok(())
    }
}

/// One letter of an operator word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// Covariant derivative `∇_X`.
    Nabla(Generator),
    /// Left Clifford multiplication by a constant multivector.
    Mul(Multivector),
}

/// `Σ coeff · L₁∘L₂∘…∘L_k`, letters applied right to left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffOp {
    dims: Dims,
    terms: Vec<(Multivector, Vec<Letter>)>,
}

impl DiffOp {
    pub fn zero(dims: Dims) -> DiffOp {
        DiffOp { dims, terms: Vec::new() }
    }

    pub fn identity(dims: Dims) -> DiffOp {
        DiffOp::term(dims, Multivector::one(dims.q, dims.a), Vec::new())
    }

    pub fn term(dims: Dims, coeff: Multivector, word: Vec<Letter>) -> DiffOp {
        let mut op = DiffOp::zero(dims);
        op.push(coeff, word);
        op
    }

    /// `∇_{X₁}…∇_{X_k}` with unit coefficient.
    pub fn nablas(dims: Dims, gens: Vec<Generator>) -> DiffOp {
        DiffOp::term(dims, Multivector::one(dims.q, dims.a), gens.into_iter().map(Letter::Nabla).collect())
    }

    /// Multiplication by a constant multivector.
    pub fn mul(dims: Dims, c: Multivector) -> DiffOp {
        DiffOp::term(dims, c, Vec::new())
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn terms(&self) -> &[(Multivector, Vec<Letter>)] {
        &self.terms
    }

    pub fn push(&mut self, coeff: Multivector, word: Vec<Letter>) {
        if !coeff.is_zero() {
            self.terms.push((coeff, word));
        }
    }

    pub fn check(&self) -> Result<()> {
        for (c, w) in &self.terms {
            if c.q() != self.dims.q || c.rank() != self.dims.a {
                return Err(Error::DimensionMismatch("operator coefficient".into()));
            }
            for l in w {
                match l {
                    Letter::Nabla(g) => g.check(self.dims)?,
                    Letter::Mul(m) if m.q() != self.dims.q || m.rank() != self.dims.a => {
                        return Err(Error::DimensionMismatch("operator multiplication letter".into()))
                    }
                    Letter::Mul(_) => {}
                }
            }
        }
        Ok(())
    }

    /// Maximum number of derivative letters in a word.
    pub fn order(&self) -> usize {
        self.terms.iter().map(|(_, w)| nabla_count(w)).max().unwrap_or(0)
    }

    pub fn add(&self, o: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        out.terms.extend(o.terms.iter().cloned());
        out
    }

    pub fn scale(&self, s: &Scalar) -> DiffOp {
        let mut out = DiffOp::zero(self.dims);
        for (c, w) in &self.terms {
            out.push(c.scale(s), w.clone());
        }
        out
    }

    /// `self ∘ o` by distributing and concatenating words. The coefficient of
    /// `o` stays in place as a multiplication letter unless it can be merged
    /// with an adjacent constant.
    pub fn compose_ops(&self, o: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero(self.dims);
        for (cp, wp) in &self.terms {
            for (cq, wq) in &o.terms {
                let mut word = wp.clone();
                let mut coeff = cp.clone();
                if word.is_empty() {
                    coeff = coeff.clifford(cq);
                } else if let Some(Letter::Mul(m)) = word.last_mut() {
                    *m = m.clifford(cq);
                } else if !is_unit(cq) {
                    word.push(Letter::Mul(cq.clone()));
                }
                word.extend(wq.iter().cloned());
                out.push(coeff, word);
            }
        }
        out
    }
}

pub(crate) fn nabla_count(w: &[Letter]) -> usize {
    w.iter().filter(|l| matches!(l, Letter::Nabla(_))).count()
}

fn is_unit(c: &Multivector) -> bool {
    c.terms().len() == 1
        && c.coeff(Blade::SCALAR).is_some_and(|e| e == &crate::exterior_clifford::Endo::identity(c.rank()))
}
