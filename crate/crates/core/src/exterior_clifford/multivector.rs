//! Sparse elements of `Λν* ⊗ End(E)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{Blade, Endo, Scalar, MAX_Q};
use crate::error::{Error, Result};

/// A finite sum of blades with matrix coefficients. Zero coefficients are
/// never stored, so derived equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    q: usize,
    a: usize,
    terms: BTreeMap<Blade, Endo>,
}

impl Multivector {
    pub fn zero(q: usize, a: usize) -> Self {
        assert!(q <= MAX_Q, "q = {q} exceeds {MAX_Q}");
        assert!(a >= 1, "rank must be positive");
        Multivector { q, a, terms: BTreeMap::new() }
    }

    pub fn scalar(q: usize, a: usize, s: Scalar) -> Self {
        Multivector::from_term(q, a, Blade::SCALAR, Endo::scalar(a, s))
    }

    pub fn one(q: usize, a: usize) -> Self {
        Multivector::scalar(q, a, Scalar::one())
    }

    pub fn endo(q: usize, e: Endo) -> Self {
        let a = e.rank();
        Multivector::from_term(q, a, Blade::SCALAR, e)
    }

    pub fn from_term(q: usize, a: usize, b: Blade, e: Endo) -> Self {
        let mut m = Multivector::zero(q, a);
        m.add_term(b, e);
        m
    }

    /// The co-vector `f_k`.
    pub fn generator(q: usize, a: usize, k: usize) -> Self {
        assert!((1..=q).contains(&k), "frame index {k} out of 1..={q}");
        Multivector::from_term(q, a, Blade::generator(k), Endo::identity(a))
    }

    /// `f_{i₁}∧…∧f_{i_r}` in the order listed.
    pub fn blade(q: usize, a: usize, idx: &[usize]) -> Self {
        assert!(idx.iter().all(|k| (1..=q).contains(k)), "frame index out of range");
        match Blade::from_indices(idx) {
            Some((s, b)) => Multivector::from_term(q, a, b, Endo::scalar(a, Scalar::int(s as i64))),
            None => Multivector::zero(q, a),
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.a
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Endo> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> Option<&Endo> {
        self.terms.get(&b)
    }

    /// Highest blade degree present.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|b| b.degree()).max()
    }

    /// Adds `e` to the coefficient of `b`, keeping the sparse form canonical.
    pub fn add_term(&mut self, b: Blade, e: Endo) {
        debug_assert_eq!(e.rank(), self.a);
        assert!((b.0 as u32) < (1u32 << self.q), "blade outside frame");
        if e.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(c) => {
                c.add_assign(&e);
                if c.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, e);
            }
        }
    }

    fn add_signed(&mut self, s: i8, b: Blade, e: Endo) {
        self.add_term(b, if s < 0 { e.neg() } else { e });
    }

    pub fn add_assign(&mut self, o: &Multivector) {
        self.check(o).expect("multivector dimension mismatch");
        for (b, e) in &o.terms {
            self.add_term(*b, e.clone());
        }
    }

    pub fn scale(&self, s: &Scalar) -> Multivector {
        if s.is_zero() {
            return Multivector::zero(self.q, self.a);
        }
        let terms = self.terms.iter().map(|(b, e)| (*b, e.scale(s))).collect();
        Multivector { q: self.q, a: self.a, terms }
    }

    /// Multiplies every coefficient on the left by `e`.
    pub fn endo_mul_left(&self, e: &Endo) -> Multivector {
        let mut out = Multivector::zero(self.q, self.a);
        for (b, c) in &self.terms {
            out.add_term(*b, e.mul(c));
        }
        out
    }

    fn check(&self, o: &Multivector) -> Result<()> {
        if self.q != o.q || self.a != o.a {
            return Err(Error::DimensionMismatch(format!(
                "(q, a) = ({}, {}) vs ({}, {})",
                self.q, self.a, o.q, o.a
            )));
        }
        Ok(())
    }

    pub fn checked_wedge(&self, o: &Multivector) -> Result<Multivector> {
        self.check(o)?;
        let mut out = Multivector::zero(self.q, self.a);
        for (b1, e1) in &self.terms {
            for (b2, e2) in &o.terms {
                if let Some((s, b)) = b1.wedge(*b2) {
                    out.add_signed(s, b, e1.mul(e2));
                }
            }
        }
        Ok(out)
    }

    /// Exterior product. Panics on dimension mismatch; see [`Self::checked_wedge`].
    pub fn wedge(&self, o: &Multivector) -> Multivector {
        self.checked_wedge(o).unwrap()
    }

    pub fn checked_clifford(&self, o: &Multivector) -> Result<Multivector> {
        self.check(o)?;
        let mut out = Multivector::zero(self.q, self.a);
        for (b1, e1) in &self.terms {
            for (b2, e2) in &o.terms {
                let (s, b) = b1.clifford(*b2);
                out.add_signed(s, b, e1.mul(e2));
            }
        }
        Ok(out)
    }

    /// Clifford product with `f·f = −|f|²`. Panics on dimension mismatch.
    pub fn clifford(&self, o: &Multivector) -> Multivector {
        self.checked_clifford(o).unwrap()
    }

    /// Interior product `i_{e_k}`, an anti-derivation of degree −1.
    pub fn contract(&self, k: usize) -> Result<Multivector> {
        if !(1..=self.q).contains(&k) {
            return Err(Error::IndexOutOfRange(format!("contraction index {k} not in 1..={}", self.q)));
        }
        let mut out = Multivector::zero(self.q, self.a);
        for (b, e) in &self.terms {
            if let Some((s, c)) = b.contract(k) {
                out.add_signed(s, c, e.clone());
            }
        }
        Ok(out)
    }

    pub fn grade_project(&self, k: usize) -> Multivector {
        let terms = self.terms.iter().filter(|(b, _)| b.degree() == k);
        Multivector { q: self.q, a: self.a, terms: terms.map(|(b, e)| (*b, e.clone())).collect() }
    }

    /// Reversal on blades composed with conjugate transpose on coefficients.
    pub fn mv_adjoint(&self) -> Multivector {
        let mut out = Multivector::zero(self.q, self.a);
        for (b, e) in &self.terms {
            out.add_signed(b.reversal_sign(), *b, e.conj_transpose());
        }
        out
    }

    /// Coefficient of the empty blade as an `a×a` matrix (zero if absent).
    pub fn scalar_part(&self) -> Endo {
        self.terms.get(&Blade::SCALAR).cloned().unwrap_or_else(|| Endo::zero(self.a))
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, o: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        let terms = self.terms.iter().map(|(b, e)| (*b, e.neg())).collect();
        Multivector { q: self.q, a: self.a, terms }
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, o: &Multivector) -> Multivector {
        self + &(-o)
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, e)| if self.a == 1 { format!("({:?}){b:?}", e.get(0, 0)) } else { format!("{e:?}{b:?}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
