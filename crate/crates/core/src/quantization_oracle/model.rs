//! The frozen-coefficient normal-coordinate model: `∇_X = X + Γ(X)` with
//! `Γ(X)(x) = Σ_l x_l K(e_l, X)` (plus an optional quadratic term).

use std::collections::HashMap;
use std::sync::Mutex;

use super::ops::{nabla_count, DiffOp, Generator, Letter};
use super::state::{ModelState, XMono};
use crate::error::{Error, Result};
use crate::exterior_clifford::{Multivector, Scalar};
use crate::geometry_model::ModelGeometry;
use crate::symbol_poly::{Dims, Monomial, PolySymbol, VarId};

/// The two normalization constants relating `Ω_ν` to its spin and form
/// avatars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Calibration {
    pub c_gamma: Scalar,
    pub c_omega: Scalar,
}

impl Calibration {
    pub fn new(c_gamma: Scalar, c_omega: Scalar) -> Calibration {
        Calibration { c_gamma, c_omega }
    }
}

/// `γ(A) = Σ_{k<ℓ} A_{kℓ} f_k·f_ℓ` for `A_{kℓ} = (Ω_ν)^k_{ℓ,i,j}`.
fn gamma_spin(g: &ModelGeometry, i: usize, j: usize, d_nu: Option<(&[Scalar], usize)>) -> Multivector {
    let (n, q, a) = (g.n(), g.q(), g.rank());
    let mut out = Multivector::zero(q, a);
    for k in 1..=q {
        for l in k + 1..=q {
            let v = match d_nu {
                None => g.omega_nu(k, l, i, j).clone(),
                Some((t, m)) => t[m * q * q * n * n + (((k - 1) * q + (l - 1)) * n + (i - 1)) * n + (j - 1)].clone(),
            };
            if !v.is_zero() {
                let fk = Multivector::generator(q, a, k);
                let fl = Multivector::generator(q, a, l);
                out.add_assign(&fk.clifford(&fl).scale(&v));
            }
        }
    }
    out
}

/// Oracle evaluator bound to one geometry and calibration.
pub struct Model<'g> {
    geom: &'g ModelGeometry,
    cal: Calibration,
    /// `K(e_l, e_i)`, index `l*n + i`.
    k1: Vec<Multivector>,
    /// `⅔ K'_m(e_l, e_i)`, index `(m*n + l)*n + i`.
    k2: Option<Vec<Multivector>>,
    word_cache: Mutex<HashMap<Monomial, PolySymbol>>,
    /// Point action of a word on a test section `x^α`.
    point_cache: Mutex<HashMap<(Vec<Letter>, XMono), PolySymbol>>,
}

impl<'g> Model<'g> {
    pub fn new(geom: &'g ModelGeometry, cal: Calibration) -> Result<Model<'g>> {
        geom.ensure_valid()?;
        let (n, q, a) = (geom.n(), geom.q(), geom.rank());
        let half = Scalar::ratio(1, 2);
        let mut k1 = Vec::with_capacity(n * n);
        for l in 1..=n {
            for i in 1..=n {
                let mut m = gamma_spin(geom, l, i, None).scale(&cal.c_gamma);
                m.add_assign(&Multivector::endo(q, geom.omega_e(l, i).scale(&half)));
                k1.push(m);
            }
        }
        let k2 = geom.k_taylor().map(|t| {
            let two_thirds = Scalar::ratio(2, 3);
            let mut v = Vec::with_capacity(n * n * n);
            for m in 0..n {
                for l in 1..=n {
                    for i in 1..=n {
                        let mut x = gamma_spin(geom, l, i, Some((&t.d_omega_nu, m))).scale(&cal.c_gamma);
                        let e = t.d_omega_e[(m * n + l - 1) * n + i - 1].scale(&half);
                        x.add_assign(&Multivector::endo(q, e));
                        v.push(x.scale(&two_thirds));
                    }
                }
            }
            debug_assert!(v.iter().all(|m| m.rank() == a));
            v
        });
        Ok(Model { geom, cal, k1, k2, word_cache: Mutex::new(HashMap::new()), point_cache: Mutex::new(HashMap::new()) })
    }

    pub fn geometry(&self) -> &ModelGeometry {
        self.geom
    }

    pub fn calibration(&self) -> &Calibration {
        &self.cal
    }

    pub fn dims(&self) -> Dims {
        self.geom.dims()
    }

    /// `K(e_l, X)`: the coefficient of `x_l` in `Γ(X)`.
    pub fn gamma_linear(&self, x: &Generator, l: usize) -> Multivector {
        let (n, q, a) = (self.geom.n(), self.geom.q(), self.geom.rank());
        let mut out = Multivector::zero(q, a);
        for (i, c) in x.direction.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&self.k1[(l - 1) * n + i].scale(c));
            }
        }
        out
    }

    /// `Γ(X)` as a list of `(x-monomial, multivector)` pairs.
    pub fn gamma_of(&self, x: &Generator) -> Vec<(XMono, Multivector)> {
        let n = self.geom.n();
        let mut out = Vec::new();
        for l in 1..=n {
            let c = self.gamma_linear(x, l);
            if !c.is_zero() {
                out.push((XMono::one(n).times_var(l - 1), c));
            }
        }
        if let Some(k2) = &self.k2 {
            let (q, a) = (self.geom.q(), self.geom.rank());
            for m in 0..n {
                for l in 0..n {
                    let mut c = Multivector::zero(q, a);
                    for (i, xi) in x.direction.iter().enumerate() {
                        if !xi.is_zero() {
                            c.add_assign(&k2[(m * n + l) * n + i].scale(xi));
                        }
                    }
                    if !c.is_zero() {
                        out.push((XMono::one(n).times_var(l).times_var(m), c));
                    }
                }
            }
        }
        out
    }

    /// `∇_X` on a state, dropping `x`-degrees above `trunc`.
    pub fn apply_nabla(&self, x: &Generator, s: &ModelState, trunc: usize) -> ModelState {
        let d = self.dims();
        let mut out = ModelState::zero(d);
        let lin: Vec<(VarId, Scalar)> = x
            .direction
            .iter()
            .enumerate()
            .filter(|(i, c)| !c.is_zero() && (!x.leafwise || *i >= d.q))
            .map(|(i, c)| {
                let v = if x.leafwise { VarId::sigma(i + 1) } else { VarId::xi(i + 1) };
                (v, &Scalar::i() * c)
            })
            .collect();
        let gamma = self.gamma_of(x);
        for (m, p) in s.terms() {
            for (i, c) in x.direction.iter().enumerate() {
                if !c.is_zero() && m.0[i] > 0 {
                    let mut dm = m.clone();
                    dm.0[i] -= 1;
                    if dm.degree() <= trunc {
                        out.add(dm, p.scale(&c.scale_int(m.0[i] as i64)));
                    }
                }
            }
            if m.degree() <= trunc {
                out.add(m.clone(), p.mul_linear(&lin));
            }
            for (gm, gc) in &gamma {
                if m.degree() + gm.degree() <= trunc {
                    let nm = XMono(m.0.iter().zip(&gm.0).map(|(a, b)| a + b).collect());
                    out.add(nm, p.mv_mul_left(gc));
                }
            }
        }
        out
    }

    /// Applies a word right to left. `extra` derivatives will still act
    /// afterwards; `None` disables truncation.
    pub fn apply_word(&self, word: &[Letter], s: &ModelState, extra: Option<usize>) -> ModelState {
        let mut cur = s.clone();
        let mut remaining = nabla_count(word);
        if let Some(e) = extra {
            cur.truncate(remaining + e);
        }
        for l in word.iter().rev() {
            match l {
                Letter::Nabla(x) => {
                    remaining -= 1;
                    let t = extra.map_or(usize::MAX, |e| remaining + e);
                    cur = self.apply_nabla(x, &cur, t);
                }
                Letter::Mul(c) => cur = cur.mv_mul_left(c),
            }
        }
        cur
    }

    pub fn apply_op(&self, op: &DiffOp, s: &ModelState, extra: Option<usize>) -> ModelState {
        let mut out = ModelState::zero(self.dims());
        for (c, w) in op.terms() {
            out.add_state(&self.apply_word(w, s, extra).mv_mul_left(c));
        }
        out
    }

    /// `ς(P)`: apply `P` to the plane wave and evaluate at `x = 0`.
    pub fn symbol_of(&self, op: &DiffOp) -> Result<PolySymbol> {
        self.check_op(op)?;
        Ok(self.apply_op(op, &ModelState::unit(self.dims()), Some(0)).eval0())
    }

    fn check_op(&self, op: &DiffOp) -> Result<()> {
        if op.dims() != self.dims() {
            return Err(Error::DimensionMismatch(format!("operator {:?} vs geometry {:?}", op.dims(), self.dims())));
        }
        op.check()
    }

    /// Full `x`-dependent image of the plane wave, without truncation.
    pub fn full_action(&self, op: &DiffOp) -> Result<ModelState> {
        self.check_op(op)?;
        Ok(self.apply_op(op, &ModelState::unit(self.dims()), None))
    }

    /// Equality of operators at the frozen point: both send every test
    /// section `x^α e^{i⟨x,(ξ,σ)⟩}` with `|α| ≤ order` to the same value at
    /// `x = 0`. Higher `|α|` vanish at the origin for both.
    pub fn ops_equivalent(&self, p: &DiffOp, q: &DiffOp) -> Result<bool> {
        self.check_op(p)?;
        self.check_op(q)?;
        let d = self.dims();
        let k = p.order().max(q.order());
        for alpha in x_monomials(d.n, k) {
            if self.point_action(p, &alpha) != self.point_action(q, &alpha) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn point_action(&self, op: &DiffOp, alpha: &XMono) -> PolySymbol {
        let d = self.dims();
        let mut out = PolySymbol::zero(d);
        for (c, w) in op.terms() {
            let key = (w.clone(), alpha.clone());
            let hit = self.point_cache.lock().unwrap().get(&key).cloned();
            let v = match hit {
                Some(v) => v,
                None => {
                    let mut s = ModelState::zero(d);
                    s.add(alpha.clone(), PolySymbol::one(d));
                    let v = self.apply_word(w, &s, Some(0)).eval0();
                    self.point_cache.lock().unwrap().insert(key, v.clone());
                    v
                }
            };
            out.add_assign(&v.mv_mul_left(c));
        }
        out
    }

    /// The ordered coordinate word whose leading symbol is `i^{|α|}(ξ,σ)^α`.
    pub fn basis_word(&self, m: &Monomial) -> Vec<Letter> {
        let d = self.dims();
        let mut w = Vec::with_capacity(m.degree());
        for (v, e) in m.support(d) {
            let g = if v.is_sigma() { Generator::coord_leafwise(d, v.index) } else { Generator::coord(d.n, v.index) };
            for _ in 0..e {
                w.push(Letter::Nabla(g.clone()));
            }
        }
        w
    }

    fn basis_symbol(&self, m: &Monomial) -> PolySymbol {
        if let Some(p) = self.word_cache.lock().unwrap().get(m) {
            return p.clone();
        }
        let w = self.basis_word(m);
        let p = self.apply_word(&w, &ModelState::unit(self.dims()), Some(0)).eval0();
        self.word_cache.lock().unwrap().insert(m.clone(), p.clone());
        p
    }

    /// `θ(p)`: the unique operator with `ς(θ(p)) = p`, by triangular
    /// elimination on polynomial degree.
    pub fn quantize(&self, p: &PolySymbol) -> Result<DiffOp> {
        let d = self.dims();
        if p.dims() != d {
            return Err(Error::DimensionMismatch(format!("symbol {:?} vs geometry {:?}", p.dims(), d)));
        }
        if p.is_primed() {
            return Err(Error::Precondition("quantize needs an unprimed symbol".into()));
        }
        let mut op = DiffOp::zero(d);
        let mut rem = p.clone();
        let mut last: Option<usize> = None;
        while !rem.is_zero() {
            let top = rem.max_poly_degree();
            if last.is_some_and(|l| top >= l) {
                return Err(Error::Internal(format!("elimination stalled at polynomial degree {top}")));
            }
            last = Some(top);
            let lead: Vec<(Monomial, Multivector)> =
                rem.terms().iter().filter(|(m, _)| m.degree() == top).map(|(m, c)| (m.clone(), c.clone())).collect();
            // c·(iξ)^α has coefficient c·i^{|α|}; divide it out.
            let unit = Scalar::i().pow(top as u32).inv().unwrap();
            for (m, c) in lead {
                let coeff = c.scale(&unit);
                rem = &rem - &self.basis_symbol(&m).mv_mul_left(&coeff);
                op.push(coeff, self.basis_word(&m));
            }
        }
        Ok(op)
    }
}

/// All exponent vectors in `n` variables of total degree `≤ k`.
pub(crate) fn x_monomials(n: usize, k: usize) -> Vec<XMono> {
    let mut out = vec![XMono::one(n)];
    let mut frontier = vec![XMono::one(n)];
    for _ in 0..k {
        let mut next = Vec::new();
        for m in &frontier {
            let last = m.0.iter().rposition(|&e| e > 0).unwrap_or(0);
            for l in last..n {
                next.push(m.times_var(l));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
