//! Composition calculus: curvature bidifferential operators, the leading
//! symbol `a₀(p,q)`, and the full expansion `p∘q = Σ_k a_k(p,q)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exterior_clifford::{Multivector, Scalar};
use crate::quantization_oracle::{Model, ModelState};
use crate::symbol_poly::{Dims, PolySymbol, VarId};

/// Which pair of variable blocks a bidifferential operator differentiates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BidiffSelector {
    /// `(ξ, ξ′)`
    XiXiP,
    /// `(ξ, σ′)`
    XiSigmaP,
    /// `(σ, ξ′)`
    SigmaXiP,
    /// `(σ, σ′)`
    SigmaSigmaP,
    /// `(ξ, σ)`, both on the unprimed factor.
    XiSigma,
    /// `(ξ′, σ′)`, both on the primed factor.
    XiPSigmaP,
}

/// The four selectors summed in the curvature operator `Ω_ν(∂/∂(ξ,σ), ∂/∂(ξ′,σ′))`.
pub const OMEGA_SELECTORS: [BidiffSelector; 4] =
    [BidiffSelector::XiXiP, BidiffSelector::XiSigmaP, BidiffSelector::SigmaXiP, BidiffSelector::SigmaSigmaP];

impl BidiffSelector {
    pub fn is_cross(self) -> bool {
        !matches!(self, BidiffSelector::XiSigma | BidiffSelector::XiPSigmaP)
    }

    /// Variables `(v_i, w_j)` differentiated by this selector.
    fn variables(self, d: Dims) -> (Vec<VarId>, Vec<VarId>) {
        let xi: Vec<VarId> = (1..=d.n).map(VarId::xi).collect();
        let sigma: Vec<VarId> = (d.q + 1..=d.n).map(VarId::sigma).collect();
        let p = |v: &Vec<VarId>| v.iter().map(|x| x.primed()).collect::<Vec<_>>();
        match self {
            BidiffSelector::XiXiP => (xi.clone(), p(&xi)),
            BidiffSelector::XiSigmaP => (xi, p(&sigma)),
            BidiffSelector::SigmaXiP => (sigma, p(&xi)),
            BidiffSelector::SigmaSigmaP => (sigma.clone(), p(&sigma)),
            BidiffSelector::XiSigma => (xi, sigma),
            BidiffSelector::XiPSigmaP => (p(&xi), p(&sigma)),
        }
    }
}

impl fmt::Display for BidiffSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BidiffSelector::XiXiP => "(xi,xi')",
            BidiffSelector::XiSigmaP => "(xi,sigma')",
            BidiffSelector::SigmaXiP => "(sigma,xi')",
            BidiffSelector::SigmaSigmaP => "(sigma,sigma')",
            BidiffSelector::XiSigma => "(xi,sigma)",
            BidiffSelector::XiPSigmaP => "(xi',sigma')",
        };
        write!(f, "{s}")
    }
}

/// Two-form avatars `W_{ij} = Ω_ν(e_i, e_j)` used by the bidifferential
/// operators, row-major over `(i, j)`.
#[derive(Clone, Debug)]
pub struct Avatars {
    dims: Dims,
    table: Vec<Multivector>,
}

impl Avatars {
    /// Avatars normalized by the model's `c_Ω`.
    pub fn of_model(model: &Model) -> Result<Avatars> {
        Avatars::with_constant(model, &model.calibration().c_omega)
    }

    pub fn with_constant(model: &Model, c_omega: &Scalar) -> Result<Avatars> {
        let g = model.geometry();
        Ok(Avatars { dims: g.dims(), table: g.omega_nu_table(c_omega)? })
    }

    /// The unnormalized sum `Σ_{k,ℓ} (Ω_ν)^k_{ℓ,i,j} f_k∧f_ℓ` over all ordered
    /// frame pairs.
    pub fn literal(model: &Model) -> Result<Avatars> {
        let g = model.geometry();
        g.ensure_valid()?;
        let (n, q, a) = (g.n(), g.q(), g.rank());
        let mut table = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let mut w = Multivector::zero(q, a);
                for k in 1..=q {
                    for l in 1..=q {
                        let v = g.omega_nu(k, l, i, j);
                        if k != l && !v.is_zero() {
                            w.add_assign(&Multivector::blade(q, a, &[k, l]).scale(v));
                        }
                    }
                }
                table.push(w);
            }
        }
        Ok(Avatars { dims: g.dims(), table })
    }

    fn get(&self, i: usize, j: usize) -> &Multivector {
        &self.table[(i - 1) * self.dims.n + (j - 1)]
    }

    /// Keeps only entries with both indices `≤ q`.
    fn conormal_block(&self) -> Avatars {
        let (n, q) = (self.dims.n, self.dims.q);
        let mut t = self.clone();
        for i in 1..=n {
            for j in 1..=n {
                if i > q || j > q {
                    t.table[(i - 1) * n + (j - 1)] = Multivector::zero(q, self.dims.a);
                }
            }
        }
        t
    }
}

/// `Σ_{i,j} W_{ij} ∧ ∂²pq/∂v_i∂w_j` for the selector's variable pair. `W_{ij}`
/// has even degree, so it is wedged on the left without sign changes.
pub fn omega_bidiff_with(av: &Avatars, s: BidiffSelector, pq: &PolySymbol) -> Result<PolySymbol> {
    let d = pq.dims();
    if d != av.dims {
        return Err(Error::DimensionMismatch(format!("{d:?} vs {:?}", av.dims)));
    }
    if s.is_cross() && !pq.is_primed() && !pq.is_zero() {
        return Err(Error::Precondition(format!("selector {s} needs a doubled symbol")));
    }
    let (vs, ws) = s.variables(d);
    let mut out = PolySymbol::zero_primed(d);
    for v in &vs {
        let dv = pq.diff(*v)?;
        if dv.is_zero() {
            continue;
        }
        for w in &ws {
            let w_ij = av.get(v.index, w.index);
            if w_ij.is_zero() {
                continue;
            }
            let dvw = dv.diff(*w)?;
            if dvw.is_zero() {
                continue;
            }
            for (m, c) in dvw.terms() {
                out.add_term(m.clone(), w_ij.wedge(c));
            }
        }
    }
    Ok(out)
}

/// One bidifferential operator with the calibrated avatars.
pub fn omega_bidiff(model: &Model, s: BidiffSelector, pq: &PolySymbol) -> Result<PolySymbol> {
    omega_bidiff_with(&Avatars::of_model(model)?, s, pq)
}

/// `Σ_r c^r/r! (Σ selectors)^r pq`; the series stops because each
/// application raises blade degree by two.
pub fn exp_bidiff_with(av: &Avatars, c: &Scalar, sel: &[BidiffSelector], pq: &PolySymbol) -> Result<PolySymbol> {
    let q = pq.dims().q;
    let mut out = pq.clone();
    let mut term = pq.clone();
    let mut r = 0usize;
    loop {
        if c.is_zero() {
            break;
        }
        let mut next = PolySymbol::zero_primed(pq.dims());
        for s in sel {
            next.add_assign(&omega_bidiff_with(av, *s, &term)?);
        }
        if next.is_zero() {
            break;
        }
        r += 1;
        if 2 * r > q {
            return Err(Error::Internal(format!("bidifferential series did not terminate by r = {r}")));
        }
        term = next.scale(&(c / &Scalar::int(r as i64)));
        out.add_assign(&term);
    }
    Ok(out)
}

pub fn exp_bidiff(model: &Model, c: &Scalar, sel: &[BidiffSelector], pq: &PolySymbol) -> Result<PolySymbol> {
    exp_bidiff_with(&Avatars::of_model(model)?, c, sel, pq)
}

fn check_pair(model: &Model, p: &PolySymbol, q: &PolySymbol) -> Result<()> {
    let d = model.dims();
    for s in [p, q] {
        if s.dims() != d {
            return Err(Error::DimensionMismatch(format!("symbol {:?} vs geometry {d:?}", s.dims())));
        }
        if s.is_primed() {
            return Err(Error::Precondition("composition needs unprimed symbols".into()));
        }
    }
    Ok(())
}

pub fn a0_with(av: &Avatars, p: &PolySymbol, q: &PolySymbol, sel: &[BidiffSelector]) -> Result<PolySymbol> {
    let pq = PolySymbol::tensor_doubled(p, q)?;
    Ok(exp_bidiff_with(av, &Scalar::ratio(-1, 4), sel, &pq)?.identify_primed())
}

/// `a₀(p,q) = e^{−¼Ω_ν(∂/∂(ξ,σ),∂/∂(ξ′,σ′))} p(ξ,σ) ∧ q(ξ′,σ′)|_{(ξ′,σ′)=(ξ,σ)}`.
pub fn a0(model: &Model, p: &PolySymbol, q: &PolySymbol) -> Result<PolySymbol> {
    check_pair(model, p, q)?;
    a0_with(&Avatars::of_model(model)?, p, q, &OMEGA_SELECTORS)
}

/// The single-selector contribution `Ω_ν^{(s)}(p ∧ q′)|` after identification.
pub fn selector_term(model: &Model, s: BidiffSelector, p: &PolySymbol, q: &PolySymbol) -> Result<PolySymbol> {
    check_pair(model, p, q)?;
    let pq = PolySymbol::tensor_doubled(p, q)?;
    Ok(omega_bidiff(model, s, &pq)?.identify_primed())
}

/// The η-block formula, valid for Riemannian foliations.
pub fn a0_riemannian(model: &Model, p: &PolySymbol, q: &PolySymbol) -> Result<PolySymbol> {
    check_pair(model, p, q)?;
    if !model.geometry().is_riemannian_bott() {
        return Err(Error::Precondition("a0_riemannian needs a Riemannian (Bott) geometry".into()));
    }
    let av = Avatars::of_model(model)?.conormal_block();
    a0_with(&av, p, q, &[BidiffSelector::XiXiP])
}

/// `p∘q = ς(θp ∘ θq)`, evaluated by passing the state produced by `θq` to `θp`.
pub fn compose_full(model: &Model, p: &PolySymbol, q: &PolySymbol) -> Result<PolySymbol> {
    check_pair(model, p, q)?;
    let tp = model.quantize(p)?;
    let tq = model.quantize(q)?;
    let s = model.apply_op(&tq, &ModelState::unit(model.dims()), Some(tp.order()));
    Ok(model.apply_op(&tp, &s, Some(0)).eval0())
}

/// Same as [`compose_full`] through explicit operator concatenation.
pub fn compose_full_via_ops(model: &Model, p: &PolySymbol, q: &PolySymbol) -> Result<PolySymbol> {
    check_pair(model, p, q)?;
    let op = model.quantize(p)?.compose_ops(&model.quantize(q)?);
    model.symbol_of(&op)
}

fn homogeneous_grading(p: &PolySymbol) -> Result<Option<usize>> {
    let comps = p.grade_components();
    match comps.len() {
        0 => Ok(None),
        1 => Ok(comps.keys().next().copied()),
        _ => Err(Error::Precondition("a_k needs homogeneous symbols".into())),
    }
}

/// Grade component `g_p + g_q − k` of `p∘q`.
pub fn ak(model: &Model, p: &PolySymbol, q: &PolySymbol, k: usize) -> Result<PolySymbol> {
    let (gp, gq) = (homogeneous_grading(p)?, homogeneous_grading(q)?);
    let (Some(gp), Some(gq)) = (gp, gq) else {
        return Ok(PolySymbol::zero(model.dims()));
    };
    let full = compose_full(model, p, q)?;
    Ok(ak_from_full(&full, gp + gq, k))
}

/// Splits an already computed composition at nominal top grading `top`.
pub fn ak_from_full(full: &PolySymbol, top: usize, k: usize) -> PolySymbol {
    if k > top {
        return PolySymbol::zero(full.dims());
    }
    full.grade_component(top - k)
}

#[cfg(test)]
mod tests;
