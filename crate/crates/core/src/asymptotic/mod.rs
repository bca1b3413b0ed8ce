//! Formal asymptotic symbols `p(t) ∼ Σ t^k p_k` and their composition.

use std::collections::BTreeMap;

use crate::composition::compose_full;
use crate::dirac::{dirac_square_terms, dirac_terms, TaggedTerm};
use crate::error::{Error, Result};
use crate::quantization_oracle::Model;
use crate::symbol_poly::{rescale, unrescale, Dims, PolySymbol, Rescaled};

/// `Σ_{k≤N} t^k p_k` with `grading(p_k) ≤ base_grading − k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticSymbol {
    pub base_grading: usize,
    pub coeffs: Vec<PolySymbol>,
}

impl AsymptoticSymbol {
    /// Rejects coefficient lists that break the grading constraint.
    pub fn new(base_grading: usize, coeffs: Vec<PolySymbol>) -> Result<AsymptoticSymbol> {
        let s = AsymptoticSymbol { base_grading, coeffs };
        if let Some(k) = s.grading_violation() {
            return Err(Error::Precondition(format!("coefficient t^{k} exceeds grading {}", base_grading as i64 - k as i64)));
        }
        Ok(s)
    }

    /// A single-coefficient family `t⁰ p`.
    pub fn constant(p: PolySymbol) -> AsymptoticSymbol {
        let base_grading = p.grading().unwrap_or(0);
        AsymptoticSymbol { base_grading, coeffs: vec![p] }
    }

    /// First `k` with `grading(p_k) > base − k`.
    pub fn grading_violation(&self) -> Option<usize> {
        self.coeffs.iter().enumerate().find_map(|(k, p)| match p.grading() {
            Some(g) if g + k > self.base_grading => Some(k),
            _ => None,
        })
    }

    pub fn respects_grading(&self) -> bool {
        self.grading_violation().is_none()
    }

    /// `p₀`; zero for an empty list.
    pub fn leading_symbol(&self, dims: Dims) -> PolySymbol {
        self.coeffs.first().cloned().unwrap_or_else(|| PolySymbol::zero(dims))
    }

    pub fn coeff(&self, k: usize) -> Option<&PolySymbol> {
        self.coeffs.get(k)
    }

    /// `Σ_k p_k` (the family at `t = 1`).
    pub fn sum(&self, dims: Dims) -> PolySymbol {
        let mut out = PolySymbol::zero(dims);
        for c in &self.coeffs {
            out.add_assign(c);
        }
        out
    }
}

fn push(out: &mut Vec<PolySymbol>, dims: Dims, r: usize, p: &PolySymbol) {
    while out.len() <= r {
        out.push(PolySymbol::zero(dims));
    }
    out[r].add_assign(p);
}

/// `p ∘ q ∼ Σ_{n+k+k′=r} t^r a_n(p_k, q_{k′})`, kept for `r ≤ N`.
///
/// `a_n(p_k, q_{k′})` is the grading `(B_p−k)+(B_q−k′)−n` part of the full
/// composition. `N` defaults to `B_p + B_q`.
pub fn compose_asymptotic(model: &Model, p: &AsymptoticSymbol, q: &AsymptoticSymbol, n: Option<usize>) -> Result<AsymptoticSymbol> {
    let dims = model.dims();
    let base = p.base_grading + q.base_grading;
    let cap = n.unwrap_or(base);
    let mut out = Vec::new();
    for (k, pk) in p.coeffs.iter().enumerate() {
        for (k2, qk) in q.coeffs.iter().enumerate() {
            if k + k2 > cap || pk.is_zero() || qk.is_zero() {
                continue;
            }
            let full = compose_full(model, pk, qk)?;
            let top = base - k - k2;
            for (h, c) in full.grade_components() {
                if h > top {
                    return Err(Error::Internal(format!("composition exceeds grading {top}")));
                }
                let r = k + k2 + (top - h);
                if r <= cap {
                    push(&mut out, dims, r, &c);
                }
            }
        }
    }
    while out.last().is_some_and(PolySymbol::is_zero) {
        out.pop();
    }
    Ok(AsymptoticSymbol { base_grading: base, coeffs: out })
}

/// Composition through the rescaled families: rescale `p(t)` and `q(t)`,
/// compose at each `t`-power with the oracle, unrescale.
pub fn compose_rescaled(model: &Model, p: &AsymptoticSymbol, q: &AsymptoticSymbol, n: Option<usize>) -> Result<AsymptoticSymbol> {
    let dims = model.dims();
    let base = p.base_grading + q.base_grading;
    let cap = n.unwrap_or(base) as i64;
    let family = |a: &AsymptoticSymbol| {
        let mut m: BTreeMap<i64, PolySymbol> = BTreeMap::new();
        for (k, c) in a.coeffs.iter().enumerate() {
            for (e, part) in rescale(c).terms {
                m.entry(e + k as i64).or_insert_with(|| PolySymbol::zero(dims)).add_assign(&part);
            }
        }
        m
    };
    let (fp, fq) = (family(p), family(q));
    let mut composed = Rescaled { terms: BTreeMap::new() };
    for (ep, pp) in &fp {
        for (eq, qq) in &fq {
            let c = compose_full(model, pp, qq)?;
            composed.terms.entry(ep + eq).or_insert_with(|| PolySymbol::zero(dims)).add_assign(&c);
        }
    }
    let back = unrescale(&composed);
    let mut out = Vec::new();
    for (r, c) in back.terms {
        if r < 0 {
            return Err(Error::Internal(format!("negative t-power {r} after unrescaling")));
        }
        if r <= cap {
            push(&mut out, dims, r as usize, &c);
        }
    }
    while out.last().is_some_and(PolySymbol::is_zero) {
        out.pop();
    }
    Ok(AsymptoticSymbol { base_grading: base, coeffs: out })
}

/// Rescale, quantize and take the symbol at each `t`-power, unrescale; true
/// iff `p` comes back unchanged.
pub fn rescale_check(model: &Model, p: &PolySymbol) -> Result<bool> {
    let r = rescale(p);
    let mut round = Rescaled { terms: BTreeMap::new() };
    for (e, part) in &r.terms {
        let s = model.symbol_of(&model.quantize(part)?)?;
        round.terms.insert(*e, s);
    }
    let back = unrescale(&round);
    Ok(match back.into_constant() {
        Some(b) => &b == p,
        None => p.is_zero() && r.terms.is_empty(),
    })
}

/// One row of a `t`-power ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub term: &'static str,
    pub grading: usize,
    /// Power of `t` this part needs in the unrescaled family; negative
    /// means it is not an asymptotic symbol.
    pub slot: i64,
}

impl LedgerEntry {
    pub fn passes(&self) -> bool {
        self.slot >= 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ledger {
    pub operator: &'static str,
    pub entries: Vec<LedgerEntry>,
}

impl Ledger {
    /// `t^power · P` with `terms` the graded summands of `ς(P)`.
    fn of(operator: &'static str, power: usize, terms: &[TaggedTerm]) -> Ledger {
        let mut entries = Vec::new();
        for t in terms {
            for (g, _) in t.symbol.grade_components() {
                entries.push(LedgerEntry { term: t.name, grading: g, slot: power as i64 - g as i64 });
            }
        }
        Ledger { operator, entries }
    }

    pub fn passes(&self) -> bool {
        self.entries.iter().all(LedgerEntry::passes)
    }

    pub fn first_failure(&self) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| !e.passes())
    }
}

/// Ledgers of `tD` and `t²D²`.
pub fn td_vs_t2d2_report(model: &Model) -> Result<(Ledger, Ledger)> {
    let g = model.geometry();
    if !g.is_riemannian_bott() {
        return Err(Error::Precondition("geometry is not Riemannian".into()));
    }
    if !g.has_zero_theta() {
        return Err(Error::Precondition("theta_nu must vanish".into()));
    }
    Ok((Ledger::of("tD", 1, &dirac_terms(g)), Ledger::of("t^2D^2", 2, &dirac_square_terms(model))))
}

#[cfg(test)]
mod tests;
