//! Getzler rescaling as exact `t`-exponent bookkeeping.

use std::collections::BTreeMap;

use super::PolySymbol;

/// A finite sum `Σ_e t^e p_e`; `t` is formal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rescaled {
    pub terms: BTreeMap<i64, PolySymbol>,
}

impl Rescaled {
    /// The `t⁰` part when no other power occurs.
    pub fn into_constant(self) -> Option<PolySymbol> {
        let mut it = self.terms.into_iter();
        match (it.next(), it.next()) {
            (None, _) => None,
            (Some((0, p)), None) => Some(p),
            _ => None,
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn push(&mut self, e: i64, p: PolySymbol) {
        if p.is_zero() {
            return;
        }
        let dims = p.dims();
        self.terms.entry(e).or_insert_with(|| PolySymbol::zero(dims)).add_assign(&p);
        if self.terms[&e].is_zero() {
            self.terms.remove(&e);
        }
    }
}

/// `p_t = t^k p(tξ, tσ)`: each term is tagged with `t^{grading}`.
pub fn rescale(p: &PolySymbol) -> Rescaled {
    let mut out = Rescaled { terms: BTreeMap::new() };
    for (g, c) in p.grade_components() {
        out.push(g as i64, c);
    }
    out
}

/// Inverse regrade: a term of grading `h` found at `t^e` moves to `t^{e−h}`.
pub fn unrescale(r: &Rescaled) -> Rescaled {
    let mut out = Rescaled { terms: BTreeMap::new() };
    for (e, p) in &r.terms {
        for (g, c) in p.grade_components() {
            out.push(e - g as i64, c);
        }
    }
    out
}
