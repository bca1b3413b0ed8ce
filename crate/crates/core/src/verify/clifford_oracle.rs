//! Clifford product straight from `c(f)ω = f∧ω − i_f ω`, on raw masks.

use std::collections::BTreeMap;

use crate::exterior_clifford::{Blade, Endo, Multivector, Scalar};

fn below(mask: u16, j: usize) -> u32 {
    (mask & ((1u16 << j) - 1)).count_ones()
}

/// Left multiplication by the generator `f_{j+1}` (0-based `j`).
fn gen_left(j: usize, w: &BTreeMap<u16, Scalar>) -> BTreeMap<u16, Scalar> {
    let mut out: BTreeMap<u16, Scalar> = BTreeMap::new();
    for (&m, c) in w {
        let sign = if below(m, j).is_multiple_of(2) { 1 } else { -1 };
        let (target, s) = if m >> j & 1 == 0 { (m | 1 << j, sign) } else { (m & !(1 << j), -sign) };
        let e = out.entry(target).or_insert_with(Scalar::zero);
        *e += &c.scale_int(s);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `u·v`, expanding each blade of `u` as an ordered product of generators.
pub(super) fn product(u: &Multivector, v: &Multivector) -> Multivector {
    let (q, a) = (u.q(), u.rank());
    let mut out = Multivector::zero(q, a);
    for (bu, eu) in u.terms() {
        for (bv, ev) in v.terms() {
            let mut w = BTreeMap::from([(bv.0, Scalar::one())]);
            for j in (0..q).rev().filter(|j| bu.0 >> j & 1 == 1) {
                w = gen_left(j, &w);
            }
            let e: Endo = eu.mul(ev);
            for (m, c) in w {
                out.add_term(Blade(m), e.scale(&c));
            }
        }
    }
    out
}
