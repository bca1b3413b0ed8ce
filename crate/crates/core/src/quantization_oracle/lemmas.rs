//! Closed forms the oracle is checked against.

use super::{DiffOp, Generator, Letter, Model};
use crate::exterior_clifford::{Multivector, Scalar};
use crate::symbol_poly::PolySymbol;

pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

pub fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn wedge_pow(w: &Multivector, k: usize) -> Multivector {
    let mut out = Multivector::one(w.q(), w.rank());
    for _ in 0..k {
        out = out.wedge(w);
    }
    out
}

/// `4^{−k} k! C(m,k) C(ℓ,k)` with sign `(−1)^k` when `alternating`.
fn coefficient(m: usize, l: usize, k: usize, alternating: bool) -> Scalar {
    let num = factorial(k) * binom(m, k) * binom(l, k);
    let s = if alternating && k % 2 == 1 { -num } else { num };
    Scalar::ratio(s, 4i64.pow(k as u32))
}

/// `Σ_k 4^{−k} k! C(m,k)C(ℓ,k) ⟨iX,ξ⟩^{m−k} ⟨iY,σ⟩^{ℓ−k} Ω_ν(X,Y)^k`, the
/// top-grading part of `ς(∇_X^m ∇_Y^ℓ)` for `Y` leafwise.
pub fn mixed_power_top(model: &Model, x: &[Scalar], y: &[Scalar], m: usize, l: usize) -> PolySymbol {
    let d = model.dims();
    let g = model.geometry();
    let omega = g.omega_nu_form_unchecked(x, y, &model.calibration().c_omega);
    let px = PolySymbol::pairing_xi(d, x);
    let py = PolySymbol::pairing_sigma(d, y);
    let mut out = PolySymbol::zero(d);
    for k in 0..=m.min(l) {
        let poly = px.pow_clifford((m - k) as u32).clifford_mul(&py.pow_clifford((l - k) as u32));
        let t = poly.mv_mul_left(&wedge_pow(&omega, k)).scale(&coefficient(m, l, k, false));
        out.add_assign(&t);
    }
    out
}

/// `Σ_k (−4)^{−k} k! C(m,k)C(ℓ,k) ∇_X^{m−k} ∇_Y^{ℓ−k} Ω_ν(X,Y)^k`, with `Y`
/// tagged leafwise.
pub fn reordered_power_operator(model: &Model, x: &[Scalar], y: &[Scalar], m: usize, l: usize) -> DiffOp {
    let d = model.dims();
    let g = model.geometry();
    let omega = g.omega_nu_form_unchecked(x, y, &model.calibration().c_omega);
    let gx = Generator::global(x.to_vec());
    let gy = Generator { direction: y.to_vec(), leafwise: true };
    let mut op = DiffOp::zero(d);
    for k in 0..=m.min(l) {
        let mut word: Vec<Letter> = Vec::new();
        word.extend(std::iter::repeat_n(Letter::Nabla(gx.clone()), m - k));
        word.extend(std::iter::repeat_n(Letter::Nabla(gy.clone()), l - k));
        let w = wedge_pow(&omega, k);
        if k > 0 {
            word.push(Letter::Mul(w));
        }
        op.push(Multivector::scalar(d.q, d.a, coefficient(m, l, k, true)), word);
    }
    op
}
