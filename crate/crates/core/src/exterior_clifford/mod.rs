//! Exterior and Clifford algebra over the conormal co-frame `f₁..f_q`, with
//! `End(E)` coefficients.

mod blade;
mod endo;
mod multivector;
mod scalar;

pub use blade::{Blade, MAX_Q};
pub use endo::Endo;
pub use multivector::Multivector;
pub use scalar::Scalar;

#[cfg(test)]
mod tests;

/// `Σ_{k₁<…<k_r} (i_{k₁}…i_{k_r}u) ∧ (i_{k₁}…i_{k_r}v)`, the `r`-fold
/// contraction term of the Clifford product (unsigned).
pub fn contraction_sum(u: &Multivector, v: &Multivector, r: usize) -> Multivector {
    let q = u.q();
    let mut out = Multivector::zero(q, u.rank());
    for mask in 0u32..(1 << q) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let ks: Vec<usize> = (1..=q).filter(|k| mask >> (k - 1) & 1 == 1).collect();
        let (mut cu, mut cv) = (u.clone(), v.clone());
        for &k in ks.iter().rev() {
            cu = cu.contract(k).unwrap();
            cv = cv.contract(k).unwrap();
        }
        out.add_assign(&cu.wedge(&cv));
    }
    out
}

/// Sign `(−1)^{r·deg u + r(r−1)/2}` of the `r`-fold contraction term when `u`
/// is homogeneous of degree `deg_u`.
pub fn contraction_sign(r: usize, deg_u: usize) -> i64 {
    if (r * deg_u + r * r.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
