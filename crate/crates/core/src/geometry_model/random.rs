//! Seeded random geometries for property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{KTaylor, ModelGeometry};
use crate::error::{Error, Result};
use crate::exterior_clifford::{Endo, Scalar};

/// Which tensors to populate and which constraints to impose.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RandomFlags {
    /// `Ω_ν` vanishes whenever a direction is leafwise.
    pub riemannian: bool,
    /// `Ω_ν(e_i, e_j) = 0` when both directions are leafwise.
    pub flat_leafwise: bool,
    /// `Ω_ν` is an algebraic curvature tensor on the conormal block
    /// (pair symmetric, first Bianchi identity). Implies `riemannian`.
    pub bianchi: bool,
    pub mu: bool,
    pub theta: bool,
    pub mu_deriv: bool,
    pub k_taylor: bool,
}

pub(crate) fn small_int(rng: &mut ChaCha8Rng, r: i64) -> Scalar {
    Scalar::int(rng.gen_range(-r..=r))
}

fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    if rng.gen_bool(0.3) {
        return Scalar::zero();
    }
    let re = Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    if rng.gen_bool(0.25) {
        &re + &(&Scalar::i() * &small_int(rng, 1))
    } else {
        re
    }
}

fn small_endo(rng: &mut ChaCha8Rng, a: usize) -> Endo {
    Endo::from_entries(a, (0..a * a).map(|_| small_scalar(rng)).collect())
}

/// `(h ⊙ k)_{abcd} = h_ac k_bd + h_bd k_ac − h_ad k_bc − h_bc k_ad`.
fn kulkarni_nomizu(h: &[Vec<Scalar>], k: &[Vec<Scalar>], a: usize, b: usize, c: usize, d: usize) -> Scalar {
    let t1 = &h[a][c] * &k[b][d];
    let t2 = &h[b][d] * &k[a][c];
    let t3 = &h[a][d] * &k[b][c];
    let t4 = &h[b][c] * &k[a][d];
    &(&t1 + &t2) - &(&t3 + &t4)
}

fn random_symmetric(rng: &mut ChaCha8Rng, q: usize) -> Vec<Vec<Scalar>> {
    let mut h = vec![vec![Scalar::zero(); q]; q];
    for i in 0..q {
        for j in i..q {
            let v = small_int(rng, 2);
            h[i][j] = v.clone();
            h[j][i] = v;
        }
    }
    h
}

/// A deterministic random geometry; valid by construction.
pub fn random_geometry(seed: u64, n: usize, p_leaf: usize, a: usize, flags: RandomFlags) -> Result<ModelGeometry> {
    let mut g = ModelGeometry::flat(n, p_leaf, a)?;
    let q = g.q();
    if q % 2 != 0 || q == 0 {
        return Err(Error::Precondition(format!("random_geometry needs positive even q, got {q}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if flags.bianchi {
        let (h1, k1) = (random_symmetric(&mut rng, q), random_symmetric(&mut rng, q));
        let (h2, k2) = (random_symmetric(&mut rng, q), random_symmetric(&mut rng, q));
        for k in 0..q {
            for l in 0..q {
                for i in 0..q {
                    for j in 0..q {
                        let v = &kulkarni_nomizu(&h1, &k1, k, l, i, j) + &kulkarni_nomizu(&h2, &k2, k, l, i, j);
                        g.set_omega_nu_raw(k + 1, l + 1, i + 1, j + 1, v);
                    }
                }
            }
        }
    } else {
        for k in 1..=q {
            for l in k + 1..=q {
                for i in 1..=n {
                    for j in i + 1..=n {
                        let leaf_i = i > q;
                        let leaf_j = j > q;
                        if flags.riemannian && (leaf_i || leaf_j) {
                            continue;
                        }
                        if flags.flat_leafwise && leaf_i && leaf_j {
                            continue;
                        }
                        g.set_omega_nu(k, l, i, j, small_int(&mut rng, 2));
                    }
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            g.set_omega_e(i, j, small_endo(&mut rng, a));
        }
    }
    if flags.mu {
        for k in 1..=q {
            g.set_mu(k, small_int(&mut rng, 2));
        }
    }
    if flags.theta {
        for m in 1..=n {
            for j in 1..=q {
                for k in j + 1..=q {
                    g.set_theta(m, j, k, small_int(&mut rng, 2));
                }
            }
        }
    }
    if flags.mu_deriv {
        for i in 1..=q {
            for k in 1..=q {
                g.set_mu_deriv(i, k, small_int(&mut rng, 2));
            }
        }
    }
    if flags.k_taylor {
        let mut d_nu = vec![Scalar::zero(); n * q * q * n * n];
        let mut d_e = vec![Endo::zero(a); n * n * n];
        for m in 0..n {
            let base = m * q * q * n * n;
            for k in 0..q {
                for l in k + 1..q {
                    for i in 0..n {
                        for j in i + 1..n {
                            let v = small_int(&mut rng, 1);
                            let w = -&v;
                            d_nu[base + ((k * q + l) * n + i) * n + j] = v.clone();
                            d_nu[base + ((l * q + k) * n + j) * n + i] = v;
                            d_nu[base + ((l * q + k) * n + i) * n + j] = w.clone();
                            d_nu[base + ((k * q + l) * n + j) * n + i] = w;
                        }
                    }
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    let e = small_endo(&mut rng, a);
                    d_e[(m * n + j) * n + i] = e.neg();
                    d_e[(m * n + i) * n + j] = e;
                }
            }
        }
        g.set_k_taylor(Some(KTaylor { d_omega_nu: d_nu, d_omega_e: d_e }));
    }
    Ok(g)
}
