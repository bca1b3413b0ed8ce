//! Frozen-point geometric data: curvatures, mean curvature and the
//! non-integrability tensor.

mod random;

pub use random::{random_geometry, RandomFlags};

use crate::error::{Error, Result};
use crate::exterior_clifford::{Blade, Endo, Multivector, Scalar};
use crate::symbol_poly::Dims;

/// Optional first-order Taylor data `∂_m Ω_ν`, `∂_m Ω_E` at the frozen point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KTaylor {
    /// Index `(m, k, ℓ, i, j)`, all 0-based, `m,i,j < n`, `k,ℓ < q`.
    pub d_omega_nu: Vec<Scalar>,
    /// Index `(m, i, j)`.
    pub d_omega_e: Vec<Endo>,
}

/// Curvature and torsion-type data frozen at a point. All public indices
/// are 1-based, as in the formulas.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelGeometry {
    dims: Dims,
    omega_nu: Vec<Scalar>,
    omega_e: Vec<Endo>,
    mu: Vec<Scalar>,
    theta_nu: Vec<Scalar>,
    mu_deriv: Vec<Scalar>,
    k_taylor: Option<KTaylor>,
}

impl ModelGeometry {
    /// The flat geometry: every tensor zero.
    pub fn flat(n: usize, p_leaf: usize, a: usize) -> Result<ModelGeometry> {
        if p_leaf > n {
            return Err(Error::DimensionMismatch(format!("leaf dimension {p_leaf} exceeds n = {n}")));
        }
        let dims = Dims::new(n, n - p_leaf, a)?;
        let q = dims.q;
        Ok(ModelGeometry {
            dims,
            omega_nu: vec![Scalar::zero(); q * q * n * n],
            omega_e: vec![Endo::zero(a); n * n],
            mu: vec![Scalar::zero(); q],
            theta_nu: vec![Scalar::zero(); n * q * q],
            mu_deriv: vec![Scalar::zero(); q * q],
            k_taylor: None,
        })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn n(&self) -> usize {
        self.dims.n
    }

    pub fn q(&self) -> usize {
        self.dims.q
    }

    pub fn p_leaf(&self) -> usize {
        self.dims.p_leaf()
    }

    pub fn rank(&self) -> usize {
        self.dims.a
    }

    fn nu_idx(&self, k: usize, l: usize, i: usize, j: usize) -> usize {
        let (n, q) = (self.dims.n, self.dims.q);
        assert!((1..=q).contains(&k) && (1..=q).contains(&l), "frame index out of range");
        assert!((1..=n).contains(&i) && (1..=n).contains(&j), "direction index out of range");
        (((k - 1) * q + (l - 1)) * n + (i - 1)) * n + (j - 1)
    }

    /// `(Ω_ν)^k_{ℓ,i,j}`.
    pub fn omega_nu(&self, k: usize, l: usize, i: usize, j: usize) -> &Scalar {
        &self.omega_nu[self.nu_idx(k, l, i, j)]
    }

    /// Sets one component only; partners are left alone.
    pub fn set_omega_nu_raw(&mut self, k: usize, l: usize, i: usize, j: usize, v: Scalar) {
        let x = self.nu_idx(k, l, i, j);
        self.omega_nu[x] = v;
    }

    /// Sets a component and its three antisymmetric partners.
    pub fn set_omega_nu(&mut self, k: usize, l: usize, i: usize, j: usize, v: Scalar) {
        let m = -&v;
        self.set_omega_nu_raw(k, l, i, j, v.clone());
        self.set_omega_nu_raw(l, k, j, i, v);
        self.set_omega_nu_raw(l, k, i, j, m.clone());
        self.set_omega_nu_raw(k, l, j, i, m);
    }

    /// `Ω_E(e_i, e_j)`.
    pub fn omega_e(&self, i: usize, j: usize) -> &Endo {
        &self.omega_e[(i - 1) * self.dims.n + (j - 1)]
    }

    pub fn set_omega_e_raw(&mut self, i: usize, j: usize, e: Endo) {
        let n = self.dims.n;
        self.omega_e[(i - 1) * n + (j - 1)] = e;
    }

    /// Sets `Ω_E(e_i,e_j)` and `Ω_E(e_j,e_i) = −Ω_E(e_i,e_j)`.
    pub fn set_omega_e(&mut self, i: usize, j: usize, e: Endo) {
        self.set_omega_e_raw(j, i, e.neg());
        self.set_omega_e_raw(i, j, e);
    }

    /// Mean curvature components `μ_k`, `k ∈ 1..=q`.
    pub fn mu(&self) -> &[Scalar] {
        &self.mu
    }

    pub fn set_mu(&mut self, k: usize, v: Scalar) {
        self.mu[k - 1] = v;
    }

    fn theta_idx(&self, m: usize, j: usize, k: usize) -> usize {
        let (n, q) = (self.dims.n, self.dims.q);
        assert!((1..=n).contains(&m) && (1..=q).contains(&j) && (1..=q).contains(&k), "index out of range");
        ((m - 1) * q + (j - 1)) * q + (k - 1)
    }

    /// `θ^m_{jk}` with `[e_j, e_k] = Σ_m θ^m_{jk} ∂_m`.
    pub fn theta(&self, m: usize, j: usize, k: usize) -> &Scalar {
        &self.theta_nu[self.theta_idx(m, j, k)]
    }

    pub fn set_theta_raw(&mut self, m: usize, j: usize, k: usize, v: Scalar) {
        let x = self.theta_idx(m, j, k);
        self.theta_nu[x] = v;
    }

    pub fn set_theta(&mut self, m: usize, j: usize, k: usize, v: Scalar) {
        self.set_theta_raw(m, k, j, -&v);
        self.set_theta_raw(m, j, k, v);
    }

    /// `D_{ik}` of the mean-curvature derivative term.
    pub fn mu_deriv(&self, i: usize, k: usize) -> &Scalar {
        &self.mu_deriv[(i - 1) * self.dims.q + (k - 1)]
    }

    pub fn set_mu_deriv(&mut self, i: usize, k: usize, v: Scalar) {
        let q = self.dims.q;
        self.mu_deriv[(i - 1) * q + (k - 1)] = v;
    }

    pub fn k_taylor(&self) -> Option<&KTaylor> {
        self.k_taylor.as_ref()
    }

    pub fn set_k_taylor(&mut self, k: Option<KTaylor>) {
        self.k_taylor = k;
    }

    pub fn has_zero_theta(&self) -> bool {
        self.theta_nu.iter().all(Scalar::is_zero)
    }

    pub fn has_zero_mu_deriv(&self) -> bool {
        self.mu_deriv.iter().all(Scalar::is_zero)
    }

    pub fn has_zero_mu(&self) -> bool {
        self.mu.iter().all(Scalar::is_zero)
    }

    pub fn is_flat(&self) -> bool {
        self.omega_nu.iter().all(Scalar::is_zero) && self.omega_e.iter().all(Endo::is_zero)
    }

    /// All antisymmetry and dimension violations; empty iff valid.
    pub fn validate(&self) -> Vec<String> {
        let mut v = Vec::new();
        let (n, q, a) = (self.dims.n, self.dims.q, self.dims.a);
        if q % 2 != 0 {
            v.push(format!("codimension q = {q} is odd"));
        }
        if q == 0 {
            v.push("codimension q = 0".into());
        }
        if self.omega_e.iter().any(|e| e.rank() != a) {
            v.push("omega_e entry with wrong rank".into());
        }
        for k in 1..=q {
            for l in 1..=q {
                for i in 1..=n {
                    for j in 1..=n {
                        let x = self.omega_nu(k, l, i, j);
                        if x != &-self.omega_nu(k, l, j, i) {
                            v.push(format!("omega_nu[{k},{l},{i},{j}] not antisymmetric in (i,j)"));
                        }
                        if x != &-self.omega_nu(l, k, i, j) {
                            v.push(format!("omega_nu[{k},{l},{i},{j}] not antisymmetric in (k,l)"));
                        }
                    }
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                if self.omega_e(i, j) != &self.omega_e(j, i).neg() {
                    v.push(format!("omega_e[{i},{j}] not antisymmetric"));
                }
            }
        }
        for m in 1..=n {
            for j in 1..=q {
                for k in 1..=q {
                    if self.theta(m, j, k) != &-self.theta(m, k, j) {
                        v.push(format!("theta_nu[{m},{j},{k}] not antisymmetric"));
                    }
                }
            }
        }
        if let Some(t) = &self.k_taylor {
            if t.d_omega_nu.len() != n * q * q * n * n || t.d_omega_e.len() != n * n * n {
                v.push("k_taylor tensors have wrong size".into());
            } else {
                for m in 0..n {
                    let base = m * q * q * n * n;
                    let at = |k: usize, l: usize, i: usize, j: usize| &t.d_omega_nu[base + ((k * q + l) * n + i) * n + j];
                    for k in 0..q {
                        for l in 0..q {
                            for i in 0..n {
                                for j in 0..n {
                                    if at(k, l, i, j) != &-at(l, k, i, j) || at(k, l, i, j) != &-at(k, l, j, i) {
                                        v.push(format!("k_taylor d_omega_nu[{}] not antisymmetric", m + 1));
                                    }
                                }
                            }
                        }
                    }
                    for i in 0..n {
                        for j in 0..n {
                            let e = &t.d_omega_e[(m * n + i) * n + j];
                            if e.rank() != a || e != &t.d_omega_e[(m * n + j) * n + i].neg() {
                                v.push(format!("k_taylor d_omega_e[{}] not antisymmetric", m + 1));
                            }
                        }
                    }
                }
            }
        }
        v.dedup();
        v
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGeometry(v))
        }
    }

    /// True iff `Ω_ν` vanishes as soon as one direction is leafwise.
    pub fn is_riemannian_bott(&self) -> bool {
        let (n, q) = (self.dims.n, self.dims.q);
        for k in 1..=q {
            for l in 1..=q {
                for i in 1..=n {
                    for j in 1..=n {
                        if (i > q || j > q) && !self.omega_nu(k, l, i, j).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `Σ_{k<ℓ} (Ω_ν)^k_{ℓ,i,j} f_k∧f_ℓ` for coordinate directions.
    fn nu_pair_form(&self, i: usize, j: usize) -> Multivector {
        let (q, a) = (self.dims.q, self.dims.a);
        let mut out = Multivector::zero(q, a);
        for k in 1..=q {
            for l in k + 1..=q {
                let v = self.omega_nu(k, l, i, j);
                if !v.is_zero() {
                    out.add_term(Blade((1 << (k - 1)) | (1 << (l - 1))), Endo::scalar(a, v.clone()));
                }
            }
        }
        out
    }

    /// `c_Ω Σ_{i,j} Σ_{k<ℓ} (Ω_ν)^k_{ℓ,i,j} X_i Y_j f_k∧f_ℓ`.
    pub fn omega_nu_form(&self, x: &[Scalar], y: &[Scalar], c_omega: &Scalar) -> Result<Multivector> {
        self.ensure_valid()?;
        Ok(self.omega_nu_form_unchecked(x, y, c_omega))
    }

    pub(crate) fn omega_nu_form_unchecked(&self, x: &[Scalar], y: &[Scalar], c_omega: &Scalar) -> Multivector {
        let n = self.dims.n;
        assert!(x.len() == n && y.len() == n, "directions must have n components");
        let mut out = Multivector::zero(self.dims.q, self.dims.a);
        for i in 1..=n {
            if x[i - 1].is_zero() {
                continue;
            }
            for j in 1..=n {
                if y[j - 1].is_zero() {
                    continue;
                }
                let s = &(&x[i - 1] * &y[j - 1]) * c_omega;
                out.add_assign(&self.nu_pair_form(i, j).scale(&s));
            }
        }
        out
    }

    /// Table of `omega_nu_form(e_i, e_j)`, row-major over `(i, j)`.
    pub fn omega_nu_table(&self, c_omega: &Scalar) -> Result<Vec<Multivector>> {
        self.ensure_valid()?;
        let n = self.dims.n;
        let mut t = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                t.push(self.nu_pair_form(i, j).scale(c_omega));
            }
        }
        Ok(t)
    }

    /// `Ω_E(X, Y) = Σ X_i Y_j Ω_E(e_i, e_j)`.
    pub fn omega_e_form(&self, x: &[Scalar], y: &[Scalar]) -> Endo {
        let n = self.dims.n;
        let mut out = Endo::zero(self.dims.a);
        for i in 1..=n {
            for j in 1..=n {
                let s = &x[i - 1] * &y[j - 1];
                if !s.is_zero() {
                    out.add_assign(&self.omega_e(i, j).scale(&s));
                }
            }
        }
        out
    }
}

/// The coordinate vector `e_i` of length `n`.
pub fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i - 1] = Scalar::one();
    v
}

#[cfg(test)]
mod tests;
