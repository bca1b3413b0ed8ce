//! The transverse Dirac operator `D = D̂ − ½c(μ)`, its symbol and the
//! symbol of `D²`.

use crate::composition::a0;
use crate::error::{Error, Result};
use crate::exterior_clifford::{Multivector, Scalar};
use crate::geometry_model::{basis_vector, ModelGeometry};
use crate::quantization_oracle::{DiffOp, Generator, Letter, Model};
use crate::symbol_poly::{Dims, Monomial, PolySymbol, VarId};

/// One named summand of a symbol, with its grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedTerm {
    pub name: &'static str,
    pub symbol: PolySymbol,
    pub grading: Option<usize>,
    /// Largest grading the term may have for this geometry.
    pub bound: usize,
}

impl TaggedTerm {
    fn new(name: &'static str, symbol: PolySymbol, bound: usize) -> TaggedTerm {
        let grading = symbol.grading();
        TaggedTerm { name, symbol, grading, bound }
    }

    pub fn within_bound(&self) -> bool {
        self.grading.is_none_or(|g| g <= self.bound)
    }
}

fn gen(d: Dims, k: usize) -> Multivector {
    Multivector::generator(d.q, d.a, k)
}

fn xi(d: Dims, j: usize) -> Monomial {
    Monomial::var(d, VarId::xi(j)).expect("xi index in range")
}

/// `c(μ) = Σ_k μ_k f_k`.
pub fn clifford_mu(g: &ModelGeometry) -> Multivector {
    let d = g.dims();
    let mut out = Multivector::zero(d.q, d.a);
    for (k, m) in g.mu().iter().enumerate() {
        out.add_assign(&gen(d, k + 1).scale(m));
    }
    out
}

/// `i Σ_{j≤q} f_j ξ_j`, the grading-2 part of `ς(D)`.
pub fn dirac_principal(g: &ModelGeometry) -> PolySymbol {
    let d = g.dims();
    let mut p = PolySymbol::zero(d);
    for j in 1..=d.q {
        p.add_term(xi(d, j), gen(d, j).scale(&Scalar::i()));
    }
    p
}

/// `−½c(μ)`, the grading-1 part of `ς(D)`.
pub fn dirac_mean_curvature(g: &ModelGeometry) -> PolySymbol {
    PolySymbol::constant(g.dims(), clifford_mu(g).scale(&Scalar::ratio(-1, 2)))
}

/// `ς(D) = i Σ_{j≤q} f_j ξ_j − ½c(μ)`.
pub fn dirac_symbol(g: &ModelGeometry) -> PolySymbol {
    &dirac_principal(g) + &dirac_mean_curvature(g)
}

/// `ς(D)` split into its two summands.
pub fn dirac_terms(g: &ModelGeometry) -> Vec<TaggedTerm> {
    vec![
        TaggedTerm::new("f_j xi_j", dirac_principal(g), 2),
        TaggedTerm::new("-c(mu)/2", dirac_mean_curvature(g), 1),
    ]
}

/// `D = Σ_{j≤q} f_j·∇_{e_j} − ½c(μ)` as an oracle operator.
pub fn dirac_operator(g: &ModelGeometry) -> DiffOp {
    let d = g.dims();
    let mut op = DiffOp::zero(d);
    for j in 1..=d.q {
        op.push(gen(d, j), vec![Letter::Nabla(Generator::coord(d.n, j))]);
    }
    op.push(clifford_mu(g).scale(&Scalar::ratio(-1, 2)), Vec::new());
    op
}

/// The eight summands of `ς(D²)`, in the order of the proposition.
///
/// The second summand, `−iΣ_j e_j e_j⟨exp⁻¹_x(x′), ξ⟩`, is zero because the
/// exponential map is linear in the model. The Ω_ν summand uses the
/// Clifford product `(f_j∧f_k)·Ω_ν(e_j,e_k)`.
pub fn dirac_square_terms(model: &Model) -> Vec<TaggedTerm> {
    let g = model.geometry();
    let d = g.dims();
    let (n, q, a) = (d.n, d.q, d.a);
    let c_omega = &model.calibration().c_omega;
    let pair = |j: usize, k: usize| gen(d, j).wedge(&gen(d, k));

    let mut eta = PolySymbol::zero(d);
    for j in 1..=q {
        eta.add_term(xi(d, j).mul(&xi(d, j)), Multivector::one(q, a));
    }

    let mut nu = Multivector::zero(q, a);
    let mut e = Multivector::zero(q, a);
    let mut theta = PolySymbol::zero(d);
    for j in 1..=q {
        for k in j + 1..=q {
            let f = pair(j, k);
            let form = g.omega_nu_form_unchecked(&basis_vector(n, j), &basis_vector(n, k), c_omega);
            nu.add_assign(&f.clifford(&form));
            e.add_assign(&f.endo_mul_left(g.omega_e(j, k)));
            for m in 1..=n {
                let t = g.theta(m, j, k);
                if !t.is_zero() {
                    theta.add_term(xi(d, m), f.scale(&(&Scalar::i() * t)));
                }
            }
        }
    }
    let nu = nu.scale(&Scalar::ratio(1, 2));

    let mut mu_deriv = Multivector::zero(q, a);
    for i in 1..=q {
        for k in 1..=q {
            let v = g.mu_deriv(i, k);
            if !v.is_zero() {
                mu_deriv.add_assign(&gen(d, i).clifford(&gen(d, k)).scale(v));
            }
        }
    }
    let mu_deriv = mu_deriv.scale(&Scalar::ratio(1, 2));

    let mut mu_eta = PolySymbol::zero(d);
    let mut mu_sq = Scalar::zero();
    for (j, m) in g.mu().iter().enumerate() {
        mu_eta.add_term(xi(d, j + 1), Multivector::scalar(q, a, &Scalar::i() * m));
        mu_sq += &(m * m);
    }
    let mu_sq = &mu_sq * &Scalar::ratio(-1, 4);

    vec![
        TaggedTerm::new("|eta|^2", eta, 2),
        TaggedTerm::new("hessian", PolySymbol::zero(d), 1),
        TaggedTerm::new("omega_nu", PolySymbol::constant(d, nu), 4),
        TaggedTerm::new("omega_E", PolySymbol::constant(d, e), 2),
        TaggedTerm::new("theta", theta, 3),
        TaggedTerm::new("mu_deriv", PolySymbol::constant(d, mu_deriv), 2),
        TaggedTerm::new("<i mu,eta>", mu_eta, 1),
        TaggedTerm::new("-|mu|^2/4", PolySymbol::scalar(d, mu_sq), 0),
    ]
}

/// `ς(D²)` assembled from [`dirac_square_terms`].
pub fn dirac_square_symbol(model: &Model) -> PolySymbol {
    let mut out = PolySymbol::zero(model.dims());
    for t in dirac_square_terms(model) {
        out.add_assign(&t.symbol);
    }
    out
}

/// Outcome of comparing `ς(D²)` with the oracle's `ς(D∘D)`.
#[derive(Clone, Debug)]
pub struct DiracSquareReport {
    pub formula: PolySymbol,
    pub oracle: PolySymbol,
    pub terms: Vec<TaggedTerm>,
    /// Per term: does the oracle's grade decomposition contain it?
    pub ledger_ok: bool,
}

impl DiracSquareReport {
    pub fn passed(&self) -> bool {
        self.formula == self.oracle && self.ledger_ok
    }
}

/// Compare the eight-term formula against `symbol_of(D∘D)`.
///
/// Only valid where `ϑ_ν = 0` and the mean-curvature derivative vanishes:
/// the model's coordinate generators commute and its μ is constant.
pub fn dirac_square_oracle_check(model: &Model) -> Result<DiracSquareReport> {
    let g = model.geometry();
    if !g.has_zero_theta() {
        return Err(Error::Precondition("theta_nu must vanish: commuting coordinate generators cannot realize brackets".into()));
    }
    if !g.has_zero_mu_deriv() {
        return Err(Error::Precondition("mu_deriv must vanish: the model's mean curvature is constant".into()));
    }
    let dop = dirac_operator(g);
    let oracle = model.symbol_of(&dop.compose_ops(&dop))?;
    let terms = dirac_square_terms(model);
    let formula = dirac_square_symbol(model);
    let ledger_ok = terms.iter().all(TaggedTerm::within_bound);
    Ok(DiracSquareReport { formula, oracle, terms, ledger_ok })
}

/// Outcome of the `a₀(ς(D), ς(D))` computation.
#[derive(Clone, Debug)]
pub struct KappaReport {
    pub a0: PolySymbol,
    /// `½ Σ_{j<k} f_j∧f_k∧Ω_ν(e_j,e_k)`.
    pub expected: Multivector,
    /// The pointwise square `ς(D)·ς(D)`; its `ξ_jξ_k` block is the part that cancels.
    pub clifford_square: PolySymbol,
    pub xi_block_cancels: bool,
    pub mu_cross_cancels: bool,
    /// `κ/8 = ½ ⟨Σ_{j<k}(f_j∧f_k)·Ω_ν(e_j,e_k)⟩₀`.
    pub kappa_eighth: Scalar,
}

impl KappaReport {
    pub fn passed(&self) -> bool {
        self.a0 == PolySymbol::constant(self.a0.dims(), self.expected.clone()) && self.xi_block_cancels && self.mu_cross_cancels
    }
}

/// `Σ_{j<k} f_j∧f_k ∘ Ω_ν(e_j,e_k)` with `∘` the given product.
fn nu_pairs(model: &Model, f: impl Fn(&Multivector, &Multivector) -> Multivector) -> Multivector {
    let g = model.geometry();
    let d = g.dims();
    let c_omega = &model.calibration().c_omega;
    let mut out = Multivector::zero(d.q, d.a);
    for j in 1..=d.q {
        for k in j + 1..=d.q {
            let form = g.omega_nu_form_unchecked(&basis_vector(d.n, j), &basis_vector(d.n, k), c_omega);
            out.add_assign(&f(&gen(d, j).wedge(&gen(d, k)), &form));
        }
    }
    out
}

/// `κ` of the stored tensor: `4⟨Σ_{j<k}(f_j∧f_k)·Ω_ν(e_j,e_k)⟩₀`.
pub fn kappa(model: &Model) -> Scalar {
    let s = nu_pairs(model, Multivector::clifford).scalar_part();
    s.get(0, 0) * &Scalar::int(4)
}

/// The worked example: `a₀(ς(D), ς(D))` for a Riemannian geometry with
/// `ϑ_ν = 0`.
pub fn kappa_eighth_check(model: &Model) -> Result<KappaReport> {
    let g = model.geometry();
    if !g.is_riemannian_bott() {
        return Err(Error::Precondition("geometry is not Riemannian".into()));
    }
    if !g.has_zero_theta() {
        return Err(Error::Precondition("theta_nu must vanish".into()));
    }
    let s = dirac_symbol(g);
    let a = a0(model, &s, &s)?;
    let expected = nu_pairs(model, Multivector::wedge).scale(&Scalar::ratio(1, 2));
    let clifford_square = s.clifford_mul(&s);
    let xi_block_cancels = a.terms().keys().all(|m| m.degree() != 2);
    let cross = a.terms().keys().all(|m| m.degree() != 1);
    let kappa_eighth = &kappa(model) * &Scalar::ratio(1, 8);
    Ok(KappaReport { a0: a, expected, clifford_square, xi_block_cancels, mu_cross_cancels: cross, kappa_eighth })
}

#[cfg(test)]
mod tests;
