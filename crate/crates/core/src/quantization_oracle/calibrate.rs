//! Pins the two normalization constants by exhaustive search.

use super::{reordered_power_operator, Calibration, DiffOp, Generator, Model};
use crate::composition::{a0_with, compose_full, Avatars, OMEGA_SELECTORS};
use crate::error::{Error, Result};
use crate::exterior_clifford::{Multivector, Scalar};
use crate::geometry_model::{basis_vector, random_geometry, ModelGeometry, RandomFlags};
use crate::symbol_poly::PolySymbol;

/// Candidate values of `c_γ`, as `(num, den)`.
pub const C_GAMMA_GRID: [(i64, i64); 8] = [(1, 1), (-1, 1), (1, 2), (-1, 2), (1, 4), (-1, 4), (2, 1), (-2, 1)];
/// Candidate values of `c_Ω`, as `(num, den)`.
pub const C_OMEGA_GRID: [(i64, i64); 6] = [(1, 1), (-1, 1), (1, 2), (-1, 2), (2, 1), (-2, 1)];

/// Surviving `(c_γ, c_Ω)` pairs after each group of constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationReport {
    pub geometries: usize,
    /// Second covariant derivative `∇_X∇_Y` at the origin equals `½Ω(X,Y)`.
    pub after_curvature: Vec<(Scalar, Scalar)>,
    /// The same identity read with the order `∇_Y∇_X`.
    pub after_curvature_reversed: Vec<(Scalar, Scalar)>,
    /// Adds the `m = ℓ = 1` quantization identity.
    pub after_reordering: Vec<(Scalar, Scalar)>,
    /// Adds the first-order composition against the literal `Σ_{k,ℓ}` operator.
    pub after_composition: Vec<(Scalar, Scalar)>,
}

/// Six non-flat geometries, three at `q = 2` and three at `q = 4`, none of
/// them Riemannian so the leafwise constraints are not vacuous.
pub fn calibration_family(seed: u64) -> Vec<ModelGeometry> {
    let shapes = [(4, 2, 1), (4, 2, 2), (3, 1, 1), (5, 1, 1), (6, 2, 1), (6, 2, 2)];
    shapes
        .iter()
        .enumerate()
        .map(|(k, &(n, p, a))| random_geometry(seed.wrapping_add(k as u64), n, p, a, RandomFlags::default()).unwrap())
        .collect()
}

fn curvature_ok(model: &Model, reversed: bool) -> bool {
    let g = model.geometry();
    let (n, q) = (g.n(), g.q());
    let quarter = Scalar::ratio(1, 4);
    let half = Scalar::ratio(1, 2);
    for i in 1..=n {
        for j in 1..=n {
            let (x, y) = (basis_vector(n, i), basis_vector(n, j));
            let gens = if reversed {
                vec![Generator::global(y.clone()), Generator::global(x.clone())]
            } else {
                vec![Generator::global(x.clone()), Generator::global(y.clone())]
            };
            let got = model.symbol_of(&DiffOp::nablas(model.dims(), gens)).unwrap().constant_part();
            let mut want = g.omega_nu_form_unchecked(&x, &y, &model.calibration().c_omega).scale(&quarter);
            want.add_assign(&Multivector::endo(q, g.omega_e_form(&x, &y).scale(&half)));
            if got != want {
                return false;
            }
        }
    }
    true
}

fn reordering_ok(model: &Model) -> bool {
    let g = model.geometry();
    let (n, q) = (g.n(), g.q());
    let d = model.dims();
    for i in 1..=n {
        for j in q + 1..=n {
            let (x, y) = (basis_vector(n, i), basis_vector(n, j));
            let op = reordered_power_operator(model, &x, &y, 1, 1);
            let got = model.symbol_of(&op).unwrap().grade_component(2);
            let want = PolySymbol::pairing_xi(d, &x).clifford_mul(&PolySymbol::pairing_sigma(d, &y));
            if got != want {
                return false;
            }
        }
    }
    true
}

fn composition_ok(model: &Model) -> bool {
    let literal = Avatars::literal(model).unwrap();
    let g = model.geometry();
    let n = g.n();
    let d = model.dims();
    for i in 1..=n {
        for j in 1..=n {
            let p = PolySymbol::pairing_xi(d, &basis_vector(n, i));
            let q = PolySymbol::pairing_xi(d, &basis_vector(n, j));
            let got = compose_full(model, &p, &q).unwrap().grade_component(2);
            let want = a0_with(&literal, &p, &q, &OMEGA_SELECTORS).unwrap();
            if got != want {
                return false;
            }
        }
    }
    true
}

fn grid() -> Vec<(Scalar, Scalar)> {
    let mut out = Vec::new();
    for &(a, b) in &C_GAMMA_GRID {
        for &(c, d) in &C_OMEGA_GRID {
            out.push((Scalar::ratio(a, b), Scalar::ratio(c, d)));
        }
    }
    out
}

/// Searches the grid for the unique pair satisfying every constraint on every
/// non-flat geometry of `family`.
pub fn calibrate(family: &[ModelGeometry]) -> Result<(Calibration, CalibrationReport)> {
    let used: Vec<&ModelGeometry> = family.iter().filter(|g| !g.is_flat()).collect();
    if used.is_empty() {
        return Err(Error::Calibration("no non-flat geometry in the calibration family".into()));
    }
    let passes = |pair: &(Scalar, Scalar), f: &dyn Fn(&Model) -> bool| {
        used.iter().all(|g| {
            let m = Model::new(g, Calibration::new(pair.0.clone(), pair.1.clone())).unwrap();
            f(&m)
        })
    };
    let all = grid();
    let after_curvature: Vec<_> = all.iter().filter(|p| passes(p, &|m| curvature_ok(m, false))).cloned().collect();
    let after_curvature_reversed: Vec<_> =
        all.iter().filter(|p| passes(p, &|m| curvature_ok(m, true))).cloned().collect();
    let after_reordering: Vec<_> = after_curvature.iter().filter(|p| passes(p, &reordering_ok)).cloned().collect();
    let after_composition: Vec<_> = after_reordering.iter().filter(|p| passes(p, &composition_ok)).cloned().collect();
    let report = CalibrationReport {
        geometries: used.len(),
        after_curvature,
        after_curvature_reversed,
        after_reordering,
        after_composition,
    };
    match report.after_composition.as_slice() {
        [(g, o)] => Ok((Calibration::new(g.clone(), o.clone()), report)),
        other => Err(Error::Calibration(format!(
            "expected one surviving (c_gamma, c_omega) pair, found {}: {:?}",
            other.len(),
            other
        ))),
    }
}
