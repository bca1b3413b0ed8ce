use super::*;
use crate::geometry_model::{random_geometry, RandomFlags};
use crate::quantization_oracle::Calibration;

fn cal() -> Calibration {
    Calibration::new(Scalar::ratio(1, 2), Scalar::int(2))
}

#[test]
fn dirac_symbol_shape() {
    let mut g = ModelGeometry::flat(4, 2, 1).unwrap();
    let d = g.dims();
    let s = dirac_symbol(&g);
    assert_eq!(s, dirac_principal(&g));
    assert_eq!(s.grading(), Some(2));
    g.set_mu(1, Scalar::int(3));
    let t = dirac_terms(&g);
    assert_eq!((t[0].grading, t[1].grading), (Some(2), Some(1)));
    let expected = -&PolySymbol::constant(d, Multivector::generator(2, 1, 1).scale(&Scalar::ratio(3, 2)));
    assert_eq!(dirac_symbol(&g), &dirac_principal(&g) + &expected);
    for seed in 0..5 {
        let g = random_geometry(seed, 5, 1, 2, RandomFlags { mu: true, theta: true, ..Default::default() }).unwrap();
        assert_eq!(dirac_symbol(&g).max_sigma_degree(), 0);
    }
}

#[test]
fn flat_square_is_eta_squared() {
    let g = ModelGeometry::flat(4, 2, 1).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let r = dirac_square_oracle_check(&m).unwrap();
    assert!(r.passed());
    let eta = r.terms[0].symbol.clone();
    assert_eq!(r.formula, eta);
    assert_eq!(eta.terms().len(), 2);
}

#[test]
fn square_matches_oracle() {
    for seed in 0..6 {
        let (n, p) = [(4, 2), (6, 2), (5, 1)][seed as usize % 3];
        let flags = RandomFlags { mu: seed % 2 == 0, ..Default::default() };
        let g = random_geometry(seed, n, p, 1 + (seed as usize % 2), flags).unwrap();
        let m = Model::new(&g, cal()).unwrap();
        let r = dirac_square_oracle_check(&m).unwrap();
        assert_eq!(r.formula, r.oracle, "seed {seed}");
        assert!(r.ledger_ok);
    }
}

#[test]
fn square_rejects_brackets() {
    let g = random_geometry(1, 4, 2, 1, RandomFlags { theta: true, ..Default::default() }).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    assert!(matches!(dirac_square_oracle_check(&m), Err(Error::Precondition(_))));
    let g = random_geometry(1, 4, 2, 1, RandomFlags { mu_deriv: true, ..Default::default() }).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    assert!(dirac_square_oracle_check(&m).is_err());
}

#[test]
fn grading_ledger() {
    let g = random_geometry(3, 6, 2, 2, RandomFlags { mu: true, theta: true, mu_deriv: true, ..Default::default() }).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let t = dirac_square_terms(&m);
    let gr: Vec<Option<usize>> = t.iter().map(|t| t.grading).collect();
    assert_eq!(gr, vec![Some(2), None, Some(4), Some(2), Some(3), Some(2), Some(1), Some(0)]);
    assert!(t.iter().all(TaggedTerm::within_bound));
    // Only the theta term may carry leafwise ξ.
    for term in &t {
        let leafwise = term.symbol.terms().keys().any(|mo| (g.q() + 1..=g.n()).any(|j| mo.exponent(g.dims(), VarId::xi(j)) > 0));
        assert_eq!(leafwise, term.name == "theta" && leafwise);
    }
    // diagonal D_ii lands in grading 0 through f_i·f_i = −1
    let mut h = ModelGeometry::flat(4, 2, 1).unwrap();
    h.set_mu_deriv(1, 1, Scalar::int(2));
    let mh = Model::new(&h, cal()).unwrap();
    let md = &dirac_square_terms(&mh)[5];
    assert_eq!(md.grading, Some(0));
    assert_eq!(md.symbol, PolySymbol::scalar(h.dims(), Scalar::int(-1)));
}

#[test]
fn kappa_example() {
    let flat = ModelGeometry::flat(4, 2, 1).unwrap();
    let m = Model::new(&flat, cal()).unwrap();
    let r = kappa_eighth_check(&m).unwrap();
    assert!(r.passed() && r.a0.is_zero() && r.kappa_eighth.is_zero());

    let mut g = ModelGeometry::flat(3, 1, 1).unwrap();
    g.set_omega_nu(1, 2, 1, 2, Scalar::int(3));
    let m = Model::new(&g, cal()).unwrap();
    let r = kappa_eighth_check(&m).unwrap();
    assert!(r.passed());
    // q=2: a four-form cannot exist, so both sides vanish while κ does not
    assert!(r.expected.is_zero());
    // Ω_ν(e₁,e₂) = 2·3 f₁∧f₂ and (f₁∧f₂)·(f₁∧f₂) = −1
    assert_eq!(r.kappa_eighth, Scalar::int(-3));

    for seed in 0..6 {
        let flags = RandomFlags { riemannian: true, mu: true, ..Default::default() };
        let g = random_geometry(seed, 6, 2, 1, flags).unwrap();
        let m = Model::new(&g, cal()).unwrap();
        let r = kappa_eighth_check(&m).unwrap();
        assert!(r.passed(), "seed {seed}");
        assert!(r.clifford_square.terms().keys().any(|mo| mo.degree() == 2));
    }
    let g = random_geometry(0, 4, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    assert!(kappa_eighth_check(&m).is_err());
}

#[test]
fn bianchi_kills_the_four_form() {
    let flags = RandomFlags { riemannian: true, bianchi: true, ..Default::default() };
    let g = random_geometry(11, 6, 2, 1, flags).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let r = kappa_eighth_check(&m).unwrap();
    assert!(r.passed());
    assert!(r.expected.is_zero());
    assert!(!r.kappa_eighth.is_zero());
}
