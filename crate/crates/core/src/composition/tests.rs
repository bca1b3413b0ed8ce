use super::*;
use crate::exterior_clifford::{contraction_sign, contraction_sum, Blade, Endo};
use crate::geometry_model::{basis_vector, random_geometry, ModelGeometry, RandomFlags};
use crate::quantization_oracle::Calibration;
use crate::random::{Profile, Sampler};

fn cal() -> Calibration {
    Calibration::new(Scalar::ratio(1, 2), Scalar::int(2))
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::int(x)).collect()
}

#[test]
fn bidiff_trivial_cases() {
    let flat = ModelGeometry::flat(4, 2, 1).unwrap();
    let m = Model::new(&flat, cal()).unwrap();
    let d = flat.dims();
    let p = PolySymbol::pairing_xi(d, &ints(&[1, 1, 0, 1]));
    let pq = PolySymbol::tensor_doubled(&p, &p).unwrap();
    assert!(omega_bidiff(&m, BidiffSelector::XiXiP, &pq).unwrap().is_zero());
    let g = random_geometry(1, 4, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let c = PolySymbol::constant(d, Multivector::blade(2, 1, &[1]));
    let cc = PolySymbol::tensor_doubled(&c, &PolySymbol::one(d)).unwrap();
    for s in OMEGA_SELECTORS {
        assert!(omega_bidiff(&m, s, &cc).unwrap().is_zero());
    }
    assert!(omega_bidiff(&m, BidiffSelector::XiXiP, &p).is_err());
}

#[test]
fn bidiff_on_two_pairings() {
    let g = random_geometry(2, 5, 1, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let (x, w) = (ints(&[1, 0, 2, 0, 1]), ints(&[0, 1, 1, -1, 0]));
    let pq = PolySymbol::tensor_doubled(&PolySymbol::pairing_xi(d, &x), &PolySymbol::pairing_xi(d, &w)).unwrap();
    let got = omega_bidiff(&m, BidiffSelector::XiXiP, &pq).unwrap().identify_primed();
    let want = -&g.omega_nu_form(&x, &w, &Scalar::int(2)).unwrap();
    assert_eq!(got, PolySymbol::constant(d, want));
}

#[test]
fn exp_series_properties() {
    let g = random_geometry(3, 6, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let mut s = Sampler::new(3);
    let p = s.homogeneous(d, 3, 2);
    let q = s.homogeneous(d, 2, 2);
    let pq = PolySymbol::tensor_doubled(&p, &q).unwrap();
    assert_eq!(exp_bidiff(&m, &Scalar::zero(), &OMEGA_SELECTORS, &pq).unwrap(), pq);
    let fwd = exp_bidiff(&m, &Scalar::ratio(-1, 4), &OMEGA_SELECTORS, &pq).unwrap();
    let back = exp_bidiff(&m, &Scalar::ratio(1, 4), &OMEGA_SELECTORS, &fwd).unwrap();
    assert_eq!(back, pq);
}

#[test]
fn q2_series_stops_after_one_step() {
    let g = random_geometry(4, 4, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let p = PolySymbol::pairing_xi(d, &ints(&[1, 1, 1, 0])).pow_clifford(2);
    let q = PolySymbol::pairing_xi(d, &ints(&[0, 1, -1, 1])).pow_clifford(2);
    let pq = PolySymbol::tensor_doubled(&p, &q).unwrap();
    let once = {
        let mut t = PolySymbol::zero_primed(d);
        for s in OMEGA_SELECTORS {
            t.add_assign(&omega_bidiff(&m, s, &pq).unwrap());
        }
        t
    };
    assert!(!once.is_zero());
    for s in OMEGA_SELECTORS {
        assert!(omega_bidiff(&m, s, &once).unwrap().is_zero());
    }
}

#[test]
fn pure_forms_compose_by_clifford_expansion() {
    let g = random_geometry(5, 4, 0, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    for u in 0u16..16 {
        for v in 0u16..16 {
            let wu = Multivector::from_term(4, 1, Blade(u), Endo::identity(1));
            let wv = Multivector::from_term(4, 1, Blade(v), Endo::identity(1));
            let (p, q) = (PolySymbol::constant(d, wu.clone()), PolySymbol::constant(d, wv.clone()));
            assert_eq!(a0(&m, &p, &q).unwrap(), PolySymbol::constant(d, wu.wedge(&wv)));
            let full = compose_full(&m, &p, &q).unwrap();
            let top = Blade(u).degree() + Blade(v).degree();
            for k in 0..=top {
                let got = ak_from_full(&full, top, k);
                let want = if k % 2 == 1 {
                    Multivector::zero(4, 1)
                } else {
                    contraction_sum(&wu, &wv, k / 2).scale(&Scalar::int(contraction_sign(k / 2, Blade(u).degree())))
                };
                assert_eq!(got, PolySymbol::constant(d, want), "k={k}");
            }
        }
    }
}

#[test]
fn first_order_composition() {
    let g = random_geometry(6, 4, 2, 2, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let (x, w) = (ints(&[1, 2, 0, 1]), ints(&[0, 1, -1, 1]));
    let (px, pw) = (PolySymbol::pairing_xi(d, &x), PolySymbol::pairing_xi(d, &w));
    let got = compose_full(&m, &px, &pw).unwrap();
    let ix: Vec<Scalar> = x.iter().map(|c| &Scalar::i() * c).collect();
    let iw: Vec<Scalar> = w.iter().map(|c| &Scalar::i() * c).collect();
    let nu = g.omega_nu_form(&ix, &iw, &Scalar::int(2)).unwrap().scale(&Scalar::ratio(-1, 4));
    let e = Multivector::endo(2, g.omega_e_form(&x, &w).scale(&Scalar::ratio(1, 2)));
    let want = &(&px.clifford_mul(&pw) + &PolySymbol::constant(d, nu)) + &PolySymbol::constant(d, e);
    assert_eq!(got, want);
    assert_eq!(compose_full(&m, &PolySymbol::one(d), &pw).unwrap(), pw);
}

#[test]
fn central_identity_small_sample() {
    let mut s = Sampler::new(99);
    for seed in 0..6u64 {
        let (n, p, a) = [(4, 2, 1), (6, 2, 2), (5, 1, 1)][seed as usize % 3];
        let g = random_geometry(seed, n, p, a, RandomFlags::default()).unwrap();
        let m = Model::new(&g, cal()).unwrap();
        let d = g.dims();
        let (gp, gq) = (1 + s.below(2), 1 + s.below(2));
        let (p, q) = (s.homogeneous(d, gp, 2), s.homogeneous(d, gq, 2));
        let full = compose_full(&m, &p, &q).unwrap();
        assert_eq!(full, compose_full_via_ops(&m, &p, &q).unwrap());
        assert!(full.grading().unwrap() <= gp + gq);
        assert_eq!(full.grade_component(gp + gq), a0(&m, &p, &q).unwrap());
        let mut sum = PolySymbol::zero(d);
        for k in 0..=gp + gq {
            sum.add_assign(&ak(&m, &p, &q, k).unwrap());
        }
        assert_eq!(sum, full);
        assert!(ak(&m, &p, &q, gp + gq + 1).unwrap().is_zero());
    }
}

#[test]
fn riemannian_reduction() {
    let mut s = Sampler::new(5);
    let g = random_geometry(7, 6, 2, 1, RandomFlags { riemannian: true, ..Default::default() }).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let (p, q) = (s.homogeneous(d, 3, 2), s.homogeneous(d, 2, 2));
    assert_eq!(a0_riemannian(&m, &p, &q).unwrap(), a0(&m, &p, &q).unwrap());
    for sel in [BidiffSelector::XiSigmaP, BidiffSelector::SigmaXiP, BidiffSelector::SigmaSigmaP] {
        assert!(selector_term(&m, sel, &p, &q).unwrap().is_zero());
    }
    let ng = random_geometry(7, 6, 2, 1, RandomFlags::default()).unwrap();
    let nm = Model::new(&ng, cal()).unwrap();
    assert!(a0_riemannian(&nm, &p, &q).is_err());
}

#[test]
fn leafwise_widom_limit() {
    let mut g = random_geometry(8, 5, 3, 1, RandomFlags::default()).unwrap();
    for k in 1..=2 {
        for l in 1..=2 {
            for i in 1..=5 {
                for j in 1..=5 {
                    g.set_omega_nu_raw(k, l, i, j, Scalar::zero());
                }
            }
        }
    }
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let mut s = Sampler::new(8);
    let p = s.bihomogeneous(d, Profile { r: 0, m: 0, l: 2 }, 2);
    let q = s.bihomogeneous(d, Profile { r: 0, m: 0, l: 1 }, 2);
    assert_eq!(a0(&m, &p, &q).unwrap(), p.clifford_mul(&q));
}

/// `⟨iY,σ⟩∘⟨iZ,σ⟩` carries `¼Ω_ν(Y,Z)`: a blade-degree-2 term in the
/// composition of two symbols of bidegree `(0,1)`, so outside `SC^{0,2}`.
#[test]
fn bidegree_counterexample_for_leafwise_curvature() {
    let g = random_geometry(9, 4, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let (y, z) = (basis_vector(4, 3), basis_vector(4, 4));
    let nu = g.omega_nu_form(&y, &z, &Scalar::int(2)).unwrap();
    assert!(!nu.is_zero());
    let (py, pz) = (PolySymbol::pairing_sigma(d, &y), PolySymbol::pairing_sigma(d, &z));
    let a = a0(&m, &py, &pz).unwrap();
    assert_eq!(a.constant_part(), nu.scale(&Scalar::ratio(1, 4)));
    let grading_two_blades = a.terms().values().any(|c| c.degree() == Some(2));
    assert!(grading_two_blades);
}
