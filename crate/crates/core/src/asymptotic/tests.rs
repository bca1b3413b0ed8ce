use super::*;
use crate::composition::{a0, ak};
use crate::exterior_clifford::{Multivector, Scalar};
use crate::geometry_model::{random_geometry, ModelGeometry, RandomFlags};
use crate::quantization_oracle::Calibration;
use crate::random::Sampler;

fn cal() -> Calibration {
    Calibration::new(Scalar::ratio(1, 2), Scalar::int(2))
}

fn family(s: &mut Sampler, d: Dims, base: usize, len: usize) -> AsymptoticSymbol {
    let coeffs = (0..len).map(|k| s.homogeneous(d, base - k, 2)).collect();
    AsymptoticSymbol::new(base, coeffs).unwrap()
}

#[test]
fn leading_symbol_is_slot_zero() {
    let d = Dims::new(4, 2, 1).unwrap();
    let p = PolySymbol::pairing_xi(d, &[Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()]);
    assert_eq!(AsymptoticSymbol::constant(p.clone()).leading_symbol(d), p);
    let s = AsymptoticSymbol::new(2, vec![PolySymbol::zero(d), p.clone()]).unwrap();
    assert!(s.leading_symbol(d).is_zero());
    assert!(AsymptoticSymbol::new(1, vec![PolySymbol::zero(d), p]).is_err());
    assert!(AsymptoticSymbol::new(0, vec![]).unwrap().leading_symbol(d).is_zero());
}

#[test]
fn constant_families_spread_the_composition() {
    let g = random_geometry(1, 4, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let mut s = Sampler::new(1);
    let (p, q) = (s.homogeneous(d, 2, 2), s.homogeneous(d, 3, 2));
    let c = compose_asymptotic(&m, &AsymptoticSymbol::constant(p.clone()), &AsymptoticSymbol::constant(q.clone()), None).unwrap();
    assert_eq!(c.base_grading, 5);
    for (n, cn) in c.coeffs.iter().enumerate() {
        assert_eq!(cn, &ak(&m, &p, &q, n).unwrap());
    }
    assert_eq!(c.sum(d), compose_full(&m, &p, &q).unwrap());
    assert_eq!(c.leading_symbol(d), a0(&m, &p, &q).unwrap());
}

#[test]
fn identity_family_is_neutral() {
    let g = random_geometry(2, 6, 2, 2, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let mut s = Sampler::new(2);
    let p = family(&mut s, d, 3, 3);
    let one = AsymptoticSymbol::constant(PolySymbol::one(d));
    assert_eq!(compose_asymptotic(&m, &p, &one, None).unwrap(), p);
    assert_eq!(compose_asymptotic(&m, &one, &p, None).unwrap(), p);
}

#[test]
fn routes_agree_and_leading_symbol_is_a0() {
    let mut s = Sampler::new(3);
    for seed in 0..6 {
        let (n, pl, a) = [(4, 2, 1), (5, 1, 2), (6, 2, 1)][seed as usize % 3];
        let g = random_geometry(seed, n, pl, a, RandomFlags::default()).unwrap();
        let m = Model::new(&g, cal()).unwrap();
        let d = g.dims();
        let (bp, bq) = (1 + s.below(3), 1 + s.below(3));
        let (lp, lq) = (1 + s.below(bp + 1), 1 + s.below(bq + 1));
        let p = family(&mut s, d, bp, lp);
        let q = family(&mut s, d, bq, lq);
        let c = compose_asymptotic(&m, &p, &q, Some(3)).unwrap();
        assert!(c.respects_grading());
        assert_eq!(c, compose_rescaled(&m, &p, &q, Some(3)).unwrap());
        assert_eq!(c.leading_symbol(d), a0(&m, &p.coeffs[0], &q.coeffs[0]).unwrap());
    }
}

#[test]
fn associative_to_truncation_order() {
    let g = random_geometry(4, 4, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    let mut s = Sampler::new(4);
    let (p, q, r) = (family(&mut s, d, 2, 2), family(&mut s, d, 1, 2), family(&mut s, d, 2, 1));
    let n = Some(2);
    let left = compose_asymptotic(&m, &compose_asymptotic(&m, &p, &q, n).unwrap(), &r, n).unwrap();
    let right = compose_asymptotic(&m, &p, &compose_asymptotic(&m, &q, &r, n).unwrap(), n).unwrap();
    assert_eq!(left, right);
}

#[test]
fn rescale_round_trip() {
    let g = random_geometry(5, 4, 2, 2, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    let d = g.dims();
    assert!(rescale_check(&m, &PolySymbol::one(d)).unwrap());
    assert!(rescale_check(&m, &PolySymbol::zero(d)).unwrap());
    let f1 = PolySymbol::var(d, crate::symbol_poly::VarId::xi(1)).unwrap().mv_mul_left(&Multivector::generator(2, 2, 1));
    assert!(rescale_check(&m, &f1).unwrap());
    let mut s = Sampler::new(5);
    for _ in 0..5 {
        let mut p = PolySymbol::zero(d);
        for g in 0..=s.below(5) {
            p.add_assign(&s.homogeneous(d, g, 1));
        }
        assert!(rescale_check(&m, &p).unwrap());
    }
}

#[test]
fn dirac_ledgers() {
    let flat = ModelGeometry::flat(4, 2, 1).unwrap();
    let m = Model::new(&flat, cal()).unwrap();
    let (td, t2) = td_vs_t2d2_report(&m).unwrap();
    assert!(t2.passes());
    assert_eq!(t2.entries.len(), 1);
    let fail = td.first_failure().unwrap();
    assert_eq!((fail.term, fail.grading, fail.slot), ("f_j xi_j", 2, -1));

    let flags = RandomFlags { riemannian: true, bianchi: true, mu: true, ..Default::default() };
    for seed in 0..4 {
        let g = random_geometry(seed, 6, 2, 1, flags).unwrap();
        let m = Model::new(&g, cal()).unwrap();
        let (td, t2) = td_vs_t2d2_report(&m).unwrap();
        assert!(!td.passes());
        assert!(td.entries.iter().filter(|e| e.term == "-c(mu)/2").all(LedgerEntry::passes));
        assert!(t2.passes(), "{:?}", t2.first_failure());
        assert!(t2.entries.iter().any(|e| e.term == "omega_nu" && e.grading == 0 && e.slot == 2));
    }
    let g = random_geometry(0, 6, 2, 1, RandomFlags { riemannian: true, ..Default::default() }).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    assert!(!td_vs_t2d2_report(&m).unwrap().1.passes());
    let g = random_geometry(0, 6, 2, 1, RandomFlags::default()).unwrap();
    let m = Model::new(&g, cal()).unwrap();
    assert!(td_vs_t2d2_report(&m).is_err());
}
