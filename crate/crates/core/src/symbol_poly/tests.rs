use std::collections::HashMap;

use proptest::prelude::*;

use super::*;

fn d(n: usize, q: usize) -> Dims {
    Dims::new(n, q, 1).unwrap()
}

fn var(dims: Dims, s: &str) -> PolySymbol {
    PolySymbol::var(dims, s.parse().unwrap()).unwrap()
}

fn blade(dims: Dims, idx: &[usize]) -> PolySymbol {
    PolySymbol::constant(dims, Multivector::blade(dims.q, dims.a, idx))
}

#[test]
fn grading_examples() {
    let dims = d(3, 1);
    let p = blade(dims, &[1]).wedge_mul(&var(dims, "xi1")).wedge_mul(&var(dims, "sigma3"));
    assert_eq!(p.grading(), Some(3));
    assert_eq!(PolySymbol::one(dims).grading(), Some(0));
    assert_eq!(PolySymbol::zero(dims).grading(), None);
    let x = &PolySymbol::one(dims) + &blade(dims, &[1]).wedge_mul(&var(dims, "xi1"));
    assert_eq!(x.grade_component(2), blade(dims, &[1]).wedge_mul(&var(dims, "xi1")));
}

#[test]
fn rescale_examples() {
    let dims = d(3, 2);
    let p = blade(dims, &[1]).wedge_mul(&var(dims, "xi2"));
    let r = rescale(&p);
    assert_eq!(r.terms.keys().copied().collect::<Vec<_>>(), vec![2]);
    assert_eq!(rescale(&PolySymbol::one(dims)).terms.keys().copied().collect::<Vec<_>>(), vec![0]);
    assert_eq!(unrescale(&r).into_constant(), Some(p));
}

#[test]
fn doubling_examples() {
    let dims = d(3, 2);
    let x1 = var(dims, "xi1");
    let t = PolySymbol::tensor_doubled(&x1, &x1).unwrap();
    assert_eq!(t, var(dims, "xi1").wedge_mul(&var(dims, "xi1'")));
    assert!(PolySymbol::tensor_doubled(&blade(dims, &[1]), &blade(dims, &[1])).unwrap().is_zero());
    assert_eq!(PolySymbol::tensor_doubled(&blade(dims, &[1]), &blade(dims, &[2])).unwrap(), {
        let mut b = blade(dims, &[1, 2]);
        b.primed = true;
        b
    });
    assert_eq!(t.identify_primed(), x1.wedge_mul(&x1));
    assert!((&var(dims, "xi1") - &var(dims, "xi1'")).identify_primed().is_zero());
}

#[test]
fn diff_and_collapse_examples() {
    let dims = d(3, 2);
    let x1 = var(dims, "xi1");
    let sq = x1.wedge_mul(&x1);
    assert_eq!(sq.diff(VarId::xi(1)).unwrap(), x1.scale(&Scalar::int(2)));
    assert!(var(dims, "sigma3").diff(VarId::xi(1)).unwrap().is_zero());
    assert!(x1.diff(VarId::sigma(1)).is_err());
    assert_eq!(var(dims, "sigma3").collapse_sigma(), var(dims, "xi3"));
    assert_eq!(x1.wedge_mul(&var(dims, "sigma3")).collapse_sigma(), x1.wedge_mul(&var(dims, "xi3")));
    assert_eq!(sq.collapse_sigma(), sq);
}

#[test]
fn variable_names_round_trip() {
    let dims = d(4, 2);
    for s in 0..2 * dims.unprimed_vars() {
        let v = VarId::from_slot(dims, s);
        assert_eq!(v.slot(dims).unwrap(), s);
        assert_eq!(v.to_string().parse::<VarId>().unwrap(), v);
    }
    assert!("sigma1".parse::<VarId>().unwrap().slot(dims).is_err());
    assert!("eta1".parse::<VarId>().is_err());
}

const DIMS: Dims = Dims { n: 4, q: 2, a: 1 };

fn arb_sym(blades: bool) -> impl Strategy<Value = PolySymbol> {
    let nv = DIMS.unprimed_vars();
    let term = (proptest::collection::vec(0u8..=2, nv), -3i64..=3, 0u16..4);
    proptest::collection::vec(term, 0..5).prop_map(move |ts| {
        let mut p = PolySymbol::zero(DIMS);
        for (exps, c, b) in ts {
            let mut m = Monomial::one(DIMS);
            for (s, e) in exps.into_iter().enumerate() {
                if e > 0 {
                    m = m.mul(&Monomial::from_exponents(DIMS, &[(VarId::from_slot(DIMS, s), e)]).unwrap());
                }
            }
            let b = if blades { crate::exterior_clifford::Blade(b) } else { crate::exterior_clifford::Blade(0) };
            p.add_term(m, Multivector::from_term(2, 1, b, Endo::scalar(1, Scalar::int(c))));
        }
        p
    })
}

/// Plain commutative polynomial product over exponent vectors.
fn oracle_product(p: &PolySymbol, q: &PolySymbol) -> HashMap<Vec<u8>, Scalar> {
    let mut out: HashMap<Vec<u8>, Scalar> = HashMap::new();
    for (m1, c1) in p.terms() {
        for (m2, c2) in q.terms() {
            let e: Vec<u8> = m1.exponents().iter().zip(m2.exponents()).map(|(a, b)| a + b).collect();
            let v = c1.scalar_part().get(0, 0) * c2.scalar_part().get(0, 0);
            *out.entry(e).or_insert_with(Scalar::zero) += &v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

proptest! {
    #[test]
    fn second_derivatives_commute(p in arb_sym(true), i in 0usize..6, j in 0usize..6) {
        let (vi, vj) = (VarId::from_slot(DIMS, i), VarId::from_slot(DIMS, j));
        prop_assert_eq!(p.diff(vi).unwrap().diff(vj).unwrap(), p.diff(vj).unwrap().diff(vi).unwrap());
    }

    #[test]
    fn diff_lowers_grading(p in arb_sym(true), g in 0usize..8, i in 0usize..6) {
        let h = p.grade_component(g);
        let dh = h.diff(VarId::from_slot(DIMS, i)).unwrap();
        prop_assert!(dh.is_zero() || dh.grading() == Some(g - 1));
    }

    #[test]
    fn identify_of_tensor_is_product(p in arb_sym(false), q in arb_sym(false)) {
        let got = PolySymbol::tensor_doubled(&p, &q).unwrap().identify_primed();
        let got: HashMap<Vec<u8>, Scalar> =
            got.terms().iter().map(|(m, c)| (m.exponents().to_vec(), c.scalar_part().get(0, 0).clone())).collect();
        prop_assert_eq!(got, oracle_product(&p, &q));
    }

    #[test]
    fn rescale_round_trip(p in arb_sym(true)) {
        let back = unrescale(&rescale(&p));
        if p.is_zero() {
            prop_assert!(back.terms.is_empty());
        } else {
            prop_assert_eq!(back.into_constant(), Some(p));
        }
    }

    #[test]
    fn rescale_exponents_add(p in arb_sym(false), q in arb_sym(false), g in 0usize..5, h in 0usize..5) {
        let (pg, qh) = (p.grade_component(g), q.grade_component(h));
        let prod = pg.clifford_mul(&qh);
        if prod.is_zero() {
            return Ok(());
        }
        let r = rescale(&prod);
        prop_assert_eq!(r.terms.keys().copied().collect::<Vec<_>>(), vec![(g + h) as i64]);
    }

    #[test]
    fn grade_components_partition(p in arb_sym(true)) {
        let mut sum = PolySymbol::zero(DIMS);
        for c in p.grade_components().values() {
            sum.add_assign(c);
        }
        prop_assert_eq!(sum, p);
    }
}
