use proptest::prelude::*;

use super::*;

/// Left Clifford action of `f_k` by the generator recursion `f∧ω − i_f ω`.
fn gen_action(k: usize, w: &Multivector) -> Multivector {
    let f = Multivector::generator(w.q(), w.rank(), k);
    &f.wedge(w) - &w.contract(k).unwrap()
}

/// Clifford product computed only from wedge and contraction.
fn recursion_product(u: &Multivector, v: &Multivector) -> Multivector {
    let mut out = Multivector::zero(u.q(), u.rank());
    for (b, e) in u.terms() {
        let mut acc = v.endo_mul_left(e);
        for k in b.indices().into_iter().rev() {
            acc = gen_action(k, &acc);
        }
        out.add_assign(&acc);
    }
    out
}

fn all_blades(q: usize) -> Vec<Multivector> {
    (0u16..(1 << q))
        .map(|m| Multivector::from_term(q, 1, Blade(m), Endo::identity(1)))
        .collect()
}

fn mv(q: usize, idx: &[usize]) -> Multivector {
    Multivector::blade(q, 1, idx)
}

fn sc(q: usize, n: i64) -> Multivector {
    Multivector::scalar(q, 1, Scalar::int(n))
}

#[test]
fn spec_examples() {
    let q = 3;
    assert_eq!(mv(q, &[1]).wedge(&mv(q, &[2])), mv(q, &[1, 2]));
    assert!(mv(q, &[1]).wedge(&mv(q, &[1])).is_zero());
    assert_eq!(mv(q, &[2]).wedge(&mv(q, &[1])), -&mv(q, &[1, 2]));
    assert_eq!(mv(q, &[1]).clifford(&mv(q, &[1])), sc(q, -1));
    assert_eq!(mv(q, &[1]).clifford(&mv(q, &[2])), mv(q, &[1, 2]));
    let b12 = mv(q, &[1, 2]);
    assert_eq!(b12.clifford(&b12), sc(q, -1));
    assert_eq!(b12.contract(1).unwrap(), mv(q, &[2]));
    assert_eq!(b12.contract(2).unwrap(), -&mv(q, &[1]));
    assert!(b12.contract(3).unwrap().is_zero());
    assert!(b12.contract(4).is_err());
    let x = &sc(q, 1) + &b12;
    assert_eq!(x.grade_project(2), b12);
    assert!(mv(q, &[1]).grade_project(0).is_zero());
    let i1 = Multivector::scalar(q, 1, Scalar::i());
    assert_eq!(i1.mv_adjoint(), Multivector::scalar(q, 1, -Scalar::i()));
    assert_eq!(mv(q, &[1]).mv_adjoint(), mv(q, &[1]));
    assert_eq!(b12.mv_adjoint(), -&b12);
}

#[test]
fn blade_products_match_recursion_at_q4() {
    let bs = all_blades(4);
    for u in &bs {
        for v in &bs {
            assert_eq!(u.clifford(v), recursion_product(u, v), "{u:?} * {v:?}");
        }
    }
}

#[test]
fn generator_relations() {
    let q = 4;
    for j in 1..=q {
        for k in 1..=q {
            let fj = Multivector::generator(q, 2, j);
            let fk = Multivector::generator(q, 2, k);
            let anti = &fj.clifford(&fk) + &fk.clifford(&fj);
            let expect = if j == k { -2 } else { 0 };
            assert_eq!(anti, Multivector::scalar(q, 2, Scalar::int(expect)));
        }
    }
}

#[test]
fn wedge_decomposition_all_pairs_q4() {
    let bs = all_blades(4);
    for u in &bs {
        let du = u.degree().unwrap();
        for v in &bs {
            let mut sum = Multivector::zero(4, 1);
            for r in 0..=4 {
                let t = contraction_sum(u, v, r).scale(&Scalar::int(contraction_sign(r, du)));
                sum.add_assign(&t);
            }
            assert_eq!(sum, u.clifford(v), "{u:?} * {v:?}");
        }
    }
}

#[test]
fn chevalley_top_grade() {
    let bs = all_blades(4);
    for u in &bs {
        for v in &bs {
            let top = u.degree().unwrap() + v.degree().unwrap();
            assert_eq!(u.clifford(v).grade_project(top), u.wedge(v));
        }
    }
}

#[test]
fn dimension_mismatch_rejected() {
    let u = Multivector::one(2, 1);
    assert!(u.checked_wedge(&Multivector::one(4, 1)).is_err());
    assert!(u.checked_clifford(&Multivector::one(2, 2)).is_err());
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2, -2i64..=2).prop_map(|(n, d, m)| &Scalar::ratio(n, d) + &(&Scalar::i() * &Scalar::int(m)))
}

fn arb_mv(q: usize, a: usize) -> impl Strategy<Value = Multivector> {
    let term = (0u16..(1 << q), proptest::collection::vec(arb_scalar(), a * a));
    proptest::collection::vec(term, 0..4).prop_map(move |ts| {
        let mut m = Multivector::zero(q, a);
        for (b, es) in ts {
            m.add_term(Blade(b), Endo::from_entries(a, es));
        }
        m
    })
}

fn arb_triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    (prop_oneof![Just(2usize), Just(3), Just(4)], 1usize..=2)
        .prop_flat_map(|(q, a)| (arb_mv(q, a), arb_mv(q, a), arb_mv(q, a)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clifford_associative((u, v, w) in arb_triple()) {
        prop_assert_eq!(u.clifford(&v).clifford(&w), u.clifford(&v.clifford(&w)));
    }

    #[test]
    fn wedge_associative((u, v, w) in arb_triple()) {
        prop_assert_eq!(u.wedge(&v).wedge(&w), u.wedge(&v.wedge(&w)));
    }

    #[test]
    fn contraction_is_antiderivation((u, v, _w) in arb_triple(), k in 1usize..=2, deg in 0usize..=2) {
        let u = u.grade_project(deg);
        let lhs = u.wedge(&v).contract(k).unwrap();
        let s = if deg % 2 == 0 { 1 } else { -1 };
        let rhs = &u.contract(k).unwrap().wedge(&v)
            + &u.wedge(&v.contract(k).unwrap()).scale(&Scalar::int(s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_is_involution((u, _v, _w) in arb_triple()) {
        prop_assert_eq!(u.mv_adjoint().mv_adjoint(), u);
    }
}
