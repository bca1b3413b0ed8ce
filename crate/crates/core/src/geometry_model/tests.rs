use super::*;

fn e(n: usize, i: usize) -> Vec<Scalar> {
    basis_vector(n, i)
}

#[test]
fn flat_is_valid_and_riemannian() {
    let g = ModelGeometry::flat(4, 2, 1).unwrap();
    assert!(g.validate().is_empty());
    assert!(g.is_riemannian_bott());
    let f = g.omega_nu_form(&e(4, 1), &e(4, 2), &Scalar::one()).unwrap();
    assert!(f.is_zero());
}

#[test]
fn missing_partners_are_reported() {
    let mut g = ModelGeometry::flat(4, 2, 1).unwrap();
    g.set_omega_nu_raw(1, 2, 1, 2, Scalar::one());
    assert!(!g.validate().is_empty());
    assert!(g.omega_nu_form(&e(4, 1), &e(4, 2), &Scalar::one()).is_err());
    g.set_omega_nu(1, 2, 1, 2, Scalar::one());
    assert!(g.validate().is_empty());
}

#[test]
fn odd_codimension_is_reported() {
    let g = ModelGeometry::flat(3, 2, 1).unwrap();
    assert!(g.validate().iter().any(|v| v.contains("odd")));
    assert!(random_geometry(1, 3, 2, 1, RandomFlags::default()).is_err());
}

#[test]
fn single_component_form() {
    let mut g = ModelGeometry::flat(2, 0, 1).unwrap();
    g.set_omega_nu(1, 2, 1, 2, Scalar::one());
    let c = Scalar::int(3);
    let f = g.omega_nu_form(&e(2, 1), &e(2, 2), &c).unwrap();
    assert_eq!(f, Multivector::blade(2, 1, &[1, 2]).scale(&c));
}

#[test]
fn leafwise_component_breaks_riemannian() {
    let mut g = ModelGeometry::flat(4, 2, 1).unwrap();
    g.set_omega_nu(1, 2, 1, 2, Scalar::one());
    assert!(g.is_riemannian_bott());
    g.set_omega_nu(1, 2, 3, 1, Scalar::one());
    assert!(!g.is_riemannian_bott());
}

#[test]
fn random_geometries_valid_and_deterministic() {
    let all = RandomFlags { mu: true, theta: true, mu_deriv: true, k_taylor: true, ..Default::default() };
    for seed in 0..8 {
        for (n, p) in [(4, 2), (6, 2), (4, 0), (5, 1)] {
            let g = random_geometry(seed, n, p, 2, all).unwrap();
            assert!(g.validate().is_empty(), "{:?}", g.validate());
            assert_eq!(g, random_geometry(seed, n, p, 2, all).unwrap());
            let r = random_geometry(seed, n, p, 1, RandomFlags { riemannian: true, ..all }).unwrap();
            assert!(r.is_riemannian_bott());
        }
    }
}

#[test]
fn flat_leafwise_flag() {
    let g = random_geometry(3, 6, 2, 1, RandomFlags { flat_leafwise: true, ..Default::default() }).unwrap();
    assert!(g.validate().is_empty());
    assert!(g.omega_nu_form(&e(6, 5), &e(6, 6), &Scalar::one()).unwrap().is_zero());
}

#[test]
fn bianchi_tensor_identities() {
    for seed in 0..5 {
        let g = random_geometry(seed, 6, 2, 1, RandomFlags { bianchi: true, ..Default::default() }).unwrap();
        assert!(g.validate().is_empty());
        assert!(g.is_riemannian_bott());
        let q = g.q();
        for a in 1..=q {
            for b in 1..=q {
                for c in 1..=q {
                    for d in 1..=q {
                        assert_eq!(g.omega_nu(a, b, c, d), g.omega_nu(c, d, a, b));
                        let cyc = &(g.omega_nu(a, b, c, d) + g.omega_nu(a, c, d, b)) + g.omega_nu(a, d, b, c);
                        assert!(cyc.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn form_is_bilinear_and_antisymmetric() {
    let g = random_geometry(11, 5, 1, 1, RandomFlags::default()).unwrap();
    let x: Vec<Scalar> = [1, -2, 0, 3, 1].iter().map(|&v| Scalar::int(v)).collect();
    let y: Vec<Scalar> = [0, 1, 1, -1, 2].iter().map(|&v| Scalar::int(v)).collect();
    let c = Scalar::one();
    let xy = g.omega_nu_form(&x, &y, &c).unwrap();
    assert_eq!(xy, -&g.omega_nu_form(&y, &x, &c).unwrap());
    assert!(g.omega_nu_form(&x, &x, &c).unwrap().is_zero());
    let x2: Vec<Scalar> = x.iter().map(|v| v.scale_int(2)).collect();
    assert_eq!(g.omega_nu_form(&x2, &y, &c).unwrap(), xy.scale(&Scalar::int(2)));
}
