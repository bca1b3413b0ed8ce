use super::*;
use crate::asymptotic::AsymptoticSymbol;
use crate::geometry_model::{random_geometry, RandomFlags};
use crate::random::Sampler;
use serde_json::json;

#[test]
fn scalar_text() {
    for (s, t) in [("2", "2/1"), ("-1/2i", "-1/2i"), ("1-i", "1/1-1/1i"), ("3/6+2/4i", "1/2+1/2i")] {
        let v = scalar_from_str(s).unwrap();
        assert_eq!(scalar_to_string(&v), t);
        assert_eq!(scalar_from_str(t).unwrap(), v);
    }
    assert!(scalar_from_str("1/0").is_err());
}

#[test]
fn multivector_round_trip() {
    let m = &Multivector::blade(4, 2, &[2, 1]) + &Multivector::scalar(4, 2, Scalar::i());
    let v = multivector_to_json(&m);
    assert_eq!(v["terms"][0]["blade"], json!([]));
    assert_eq!(v["terms"][1]["blade"], json!([1, 2]));
    assert_eq!(v["terms"][1]["matrix"], json!([["-1/1", "0/1"], ["0/1", "-1/1"]]));
    assert_eq!(multivector_from_json(&v).unwrap(), m);
    let bad = json!({"q": 2, "a": 1, "terms": [{"blade": [3], "matrix": [["1"]]}]});
    assert!(matches!(multivector_from_json(&bad), Err(Error::IndexOutOfRange(_))));
    let rep = json!({"q": 2, "a": 1, "terms": [{"blade": [1, 1], "matrix": [["1"]]}]});
    assert!(multivector_from_json(&rep).is_err());
}

#[test]
fn symbol_round_trip_and_reordering() {
    let d = Dims::new(5, 2, 2).unwrap();
    let mut s = Sampler::new(7);
    for g in 0..5 {
        let p = s.homogeneous(d, g, 3);
        let v = symbol_to_json(&p);
        assert_eq!(symbol_from_json(&v).unwrap(), p);
        assert_eq!(to_canonical_string(&v), to_canonical_string(&symbol_to_json(&symbol_from_json(&v).unwrap())));
    }
    let v = json!({"n": 3, "q": 2, "a": 1, "terms": [
        {"exponents": {"xi1": 1, "sigma3": 2}, "blade": [2, 1], "matrix": [["1/2"]]}
    ]});
    let p = symbol_from_json(&v).unwrap();
    let back = symbol_to_json(&p);
    assert_eq!(back["terms"][0]["blade"], json!([1, 2]));
    assert_eq!(back["terms"][0]["matrix"], json!([["-1/2"]]));
    assert_eq!(back["terms"][0]["exponents"], json!({"sigma3": 2, "xi1": 1}));
    let primed = json!({"n": 3, "q": 2, "a": 1, "terms": [{"exponents": {"xi1'": 1}, "blade": [], "matrix": [["1"]]}]});
    assert!(symbol_from_json(&primed).is_err());
    let leaf = json!({"n": 3, "q": 2, "a": 1, "terms": [{"exponents": {"sigma1": 1}, "blade": [], "matrix": [["1"]]}]});
    assert!(symbol_from_json(&leaf).is_err());
}

#[test]
fn geometry_round_trip() {
    let flags = RandomFlags { mu: true, theta: true, mu_deriv: true, k_taylor: true, ..Default::default() };
    for seed in 0..4 {
        let g = random_geometry(seed, 5, 1, 2, flags).unwrap();
        let v = geometry_to_json(&g);
        assert_eq!(geometry_from_json(&v, true).unwrap(), g);
        assert_eq!(geometry_from_json(&v, false).unwrap(), g);
    }
}

#[test]
fn geometry_strictness() {
    let one = json!({"n": 4, "p_leaf": 2, "a": 1, "omega_nu": [{"indices": [1, 2, 1, 2], "value": "1"}]});
    assert!(matches!(geometry_from_json(&one, true), Err(Error::InvalidGeometry(_))));
    let g = geometry_from_json(&one, false).unwrap();
    assert_eq!(g.omega_nu(2, 1, 1, 2), &Scalar::int(-1));
    assert_eq!(g.omega_nu(2, 1, 2, 1), &Scalar::int(1));
    let zero = json!({"n": 4, "p_leaf": 2, "a": 1});
    assert!(geometry_from_json(&zero, true).unwrap().is_flat());
    let odd = json!({"n": 4, "p_leaf": 1, "a": 1});
    assert!(geometry_from_json(&odd, true).is_err());
    let range = json!({"n": 4, "p_leaf": 2, "a": 1, "mu": [{"indices": [3], "value": "1"}]});
    assert!(matches!(geometry_from_json(&range, false), Err(Error::IndexOutOfRange(_))));
    let unknown = json!({"n": 4, "p_leaf": 2, "a": 1, "curvature": []});
    assert!(matches!(geometry_from_json(&unknown, false), Err(Error::Parse(_))));
}

#[test]
fn diffop_round_trip() {
    let d = Dims::new(4, 2, 1).unwrap();
    let mut op = DiffOp::nablas(d, vec![Generator::coord(4, 1), Generator::coord_leafwise(d, 3)]);
    op.push(Multivector::generator(2, 1, 2), vec![Letter::Mul(Multivector::blade(2, 1, &[1, 2])), Letter::Nabla(Generator::coord(4, 2))]);
    let v = diffop_to_json(&op);
    assert_eq!(v["terms"][0]["word"][1]["leafwise"], json!(true));
    assert!(v["terms"][1]["word"][0].get("mul").is_some());
    assert_eq!(diffop_from_json(&v).unwrap(), op);
    let bad = json!({"n": 4, "q": 2, "a": 1, "terms": [{"coeff": [{"blade": [], "matrix": [["1"]]}], "word": [{"direction": ["1", "0", "0", "0"], "leafwise": true}]}]});
    assert!(diffop_from_json(&bad).is_err());
}

#[test]
fn calibration_and_asymptotic_round_trip() {
    let c = Calibration::new(Scalar::ratio(1, 2), Scalar::int(2));
    let v = calibration_to_json(&c);
    assert_eq!(v, json!({"c_gamma": "1/2", "c_omega": "2/1"}));
    assert_eq!(calibration_from_json(&v).unwrap(), c);

    let d = Dims::new(4, 2, 1).unwrap();
    let mut s = Sampler::new(1);
    let a = AsymptoticSymbol::new(3, vec![s.homogeneous(d, 3, 2), s.homogeneous(d, 2, 1)]).unwrap();
    let v = asymptotic_to_json(&a);
    assert_eq!(asymptotic_from_json(&v).unwrap(), a);
    let mut bad = v.clone();
    bad["base_grading"] = json!(1);
    assert!(asymptotic_from_json(&bad).is_err());
}
