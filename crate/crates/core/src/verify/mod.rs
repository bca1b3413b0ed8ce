//! The identity battery behind `folsym verify-suite` and the acceptance
//! target. Every check compares two independently computed exact values.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::asymptotic::{compose_asymptotic, rescale_check, td_vs_t2d2_report, AsymptoticSymbol};
use crate::composition::{a0, a0_riemannian, ak, compose_full, selector_term, BidiffSelector};
use crate::dirac::{dirac_square_oracle_check, kappa_eighth_check};
use crate::error::Result;
use crate::exterior_clifford::{contraction_sign, contraction_sum, Blade, Endo, Multivector, Scalar};
use crate::geometry_model::{random_geometry, ModelGeometry, RandomFlags};
use crate::quantization_oracle::{
    calibrate, calibration_family, reordered_power_operator, mixed_power_top, Calibration, DiffOp, Generator, Letter, Model,
};
use crate::random::Sampler;
use crate::serialization::{geometry_to_json, symbol_to_json};
use crate::symbol_poly::{Dims, Monomial, PolySymbol};

mod clifford_oracle;

/// Case counts. `full()` follows the acceptance sizes; `reduced()` is the
/// quick configuration used for determinism runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sizes {
    pub associativity_triples: usize,
    pub inversion_max_grading: usize,
    pub lemma_geometries: usize,
    pub lemma_max_power: usize,
    pub central_triples: usize,
    pub central_max_grading: usize,
    pub riemannian_geometries: usize,
    pub kappa_geometries: usize,
    pub dirac_square_geometries: usize,
    pub asymptotic_cases: usize,
}

impl Sizes {
    pub fn full() -> Sizes {
        Sizes {
            associativity_triples: 200,
            inversion_max_grading: 4,
            lemma_geometries: 20,
            lemma_max_power: 4,
            central_triples: 100,
            central_max_grading: 4,
            riemannian_geometries: 50,
            kappa_geometries: 20,
            dirac_square_geometries: 20,
            asymptotic_cases: 50,
        }
    }

    pub fn reduced() -> Sizes {
        Sizes {
            associativity_triples: 20,
            inversion_max_grading: 2,
            lemma_geometries: 2,
            lemma_max_power: 2,
            central_triples: 6,
            central_max_grading: 2,
            riemannian_geometries: 4,
            kappa_geometries: 3,
            dirac_square_geometries: 3,
            asymptotic_cases: 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub sizes: Sizes,
}

/// Result of one criterion. `elapsed` is kept out of the report so that the
/// report is a function of the configuration alone.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    pub counterexample: Option<Value>,
    pub elapsed: Duration,
}

pub const CRITERIA: [&str; 10] = [
    "clifford suite",
    "calibration uniqueness",
    "oracle inversion",
    "mixed powers and reordering",
    "composition leading symbol",
    "pure-form example",
    "riemannian reduction",
    "kappa/8 worked example",
    "dirac square oracle check",
    "asymptotic layer",
];

#[derive(Default)]
struct Tally {
    cases: usize,
    failure: Option<(String, Value)>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> (String, Value)) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }
}

fn cal() -> Calibration {
    Calibration::new(Scalar::ratio(1, 2), Scalar::int(2))
}

fn bundle(seed: u64, g: &ModelGeometry, symbols: &[&PolySymbol]) -> Value {
    json!({
        "seed": seed,
        "geometry": geometry_to_json(g),
        "symbols": symbols.iter().map(|p| symbol_to_json(p)).collect::<Vec<_>>(),
    })
}

fn mix(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k)
}

/// Shapes `(n, p_leaf, a)` with `q ∈ {2, 4}`, `n ≤ 6`, `a ∈ {1, 2}`.
const SHAPES: [(usize, usize, usize); 6] = [(4, 2, 1), (4, 2, 2), (3, 1, 1), (5, 1, 2), (6, 2, 1), (5, 3, 2)];

fn clifford_suite(cfg: &Config, t: &mut Tally) -> String {
    for q in [2, 4] {
        for a in [1, 2] {
            for j in 1..=q {
                for k in 1..=q {
                    let (fj, fk) = (Multivector::generator(q, a, j), Multivector::generator(q, a, k));
                    let s = &fj.clifford(&fk) + &fk.clifford(&fj);
                    let want = Multivector::scalar(q, a, Scalar::int(if j == k { -2 } else { 0 }));
                    t.check(s == want, || (format!("generator relation q={q} j={j} k={k}"), json!(null)));
                }
            }
        }
    }
    let mut s = Sampler::new(cfg.seed);
    for c in 0..cfg.sizes.associativity_triples {
        let (q, a) = ([2, 4][c % 2], 1 + (c / 2) % 2);
        let (u, v, w) = (s.multivector(q, a, 3), s.multivector(q, a, 3), s.multivector(q, a, 3));
        let ok = u.clifford(&v).clifford(&w) == u.clifford(&v.clifford(&w));
        t.check(ok, || (format!("associativity triple {c}"), json!([format!("{u:?}"), format!("{v:?}"), format!("{w:?}")])));
    }
    for x in 0u16..16 {
        for y in 0u16..16 {
            let (bx, by) = (Blade(x), Blade(y));
            let u = Multivector::from_term(4, 1, bx, Endo::identity(1));
            let v = Multivector::from_term(4, 1, by, Endo::identity(1));
            let prod = u.clifford(&v);
            t.check(prod == clifford_oracle::product(&u, &v), || (format!("recursion {bx:?}{by:?}"), json!(null)));
            let top = bx.degree() + by.degree();
            t.check(prod.grade_project(top) == u.wedge(&v), || (format!("top grade {bx:?}{by:?}"), json!(null)));
            for r in 0..=top / 2 {
                let want = contraction_sum(&u, &v, r).scale(&Scalar::int(contraction_sign(r, bx.degree())));
                t.check(prod.grade_project(top - 2 * r) == want, || (format!("contraction r={r} {bx:?}{by:?}"), json!(null)));
            }
        }
    }
    format!("{} random triples, all 256 blade pairs at q=4", cfg.sizes.associativity_triples)
}

fn calibration(cfg: &Config, t: &mut Tally) -> Result<String> {
    let family = calibration_family(cfg.seed);
    let q2 = family.iter().filter(|g| g.q() == 2).count();
    t.check(family.len() >= 5 && q2 > 0 && q2 < family.len(), || ("family shape".into(), json!(null)));
    let fmt = |v: &[(Scalar, Scalar)]| v.iter().map(|(a, b)| format!("({a}, {b})")).collect::<Vec<_>>().join(" ");
    let (c, report) = match calibrate(&family) {
        Ok(x) => x,
        Err(e) => {
            t.check(false, || (e.to_string(), json!(null)));
            return Ok(String::new());
        }
    };
    let stated = &report.after_reordering;
    t.check(stated.len() == 1, || {
        (
            format!("{} pairs satisfy the curvature and m=l=1 constraints: {}", stated.len(), fmt(stated)),
            json!({ "seed": cfg.seed }),
        )
    });
    Ok(format!(
        "{} geometries; curvature: {}; +reordering: {}; reversed order: {}; +composition: {}; calibrated ({}, {})",
        report.geometries,
        report.after_curvature.len(),
        report.after_reordering.len(),
        report.after_curvature_reversed.len(),
        report.after_composition.len(),
        c.c_gamma,
        c.c_omega
    ))
}

/// Monomials in the unprimed variables of degree `≤ k`.
fn monomials(d: Dims, k: usize) -> Vec<Monomial> {
    let vars = d.variables();
    let mut out = vec![Monomial::one(d)];
    let mut layer = vec![(Monomial::one(d), 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (m, start) in &layer {
            for (vi, v) in vars.iter().enumerate().skip(*start) {
                let mm = m.mul(&Monomial::var(d, *v).expect("variable"));
                out.push(mm.clone());
                next.push((mm, vi));
            }
        }
        layer = next;
    }
    out
}

fn inversion(cfg: &Config, t: &mut Tally) -> Result<String> {
    let kmax = cfg.sizes.inversion_max_grading;
    let mut symbols = 0;
    for (c, &(n, p)) in [(3usize, 1usize), (5, 1)].iter().enumerate() {
        for a in [1, 2] {
            let seed = mix(cfg.seed, (c * 2 + a) as u64);
            let g = random_geometry(seed, n, p, a, RandomFlags::default())?;
            let m = Model::new(&g, cal())?;
            let d = g.dims();
            let e = if a == 1 { Endo::identity(1) } else { Endo::from_rows(vec![vec![Scalar::one(), Scalar::int(2)], vec![Scalar::i(), Scalar::int(-1)]]).unwrap() };
            for r in 0..=d.q.min(kmax) {
                for mask in 0u16..(1 << d.q) {
                    let b = Blade(mask);
                    if b.degree() != r {
                        continue;
                    }
                    let h = Multivector::from_term(d.q, a, b, e.clone());
                    for mono in monomials(d, kmax - r) {
                        symbols += 1;
                        let sym = PolySymbol::from_term(d, mono.clone(), h.clone());
                        let back = m.symbol_of(&m.quantize(&sym)?)?;
                        t.check(back == sym, || ("symbol_of(quantize(p)) != p".into(), bundle(seed, &g, &[&sym])));
                        let mut w = m.basis_word(&mono);
                        w.reverse();
                        let mut ops = vec![DiffOp::term(d, h.clone(), w.clone())];
                        if !w.is_empty() {
                            let mut w2 = w.clone();
                            w2.insert(w.len() / 2, Letter::Mul(&Multivector::generator(d.q, a, 1) + &Multivector::one(d.q, a)));
                            ops.push(DiffOp::term(d, h.clone(), w2));
                        }
                        for op in ops {
                            let s = m.symbol_of(&op)?;
                            let ok = m.ops_equivalent(&m.quantize(&s)?, &op)?;
                            t.check(ok, || ("quantize(symbol_of(P)) != P".into(), bundle(seed, &g, &[&s])));
                        }
                        if t.done() {
                            return Ok(String::new());
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{symbols} monomial symbols of grading <= {kmax} at q in {{2,4}}, a in {{1,2}}; both directions"))
}

fn lemmas(cfg: &Config, t: &mut Tally) -> Result<String> {
    let shapes = [(4, 2, 1), (3, 1, 2), (5, 1, 1), (6, 2, 1), (5, 3, 1)];
    let mut s = Sampler::new(mix(cfg.seed, 4));
    let top = cfg.sizes.lemma_max_power;
    for c in 0..cfg.sizes.lemma_geometries {
        let (n, p, a) = shapes[c % shapes.len()];
        let seed = mix(cfg.seed, 400 + c as u64);
        let g = random_geometry(seed, n, p, a, RandomFlags::default())?;
        let m = Model::new(&g, cal())?;
        let d = g.dims();
        let (x, y) = (s.direction(d, false), s.direction(d, true));
        for mm in 0..=top {
            for l in 0..=top {
                let mut word = vec![Letter::Nabla(Generator::global(x.clone())); mm];
                word.extend(vec![Letter::Nabla(Generator::leafwise(d.q, y.clone())?); l]);
                let sym = m.symbol_of(&DiffOp::term(d, Multivector::one(d.q, d.a), word))?;
                let want = mixed_power_top(&m, &x, &y, mm, l);
                let ok = sym.grading() == Some(mm + l) && sym.grade_component(mm + l) == want;
                t.check(ok, || (format!("mixed power m={mm} l={l}"), bundle(seed, &g, &[&sym, &want])));
                let p = PolySymbol::pairing_xi(d, &x)
                    .pow_clifford(mm as u32)
                    .clifford_mul(&PolySymbol::pairing_sigma(d, &y).pow_clifford(l as u32));
                let rhs = m.symbol_of(&reordered_power_operator(&m, &x, &y, mm, l))?;
                let ok = rhs.grading() == Some(mm + l) && rhs.grade_component(mm + l) == p;
                t.check(ok, || (format!("reordering m={mm} l={l}"), bundle(seed, &g, &[&p, &rhs])));
            }
        }
    }
    Ok(format!("{} geometries, m,l <= {top}", cfg.sizes.lemma_geometries))
}

fn central(cfg: &Config, t: &mut Tally) -> Result<String> {
    let mut s = Sampler::new(mix(cfg.seed, 5));
    let gmax = cfg.sizes.central_max_grading;
    let mut riem = 0;
    for c in 0..cfg.sizes.central_triples {
        let (n, p, a) = SHAPES[c % SHAPES.len()];
        let seed = mix(cfg.seed, 500 + c as u64);
        let flags = RandomFlags { riemannian: c % 4 == 3, ..Default::default() };
        let g = random_geometry(seed, n, p, a, flags)?;
        riem += usize::from(flags.riemannian);
        let m = Model::new(&g, cal())?;
        let d = g.dims();
        let (gp, gq) = (s.below(gmax + 1), s.below(gmax + 1));
        let (pp, pq) = (s.profile(d, gp), s.profile(d, gq));
        let (x, y) = (s.bihomogeneous(d, pp, 2), s.bihomogeneous(d, pq, 2));
        let top = pp.grading() + pq.grading();
        let full = compose_full(&m, &x, &y)?;
        let lead = a0(&m, &x, &y)?;
        t.check(full.grade_component(top) == lead, || ("top grade != a0".into(), bundle(seed, &g, &[&x, &y])));
        t.check(full.grading().is_none_or(|h| h <= top), || ("grading above top".into(), bundle(seed, &g, &[&x, &y])));
        let mut sum = PolySymbol::zero(d);
        for k in 0..=top + 1 {
            let part = ak(&m, &x, &y, k)?;
            t.check(part.grading().is_none_or(|h| h == top - k.min(top)) && (k <= top || part.is_zero()), || {
                (format!("a_{k} not of grading top-{k}"), bundle(seed, &g, &[&x, &y]))
            });
            sum.add_assign(&part);
        }
        t.check(sum == full, || ("sum of a_k != composition".into(), bundle(seed, &g, &[&x, &y])));
        let (bm, bl) = (pp.r + pp.m + pq.r + pq.m, pp.l + pq.l);
        let mut bounds = true;
        for (mono, coeff) in full.terms() {
            let (xd, sd) = (mono.xi_degree(d), mono.sigma_degree(d));
            bounds &= sd <= bl && xd <= bm;
            if g.is_riemannian_bott() {
                bounds &= coeff.terms().keys().all(|b| b.degree() + xd <= bm);
            }
        }
        t.check(bounds, || ("bidegree bound".into(), bundle(seed, &g, &[&x, &y])));
        if t.done() {
            break;
        }
    }
    Ok(format!("{} triples ({riem} riemannian), gradings <= {gmax}", cfg.sizes.central_triples))
}

fn pure_forms(cfg: &Config, t: &mut Tally) -> Result<String> {
    let seed = mix(cfg.seed, 6);
    let g = random_geometry(seed, 6, 2, 1, RandomFlags::default())?;
    let m = Model::new(&g, cal())?;
    let d = g.dims();
    for x in 0u16..16 {
        for y in 0u16..16 {
            let u = Multivector::from_term(4, 1, Blade(x), Endo::identity(1));
            let v = Multivector::from_term(4, 1, Blade(y), Endo::identity(1));
            let (p, q) = (PolySymbol::constant(d, u.clone()), PolySymbol::constant(d, v.clone()));
            let oracle = clifford_oracle::product(&u, &v);
            let top = Blade(x).degree() + Blade(y).degree();
            t.check(a0(&m, &p, &q)? == PolySymbol::constant(d, u.wedge(&v)), || ("a0 != wedge".into(), bundle(seed, &g, &[&p, &q])));
            for k in 1..=top {
                let got = ak(&m, &p, &q, k)?;
                let want = if k % 2 == 1 {
                    Multivector::zero(4, 1)
                } else {
                    contraction_sum(&u, &v, k / 2).scale(&Scalar::int(contraction_sign(k / 2, Blade(x).degree())))
                };
                let ok = got == PolySymbol::constant(d, want) && got == PolySymbol::constant(d, oracle.grade_project(top - k));
                t.check(ok, || (format!("grade drop {k}"), bundle(seed, &g, &[&p, &q])));
            }
        }
    }
    Ok("256 blade pairs at q=4; drops 2 and 4 carry the single and double contractions".into())
}

fn riemannian(cfg: &Config, t: &mut Tally) -> Result<String> {
    let mut s = Sampler::new(mix(cfg.seed, 7));
    for c in 0..cfg.sizes.riemannian_geometries {
        let (n, p, a) = SHAPES[c % SHAPES.len()];
        let seed = mix(cfg.seed, 700 + c as u64);
        let g = random_geometry(seed, n, p, a, RandomFlags { riemannian: true, ..Default::default() })?;
        let m = Model::new(&g, cal())?;
        let d = g.dims();
        let (gx, gy) = (1 + s.below(3), 1 + s.below(3));
        let (x, y) = (s.homogeneous(d, gx, 2), s.homogeneous(d, gy, 2));
        t.check(a0_riemannian(&m, &x, &y)? == a0(&m, &x, &y)?, || ("a0_riemannian != a0".into(), bundle(seed, &g, &[&x, &y])));
        for sel in [BidiffSelector::XiSigmaP, BidiffSelector::SigmaXiP, BidiffSelector::SigmaSigmaP] {
            t.check(selector_term(&m, sel, &x, &y)?.is_zero(), || (format!("{sel} term nonzero"), bundle(seed, &g, &[&x, &y])));
        }
    }
    Ok(format!("{} riemannian geometries", cfg.sizes.riemannian_geometries))
}

fn kappa(cfg: &Config, t: &mut Tally) -> Result<String> {
    for c in 0..cfg.sizes.kappa_geometries {
        let (n, p, a) = SHAPES[c % SHAPES.len()];
        let seed = mix(cfg.seed, 800 + c as u64);
        let flags = RandomFlags { riemannian: true, mu: true, bianchi: c % 2 == 1, ..Default::default() };
        let g = random_geometry(seed, n, p, a, flags)?;
        let m = Model::new(&g, cal())?;
        let r = kappa_eighth_check(&m)?;
        t.check(r.passed(), || ("a0(D,D) mismatch".into(), bundle(seed, &g, &[&r.a0])));
    }
    Ok(format!("{} riemannian geometries with mean curvature", cfg.sizes.kappa_geometries))
}

fn dirac_square(cfg: &Config, t: &mut Tally) -> Result<String> {
    for c in 0..cfg.sizes.dirac_square_geometries {
        let (n, p, a) = SHAPES[c % SHAPES.len()];
        let seed = mix(cfg.seed, 900 + c as u64);
        let flags = RandomFlags { mu: true, riemannian: c % 3 == 2, bianchi: c % 3 == 2, ..Default::default() };
        let g = random_geometry(seed, n, p, a, flags)?;
        let m = Model::new(&g, cal())?;
        let r = dirac_square_oracle_check(&m)?;
        t.check(r.formula == r.oracle, || ("formula != oracle".into(), bundle(seed, &g, &[&r.formula, &r.oracle])));
        let gr: Vec<Option<usize>> = r.terms.iter().map(|t| t.grading).collect();
        let nu_ok = if flags.bianchi { matches!(gr[2], None | Some(0)) } else { gr[2].is_none_or(|h| h <= 4 && h % 2 == 0) };
        let mu_ok = if g.has_zero_mu() { gr[6].is_none() && gr[7].is_none() } else { gr[6] == Some(1) && gr[7] == Some(0) };
        let e_flat = (1..=g.q()).all(|j| (1..=g.q()).all(|k| g.omega_e(j, k).is_zero()));
        let e_ok = gr[3] == if e_flat { None } else { Some(2) };
        let ledger = r.ledger_ok && gr[0] == Some(2) && gr[1].is_none() && nu_ok && e_ok && mu_ok;
        t.check(ledger, || (format!("grading ledger {gr:?}"), bundle(seed, &g, &[])));
        // Brackets and the μ-derivative sit outside the oracle; their gradings alone.
        let flags = RandomFlags { theta: true, mu_deriv: true, ..flags };
        let h = random_geometry(seed, n, p, a, flags)?;
        let mh = Model::new(&h, cal())?;
        let terms = crate::dirac::dirac_square_terms(&mh);
        let six = terms[5].symbol.grade_components().into_keys().collect::<Vec<_>>();
        let mut trace = Scalar::zero();
        for i in 1..=h.q() {
            trace += h.mu_deriv(i, i);
        }
        let six_ok = six.iter().all(|k| *k == 0 || *k == 2) && six.contains(&0) == !trace.is_zero();
        t.check(matches!(terms[4].grading, None | Some(3)) && six_ok, || ("theta/mu_deriv ledger".into(), bundle(seed, &h, &[])));
    }
    Ok(format!("{} geometries with mu; theta and mu_deriv ledger on the same seeds", cfg.sizes.dirac_square_geometries))
}

fn asymptotic(cfg: &Config, t: &mut Tally) -> Result<String> {
    let mut s = Sampler::new(mix(cfg.seed, 10));
    for c in 0..cfg.sizes.asymptotic_cases {
        let (n, p, a) = SHAPES[c % SHAPES.len()];
        let seed = mix(cfg.seed, 1000 + c as u64);
        let g = random_geometry(seed, n, p, a, RandomFlags::default())?;
        let m = Model::new(&g, cal())?;
        let d = g.dims();
        let fam = |s: &mut Sampler| {
            let base = 1 + s.below(3);
            let len = 1 + s.below(3);
            let coeffs = (0..len).map(|k| if k > base { PolySymbol::zero(d) } else { s.homogeneous(d, base - k, 2) }).collect();
            AsymptoticSymbol::new(base, coeffs).expect("graded by construction")
        };
        let (x, y) = (fam(&mut s), fam(&mut s));
        let comp = compose_asymptotic(&m, &x, &y, Some(3))?;
        let ok = comp.leading_symbol(d) == a0(&m, &x.coeffs[0], &y.coeffs[0])? && comp.respects_grading();
        t.check(ok, || ("leading symbol != a0".into(), bundle(seed, &g, &[&x.coeffs[0], &y.coeffs[0]])));
        let mut r = PolySymbol::zero(d);
        for h in 0..=s.below(5) {
            r.add_assign(&s.homogeneous(d, h, 1));
        }
        t.check(rescale_check(&m, &r)?, || ("rescale round trip".into(), bundle(seed, &g, &[&r])));
    }
    for c in 0..4 {
        let seed = mix(cfg.seed, 1100 + c);
        let g = random_geometry(seed, 6, 2, 1, RandomFlags { riemannian: true, bianchi: true, mu: true, ..Default::default() })?;
        let m = Model::new(&g, cal())?;
        let (td, t2) = td_vs_t2d2_report(&m)?;
        t.check(!td.passes() && t2.passes(), || ("tD / t^2D^2 ledger".into(), bundle(seed, &g, &[])));
    }
    Ok(format!("{} asymptotic pairs and rescale round trips; 4 Dirac ledgers", cfg.sizes.asymptotic_cases))
}

/// Run one criterion, `1..=10`.
pub fn run_criterion(id: usize, cfg: &Config) -> Outcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let detail = match id {
        1 => Ok(clifford_suite(cfg, &mut t)),
        2 => calibration(cfg, &mut t),
        3 => inversion(cfg, &mut t),
        4 => lemmas(cfg, &mut t),
        5 => central(cfg, &mut t),
        6 => pure_forms(cfg, &mut t),
        7 => riemannian(cfg, &mut t),
        8 => kappa(cfg, &mut t),
        9 => dirac_square(cfg, &mut t),
        10 => asymptotic(cfg, &mut t),
        _ => panic!("criterion {id} out of range"),
    };
    let (detail, error) = match detail {
        Ok(s) => (s, None),
        Err(e) => (String::new(), Some(e.to_string())),
    };
    let (passed, detail, counterexample) = match (error, t.failure) {
        (Some(e), _) => (false, format!("error: {e}"), None),
        (None, Some((what, v))) => (false, format!("{what} ({detail})"), Some(v)),
        (None, None) => (true, detail, None),
    };
    Outcome { id, name: CRITERIA[id - 1], passed, cases: t.cases, detail, counterexample, elapsed: start.elapsed() }
}

pub fn run_suite(cfg: &Config) -> Vec<Outcome> {
    (1..=CRITERIA.len()).map(|id| run_criterion(id, cfg)).collect()
}

/// One line per criterion, then any counterexample bundles.
pub fn report_text(cfg: &Config, outcomes: &[Outcome]) -> String {
    let mut s = format!("verify-suite seed={}\n", cfg.seed);
    for o in outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("{mark} {:>2} {} [{} checks] {}\n", o.id, o.name, o.cases, o.detail));
    }
    for o in outcomes.iter().filter(|o| o.counterexample.is_some()) {
        s.push_str(&format!("counterexample {}: {}\n", o.id, o.counterexample.as_ref().unwrap()));
    }
    s
}

pub fn report_json(cfg: &Config, outcomes: &[Outcome]) -> Value {
    json!({
        "seed": cfg.seed,
        "criteria": outcomes.iter().map(|o| json!({
            "id": o.id,
            "name": o.name,
            "passed": o.passed,
            "checks": o.cases,
            "detail": o.detail,
            "counterexample": o.counterexample,
        })).collect::<Vec<_>>(),
    })
}

/// Per-criterion timings, for stderr.
pub fn timing_text(outcomes: &[Outcome]) -> String {
    outcomes.iter().map(|o| format!("criterion {:>2}: {:.3}s\n", o.id, o.elapsed.as_secs_f64())).collect()
}
