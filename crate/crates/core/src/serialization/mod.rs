//! Canonical JSON for every public data type.
//!
//! Scalars are strings (`"n/d"`, `"n/di"`, `"n/d+n/di"`), blades are lists of
//! 1-based frame indices, matrices are rows of scalars. Object keys come out
//! sorted and term lists in the engine's canonical order, so equal values
//! serialize to equal bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::asymptotic::AsymptoticSymbol;
use crate::error::{Error, Result};
use crate::exterior_clifford::{Blade, Endo, Multivector, Scalar};
use crate::geometry_model::{KTaylor, ModelGeometry};
use crate::quantization_oracle::{Calibration, DiffOp, Generator, Letter};
use crate::symbol_poly::{Dims, Monomial, PolySymbol, VarId};

fn perr(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn scalar_to_string(s: &Scalar) -> String {
    s.to_string()
}

pub fn scalar_from_str(s: &str) -> Result<Scalar> {
    s.parse()
}

fn scalars(v: &[String]) -> Result<Vec<Scalar>> {
    v.iter().map(|s| scalar_from_str(s)).collect()
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn matrix_out(e: &Endo) -> Vec<Vec<String>> {
    e.rows().iter().map(|r| strings(r)).collect()
}

fn matrix_in(rows: &[Vec<String>], a: usize) -> Result<Endo> {
    let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| scalars(r)).collect::<Result<_>>()?;
    let e = Endo::from_rows(rows).ok_or_else(|| perr("matrix is not square"))?;
    if e.rank() != a {
        return Err(Error::DimensionMismatch(format!("matrix of rank {} where {a} expected", e.rank())));
    }
    Ok(e)
}

fn blade_in(idx: &[usize], q: usize) -> Result<(i8, Blade)> {
    if let Some(k) = idx.iter().find(|&&k| k == 0 || k > q) {
        return Err(Error::IndexOutOfRange(format!("blade index {k} outside 1..={q}")));
    }
    Blade::from_indices(idx).ok_or_else(|| perr(format!("repeated index in blade {idx:?}")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MvTerm {
    blade: Vec<usize>,
    matrix: Vec<Vec<String>>,
}

/// `{q, a, terms: [{blade, matrix}]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MvDoc {
    q: usize,
    a: usize,
    terms: Vec<MvTerm>,
}

fn mv_terms(m: &Multivector) -> Vec<MvTerm> {
    m.terms().iter().map(|(b, e)| MvTerm { blade: b.indices(), matrix: matrix_out(e) }).collect()
}

fn mv_from_terms(q: usize, a: usize, terms: &[MvTerm]) -> Result<Multivector> {
    let mut out = Multivector::zero(q, a);
    for t in terms {
        let (s, b) = blade_in(&t.blade, q)?;
        out.add_term(b, matrix_in(&t.matrix, a)?.scale(&Scalar::int(s as i64)));
    }
    Ok(out)
}

pub fn multivector_to_json(m: &Multivector) -> Value {
    serde_json::to_value(MvDoc { q: m.q(), a: m.rank(), terms: mv_terms(m) }).expect("serializable")
}

pub fn multivector_from_json(v: &Value) -> Result<Multivector> {
    let d: MvDoc = serde_json::from_value(v.clone()).map_err(perr)?;
    mv_from_terms(d.q, d.a, &d.terms)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymTerm {
    exponents: BTreeMap<String, u8>,
    blade: Vec<usize>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymDoc {
    n: usize,
    q: usize,
    a: usize,
    #[serde(default)]
    primed: bool,
    terms: Vec<SymTerm>,
}

fn sym_doc(p: &PolySymbol) -> SymDoc {
    let d = p.dims();
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let exponents = m.support(d).into_iter().map(|(v, e)| (v.to_string(), e)).collect();
        for (b, e) in c.terms() {
            terms.push(SymTerm { exponents: BTreeMap::clone(&exponents), blade: b.indices(), matrix: matrix_out(e) });
        }
    }
    SymDoc { n: d.n, q: d.q, a: d.a, primed: p.is_primed(), terms }
}

fn sym_from_doc(doc: &SymDoc) -> Result<PolySymbol> {
    let d = Dims::new(doc.n, doc.q, doc.a)?;
    let mut out = if doc.primed { PolySymbol::zero_primed(d) } else { PolySymbol::zero(d) };
    for t in &doc.terms {
        let exps: Vec<(VarId, u8)> =
            t.exponents.iter().map(|(k, e)| Ok((k.parse::<VarId>()?, *e))).collect::<Result<_>>()?;
        if !doc.primed && exps.iter().any(|(v, e)| v.is_primed() && *e > 0) {
            return Err(perr("primed variable in an unprimed symbol"));
        }
        let m = Monomial::from_exponents(d, &exps)?;
        let (s, b) = blade_in(&t.blade, d.q)?;
        let c = Multivector::from_term(d.q, d.a, b, matrix_in(&t.matrix, d.a)?.scale(&Scalar::int(s as i64)));
        out.add_term(m, c);
    }
    Ok(out)
}

pub fn symbol_to_json(p: &PolySymbol) -> Value {
    serde_json::to_value(sym_doc(p)).expect("serializable")
}

pub fn symbol_from_json(v: &Value) -> Result<PolySymbol> {
    let d: SymDoc = serde_json::from_value(v.clone()).map_err(perr)?;
    sym_from_doc(&d)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    indices: Vec<usize>,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatEntry {
    indices: Vec<usize>,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TaylorDoc {
    d_omega_nu: Vec<Entry>,
    d_omega_e: Vec<MatEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeomDoc {
    n: usize,
    p_leaf: usize,
    a: usize,
    #[serde(default)]
    omega_nu: Vec<Entry>,
    #[serde(default)]
    omega_e: Vec<MatEntry>,
    #[serde(default)]
    mu: Vec<Entry>,
    #[serde(default)]
    theta: Vec<Entry>,
    #[serde(default)]
    mu_deriv: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k_taylor: Option<TaylorDoc>,
}

/// Sparse geometry: only nonzero entries, every stored component listed.
pub fn geometry_to_json(g: &ModelGeometry) -> Value {
    let (n, q) = (g.n(), g.q());
    let e = |indices: Vec<usize>, v: &Scalar| Entry { indices, value: v.to_string() };
    let mut doc = GeomDoc {
        n,
        p_leaf: g.p_leaf(),
        a: g.rank(),
        omega_nu: vec![],
        omega_e: vec![],
        mu: vec![],
        theta: vec![],
        mu_deriv: vec![],
        k_taylor: None,
    };
    for k in 1..=q {
        for l in 1..=q {
            for i in 1..=n {
                for j in 1..=n {
                    let v = g.omega_nu(k, l, i, j);
                    if !v.is_zero() {
                        doc.omega_nu.push(e(vec![k, l, i, j], v));
                    }
                }
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let m = g.omega_e(i, j);
            if !m.is_zero() {
                doc.omega_e.push(MatEntry { indices: vec![i, j], matrix: matrix_out(m) });
            }
        }
    }
    for (k, v) in g.mu().iter().enumerate() {
        if !v.is_zero() {
            doc.mu.push(e(vec![k + 1], v));
        }
    }
    for m in 1..=n {
        for j in 1..=q {
            for k in 1..=q {
                let v = g.theta(m, j, k);
                if !v.is_zero() {
                    doc.theta.push(e(vec![m, j, k], v));
                }
            }
        }
    }
    for i in 1..=q {
        for k in 1..=q {
            let v = g.mu_deriv(i, k);
            if !v.is_zero() {
                doc.mu_deriv.push(e(vec![i, k], v));
            }
        }
    }
    if let Some(t) = g.k_taylor() {
        let mut td = TaylorDoc { d_omega_nu: vec![], d_omega_e: vec![] };
        for (x, v) in t.d_omega_nu.iter().enumerate() {
            if !v.is_zero() {
                let (rest, j) = (x / n, x % n);
                let (rest, i) = (rest / n, rest % n);
                let (rest, l) = (rest / q, rest % q);
                let (m, k) = (rest / q, rest % q);
                td.d_omega_nu.push(e(vec![m + 1, k + 1, l + 1, i + 1, j + 1], v));
            }
        }
        for (x, mtx) in t.d_omega_e.iter().enumerate() {
            if !mtx.is_zero() {
                td.d_omega_e.push(MatEntry { indices: vec![x / (n * n) + 1, x / n % n + 1, x % n + 1], matrix: matrix_out(mtx) });
            }
        }
        doc.k_taylor = Some(td);
    }
    serde_json::to_value(doc).expect("serializable")
}

fn check_range(what: &str, idx: &[usize], ranges: &[usize]) -> Result<()> {
    if idx.len() != ranges.len() {
        return Err(perr(format!("{what} needs {} indices, got {}", ranges.len(), idx.len())));
    }
    for (k, r) in idx.iter().zip(ranges) {
        if *k == 0 || k > r {
            return Err(Error::IndexOutOfRange(format!("{what} index {k} outside 1..={r}")));
        }
    }
    Ok(())
}

/// Load a geometry. `strict` stores entries as given and rejects any
/// antisymmetry violation; otherwise each entry also sets its antisymmetric
/// partners, later entries winning.
pub fn geometry_from_json(v: &Value, strict: bool) -> Result<ModelGeometry> {
    let doc: GeomDoc = serde_json::from_value(v.clone()).map_err(perr)?;
    let (n, a) = (doc.n, doc.a);
    let mut g = ModelGeometry::flat(n, doc.p_leaf, a)?;
    let q = g.q();
    for e in &doc.omega_nu {
        check_range("omega_nu", &e.indices, &[q, q, n, n])?;
        let [k, l, i, j] = [e.indices[0], e.indices[1], e.indices[2], e.indices[3]];
        let v = scalar_from_str(&e.value)?;
        if strict {
            g.set_omega_nu_raw(k, l, i, j, v);
        } else {
            g.set_omega_nu(k, l, i, j, v);
        }
    }
    for e in &doc.omega_e {
        check_range("omega_e", &e.indices, &[n, n])?;
        let m = matrix_in(&e.matrix, a)?;
        if strict {
            g.set_omega_e_raw(e.indices[0], e.indices[1], m);
        } else {
            g.set_omega_e(e.indices[0], e.indices[1], m);
        }
    }
    for e in &doc.mu {
        check_range("mu", &e.indices, &[q])?;
        g.set_mu(e.indices[0], scalar_from_str(&e.value)?);
    }
    for e in &doc.theta {
        check_range("theta", &e.indices, &[n, q, q])?;
        let v = scalar_from_str(&e.value)?;
        if strict {
            g.set_theta_raw(e.indices[0], e.indices[1], e.indices[2], v);
        } else {
            g.set_theta(e.indices[0], e.indices[1], e.indices[2], v);
        }
    }
    for e in &doc.mu_deriv {
        check_range("mu_deriv", &e.indices, &[q, q])?;
        g.set_mu_deriv(e.indices[0], e.indices[1], scalar_from_str(&e.value)?);
    }
    if let Some(td) = &doc.k_taylor {
        let mut t = KTaylor { d_omega_nu: vec![Scalar::zero(); n * q * q * n * n], d_omega_e: vec![Endo::zero(a); n * n * n] };
        for e in &td.d_omega_nu {
            check_range("k_taylor.d_omega_nu", &e.indices, &[n, q, q, n, n])?;
            let x: Vec<usize> = e.indices.iter().map(|k| k - 1).collect();
            let v = scalar_from_str(&e.value)?;
            let at = |k: usize, l: usize, i: usize, j: usize| ((((x[0] * q + k) * q + l) * n + i) * n) + j;
            if !strict {
                t.d_omega_nu[at(x[2], x[1], x[3], x[4])] = -&v;
                t.d_omega_nu[at(x[1], x[2], x[4], x[3])] = -&v;
                t.d_omega_nu[at(x[2], x[1], x[4], x[3])] = v.clone();
            }
            t.d_omega_nu[at(x[1], x[2], x[3], x[4])] = v;
        }
        for e in &td.d_omega_e {
            check_range("k_taylor.d_omega_e", &e.indices, &[n, n, n])?;
            let (m, i, j) = (e.indices[0] - 1, e.indices[1] - 1, e.indices[2] - 1);
            let mtx = matrix_in(&e.matrix, a)?;
            if !strict {
                t.d_omega_e[(m * n + j) * n + i] = mtx.neg();
            }
            t.d_omega_e[(m * n + i) * n + j] = mtx;
        }
        g.set_k_taylor(Some(t));
    }
    g.ensure_valid()?;
    Ok(g)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LetterDoc {
    Nabla { direction: Vec<String>, leafwise: bool },
    Mul { mul: Vec<MvTerm> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpTerm {
    coeff: Vec<MvTerm>,
    word: Vec<LetterDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpDoc {
    n: usize,
    q: usize,
    a: usize,
    terms: Vec<OpTerm>,
}

pub fn diffop_to_json(op: &DiffOp) -> Value {
    let d = op.dims();
    let terms = op
        .terms()
        .iter()
        .map(|(c, w)| OpTerm {
            coeff: mv_terms(c),
            word: w
                .iter()
                .map(|l| match l {
                    Letter::Nabla(g) => LetterDoc::Nabla { direction: strings(&g.direction), leafwise: g.leafwise },
                    Letter::Mul(m) => LetterDoc::Mul { mul: mv_terms(m) },
                })
                .collect(),
        })
        .collect();
    serde_json::to_value(OpDoc { n: d.n, q: d.q, a: d.a, terms }).expect("serializable")
}

pub fn diffop_from_json(v: &Value) -> Result<DiffOp> {
    let doc: OpDoc = serde_json::from_value(v.clone()).map_err(perr)?;
    let d = Dims::new(doc.n, doc.q, doc.a)?;
    let mut op = DiffOp::zero(d);
    for t in &doc.terms {
        let coeff = mv_from_terms(d.q, d.a, &t.coeff)?;
        let word = t
            .word
            .iter()
            .map(|l| match l {
                LetterDoc::Nabla { direction, leafwise } => {
                    Ok(Letter::Nabla(Generator { direction: scalars(direction)?, leafwise: *leafwise }))
                }
                LetterDoc::Mul { mul } => Ok(Letter::Mul(mv_from_terms(d.q, d.a, mul)?)),
            })
            .collect::<Result<Vec<_>>>()?;
        op.push(coeff, word);
    }
    op.check()?;
    Ok(op)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CalDoc {
    c_gamma: String,
    c_omega: String,
}

pub fn calibration_to_json(c: &Calibration) -> Value {
    serde_json::to_value(CalDoc { c_gamma: c.c_gamma.to_string(), c_omega: c.c_omega.to_string() }).expect("serializable")
}

pub fn calibration_from_json(v: &Value) -> Result<Calibration> {
    let d: CalDoc = serde_json::from_value(v.clone()).map_err(perr)?;
    Ok(Calibration::new(scalar_from_str(&d.c_gamma)?, scalar_from_str(&d.c_omega)?))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AsyDoc {
    base_grading: usize,
    coeffs: Vec<SymDoc>,
}

pub fn asymptotic_to_json(s: &AsymptoticSymbol) -> Value {
    serde_json::to_value(AsyDoc { base_grading: s.base_grading, coeffs: s.coeffs.iter().map(sym_doc).collect() })
        .expect("serializable")
}

pub fn asymptotic_from_json(v: &Value) -> Result<AsymptoticSymbol> {
    let d: AsyDoc = serde_json::from_value(v.clone()).map_err(perr)?;
    let coeffs = d.coeffs.iter().map(sym_from_doc).collect::<Result<Vec<_>>>()?;
    if let Some(w) = coeffs.windows(2).find(|w| w[0].dims() != w[1].dims()) {
        return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", w[0].dims(), w[1].dims())));
    }
    AsymptoticSymbol::new(d.base_grading, coeffs)
}

/// Pretty-printed canonical text of a JSON value, newline-terminated.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(perr)
}

#[cfg(test)]
mod tests;
