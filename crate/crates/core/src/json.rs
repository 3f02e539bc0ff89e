//! JSON views of the domain objects, used by the command-line front end
//! and by the on-disk representation format. Scalars appear verbatim in
//! their canonical text form.

use serde_json::{json, Value};

use crate::lweights::{AMonomial, EllMonomial, LimitQChar, NormalizedQChar, QCharacter};
use crate::repmodules::Representation;
use crate::superlinalg::GradedMatrix;
use crate::youngcomb::{GTPattern, Tableau, Weight};

pub fn matrix_json(m: &GradedMatrix) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .map(|((r, c), v)| json!([r, c, v.to_string()]))
        .collect();
    json!({
        "dims": [m.rows(), m.cols()],
        "parity": m.parity().map(|p| p.to_string()),
        "entries": entries,
    })
}

pub fn representation_json(rep: &Representation) -> Value {
    let dim = rep.generator_dim();
    let mut s = serde_json::Map::new();
    let mut t = serde_json::Map::new();
    for i in 1..=dim {
        for j in 1..=dim {
            if !rep.s(i, j).is_zero() {
                s.insert(format!("s[{i},{j}]"), matrix_json(rep.s(i, j)));
            }
            if let Some(tm) = rep.t(i, j) {
                if !tm.is_zero() {
                    t.insert(format!("t[{i},{j}]"), matrix_json(tm));
                }
            }
        }
    }
    json!({
        "m": rep.m,
        "n": rep.n,
        "dim": rep.dim(),
        "parities": rep.space.parities().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "weights": rep.space.weights(),
        "s": Value::Object(s),
        "t": if rep.has_t() { Value::Object(t) } else { Value::Null },
    })
}

pub fn weight_json(w: &Weight) -> Value {
    json!(w.coords())
}

pub fn tableau_json(t: &Tableau) -> Value {
    json!({
        "shape": t.diagram().rows(),
        "entries": t.entries(),
    })
}

pub fn gt_pattern_json(p: &GTPattern) -> Value {
    json!(p.levels.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>())
}

pub fn ell_monomial_json(m: &EllMonomial) -> Value {
    let terms: Vec<Value> = m
        .exps()
        .iter()
        .map(|((i, p), e)| json!([i, p.base.to_string(), p.qexp, e]))
        .collect();
    json!(terms)
}

pub fn a_monomial_json(m: &AMonomial) -> Value {
    let terms: Vec<Value> = m
        .exps()
        .iter()
        .map(|((i, p), e)| json!([i, p.base.to_string(), p.qexp, e]))
        .collect();
    json!(terms)
}

pub fn qcharacter_json(chi: &QCharacter) -> Value {
    let terms: Vec<Value> = chi
        .terms()
        .iter()
        .map(|(mono, mult)| {
            json!({
                "multiplicity": mult,
                "monomial": ell_monomial_json(mono),
            })
        })
        .collect();
    json!({
        "m": chi.m,
        "n": chi.n,
        "symbols": "X",
        "terms": terms,
    })
}

pub fn normalized_qchar_json(chi: &NormalizedQChar) -> Value {
    let terms: Vec<Value> = chi
        .terms
        .iter()
        .map(|(mono, mult)| {
            json!({
                "multiplicity": mult,
                "monomial": a_monomial_json(mono),
            })
        })
        .collect();
    json!({
        "m": chi.m,
        "n": chi.n,
        "symbols": "A",
        "terms": terms,
    })
}

pub fn limit_qchar_json(lim: &LimitQChar) -> Value {
    let terms: Vec<Value> = lim
        .terms
        .iter()
        .map(|(tab, mono)| {
            json!({
                "window": tableau_json(&tab.window),
                "depth": tab.k,
                "monomial": a_monomial_json(mono),
            })
        })
        .collect();
    json!({
        "r": lim.r,
        "k_max": lim.k_max,
        "stable": lim.stable,
        "symbols": "A",
        "terms": terms,
    })
}
