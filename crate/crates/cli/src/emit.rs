//! JSON, LaTeX and plain-text rendering.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};
use simac::{CharPoly, CharSeries, EPoly, Weight};

use crate::config::Format;

fn coeff_string(c: &BigRational) -> String {
    c.to_string()
}

/// `[{"coeff":"1","q":0,"wt":[1]}, ...]` in (q, weight) order.
pub fn poly_json(p: &CharPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({"coeff": coeff_string(c), "q": m.q, "wt": m.wt.0}))
            .collect(),
    )
}

pub fn series_json(s: &CharSeries) -> Value {
    json!({"watermark": s.watermark(), "terms": poly_json(&s.certified())})
}

pub fn epoly_json(e: &EPoly) -> Value {
    let terms: Vec<Value> = e
        .coeffs
        .iter()
        .map(|(w, c)| {
            let (num, den) = c.parts();
            json!({"num": num, "den": den, "wt": w.0})
        })
        .collect();
    json!({"gamma": e.gamma.0, "dagger": e.conjugated, "terms": terms})
}

fn latex_weight(w: &Weight) -> String {
    let parts: Vec<String> = w.0.iter().map(|c| c.to_string()).collect();
    format!("e^{{({})}}", parts.join(","))
}

fn latex_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Terms sorted by q-degree, then weight.
pub fn poly_latex(p: &CharPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let a = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        if !a.is_one() {
            parts.push(latex_coeff(&a));
        }
        match m.q {
            0 => {}
            1 => parts.push("q".into()),
            n => parts.push(format!("q^{{{n}}}")),
        }
        if !m.wt.is_zero() {
            parts.push(latex_weight(&m.wt));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        out.push_str(&parts.join(" "));
    }
    out
}

pub fn series_latex(s: &CharSeries) -> String {
    format!("{} + O(q^{{{}}})", poly_latex(&s.certified()), s.watermark() + 1)
}

pub fn epoly_latex(e: &EPoly) -> String {
    if e.coeffs.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = e
        .coeffs
        .iter()
        .map(|(w, c)| {
            let (num, den) = c.parts();
            let coeff = if den == "1" { format!("({num})") } else { format!("\\frac{{{num}}}{{{den}}}") };
            format!("{coeff} {}", latex_weight(w))
        })
        .collect();
    parts.join(" + ")
}

pub fn poly(p: &CharPoly, f: Format) -> String {
    match f {
        Format::Json => poly_json(p).to_string(),
        Format::Latex => poly_latex(p),
        Format::Plain => p.to_string(),
    }
}

pub fn series(s: &CharSeries, f: Format) -> String {
    match f {
        Format::Json => series_json(s).to_string(),
        Format::Latex => series_latex(s),
        Format::Plain => s.to_string(),
    }
}

pub fn epoly(e: &EPoly, f: Format) -> String {
    match f {
        Format::Json => epoly_json(e).to_string(),
        Format::Latex => epoly_latex(e),
        Format::Plain => e.to_string(),
    }
}
