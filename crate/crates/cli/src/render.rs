//! JSON documents and plain-text reports for each subcommand. Keys are
//! sorted by serde_json's map, so output bytes depend only on the input.

use std::fmt::Write as _;

use gkz_core::arrangement::{Face, Hyperplane};
use gkz_core::exponents::{
    format_support, Certificate, MethodParams, MinimalSupport, NsClassification, Support,
};
use gkz_core::io::{poly_to_doc, series_to_doc};
use gkz_core::problem::Prepared;
use gkz_core::rational::{display_q, format_q, Q};
use gkz_core::series::{Certificate as ConditionCertificate, LogSeries, Poly};
use gkz_core::toric::{Binomial, MonomialDisplay};
use gkz_core::verifier::{OperatorResidual, ResidualReport};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn qs(xs: &[Q]) -> Vec<String> {
    xs.iter().map(format_q).collect()
}

fn vec_text(xs: &[Q]) -> String {
    let parts: Vec<String> = xs.iter().map(display_q).collect();
    format!("({})", parts.join(","))
}

fn ints_text(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn one_based(s: &Support) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn supports(ss: &[Support]) -> Vec<Vec<usize>> {
    ss.iter().map(one_based).collect()
}

fn support_list_text(ss: &[Support]) -> String {
    let parts: Vec<String> = ss.iter().map(format_support).collect();
    format!("{{{}}}", parts.join(", "))
}

fn binomial(b: &Binomial) -> Value {
    json!({ "lead": b.lead, "tail": b.tail, "vector": b.direction(), "display": b.to_string() })
}

pub fn lattice(p: &Prepared) -> Value {
    let k = p.basis.rank();
    json!({
        "A": p.problem.a.rows(),
        "rank": p.problem.a.nrows(),
        "kernel_rank": k,
        "basis": p.basis.columns(),
        "gale_covectors": (0..p.basis.ambient_dim()).map(|i| p.basis.covector(i)).collect::<Vec<_>>(),
    })
}

pub fn lattice_text(p: &Prepared) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kernel rank {}", p.basis.rank());
    for (i, c) in p.basis.columns().iter().enumerate() {
        let _ = writeln!(out, "b{} = {}", i + 1, ints_text(c));
    }
    for i in 0..p.basis.ambient_dim() {
        let _ = writeln!(out, "g{} = {}", i + 1, ints_text(&p.basis.covector(i)));
    }
    out
}

pub fn toric(p: &Prepared) -> Value {
    json!({ "generators": p.toric.iter().map(binomial).collect::<Vec<_>>() })
}

pub fn toric_text(p: &Prepared) -> String {
    p.toric.iter().map(|b| format!("{b}\n")).collect()
}

pub fn groebner(p: &Prepared) -> Value {
    json!({
        "weight": qs(&p.problem.w),
        "elements": p.gb.elements.iter().map(binomial).collect::<Vec<_>>(),
        "spair_ties": p.gb.spair_ties,
        "initial_ideal": p.initial.generators,
        "cone": {
            "generators": p.cone.generators(),
            "facets": p.cone.facets(),
            "saturated": p.cone.is_saturated(),
        },
    })
}

pub fn groebner_text(p: &Prepared) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "weight {}", vec_text(&p.problem.w));
    for b in &p.gb.elements {
        let _ = writeln!(out, "  {b}");
    }
    let gens: Vec<String> = p
        .initial
        .generators
        .iter()
        .map(|m| MonomialDisplay(m).to_string())
        .collect();
    let _ = writeln!(out, "initial ideal <{}>", gens.join(", "));
    let cone: Vec<String> = p.cone.generators().iter().map(|g| ints_text(g)).collect();
    let _ = writeln!(out, "cone generators (Gale) {}", cone.join(" "));
    out
}

pub fn standard_pairs(p: &Prepared) -> Value {
    json!({
        "initial_ideal": p.initial.generators,
        "pairs": p.pairs.iter().map(|sp| json!({
            "a": sp.a,
            "sigma": one_based(&sp.sigma),
            "display": sp.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn standard_pairs_text(p: &Prepared) -> String {
    p.pairs.iter().map(|sp| format!("{sp}\n")).collect()
}

fn minimal(flag: &MinimalSupport) -> Value {
    match flag {
        MinimalSupport::No { witness } => json!({ "flag": flag.tag(), "witness": witness }),
        MinimalSupport::AtRadius(r) => json!({ "flag": flag.tag(), "radius": r }),
        MinimalSupport::Certified => json!({ "flag": flag.tag() }),
    }
}

pub fn fake_exponents(p: &Prepared, flags: &[MinimalSupport], least: &[bool]) -> Value {
    let items: Vec<Value> = p
        .exponents
        .iter()
        .zip(flags)
        .zip(least)
        .enumerate()
        .map(|(i, ((e, f), &l))| {
            json!({
                "index": i + 1,
                "v": qs(&e.v),
                "sources": e.sources.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "nsupp": one_based(&gkz_core::exponents::nsupp(&e.v)),
                "minimal_support": minimal(f),
                "least_weight_in_class": l,
            })
        })
        .collect();
    json!({ "exponents": items })
}

pub fn fake_exponents_text(p: &Prepared, flags: &[MinimalSupport], least: &[bool]) -> String {
    let mut out = String::new();
    for (i, ((e, f), l)) in p.exponents.iter().zip(flags).zip(least).enumerate() {
        let src: Vec<String> = e.sources.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(
            out,
            "{}. v = {}  from {}  minimal support: {}{}",
            i + 1,
            vec_text(&e.v),
            src.join(" "),
            f.tag(),
            if *l {
                ""
            } else {
                "  (not least weight in class)"
            }
        );
    }
    out
}

pub fn params(m: &MethodParams) -> Value {
    json!({ "m": m.m, "M": m.big_m, "I0": one_based(&m.i0), "K": one_based(&m.k) })
}

pub fn classes(cls: &NsClassification, bound: Option<&BigInt>) -> Value {
    json!({
        "v": qs(&cls.v),
        "radius": cls.radius,
        "NS": supports(&cls.ns),
        "NS_c": supports(&cls.ns_c),
        "unresolved": supports(&cls.unresolved),
        "fully_certified": cls.fully_certified(),
        "parameters": params(&cls.params),
        "multiplicity_bound": bound.map(|b| b.to_string()),
        "classes": cls.classes.iter().map(|c| json!({
            "support": one_based(&c.support),
            "witness": c.witness,
            "violation": c.violation,
            "certificate": match c.certificate {
                Certificate::Certified => "certified",
                Certificate::RadiusLimited => "radius-limited",
            },
        })).collect::<Vec<_>>(),
    })
}

pub fn classes_text(cls: &NsClassification, bound: Option<&BigInt>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "v = {}", vec_text(&cls.v));
    let _ = writeln!(out, "NS   = {}", support_list_text(&cls.ns));
    let _ = writeln!(out, "NS^c = {}", support_list_text(&cls.ns_c));
    let p = &cls.params;
    let big_m = p.big_m.map_or("inf".to_string(), |m| m.to_string());
    let _ = writeln!(
        out,
        "m = {}, M = {big_m}, I0 = {}, K = {}",
        p.m,
        format_support(&p.i0),
        format_support(&p.k)
    );
    if let Some(b) = bound {
        let _ = writeln!(out, "multiplicity bound {b}");
    }
    if !cls.fully_certified() {
        let _ = writeln!(
            out,
            "some classes are certified only inside radius {}",
            cls.radius
        );
    }
    out
}

pub fn certificate(c: &ConditionCertificate) -> Value {
    Value::Array(
        c.values
            .iter()
            .map(|x| json!({ "I": one_based(&x.i), "J": one_based(&x.j), "value": format_q(&x.value) }))
            .collect(),
    )
}

pub fn solutions(v: &[Q], meta: Value, sols: &[(Value, LogSeries)]) -> Value {
    let items: Vec<Value> = sols
        .iter()
        .map(|(m, s)| {
            let mut obj = match m {
                Value::Object(o) => o.clone(),
                _ => serde_json::Map::new(),
            };
            obj.insert("log_degree".into(), json!(s.max_log_degree()));
            obj.insert(
                "series".into(),
                serde_json::to_value(series_to_doc(s)).expect("serializable"),
            );
            Value::Object(obj)
        })
        .collect();
    let mut obj = match meta {
        Value::Object(o) => o,
        _ => serde_json::Map::new(),
    };
    obj.insert("exponent".into(), json!(qs(v)));
    obj.insert("solutions".into(), Value::Array(items));
    Value::Object(obj)
}

fn poly_text(p: &Poly, symbol: &str) -> String {
    let parts: Vec<String> = p
        .terms()
        .iter()
        .rev()
        .map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("{symbol}{}", i + 1)
                    } else {
                        format!("{symbol}{}^{k}", i + 1)
                    }
                })
                .collect();
            if mono.is_empty() {
                display_q(c)
            } else {
                format!("{}*{}", display_q(c), mono.join("*"))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn solutions_text(sols: &[(Value, LogSeries)]) -> String {
    let mut out = String::new();
    for (meta, s) in sols {
        let label = match meta {
            Value::Object(o) if !o.is_empty() => {
                let items: Vec<String> = o
                    .iter()
                    .filter(|(_, v)| !v.is_null())
                    .map(|(k, v)| format!("{k} {v}"))
                    .collect();
                items.join(", ")
            }
            _ => "series".into(),
        };
        let _ = writeln!(
            out,
            "# {label}: {} terms, log degree {}",
            s.len(),
            s.max_log_degree()
        );
        for (k, b) in s.bindings.iter().enumerate() {
            let _ = writeln!(out, "#   l{} = log x^{}", k + 1, ints_text(b));
        }
        for w in &s.warnings {
            let _ = writeln!(out, "#   warning: {w}");
        }
        for (x, p) in &s.terms {
            let _ = writeln!(
                out,
                "x^{}  [{}]",
                vec_text(&s.exponent(x)),
                poly_text(p, "l")
            );
        }
    }
    out
}

fn residual(r: &OperatorResidual) -> Value {
    json!({
        "operator": r.operator,
        "pass": r.pass(),
        "certified": r.certified,
        "excluded": r.excluded,
        "witness": r.witness.as_ref().map(|(e, p)| json!({ "offset": e, "log_poly": poly_doc(p) })),
    })
}

fn poly_doc(p: &Poly) -> Value {
    serde_json::to_value(poly_to_doc(p)).expect("serializable")
}

pub fn reports(rs: &[ResidualReport]) -> Value {
    json!({
        "pass": rs.iter().all(ResidualReport::pass),
        "series": rs.iter().enumerate().map(|(i, r)| json!({
            "index": i + 1,
            "pass": r.pass(),
            "operators": r.binomials.iter().chain(&r.euler).map(residual).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn reports_text(rs: &[ResidualReport]) -> String {
    let mut out = String::new();
    for (i, r) in rs.iter().enumerate() {
        let _ = writeln!(
            out,
            "series {}: {}",
            i + 1,
            if r.pass() { "pass" } else { "FAIL" }
        );
        for op in r.binomials.iter().chain(&r.euler) {
            let _ = write!(
                out,
                "  {}: {} ({} certified, {} excluded)",
                op.operator,
                if op.pass() { "ok" } else { "nonzero" },
                op.certified,
                op.excluded
            );
            if let Some((e, p)) = &op.witness {
                let _ = write!(out, " at offset {}: {}", ints_text(e), poly_text(p, "l"));
            }
            out.push('\n');
        }
    }
    out
}

pub fn arrangement(v: &[Q], hs: &[Hyperplane], faces: &[Face]) -> Value {
    json!({
        "exponent": qs(v),
        "hyperplanes": hs.iter().map(|h| json!({
            "index": h.index + 1,
            "normal": h.normal,
            "offset": format_q(&h.offset),
        })).collect::<Vec<_>>(),
        "faces": faces.iter().map(|f| json!({
            "support": one_based(&f.support),
            "vertices": f.vertices.iter().map(|p| qs(p)).collect::<Vec<_>>(),
            "lattice_points": f.lattice_points,
        })).collect::<Vec<_>>(),
    })
}

pub fn arrangement_text(hs: &[Hyperplane], faces: &[Face]) -> String {
    let mut out = String::new();
    for h in hs {
        let _ = writeln!(
            out,
            "H{}: {} . x + {} = 0",
            h.index + 1,
            ints_text(&h.normal),
            display_q(&h.offset)
        );
    }
    for f in faces {
        let _ = writeln!(
            out,
            "face {} at {} ({} lattice points)",
            format_support(&f.support),
            vec_text(&f.centroid()),
            f.lattice_points
        );
    }
    out
}

/// All `p ∈ N^l` with `|p| <= bound`, by total degree then reverse lex.
pub fn multi_degrees(l: usize, bound: u32) -> Vec<Vec<u32>> {
    fn rec(l: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == l {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(l, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=bound {
        rec(l, d, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_are_ordered() {
        assert_eq!(
            multi_degrees(2, 2),
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2]
            ]
        );
        assert_eq!(multi_degrees(1, 1), vec![vec![0], vec![1]]);
    }
}
