//! JSON form of truncated series. Rationals are `"p/q"` strings; reading a
//! document back yields the identical in-memory series.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticeBasis;
use crate::rational::{format_q, parse_q, Q};
use crate::series::logseries::{LogSeries, Truncation};
use crate::series::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogMonomialDoc {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    /// Gale coordinates.
    pub u: Vec<i64>,
    /// `v + Bu`.
    pub exponent: Vec<String>,
    pub log_poly: Vec<LogMonomialDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncationDoc {
    pub weight_cap: String,
    pub radius: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StartingMonomialDoc {
    pub exponent: Vec<String>,
    /// Powers of `log x_1, …, log x_n`.
    pub log_exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    pub v: Vec<String>,
    /// Columns of the kernel basis `B`.
    pub basis: Vec<Vec<i64>>,
    pub w: Vec<String>,
    /// `b^(k)`; log symbol `k` is `log x^{b^(k)}`.
    pub log_symbols: Vec<Vec<i64>>,
    pub truncation: TruncationDoc,
    pub warnings: Vec<String>,
    /// Derived; ignored when reading.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub starting_monomial: Option<StartingMonomialDoc>,
    pub terms: Vec<TermDoc>,
}

fn strings(xs: &[Q]) -> Vec<String> {
    xs.iter().map(format_q).collect()
}

fn parse_strings(xs: &[String]) -> Result<Vec<Q>> {
    xs.iter().map(|s| parse_q(s)).collect()
}

pub fn poly_to_doc(p: &Poly) -> Vec<LogMonomialDoc> {
    p.terms()
        .iter()
        .map(|(e, c)| LogMonomialDoc {
            exponents: e.clone(),
            coefficient: format_q(c),
        })
        .collect()
}

pub fn series_to_doc(s: &LogSeries) -> SeriesDoc {
    SeriesDoc {
        v: strings(&s.v),
        basis: s.basis.columns().to_vec(),
        w: strings(&s.w),
        log_symbols: s.bindings.clone(),
        truncation: TruncationDoc {
            weight_cap: format_q(&s.truncation.weight_cap),
            radius: s.truncation.radius,
        },
        warnings: s.warnings.clone(),
        starting_monomial: s.starting_monomial().map(|m| StartingMonomialDoc {
            exponent: strings(&m.exponent),
            log_exponents: m.log_exponents,
        }),
        terms: s
            .terms
            .iter()
            .map(|(x, p)| TermDoc {
                u: x.clone(),
                exponent: strings(&s.exponent(x)),
                log_poly: poly_to_doc(p),
            })
            .collect(),
    }
}

pub fn series_from_doc(d: &SeriesDoc) -> Result<LogSeries> {
    let v = parse_strings(&d.v)?;
    let n = v.len();
    let basis = LatticeBasis::from_echelon_columns(n, d.basis.clone())
        .ok_or_else(|| Error::Parse("basis columns are not in echelon form".into()))?;
    let w = parse_strings(&d.w)?;
    if w.len() != n {
        return Err(Error::Parse(format!(
            "w has length {}, expected {n}",
            w.len()
        )));
    }
    let l = d.log_symbols.len();
    for b in &d.log_symbols {
        if b.len() != n {
            return Err(Error::Parse(format!(
                "log symbol {b:?} has length {}, expected {n}",
                b.len()
            )));
        }
    }
    let truncation = Truncation {
        weight_cap: parse_q(&d.truncation.weight_cap)?,
        radius: d.truncation.radius,
    };
    let mut s = LogSeries::empty(v, basis, w, d.log_symbols.clone(), truncation);
    s.warnings = d.warnings.clone();
    for t in &d.terms {
        if t.u.len() != s.basis.rank() {
            return Err(Error::Parse(format!(
                "term u = {:?} has the wrong length",
                t.u
            )));
        }
        if parse_strings(&t.exponent)? != s.exponent(&t.u) {
            return Err(Error::Parse(format!(
                "term u = {:?}: exponent is not v + Bu",
                t.u
            )));
        }
        if s.terms.contains_key(&t.u) {
            return Err(Error::Parse(format!("duplicate term u = {:?}", t.u)));
        }
        let mut p = Poly::zero(l);
        for m in &t.log_poly {
            if m.exponents.len() != l {
                return Err(Error::Parse(format!(
                    "log monomial {:?} has the wrong length",
                    m.exponents
                )));
            }
            p.add_term(m.exponents.clone(), parse_q(&m.coefficient)?);
        }
        s.add_term(t.u.clone(), p);
    }
    Ok(s)
}

pub fn series_to_json(s: &LogSeries) -> String {
    serde_json::to_string_pretty(&series_to_doc(s)).expect("series documents always serialize")
}

pub fn series_from_json(text: &str) -> Result<LogSeries> {
    let d: SeriesDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    series_from_doc(&d)
}

/// Reads a bare series document or a `{"solutions": [{"series": …}]}`
/// wrapper as written by the construction commands.
pub fn series_list_from_json(text: &str) -> Result<Vec<LogSeries>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let docs: Vec<serde_json::Value> = match value.get("solutions") {
        Some(serde_json::Value::Array(items)) => items
            .iter()
            .map(|s| {
                s.get("series")
                    .cloned()
                    .ok_or_else(|| Error::Parse("solution entry without a series".into()))
            })
            .collect::<Result<_>>()?,
        Some(_) => return Err(Error::Parse("solutions must be an array".into())),
        None => vec![value],
    };
    docs.into_iter()
        .map(|d| {
            let doc: SeriesDoc =
                serde_json::from_value(d).map_err(|e| Error::Parse(e.to_string()))?;
            series_from_doc(&doc)
        })
        .collect()
}
