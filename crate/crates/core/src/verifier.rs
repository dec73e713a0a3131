//! Applies the toric and Euler operators of `H_A(β)` to a truncated series
//! and checks the residual exactly where truncation cannot interfere.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::lattice::IntegerMatrix;
use crate::rational::{q, Q};
use crate::series::logseries::LogSeries;
use crate::series::poly::Poly;
use crate::toric::Binomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricSystem {
    pub a: IntegerMatrix,
    pub beta: Vec<Q>,
    pub toric: Vec<Binomial>,
}

/// An operator applied to a series: integer offset `e` from `v` to the
/// log-polynomial coefficient of `x^{v+e}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorImage {
    pub nlogs: usize,
    pub terms: BTreeMap<Vec<i64>, Poly>,
}

impl OperatorImage {
    fn new(nlogs: usize) -> Self {
        OperatorImage {
            nlogs,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, key: Vec<i64>, p: Poly) {
        if p.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| Poly::zero(p.nvars()));
        slot.add_assign(&p);
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `∂_j(x^α P(ℓ)) = x^{α−e_j}(α_j P + Σ_k b^(k)_j ∂P/∂ℓ_k)`: the new
/// coefficient.
fn derive_coefficient(alpha_j: &Q, p: &Poly, j: usize, bindings: &[Vec<i64>]) -> Poly {
    let mut out = p.scale(alpha_j);
    for (k, b) in bindings.iter().enumerate() {
        if b[j] != 0 {
            out.add_assign(&p.derivative(k).scale(&q(b[j])));
        }
    }
    out
}

/// `∂^m` applied to every term.
pub fn apply_monomial(series: &LogSeries, m: &[u32]) -> OperatorImage {
    let mut out = OperatorImage::new(series.nlogs());
    for (x, p) in &series.terms {
        let u = series.offset(x);
        let mut alpha = series.exponent(x);
        let mut cur = p.clone();
        for (j, &mj) in m.iter().enumerate() {
            for _ in 0..mj {
                cur = derive_coefficient(&alpha[j], &cur, j, &series.bindings);
                alpha[j] -= q(1);
            }
        }
        let key: Vec<i64> = u.iter().zip(m).map(|(a, &b)| a - i64::from(b)).collect();
        out.add(key, cur);
    }
    out
}

pub fn apply_derivative(series: &LogSeries, j: usize) -> OperatorImage {
    let mut m = vec![0; series.v.len()];
    m[j] = 1;
    apply_monomial(series, &m)
}

/// `(∂^{lead} − ∂^{tail})` applied to the series.
pub fn apply_binomial(series: &LogSeries, g: &Binomial) -> OperatorImage {
    let mut out = apply_monomial(series, &g.lead);
    for (k, p) in apply_monomial(series, &g.tail).terms {
        out.add(k, p.scale(&q(-1)));
    }
    out
}

/// `Σ_j a_j θ_j − β_i` applied to the series, `θ_j = x_j ∂_j`.
pub fn apply_euler(series: &LogSeries, row: &[i64], beta_i: &Q) -> OperatorImage {
    let mut out = OperatorImage::new(series.nlogs());
    for (x, p) in &series.terms {
        let alpha = series.exponent(x);
        let mut acc = p.scale(&-beta_i.clone());
        for (j, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            acc.add_assign(&derive_coefficient(&alpha[j], p, j, &series.bindings).scale(&q(a)));
        }
        out.add(series.offset(x), acc);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorResidual {
    pub operator: String,
    /// Nonzero-or-checked image terms whose every source lies in the region.
    pub certified: usize,
    /// Image terms that may be affected by truncation.
    pub excluded: usize,
    /// First certified nonzero term: offset from `v` and coefficient.
    pub witness: Option<(Vec<i64>, Poly)>,
}

impl OperatorResidual {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    pub binomials: Vec<OperatorResidual>,
    pub euler: Vec<OperatorResidual>,
}

impl ResidualReport {
    pub fn pass(&self) -> bool {
        self.binomials
            .iter()
            .chain(&self.euler)
            .all(OperatorResidual::pass)
    }

    pub fn excluded(&self) -> usize {
        self.binomials.iter().map(|r| r.excluded).sum()
    }
}

/// Residual of a toric operator. An image term at `e` is trusted when both
/// sources `e + lead` and `e + tail` lie in the truncation region, since
/// then no dropped term of the full series can reach `e`.
pub fn binomial_residual(series: &LogSeries, g: &Binomial) -> OperatorResidual {
    let image = apply_binomial(series, g);
    let shift = |u: &[i64], m: &[u32], sign: i64| -> Vec<i64> {
        u.iter()
            .zip(m)
            .map(|(a, &b)| a + sign * i64::from(b))
            .collect()
    };
    // every offset some term reaches, including those where the image cancels
    let mut keys: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    for x in series.terms.keys() {
        let u = series.offset(x);
        keys.insert(shift(&u, &g.lead, -1));
        keys.insert(shift(&u, &g.tail, -1));
    }
    let mut certified = 0;
    let mut excluded = 0;
    let mut witness = None;
    for e in keys {
        let trusted = series.region_contains_offset(&shift(&e, &g.lead, 1))
            && series.region_contains_offset(&shift(&e, &g.tail, 1));
        if !trusted {
            excluded += 1;
            continue;
        }
        certified += 1;
        if witness.is_none() {
            if let Some(p) = image.terms.get(&e) {
                witness = Some((e, p.clone()));
            }
        }
    }
    OperatorResidual {
        operator: g.to_string(),
        certified,
        excluded,
        witness,
    }
}

/// Euler residuals must vanish on every term, truncation notwithstanding.
pub fn euler_residual(
    series: &LogSeries,
    row: &[i64],
    beta_i: &Q,
    name: String,
) -> OperatorResidual {
    let image = apply_euler(series, row, beta_i);
    let witness = image
        .terms
        .iter()
        .find(|(_, p)| p.terms().values().any(|c| !c.is_zero()))
        .map(|(e, p)| (e.clone(), p.clone()));
    OperatorResidual {
        operator: name,
        certified: series.len(),
        excluded: 0,
        witness,
    }
}

pub fn verify(series: &LogSeries, system: &HypergeometricSystem) -> ResidualReport {
    let binomials = system
        .toric
        .iter()
        .map(|g| binomial_residual(series, g))
        .collect();
    let euler = system
        .a
        .rows()
        .iter()
        .zip(&system.beta)
        .enumerate()
        .map(|(i, (row, b))| euler_residual(series, row, b, format!("euler {}", i + 1)))
        .collect();
    ResidualReport { binomials, euler }
}
