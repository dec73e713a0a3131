//! The series `φ_v` and the two perturbation methods: a single direction
//! `b` with prefactor `s^{|I_0|−m}`, and several directions `b^(1..l)` with
//! prefactor `Π_{i∈I_0∖K} L_i(s)`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponents::{
    classify_point, gale_box, minimal_negative_support, nsupp, MinimalSupport, NsClassification,
    Support,
};
use crate::rational::{factorial, q, Q};
use crate::series::coefficients::{a_u_expansion, phi_coefficient};
use crate::series::logseries::{LogSeries, Truncation};
use crate::series::poly::{Exps, Poly};
use crate::toric::Cone;

/// Default truncation weight.
pub const DEFAULT_WEIGHT_CAP: i64 = 20;

/// Enumeration region shared by every construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub weight_cap: Q,
    pub radius: i64,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            weight_cap: q(DEFAULT_WEIGHT_CAP),
            radius: crate::exponents::DEFAULT_RADIUS,
        }
    }
}

impl Window {
    fn truncation(&self) -> Truncation {
        Truncation {
            weight_cap: self.weight_cap.clone(),
            radius: self.radius,
        }
    }
}

/// Gale points of the window whose support lies in `supports`.
fn points_with_support(
    v: &[Q],
    cone: &Cone,
    supports: &[Support],
    window: &Window,
) -> Vec<(Vec<i64>, Vec<i64>)> {
    let basis = cone.basis();
    gale_box(basis.rank(), window.radius)
        .into_iter()
        .filter(|x| cone.weight(x) <= window.weight_cap)
        .filter(|x| supports.contains(&classify_point(v, basis, x)))
        .map(|x| {
            let u = basis.lift(&x);
            (x, u)
        })
        .collect()
}

fn empty_series(v: &[Q], cone: &Cone, bindings: Vec<Vec<i64>>, window: &Window) -> LogSeries {
    LogSeries::empty(
        v.to_vec(),
        cone.basis().clone(),
        cone.w().to_vec(),
        bindings,
        window.truncation(),
    )
}

/// `φ_v` over `{u ∈ C(w) : nsupp(v+u) = nsupp(v)}`; requires a minimal
/// negative support.
pub fn phi_series(v: &[Q], cone: &Cone, window: &Window) -> Result<LogSeries> {
    let flag = minimal_negative_support(v, cone.basis(), window.radius);
    if let MinimalSupport::No { witness } = &flag {
        return Err(Error::NotMinimal(cone.basis().lift(witness)));
    }
    let mut s = phi_series_unchecked(v, cone, window)?;
    if let MinimalSupport::AtRadius(r) = flag {
        s.warnings.push(format!(
            "minimal negative support checked only inside radius {r}"
        ));
    }
    Ok(s)
}

/// The same sum without the minimality precondition.
pub fn phi_series_unchecked(v: &[Q], cone: &Cone, window: &Window) -> Result<LogSeries> {
    let i0 = nsupp(v);
    let mut s = empty_series(v, cone, vec![], window);
    for (x, u) in points_with_support(v, cone, std::slice::from_ref(&i0), window) {
        if !cone.contains(&x) {
            continue;
        }
        let c = phi_coefficient(v, &u)
            .ok_or_else(|| Error::Internal(format!("vanishing denominator at {u:?}")))?;
        s.add_term(x, Poly::constant(0, c));
    }
    Ok(s)
}

fn multi_factorial(p: &[u32]) -> Q {
    p.iter().fold(q(1), |acc, &k| {
        acc * Q::from_integer(factorial(u64::from(k)))
    })
}

/// All `e <= p` componentwise.
fn lower_set(p: &[u32]) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for &pk in p {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..=pk).map(move |c| {
                    let mut f = e.clone();
                    f.push(c);
                    f
                })
            })
            .collect();
    }
    out
}

/// `p! · [s^p](T(s) · exp(Σ s_k ℓ_k))` as a polynomial in `ℓ`.
fn extract_coefficient(t: &Poly, p: &[u32]) -> Poly {
    let l = p.len();
    let pf = multi_factorial(p);
    let mut out = Poly::zero(l);
    for qe in lower_set(p) {
        let rest: Exps = p.iter().zip(&qe).map(|(a, b)| a - b).collect();
        let c = t.coeff(&rest);
        if c.is_zero() {
            continue;
        }
        out.add_term(qe.clone(), c * &pf / multi_factorial(&qe));
    }
    out
}

/// Which regularizing prefactor multiplies `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prefactor {
    /// `s^e` (single direction).
    Power(usize),
    /// `Π_{i} L_i(s)`.
    Forms(Support),
}

/// `p!·[s^p]` of `prefactor · Σ_{nsupp(v+u) ∈ NS} a_u(s) x^{v+sb+u}`.
pub fn perturbed_extraction(
    v: &[Q],
    bindings: &[Vec<i64>],
    cls: &NsClassification,
    cone: &Cone,
    window: &Window,
    prefactor: &Prefactor,
    p: &[u32],
) -> Result<LogSeries> {
    if p.len() != bindings.len() {
        return Err(Error::Shape(format!(
            "degree has {} entries for {} perturbation vectors",
            p.len(),
            bindings.len()
        )));
    }
    let degree: u32 = p.iter().sum();
    let mut s = empty_series(v, cone, bindings.to_vec(), window);
    for (x, u) in points_with_support(v, cone, &cls.ns, window) {
        if !cone.contains(&x) {
            s.warnings.push(format!(
                "term at {x:?} lies outside C(w); its class is radius-limited"
            ));
        }
        let e = a_u_expansion(v, bindings, &u, degree)?;
        let t = match prefactor {
            Prefactor::Power(k) => e.regularized_power(&bindings[0], *k)?,
            Prefactor::Forms(set) => e.regularized_forms(bindings, set)?,
        };
        s.add_term(x, extract_coefficient(&t, p));
    }
    if s.max_log_degree() > degree {
        return Err(Error::Internal(format!(
            "log degree {} exceeds the derivative order {degree}",
            s.max_log_degree()
        )));
    }
    if let Some(c) = cls.classes.iter().find(|c| {
        cls.ns.contains(&c.support) && c.certificate != crate::exponents::Certificate::Certified
    }) {
        s.warnings.push(format!(
            "class {} is certified only inside radius {}",
            crate::exponents::format_support(&c.support),
            cls.radius
        ));
    }
    Ok(s)
}

fn require_nonzero_on(b: &[i64], set: &Support) -> Result<()> {
    match set.iter().find(|&&i| b[i] == 0) {
        Some(&i) => Err(Error::PerturbationHitsZero(i)),
        None => Ok(()),
    }
}

/// `(∂_s^j s^{|I_0|−m} F_b)(0)` for `0 <= j < M − m`.
pub fn frobenius_method1(
    v: &[Q],
    b: &[i64],
    cls: &NsClassification,
    cone: &Cone,
    j: u32,
    window: &Window,
) -> Result<LogSeries> {
    let params = &cls.params;
    if let Some(big_m) = params.big_m {
        if j as usize + params.m >= big_m {
            return Err(Error::OrderOutOfRange(format!(
                "j = {j} needs j < M - m = {}",
                big_m - params.m
            )));
        }
    }
    method1_unchecked(v, b, cls, cone, j, window)
}

fn method1_unchecked(
    v: &[Q],
    b: &[i64],
    cls: &NsClassification,
    cone: &Cone,
    j: u32,
    window: &Window,
) -> Result<LogSeries> {
    require_nonzero_on(b, &cls.params.i0)?;
    let e = cls.params.i0.len() - cls.params.m;
    perturbed_extraction(
        v,
        &[b.to_vec()],
        cls,
        cone,
        window,
        &Prefactor::Power(e),
        &[j],
    )
}

/// Pairs `(I, J) ∈ NS × NS^c` with `|I ∪ J| = M`.
pub fn critical_pairs(cls: &NsClassification) -> Vec<(Support, Support)> {
    let Some(big_m) = cls.params.big_m else {
        return vec![];
    };
    let mut out = Vec::new();
    for i in &cls.ns {
        for j in &cls.ns_c {
            if i.union(j).count() == big_m {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    out
}

fn prod(b: &[i64], set: impl IntoIterator<Item = usize>) -> Q {
    set.into_iter().fold(q(1), |acc, i| acc * q(b[i]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionValue {
    pub i: Support,
    pub j: Support,
    pub value: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub values: Vec<ConditionValue>,
}

impl Certificate {
    pub fn all_zero(&self) -> bool {
        self.values.iter().all(|c| c.value.is_zero())
    }
}

/// `Σ_i b^(i)_{I∖I_0} b^(i)_{J∖I} / b^(i)_{I_0∖I}` for every critical pair.
pub fn method1_condition(bs: &[Vec<i64>], cls: &NsClassification) -> Result<Certificate> {
    let i0 = &cls.params.i0;
    for b in bs {
        require_nonzero_on(b, i0)?;
    }
    let values = critical_pairs(cls)
        .into_iter()
        .map(|(i, j)| {
            let value = bs.iter().fold(q(0), |acc, b| {
                let num = prod(b, i.difference(i0).copied()) * prod(b, j.difference(&i).copied());
                acc + num / prod(b, i0.difference(&i).copied())
            });
            ConditionValue { i, j, value }
        })
        .collect();
    Ok(Certificate { values })
}

/// `(∂_s^{M−m} s^{|I_0|−m} Σ_i F_{b^(i)})(0)`, allowed when the condition
/// sums vanish. Log symbol `ℓ_i` belongs to `b^(i)`.
pub fn frobenius_method1_extra(
    v: &[Q],
    bs: &[Vec<i64>],
    cls: &NsClassification,
    cone: &Cone,
    window: &Window,
) -> Result<LogSeries> {
    let big_m = cls
        .params
        .big_m
        .ok_or_else(|| Error::OrderOutOfRange("M is infinite; no extra solution".into()))?;
    if !method1_condition(bs, cls)?.all_zero() {
        return Err(Error::ConditionNotSatisfied);
    }
    let j = (big_m - cls.params.m) as u32;
    let mut total = empty_series(v, cone, bs.to_vec(), window);
    let k = bs.len();
    for (idx, b) in bs.iter().enumerate() {
        let part = method1_unchecked(v, b, cls, cone, j, window)?;
        for (x, p) in part.terms {
            let mut embedded = Poly::zero(k);
            for (e, c) in p.terms() {
                let mut f = vec![0; k];
                f[idx] = e[0];
                embedded.add_term(f, c.clone());
            }
            total.add_term(x, embedded);
        }
        for w in part.warnings {
            if !total.warnings.contains(&w) {
                total.warnings.push(w);
            }
        }
    }
    Ok(total)
}

fn require_covering(bs: &[Vec<i64>], set: &Support) -> Result<()> {
    match set.iter().find(|&&i| bs.iter().all(|b| b[i] == 0)) {
        Some(&i) => Err(Error::PerturbationHitsZero(i)),
        None => Ok(()),
    }
}

/// `(∂_s^p F̃)(0)` with `F̃ = Π_{i∈I_0∖K} L_i(s) · F_{b^(1..l)}`.
pub fn frobenius_method2(
    v: &[Q],
    bs: &[Vec<i64>],
    cls: &NsClassification,
    cone: &Cone,
    p: &[u32],
    window: &Window,
) -> Result<LogSeries> {
    let params = &cls.params;
    require_covering(bs, &params.i0)?;
    let total: usize = p.iter().map(|&x| x as usize).sum();
    if let Some(big_m) = params.big_m {
        let bound = big_m - params.k.len();
        if total > bound {
            return Err(Error::OrderOutOfRange(format!(
                "|p| = {total} exceeds M - |K| = {bound}"
            )));
        }
        if total == bound && !method2_condition(bs, cls, p)?.all_zero() {
            return Err(Error::ConditionNotSatisfied);
        }
    }
    let prefactor: Support = params.i0.difference(&params.k).copied().collect();
    perturbed_extraction(v, bs, cls, cone, window, &Prefactor::Forms(prefactor), p)
}

/// Ordered partitions of `set` into blocks of sizes `p_1..p_l`, summed as
/// `Π_k b^(k)_{L_k}`.
fn partition_sum(bs: &[Vec<i64>], set: &[usize], p: &[u32]) -> Q {
    fn rec(bs: &[Vec<i64>], set: &[usize], left: &mut [u32]) -> Q {
        let Some((&first, rest)) = set.split_first() else {
            return if left.iter().all(|&x| x == 0) {
                q(1)
            } else {
                q(0)
            };
        };
        let mut acc = q(0);
        for k in 0..left.len() {
            if left[k] == 0 || bs[k][first] == 0 {
                continue;
            }
            left[k] -= 1;
            acc += q(bs[k][first]) * rec(bs, rest, left);
            left[k] += 1;
        }
        acc
    }
    let mut left = p.to_vec();
    rec(bs, set, &mut left)
}

/// The partition sums over `I ∪ J ∖ K` for all critical pairs.
pub fn method2_condition(
    bs: &[Vec<i64>],
    cls: &NsClassification,
    p: &[u32],
) -> Result<Certificate> {
    if p.len() != bs.len() {
        return Err(Error::Shape(format!(
            "degree has {} entries for {} perturbation vectors",
            p.len(),
            bs.len()
        )));
    }
    let k = &cls.params.k;
    let mut seen: BTreeSet<(Support, Support)> = BTreeSet::new();
    let mut values = Vec::new();
    for (i, j) in critical_pairs(cls) {
        if !seen.insert((i.clone(), j.clone())) {
            continue;
        }
        let set: Vec<usize> = i.union(&j).filter(|x| !k.contains(x)).copied().collect();
        values.push(ConditionValue {
            value: partition_sum(bs, &set, p),
            i,
            j,
        });
    }
    Ok(Certificate { values })
}
