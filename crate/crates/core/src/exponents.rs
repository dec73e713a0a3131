//! Fake exponents, negative supports and their classification through the
//! Gale-dual arrangement `g_i(x) + v_i = 0`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::lattice::{solve_affine, AffineSolution, IntegerMatrix, LatticeBasis};
use crate::polyhedron::{LatticeScan, Polyhedron};
use crate::rational::{is_integer, is_negative_integer, q, to_i64, Q};
use crate::standard_pairs::StandardPair;
use crate::toric::Cone;

/// A set of 0-based coordinate indices.
pub type Support = BTreeSet<usize>;

/// Default Gale box radius for enumeration.
pub const DEFAULT_RADIUS: i64 = 10;
const SCAN_CAP: usize = 100_000;

/// 1-based rendering such as `{1,3}`.
pub fn format_support(s: &Support) -> String {
    let items: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FakeExponent {
    pub v: Vec<Q>,
    pub sources: Vec<StandardPair>,
}

/// Solves `Av = β` with `v_j = a_j` off `σ` for every standard pair.
/// Exponents reached from several pairs are merged.
pub fn fake_exponents(
    a: &IntegerMatrix,
    beta: &[Q],
    pairs: &[StandardPair],
) -> Result<Vec<FakeExponent>> {
    if beta.len() != a.nrows() {
        return Err(Error::Shape(format!(
            "beta has length {}, expected {}",
            beta.len(),
            a.nrows()
        )));
    }
    let n = a.ncols();
    let mut out: Vec<FakeExponent> = Vec::new();
    for p in pairs {
        let sigma: Vec<usize> = p.sigma.iter().copied().collect();
        let rhs: Vec<Q> = (0..a.nrows())
            .map(|r| {
                let fixed: i64 = (0..n)
                    .filter(|j| !p.sigma.contains(j))
                    .map(|j| a.get(r, j) * i64::from(p.a[j]))
                    .sum();
                &beta[r] - q(fixed)
            })
            .collect();
        let sol = match solve_affine(&a.select_columns(&sigma), &rhs) {
            AffineSolution::Unique(x) => x,
            AffineSolution::NoSolution => continue,
            AffineSolution::PositiveDimensional => {
                return Err(Error::DegenerateParameter(p.to_string()));
            }
        };
        let mut v: Vec<Q> = p.a.iter().map(|&x| q(i64::from(x))).collect();
        for (&j, x) in sigma.iter().zip(sol) {
            v[j] = x;
        }
        match out.iter_mut().find(|e| e.v == v) {
            Some(e) => e.sources.push(p.clone()),
            None => out.push(FakeExponent {
                v,
                sources: vec![p.clone()],
            }),
        }
    }
    Ok(out)
}

/// `{i : v_i ∈ Z_{<0}}`.
pub fn nsupp(v: &[Q]) -> Support {
    (0..v.len())
        .filter(|&i| is_negative_integer(&v[i]))
        .collect()
}

/// `Z(v)`: the integer coordinates, the only ones whose sign can change
/// along `v + L`.
pub fn integer_coordinates(v: &[Q]) -> Support {
    (0..v.len()).filter(|&i| is_integer(&v[i])).collect()
}

pub fn offset(v: &[Q], u: &[i64]) -> Vec<Q> {
    v.iter().zip(u).map(|(a, &b)| a + q(b)).collect()
}

/// `nsupp(v + Bx)` read off the covector signs `g_i(x) + v_i < 0`.
pub fn classify_point(v: &[Q], basis: &LatticeBasis, x: &[i64]) -> Support {
    (0..v.len())
        .filter(|&i| {
            is_integer(&v[i]) && {
                let g = basis.covector(i);
                let gx: i64 = g.iter().zip(x).map(|(a, b)| a * b).sum();
                &v[i] + q(gx) < q(0)
            }
        })
        .collect()
}

/// The integer offsets of `v` on `Z(v)`.
fn integer_parts(v: &[Q]) -> Vec<Option<i64>> {
    v.iter()
        .map(|x| if is_integer(x) { to_i64(x) } else { None })
        .collect()
}

/// Region `P_I` of Gale points whose support is exactly `I`.
pub fn support_region(v: &[Q], basis: &LatticeBasis, support: &Support) -> Polyhedron {
    let mut p = Polyhedron::new(basis.rank());
    for (i, vi) in integer_parts(v).into_iter().enumerate() {
        let Some(vi) = vi else { continue };
        let g = basis.covector(i);
        if support.contains(&i) {
            p.add_le_int(&g, -1 - vi);
        } else {
            p.add_ge_int(&g, -vi);
        }
    }
    p
}

/// Every integer point of `[−r, r]^k`, in lexicographic order.
pub fn gale_box(k: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-r..=r).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalSupport {
    /// Proven: no lattice translate has a strictly smaller support.
    Certified,
    /// No smaller support inside the box; unbounded regions remain unchecked.
    AtRadius(i64),
    /// `nsupp(v + B·witness) ⊊ nsupp(v)`.
    No { witness: Vec<i64> },
}

impl MinimalSupport {
    pub fn is_minimal(&self) -> bool {
        !matches!(self, MinimalSupport::No { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            MinimalSupport::Certified => "yes",
            MinimalSupport::AtRadius(_) => "yes-at-radius",
            MinimalSupport::No { .. } => "no",
        }
    }
}

/// Decides whether `nsupp(v)` is inclusion-minimal among `nsupp(v + u)`.
pub fn minimal_negative_support(v: &[Q], basis: &LatticeBasis, radius: i64) -> MinimalSupport {
    let i0 = nsupp(v);
    if i0.is_empty() {
        return MinimalSupport::Certified;
    }
    for x in gale_box(basis.rank(), radius) {
        let s = classify_point(v, basis, &x);
        if s.is_subset(&i0) && s != i0 {
            return MinimalSupport::No { witness: x };
        }
    }
    // A strictly smaller support keeps Z(v)∖I_0 nonnegative and frees some l ∈ I_0.
    let parts = integer_parts(v);
    let mut certified = true;
    for &l in &i0 {
        let mut p = Polyhedron::new(basis.rank());
        for (i, vi) in parts.iter().enumerate() {
            let Some(vi) = vi else { continue };
            if !i0.contains(&i) || i == l {
                p.add_ge_int(&basis.covector(i), -vi);
            }
        }
        if p.is_empty() {
            continue;
        }
        match p.lattice_points(SCAN_CAP) {
            LatticeScan::Complete(pts) => {
                if let Some(x) = pts.into_iter().next() {
                    return MinimalSupport::No { witness: x };
                }
            }
            _ => certified = false,
        }
    }
    if certified {
        MinimalSupport::Certified
    } else {
        MinimalSupport::AtRadius(radius)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Membership decided on every lattice point of the region.
    Certified,
    /// Decided only on the points inside the Gale box.
    RadiusLimited,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportClass {
    pub support: Support,
    /// A Gale point realizing the support, of least w-weight in the box.
    pub witness: Vec<i64>,
    /// A realizing Gale point outside `C(w)`, if any.
    pub violation: Option<Vec<i64>>,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodParams {
    pub m: usize,
    /// `None` when `NS^c` is empty (no bound on the Frobenius order).
    pub big_m: Option<usize>,
    pub i0: Support,
    pub k: Support,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NsClassification {
    pub v: Vec<Q>,
    pub radius: i64,
    pub classes: Vec<SupportClass>,
    pub ns: Vec<Support>,
    pub ns_c: Vec<Support>,
    /// Supports whose region could be neither exhausted nor shown empty and
    /// that never appeared inside the box.
    pub unresolved: Vec<Support>,
    pub params: MethodParams,
}

impl NsClassification {
    pub fn fully_certified(&self) -> bool {
        self.unresolved.is_empty()
            && self
                .classes
                .iter()
                .all(|c| c.certificate == Certificate::Certified)
    }

    pub fn class(&self, s: &Support) -> Option<&SupportClass> {
        self.classes.iter().find(|c| &c.support == s)
    }

    pub fn in_ns(&self, s: &Support) -> bool {
        self.ns.contains(s)
    }
}

pub fn method_params(v: &[Q], ns: &[Support], ns_c: &[Support]) -> MethodParams {
    let i0 = nsupp(v);
    let m = ns.iter().map(BTreeSet::len).min().unwrap_or(i0.len());
    let big_m = ns
        .iter()
        .flat_map(|i| ns_c.iter().map(move |j| i.union(j).count()))
        .min();
    let k = ns
        .iter()
        .skip(1)
        .fold(ns.first().cloned().unwrap_or_default(), |acc, s| {
            acc.intersection(s).copied().collect()
        });
    MethodParams { m, big_m, i0, k }
}

/// Whether every lattice point of `region` lies in `C(w)`: `Some(None)` yes,
/// `Some(Some(x))` no with witness, `None` undecided.
fn region_in_cone(
    region: &Polyhedron,
    cone: &Cone,
    facets: Option<&[Vec<i64>]>,
) -> Option<Option<Vec<i64>>> {
    if let Some(facets) = facets {
        let mut decided = true;
        for h in facets {
            let mut p = region.clone();
            p.add_le_int(h, -1);
            if p.is_empty() {
                continue;
            }
            match p.lattice_points(SCAN_CAP) {
                LatticeScan::Complete(pts) => {
                    if let Some(x) = pts.into_iter().next() {
                        return Some(Some(x));
                    }
                }
                _ => decided = false,
            }
        }
        if decided {
            return Some(None);
        }
    }
    match region.lattice_points(SCAN_CAP) {
        LatticeScan::Complete(pts) => Some(pts.into_iter().find(|x| !cone.contains(x))),
        _ => None,
    }
}

/// Classifies the supports met along `v + L` into `NS_w(v)` and its
/// complement, certifying each decision on the full support region when
/// the polyhedral tests allow.
pub fn ns_classes(v: &[Q], cone: &Cone, radius: i64) -> NsClassification {
    let basis = cone.basis();
    let k = basis.rank();
    let mut seen: BTreeMap<Support, (Vec<i64>, Q, Option<Vec<i64>>)> = BTreeMap::new();
    for x in gale_box(k, radius) {
        let s = classify_point(v, basis, &x);
        let wx = cone.weight(&x);
        let inside = cone.contains(&x);
        let entry = seen
            .entry(s)
            .or_insert_with(|| (x.clone(), wx.clone(), None));
        if wx < entry.1 {
            entry.0 = x.clone();
            entry.1 = wx;
        }
        if !inside && entry.2.is_none() {
            entry.2 = Some(x);
        }
    }

    let saturated = cone.is_saturated() == Some(true);
    let facets = saturated.then(|| cone.facets());
    let mut classes: Vec<SupportClass> = Vec::new();
    let mut unresolved = Vec::new();

    let zv: Vec<usize> = integer_coordinates(v).into_iter().collect();
    for mask in 0u64..(1u64 << zv.len()) {
        let support: Support = zv
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        let region = support_region(v, basis, &support);
        let class = match seen.remove(&support) {
            Some((witness, _, Some(bad))) => SupportClass {
                support,
                witness,
                violation: Some(bad),
                certificate: Certificate::Certified,
            },
            Some((witness, _, None)) => match region_in_cone(&region, cone, facets.as_deref()) {
                Some(violation) => SupportClass {
                    support,
                    witness,
                    violation,
                    certificate: Certificate::Certified,
                },
                None => SupportClass {
                    support,
                    witness,
                    violation: None,
                    certificate: Certificate::RadiusLimited,
                },
            },
            None => {
                if region.is_empty() {
                    continue;
                }
                match region.lattice_points(SCAN_CAP) {
                    LatticeScan::Complete(pts) if pts.is_empty() => continue,
                    LatticeScan::Complete(pts) => {
                        let violation = pts.iter().find(|x| !cone.contains(x)).cloned();
                        let witness = pts
                            .iter()
                            .min_by_key(|x| cone.weight(x))
                            .cloned()
                            .unwrap_or_default();
                        SupportClass {
                            support,
                            witness,
                            violation,
                            certificate: Certificate::Certified,
                        }
                    }
                    _ => {
                        unresolved.push(support);
                        continue;
                    }
                }
            }
        };
        classes.push(class);
    }
    classes.sort_by(|a, b| support_order(&a.support, &b.support));
    unresolved.sort_by(support_order);

    let ns: Vec<Support> = classes
        .iter()
        .filter(|c| c.violation.is_none())
        .map(|c| c.support.clone())
        .collect();
    let ns_c: Vec<Support> = classes
        .iter()
        .filter(|c| c.violation.is_some())
        .map(|c| c.support.clone())
        .collect();
    let params = method_params(v, &ns, &ns_c);
    NsClassification {
        v: v.to_vec(),
        radius,
        classes,
        ns,
        ns_c,
        unresolved,
        params,
    }
}

/// Supports ordered by size, then lexicographically.
pub fn support_order(a: &Support, b: &Support) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Replaces `NS` by a user subset `N`; the rest of `NS` joins `NS^c`.
pub fn restrict_classes(cls: &NsClassification, n: &[Support]) -> Result<NsClassification> {
    let i0 = nsupp(&cls.v);
    let mut restricted: Vec<Support> = Vec::new();
    for s in n {
        if !cls.ns.contains(s) {
            return Err(Error::InvalidRestriction(s.iter().copied().collect()));
        }
        if !restricted.contains(s) {
            restricted.push(s.clone());
        }
    }
    if !restricted.contains(&i0) {
        return Err(Error::InvalidRestriction(i0.into_iter().collect()));
    }
    restricted.sort_by(support_order);
    let mut ns_c: Vec<Support> = cls
        .ns
        .iter()
        .chain(&cls.ns_c)
        .filter(|s| !restricted.contains(s))
        .cloned()
        .collect();
    ns_c.sort_by(support_order);
    let params = method_params(&cls.v, &restricted, &ns_c);
    Ok(NsClassification {
        ns: restricted,
        ns_c,
        params,
        ..cls.clone()
    })
}

/// For each exponent, whether it has the least w-weight among the fake
/// exponents congruent to it modulo `L`.
pub fn smallest_in_class(exps: &[FakeExponent], basis: &LatticeBasis, w: &[Q]) -> Vec<bool> {
    let weight = |v: &[Q]| -> Q { w.iter().zip(v).map(|(a, b)| a * b).sum() };
    exps.iter()
        .map(|e| {
            let we = weight(&e.v);
            exps.iter().all(|f| {
                let diff: Option<Vec<i64>> =
                    f.v.iter()
                        .zip(&e.v)
                        .map(|(a, b)| {
                            let d = a - b;
                            if is_integer(&d) {
                                to_i64(&d)
                            } else {
                                None
                            }
                        })
                        .collect();
                let congruent = diff.is_some_and(|d| basis.coordinates(&d).is_some());
                !congruent || weight(&f.v) >= we
            })
        })
        .collect()
}

/// Binomial bound `C(n−d+M−|I_0|−1, M−|I_0|−1)` on the multiplicity of `v`;
/// `None` unless `M > |I_0|`.
pub fn multiplicity_lower_bound(
    params: &MethodParams,
    n: usize,
    d: usize,
) -> Option<num_bigint::BigInt> {
    let big_m = params.big_m?;
    let i0 = params.i0.len();
    if big_m <= i0 {
        return None;
    }
    let top = (n - d + big_m - i0 - 1) as u64;
    Some(crate::rational::binomial(top, (big_m - i0 - 1) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::kernel_lattice_basis;
    use crate::rational::{qr, qvec};
    use crate::toric::{
        buchberger, lattice_ideal_generators, saturate_to_toric, DEFAULT_SPAIR_BUDGET,
    };

    fn sup(xs: &[usize]) -> Support {
        xs.iter().map(|x| x - 1).collect()
    }

    fn setup(rows: &[&[i64]], w: &[i64]) -> (LatticeBasis, Cone) {
        let a = IntegerMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        let b = kernel_lattice_basis(&a, rows.len()).unwrap();
        let ia = saturate_to_toric(&lattice_ideal_generators(&b), DEFAULT_SPAIR_BUDGET).unwrap();
        let gb = buchberger(&ia, &qvec(w)).unwrap();
        let cone = Cone::new(&gb, &b, &qvec(w)).unwrap();
        (b, cone)
    }

    #[test]
    fn nsupp_basics() {
        assert_eq!(nsupp(&qvec(&[0, 12, -2])), sup(&[3]));
        assert_eq!(nsupp(&[q(0), qr(-5, 2), qr(1, 2), q(0)]), Support::new());
        assert_eq!(nsupp(&qvec(&[-1, -1, 0, 0])), sup(&[1, 2]));
        assert_eq!(format_support(&sup(&[1, 3])), "{1,3}");
    }

    #[test]
    fn classify_on_the_number_line() {
        let (b, _) = setup(&[&[1, 1, 1], &[0, 1, 2]], &[1, 0, 1]);
        let v = qvec(&[0, 12, -2]);
        assert_eq!(classify_point(&v, &b, &[7]), sup(&[2]));
        assert_eq!(classify_point(&v, &b, &[3]), sup(&[]));
        assert_eq!(classify_point(&v, &b, &[0]), sup(&[3]));
        assert_eq!(classify_point(&v, &b, &[-1]), sup(&[1, 3]));
        for x in -12..=12 {
            let u = b.lift(&[x]);
            assert_eq!(classify_point(&v, &b, &[x]), nsupp(&offset(&v, &u)));
        }
    }

    #[test]
    fn minimal_support_flags() {
        let (b, _) = setup(&[&[1, 1, 1], &[0, 1, 2]], &[1, 0, 1]);
        assert_eq!(
            minimal_negative_support(&qvec(&[2, 8, 0]), &b, 10),
            MinimalSupport::Certified
        );
        assert_eq!(
            minimal_negative_support(&qvec(&[0, 12, -2]), &b, 10),
            MinimalSupport::No { witness: vec![2] }
        );
    }

    #[test]
    fn number_line_classes() {
        let (_, cone) = setup(&[&[1, 1, 1], &[0, 1, 2]], &[1, 0, 1]);
        let cls = ns_classes(&qvec(&[0, 12, -2]), &cone, 10);
        assert_eq!(cls.ns, vec![sup(&[]), sup(&[2]), sup(&[3])]);
        assert_eq!(cls.ns_c, vec![sup(&[1, 3])]);
        assert_eq!(cls.params.m, 0);
        assert_eq!(cls.params.big_m, Some(2));
        assert_eq!(cls.params.i0, sup(&[3]));
        assert!(cls.fully_certified());
    }

    #[test]
    fn restriction_rules() {
        let (_, cone) = setup(&[&[1, 1, 1], &[0, 1, 2]], &[1, 0, 1]);
        let cls = ns_classes(&qvec(&[2, 8, 0]), &cone, 10);
        assert_eq!(cls.ns, vec![sup(&[]), sup(&[2])]);
        let r = restrict_classes(&cls, &[sup(&[])]).unwrap();
        assert_eq!(r.ns, vec![sup(&[])]);
        assert_eq!(r.params.big_m, Some(1));
        assert_eq!(restrict_classes(&cls, &cls.ns).unwrap(), cls);
        assert!(restrict_classes(&cls, &[sup(&[2])]).is_err());
    }

    #[test]
    fn multiplicity_bound() {
        let p = MethodParams {
            m: 0,
            big_m: Some(2),
            i0: Support::new(),
            k: Support::new(),
        };
        assert_eq!(multiplicity_lower_bound(&p, 5, 3), Some(3.into()));
        let p1 = MethodParams {
            big_m: Some(1),
            ..p.clone()
        };
        assert_eq!(multiplicity_lower_bound(&p1, 5, 3), Some(1.into()));
        let p0 = MethodParams { big_m: None, ..p };
        assert_eq!(multiplicity_lower_bound(&p0, 5, 3), None);
    }
}
