//! Toric ideals of `A`: binomial Buchberger under a weight order, saturation
//! of the lattice ideal, initial monomial ideals, and the monoid `C(w)`
//! spanned by the Gröbner directions.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, solve_affine, AffineSolution, IntegerMatrix, LatticeBasis};
use crate::rational::{dot_q, q, Q};

pub type Monomial = Vec<u32>;

/// Default cap on processed S-pairs per Gröbner computation.
pub const DEFAULT_SPAIR_BUDGET: usize = 200_000;
const REDUCTION_BUDGET: usize = 1_000_000;

/// A pure difference binomial `∂^lead − ∂^tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Monomial,
}

impl Binomial {
    /// `∂^{u+} − ∂^{u−}`.
    pub fn from_vector(u: &[i64]) -> Self {
        let lead = u.iter().map(|&x| x.max(0) as u32).collect();
        let tail = u.iter().map(|&x| (-x).max(0) as u32).collect();
        Binomial { lead, tail }
    }

    /// `lead − tail` as a lattice vector.
    pub fn direction(&self) -> Vec<i64> {
        self.lead
            .iter()
            .zip(&self.tail)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.lead.len()
    }

    fn oriented(a: Monomial, b: Monomial, order: &TermOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Binomial { lead: a, tail: b }),
            Ordering::Less => Some(Binomial { lead: b, tail: a }),
        }
    }
}

impl std::fmt::Display for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} - {}",
            MonomialDisplay(&self.lead),
            MonomialDisplay(&self.tail)
        )
    }
}

pub struct MonomialDisplay<'a>(pub &'a [u32]);

impl std::fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut any = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            any = true;
            match e {
                1 => write!(f, "d{}", i + 1)?,
                _ => write!(f, "d{}^{}", i + 1, e)?,
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Weight order refined by graded reverse lexicographic order. The grevlex
/// part ranks variables by `var_order` (most significant first), so the last
/// entry is the cheapest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    pub weight: Option<Vec<Q>>,
    pub var_order: Vec<usize>,
}

impl TermOrder {
    pub fn grevlex(n: usize) -> Self {
        TermOrder {
            weight: None,
            var_order: (0..n).collect(),
        }
    }

    pub fn weighted(w: &[Q]) -> Self {
        TermOrder {
            weight: Some(w.to_vec()),
            var_order: (0..w.len()).collect(),
        }
    }

    /// Grevlex with `var` as the cheapest variable.
    pub fn cheapest(n: usize, var: usize) -> Self {
        let mut var_order: Vec<usize> = (0..n).filter(|&i| i != var).collect();
        var_order.push(var);
        TermOrder {
            weight: None,
            var_order,
        }
    }

    pub fn weight_of(&self, m: &[u32]) -> Option<Q> {
        self.weight.as_ref().map(|w| {
            w.iter()
                .zip(m)
                .fold(q(0), |acc, (wi, &e)| acc + wi * q(i64::from(e)))
        })
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        if let (Some(wa), Some(wb)) = (self.weight_of(a), self.weight_of(b)) {
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        let (da, db): (u64, u64) = (
            a.iter().map(|&x| u64::from(x)).sum(),
            b.iter().map(|&x| u64::from(x)).sum(),
        );
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for &v in self.var_order.iter().rev() {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                // smaller exponent in the cheapest differing variable wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Normal form of a monomial modulo binomials with the given leads.
pub fn normal_form(m: &[u32], basis: &[Binomial]) -> Result<Monomial> {
    let mut m = m.to_vec();
    for _ in 0..REDUCTION_BUDGET {
        let Some(g) = basis.iter().find(|g| divides(&g.lead, &m)) else {
            return Ok(m);
        };
        for ((x, &l), &t) in m.iter_mut().zip(&g.lead).zip(&g.tail) {
            *x = *x - l + t;
        }
    }
    Err(Error::BudgetExceeded("reduction"))
}

/// True iff the binomial reduces to zero, i.e. both sides share a normal form.
pub fn reduces_to_zero(b: &Binomial, basis: &[Binomial]) -> Result<bool> {
    Ok(normal_form(&b.lead, basis)? == normal_form(&b.tail, basis)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub elements: Vec<Binomial>,
    /// Directions of S-polynomials whose two terms had equal weight. They do
    /// not affect genericity; they are kept for diagnostics.
    pub spair_ties: Vec<Vec<i64>>,
}

impl GroebnerBasis {
    /// Directions `u^(i)` oriented so that `∂^{u^(i)+}` is initial.
    pub fn directions(&self) -> Vec<Vec<i64>> {
        self.elements.iter().map(Binomial::direction).collect()
    }

    pub fn weight(&self) -> Option<&[Q]> {
        self.order.weight.as_deref()
    }
}

/// Reduced Gröbner basis of the binomial ideal generated by `gens` under an
/// arbitrary term order. Never rejects ties: the weighted front end decides.
pub fn groebner_basis(
    gens: &[Binomial],
    order: &TermOrder,
    budget: usize,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Binomial> = Vec::new();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    let mut ties: BTreeSet<Vec<i64>> = BTreeSet::new();

    let insert = |b: Binomial, basis: &mut Vec<Binomial>, pairs: &mut VecDeque<_>| {
        let idx = basis.len();
        for i in 0..idx {
            pairs.push_back((i, idx));
        }
        basis.push(b);
    };

    for g in gens {
        let (a, b) = (normal_form(&g.lead, &basis)?, normal_form(&g.tail, &basis)?);
        if let Some(nb) = Binomial::oriented(a, b, order) {
            insert(nb, &mut basis, &mut pairs);
        }
    }

    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop_front() {
        processed += 1;
        if processed > budget {
            return Err(Error::BudgetExceeded("S-pair"));
        }
        let (gi, gj) = (&basis[i], &basis[j]);
        if gi
            .lead
            .iter()
            .zip(&gj.lead)
            .all(|(a, b)| *a == 0 || *b == 0)
        {
            continue;
        }
        let lcm: Monomial = gi
            .lead
            .iter()
            .zip(&gj.lead)
            .map(|(a, b)| *a.max(b))
            .collect();
        let shift = |g: &Binomial| -> Monomial {
            lcm.iter()
                .zip(&g.lead)
                .zip(&g.tail)
                .map(|((&l, &a), &t)| l - a + t)
                .collect()
        };
        let (m1, m2) = (shift(gi), shift(gj));
        if m1 != m2 && order.weight.is_some() && order.weight_of(&m1) == order.weight_of(&m2) {
            ties.insert(
                m1.iter()
                    .zip(&m2)
                    .map(|(&a, &b)| i64::from(a) - i64::from(b))
                    .collect(),
            );
        }
        let (n1, n2) = (normal_form(&m1, &basis)?, normal_form(&m2, &basis)?);
        if let Some(nb) = Binomial::oriented(n1, n2, order) {
            insert(nb, &mut basis, &mut pairs);
        }
    }

    // minimalize, then tail-reduce
    let mut minimal: Vec<Binomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && divides(&h.lead, &g.lead) && (h.lead != g.lead || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for g in &minimal {
        let tail = normal_form(&g.tail, &minimal)?;
        reduced.push(Binomial {
            lead: g.lead.clone(),
            tail,
        });
    }
    reduced.sort_by(|a, b| order.cmp(&b.lead, &a.lead).then_with(|| a.cmp(b)));
    Ok(GroebnerBasis {
        order: order.clone(),
        elements: reduced,
        spair_ties: ties.into_iter().collect(),
    })
}

/// One binomial per basis column.
pub fn lattice_ideal_generators(basis: &LatticeBasis) -> Vec<Binomial> {
    basis
        .columns()
        .iter()
        .map(|c| Binomial::from_vector(c))
        .collect()
}

/// Saturates the lattice ideal to `I_A` by iterated single-variable
/// saturation: grevlex with `x_i` cheapest, then divide each basis element by
/// the largest power of `x_i` dividing both terms. Passes repeat until none
/// of them changes anything.
pub fn saturate_to_toric(gens: &[Binomial], budget: usize) -> Result<Vec<Binomial>> {
    let Some(n) = gens.first().map(Binomial::nvars) else {
        return Ok(vec![]);
    };
    let mut current: Vec<Binomial> = gens.to_vec();
    loop {
        let mut changed = false;
        for var in 0..n {
            let order = TermOrder::cheapest(n, var);
            let gb = groebner_basis(&current, &order, budget)?;
            current = gb
                .elements
                .into_iter()
                .map(|mut g| {
                    let k = g.lead[var].min(g.tail[var]);
                    if k > 0 {
                        changed = true;
                        g.lead[var] -= k;
                        g.tail[var] -= k;
                    }
                    g
                })
                .collect();
        }
        if !changed {
            break;
        }
    }
    let gb = groebner_basis(&current, &TermOrder::grevlex(n), budget)?;
    Ok(gb.elements)
}

/// Reduced Gröbner basis for the weight `w` refined by grevlex. Fails when a
/// basis element has a weight tie, the exact obstruction to `in_w` being a
/// monomial ideal.
pub fn buchberger(gens: &[Binomial], w: &[Q]) -> Result<GroebnerBasis> {
    buchberger_with_budget(gens, w, DEFAULT_SPAIR_BUDGET)
}

pub fn buchberger_with_budget(gens: &[Binomial], w: &[Q], budget: usize) -> Result<GroebnerBasis> {
    let gb = groebner_basis(gens, &TermOrder::weighted(w), budget)?;
    match weight_genericity_check(w, &gb) {
        Genericity::Generic => Ok(gb),
        Genericity::Tie(u) => Err(Error::WeightNotGeneric(u)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Genericity {
    Generic,
    Tie(Vec<i64>),
}

/// Fails on the first basis direction `u` with `w·u = 0`.
pub fn weight_genericity_check(w: &[Q], gb: &GroebnerBasis) -> Genericity {
    gb.directions()
        .into_iter()
        .find(|u| dot_q(w, u) == q(0))
        .map_or(Genericity::Generic, Genericity::Tie)
}

/// True iff both generating sets define the same ideal (mutual reduction).
pub fn same_ideal(a: &[Binomial], b: &[Binomial]) -> Result<bool> {
    let Some(n) = a.first().or(b.first()).map(Binomial::nvars) else {
        return Ok(true);
    };
    let order = TermOrder::grevlex(n);
    let ga = groebner_basis(a, &order, DEFAULT_SPAIR_BUDGET)?;
    let gb = groebner_basis(b, &order, DEFAULT_SPAIR_BUDGET)?;
    for g in b {
        if !reduces_to_zero(g, &ga.elements)? {
            return Ok(false);
        }
    }
    for g in a {
        if !reduces_to_zero(g, &gb.elements)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generators of the ideal spanned by `gens`, sorted.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens.iter() {
            let dominated = gens.iter().any(|h| h != g && divides(h, g));
            if !dominated && !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort();
        MonomialIdeal {
            nvars,
            generators: minimal,
        }
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }
}

pub fn initial_ideal(gb: &GroebnerBasis, nvars: usize) -> MonomialIdeal {
    MonomialIdeal::new(nvars, gb.elements.iter().map(|g| g.lead.clone()).collect())
}

/// The monoid `C(w) = Σ N u^(i)` spanned by the Gröbner directions,
/// expressed in Gale coordinates.
///
/// Membership is decided exactly by a bounded search: every generator has
/// positive weight, so a representation of `x` uses each generator at most
/// `weight(x) / weight(generator)` times. The cheaper test `w·u > 0` is not
/// equivalent in general: on the two-dimensional examples the monoid is a
/// quadrant while the half-plane `w·u > 0` is strictly larger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    basis: LatticeBasis,
    w: Vec<Q>,
    generators: Vec<Vec<i64>>,
    weights: Vec<Q>,
    basis_weights: Vec<Q>,
}

impl Cone {
    pub fn new(gb: &GroebnerBasis, basis: &LatticeBasis, w: &[Q]) -> Result<Self> {
        let mut generators: Vec<Vec<i64>> = Vec::new();
        for u in gb.directions() {
            let x = basis
                .coordinates(&u)
                .ok_or_else(|| Error::NotInLattice(u.clone()))?;
            if !generators.contains(&x) {
                generators.push(x);
            }
        }
        let basis_weights: Vec<Q> = basis.columns().iter().map(|c| dot_q(w, c)).collect();
        let weight = |x: &[i64]| -> Q {
            basis_weights
                .iter()
                .zip(x)
                .fold(q(0), |acc, (wb, &xi)| acc + wb * q(xi))
        };
        let weights: Vec<Q> = generators.iter().map(|g| weight(g)).collect();
        if let Some(i) = weights.iter().position(|x| *x <= q(0)) {
            return Err(Error::WeightNotGeneric(basis.lift(&generators[i])));
        }
        Ok(Cone {
            basis: basis.clone(),
            w: w.to_vec(),
            generators,
            weights,
            basis_weights,
        })
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn basis(&self) -> &LatticeBasis {
        &self.basis
    }

    pub fn w(&self) -> &[Q] {
        &self.w
    }

    /// `w·(B x)`.
    pub fn weight(&self, x: &[i64]) -> Q {
        self.basis_weights
            .iter()
            .zip(x)
            .fold(q(0), |acc, (wb, &xi)| acc + wb * q(xi))
    }

    /// Membership for a lattice vector; errors when `u ∉ L`.
    pub fn in_cone(&self, u: &[i64]) -> Result<bool> {
        let x = self
            .basis
            .coordinates(u)
            .ok_or_else(|| Error::NotInLattice(u.to_vec()))?;
        Ok(self.contains(&x))
    }

    /// Membership for Gale coordinates.
    pub fn contains(&self, x: &[i64]) -> bool {
        if x.iter().all(|&v| v == 0) {
            return true;
        }
        if self.weight(x) <= q(0) {
            return false;
        }
        let mut memo = HashMap::new();
        self.search(0, x.to_vec(), &mut memo)
    }

    fn search(
        &self,
        idx: usize,
        rem: Vec<i64>,
        memo: &mut HashMap<(usize, Vec<i64>), bool>,
    ) -> bool {
        if rem.iter().all(|&v| v == 0) {
            return true;
        }
        if idx == self.generators.len() {
            return false;
        }
        let wr = self.weight(&rem);
        if wr <= q(0) {
            return false;
        }
        if let Some(&hit) = memo.get(&(idx, rem.clone())) {
            return hit;
        }
        let g = &self.generators[idx];
        let max_c = (wr / &self.weights[idx]).floor().to_integer();
        let max_c: i64 = max_c.try_into().unwrap_or(i64::MAX);
        let mut found = false;
        let mut cur = rem.clone();
        for c in 0..=max_c {
            if c > 0 {
                for (r, gi) in cur.iter_mut().zip(g) {
                    *r -= gi;
                }
            }
            if self.search(idx + 1, cur.clone(), memo) {
                found = true;
                break;
            }
        }
        memo.insert((idx, rem), found);
        found
    }

    fn rank_of(&self, idx: &[usize]) -> usize {
        if idx.is_empty() {
            return 0;
        }
        IntegerMatrix::new(idx.iter().map(|&i| self.generators[i].clone()).collect())
            .map(|m| m.rank())
            .unwrap_or(0)
    }

    /// Dimension of the real cone.
    pub fn dimension(&self) -> usize {
        self.rank_of(&(0..self.generators.len()).collect::<Vec<_>>())
    }

    /// Inequalities `h·x >= 0` cutting out the real cone `pos(C(w))` inside
    /// Gale space. Linear-span equations appear as a pair `h`, `−h`.
    pub fn facets(&self) -> Vec<Vec<i64>> {
        let k = self.basis.rank();
        let r = self.dimension();
        let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
        let eqs = integer_kernel(&self.generators, k);
        for h in &eqs {
            out.insert(h.clone());
            out.insert(h.iter().map(|x| -x).collect());
        }
        if r == 0 {
            return out.into_iter().collect();
        }
        for subset in combinations(self.generators.len(), r - 1) {
            if self.rank_of(&subset) != r - 1 {
                continue;
            }
            let mut rows: Vec<Vec<i64>> =
                subset.iter().map(|&i| self.generators[i].clone()).collect();
            rows.extend(eqs.iter().cloned());
            let ker = integer_kernel(&rows, k);
            let Some(h) = ker.first() else { continue };
            let signs: Vec<i64> = self
                .generators
                .iter()
                .map(|g| g.iter().zip(h).map(|(a, b)| a * b).sum::<i64>().signum())
                .collect();
            if signs.iter().all(|&s| s >= 0) {
                out.insert(h.clone());
            } else if signs.iter().all(|&s| s <= 0) {
                out.insert(h.iter().map(|x| -x).collect());
            }
        }
        out.into_iter().collect()
    }

    /// True iff `C(w)` equals all lattice points of its real cone, checked on
    /// the fundamental parallelepipeds of every maximal independent subset of
    /// generators. `None` when a parallelepiped is too large to scan.
    pub fn is_saturated(&self) -> Option<bool> {
        let r = self.dimension();
        let k = self.basis.rank();
        if r == 0 {
            return Some(true);
        }
        for subset in combinations(self.generators.len(), r) {
            if self.rank_of(&subset) != r {
                continue;
            }
            let cols: Vec<Vec<i64>> = subset.iter().map(|&i| self.generators[i].clone()).collect();
            let m = IntegerMatrix::from_columns(&cols, k);
            let ranges: Vec<(i64, i64)> = (0..k)
                .map(|c| {
                    let lo = cols.iter().map(|g| g[c].min(0)).sum();
                    let hi = cols.iter().map(|g| g[c].max(0)).sum();
                    (lo, hi)
                })
                .collect();
            let count: i128 = ranges.iter().map(|(a, b)| i128::from(b - a + 1)).product();
            if count > 200_000 {
                return None;
            }
            let mut point = ranges.iter().map(|r| r.0).collect::<Vec<i64>>();
            loop {
                let rhs: Vec<Q> = point.iter().map(|&p| q(p)).collect();
                if let AffineSolution::Unique(mu) = solve_affine(&m, &rhs) {
                    let inside = mu.iter().all(|x| *x >= q(0) && *x < q(1));
                    if inside && !self.contains(&point) {
                        return Some(false);
                    }
                }
                // odometer
                let mut c = 0;
                loop {
                    if c == k {
                        break;
                    }
                    if point[c] < ranges[c].1 {
                        point[c] += 1;
                        break;
                    }
                    point[c] = ranges[c].0;
                    c += 1;
                }
                if c == k {
                    break;
                }
            }
        }
        Some(true)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::kernel_lattice_basis;
    use crate::rational::qvec;

    fn bin(lead: &[u32], tail: &[u32]) -> Binomial {
        Binomial {
            lead: lead.to_vec(),
            tail: tail.to_vec(),
        }
    }

    fn basis_of(rows: &[&[i64]]) -> LatticeBasis {
        let a = IntegerMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        kernel_lattice_basis(&a, rows.len()).unwrap()
    }

    #[test]
    fn generators_split_basis_vectors() {
        let b = basis_of(&[&[1, 1, 1], &[0, 1, 2]]);
        assert_eq!(
            lattice_ideal_generators(&b),
            vec![bin(&[1, 0, 1], &[0, 2, 0])]
        );
        let g = Binomial::from_vector(&[1, -2, 2, -1]);
        assert_eq!(g, bin(&[1, 0, 2, 0], &[0, 2, 0, 1]));
        let g = Binomial::from_vector(&[0, 1, -3, 2]);
        assert_eq!(g, bin(&[0, 1, 0, 2], &[0, 0, 3, 0]));
    }

    #[test]
    fn grevlex_prefers_smaller_cheapest_exponent() {
        let o = TermOrder::grevlex(3);
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 1, 1]), Ordering::Greater);
        let w = TermOrder::weighted(&qvec(&[1, 0, 1]));
        assert_eq!(w.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
    }

    #[test]
    fn saturation_of_twisted_quartic() {
        let b = basis_of(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        let ia = saturate_to_toric(&lattice_ideal_generators(&b), DEFAULT_SPAIR_BUDGET).unwrap();
        let expected = vec![
            bin(&[2, 0, 1, 0], &[0, 3, 0, 0]),
            bin(&[0, 1, 0, 2], &[0, 0, 3, 0]),
            bin(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            bin(&[1, 0, 2, 0], &[0, 2, 0, 1]),
        ];
        assert!(same_ideal(&ia, &expected).unwrap());
    }

    #[test]
    fn saturation_of_prime_binomial_is_fixed_point() {
        let g = vec![bin(&[1, 0, 1], &[0, 2, 0])];
        let ia = saturate_to_toric(&g, DEFAULT_SPAIR_BUDGET).unwrap();
        assert!(same_ideal(&ia, &g).unwrap());
    }

    #[test]
    fn weighted_basis_and_initial_ideal() {
        let gens = vec![
            bin(&[2, 0, 1, 0], &[0, 3, 0, 0]),
            bin(&[0, 1, 0, 2], &[0, 0, 3, 0]),
            bin(&[1, 0, 0, 1], &[0, 1, 1, 0]),
            bin(&[1, 0, 2, 0], &[0, 2, 0, 1]),
        ];
        let gb = buchberger(&gens, &qvec(&[3, 0, 0, 1])).unwrap();
        let ini = initial_ideal(&gb, 4);
        let mut want = vec![
            vec![2, 0, 1, 0],
            vec![0, 1, 0, 2],
            vec![1, 0, 0, 1],
            vec![1, 0, 2, 0],
        ];
        want.sort();
        assert_eq!(ini.generators, want);
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let g = vec![bin(&[1, 0, 1], &[0, 2, 0])];
        let gb = buchberger(&g, &qvec(&[1, 0, 1])).unwrap();
        assert_eq!(gb.elements, g);
        assert_eq!(initial_ideal(&gb, 3).generators, vec![vec![1, 0, 1]]);
    }

    #[test]
    fn empty_basis_gives_zero_ideal() {
        let gb = buchberger(&[], &qvec(&[1, 1])).unwrap();
        assert!(gb.elements.is_empty());
        assert!(initial_ideal(&gb, 2).generators.is_empty());
    }

    #[test]
    fn tie_on_basis_element_is_rejected() {
        let g = vec![bin(&[1, 0, 1], &[0, 2, 0])];
        assert_eq!(
            buchberger(&g, &qvec(&[1, 1, 1])),
            Err(Error::WeightNotGeneric(vec![-1, 2, -1]))
        );
        let gb = buchberger(&g, &qvec(&[1, 0, 1])).unwrap();
        assert_eq!(
            weight_genericity_check(&qvec(&[1, 0, 1]), &gb),
            Genericity::Generic
        );
        assert_eq!(
            weight_genericity_check(&qvec(&[1, 1, 1]), &gb),
            Genericity::Tie(vec![1, -2, 1])
        );
    }

    #[test]
    fn spair_ties_are_recorded_not_fatal() {
        let gens = vec![
            bin(&[1, 0, 1, 0, 0], &[0, 0, 0, 0, 2]),
            bin(&[0, 1, 0, 1, 0], &[0, 0, 0, 0, 2]),
        ];
        let gb = buchberger(&gens, &qvec(&[1, 1, 1, 1, 0])).unwrap();
        assert_eq!(gb.elements, gens);
        // coprime leads: no S-pair is formed at all
        assert!(gb.spair_ties.is_empty());
    }

    #[test]
    fn cone_membership_one_dimensional() {
        let b = basis_of(&[&[1, 1, 1], &[0, 1, 2]]);
        let gb = buchberger(&lattice_ideal_generators(&b), &qvec(&[1, 0, 1])).unwrap();
        let cone = Cone::new(&gb, &b, &qvec(&[1, 0, 1])).unwrap();
        assert!(cone.in_cone(&[1, -2, 1]).unwrap());
        assert!(cone.in_cone(&[0, 0, 0]).unwrap());
        assert!(!cone.in_cone(&[-1, 2, -1]).unwrap());
        assert!(cone.in_cone(&[1, 0, 0]).is_err());
        assert_eq!(cone.facets(), vec![vec![1]]);
        assert_eq!(cone.is_saturated(), Some(true));
    }

    #[test]
    fn cone_is_not_the_weight_half_space() {
        let b = basis_of(&[&[1, 1, 1, 1], &[0, 1, 3, 4]]);
        let w = qvec(&[3, 0, 0, 1]);
        let ia = saturate_to_toric(&lattice_ideal_generators(&b), DEFAULT_SPAIR_BUDGET).unwrap();
        let gb = buchberger(&ia, &w).unwrap();
        let cone = Cone::new(&gb, &b, &w).unwrap();
        let u = [2, -5, 7, -4];
        assert!(dot_q(&w, &u) > q(0));
        assert!(!cone.in_cone(&u).unwrap());
        assert!(cone.in_cone(&[1, -2, 2, -1]).unwrap());
        assert!(cone.in_cone(&[0, 1, -3, 2]).unwrap());
        assert_eq!(cone.is_saturated(), Some(true));
        assert_eq!(cone.facets().len(), 2);
    }

    #[test]
    fn combinations_enumerates_subsets() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }
}
