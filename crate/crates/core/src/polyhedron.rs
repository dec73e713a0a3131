//! Small exact rational polyhedra `{x : a·x <= b}` handled by Fourier–Motzkin
//! elimination. Dimensions here are the Gale dimension `n - d`, so the
//! quadratic blow-up of elimination never matters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::{ceil_q, floor_q, q, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    dim: usize,
    // normalized coefficient vector -> tightest right-hand side
    constraints: BTreeMap<Vec<Q>, Q>,
    infeasible: bool,
}

/// Outcome of enumerating the integer points of a polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeScan {
    /// The listed points are all of them (possibly none).
    Complete(Vec<Vec<i64>>),
    /// Some coordinate is unbounded; nothing is claimed.
    Unbounded,
    /// Bounded, but more points than the cap allows.
    TooLarge,
}

impl Polyhedron {
    pub fn new(dim: usize) -> Self {
        Polyhedron {
            dim,
            constraints: BTreeMap::new(),
            infeasible: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `a·x <= b`.
    pub fn add_le(&mut self, a: Vec<Q>, b: Q) {
        debug_assert_eq!(a.len(), self.dim);
        let Some(lead) = a.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            if b.is_negative() {
                self.infeasible = true;
            }
            return;
        };
        let a: Vec<Q> = a.iter().map(|c| c / &lead).collect();
        let b = b / lead;
        match self.constraints.get_mut(&a) {
            Some(old) if *old <= b => {}
            Some(old) => *old = b,
            None => {
                self.constraints.insert(a, b);
            }
        }
    }

    /// Adds `a·x >= b`.
    pub fn add_ge(&mut self, a: Vec<Q>, b: Q) {
        self.add_le(a.into_iter().map(|c| -c).collect(), -b);
    }

    pub fn add_le_int(&mut self, a: &[i64], b: i64) {
        self.add_le(a.iter().map(|&x| q(x)).collect(), q(b));
    }

    pub fn add_ge_int(&mut self, a: &[i64], b: i64) {
        self.add_ge(a.iter().map(|&x| q(x)).collect(), q(b));
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        !self.infeasible
            && self.constraints.iter().all(|(a, b)| {
                let lhs = a.iter().zip(x).fold(Q::zero(), |acc, (c, y)| acc + c * y);
                lhs <= *b
            })
    }

    pub fn contains_int(&self, x: &[i64]) -> bool {
        let xq: Vec<Q> = x.iter().map(|&v| q(v)).collect();
        self.contains(&xq)
    }

    /// Eliminates coordinate `j`; the result lives in the same ambient space
    /// with a zero coefficient at `j`.
    fn eliminate(&self, j: usize) -> Polyhedron {
        let mut out = Polyhedron::new(self.dim);
        out.infeasible = self.infeasible;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (a, b) in &self.constraints {
            if a[j].is_positive() {
                pos.push((a, b));
            } else if a[j].is_negative() {
                neg.push((a, b));
            } else {
                out.add_le(a.clone(), b.clone());
            }
        }
        for (ap, bp) in &pos {
            for (an, bn) in &neg {
                let (sp, sn) = (-an[j].clone(), ap[j].clone());
                let a: Vec<Q> = ap
                    .iter()
                    .zip(an.iter())
                    .map(|(x, y)| x * &sp + y * &sn)
                    .collect();
                out.add_le(a, (*bp).clone() * &sp + (*bn).clone() * &sn);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        let mut p = self.clone();
        for j in 0..self.dim {
            p = p.eliminate(j);
            if p.infeasible {
                return true;
            }
        }
        p.infeasible
    }

    /// Exact range of coordinate `j` over the polyhedron, `None` if empty.
    pub fn coordinate_range(&self, j: usize) -> Option<(Option<Q>, Option<Q>)> {
        let mut p = self.clone();
        for k in (0..self.dim).filter(|&k| k != j) {
            p = p.eliminate(k);
        }
        if p.infeasible {
            return None;
        }
        let (mut lo, mut hi): (Option<Q>, Option<Q>) = (None, None);
        for (a, b) in &p.constraints {
            let c = &a[j];
            let bound = b / c;
            if c.is_positive() {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound.clone())));
            } else {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound.clone())));
            }
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                return None;
            }
        }
        Some((lo, hi))
    }

    /// Fixes the first coordinate, returning a polyhedron of one lower
    /// dimension.
    fn fix_first(&self, value: i64) -> Polyhedron {
        let mut out = Polyhedron::new(self.dim - 1);
        out.infeasible = self.infeasible;
        let v = q(value);
        for (a, b) in &self.constraints {
            out.add_le(a[1..].to_vec(), b - &a[0] * &v);
        }
        out
    }

    /// All integer points, when the polyhedron is bounded and has at most
    /// `cap` of them.
    pub fn lattice_points(&self, cap: usize) -> LatticeScan {
        if self.infeasible {
            return LatticeScan::Complete(vec![]);
        }
        if self.dim == 0 {
            return LatticeScan::Complete(vec![vec![]]);
        }
        let Some(range) = self.coordinate_range(0) else {
            return LatticeScan::Complete(vec![]);
        };
        let (Some(lo), Some(hi)) = range else {
            return LatticeScan::Unbounded;
        };
        let (lo, hi) = (to_i64(ceil_q(&lo)), to_i64(floor_q(&hi)));
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return LatticeScan::TooLarge;
        };
        let mut points = Vec::new();
        for x0 in lo..=hi {
            match self
                .fix_first(x0)
                .lattice_points(cap.saturating_sub(points.len()))
            {
                LatticeScan::Complete(rest) => {
                    for mut r in rest {
                        r.insert(0, x0);
                        points.push(r);
                    }
                }
                other => return other,
            }
            if points.len() > cap {
                return LatticeScan::TooLarge;
            }
        }
        LatticeScan::Complete(points)
    }
}

fn to_i64(x: BigInt) -> Option<i64> {
    x.to_i64().filter(|v| v.abs() < (1 << 40))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn triangle_points() {
        let mut p = Polyhedron::new(2);
        p.add_ge_int(&[1, 0], 0);
        p.add_ge_int(&[0, 1], 0);
        p.add_le_int(&[1, 1], 2);
        assert!(!p.is_empty());
        assert_eq!(p.coordinate_range(0), Some((Some(q(0)), Some(q(2)))));
        match p.lattice_points(100) {
            LatticeScan::Complete(pts) => assert_eq!(pts.len(), 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_and_unbounded() {
        let mut p = Polyhedron::new(2);
        p.add_ge_int(&[1, 1], 1);
        p.add_le_int(&[1, 1], 0);
        assert!(p.is_empty());
        let mut r = Polyhedron::new(2);
        r.add_ge_int(&[1, 0], 0);
        assert_eq!(r.lattice_points(10), LatticeScan::Unbounded);
    }

    #[test]
    fn thin_strip_without_integer_points() {
        let mut p = Polyhedron::new(1);
        p.add_ge(vec![q(1)], qr(1, 3));
        p.add_le(vec![q(1)], qr(2, 3));
        assert!(!p.is_empty());
        assert_eq!(p.lattice_points(10), LatticeScan::Complete(vec![]));
    }
}
