//! Truncated logarithmic series `Σ_u x^{v+u} P_u(ℓ)` over a lattice region.

use std::collections::BTreeMap;

use crate::lattice::LatticeBasis;
use crate::rational::{is_integer, q, to_i64, Q};
use crate::series::poly::{Exps, Poly};

/// The region a truncated series is exact on: Gale coordinates with
/// `|x|_∞ <= radius` and `w·(Bx) <= weight_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncation {
    pub weight_cap: Q,
    pub radius: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogSeries {
    pub v: Vec<Q>,
    pub basis: LatticeBasis,
    pub w: Vec<Q>,
    /// `b^(k)`; the log symbol `ℓ_k` stands for `log x^{b^(k)}`.
    pub bindings: Vec<Vec<i64>>,
    /// Gale coordinates of `u` to the log polynomial in `ℓ_1..ℓ_l`.
    pub terms: BTreeMap<Vec<i64>, Poly>,
    pub truncation: Truncation,
    pub warnings: Vec<String>,
}

/// `x^exponent` times a monomial in `log x_1, …, log x_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StartingMonomial {
    pub exponent: Vec<Q>,
    pub log_exponents: Exps,
}

impl LogSeries {
    pub fn empty(
        v: Vec<Q>,
        basis: LatticeBasis,
        w: Vec<Q>,
        bindings: Vec<Vec<i64>>,
        truncation: Truncation,
    ) -> Self {
        LogSeries {
            v,
            basis,
            w,
            bindings,
            terms: BTreeMap::new(),
            truncation,
            warnings: Vec::new(),
        }
    }

    pub fn nlogs(&self) -> usize {
        self.bindings.len()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `p` to the coefficient at Gale point `x`, dropping zeros.
    pub fn add_term(&mut self, x: Vec<i64>, p: Poly) {
        if p.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(x.clone())
            .or_insert_with(|| Poly::zero(p.nvars()));
        slot.add_assign(&p);
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn offset(&self, x: &[i64]) -> Vec<i64> {
        self.basis.lift(x)
    }

    pub fn exponent(&self, x: &[i64]) -> Vec<Q> {
        self.v
            .iter()
            .zip(self.offset(x))
            .map(|(a, b)| a + q(b))
            .collect()
    }

    pub fn weight_of_offset(&self, u: &[i64]) -> Q {
        self.w.iter().zip(u).map(|(a, &b)| a * q(b)).sum()
    }

    pub fn in_region(&self, x: &[i64]) -> bool {
        x.iter().all(|c| c.abs() <= self.truncation.radius)
            && self.weight_of_offset(&self.offset(x)) <= self.truncation.weight_cap
    }

    /// Region test for an integer offset from `v` (it must lie in `L`).
    pub fn region_contains_offset(&self, u: &[i64]) -> bool {
        self.basis
            .coordinates(u)
            .is_some_and(|x| self.in_region(&x))
    }

    /// Region test for an absolute exponent.
    pub fn region_contains_exponent(&self, alpha: &[Q]) -> bool {
        let u: Option<Vec<i64>> = alpha
            .iter()
            .zip(&self.v)
            .map(|(a, b)| {
                let d = a - b;
                if is_integer(&d) {
                    to_i64(&d)
                } else {
                    None
                }
            })
            .collect();
        u.is_some_and(|u| self.region_contains_offset(&u))
    }

    pub fn max_log_degree(&self) -> u32 {
        self.terms
            .values()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Rewrites a polynomial in `ℓ_k` as one in `log x_1..log x_n` via
    /// `ℓ_k = Σ_j b^(k)_j log x_j`.
    pub fn to_log_coordinates(&self, p: &Poly) -> Poly {
        let n = self.v.len();
        let images: Vec<Poly> = self
            .bindings
            .iter()
            .map(|b| Poly::linear(&b.iter().map(|&x| q(x)).collect::<Vec<_>>()))
            .collect();
        p.compose(&images, n)
    }

    /// The term of least w-weight (ties broken by Gale coordinates) with the
    /// lexicographically leading monomial of its coefficient in `log x_j`.
    pub fn starting_monomial(&self) -> Option<StartingMonomial> {
        let (x, p) = self.terms.iter().min_by(|(x1, _), (x2, _)| {
            let w1 = self.weight_of_offset(&self.offset(x1));
            let w2 = self.weight_of_offset(&self.offset(x2));
            w1.cmp(&w2).then_with(|| x1.cmp(x2))
        })?;
        let lam = self.to_log_coordinates(p);
        Some(StartingMonomial {
            exponent: self.exponent(x),
            log_exponents: lam.lex_leading()?.clone(),
        })
    }

    pub fn scale(&self, c: &Q) -> LogSeries {
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(x, p)| (x.clone(), p.scale(c)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        out
    }

    /// Terms keyed by absolute exponent with coefficients in `log x_j`.
    pub fn absolute_terms(&self) -> BTreeMap<Vec<Q>, Poly> {
        self.terms
            .iter()
            .map(|(x, p)| (self.exponent(x), self.to_log_coordinates(p)))
            .collect()
    }
}

/// Result of comparing two linear combinations of series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    /// Exponents inside every involved region at which a term was compared.
    pub compared: usize,
    pub mismatch: Option<Vec<Q>>,
}

impl Agreement {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares `Σ c_i S_i` with `Σ d_j T_j` term by term on the intersection of
/// all truncation regions, in the `log x_j` basis.
pub fn compare_combinations(lhs: &[(Q, &LogSeries)], rhs: &[(Q, &LogSeries)]) -> Agreement {
    let mut diff: BTreeMap<Vec<Q>, Poly> = BTreeMap::new();
    let n = lhs.iter().chain(rhs).next().map_or(0, |(_, s)| s.v.len());
    let mut accumulate = |sign: i64, side: &[(Q, &LogSeries)]| {
        for (c, s) in side {
            for (alpha, p) in s.absolute_terms() {
                let slot = diff.entry(alpha).or_insert_with(|| Poly::zero(n));
                slot.add_assign(&p.scale(&(c * q(sign))));
            }
        }
    };
    accumulate(1, lhs);
    accumulate(-1, rhs);
    let mut compared = 0;
    for (alpha, p) in diff {
        let inside = lhs
            .iter()
            .chain(rhs)
            .all(|(_, s)| s.region_contains_exponent(&alpha));
        if !inside {
            continue;
        }
        compared += 1;
        if !p.is_zero() {
            return Agreement {
                compared,
                mismatch: Some(alpha),
            };
        }
    }
    Agreement {
        compared,
        mismatch: None,
    }
}
