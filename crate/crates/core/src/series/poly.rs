//! Sparse multivariate polynomials with rational coefficients. They serve
//! both as log polynomials (variables `ℓ_k` or `log x_j`) and as the bodies
//! of truncated power series in the perturbation parameters.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{q, Q};

/// Exponent vector of a monomial.
pub type Exps = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exps, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, q(1))
    }

    /// `c · t^e`.
    pub fn monomial(e: Exps, c: Q) -> Self {
        let mut p = Poly::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// `Σ_k coeffs[k] t_k`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[k] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exps, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn add_term(&mut self, e: Exps, c: Q) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Product with all terms of total degree above `cap` dropped.
    pub fn mul_truncated(&self, other: &Poly, cap: Option<u32>) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &other.terms {
                let d2: u32 = e2.iter().sum();
                if cap.is_some_and(|c| d1 + d2 > c) {
                    continue;
                }
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, None)
    }

    pub fn truncate(&self, cap: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Least total degree among the terms.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// The homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, deg: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, k: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[k] -= 1;
            out.add_term(f, c * q(i64::from(e[k])));
        }
        out
    }

    /// Substitutes `t_k ↦ images[k]`, each a polynomial in `target` variables.
    pub fn compose(&self, images: &[Poly], target: usize) -> Poly {
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (k, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term = term.mul(&images[k]);
                }
            }
            out.add_assign(&term);
        }
        out
    }

    /// Lexicographically largest exponent with a nonzero coefficient.
    pub fn lex_leading(&self) -> Option<&Exps> {
        self.terms.keys().next_back()
    }

    /// `Some(c)` with `self = c·other`, when both are nonzero and proportional.
    pub fn ratio_to(&self, other: &Poly) -> Option<Q> {
        let (e, c) = other.terms.iter().next()?;
        let r = self.coeff(e) / c;
        (!r.is_zero() && self == &other.scale(&r)).then_some(r)
    }
}
