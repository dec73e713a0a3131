//! Falling factorials and the perturbed coefficients
//! `a_u(s) = [v + sb]_{u−} / [v + sb + u]_{u+}` kept as products of affine
//! linear forms in the perturbation parameters.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponents::Support;
use crate::rational::{q, Q};
use crate::series::poly::Poly;

/// `[v]_u = Π_j v_j (v_j − 1) ⋯ (v_j − u_j + 1)`.
pub fn falling_factorial(v: &[Q], u: &[u32]) -> Q {
    let mut out = q(1);
    for (vj, &uj) in v.iter().zip(u) {
        for t in 0..i64::from(uj) {
            out *= vj - q(t);
        }
    }
    out
}

/// φ-coefficient `[v]_{u−} / [v+u]_{u+}`; `None` when the denominator
/// vanishes.
pub fn phi_coefficient(v: &[Q], u: &[i64]) -> Option<Q> {
    let minus: Vec<u32> = u.iter().map(|&x| (-x).max(0) as u32).collect();
    let plus: Vec<u32> = u.iter().map(|&x| x.max(0) as u32).collect();
    let shifted: Vec<Q> = v.iter().zip(u).map(|(a, &b)| a + q(b)).collect();
    let den = falling_factorial(&shifted, &plus);
    (!den.is_zero()).then(|| falling_factorial(v, &minus) / den)
}

/// `constant + Σ_k s_k b^(k)_coord`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFactor {
    pub constant: Q,
    pub coord: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientFactors {
    pub numerator: Vec<AffineFactor>,
    pub denominator: Vec<AffineFactor>,
}

pub fn coefficient_factors(v: &[Q], u: &[i64]) -> CoefficientFactors {
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    for (i, (vi, &ui)) in v.iter().zip(u).enumerate() {
        if ui < 0 {
            for t in 0..-ui {
                numerator.push(AffineFactor {
                    constant: vi - q(t),
                    coord: i,
                });
            }
        } else {
            for t in 0..ui {
                denominator.push(AffineFactor {
                    constant: vi + q(ui - t),
                    coord: i,
                });
            }
        }
    }
    CoefficientFactors {
        numerator,
        denominator,
    }
}

/// The linear form `L_i(s) = Σ_k s_k b^(k)_i`.
pub fn linear_form(bindings: &[Vec<i64>], i: usize) -> Poly {
    let coeffs: Vec<Q> = bindings.iter().map(|b| q(b[i])).collect();
    Poly::linear(&coeffs)
}

/// `a_u(s)` split as `Π_{num_zero} L_i / Π_{den_zero} L_j · regular(s)` with
/// `regular` a truncated series with nonzero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub num_zero: Vec<usize>,
    pub den_zero: Vec<usize>,
    pub regular: Poly,
    pub degree: u32,
}

/// Expands `a_u(s)` to total s-degree `degree`.
pub fn a_u_expansion(v: &[Q], bindings: &[Vec<i64>], u: &[i64], degree: u32) -> Result<Expansion> {
    let l = bindings.len();
    let factors = coefficient_factors(v, u);
    let mut regular = Poly::one(l);
    let mut num_zero = Vec::new();
    let mut den_zero = Vec::new();
    for f in &factors.numerator {
        if f.constant.is_zero() {
            num_zero.push(f.coord);
            continue;
        }
        let form = Poly::constant(l, f.constant.clone()).add(&linear_form(bindings, f.coord));
        regular = regular.mul_truncated(&form, Some(degree));
    }
    for f in &factors.denominator {
        let lin = linear_form(bindings, f.coord);
        if f.constant.is_zero() {
            if lin.is_zero() {
                return Err(Error::PerturbationHitsZero(f.coord));
            }
            den_zero.push(f.coord);
            continue;
        }
        regular = regular.mul_truncated(&inverse_affine(&f.constant, &lin, degree), Some(degree));
    }
    Ok(Expansion {
        num_zero,
        den_zero,
        regular,
        degree,
    })
}

/// `1/(c + L) = (1/c) Σ_r (−L/c)^r`, truncated.
fn inverse_affine(c: &Q, lin: &Poly, degree: u32) -> Poly {
    let ratio = lin.scale(&(q(-1) / c));
    let mut term = Poly::constant(lin.nvars(), q(1) / c);
    let mut out = term.clone();
    for _ in 0..degree {
        term = term.mul_truncated(&ratio, Some(degree));
        if term.is_zero() {
            break;
        }
        out.add_assign(&term);
    }
    out
}

impl Expansion {
    /// Order in `s` for a single perturbation that is nonzero on every
    /// coordinate involved.
    pub fn order(&self) -> i64 {
        self.num_zero.len() as i64 - self.den_zero.len() as i64
    }

    /// Single-parameter Laurent form `s^shift · P(s)`; `P` is zero when a
    /// numerator form vanishes identically.
    pub fn laurent(&self, b: &[i64]) -> Result<(i64, Poly)> {
        let mut scalar = q(1);
        for &i in &self.num_zero {
            scalar *= q(b[i]);
        }
        for &j in &self.den_zero {
            if b[j] == 0 {
                return Err(Error::PerturbationHitsZero(j));
            }
            scalar /= q(b[j]);
        }
        Ok((self.order(), self.regular.scale(&scalar)))
    }

    /// `s^prefactor · a_u(s)` as a truncated power series (single parameter).
    pub fn regularized_power(&self, b: &[i64], prefactor: usize) -> Result<Poly> {
        let (shift, p) = self.laurent(b)?;
        let net = shift + prefactor as i64;
        if net < 0 {
            return Err(Error::Internal(format!(
                "pole of order {} survives the prefactor s^{prefactor}",
                -shift
            )));
        }
        let lifted = p.mul(&Poly::monomial(vec![net as u32], q(1)));
        Ok(lifted.truncate(self.degree))
    }

    /// `Π_{i∈prefactor} L_i · a_u(s)`: each zero denominator form is cancelled
    /// against the identical prefactor form.
    pub fn regularized_forms(&self, bindings: &[Vec<i64>], prefactor: &Support) -> Result<Poly> {
        let mut remaining = prefactor.clone();
        for &j in &self.den_zero {
            if !remaining.remove(&j) {
                return Err(Error::Internal(format!(
                    "regularity violated: denominator form at coordinate {} has no matching prefactor",
                    j + 1
                )));
            }
        }
        let mut out = self.regular.clone();
        for &i in self.num_zero.iter().chain(&remaining) {
            out = out.mul_truncated(&linear_form(bindings, i), Some(self.degree));
        }
        Ok(out)
    }
}
