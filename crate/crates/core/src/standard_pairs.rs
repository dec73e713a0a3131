//! Standard pairs of a monomial ideal by direct search over coordinate
//! subsets and a bounded box of exponents.

use std::collections::BTreeSet;

use crate::toric::MonomialIdeal;

/// `(a, σ)`: the family `∂^a · k[∂_σ]` of standard monomials. `sigma` holds
/// 0-based coordinate indices and `a` vanishes on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub a: Vec<u32>,
    pub sigma: BTreeSet<usize>,
}

impl StandardPair {
    /// Whether `c` lies in `a + N^σ`.
    pub fn covers(&self, c: &[u32]) -> bool {
        c.iter()
            .enumerate()
            .all(|(i, &ci)| self.sigma.contains(&i) || ci == self.a[i])
    }
}

impl std::fmt::Display for StandardPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .a
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if self.sigma.contains(&i) {
                    "*".to_string()
                } else {
                    a.to_string()
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

// (a, σ) avoids M: no generator divides ∂^a ∂^b for any b ∈ N^σ
fn avoids(m: &MonomialIdeal, a: &[u32], sigma: &BTreeSet<usize>) -> bool {
    m.generators
        .iter()
        .all(|g| (0..a.len()).any(|i| !sigma.contains(&i) && a[i] < g[i]))
}

/// All standard pairs, sorted by `(a, σ)`.
pub fn standard_pairs(m: &MonomialIdeal) -> Vec<StandardPair> {
    let n = m.nvars;
    let bound: Vec<u32> = (0..n)
        .map(|i| m.generators.iter().map(|g| g[i]).max().unwrap_or(0))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let sigma: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let free: Vec<usize> = (0..n).filter(|i| !sigma.contains(i)).collect();
        let mut a = vec![0u32; n];
        loop {
            if avoids(m, &a, &sigma) {
                let maximal = free.iter().all(|&l| {
                    let mut wider = sigma.clone();
                    wider.insert(l);
                    !avoids(m, &a, &wider)
                });
                if maximal {
                    out.push(StandardPair {
                        a: a.clone(),
                        sigma: sigma.clone(),
                    });
                }
            }
            // odometer over the free coordinates
            let mut pos = 0;
            while pos < free.len() {
                let i = free[pos];
                if a[i] < bound[i] {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
                pos += 1;
            }
            if pos == free.len() {
                break;
            }
        }
    }
    out.sort();
    out
}

/// True iff the standard monomials of `m` with exponents in `[0, box_bound]`
/// are exactly those covered by `pairs`.
pub fn standard_monomial_cover_check(
    m: &MonomialIdeal,
    pairs: &[StandardPair],
    box_bound: u32,
) -> bool {
    let n = m.nvars;
    let mut c = vec![0u32; n];
    loop {
        let standard = !m.contains(&c);
        let covered = pairs.iter().any(|p| p.covers(&c));
        if standard != covered {
            return false;
        }
        let mut pos = 0;
        while pos < n {
            if c[pos] < box_bound {
                c[pos] += 1;
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
        if pos == n {
            return true;
        }
    }
}
