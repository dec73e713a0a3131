//! Randomized checks with fixed seeds. Each returns `Err` with the failing
//! input so the acceptance gate can print it on one line.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gkz_core::exponents::{
    classify_point, fake_exponents, gale_box, ns_classes, nsupp, smallest_in_class, FakeExponent,
    Support,
};
use gkz_core::lattice::{
    elementary_divisors, kernel_lattice_basis, solve_affine, AffineSolution, IntegerMatrix,
};
use gkz_core::rational::{dot_q, q, Q};
use gkz_core::series::{
    a_u_expansion, compare_combinations, frobenius_method1, frobenius_method2, Poly, Window,
};
use gkz_core::standard_pairs::{standard_monomial_cover_check, standard_pairs};
use gkz_core::toric::{initial_ideal, reduces_to_zero, Binomial, MonomialIdeal};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use crate::common::{curve, quartic, square, Setup};

const SEED: [u8; 32] = *b"frobenius-perturbation-seed-0042";

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub struct Example {
    pub name: &'static str,
    pub setup: Setup,
    pub beta: Vec<i64>,
    pub v: Vec<Q>,
}

pub fn examples() -> Vec<Example> {
    vec![
        Example {
            name: "curve",
            setup: curve(),
            beta: vec![10, 8],
            v: gkz_core::rational::qvec(&[0, 12, -2]),
        },
        Example {
            name: "quartic",
            setup: quartic(),
            beta: vec![-2, -1],
            v: gkz_core::rational::qvec(&[-1, -1, 0, 0]),
        },
        Example {
            name: "square",
            setup: square(),
            beta: vec![1, 0, 0],
            v: gkz_core::rational::qvec(&[0, 0, 0, 0, 1]),
        },
    ]
}

pub fn exponents_of(s: &Setup, beta: &[Q]) -> gkz_core::Result<Vec<FakeExponent>> {
    let init = initial_ideal(&s.gb, s.a.ncols());
    fake_exponents(&s.a, beta, &standard_pairs(&init))
}

fn lattice_vector(s: &Setup, x: &[i64]) -> Vec<i64> {
    s.basis.lift(x)
}

fn shifted(v: &[Q], u: &[i64]) -> Vec<Q> {
    v.iter().zip(u).map(|(a, &b)| a + q(b)).collect()
}

fn gale_strategy(k: usize, r: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-r..=r, k)
}

/// A lattice vector with every coordinate nonzero, from random Gale
/// coordinates; retried until one is found.
fn full_support_direction(s: &Setup, seed: &[i64]) -> Option<Vec<i64>> {
    let k = s.basis.rank();
    for shift in 0..20i64 {
        let x: Vec<i64> = seed
            .iter()
            .enumerate()
            .map(|(i, &c)| c + shift * (i as i64 + 1))
            .collect();
        let b = lattice_vector(s, &x);
        if b.iter().all(|&c| c != 0) && x.len() == k {
            return Some(b);
        }
    }
    None
}

/// Kernel basis columns lie in ker A, span a saturated lattice of rank
/// n − rank A, and Gale coordinates invert the lift.
pub fn lattice_kernel() -> Result<(), String> {
    let strat = (
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 2),
        proptest::collection::vec(-4i64..=4, 4),
    );
    run(64, strat, |(rows, x)| {
        let a = IntegerMatrix::new(rows).unwrap();
        let r = a.rank();
        let basis = kernel_lattice_basis(&a, r).unwrap();
        prop_assert_eq!(basis.rank(), 4 - r);
        for c in basis.columns() {
            prop_assert!(a.mul_vec(c).iter().all(|&t| t == 0));
        }
        if basis.rank() > 0 {
            prop_assert!(elementary_divisors(&basis.matrix())
                .iter()
                .all(|d| d.is_one()));
            let xs = &x[..basis.rank()];
            let u = basis.lift(xs);
            prop_assert_eq!(basis.coordinates(&u), Some(xs.to_vec()));
        }
        Ok(())
    })
}

/// `m x = m x0` is solved by `x0`; uniqueness iff full column rank.
pub fn affine_solver() -> Result<(), String> {
    let strat = (
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 3),
        proptest::collection::vec(-3i64..=3, 3),
    );
    run(96, strat, |(rows, x0)| {
        let m = IntegerMatrix::new(rows).unwrap();
        let rhs: Vec<Q> = m.mul_vec(&x0).into_iter().map(q).collect();
        match solve_affine(&m, &rhs) {
            AffineSolution::Unique(x) => {
                prop_assert_eq!(m.rank(), 3);
                prop_assert_eq!(x, x0.iter().map(|&c| q(c)).collect::<Vec<_>>());
            }
            AffineSolution::PositiveDimensional => prop_assert!(m.rank() < 3),
            AffineSolution::NoSolution => prop_assert!(false, "consistent system rejected"),
        }
        Ok(())
    })
}

/// Lattice binomials reduce to zero modulo the Gröbner basis; binomials
/// whose exponents have different A-degrees do not.
pub fn toric_membership() -> Result<(), String> {
    for ex in examples() {
        let s = &ex.setup;
        let n = s.a.ncols();
        let k = s.basis.rank();
        let strat = (gale_strategy(k, 4), proptest::collection::vec(-3i64..=3, n));
        run(48, strat, |(x, y)| {
            let u = lattice_vector(s, &x);
            prop_assert!(reduces_to_zero(&Binomial::from_vector(&u), &s.gb.elements).unwrap());
            if s.a.mul_vec(&y).iter().any(|&t| t != 0) {
                prop_assert!(!reduces_to_zero(&Binomial::from_vector(&y), &s.gb.elements).unwrap());
            }
            Ok(())
        })
        .map_err(|e| format!("{}: {e}", ex.name))?;
    }
    Ok(())
}

/// `in_cone` on the Gale box `[−6,6]^k` agrees with the monoid spanned by
/// the Gröbner directions, enumerated with coefficients up to 12. A point
/// of positive weight outside the monoid must exist for the quartic.
pub fn cone_consistency() -> Result<(), String> {
    for s in [curve(), quartic()] {
        let k = s.basis.rank();
        let gens: Vec<Vec<i64>> =
            s.gb.elements
                .iter()
                .map(|b| s.basis.coordinates(&b.direction()).unwrap())
                .collect();
        // every Σ c_i g_i with 0 <= c_i <= 12
        let mut monoid: BTreeSet<Vec<i64>> = [vec![0; k]].into_iter().collect();
        for g in &gens {
            let mut next = BTreeSet::new();
            for p in &monoid {
                for c in 0..=12 {
                    next.insert(p.iter().zip(g).map(|(a, b)| a + c * b).collect::<Vec<_>>());
                }
            }
            monoid = next;
        }
        for x in gale_box(k, 6) {
            let u = s.basis.lift(&x);
            let got = s.cone.in_cone(&u).unwrap();
            if got != monoid.contains(&x) {
                return Err(format!("in_cone({u:?}) = {got}, monoid disagrees"));
            }
        }
    }
    let s = quartic();
    let u = [2, -5, 7, -4];
    let wu = dot_q(&s.w, &u);
    if !(wu > q(0) && !s.cone.in_cone(&u).unwrap()) {
        return Err(format!(
            "{u:?} should have positive weight ({wu}) and lie outside C(w)"
        ));
    }
    Ok(())
}

/// Standard pairs cover exactly the standard monomials of random monomial
/// ideals.
pub fn standard_monomial_cover() -> Result<(), String> {
    let strat = (3usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..=4)
            .prop_map(move |g| (n, g))
    });
    run(64, strat, |(n, gens)| {
        let gens: Vec<Vec<u32>> = gens
            .into_iter()
            .filter(|g| g.iter().any(|&e| e > 0))
            .collect();
        prop_assume!(!gens.is_empty());
        let m = MonomialIdeal::new(n, gens);
        let pairs = standard_pairs(&m);
        for p in &pairs {
            prop_assert!(p.sigma.iter().all(|&i| p.a[i] == 0));
        }
        prop_assert!(standard_monomial_cover_check(&m, &pairs, 6));
        Ok(())
    })
}

/// `classify_point` is `nsupp(v + Bx)`.
pub fn classify_matches_nsupp() -> Result<(), String> {
    for ex in examples() {
        let s = &ex.setup;
        run(64, gale_strategy(s.basis.rank(), 12), |x| {
            let direct = nsupp(&shifted(&ex.v, &s.basis.lift(&x)));
            prop_assert_eq!(classify_point(&ex.v, &s.basis, &x), direct);
            Ok(())
        })
        .map_err(|e| format!("{}: {e}", ex.name))?;
    }
    Ok(())
}

/// Supports contained in `nsupp(v)` belong to `NS_w(v)`, and the offsets
/// realizing them have positive weight; for least-weight `v`, the supports
/// of congruent fake exponents belong to `NS_w(v)` too. Run on the listed
/// parameters and on random integer parameters.
pub fn negative_support_laws() -> Result<(), String> {
    fn check(s: &Setup, beta: &[Q]) -> std::result::Result<(), TestCaseError> {
        let Ok(exps) = exponents_of(s, beta) else {
            return Ok(());
        };
        let least = smallest_in_class(&exps, &s.basis, &s.w);
        let k = s.basis.rank();
        let offset = |f: &FakeExponent, v: &[Q]| -> Option<Vec<i64>> {
            let d: Option<Vec<i64>> =
                f.v.iter()
                    .zip(v)
                    .map(|(a, b)| {
                        let t = a - b;
                        t.is_integer()
                            .then(|| i64::try_from(t.to_integer()).ok())
                            .flatten()
                    })
                    .collect();
            d.and_then(|d| s.basis.coordinates(&d))
        };
        for (e, &is_least) in exps.iter().zip(&least) {
            let v = &e.v;
            let i0 = nsupp(v);
            // the box must reach every congruent fake exponent
            let reach = exps
                .iter()
                .filter_map(|f| offset(f, v))
                .flatten()
                .map(i64::abs)
                .max()
                .unwrap_or(0);
            let cls = ns_classes(v, &s.cone, reach.max(6) + 1);
            for x in gale_box(k, 6) {
                let u = s.basis.lift(&x);
                let sup = nsupp(&shifted(v, &u));
                if !sup.is_subset(&i0) {
                    continue;
                }
                prop_assert!(cls.in_ns(&sup), "v = {:?}: {:?} not in NS", v, sup);
                if u.iter().any(|&c| c != 0) {
                    prop_assert!(dot_q(&s.w, &u) > q(0), "v = {:?}, u = {:?}", v, u);
                }
            }
            if !is_least {
                continue;
            }
            for f in &exps {
                if offset(f, v).is_some() {
                    prop_assert!(cls.in_ns(&nsupp(&f.v)), "v = {:?}, v' = {:?}", v, f.v);
                }
            }
        }
        Ok(())
    }
    for ex in examples() {
        let s = &ex.setup;
        let beta: Vec<Q> = ex.beta.iter().map(|&b| q(b)).collect();
        check(s, &beta).map_err(|e| format!("{}: {e}", ex.name))?;
        let d = s.a.nrows();
        let strat = proptest::collection::vec(-6i64..=6, d);
        run(12, strat, |b| {
            check(s, &b.into_iter().map(q).collect::<Vec<_>>())
        })
        .map_err(|e| format!("{}: {e}", ex.name))?;
    }
    Ok(())
}

/// Product of the nonzero factors of `[x]_k`.
fn hat_falling(x: &Q, k: i64) -> Q {
    (0..k)
        .map(|t| x - q(t))
        .filter(|f| !f.is_zero())
        .fold(q(1), |acc, f| acc * f)
}

/// Order and leading coefficient of `[v + sb]_u` expanded directly.
fn brute_falling(v: &[Q], b: &[i64], u: &[u32]) -> (u32, Q) {
    let mut p = Poly::one(1);
    for ((vi, &bi), &ui) in v.iter().zip(b).zip(u) {
        for t in 0..i64::from(ui) {
            let f = Poly::constant(1, vi - q(t)).add(&Poly::linear(&[q(bi)]));
            p = p.mul(&f);
        }
    }
    let ord = p.order().expect("nonzero product");
    (ord, p.coeff(&[ord]))
}

/// The s-adic order of `[v + sb]_u` for `u ∈ N^n` and of `a_u(s)` for
/// `u ∈ L`, with their leading coefficients, against direct expansion and
/// set arithmetic.
pub fn perturbation_orders() -> Result<(), String> {
    for ex in examples().into_iter().take(2) {
        let s = &ex.setup;
        let n = s.a.ncols();
        let k = s.basis.rank();
        let v = ex.v.clone();
        let i0 = nsupp(&v);
        // falling factorials over N^n
        let strat = (proptest::collection::vec(0u32..=6, n), gale_strategy(k, 5));
        run(48, strat, |(u, seed)| {
            let Some(b) = full_support_direction(s, &seed) else {
                return Ok(());
            };
            let vu: Vec<Q> = v
                .iter()
                .zip(&u)
                .map(|(a, &c)| a - q(i64::from(c)))
                .collect();
            let grown: Support = nsupp(&vu).difference(&i0).copied().collect();
            let (ord, lead) = brute_falling(&v, &b, &u);
            prop_assert_eq!(ord as usize, grown.len());
            let mut expect = q(1);
            for (i, (vi, &ui)) in v.iter().zip(&u).enumerate() {
                if grown.contains(&i) {
                    let vi_int = vi.to_integer();
                    let vi_n: i64 = i64::try_from(vi_int).unwrap();
                    let gap = i64::from(ui) - 1 - vi_n;
                    let sign = if gap % 2 == 0 { q(1) } else { q(-1) };
                    let fact = |m: i64| (1..=m).fold(q(1), |a, t| a * q(t));
                    expect *= q(b[i]) * fact(vi_n) * sign * fact(gap);
                } else {
                    expect *= hat_falling(vi, i64::from(ui));
                }
            }
            prop_assert_eq!(lead, expect);
            Ok(())
        })
        .map_err(|e| format!("{} (falling factorials): {e}", ex.name))?;

        // order laws for a_u(s) on every enumerated u
        let dirs = proptest::collection::vec(gale_strategy(k, 5), 4);
        run(8, dirs, |seeds| {
            for seed in seeds {
                let Some(b) = full_support_direction(s, &seed) else {
                    continue;
                };
                for x in gale_box(k, if k == 1 { 12 } else { 5 }) {
                    let u = s.basis.lift(&x);
                    let vu = shifted(&v, &u);
                    let j = nsupp(&vu);
                    let added = j.difference(&i0).count();
                    let removed = i0.difference(&j).count();
                    let e = a_u_expansion(&v, std::slice::from_ref(&b), &u, 1).unwrap();
                    prop_assert_eq!(e.num_zero.len(), added);
                    prop_assert_eq!(e.den_zero.len(), removed);
                    prop_assert_eq!(e.order(), j.len() as i64 - i0.len() as i64);
                    let (shift, p) = e.laurent(&b).unwrap();
                    prop_assert_eq!(shift, e.order());
                    let mut lead = q(1);
                    for i in j.difference(&i0) {
                        lead *= q(b[*i]);
                    }
                    for i in i0.difference(&j) {
                        lead /= q(b[*i]);
                    }
                    for (i, &ui) in u.iter().enumerate() {
                        if ui < 0 {
                            lead *= hat_falling(&v[i], -ui);
                        } else {
                            lead /= hat_falling(&vu[i], ui);
                        }
                    }
                    prop_assert_eq!(p.constant_term(), lead, "u = {:?}, b = {:?}", u, b);
                }
            }
            Ok(())
        })
        .map_err(|e| format!("{} (orders): {e}", ex.name))?;
    }
    Ok(())
}

/// A single perturbation vector under the multi-parameter construction is
/// the single-parameter construction, up to the factor `Π_{I_0∖K} b_i` and
/// the shift in derivative order.
pub fn method2_reduces_to_method1() -> Result<(), String> {
    let win = Window {
        weight_cap: q(14),
        radius: 8,
    };
    for ex in examples() {
        let s = &ex.setup;
        let k = s.basis.rank();
        let v = ex.v.clone();
        let cls = ns_classes(&v, &s.cone, 10);
        let params = cls.params.clone();
        let big_m = params.big_m.unwrap();
        let shift = params.m - params.k.len();
        let outer: Support = params.i0.difference(&params.k).copied().collect();
        run(6, gale_strategy(k, 4), |x| {
            let b = s.basis.lift(&x);
            prop_assume!(params.i0.iter().all(|&i| b[i] != 0));
            prop_assume!(nsupp(&v).iter().all(|&i| b[i] != 0));
            let lift: Q = outer.iter().fold(q(1), |acc, &i| acc * q(b[i]));
            for p in 0..(big_m - params.k.len()) as u32 {
                let two =
                    frobenius_method2(&v, std::slice::from_ref(&b), &cls, &s.cone, &[p], &win)
                        .map_err(|e| TestCaseError::fail(e.to_string()))?;
                if (p as usize) < shift {
                    prop_assert!(two.is_empty(), "p = {}", p);
                    continue;
                }
                let j = p - shift as u32;
                let one = frobenius_method1(&v, &b, &cls, &s.cone, j, &win)
                    .map_err(|e| TestCaseError::fail(e.to_string()))?;
                let ratio = lift.clone() * (1..=i64::from(p)).fold(q(1), |a, t| a * q(t))
                    / (1..=i64::from(j)).fold(q(1), |a, t| a * q(t));
                let ag = compare_combinations(&[(q(1), &two)], &[(ratio, &one)]);
                prop_assert!(
                    ag.holds() && ag.compared > 0,
                    "b = {:?}, p = {}: {:?}",
                    b,
                    p,
                    ag
                );
            }
            Ok(())
        })
        .map_err(|e| format!("{}: {e}", ex.name))?;
    }
    Ok(())
}

pub type Check = (&'static str, fn() -> Result<(), String>);

pub fn all() -> Vec<Check> {
    vec![
        ("perturbation order laws", perturbation_orders),
        ("negative supports of fake exponents", negative_support_laws),
        ("cone membership vs monoid", cone_consistency),
        ("standard monomial cover", standard_monomial_cover),
        (
            "single-vector multi-parameter method",
            method2_reduces_to_method1,
        ),
        ("kernel lattice", lattice_kernel),
        ("affine solver", affine_solver),
        ("toric membership", toric_membership),
        ("point classification", classify_matches_nsupp),
    ]
}
