mod common;

use common::*;
use gkz_core::exponents::{ns_classes, nsupp};
use gkz_core::rational::{q, qvec};
use gkz_core::series::*;
use gkz_core::verifier::verify;

#[test]
fn curve_method1_matches_scaled_phi() {
    let s = curve();
    let v = qvec(&[0, 12, -2]);
    let cls = ns_classes(&v, &s.cone, 10);
    let win = Window::default();
    let b = vec![1, -2, 1];
    let sys = system(&s, &[10, 8]);

    let f0 = frobenius_method1(&v, &b, &cls, &s.cone, 0, &win).unwrap();
    let phi = phi_series(&qvec(&[2, 8, 0]), &s.cone, &win).unwrap();
    let ag = compare_combinations(&[(q(1), &f0)], &[(q(-5940), &phi)]);
    assert!(ag.holds(), "{ag:?}");
    assert!(ag.compared >= 5);
    let r = verify(&f0, &sys);
    assert!(r.pass() && r.binomials[0].certified > 0, "{r:?}");

    let f1 = frobenius_method1(&v, &b, &cls, &s.cone, 1, &win).unwrap();
    assert_eq!(f1.max_log_degree(), 1);
    let r = verify(&f1, &sys);
    assert!(r.pass() && r.binomials[0].certified > 0, "{r:?}");

    assert!(frobenius_method1(&v, &b, &cls, &s.cone, 2, &win).is_err());
}

#[test]
fn square_method2_solutions() {
    let s = square();
    let v = qvec(&[0, 0, 0, 0, 1]);
    let cls = ns_classes(&v, &s.cone, 10);
    let win = Window::default();
    let bs = s.basis.columns().to_vec();
    let sys = system(&s, &[1, 0, 0]);
    let mut starts = Vec::new();
    for p in [[0u32, 0], [1, 0], [0, 1], [1, 1]] {
        let f = frobenius_method2(&v, &bs, &cls, &s.cone, &p, &win).unwrap();
        let r = verify(&f, &sys);
        assert!(r.pass(), "p = {p:?}: {r:?}");
        assert!(r.binomials.iter().all(|b| b.certified > 0));
        assert_eq!(f.max_log_degree(), p.iter().sum::<u32>());
        // only supports ∅ and {5} occur, with ∅ exactly at u = 0
        for x in f.terms.keys() {
            let sup = nsupp(&f.exponent(x));
            assert!(sup.is_empty() || sup == [4].into_iter().collect());
            assert_eq!(sup.is_empty(), x.iter().all(|&c| c == 0));
        }
        starts.push(f.starting_monomial().unwrap());
    }
    starts.sort();
    starts.dedup();
    assert_eq!(starts.len(), 4);
    assert!(frobenius_method2(&v, &bs, &cls, &s.cone, &[2, 0], &win).is_err());
}

#[test]
fn quartic_method1_and_extra() {
    let s = quartic();
    let v = qvec(&[-1, -1, 0, 0]);
    let cls = ns_classes(&v, &s.cone, 10);
    let win = Window::default();
    let sys = system(&s, &[-2, -1]);
    let v2 = qvec(&[1, -4, 1, 0]);
    let v3 = qvec(&[0, 0, -7, 5]);
    let p2 = phi_series(&v2, &s.cone, &win).unwrap();
    let p3 = phi_series(&v3, &s.cone, &win).unwrap();
    for b in [vec![1, -2, 2, -1], vec![1, -1, -1, 1], vec![1, 1, -7, 5]] {
        let f0 = frobenius_method1(&v, &b, &cls, &s.cone, 0, &win).unwrap();
        let r = verify(&f0, &sys);
        assert!(r.pass(), "{r:?}");
        let (b1, b2, b3) = (q(b[0]), q(b[1]), q(b[2]));
        let c2 = -q(6) / &b1;
        let c3 = q(6) * &b3 / (&b1 * &b2);
        let ag = compare_combinations(&[(q(1), &f0)], &[(c2, &p2), (c3, &p3)]);
        assert!(ag.holds() && ag.compared > 0, "b = {b:?}: {ag:?}");
    }
    let bs = vec![vec![1, -2, 2, -1], vec![1, -1, -1, 1]];
    assert!(method1_condition(&bs, &cls).unwrap().all_zero());
    let extra = frobenius_method1_extra(&v, &bs, &cls, &s.cone, &win).unwrap();
    assert_eq!(extra.max_log_degree(), 1);
    let r = verify(&extra, &sys);
    assert!(
        r.pass() && r.binomials.iter().any(|b| b.certified > 0),
        "{r:?}"
    );
}
