mod common;

use std::collections::BTreeSet;

use common::*;
use gkz_core::arrangement::faces;
use gkz_core::exponents::{ns_classes, support_order, Support};
use gkz_core::rational::qvec;

fn sorted(mut v: Vec<Support>) -> Vec<Support> {
    v.sort_by(support_order);
    v
}

#[test]
fn curve_classes() {
    let s = curve();
    let cls = ns_classes(&qvec(&[0, 12, -2]), &s.cone, 10);
    assert_eq!(cls.ns, sorted(sups(&[&[2], &[3], &[]])));
    assert_eq!(cls.ns_c, sups(&[&[1, 3]]));
    assert_eq!((cls.params.m, cls.params.big_m), (0, Some(2)));
    assert_eq!(cls.params.i0, sup(&[3]));
    assert!(cls.fully_certified());
}

#[test]
fn quartic_classes() {
    let s = quartic();
    let cls = ns_classes(&qvec(&[-1, -1, 0, 0]), &s.cone, 10);
    assert_eq!(cls.ns, sorted(sups(&[&[2], &[3], &[2, 3], &[1, 2]])));
    assert_eq!(
        cls.ns_c,
        sorted(sups(&[&[1, 3], &[2, 4], &[1, 4], &[1, 3, 4], &[1, 2, 4]]))
    );
    assert_eq!((cls.params.m, cls.params.big_m), (1, Some(2)));
    assert_eq!(cls.params.i0, sup(&[1, 2]));
    assert!(cls.fully_certified());
}

#[test]
fn square_classes() {
    let s = square();
    let cls = ns_classes(&qvec(&[0, 0, 0, 0, 1]), &s.cone, 10);
    assert_eq!(cls.ns, sorted(sups(&[&[], &[5]])));
    assert_eq!(
        cls.ns_c,
        sorted(sups(&[
            &[1, 3],
            &[2, 4],
            &[1, 3, 5],
            &[2, 4, 5],
            &[1, 2, 3, 4]
        ]))
    );
    assert_eq!((cls.params.m, cls.params.big_m), (0, Some(2)));
    assert!(cls.params.i0.is_empty() && cls.params.k.is_empty());
    assert!(cls.fully_certified());
}

#[test]
fn quartic_faces_carry_the_classified_supports() {
    let s = quartic();
    let v = qvec(&[-1, -1, 0, 0]);
    let cls = ns_classes(&v, &s.cone, 10);
    let fs = faces(&v, &s.basis, 10).unwrap();
    let all: BTreeSet<Support> = fs.iter().map(|f| f.support.clone()).collect();
    let occupied: BTreeSet<Support> = fs
        .iter()
        .filter(|f| f.lattice_points > 0)
        .map(|f| f.support.clone())
        .collect();
    let classified: BTreeSet<Support> = cls.ns.iter().chain(&cls.ns_c).cloned().collect();
    // lattice points on lower-dimensional faces can add supports (I_0 sits at a vertex)
    assert!(occupied.is_subset(&classified));
    assert!(classified.is_subset(&all));
    assert_eq!(all.len() - classified.len(), 2);
}
