#![allow(dead_code)]

use gkz_core::exponents::Support;
use gkz_core::lattice::{kernel_lattice_basis, IntegerMatrix, LatticeBasis};
use gkz_core::rational::{qvec, Q};
use gkz_core::toric::{
    buchberger, lattice_ideal_generators, saturate_to_toric, Binomial, Cone, GroebnerBasis,
    DEFAULT_SPAIR_BUDGET,
};

pub struct Setup {
    pub a: IntegerMatrix,
    pub basis: LatticeBasis,
    pub toric: Vec<Binomial>,
    pub gb: GroebnerBasis,
    pub w: Vec<Q>,
    pub cone: Cone,
}

pub fn setup(rows: &[&[i64]], w: &[i64]) -> Setup {
    let a = IntegerMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    let basis = kernel_lattice_basis(&a, rows.len()).unwrap();
    let toric = saturate_to_toric(&lattice_ideal_generators(&basis), DEFAULT_SPAIR_BUDGET).unwrap();
    let w = qvec(w);
    let gb = buchberger(&toric, &w).unwrap();
    let cone = Cone::new(&gb, &basis, &w).unwrap();
    Setup {
        a,
        basis,
        toric,
        gb,
        w,
        cone,
    }
}

pub fn curve() -> Setup {
    setup(&[&[1, 1, 1], &[0, 1, 2]], &[1, 0, 1])
}

pub fn quartic() -> Setup {
    setup(&[&[1, 1, 1, 1], &[0, 1, 3, 4]], &[3, 0, 0, 1])
}

pub fn square() -> Setup {
    setup(
        &[&[1, 1, 1, 1, 1], &[-1, 1, 1, -1, 0], &[-1, -1, 1, 1, 0]],
        &[1, 1, 1, 1, 0],
    )
}

/// 1-based index list to a support.
pub fn sup(xs: &[usize]) -> Support {
    xs.iter().map(|x| x - 1).collect()
}

pub fn sups(xs: &[&[usize]]) -> Vec<Support> {
    xs.iter().map(|s| sup(s)).collect()
}

use gkz_core::verifier::HypergeometricSystem;

pub fn system(s: &Setup, beta: &[i64]) -> HypergeometricSystem {
    HypergeometricSystem {
        a: s.a.clone(),
        beta: qvec(beta),
        toric: s.toric.clone(),
    }
}
