//! 2-cocycle laws.

mod common;

use common::{rational, spinor};
use proptest::prelude::*;
use s3ca::cocycle::{
    check_antisymmetry, check_cocycle_identity, check_graded_n0_compat, cocycle, cocycle_direct,
    graded_cocycle, non_c_linearity_witness,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antisymmetric_and_real(p in spinor(3), q in spinor(3)) {
        for k in 0..3 {
            prop_assert!(check_antisymmetry(k, &p, &q).unwrap());
            prop_assert!(cocycle(k, &p, &q).unwrap().is_real());
        }
    }

    #[test]
    fn cyclic_identity(p in spinor(2), q in spinor(2), r in spinor(2)) {
        for k in 0..3 {
            prop_assert!(check_cocycle_identity(k, &p, &q, &r).unwrap());
        }
    }

    #[test]
    fn real_bilinear(p in spinor(2), p2 in spinor(2), q in spinor(2), a in rational()) {
        for k in 0..3 {
            let sum = cocycle(k, &(&p + &p2), &q).unwrap();
            prop_assert_eq!(sum, &cocycle(k, &p, &q).unwrap() + &cocycle(k, &p2, &q).unwrap());
            prop_assert_eq!(cocycle(k, &p.scale(&a), &q).unwrap(), &a * &cocycle(k, &p, &q).unwrap());
        }
    }

    #[test]
    fn fast_route_matches_definition(p in spinor(2), q in spinor(2)) {
        for k in 0..3 {
            prop_assert_eq!(cocycle(k, &p, &q).unwrap(), cocycle_direct(k, &p, &q).unwrap());
        }
    }

    #[test]
    fn degree_balanced_cocycle_is_n0_compatible(p in spinor(2), q in spinor(2)) {
        for k in 0..3 {
            prop_assert!(check_graded_n0_compat(k, &p, &q).unwrap());
            prop_assert!(graded_cocycle(k, &p, &q).unwrap().is_real());
        }
    }
}

#[test]
fn not_complex_bilinear() {
    let (_, _, lhs, rhs) = non_c_linearity_witness().unwrap();
    assert_ne!(lhs, rhs);
}

#[test]
fn k_out_of_range() {
    let p = s3ca::spinor::Spinor::kappa();
    assert!(cocycle(3, &p, &p).is_err());
}
