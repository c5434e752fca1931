//! Quaternionic product, operators and expansion on spinors.

mod common;

use common::{rational, scalar, spinor};
use proptest::prelude::*;
use s3ca::spinor::{expand, inner_normint, Spinor};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative_with_unit(p in spinor(2), q in spinor(2), r in spinor(1)) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(Spinor::unit().mul(&p), p.clone());
        prop_assert_eq!(p.mul(&Spinor::unit()), p);
    }

    #[test]
    fn right_scalars_commute_with_left_products(p in spinor(2), q in spinor(2), a in scalar()) {
        prop_assert_eq!(p.mul(&q.scale(&a)), p.mul(&q).scale(&a));
    }

    #[test]
    fn bracket_is_the_commutator(p in spinor(2), q in spinor(2)) {
        prop_assert_eq!(p.bracket(&q), p.commutator(&q));
        prop_assert_eq!(p.bracket(&q), -q.bracket(&p));
    }

    #[test]
    fn brackets_are_traceless(p in spinor(2), q in spinor(2)) {
        prop_assert!(p.bracket(&q).trace().restrict_s3().is_zero());
    }

    #[test]
    fn sigma_is_an_involutive_automorphism(p in spinor(2), q in spinor(2)) {
        prop_assert_eq!(p.sigma().sigma(), p.clone());
        prop_assert_eq!(p.mul(&q).sigma(), p.sigma().mul(&q.sigma()));
    }

    #[test]
    fn theta_ops_are_derivations(p in spinor(2), q in spinor(2)) {
        for k in 0..3 {
            let lhs = p.mul(&q).theta_op(k);
            let rhs = &p.theta_op(k).mul(&q) + &p.mul(&q.theta_op(k));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dirac_dagger_dirac_is_laplacian(p in spinor(3)) {
        prop_assert_eq!(p.dirac().dirac_dag(), p.laplacian());
    }

    #[test]
    fn expansion_reconstructs(p in spinor(2), q in spinor(1)) {
        let prod = p.mul(&q).restrict_s3();
        let x = expand(&prod, None).unwrap();
        prop_assert!(x.to_spinor_s3().eq_on_s3(&prod));
    }

    #[test]
    fn homogeneous_parts_sum_back(p in spinor(2), q in spinor(2)) {
        let prod = p.mul(&q);
        let mut sum = Spinor::zero();
        for (d, part) in prod.homogeneous_parts() {
            prop_assert_eq!(part.n0(), part.scale(&s3ca::Scalar::frac(d, 2)));
            sum = &sum + &part;
        }
        prop_assert_eq!(sum, prod);
    }

    #[test]
    fn inner_product_is_hermitian(p in spinor(2), q in spinor(2), a in rational()) {
        prop_assert_eq!(inner_normint(&p, &q), inner_normint(&q, &p).conj());
        prop_assert_eq!(inner_normint(&p.scale(&a), &q), &a * &inner_normint(&p, &q));
    }
}
