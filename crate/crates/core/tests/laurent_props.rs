//! Ring, derivation and integration laws for Laurent polynomials.

mod common;

use common::{poly, polynomial, scalar};
use proptest::prelude::*;
use s3ca::laurent::Field;
use s3ca::{LaurentPoly, Scalar, Var};

const VARS: [Var; 4] = [Var::Z1, Var::Z1c, Var::Z2, Var::Z2c];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn conjugation_is_multiplicative(p in poly(), q in poly()) {
        prop_assert_eq!((&p * &q).conj(), &p.conj() * &q.conj());
        prop_assert_eq!(p.conj().conj(), p.clone());
    }

    #[test]
    fn restriction_is_a_ring_homomorphism(p in poly(), q in poly()) {
        let lhs = (&p * &q).restrict_s3();
        let rhs = p.restrict_s3().mul(&q.restrict_s3());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_derivatives_obey_leibniz(p in poly(), q in poly()) {
        for v in VARS {
            let lhs = (&p * &q).derive(v);
            let rhs = &(&p.derive(v) * &q) + &(&p * &q.derive(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn vector_fields_obey_leibniz(p in poly(), q in poly()) {
        for f in Field::ALL {
            let lhs = (&p * &q).apply_field(f);
            let rhs = &(&p.apply_field(f) * &q) + &(&p * &q.apply_field(f));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tangent_fields_integrate_to_zero(p in polynomial()) {
        for f in [Field::EPlus, Field::EMinus, Field::Theta, Field::Theta0, Field::Theta1, Field::Theta2] {
            prop_assert!(p.apply_field(f).restrict_s3().normint().is_zero());
        }
    }

    #[test]
    fn integral_commutes_with_conjugation(p in poly()) {
        prop_assert_eq!(p.conj().normint(), p.normint().conj());
    }

    #[test]
    fn n0_measures_half_the_degree(p in poly()) {
        let mut want = LaurentPoly::zero();
        for (d, part) in p.homogeneous_parts() {
            want = &want + &part.scale(&Scalar::frac(d, 2));
        }
        prop_assert_eq!(p.n0(), want);
    }

    #[test]
    fn scaling_is_linear(p in poly(), a in scalar()) {
        prop_assert_eq!(p.scale(&a).normint(), &a * &p.normint());
    }

    #[test]
    fn print_parse_round_trip(p in poly()) {
        let back: LaurentPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn r_is_the_squared_radius() {
    let p: LaurentPoly = "z1*z1c + z2*z2c - r2".parse().unwrap();
    assert!(p.is_zero());
}
