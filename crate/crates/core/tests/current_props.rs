//! Lie algebra laws for the extended current algebra.

mod common;

use common::{current, spinor};
use proptest::prelude::*;
use s3ca::cocycle::graded_cocycle;
use s3ca::current::{cur_bracket, CurrentElement};
use s3ca::matquat::{chevalley_data, killing, CMatrix};
use s3ca::suites::jacobi_defect;
use s3ca::current::CentralMode;

fn br(x: &CurrentElement, y: &CurrentElement) -> CurrentElement {
    cur_bracket(x, y).unwrap()
}

fn unit_matrix(n: usize) -> impl Strategy<Value = CMatrix> {
    (1..=n, 1..=n).prop_map(move |(i, j)| CMatrix::e(n, i, j).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn antisymmetry(x in current(2, 2), y in current(2, 2)) {
        prop_assert!(br(&x, &y).add(&br(&y, &x)).unwrap().is_zero());
    }

    #[test]
    fn jacobi(x in current(2, 1), y in current(2, 1), z in current(2, 1)) {
        prop_assert!(jacobi_defect(&x, &y, &z, CentralMode::Graded).unwrap().is_zero());
    }

    #[test]
    fn sigma_equivariance(x in current(3, 2), y in current(3, 2)) {
        prop_assert_eq!(br(&x, &y).sigma(), br(&x.sigma(), &y.sigma()));
    }

    #[test]
    fn central_term_is_killing_times_cocycle(
        p in spinor(2), q in spinor(2), x in unit_matrix(3), y in unit_matrix(3)
    ) {
        let b = br(&CurrentElement::tensor(&p, &x), &CurrentElement::tensor(&q, &y));
        let kf = killing(&x, &y).unwrap();
        for k in 0..3 {
            prop_assert_eq!(&b.central[k], &(&kf * &graded_cocycle(k, &p, &q).unwrap()));
        }
    }

    #[test]
    fn derivation_and_centre(x in current(2, 2)) {
        let nv = CurrentElement::nv(2);
        for k in 0..3 {
            let a = CurrentElement::central_unit(2, k).unwrap();
            prop_assert!(br(&a, &x).is_zero());
        }
        let mut want = CurrentElement::zero(2);
        for (&(i, j), phi) in x.body() {
            for (d, part) in phi.homogeneous_parts() {
                want.add_body(i, j, &part.scale(&s3ca::Scalar::frac(d, 2)));
            }
        }
        prop_assert_eq!(br(&nv, &x), want);
    }
}

#[test]
fn cartan_part_is_commutative() {
    let n = 3;
    let d = chevalley_data(n).unwrap();
    let mut h: Vec<CurrentElement> = d.h.iter().map(|m| CurrentElement::tensor(&s3ca::spinor::Spinor::unit(), m)).collect();
    h.push(CurrentElement::nv(n));
    for k in 0..3 {
        h.push(CurrentElement::central_unit(n, k).unwrap());
    }
    for a in &h {
        for b in &h {
            assert!(br(a, b).is_zero());
        }
    }
}
