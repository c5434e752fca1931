//! Quaternion Lie algebra axioms for gl(n, H).

use proptest::prelude::*;
use s3ca::matquat::{in_mj, killing, mj_embed, qm_bracket, CMatrix, QuatMatrix};
use s3ca::Scalar;

fn cmatrix(n: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-3i64..=3, -3i64..=3), n * n).prop_map(move |v| {
        let mut m = CMatrix::zero(n);
        for (idx, (re, im)) in v.into_iter().enumerate() {
            let s = &Scalar::from_int(re) + &(&Scalar::i() * &Scalar::from_int(im));
            m.set(idx / n + 1, idx % n + 1, s);
        }
        m
    })
}

fn quat(n: usize) -> impl Strategy<Value = QuatMatrix> {
    (cmatrix(n), cmatrix(n)).prop_map(|(a, b)| QuatMatrix::new(a, b).unwrap())
}

fn br(x: &QuatMatrix, y: &QuatMatrix) -> QuatMatrix {
    qm_bracket(x, y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn embedding_is_a_homomorphism(x in quat(2), y in quat(2)) {
        prop_assert!(in_mj(&mj_embed(&x)));
        let lhs = mj_embed(&br(&x, &y));
        let rhs = mj_embed(&x).commutator(&mj_embed(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antisymmetry_and_jacobi(x in quat(2), y in quat(2), z in quat(2)) {
        prop_assert!(br(&x, &y).add(&br(&y, &x)).unwrap().is_zero());
        let j = br(&x, &br(&y, &z))
            .add(&br(&y, &br(&z, &x))).unwrap()
            .add(&br(&z, &br(&x, &y))).unwrap();
        prop_assert!(j.is_zero());
    }

    #[test]
    fn real_bilinear(x in quat(2), x2 in quat(2), y in quat(2), a in -4i64..=4) {
        let a = Scalar::from_int(a);
        prop_assert_eq!(br(&x.add(&x2).unwrap(), &y), br(&x, &y).add(&br(&x2, &y)).unwrap());
        prop_assert_eq!(br(&x.scale(&a), &y), br(&x, &y).scale(&a));
    }

    #[test]
    fn sigma_compatible(x in quat(2), y in quat(2)) {
        prop_assert_eq!(br(&x, &y).sigma(), br(&x.sigma(), &y.sigma()));
    }

    #[test]
    fn killing_form_is_symmetric_and_invariant(x in cmatrix(3), y in cmatrix(3), z in cmatrix(3)) {
        prop_assert_eq!(killing(&x, &y).unwrap(), killing(&y, &x).unwrap());
        let lhs = killing(&x.commutator(&y).unwrap(), &z).unwrap();
        let rhs = killing(&x, &y.commutator(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn killing_on_matrix_units() {
    let n = 3;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let v = killing(&CMatrix::e(n, i, j).unwrap(), &CMatrix::e(n, k, l).unwrap()).unwrap();
                    let want = i64::from(j == k && i == l);
                    assert_eq!(v, Scalar::from_int(want));
                }
            }
        }
    }
}
