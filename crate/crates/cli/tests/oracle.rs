//! The exact normalized integral against Euler-angle quadrature.

use proptest::prelude::*;
use s3ca::{LaurentPoly, Monomial, Scalar};
use s3ca_cli::oracle::{agrees, normint_quadrature};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monomials_agree(a in 0u32..=4, b in 0u32..=4, c in 0u32..=4, d in 0u32..=4, balanced in any::<bool>()) {
        let m = if balanced { Monomial::new(a, a, c, c, 0) } else { Monomial::new(a, b, c, d, 0) };
        prop_assume!(m.z_degree() <= 8);
        let p = LaurentPoly::monomial(m, Scalar::one());
        let exact = p.restrict_s3().normint();
        prop_assert!(agrees(normint_quadrature(&p), exact.to_f64_pair()));
    }
}

#[test]
fn radical_coefficients() {
    let p: LaurentPoly = "sqrt(2)*z1*z1c + im*z2^2*z2c^2".parse().unwrap();
    let exact = p.restrict_s3().normint();
    assert!(agrees(normint_quadrature(&p), exact.to_f64_pair()));
}
