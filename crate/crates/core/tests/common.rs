//! Shared strategies.
#![allow(dead_code)]

use proptest::prelude::*;
use s3ca::sample::{random_current, random_spinor, rng_for};
use s3ca::current::CurrentElement;
use s3ca::spinor::Spinor;
use s3ca::{LaurentPoly, Monomial, Scalar};

pub fn scalar() -> impl Strategy<Value = Scalar> {
    let part = (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4, prop::sample::select(vec![1u64, 2, 3, 6]));
    prop::collection::vec(part, 1..=2).prop_map(|parts| {
        let mut s = Scalar::zero();
        for (a, b, c, d, r) in parts {
            let g = &Scalar::frac(a, b) + &(&Scalar::i() * &Scalar::frac(c, d));
            s = &s + &(&g * &Scalar::sqrt_int(r));
        }
        s
    })
}

pub fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Scalar::frac(a, b))
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2, -1i32..=1).prop_map(|(a, b, c, d, e)| Monomial::new(a, b, c, d, e))
}

pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial(), scalar()), 0..=3).prop_map(LaurentPoly::from_terms)
}

/// A polynomial without negative powers of r.
pub fn polynomial() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        ((0u32..=2, 0u32..=2, 0u32..=2, 0u32..=2), scalar()),
        0..=3,
    )
    .prop_map(|v| LaurentPoly::from_terms(v.into_iter().map(|((a, b, c, d), s)| (Monomial::new(a, b, c, d, 0), s))))
}

pub fn spinor(max_level: u32) -> impl Strategy<Value = Spinor> {
    any::<u64>().prop_map(move |seed| random_spinor(&mut rng_for(seed, 0), max_level, 3))
}

pub fn current(n: usize, max_level: u32) -> impl Strategy<Value = CurrentElement> {
    any::<u64>().prop_map(move |seed| random_current(&mut rng_for(seed, 1), n, max_level))
}
