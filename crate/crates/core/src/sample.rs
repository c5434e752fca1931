//! Seeded random spinors and current elements for the randomized suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::current::CurrentElement;
use crate::scalar::Scalar;
use crate::spinor::{phi_basis, BasisIndex, Spinor};

/// Independent stream for sample `index` of a run with `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A nonzero Gaussian integer with parts in [−2, 2].
pub fn small_gaussian<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let re = rng.gen_range(-2i64..=2);
        let im = rng.gen_range(-2i64..=2);
        if re != 0 || im != 0 {
            return &Scalar::from_int(re) + &(&Scalar::i() * &Scalar::from_int(im));
        }
    }
}

/// A nonzero integer in [−2, 2].
pub fn small_int<R: Rng>(rng: &mut R) -> Scalar {
    let x = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
    Scalar::from_int(x)
}

/// A random basis index of level ≤ max_level.
pub fn random_index<R: Rng>(rng: &mut R, max_level: u32) -> BasisIndex {
    let all = BasisIndex::up_to(max_level);
    all[rng.gen_range(0..all.len())]
}

/// Σ c φ over 1..=terms random basis spinors of level ≤ max_level.
pub fn random_spinor<R: Rng>(rng: &mut R, max_level: u32, terms: usize) -> Spinor {
    let count = rng.gen_range(1..=terms.max(1));
    let mut out = Spinor::zero();
    for _ in 0..count {
        let idx = random_index(rng, max_level);
        out = &out + &phi_basis(&idx).scale(&small_gaussian(rng));
    }
    out
}

/// One or two body entries, and with probability ½ each a central part and a real 𝐧 part.
pub fn random_current<R: Rng>(rng: &mut R, n: usize, max_level: u32) -> CurrentElement {
    let mut out = CurrentElement::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let i = rng.gen_range(1..=n);
        let j = rng.gen_range(1..=n);
        out.add_body(i, j, &random_spinor(rng, max_level, 2));
    }
    if rng.gen_bool(0.5) {
        for k in 0..3 {
            out.central[k] = Scalar::from_int(rng.gen_range(-2..=2));
        }
    }
    if rng.gen_bool(0.5) {
        out.deriv = small_int(rng);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let a = random_spinor(&mut rng_for(7, 3), 2, 2);
        let b = random_spinor(&mut rng_for(7, 3), 2, 2);
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }
}
