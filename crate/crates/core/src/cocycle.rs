//! The real 2-cocycles c_k(φ, ψ) = (1/2π²)∫_{S³} tr(Θ_k φ · ψ) dσ, k = 0, 1, 2.

use serde::Serialize;

use crate::error::MathError;
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::spinor::Spinor;

/// normint(x·y) summed over term pairs, without forming the product.
fn normint_product(x: &LaurentPoly, y: &LaurentPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (m1, c1) in x.terms() {
        for (m2, c2) in y.terms() {
            if let Some(v) = crate::laurent::monomial_normint(&m1.mul(m2)) {
                acc += &(&(c1 * c2) * &v);
            }
        }
    }
    acc
}

fn check_k(k: usize) -> Result<(), MathError> {
    if k > 2 {
        return Err(MathError::IndexOutOfRange(format!("cocycle index {k}")));
    }
    Ok(())
}

/// c_k(p, q); the value is verified to be real.
pub fn cocycle(k: usize, p: &Spinor, q: &Spinor) -> Result<Scalar, MathError> {
    check_k(k)?;
    let t = p.theta_op(k);
    // ∫ tr(A·q) = 2 Re ∫ (A_u q_u − Ā_v q_v)
    let w = normint_product(&t.u, &q.u) - normint_product(&t.v.conj(), &q.v);
    let value = &w + &w.conj();
    if !value.is_real() {
        return Err(MathError::NonRealCocycle(value.to_string()));
    }
    Ok(value)
}

/// The literal definition normint(tr(Θ_k p · q)), kept as an independent route.
pub fn cocycle_direct(k: usize, p: &Spinor, q: &Spinor) -> Result<Scalar, MathError> {
    check_k(k)?;
    Ok(p.theta_op(k).mul(q).trace().normint())
}

/// Σ_N c_k(p_N, q_{−N}): only pairs of homogeneous parts with opposite degrees.
pub fn graded_cocycle(k: usize, p: &Spinor, q: &Spinor) -> Result<Scalar, MathError> {
    check_k(k)?;
    let qp = q.homogeneous_parts();
    let mut acc = Scalar::zero();
    for (n, pn) in p.homogeneous_parts() {
        if let Some(qn) = qp.get(&-n) {
            acc += cocycle(k, &pn, qn)?;
        }
    }
    Ok(acc)
}

/// c_k(p, q) = −c_k(q, p).
pub fn check_antisymmetry(k: usize, p: &Spinor, q: &Spinor) -> Result<bool, MathError> {
    Ok(cocycle(k, p, q)? == -cocycle(k, q, p)?)
}

/// c_k(pq, r) + c_k(qr, p) + c_k(rp, q) = 0.
pub fn check_cocycle_identity(
    k: usize,
    p: &Spinor,
    q: &Spinor,
    r: &Spinor,
) -> Result<bool, MathError> {
    let s = cocycle(k, &p.mul(q), r)? + cocycle(k, &q.mul(r), p)? + cocycle(k, &r.mul(p), q)?;
    Ok(s.is_zero())
}

/// c_k(𝐧₀p, q) + c_k(p, 𝐧₀q) = 0.
pub fn check_n0_compat(k: usize, p: &Spinor, q: &Spinor) -> Result<bool, MathError> {
    Ok(n0_compat_defect(k, p, q)?.is_zero())
}

/// The left-hand side c_k(𝐧₀p, q) + c_k(p, 𝐧₀q).
pub fn n0_compat_defect(k: usize, p: &Spinor, q: &Spinor) -> Result<Scalar, MathError> {
    Ok(cocycle(k, &p.n0(), q)? + cocycle(k, p, &q.n0())?)
}

/// Same law for the degree-balanced cocycle.
pub fn check_graded_n0_compat(k: usize, p: &Spinor, q: &Spinor) -> Result<bool, MathError> {
    let s = graded_cocycle(k, &p.n0(), q)? + graded_cocycle(k, p, &q.n0())?;
    Ok(s.is_zero())
}

/// A commuting pair with nonzero cocycle value: c_k is not a coboundary.
#[derive(Clone, Debug)]
pub struct Witness {
    pub k: usize,
    pub p: Spinor,
    pub q: Spinor,
    pub value: Scalar,
    pub bracket_vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub k: usize,
    pub p: String,
    pub q: String,
    pub value: String,
    pub bracket_vanishes: bool,
}

impl Witness {
    pub fn report(&self) -> WitnessReport {
        WitnessReport {
            k: self.k,
            p: self.p.to_string(),
            q: self.q.to_string(),
            value: self.value.to_string(),
            bracket_vanishes: self.bracket_vanishes,
        }
    }
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("built-in polynomial")
}

/// Built-in witnesses: p = (−z̄₂, 0) against (i z₂, 0), (√2 z̄₁, 0) and (i√2 z̄₁, 0).
pub fn nontriviality_witness(k: usize) -> Result<Witness, MathError> {
    check_k(k)?;
    let p = Spinor::new(poly("-z2c"), LaurentPoly::zero());
    let q = match k {
        0 => Spinor::new(poly("im*z2"), LaurentPoly::zero()),
        1 => Spinor::new(poly("sqrt(2)*z1c"), LaurentPoly::zero()),
        _ => Spinor::new(poly("im*sqrt(2)*z1c"), LaurentPoly::zero()),
    };
    let value = cocycle(k, &p, &q)?;
    let bracket_vanishes = p.bracket(&q).is_zero();
    Ok(Witness {
        k,
        p,
        q,
        value,
        bracket_vanishes,
    })
}

/// A pair with c_0(i·p, q) ≠ i·c_0(p, q), showing c_0 is not ℂ-bilinear.
pub fn non_c_linearity_witness() -> Result<(Spinor, Spinor, Scalar, Scalar), MathError> {
    let p = Spinor::new(poly("-z2c"), LaurentPoly::zero());
    let q = Spinor::new(poly("z2"), LaurentPoly::zero());
    let lhs = cocycle(0, &p.scale(&Scalar::i()), &q)?;
    let rhs = &Scalar::i() * &cocycle(0, &p, &q)?;
    Ok((p, q, lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{phi, Sign};

    #[test]
    fn anchors() {
        let k = Spinor::kappa();
        let ks = Spinor::kappa_star();
        assert_eq!(cocycle(0, &k, &ks).unwrap(), Scalar::from_int(-1));
        assert!(cocycle(1, &k, &ks).unwrap().is_zero());
        assert!(cocycle(2, &k, &ks).unwrap().is_zero());
        let l = Spinor::lambda();
        let ls = Spinor::lambda_star();
        assert_eq!(cocycle(0, &l, &ls).unwrap(), Scalar::from_int(-1));
        let p = phi(Sign::Plus, 1, 1, 2).scale(&Scalar::sqrt_int(2).inv().unwrap());
        let q = phi(Sign::Plus, 1, 0, 2);
        assert_eq!(cocycle(1, &p, &q).unwrap(), -Scalar::sqrt_int(2).inv().unwrap());
    }

    #[test]
    fn fast_route_matches_definition() {
        let a = Spinor::kappa_star();
        let b = phi(Sign::Minus, 1, 0, 1);
        for k in 0..3 {
            assert_eq!(cocycle(k, &a, &b).unwrap(), cocycle_direct(k, &a, &b).unwrap());
        }
    }

    #[test]
    fn witnesses() {
        let w0 = nontriviality_witness(0).unwrap();
        assert!(w0.bracket_vanishes);
        assert_eq!(w0.value, Scalar::frac(-1, 2));
        let w1 = nontriviality_witness(1).unwrap();
        assert_eq!(w1.value, -Scalar::sqrt_int(2).inv().unwrap());
        let w2 = nontriviality_witness(2).unwrap();
        assert!(w2.bracket_vanishes && !w2.value.is_zero());
        let (_, _, lhs, rhs) = non_c_linearity_witness().unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn raw_compat_fails_on_basis_pair() {
        let p = phi(Sign::Plus, 1, 1, 2).scale(&Scalar::sqrt_int(2).inv().unwrap());
        let q = phi(Sign::Plus, 1, 0, 2);
        assert!(!check_n0_compat(1, &p, &q).unwrap());
        assert!(check_graded_n0_compat(1, &p, &q).unwrap());
    }
}
