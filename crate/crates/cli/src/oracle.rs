//! Floating-point quadrature of the normalized integral over S³ in Euler angles.

use std::f64::consts::PI;

use num_complex::Complex64;
use s3ca::{LaurentPoly, Monomial};

fn pow(z: Complex64, k: u32) -> Complex64 {
    z.powu(k)
}

/// Value of a polynomial at (z₁, z₂) with r² = 1.
pub fn eval_on_s3(p: &LaurentPoly, z1: Complex64, z2: Complex64) -> Complex64 {
    p.terms()
        .map(|(m, c): (&Monomial, _)| {
            let (re, im) = c.to_f64_pair();
            Complex64::new(re, im) * pow(z1, m.a) * pow(z1.conj(), m.b) * pow(z2, m.c) * pow(z2.conj(), m.d)
        })
        .sum()
}

/// (1/2π²)∫_{S³} p dσ with z₁ = cos(θ/2)e^{i(ψ+φ)/2}, z₂ = i sin(θ/2)e^{i(ψ−φ)/2},
/// dσ = (1/8) sinθ dθ dφ dψ over θ ∈ [0,π], φ ∈ [0,2π], ψ ∈ [0,4π].
/// Simpson in θ, trapezoid (exact for trigonometric polynomials) in φ and ψ.
pub fn normint_quadrature(p: &LaurentPoly) -> Complex64 {
    let deg = p.max_z_degree() as usize;
    let nphi = deg + 2;
    let npsi = 2 * deg + 2;
    let nth = 1000;
    let hth = PI / nth as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for it in 0..=nth {
        let th = it as f64 * hth;
        let w = if it == 0 || it == nth {
            1.0
        } else if it % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let s = th.sin();
        if s == 0.0 {
            continue;
        }
        let (c2, s2) = ((th / 2.0).cos(), (th / 2.0).sin());
        let mut inner = Complex64::new(0.0, 0.0);
        for ip in 0..nphi {
            let ph = 2.0 * PI * ip as f64 / nphi as f64;
            for iq in 0..npsi {
                let ps = 4.0 * PI * iq as f64 / npsi as f64;
                let z1 = Complex64::from_polar(c2, (ps + ph) / 2.0);
                let z2 = Complex64::new(0.0, 1.0) * Complex64::from_polar(s2, (ps - ph) / 2.0);
                inner += eval_on_s3(p, z1, z2);
            }
        }
        let cell = (2.0 * PI / nphi as f64) * (4.0 * PI / npsi as f64);
        total += inner * cell * w * s;
    }
    total * (hth / 3.0) / 8.0 / (2.0 * PI * PI)
}

/// Agreement with the exact value: relative 1e-6, or absolute 1e-9 at zero.
pub fn agrees(num: Complex64, exact: (f64, f64)) -> bool {
    let ex = Complex64::new(exact.0, exact.1);
    if ex.norm() == 0.0 {
        num.norm() < 1e-9
    } else {
        (num - ex).norm() <= 1e-6 * ex.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_moments() {
        let one: LaurentPoly = "1".parse().unwrap();
        assert!(agrees(normint_quadrature(&one), (1.0, 0.0)));
        let p: LaurentPoly = "z1*z1c".parse().unwrap();
        assert!(agrees(normint_quadrature(&p), (0.5, 0.0)));
        let q: LaurentPoly = "z1^2*z2c".parse().unwrap();
        assert!(agrees(normint_quadrature(&q), (0.0, 0.0)));
    }
}
