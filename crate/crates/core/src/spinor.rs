//! The quaternionic spinor algebra: pairs (u, v) ↔ u + jv of Laurent-type
//! polynomials, the eigenspinor basis φ^{±(m,l,k)}, Dirac operators and exact
//! Fourier expansion on S³.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::MathError;
use crate::laurent::{Field, LaurentPoly, Monomial, Var};
use crate::scalar::Scalar;

/// u + jv, stored as the column (u, v).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Spinor {
    pub u: LaurentPoly,
    pub v: LaurentPoly,
}

impl Spinor {
    pub fn new(u: LaurentPoly, v: LaurentPoly) -> Self {
        Spinor { u, v }
    }

    pub fn zero() -> Self {
        Spinor::default()
    }

    /// I = (1, 0) = φ^{+(0,0,1)}.
    pub fn unit() -> Self {
        Spinor::new(LaurentPoly::one(), LaurentPoly::zero())
    }

    /// The quaternion unit j = (0, 1).
    pub fn j_unit() -> Self {
        Spinor::new(LaurentPoly::zero(), LaurentPoly::one())
    }

    /// J = (0, −1) = φ^{+(0,0,0)}.
    pub fn jq() -> Self {
        phi(Sign::Plus, 0, 0, 0)
    }

    /// κ = (z₂, −z̄₁) = φ^{+(1,0,1)}.
    pub fn kappa() -> Self {
        phi(Sign::Plus, 1, 0, 1)
    }

    /// λ = |z|^{-4}(z₂, z̄₁) = φ^{−(0,0,0)}.
    pub fn lambda() -> Self {
        phi(Sign::Minus, 0, 0, 0)
    }

    /// κ* = −(i/√2)φ^{+(1,1,2)} + (i/2)φ^{−(0,0,0)} − (i/2)φ^{+(1,0,1)}; equals i(z̄₂, z̄₁) on S³.
    pub fn kappa_star() -> Self {
        Self::star_combination(Scalar::frac(1, 2))
    }

    /// λ* = −(i/√2)φ^{+(1,1,2)} − (i/2)φ^{−(0,0,0)} + (i/2)φ^{+(1,0,1)}; equals i(z̄₂, −z̄₁) on S³.
    pub fn lambda_star() -> Self {
        Self::star_combination(Scalar::frac(-1, 2))
    }

    fn star_combination(half: Scalar) -> Self {
        let i = Scalar::i();
        let s2 = Scalar::sqrt_int(2);
        let a = -(&i * &s2.inv().expect("nonzero"));
        let b = &i * &half;
        phi(Sign::Plus, 1, 1, 2).scale(&a) + phi(Sign::Minus, 0, 0, 0).scale(&b)
            - phi(Sign::Plus, 1, 0, 1).scale(&b)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Right multiplication by the complex scalar s, i.e. (su, sv).
    pub fn scale(&self, s: &Scalar) -> Self {
        Spinor::new(self.u.scale(s), self.v.scale(s))
    }

    /// Quaternionic product (u₁u₂ − v̄₁v₂, v₁u₂ + ū₁v₂).
    pub fn mul(&self, o: &Spinor) -> Spinor {
        Spinor::new(
            &self.u * &o.u - &self.v.conj() * &o.v,
            &self.v * &o.u + &self.u.conj() * &o.v,
        )
    }

    /// [p, q] from the closed form (v₁v̄₂ − v̄₁v₂, (u₂−ū₂)v₁ − (u₁−ū₁)v₂).
    pub fn bracket(&self, o: &Spinor) -> Spinor {
        let out = Spinor::new(
            &self.v * &o.v.conj() - &self.v.conj() * &o.v,
            (&o.u - &o.u.conj()) * &self.v - (&self.u - &self.u.conj()) * &o.v,
        );
        debug_assert_eq!(out, self.commutator(o));
        out
    }

    /// pq − qp through the product.
    pub fn commutator(&self, o: &Spinor) -> Spinor {
        self.mul(o) - o.mul(self)
    }

    /// tr φ = u + ū.
    pub fn trace(&self) -> LaurentPoly {
        &self.u + &self.u.conj()
    }

    /// σφ = (u, −v).
    pub fn sigma(&self) -> Spinor {
        Spinor::new(self.u.clone(), -&self.v)
    }

    /// Componentwise vector field.
    pub fn apply_field(&self, f: Field) -> Spinor {
        Spinor::new(self.u.apply_field(f), self.v.apply_field(f))
    }

    /// Θ_k φ = ½(θ_k u, θ_k v).
    pub fn theta_op(&self, k: usize) -> Spinor {
        self.apply_field(Field::theta_k(k)).scale(&Scalar::frac(1, 2))
    }

    /// 𝐧₀φ = (n₀u, n₀v).
    pub fn n0(&self) -> Spinor {
        Spinor::new(self.u.n0(), self.v.n0())
    }

    pub fn restrict_s3(&self) -> Spinor {
        Spinor::new(
            self.u.restrict_s3().into_laurent(),
            self.v.restrict_s3().into_laurent(),
        )
    }

    /// Equality of restrictions to S³.
    pub fn eq_on_s3(&self, o: &Spinor) -> bool {
        (self - o).restrict_s3().is_zero()
    }

    /// D = (∂/∂z₁, −∂/∂z̄₂; ∂/∂z₂, ∂/∂z̄₁).
    pub fn dirac(&self) -> Spinor {
        Spinor::new(
            self.u.derive(Var::Z1) - self.v.derive(Var::Z2c),
            self.u.derive(Var::Z2) + self.v.derive(Var::Z1c),
        )
    }

    /// D† = (∂/∂z̄₁, ∂/∂z̄₂; −∂/∂z₂, ∂/∂z₁).
    pub fn dirac_dag(&self) -> Spinor {
        Spinor::new(
            self.u.derive(Var::Z1c) + self.v.derive(Var::Z2c),
            self.v.derive(Var::Z1) - self.u.derive(Var::Z2),
        )
    }

    /// ∂̸ = (−½θ, e₊; −e₋, ½θ) with the 1/|z| prefactor taken as 1.
    pub fn tangential_dirac(&self) -> Spinor {
        let half = Scalar::frac(1, 2);
        let tu = self.u.apply_field(Field::Theta).scale(&half);
        let tv = self.v.apply_field(Field::Theta).scale(&half);
        Spinor::new(
            self.v.apply_field(Field::EPlus) - tu,
            tv - self.u.apply_field(Field::EMinus),
        )
    }

    pub fn laplacian(&self) -> Spinor {
        Spinor::new(self.u.laplacian(), self.v.laplacian())
    }

    /// Groups terms by homogeneity degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<i64, Spinor> {
        let mut out: BTreeMap<i64, Spinor> = BTreeMap::new();
        for (n, p) in self.u.homogeneous_parts() {
            out.entry(n).or_default().u = p;
        }
        for (n, p) in self.v.homogeneous_parts() {
            out.entry(n).or_default().v = p;
        }
        out
    }

    pub fn max_z_degree(&self) -> u32 {
        self.u.max_z_degree().max(self.v.max_z_degree())
    }
}

/// Hermitian pairing u_p·ū_q + v_p·v̄_q.
pub fn inner(p: &Spinor, q: &Spinor) -> LaurentPoly {
    &p.u * &q.u.conj() + &p.v * &q.v.conj()
}

/// normint(p·q̄) evaluated directly on term pairs (no normal-form products).
fn pair_normint(p: &LaurentPoly, q: &LaurentPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (m1, c1) in p.terms() {
        for (m2, c2) in q.terms() {
            let m = m1.mul(&m2.conj());
            if let Some(v) = crate::laurent::monomial_normint(&m) {
                acc += &(&(c1 * &c2.conj()) * &v);
            }
        }
    }
    acc
}

/// normint(inner(p, q)).
pub fn inner_normint(p: &Spinor, q: &Spinor) -> Scalar {
    pair_normint(&p.u, &q.u) + pair_normint(&p.v, &q.v)
}

impl Add<&Spinor> for &Spinor {
    type Output = Spinor;
    fn add(self, o: &Spinor) -> Spinor {
        Spinor::new(&self.u + &o.u, &self.v + &o.v)
    }
}

impl Sub<&Spinor> for &Spinor {
    type Output = Spinor;
    fn sub(self, o: &Spinor) -> Spinor {
        Spinor::new(&self.u - &o.u, &self.v - &o.v)
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor::new(-&self.u, -&self.v)
    }
}

impl Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        -&self
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, o: Spinor) -> Spinor {
        &self + &o
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, o: Spinor) -> Spinor {
        &self - &o
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "spinor({}; {})", self.u, self.v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Label (±, m, l, k) with 0 ≤ l ≤ m and 0 ≤ k ≤ m+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisIndex {
    pub sign: Sign,
    pub m: u32,
    pub l: u32,
    pub k: u32,
}

impl BasisIndex {
    pub fn new(sign: Sign, m: u32, l: u32, k: u32) -> Result<Self, MathError> {
        if l > m || k > m + 1 {
            return Err(MathError::IndexOutOfRange(format!(
                "({},{m},{l},{k})",
                sign.symbol()
            )));
        }
        Ok(BasisIndex { sign, m, l, k })
    }

    /// Builds an index from signed integers, rejecting negative entries.
    pub fn from_ints(sign: Sign, m: i64, l: i64, k: i64) -> Result<Self, MathError> {
        let conv = |x: i64| {
            u32::try_from(x).map_err(|_| {
                MathError::IndexOutOfRange(format!("({},{m},{l},{k})", sign.symbol()))
            })
        };
        Self::new(sign, conv(m)?, conv(l)?, conv(k)?)
    }

    /// All indices of one sign and level m, (m+1)(m+2) of them.
    pub fn level(sign: Sign, m: u32) -> Vec<BasisIndex> {
        let mut out = Vec::new();
        for l in 0..=m {
            for k in 0..=m + 1 {
                out.push(BasisIndex { sign, m, l, k });
            }
        }
        out
    }

    /// All indices of both signs with m ≤ bound.
    pub fn up_to(bound: u32) -> Vec<BasisIndex> {
        let mut out = Vec::new();
        for m in 0..=bound {
            out.extend(Self::level(Sign::Plus, m));
            out.extend(Self::level(Sign::Minus, m));
        }
        out
    }

    /// Homogeneity degree: m for φ⁺, −(m+3) for φ⁻.
    pub fn degree(&self) -> i64 {
        match self.sign {
            Sign::Plus => self.m as i64,
            Sign::Minus => -(self.m as i64 + 3),
        }
    }

    /// Eigenvalue of ∂̸ and of 𝐧₀: degree/2.
    pub fn eigenvalue(&self) -> Scalar {
        Scalar::frac(self.degree(), 2)
    }

    /// Torus charge of the u-slot; the v-slot carries this minus (1,1).
    pub fn charge(&self) -> (i64, i64) {
        let (m, l, k) = (self.m as i64, self.l as i64, self.k as i64);
        match self.sign {
            Sign::Plus => (l - k + 1, m - l - k + 1),
            Sign::Minus => (k - l, m + 1 - k - l),
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.sign.symbol(), self.m, self.l, self.k)
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// v^k_{(l,m−l)} = (e₋)^k z₁^l z₂^{m−l}.
pub fn v_poly(k: u32, l: u32, m: u32) -> Result<LaurentPoly, MathError> {
    if l > m {
        return Err(MathError::IndexOutOfRange(format!("v_poly l={l} > m={m}")));
    }
    let mut p = LaurentPoly::monomial(Monomial::new(l, 0, m - l, 0, 0), Scalar::one());
    for _ in 0..k {
        if p.is_zero() {
            break;
        }
        p = p.apply_field(Field::EMinus);
    }
    Ok(p)
}

/// w^k_{(l, msum−l)} = (−1)^k l!/(msum−k)! · v^{msum−l}_{(k, msum−k)}.
pub fn w_poly(k: u32, l: u32, msum: u32) -> Result<LaurentPoly, MathError> {
    if l > msum || k > msum {
        return Err(MathError::IndexOutOfRange(format!(
            "w_poly k={k}, l={l}, m={msum}"
        )));
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let c = BigRational::new(BigInt::from(sign) * factorial(l), factorial(msum - k));
    Ok(v_poly(msum - l, k, msum)?.scale(&Scalar::from_rational(c)))
}

fn basis_norm(idx: &BasisIndex) -> Scalar {
    let (m, l, k) = (idx.m, idx.l, idx.k);
    let r = BigRational::new(
        factorial(m + 1 - k),
        factorial(k) * factorial(l) * factorial(m - l),
    );
    Scalar::sqrt_rational(&r).expect("positive factorial ratio")
}

fn build_phi(idx: &BasisIndex) -> Spinor {
    let (m, l, k) = (idx.m, idx.l, idx.k);
    let c = basis_norm(idx);
    match idx.sign {
        Sign::Plus => {
            let u = if k == 0 {
                LaurentPoly::zero()
            } else {
                v_poly(k - 1, l, m)
                    .expect("valid")
                    .scale(&(&c * &Scalar::from_int(k as i64)))
            };
            let v = v_poly(k, l, m).expect("valid").scale(&-&c);
            Spinor::new(u, v)
        }
        Sign::Minus => {
            let r = Monomial::new(0, 0, 0, 0, -(m as i32 + 2));
            let u = w_poly(k, m + 1 - l, m + 1).expect("valid").scale(&c);
            let v = w_poly(k, m - l, m + 1).expect("valid").scale(&c);
            Spinor::new(u.mul_monomial(&r), v.mul_monomial(&r))
        }
    }
}

type Cache = RwLock<HashMap<BasisIndex, Arc<(Spinor, Spinor)>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// (ambient, restricted) basis spinor, memoized.
fn phi_pair(idx: &BasisIndex) -> Arc<(Spinor, Spinor)> {
    if let Some(p) = cache().read().expect("cache lock").get(idx) {
        return p.clone();
    }
    let amb = build_phi(idx);
    let res = amb.restrict_s3();
    let entry = Arc::new((amb, res));
    cache()
        .write()
        .expect("cache lock")
        .entry(*idx)
        .or_insert(entry)
        .clone()
}

/// φ^{±(m,l,k)} in the ambient ring; φ⁻ carries |z|^{-2(m+2)}.
pub fn phi_basis(idx: &BasisIndex) -> Spinor {
    phi_pair(idx).0.clone()
}

/// Restriction of φ^{±(m,l,k)} to S³.
pub fn phi_basis_s3(idx: &BasisIndex) -> Spinor {
    phi_pair(idx).1.clone()
}

/// Shorthand for a basis spinor with a known-valid index.
pub fn phi(sign: Sign, m: u32, l: u32, k: u32) -> Spinor {
    phi_basis(&BasisIndex::new(sign, m, l, k).expect("valid basis index"))
}

/// C_idx = normint(⟨p, φ_idx⟩).
pub fn fourier_coeff(p: &Spinor, idx: &BasisIndex) -> Scalar {
    inner_normint(&p.restrict_s3(), &phi_pair(idx).1)
}

/// Finitely supported coefficients in the φ^± basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Expansion {
    pub coeffs: BTreeMap<BasisIndex, Scalar>,
}

impl Expansion {
    /// Σ C_idx φ_idx in the ambient (Laurent-type) form.
    pub fn to_spinor(&self) -> Spinor {
        let mut out = Spinor::zero();
        for (idx, c) in &self.coeffs {
            out = &out + &phi_basis(idx).scale(c);
        }
        out
    }

    pub fn to_spinor_s3(&self) -> Spinor {
        let mut out = Spinor::zero();
        for (idx, c) in &self.coeffs {
            out = &out + &phi_basis_s3(idx).scale(c);
        }
        out
    }

    pub fn get(&self, idx: &BasisIndex) -> Scalar {
        self.coeffs.get(idx).cloned().unwrap_or_default()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, c)| format!("({c})*phi{idx}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Orthogonal projection onto all φ^± with m ≤ m_bound, certified by a zero
/// remainder on S³. Without a bound, the z-degree of the restriction is used: a
/// polynomial of degree D on S³ only has harmonic components of degree ≤ D.
pub fn expand(p: &Spinor, m_bound: Option<u32>) -> Result<Expansion, MathError> {
    let ps = p.restrict_s3();
    let bound = m_bound.unwrap_or_else(|| ps.max_z_degree());
    let mut labels: BTreeSet<(i64, i64)> = ps.u.charge_set();
    labels.extend(ps.v.charge_set().into_iter().map(|(s, t)| (s + 1, t + 1)));
    let mut coeffs = BTreeMap::new();
    for idx in BasisIndex::up_to(bound) {
        if !labels.contains(&idx.charge()) {
            continue;
        }
        let c = inner_normint(&ps, &phi_pair(&idx).1);
        if !c.is_zero() {
            coeffs.insert(idx, c);
        }
    }
    let exp = Expansion { coeffs };
    if !(&ps - &exp.to_spinor_s3()).restrict_s3().is_zero() {
        return Err(MathError::IncompleteExpansion { bound });
    }
    Ok(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn sp(u: &str, v: &str) -> Spinor {
        Spinor::new(poly(u), poly(v))
    }

    #[test]
    fn named_spinors() {
        assert_eq!(phi(Sign::Plus, 0, 0, 1), Spinor::unit());
        assert_eq!(Spinor::jq(), sp("0", "-1"));
        assert_eq!(Spinor::kappa(), sp("z2", "-z1c"));
        assert_eq!(Spinor::lambda(), sp("z2*r2^-2", "z1c*r2^-2"));
        assert_eq!(phi(Sign::Plus, 1, 1, 2), sp("-sqrt(2)*z2c", "0"));
        assert_eq!(phi(Sign::Plus, 1, 0, 2), sp("sqrt(2)*z1c", "0"));
        assert!(Spinor::kappa_star().eq_on_s3(&sp("im*z2c", "im*z1c")));
        assert!(Spinor::lambda_star().eq_on_s3(&sp("im*z2c", "-im*z1c")));
    }

    #[test]
    fn quaternion_products() {
        let psi = sp("z1 + 2*z2c", "im*z1c");
        assert_eq!(Spinor::unit().mul(&psi), psi);
        assert_eq!(Spinor::jq().mul(&Spinor::jq()), -Spinor::unit());
        let t = Spinor::kappa().theta_op(0).mul(&Spinor::kappa_star());
        assert!(t.eq_on_s3(&sp("-1/2", "0")));
    }

    #[test]
    fn bracket_routes_agree() {
        let a = Spinor::jq();
        let b = Spinor::kappa();
        assert_eq!(a.bracket(&b), a.commutator(&b));
        assert!(Spinor::unit().bracket(&b).is_zero());
        assert!(sp("-z2c", "0").bracket(&sp("z2", "0")).is_zero());
    }

    #[test]
    fn trace_and_sigma() {
        assert_eq!(Spinor::unit().trace(), poly("2"));
        assert!(Spinor::jq().trace().is_zero());
        assert_eq!(Spinor::jq().sigma(), -Spinor::jq());
    }

    #[test]
    fn theta_of_kappa() {
        assert_eq!(Spinor::kappa().theta_op(0), sp("1/2*im*z2", "1/2*im*z1c"));
        for k in 0..3 {
            assert!(Spinor::unit().theta_op(k).is_zero());
        }
    }

    #[test]
    fn harmonic_polys() {
        assert_eq!(v_poly(0, 1, 1).unwrap(), poly("z1"));
        assert_eq!(v_poly(1, 1, 1).unwrap(), poly("-z2c"));
        assert!(v_poly(0, 2, 1).is_err());
        for m in 0..4 {
            for l in 0..=m {
                for k in 0..=m + 1 {
                    assert!(v_poly(k, l, m).unwrap().laplacian().is_zero());
                }
            }
        }
    }

    #[test]
    fn product_degree_example() {
        let p = phi(Sign::Plus, 2, 0, 0).mul(&phi(Sign::Minus, 0, 0, 0));
        assert_eq!(p.n0(), p.scale(&Scalar::frac(-1, 2)));
    }

    #[test]
    fn homogeneous_split() {
        let parts = (&Spinor::unit() + &Spinor::lambda()).homogeneous_parts();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&0], Spinor::unit());
        assert_eq!(parts[&-3], Spinor::lambda());
    }

    #[test]
    fn expansions() {
        let e = expand(&Spinor::unit(), None).unwrap();
        assert_eq!(e.coeffs.len(), 1);
        let ks = expand(&Spinor::kappa_star(), None).unwrap();
        let i = Scalar::i();
        let s2 = Scalar::sqrt_int(2);
        assert_eq!(ks.coeffs.len(), 3);
        assert_eq!(ks.get(&BasisIndex::new(Sign::Plus, 1, 1, 2).unwrap()), -(&i * &s2.inv().unwrap()));
        assert_eq!(ks.get(&BasisIndex::new(Sign::Minus, 0, 0, 0).unwrap()), &i * &Scalar::frac(1, 2));
        assert_eq!(ks.get(&BasisIndex::new(Sign::Plus, 1, 0, 1).unwrap()), &i * &Scalar::frac(-1, 2));
        assert_eq!(fourier_coeff(&Spinor::kappa(), &BasisIndex::new(Sign::Plus, 1, 0, 1).unwrap()), Scalar::one());
    }
}
