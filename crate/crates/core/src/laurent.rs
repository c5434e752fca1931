//! Laurent-type polynomials in z₁, z̄₁, z₂, z̄₂ and r = |z|², their derivations,
//! restriction to S³ and the normalized S³ integral.
//!
//! Polynomials are kept in the normal form modulo r = z₁z̄₁ + z₂z̄₂: no monomial is
//! divisible by z₂z̄₂. The relation is homogeneous, so degrees and the radial
//! derivation stay diagonal on monomials, and structural equality is equality of
//! functions on ℂ² ∖ {0}.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{MathError, ParseError};
use crate::scalar::{join_terms, Scalar};

/// z₁^a z̄₁^b z₂^c z̄₂^d r^e with r = |z|².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
        e: 0,
    };

    pub fn new(a: u32, b: u32, c: u32, d: u32, e: i32) -> Self {
        Monomial { a, b, c, d, e }
    }

    /// Homogeneity degree a+b+c+d+2e.
    pub fn degree(&self) -> i64 {
        (self.a + self.b + self.c + self.d) as i64 + 2 * self.e as i64
    }

    /// Total degree in the z-variables, ignoring r.
    pub fn z_degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    pub fn conj(&self) -> Self {
        Monomial::new(self.b, self.a, self.d, self.c, self.e)
    }

    pub fn mul(&self, o: &Monomial) -> Self {
        Monomial::new(
            self.a + o.a,
            self.b + o.b,
            self.c + o.c,
            self.d + o.d,
            self.e + o.e,
        )
    }

    /// Weights under the torus z₁ ↦ s z₁, z₂ ↦ t z₂. Both the relation and the
    /// integral respect them, so they are used to skip vanishing pairings.
    pub fn charges(&self) -> (i64, i64) {
        (
            self.a as i64 - self.b as i64,
            self.c as i64 - self.d as i64,
        )
    }

    fn exp(&self, v: Var) -> u32 {
        match v {
            Var::Z1 => self.a,
            Var::Z1c => self.b,
            Var::Z2 => self.c,
            Var::Z2c => self.d,
        }
    }

    fn with_exp(mut self, v: Var, k: u32) -> Self {
        match v {
            Var::Z1 => self.a = k,
            Var::Z1c => self.b = k,
            Var::Z2 => self.c = k,
            Var::Z2c => self.d = k,
        }
        self
    }
}

/// One of the four complex coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z1,
    Z1c,
    Z2,
    Z2c,
}

impl Var {
    pub fn conj(self) -> Var {
        match self {
            Var::Z1 => Var::Z1c,
            Var::Z1c => Var::Z1,
            Var::Z2 => Var::Z2c,
            Var::Z2c => Var::Z2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z1 => "z1",
            Var::Z1c => "z1c",
            Var::Z2 => "z2",
            Var::Z2c => "z2c",
        }
    }

    pub fn monomial(self) -> Monomial {
        Monomial::ONE.with_exp(self, 1)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Element of ℂ[z₁, z̄₁, z₂, z̄₂, r, r⁻¹] / (r − z₁z̄₁ − z₂z̄₂) in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(s: Scalar) -> Self {
        Self::monomial(Monomial::ONE, s)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v.monomial(), Scalar::one())
    }

    /// r^e = |z|^{2e}.
    pub fn r_pow(e: i32) -> Self {
        Self::monomial(Monomial::new(0, 0, 0, 0, e), Scalar::one())
    }

    pub fn monomial(m: Monomial, s: Scalar) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_reduced(m, s);
        p
    }

    /// Builds a polynomial from arbitrary (possibly non-normal) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, s) in terms {
            p.add_reduced(m, s);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Returns the constant value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    fn add_raw(&mut self, m: Monomial, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(c) => {
                *c += &s;
                if c.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, s);
            }
        }
    }

    /// Adds `s·m`, rewriting (z₂z̄₂)^t = (r − z₁z̄₁)^t.
    fn add_reduced(&mut self, m: Monomial, s: Scalar) {
        let t = m.c.min(m.d);
        if t == 0 {
            self.add_raw(m, s);
            return;
        }
        for j in 0..=t {
            let mut coef = binomial(t, j);
            if j % 2 == 1 {
                coef = -coef;
            }
            let mm = Monomial::new(m.a + j, m.b + j, m.c - t, m.d - t, m.e + (t - j) as i32);
            self.add_raw(mm, &s * &Scalar::from_bigint(coef));
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * s))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_reduced(m.mul(mono), c.clone());
        }
        out
    }

    pub fn conj(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect(),
        }
    }

    /// Formal partial derivative; ∂r/∂x is the conjugate coordinate of x.
    pub fn derive(&self, v: Var) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k > 0 {
                let mm = m.with_exp(v, k - 1);
                out.add_reduced(mm, c * &Scalar::from_int(k as i64));
            }
            if m.e != 0 {
                let vc = v.conj();
                let mut mm = m.with_exp(vc, m.exp(vc) + 1);
                mm.e -= 1;
                out.add_reduced(mm, c * &Scalar::from_int(m.e as i64));
            }
        }
        out
    }

    /// Applies the named vector field.
    pub fn apply_field(&self, field: Field) -> Self {
        let mut out = LaurentPoly::zero();
        for (coef, v) in field.components() {
            out = out + coef.mul(&self.derive(v));
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        self.derive(Var::Z1c).derive(Var::Z1) + self.derive(Var::Z2c).derive(Var::Z2)
    }

    /// The radial derivation n₀ = ½(ν + ν̄), diagonal with eigenvalue deg/2.
    pub fn n0(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * &Scalar::frac(m.degree(), 2)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Groups terms by homogeneity degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_default()
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// Restriction to |z| = 1.
    pub fn restrict_s3(&self) -> S3Poly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut mm = *m;
            mm.e = 0;
            out.add_reduced(mm, c.clone());
        }
        S3Poly(out)
    }

    /// (1/2π²)∫_{S³} p dσ.
    pub fn normint(&self) -> Scalar {
        self.terms
            .iter()
            .filter_map(|(m, c)| monomial_normint(m).map(|v| c * &v))
            .sum()
    }

    /// Largest |a+b+c+d| over terms.
    pub fn max_z_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.z_degree()).max().unwrap_or(0)
    }

    /// Set of torus charges present.
    pub fn charge_set(&self) -> std::collections::BTreeSet<(i64, i64)> {
        self.terms.keys().map(|m| m.charges()).collect()
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// a!c!/(a+c+1)! if the monomial is z₁^a z̄₁^a z₂^c z̄₂^c (r ignored), otherwise `None`.
pub fn monomial_normint(m: &Monomial) -> Option<Scalar> {
    if m.a != m.b || m.c != m.d {
        return None;
    }
    let num = factorial(m.a) * factorial(m.c);
    let den = factorial(m.a + m.c + 1);
    Some(Scalar::from_rational(BigRational::new(num, den)))
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= o.len() {
            (self.clone(), o)
        } else {
            (o.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_raw(*m, c.clone());
        }
        big
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_raw(*m, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_reduced(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$m(o)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                self.$m(&o)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

/// A polynomial restricted to S³: normal form with e = 0 and no z₂z̄₂ factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct S3Poly(LaurentPoly);

impl S3Poly {
    pub fn as_laurent(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_laurent(self) -> LaurentPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn normint(&self) -> Scalar {
        self.0.normint()
    }

    pub fn mul(&self, o: &S3Poly) -> S3Poly {
        (&self.0 * &o.0).restrict_s3()
    }
}

impl fmt::Display for S3Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Named first-order derivations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    EPlus,
    EMinus,
    Theta,
    Theta0,
    Theta1,
    Theta2,
    Nu,
    NuBar,
    N0,
}

impl Field {
    pub const ALL: [Field; 9] = [
        Field::EPlus,
        Field::EMinus,
        Field::Theta,
        Field::Theta0,
        Field::Theta1,
        Field::Theta2,
        Field::Nu,
        Field::NuBar,
        Field::N0,
    ];

    /// θ₀, θ₁, θ₂.
    pub fn theta_k(k: usize) -> Field {
        match k {
            0 => Field::Theta0,
            1 => Field::Theta1,
            2 => Field::Theta2,
            _ => panic!("theta index {k} out of range"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::EPlus => "e+",
            Field::EMinus => "e-",
            Field::Theta => "theta",
            Field::Theta0 => "theta0",
            Field::Theta1 => "theta1",
            Field::Theta2 => "theta2",
            Field::Nu => "nu",
            Field::NuBar => "nubar",
            Field::N0 => "n0",
        }
    }

    /// The field as Σ coefficient·∂/∂var.
    pub fn components(self) -> Vec<(LaurentPoly, Var)> {
        use Var::*;
        let v = LaurentPoly::var;
        let s = |p: LaurentPoly, x: i64| p.scale(&Scalar::from_int(x));
        match self {
            Field::EPlus => vec![(s(v(Z2), -1), Z1c), (v(Z1), Z2c)],
            Field::EMinus => vec![(s(v(Z2c), -1), Z1), (v(Z1c), Z2)],
            Field::Theta => vec![
                (v(Z1), Z1),
                (v(Z2), Z2),
                (s(v(Z1c), -1), Z1c),
                (s(v(Z2c), -1), Z2c),
            ],
            Field::Theta0 => scale_field(Field::Theta.components(), &Scalar::i()),
            Field::Theta1 => {
                let mut c = Field::EPlus.components();
                c.extend(Field::EMinus.components());
                c
            }
            Field::Theta2 => {
                let mut c = Field::EPlus.components();
                c.extend(scale_field(Field::EMinus.components(), &Scalar::from_int(-1)));
                scale_field(c, &Scalar::i())
            }
            Field::Nu => vec![(v(Z1), Z1), (v(Z2), Z2)],
            Field::NuBar => vec![(v(Z1c), Z1c), (v(Z2c), Z2c)],
            Field::N0 => {
                let mut c = Field::Nu.components();
                c.extend(Field::NuBar.components());
                scale_field(c, &Scalar::frac(1, 2))
            }
        }
    }
}

fn scale_field(c: Vec<(LaurentPoly, Var)>, s: &Scalar) -> Vec<(LaurentPoly, Var)> {
    c.into_iter().map(|(p, v)| (p.scale(s), v)).collect()
}

impl FromStr for Field {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, MathError> {
        let f = match s {
            "e+" | "e_plus" | "e₊" => Field::EPlus,
            "e-" | "e_minus" | "e₋" => Field::EMinus,
            "theta" | "θ" => Field::Theta,
            "theta0" | "θ₀" => Field::Theta0,
            "theta1" | "θ₁" => Field::Theta1,
            "theta2" | "θ₂" => Field::Theta2,
            "nu" | "ν" => Field::Nu,
            "nubar" | "ν̄" => Field::NuBar,
            "n0" | "n₀" => Field::N0,
            _ => return Err(MathError::UnknownField(s.to_string())),
        };
        Ok(f)
    }
}

/// Applies a vector field given by name.
pub fn vector_field(name: &str, p: &LaurentPoly) -> Result<LaurentPoly, MathError> {
    Ok(p.apply_field(name.parse()?))
}

fn fmt_monomial(m: &Monomial) -> Vec<String> {
    let mut parts = Vec::new();
    for (name, k) in [("z1", m.a), ("z1c", m.b), ("z2", m.c), ("z2c", m.d)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    match m.e {
        0 => {}
        1 => parts.push("r2".to_string()),
        e => parts.push(format!("r2^{e}")),
    }
    parts
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let factors = fmt_monomial(m);
            if factors.is_empty() {
                return if c.is_compound() {
                    format!("({c})")
                } else {
                    c.to_string()
                };
            }
            let body = factors.join("*");
            if c.is_one() {
                body
            } else if (-c).is_one() {
                format!("-{body}")
            } else if c.is_compound() {
                format!("({c})*{body}")
            } else {
                format!("{c}*{body}")
            }
        });
        write!(f, "{}", join_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = crate::parse::Parser::new(s)?;
        let out = p.poly()?;
        p.expect_end()?;
        Ok(out)
    }
}
