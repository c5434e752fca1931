//! Exact numbers of the form Σ_d q_d·√d with q_d ∈ ℚ(i) and d squarefree.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::MathError;

pub type Rational = BigRational;

/// A Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, MathError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(MathError::ZeroDivision);
        }
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }
}

/// Exact element of ℚ(i)(√2, √3, √5, ...). The map never stores zero coefficients,
/// so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<u64, GaussianRational>,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Writes `n = s²·d` with `d` squarefree and returns `(s, d)`.
fn square_free_split(n: &BigUint) -> Result<(BigUint, u64), MathError> {
    const LIMIT: u64 = 1_000_000;
    let mut rest = n.clone();
    let mut s = BigUint::one();
    let mut d = BigUint::one();
    let mut p = 2u64;
    while p <= LIMIT && BigUint::from(p) * BigUint::from(p) <= rest {
        let bp = BigUint::from(p);
        let mut count = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            count += 1;
        }
        if count > 0 {
            s *= bp.pow(count / 2);
            if count % 2 == 1 {
                d *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > BigUint::one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            s *= r;
        } else if rest <= BigUint::from(LIMIT) * BigUint::from(LIMIT) {
            d *= rest;
        } else {
            return Err(MathError::BadRadicand(n.to_string()));
        }
    }
    let d = d
        .to_u64()
        .ok_or_else(|| MathError::BadRadicand(n.to_string()))?;
    Ok((s, d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussianRational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gauss(GaussianRational::new(Rational::zero(), Rational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_gauss(GaussianRational::new(r, Rational::zero()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_gauss(g: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert(1, g);
        }
        Scalar { terms }
    }

    pub fn gauss(re: Rational, im: Rational) -> Self {
        Self::from_gauss(GaussianRational::new(re, im))
    }

    /// `q·√d` for a squarefree `d`.
    pub fn term(q: GaussianRational, d: u64) -> Self {
        debug_assert!(d > 0 && prime_factors(d).iter().all(|p| !d.is_multiple_of(p * p)));
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(d, q);
        }
        Scalar { terms }
    }

    /// Exact square root of a nonnegative rational.
    pub fn sqrt_rational(r: &Rational) -> Result<Self, MathError> {
        if r.is_negative() {
            return Err(MathError::BadRadicand(r.to_string()));
        }
        if r.is_zero() {
            return Ok(Scalar::zero());
        }
        // √(p/q) = √(pq)/q
        let pq = (r.numer() * r.denom()).to_biguint().expect("positive");
        let (s, d) = square_free_split(&pq)?;
        let coef = Rational::new(BigInt::from(s), r.denom().clone());
        Ok(Scalar::term(GaussianRational::new(coef, Rational::zero()), d))
    }

    pub fn sqrt_int(n: u64) -> Self {
        Self::sqrt_rational(&Rational::from_integer(BigInt::from(n))).expect("u64 radicand")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|g| g.is_one())
    }

    /// Iterates over `(d, q_d)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.terms.iter().map(|(d, q)| (*d, q))
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|g| g.im.is_zero())
    }

    /// Returns the value as a rational if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let g = self.terms.get(&1)?;
                g.im.is_zero().then(|| g.re.clone())
            }
            _ => None,
        }
    }

    /// Returns the value as a Gaussian rational if it has no radicals.
    pub fn as_gauss(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn conj(&self) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(d, g)| (*d, g.conj())).collect(),
        }
    }

    /// Real part (radicands are real, so this is taken termwise).
    pub fn re(&self) -> Self {
        self.map_terms(|g| GaussianRational::new(g.re.clone(), Rational::zero()))
    }

    /// Imaginary part, returned as a real scalar.
    pub fn im(&self) -> Self {
        self.map_terms(|g| GaussianRational::new(g.im.clone(), Rational::zero()))
    }

    fn map_terms(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(d, g)| (*d, f(g)))
                .filter(|(_, g)| !g.is_zero())
                .collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map_terms(|g| g.scale(r))
    }

    fn add_term(&mut self, d: u64, q: GaussianRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(g) => {
                *g = g.add(&q);
                if g.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, q);
            }
        }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (d1, q1) in &self.terms {
            for (d2, q2) in &o.terms {
                let g = d1.gcd(d2);
                let d = (d1 / g)
                    .checked_mul(d2 / g)
                    .expect("radicand overflow");
                let q = q1.mul(q2).scale(&rat(g as i64));
                out.add_term(d, q);
            }
        }
        out
    }

    /// Applies the field automorphism √p ↦ −√p.
    fn galois_flip(&self, p: u64) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(d, g)| (*d, if d % p == 0 { g.neg() } else { g.clone() }))
                .collect(),
        }
    }

    /// Exact multiplicative inverse. Radicals are cleared by multiplying with the
    /// Galois conjugates √p ↦ −√p one prime at a time.
    pub fn inv(&self) -> Result<Scalar, MathError> {
        if self.is_zero() {
            return Err(MathError::ZeroDivision);
        }
        let mut primes: Vec<u64> = self
            .terms
            .keys()
            .flat_map(|d| prime_factors(*d))
            .collect();
        primes.sort_unstable();
        primes.dedup();
        let mut num = Scalar::one();
        let mut den = self.clone();
        for p in primes {
            let flip = den.galois_flip(p);
            num = num.mul_ref(&flip);
            den = den.mul_ref(&flip);
        }
        let g = den
            .as_gauss()
            .ok_or_else(|| MathError::UnsupportedInverse(self.to_string()))?;
        Ok(num.mul_ref(&Scalar::from_gauss(g.inv()?)))
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, MathError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Floating-point approximation `(re, im)`, intended for diagnostics and oracles.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (d, g) in &self.terms {
            let s = (*d as f64).sqrt();
            re += g.re.to_f64().unwrap_or(f64::NAN) * s;
            im += g.im.to_f64().unwrap_or(f64::NAN) * s;
        }
        (re, im)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (d, q) in &o.terms {
            out.add_term(*d, q.clone());
        }
        out
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (d, q) in &o.terms {
            out.add_term(*d, q.neg());
        }
        out
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.map_terms(|g| g.neg())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] to handle it.
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        for (d, q) in &o.terms {
            self.add_term(*d, q.clone());
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        for (d, q) in &o.terms {
            self.add_term(*d, q.neg());
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_ref(o);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += s;
        }
        acc
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

fn fmt_gauss(g: &GaussianRational) -> String {
    let im_part = |v: &Rational| -> String {
        if v.is_one() {
            "im".to_string()
        } else if (-v).is_one() {
            "-im".to_string()
        } else {
            format!("{v}*im")
        }
    };
    if g.im.is_zero() {
        g.re.to_string()
    } else if g.re.is_zero() {
        im_part(&g.im)
    } else if g.im.is_negative() {
        let s = im_part(&-g.im.clone());
        format!("({} - {s})", g.re)
    } else {
        format!("({} + {})", g.re, im_part(&g.im))
    }
}

fn fmt_term(d: u64, g: &GaussianRational) -> String {
    if d == 1 {
        return fmt_gauss(g);
    }
    if g.is_one() {
        format!("sqrt({d})")
    } else if g.neg().is_one() {
        format!("-sqrt({d})")
    } else {
        format!("{}*sqrt({d})", fmt_gauss(g))
    }
}

/// Joins signed term strings into a sum, turning `+ -x` into `- x`.
pub(crate) fn join_terms(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (i, t) in parts.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

impl Scalar {
    /// True when the text form is a sum of several terms and needs parentheses
    /// when used as a factor.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = join_terms(self.terms.iter().map(|(d, g)| fmt_term(*d, g)));
        write!(f, "{s}")
    }
}
