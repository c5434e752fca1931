//! Quaternionic matrices A + JB, the MJ(2n,ℂ) model, the Killing form and
//! sl(n,ℂ) Chevalley data.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::MathError;
use crate::linalg::{realify, Span, SparseVec};
use crate::scalar::Scalar;

/// n×n complex matrix with 1-based sparse entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CMatrix {
    pub n: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl CMatrix {
    pub fn zero(n: usize) -> Self {
        CMatrix {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// The matrix unit E_ij.
    pub fn e(n: usize, i: usize, j: usize) -> Result<Self, MathError> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(MathError::IndexOutOfRange(format!("E({i},{j}) in gl({n})")));
        }
        let mut m = Self::zero(n);
        m.set(i, j, Scalar::one());
        Ok(m)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "index in range");
        if s.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), s);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn same_n(&self, o: &CMatrix) -> Result<(), MathError> {
        if self.n != o.n {
            return Err(MathError::DimensionMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn add(&self, o: &CMatrix) -> Result<CMatrix, MathError> {
        self.same_n(o)?;
        let mut out = self.clone();
        for (&(i, j), x) in &o.entries {
            let v = &out.get(i, j) + x;
            out.set(i, j, v);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &CMatrix) -> Result<CMatrix, MathError> {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> CMatrix {
        let mut out = CMatrix::zero(self.n);
        for (&(i, j), x) in &self.entries {
            out.set(i, j, x * s);
        }
        out
    }

    pub fn mul(&self, o: &CMatrix) -> Result<CMatrix, MathError> {
        self.same_n(o)?;
        let mut out = CMatrix::zero(self.n);
        for (&(i, j), x) in &self.entries {
            for (&(k, l), y) in o.entries.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(k, j);
                let v = &out.get(i, l) + &(x * y);
                out.set(i, l, v);
            }
        }
        Ok(out)
    }

    pub fn conj(&self) -> CMatrix {
        let mut out = CMatrix::zero(self.n);
        for (&(i, j), x) in &self.entries {
            out.set(i, j, x.conj());
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        (1..=self.n).map(|i| self.get(i, i)).sum()
    }

    /// XY − YX.
    pub fn commutator(&self, o: &CMatrix) -> Result<CMatrix, MathError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((i, j), x)| {
                if x.is_one() {
                    format!("E({i},{j})")
                } else {
                    format!("({x})*E({i},{j})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The quaternionic matrix A + JB.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatMatrix {
    pub a: CMatrix,
    pub b: CMatrix,
}

impl QuatMatrix {
    pub fn new(a: CMatrix, b: CMatrix) -> Result<Self, MathError> {
        a.same_n(&b)?;
        Ok(QuatMatrix { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.n
    }

    /// X + J·0.
    pub fn complex(a: CMatrix) -> Self {
        let n = a.n;
        QuatMatrix {
            a,
            b: CMatrix::zero(n),
        }
    }

    /// 0 + J·B.
    pub fn j(b: CMatrix) -> Self {
        let n = b.n;
        QuatMatrix {
            a: CMatrix::zero(n),
            b,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &QuatMatrix) -> Result<QuatMatrix, MathError> {
        Ok(QuatMatrix {
            a: self.a.add(&o.a)?,
            b: self.b.add(&o.b)?,
        })
    }

    /// Right multiplication by a complex scalar: (A + JB)s = As + JBs.
    pub fn scale(&self, s: &Scalar) -> QuatMatrix {
        QuatMatrix {
            a: self.a.scale(s),
            b: self.b.scale(s),
        }
    }

    /// Left multiplication by a complex scalar: s(A + JB) = sA + J s̄B.
    pub fn left_scale(&self, s: &Scalar) -> QuatMatrix {
        QuatMatrix {
            a: self.a.scale(s),
            b: self.b.scale(&s.conj()),
        }
    }

    /// (X₁ + JY₁)(X₂ + JY₂) = (X₁X₂ − Ȳ₁Y₂) + J(Y₁X₂ + X̄₁Y₂).
    pub fn mul(&self, o: &QuatMatrix) -> Result<QuatMatrix, MathError> {
        Ok(QuatMatrix {
            a: self.a.mul(&o.a)?.sub(&self.b.conj().mul(&o.b)?)?,
            b: self.b.mul(&o.a)?.add(&self.a.conj().mul(&o.b)?)?,
        })
    }

    /// σ(A + JB) = A − JB.
    pub fn sigma(&self) -> QuatMatrix {
        QuatMatrix {
            a: self.a.clone(),
            b: self.b.scale(&Scalar::from_int(-1)),
        }
    }

    /// Coordinates over ℝ, keyed by (slot, i, j, imaginary part).
    pub fn real_coords(&self) -> SparseVec<crate::linalg::Part<(u8, usize, usize)>> {
        let mut v: SparseVec<(u8, usize, usize)> = BTreeMap::new();
        for (&(i, j), x) in self.a.entries() {
            v.insert((0, i, j), x.clone());
        }
        for (&(i, j), x) in self.b.entries() {
            v.insert((1, i, j), x.clone());
        }
        realify(&v)
    }
}

impl fmt::Display for QuatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "Jm({})", self.b),
            (false, false) => write!(f, "{} + Jm({})", self.a, self.b),
        }
    }
}

/// (A, −B̄; B, Ā) in gl(2n, ℂ).
pub fn mj_embed(q: &QuatMatrix) -> CMatrix {
    let n = q.n();
    let mut z = CMatrix::zero(2 * n);
    for (&(i, j), x) in q.a.entries() {
        z.set(i, j, x.clone());
        z.set(i + n, j + n, x.conj());
    }
    for (&(i, j), x) in q.b.entries() {
        z.set(i + n, j, x.clone());
        z.set(i, j + n, -x.conj());
    }
    z
}

/// The symplectic matrix (0, −I; I, 0) of size 2n.
pub fn symplectic_j(n: usize) -> CMatrix {
    mj_embed(&QuatMatrix::j(CMatrix::identity(n)))
}

/// J·Z = Z̄·J.
pub fn in_mj(z: &CMatrix) -> bool {
    if !z.n.is_multiple_of(2) {
        return false;
    }
    let j = symplectic_j(z.n / 2);
    j.mul(z).expect("same size") == z.conj().mul(&j).expect("same size")
}

/// [X₁+JY₁, X₂+JY₂] = (X₁X₂−X₂X₁−Ȳ₁Y₂+Ȳ₂Y₁) + J(Y₁X₂−Y₂X₁+X̄₁Y₂−X̄₂Y₁).
pub fn qm_bracket(p: &QuatMatrix, q: &QuatMatrix) -> Result<QuatMatrix, MathError> {
    if p.n() != q.n() {
        return Err(MathError::DimensionMismatch(p.n(), q.n()));
    }
    let (x1, y1, x2, y2) = (&p.a, &p.b, &q.a, &q.b);
    let a = x1
        .commutator(x2)?
        .sub(&y1.conj().mul(y2)?)?
        .add(&y2.conj().mul(y1)?)?;
    let b = y1
        .mul(x2)?
        .sub(&y2.mul(x1)?)?
        .add(&x1.conj().mul(y2)?)?
        .sub(&x2.conj().mul(y1)?)?;
    Ok(QuatMatrix { a, b })
}

/// (X|Y) = tr(XY).
pub fn killing(x: &CMatrix, y: &CMatrix) -> Result<Scalar, MathError> {
    Ok(x.mul(y)?.trace())
}

/// tr A ∈ iℝ; B is unrestricted.
pub fn is_sl_quaternion(q: &QuatMatrix) -> bool {
    q.a.trace().re().is_zero()
}

/// Root α = Σ c_i α_i over the simple roots of sl(n,ℂ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootVector {
    pub coords: Vec<i64>,
}

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector {
            coords: vec![0; n.saturating_sub(1)],
        }
    }

    /// α_i.
    pub fn simple(n: usize, i: usize) -> Result<Self, MathError> {
        if i == 0 || i >= n {
            return Err(MathError::IndexOutOfRange(format!("simple root {i} of sl({n})")));
        }
        let mut r = Self::zero(n);
        r.coords[i - 1] = 1;
        Ok(r)
    }

    /// The root of E_ij: α_i + … + α_{j−1} for i < j, its negative for i > j, 0 on the diagonal.
    pub fn of_entry(n: usize, i: usize, j: usize) -> Self {
        let mut r = Self::zero(n);
        let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        for p in lo..hi {
            r.coords[p - 1] = s;
        }
        r
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &RootVector) -> RootVector {
        RootVector {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }

    /// ⟨α, h_i⟩ = Σ_p c_p a_{ip}.
    pub fn pair_h(&self, i: usize) -> i64 {
        let cm = cartan_matrix(self.n());
        self.coords.iter().enumerate().map(|(p, c)| c * cm[i - 1][p]).sum()
    }

    /// Matrix positions (i, j) carrying this root; for zero, the Cartan positions.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && RootVector::of_entry(n, i, j) == *self {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (p, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { format!("{}*", c.abs()) };
            s.push_str(&format!("{sign}{mag}alpha{}", p + 1));
        }
        write!(f, "{s}")
    }
}

/// a_ij = ⟨α_i^∨, α_j⟩: 2 on the diagonal, −1 next to it.
pub fn cartan_matrix(n: usize) -> Vec<Vec<i64>> {
    let r = n.saturating_sub(1);
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Standard generators of sl(n,ℂ) and the highest-root triple.
#[derive(Clone, Debug)]
pub struct ChevalleyData {
    pub n: usize,
    pub h: Vec<CMatrix>,
    pub x: Vec<CMatrix>,
    pub y: Vec<CMatrix>,
    pub cartan: Vec<Vec<i64>>,
    pub x_theta: CMatrix,
    pub y_theta: CMatrix,
    pub h_theta: CMatrix,
}

impl ChevalleyData {
    /// 1-based accessors.
    pub fn h(&self, i: usize) -> &CMatrix {
        &self.h[i - 1]
    }
    pub fn x(&self, i: usize) -> &CMatrix {
        &self.x[i - 1]
    }
    pub fn y(&self, i: usize) -> &CMatrix {
        &self.y[i - 1]
    }
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }
}

pub fn chevalley_data(n: usize) -> Result<ChevalleyData, MathError> {
    if n < 2 {
        return Err(MathError::InvalidArgument(format!("sl({n}) needs n >= 2")));
    }
    let e = |i, j| CMatrix::e(n, i, j).expect("in range");
    let mut h = Vec::new();
    let mut x = Vec::new();
    let mut y = Vec::new();
    for i in 1..n {
        h.push(e(i, i).sub(&e(i + 1, i + 1))?);
        x.push(e(i, i + 1));
        y.push(e(i + 1, i));
    }
    Ok(ChevalleyData {
        n,
        h,
        x,
        y,
        cartan: cartan_matrix(n),
        x_theta: e(1, n),
        y_theta: e(n, 1),
        h_theta: e(1, 1).sub(&e(n, n))?,
    })
}

/// E_ij for i ≠ j as nested brackets of x's (i < j) or y's (i > j).
pub fn compose_e(data: &ChevalleyData, i: usize, j: usize) -> Result<CMatrix, MathError> {
    let n = data.n;
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(MathError::IndexOutOfRange(format!("E({i},{j}) off-diagonal in gl({n})")));
    }
    if i < j {
        // E_ij = [x_i, [x_{i+1}, … x_{j−1}]]
        let mut acc = data.x(j - 1).clone();
        for p in (i..j - 1).rev() {
            acc = data.x(p).commutator(&acc)?;
        }
        Ok(acc)
    } else {
        // E_ij = [y_{i−1}, [y_{i−2}, … y_j]]
        let mut acc = data.y(j).clone();
        for p in j + 1..i {
            acc = data.y(p).commutator(&acc)?;
        }
        Ok(acc)
    }
}

/// One row of the J-relation table, evaluated for a pair (i, j).
#[derive(Clone, Debug, Serialize)]
pub struct JRelation {
    pub name: String,
    pub computed: String,
    pub stated: String,
    pub matches: bool,
}

/// The nine J-relation families for all i, j ≤ n−1, against the stated right-hand sides.
pub fn j_relation_table(n: usize) -> Result<Vec<JRelation>, MathError> {
    let d = chevalley_data(n)?;
    let c = |m: &CMatrix| QuatMatrix::complex(m.clone());
    let jm = |m: &CMatrix| QuatMatrix::j(m.clone());
    let zero = QuatMatrix::complex(CMatrix::zero(n));
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            let a = Scalar::from_int(d.a(j, i));
            let delta = i == j;
            let hj = |q: fn(&CMatrix) -> QuatMatrix, s: i64| {
                if delta {
                    q(d.h(j)).scale(&Scalar::from_int(s))
                } else {
                    zero.clone()
                }
            };
            let rows: Vec<(&str, QuatMatrix, QuatMatrix)> = vec![
                ("[x_i,Jy_j] = Jh_j d_ij", qm_bracket(&c(d.x(i)), &jm(d.y(j)))?, hj(QuatMatrix::j_ref, 1)),
                ("[h_i,Jx_j] = a_ji Jx_j", qm_bracket(&c(d.h(i)), &jm(d.x(j)))?, jm(d.x(j)).scale(&a)),
                ("[h_i,Jy_j] = -a_ji Jy_j", qm_bracket(&c(d.h(i)), &jm(d.y(j)))?, jm(d.y(j)).scale(&-&a)),
                ("[Jx_i,y_j] = -Jh_j d_ij", qm_bracket(&jm(d.x(i)), &c(d.y(j)))?, hj(QuatMatrix::j_ref, -1)),
                ("[Jh_i,x_j] = a_ji Jx_j", qm_bracket(&jm(d.h(i)), &c(d.x(j)))?, jm(d.x(j)).scale(&a)),
                ("[Jh_i,y_j] = -a_ji Jy_j", qm_bracket(&jm(d.h(i)), &c(d.y(j)))?, jm(d.y(j)).scale(&-&a)),
                ("[Jx_i,Jy_j] = -h_j d_ij", qm_bracket(&jm(d.x(i)), &jm(d.y(j)))?, hj(QuatMatrix::complex_ref, -1)),
                ("[Jh_i,Jx_j] = -a_ji x_j", qm_bracket(&jm(d.h(i)), &jm(d.x(j)))?, c(d.x(j)).scale(&-&a)),
                ("[Jh_i,Jy_j] = -a_ji Jy_j", qm_bracket(&jm(d.h(i)), &jm(d.y(j)))?, jm(d.y(j)).scale(&-&a)),
            ];
            for (name, computed, stated) in rows {
                out.push(JRelation {
                    name: format!("{name} (i={i}, j={j})"),
                    matches: computed == stated,
                    computed: computed.to_string(),
                    stated: stated.to_string(),
                });
            }
        }
    }
    Ok(out)
}

impl QuatMatrix {
    fn j_ref(m: &CMatrix) -> QuatMatrix {
        QuatMatrix::j(m.clone())
    }
    fn complex_ref(m: &CMatrix) -> QuatMatrix {
        QuatMatrix::complex(m.clone())
    }
}

/// ℝ-span closure of a generating set under qm_bracket.
pub struct QuatClosure {
    pub span: Span<crate::linalg::Part<(u8, usize, usize)>>,
    pub basis: Vec<QuatMatrix>,
}

impl QuatClosure {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, q: &QuatMatrix) -> bool {
        self.span.contains(&q.real_coords())
    }
}

/// Brackets basis elements against the generators until the span stabilizes.
pub fn quat_closure(gens: &[QuatMatrix]) -> Result<QuatClosure, MathError> {
    let mut span = Span::new();
    let mut basis = Vec::new();
    for g in gens {
        if span.insert(g.real_coords()) {
            basis.push(g.clone());
        }
    }
    let mut next = 0;
    while next < basis.len() {
        let b = basis[next].clone();
        next += 1;
        for g in gens {
            let c = qm_bracket(&b, g)?;
            if span.insert(c.real_coords()) {
                basis.push(c);
            }
        }
    }
    Ok(QuatClosure { span, basis })
}

/// {h_i, x_i, y_i, Jh_i, Jx_i, Jy_i} and their i-multiples.
pub fn sl_quaternion_generators(n: usize) -> Result<Vec<QuatMatrix>, MathError> {
    let d = chevalley_data(n)?;
    let mut out = Vec::new();
    for i in 1..n {
        for m in [d.h(i), d.x(i), d.y(i)] {
            for q in [QuatMatrix::complex(m.clone()), QuatMatrix::j(m.clone())] {
                out.push(q.scale(&Scalar::i()));
                out.push(q);
            }
        }
    }
    Ok(out)
}
