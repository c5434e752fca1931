//! The extended current algebra ĝl = ℂ[φ^±]⊗gl(n,ℂ) ⊕ ℂa₀ ⊕ ℂa₁ ⊕ ℂa₂ ⊕ ℂ𝐧:
//! bracket, weights, root spaces, Chevalley generators and windowed closures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::cocycle::{cocycle, graded_cocycle};
use crate::error::MathError;
use crate::generate::{spinor_coords, SpinorKey};
use crate::laurent::Monomial;
use crate::linalg::{realify, Part, Span, SparseVec};
use crate::matquat::{chevalley_data, CMatrix, RootVector};
use crate::scalar::Scalar;
use crate::spinor::{phi_basis, BasisIndex, Spinor};

/// How the central term of [φ⊗X, ψ⊗Y] is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum CentralMode {
    /// (X|Y) Σ_N c_k(φ_N, ψ_{−N}): homogeneous parts of opposite degree only.
    #[default]
    Graded,
    /// (X|Y) c_k(φ, ψ).
    Raw,
}

/// Σ φ_ij ⊗ E_ij + Σ p_k a_k + q 𝐧.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentElement {
    pub n: usize,
    body: BTreeMap<(usize, usize), Spinor>,
    pub central: [Scalar; 3],
    pub deriv: Scalar,
}

impl CurrentElement {
    pub fn zero(n: usize) -> Self {
        CurrentElement {
            n,
            body: BTreeMap::new(),
            central: Default::default(),
            deriv: Scalar::zero(),
        }
    }

    /// φ ⊗ X, with the entries of X acting as right scalars on φ.
    pub fn tensor(phi: &Spinor, x: &CMatrix) -> Self {
        let mut out = Self::zero(x.n);
        for (&(i, j), c) in x.entries() {
            out.add_body(i, j, &phi.scale(c));
        }
        out
    }

    /// a_k.
    pub fn central_unit(n: usize, k: usize) -> Result<Self, MathError> {
        if k > 2 {
            return Err(MathError::IndexOutOfRange(format!("a{k}")));
        }
        let mut out = Self::zero(n);
        out.central[k] = Scalar::one();
        Ok(out)
    }

    /// 𝐧.
    pub fn nv(n: usize) -> Self {
        let mut out = Self::zero(n);
        out.deriv = Scalar::one();
        out
    }

    pub fn body(&self) -> impl Iterator<Item = (&(usize, usize), &Spinor)> {
        self.body.iter()
    }

    pub fn body_entry(&self, i: usize, j: usize) -> Spinor {
        self.body.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Adds φ to the (i, j) body slot.
    pub fn add_body(&mut self, i: usize, j: usize, phi: &Spinor) {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "index in range");
        let e = self.body.entry((i, j)).or_default();
        *e = &*e + phi;
        if e.is_zero() {
            self.body.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_empty() && self.central.iter().all(Scalar::is_zero) && self.deriv.is_zero()
    }

    pub fn has_center_or_deriv(&self) -> bool {
        !self.deriv.is_zero() || self.central.iter().any(|c| !c.is_zero())
    }

    fn same_n(&self, o: &CurrentElement) -> Result<(), MathError> {
        if self.n != o.n {
            return Err(MathError::DimensionMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn add(&self, o: &CurrentElement) -> Result<CurrentElement, MathError> {
        self.same_n(o)?;
        let mut out = self.clone();
        for (&(i, j), p) in &o.body {
            out.add_body(i, j, p);
        }
        for k in 0..3 {
            out.central[k] = &out.central[k] + &o.central[k];
        }
        out.deriv = &out.deriv + &o.deriv;
        Ok(out)
    }

    pub fn sub(&self, o: &CurrentElement) -> Result<CurrentElement, MathError> {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    /// Right multiplication of every coefficient by s.
    pub fn scale(&self, s: &Scalar) -> CurrentElement {
        let mut out = CurrentElement::zero(self.n);
        for (&(i, j), p) in &self.body {
            out.add_body(i, j, &p.scale(s));
        }
        for k in 0..3 {
            out.central[k] = &self.central[k] * s;
        }
        out.deriv = &self.deriv * s;
        out
    }

    /// σ(φ⊗X) = σφ⊗X; a_k and 𝐧 are fixed.
    pub fn sigma(&self) -> CurrentElement {
        let mut out = self.clone();
        for p in out.body.values_mut() {
            *p = p.sigma();
        }
        out
    }

    /// Bodies restricted to S³; central and derivation parts dropped.
    pub fn restrict_body_s3(&self) -> CurrentElement {
        let mut out = CurrentElement::zero(self.n);
        for (&(i, j), p) in &self.body {
            out.add_body(i, j, &p.restrict_s3());
        }
        out
    }

    /// Homogeneity degrees present in the body.
    pub fn body_degrees(&self) -> BTreeSet<i64> {
        self.body
            .values()
            .flat_map(|p| p.homogeneous_parts().into_keys())
            .collect()
    }

    pub fn max_z_degree(&self) -> u32 {
        self.body.values().map(Spinor::max_z_degree).max().unwrap_or(0)
    }

    /// Complex coordinates.
    pub fn coords(&self) -> SparseVec<CoordKey> {
        let mut v = SparseVec::new();
        for (&(i, j), p) in &self.body {
            for (m, c) in p.u.terms() {
                v.insert(CoordKey::Body(i, j, 0, *m), c.clone());
            }
            for (m, c) in p.v.terms() {
                v.insert(CoordKey::Body(i, j, 1, *m), c.clone());
            }
        }
        for k in 0..3 {
            if !self.central[k].is_zero() {
                v.insert(CoordKey::Central(k), self.central[k].clone());
            }
        }
        if !self.deriv.is_zero() {
            v.insert(CoordKey::Deriv, self.deriv.clone());
        }
        v
    }

    pub fn real_coords(&self) -> SparseVec<Part<CoordKey>> {
        realify(&self.coords())
    }
}

/// Coordinate labels of a current element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoordKey {
    Body(usize, usize, u8, Monomial),
    Central(usize),
    Deriv,
}

fn fmt_coeff(c: &Scalar, atom: &str) -> String {
    if c.is_one() {
        atom.to_string()
    } else {
        format!("({c})*{atom}")
    }
}

impl fmt::Display for CurrentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for ((i, j), p) in &self.body {
            parts.push(format!("ten({p}, E({i},{j}))"));
        }
        for k in 0..3 {
            if !self.central[k].is_zero() {
                parts.push(fmt_coeff(&self.central[k], &format!("a{k}")));
            }
        }
        if !self.deriv.is_zero() {
            parts.push(fmt_coeff(&self.deriv, "nv"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// [ξ₁, ξ₂] with the graded central term.
pub fn cur_bracket(x: &CurrentElement, y: &CurrentElement) -> Result<CurrentElement, MathError> {
    cur_bracket_with(x, y, CentralMode::Graded)
}

/// [φ⊗E_ij, ψ⊗E_kl] = δ_jk φψ⊗E_il − δ_li ψφ⊗E_kj + δ_jk δ_il Σ c̃_k(φ,ψ) a_k,
/// [𝐧, φ⊗X] = 𝐧₀φ⊗X, a_k central.
pub fn cur_bracket_with(
    x: &CurrentElement,
    y: &CurrentElement,
    mode: CentralMode,
) -> Result<CurrentElement, MathError> {
    x.same_n(y)?;
    let mut out = CurrentElement::zero(x.n);
    for (&(i, j), p) in &x.body {
        for (&(k, l), q) in &y.body {
            if j == k {
                out.add_body(i, l, &p.mul(q));
            }
            if l == i {
                out.add_body(k, j, &-q.mul(p));
            }
            if j == k && i == l {
                for c in 0..3 {
                    let v = match mode {
                        CentralMode::Graded => graded_cocycle(c, p, q)?,
                        CentralMode::Raw => cocycle(c, p, q)?,
                    };
                    out.central[c] = &out.central[c] + &v;
                }
            }
        }
    }
    if !x.deriv.is_zero() {
        for (&(i, j), q) in &y.body {
            out.add_body(i, j, &q.n0().scale(&x.deriv));
        }
    }
    if !y.deriv.is_zero() {
        for (&(i, j), p) in &x.body {
            out.add_body(i, j, &-p.n0().scale(&y.deriv));
        }
    }
    Ok(out)
}

/// Joint eigenvalue label (m/2)ν + α; the Λ_k slots are always 0 for adjoint weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    pub half_nu: i64,
    pub root: RootVector,
    pub lambda: [i64; 3],
}

impl Weight {
    pub fn new(half_nu: i64, root: RootVector) -> Self {
        Weight {
            half_nu,
            root,
            lambda: [0; 3],
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/2)nu + {}", self.half_nu, self.root)
    }
}

/// ĥ_i = I⊗h_i.
pub fn h_hat(n: usize, i: usize) -> Result<CurrentElement, MathError> {
    let d = chevalley_data(n)?;
    if i == 0 || i >= n {
        return Err(MathError::IndexOutOfRange(format!("h({i}) in sl({n})")));
    }
    Ok(CurrentElement::tensor(&Spinor::unit(), d.h(i)))
}

/// The weight of ξ, verified by bracketing with every ĥ_i and with 𝐧.
pub fn weight_of(xi: &CurrentElement) -> Result<Weight, MathError> {
    let n = xi.n;
    if xi.is_zero() {
        return Err(MathError::NotAWeightVector("zero element".into()));
    }
    let mut degrees = xi.body_degrees();
    let mut roots: BTreeSet<RootVector> = xi
        .body
        .keys()
        .map(|&(i, j)| RootVector::of_entry(n, i, j))
        .collect();
    if xi.has_center_or_deriv() {
        degrees.insert(0);
        roots.insert(RootVector::zero(n));
    }
    if degrees.len() > 1 || roots.len() > 1 {
        return Err(MathError::NotAWeightVector(format!(
            "degrees {degrees:?}, {} roots",
            roots.len()
        )));
    }
    let m = degrees.into_iter().next().unwrap_or(0);
    let root = roots.into_iter().next().unwrap_or_else(|| RootVector::zero(n));
    for i in 1..n {
        let lhs = cur_bracket(&h_hat(n, i)?, xi)?;
        if lhs != xi.scale(&Scalar::from_int(root.pair_h(i))) {
            return Err(MathError::NotAWeightVector(format!("ad h({i}) eigen test")));
        }
    }
    let lhs = cur_bracket(&CurrentElement::nv(n), xi)?;
    if lhs != xi.scale(&Scalar::frac(m, 2)) {
        return Err(MathError::NotAWeightVector("ad n eigen test".into()));
    }
    Ok(Weight::new(m, root))
}

/// Basis of ℂ[φ^±; m] within the window: products of at most `max_factors`
/// basis spinors of level ≤ `max_level` with total degree m.
pub fn degree_basis(m: i64, max_level: u32, max_factors: usize) -> Vec<Spinor> {
    let basis: Vec<(i64, Spinor)> = BasisIndex::up_to(max_level)
        .into_iter()
        .map(|idx| (idx.degree(), phi_basis(&idx)))
        .collect();
    let dmin = basis.iter().map(|b| b.0).min().unwrap_or(0).min(0);
    let dmax = basis.iter().map(|b| b.0).max().unwrap_or(0).max(0);
    let mut target = Span::new();
    let mut out = Vec::new();
    let mut layer: BTreeMap<i64, Vec<Spinor>> = BTreeMap::from([(0, vec![Spinor::unit()])]);
    for f in 1..=max_factors {
        let rem = (max_factors - f) as i64;
        let keep = |d: i64| d == m || (rem > 0 && d + rem * dmin <= m && m <= d + rem * dmax);
        let mut next: BTreeMap<i64, (Span<SpinorKey>, Vec<Spinor>)> = BTreeMap::new();
        for (d0, ps) in &layer {
            for p in ps {
                for (d1, q) in &basis {
                    let d = d0 + d1;
                    if !keep(d) {
                        continue;
                    }
                    let prod = p.mul(q);
                    let coords = spinor_coords(&prod);
                    let slot = next.entry(d).or_insert_with(|| (Span::new(), Vec::new()));
                    if slot.0.insert(coords.clone()) {
                        if d == m && target.insert(coords) {
                            out.push(prod.clone());
                        }
                        slot.1.push(prod);
                    }
                }
            }
        }
        layer = next.into_iter().map(|(d, (_, v))| (d, v)).collect();
    }
    out
}

/// Basis of the sl(n) root space g_α: E_ij for roots, h_i for α = 0.
pub fn root_matrices(n: usize, alpha: &RootVector) -> Result<Vec<CMatrix>, MathError> {
    if alpha.is_zero() {
        return Ok(chevalley_data(n)?.h);
    }
    let entries = alpha.entries();
    if entries.is_empty() {
        return Err(MathError::InvalidArgument(format!("{alpha} is not a root of sl({n})")));
    }
    entries
        .into_iter()
        .map(|(i, j)| CMatrix::e(n, i, j))
        .collect()
}

/// Windowed basis of ĝ_{(m/2)ν+α} in ŝl; for (0, 0) the centre and 𝐧 are included.
pub fn root_space_basis(
    m: i64,
    alpha: &RootVector,
    n: usize,
    max_level: u32,
    max_factors: usize,
) -> Result<Vec<CurrentElement>, MathError> {
    root_space_from(&degree_basis(m, max_level, max_factors), m, alpha, n)
}

/// Tensors a precomputed basis of ℂ[φ^±; m] with g_α.
pub fn root_space_from(
    spinors: &[Spinor],
    m: i64,
    alpha: &RootVector,
    n: usize,
) -> Result<Vec<CurrentElement>, MathError> {
    let mats = root_matrices(n, alpha)?;
    let mut out = Vec::new();
    for s in spinors {
        for x in &mats {
            out.push(CurrentElement::tensor(s, x));
        }
    }
    if m == 0 && alpha.is_zero() {
        for k in 0..3 {
            out.push(CurrentElement::central_unit(n, k)?);
        }
        out.push(CurrentElement::nv(n));
    }
    Ok(out)
}

/// The named generators of the current algebra.
#[derive(Clone, Debug)]
pub struct ChevalleyGenerators {
    pub n: usize,
    pub h: Vec<CurrentElement>,
    pub x: Vec<CurrentElement>,
    pub y: Vec<CurrentElement>,
    pub x_j: CurrentElement,
    pub y_j: CurrentElement,
    pub x_kappa: CurrentElement,
    pub y_kappa: CurrentElement,
    pub x_lambda: CurrentElement,
    pub y_lambda: CurrentElement,
    pub h_theta: CurrentElement,
    pub nv: CurrentElement,
    pub a: [CurrentElement; 3],
}

impl ChevalleyGenerators {
    pub fn named(&self) -> Vec<(String, CurrentElement)> {
        let mut out = Vec::new();
        for i in 0..self.h.len() {
            out.push((format!("h{}", i + 1), self.h[i].clone()));
            out.push((format!("x{}", i + 1), self.x[i].clone()));
            out.push((format!("y{}", i + 1), self.y[i].clone()));
        }
        for (name, e) in [
            ("xJ", &self.x_j),
            ("yJ", &self.y_j),
            ("xkappa", &self.x_kappa),
            ("ykappa", &self.y_kappa),
            ("xlambda", &self.x_lambda),
            ("ylambda", &self.y_lambda),
            ("htheta", &self.h_theta),
            ("nv", &self.nv),
        ] {
            out.push((name.to_string(), e.clone()));
        }
        for (k, a) in self.a.iter().enumerate() {
            out.push((format!("a{k}"), a.clone()));
        }
        out
    }
}

/// x̂_J = (−J)⊗x_θ, ŷ_J = J⊗y_θ, x̂_κ = κ*⊗x_θ, ŷ_κ = κ⊗y_θ, x̂_λ = λ*⊗x_θ, ŷ_λ = λ⊗y_θ.
pub fn chevalley_generators(n: usize) -> Result<ChevalleyGenerators, MathError> {
    let d = chevalley_data(n)?;
    let unit = Spinor::unit();
    let t = |s: &Spinor, m: &CMatrix| CurrentElement::tensor(s, m);
    Ok(ChevalleyGenerators {
        n,
        h: d.h.iter().map(|m| t(&unit, m)).collect(),
        x: d.x.iter().map(|m| t(&unit, m)).collect(),
        y: d.y.iter().map(|m| t(&unit, m)).collect(),
        x_j: t(&-Spinor::jq(), &d.x_theta),
        y_j: t(&Spinor::jq(), &d.y_theta),
        x_kappa: t(&Spinor::kappa_star(), &d.x_theta),
        y_kappa: t(&Spinor::kappa(), &d.y_theta),
        x_lambda: t(&Spinor::lambda_star(), &d.x_theta),
        y_lambda: t(&Spinor::lambda(), &d.y_theta),
        h_theta: t(&unit, &d.h_theta),
        nv: CurrentElement::nv(n),
        a: [
            CurrentElement::central_unit(n, 0)?,
            CurrentElement::central_unit(n, 1)?,
            CurrentElement::central_unit(n, 2)?,
        ],
    })
}

/// [𝐧, ξ] = 0.
pub fn centralizer_check(xi: &CurrentElement) -> Result<bool, MathError> {
    Ok(cur_bracket(&CurrentElement::nv(xi.n), xi)?.is_zero())
}

/// Which coordinates the closure works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureMode {
    /// Full elements in the ambient Laurent form, centre and 𝐧 included.
    Ambient,
    /// Bodies restricted to S³; the centre is dropped.
    S3Body,
}

/// Options of [`gen_closure`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClosureOptions {
    pub depth: usize,
    /// Ambient: bound on |homogeneity degree|; S3Body: bound on z-degree.
    pub degree_bound: u32,
    pub mode: ClosureMode,
    /// Close the span under multiplication by i.
    pub complex: bool,
}

/// Real span basis reached by a windowed closure.
pub struct Closure {
    pub span: Span<Part<CoordKey>>,
    pub basis: Vec<CurrentElement>,
    pub mode: ClosureMode,
    pub complete: bool,
}

impl Closure {
    pub fn real_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, xi: &CurrentElement) -> bool {
        let v = match self.mode {
            ClosureMode::Ambient => xi.clone(),
            ClosureMode::S3Body => xi.restrict_body_s3(),
        };
        self.span.contains(&v.real_coords())
    }
}

fn in_window(xi: &CurrentElement, opts: &ClosureOptions) -> bool {
    match opts.mode {
        ClosureMode::Ambient => xi
            .body_degrees()
            .iter()
            .all(|d| d.unsigned_abs() <= opts.degree_bound as u64),
        ClosureMode::S3Body => xi.max_z_degree() <= opts.degree_bound,
    }
}

/// Spans the generators, then brackets each new basis element with every
/// generator, level by level, up to `depth` levels or until nothing new appears.
pub fn gen_closure(gens: &[CurrentElement], opts: ClosureOptions) -> Result<Closure, MathError> {
    let prepare = |xi: CurrentElement| match opts.mode {
        ClosureMode::Ambient => xi,
        ClosureMode::S3Body => xi.restrict_body_s3(),
    };
    let mut span = Span::new();
    let mut basis: Vec<CurrentElement> = Vec::new();
    let push = |xi: CurrentElement, span: &mut Span<Part<CoordKey>>, basis: &mut Vec<CurrentElement>| -> Vec<CurrentElement> {
        let mut added = Vec::new();
        let mut cands = vec![xi.clone()];
        if opts.complex {
            cands.push(xi.scale(&Scalar::i()));
        }
        for c in cands {
            if !c.is_zero() && in_window(&c, &opts) && span.insert(c.real_coords()) {
                basis.push(c.clone());
                added.push(c);
            }
        }
        added
    };
    let gens: Vec<CurrentElement> = gens.iter().cloned().map(prepare).collect();
    let mut frontier = Vec::new();
    for g in &gens {
        frontier.extend(push(g.clone(), &mut span, &mut basis));
    }
    let mut complete = false;
    for _ in 0..opts.depth {
        let mut next = Vec::new();
        for b in &frontier {
            for g in &gens {
                let mut c = prepare(cur_bracket(b, g)?);
                if opts.mode == ClosureMode::S3Body {
                    c.central = Default::default();
                    c.deriv = Scalar::zero();
                }
                next.extend(push(c, &mut span, &mut basis));
            }
        }
        if next.is_empty() {
            complete = true;
            break;
        }
        frontier = next;
    }
    Ok(Closure {
        span,
        basis,
        mode: opts.mode,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{phi, Sign};

    fn e(n: usize, i: usize, j: usize) -> CMatrix {
        CMatrix::e(n, i, j).unwrap()
    }

    #[test]
    fn constants_bracket_classically() {
        let x = CurrentElement::tensor(&Spinor::unit(), &e(2, 1, 2));
        let y = CurrentElement::tensor(&Spinor::unit(), &e(2, 2, 1));
        let h = CurrentElement::tensor(&Spinor::unit(), &e(2, 1, 1).sub(&e(2, 2, 2)).unwrap());
        assert_eq!(cur_bracket(&x, &y).unwrap(), h);
    }

    #[test]
    fn derivation_acts_by_degree() {
        let k = CurrentElement::tensor(&Spinor::kappa(), &e(3, 1, 2));
        let b = cur_bracket(&CurrentElement::nv(3), &k).unwrap();
        assert_eq!(b, k.scale(&Scalar::frac(1, 2)));
    }

    #[test]
    fn j_pair() {
        let g = chevalley_generators(3).unwrap();
        assert_eq!(cur_bracket(&g.x_j, &g.y_j).unwrap(), g.h_theta);
    }

    #[test]
    fn weights() {
        let k = CurrentElement::tensor(&Spinor::kappa(), &e(3, 1, 2));
        let w = weight_of(&k).unwrap();
        assert_eq!(w, Weight::new(1, RootVector::simple(3, 1).unwrap()));
        let d = chevalley_data(3).unwrap();
        let l = CurrentElement::tensor(&Spinor::lambda(), d.h(1));
        assert_eq!(weight_of(&l).unwrap(), Weight::new(-3, RootVector::zero(3)));
        let a0 = CurrentElement::central_unit(3, 0).unwrap();
        assert_eq!(weight_of(&a0).unwrap(), Weight::new(0, RootVector::zero(3)));
        let mixed = k.add(&l).unwrap();
        assert!(weight_of(&mixed).is_err());
    }

    #[test]
    fn centralizer() {
        let d = chevalley_data(3).unwrap();
        let x = CurrentElement::tensor(&Spinor::unit(), &e(3, 1, 1))
            .add(&CurrentElement::central_unit(3, 0).unwrap())
            .unwrap();
        assert!(centralizer_check(&x).unwrap());
        assert!(!centralizer_check(&CurrentElement::tensor(&Spinor::kappa(), &e(3, 1, 2))).unwrap());
        let s = phi(Sign::Plus, 2, 0, 0).mul(&Spinor::lambda()).mul(&Spinor::kappa());
        assert!(centralizer_check(&CurrentElement::tensor(&s, d.h(1))).unwrap());
    }

    #[test]
    fn classical_closure() {
        let d = chevalley_data(3).unwrap();
        let gens: Vec<_> = d
            .h
            .iter()
            .chain(&d.x)
            .chain(&d.y)
            .map(|m| CurrentElement::tensor(&Spinor::unit(), m))
            .collect();
        let c = gen_closure(
            &gens,
            ClosureOptions {
                depth: 4,
                degree_bound: 0,
                mode: ClosureMode::Ambient,
                complex: true,
            },
        )
        .unwrap();
        assert_eq!(c.real_dim(), 16);
        assert!(c.complete);
    }
}
