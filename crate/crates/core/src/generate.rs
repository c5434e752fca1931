//! Spans of products of spinors on S³, used to certify that {I, J, κ, λ}
//! generate the Laurent-type spinors.

use serde::Serialize;

use crate::linalg::{Span, SparseVec};
use crate::spinor::{phi_basis_s3, BasisIndex, Spinor};

/// Coordinate key of a spinor: slot (0 = u, 1 = v) and monomial.
pub type SpinorKey = (u8, crate::laurent::Monomial);

/// Complex coordinates of a spinor in the ambient normal form.
pub fn spinor_coords(p: &Spinor) -> SparseVec<SpinorKey> {
    let mut v = SparseVec::new();
    for (m, c) in p.u.terms() {
        v.insert((0, *m), c.clone());
    }
    for (m, c) in p.v.terms() {
        v.insert((1, *m), c.clone());
    }
    v
}

/// The four generators I, J, κ, λ.
pub fn four_generators() -> Vec<(&'static str, Spinor)> {
    vec![
        ("I", Spinor::unit()),
        ("Jq", Spinor::jq()),
        ("kappa", Spinor::kappa()),
        ("lambda", Spinor::lambda()),
    ]
}

/// ℂ-span (right scalars) of all products of at most `max_len` generators, restricted to S³.
pub struct ProductSpan {
    pub span: Span<SpinorKey>,
    /// Dimension after each product length 1, 2, ….
    pub dims: Vec<usize>,
}

impl ProductSpan {
    pub fn contains_s3(&self, p: &Spinor) -> bool {
        self.span.contains(&spinor_coords(&p.restrict_s3()))
    }
}

/// Left multiplication by a generator commutes with right scalars, so each
/// length only needs the new basis vectors of the previous one.
pub fn product_span(gens: &[Spinor], max_len: usize) -> ProductSpan {
    let mut span = Span::new();
    let mut frontier: Vec<Spinor> = Vec::new();
    let mut dims = Vec::new();
    for g in gens {
        let r = g.restrict_s3();
        if span.insert(spinor_coords(&r)) {
            frontier.push(r);
        }
    }
    dims.push(span.dim());
    for _ in 1..max_len {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let p = g.mul(f).restrict_s3();
                if span.insert(spinor_coords(&p)) {
                    next.push(p);
                }
            }
        }
        frontier = next;
        dims.push(span.dim());
    }
    ProductSpan { span, dims }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenerationReport {
    pub m_bound: u32,
    pub max_len: usize,
    pub dims: Vec<usize>,
    pub missing: Vec<String>,
}

impl GenerationReport {
    pub fn complete(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Checks that every φ^{±(m,l,k)} with m ≤ m_bound lies in the span of products of length ≤ max_len.
pub fn certify_generation(m_bound: u32, max_len: usize) -> GenerationReport {
    let gens: Vec<Spinor> = four_generators().into_iter().map(|(_, s)| s).collect();
    let ps = product_span(&gens, max_len);
    let missing = BasisIndex::up_to(m_bound)
        .into_iter()
        .filter(|idx| !ps.span.contains(&spinor_coords(&phi_basis_s3(idx))))
        .map(|idx| idx.to_string())
        .collect();
    GenerationReport {
        m_bound,
        max_len,
        dims: ps.dims,
        missing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one_needs_four_factors() {
        assert!(certify_generation(0, 2).complete());
        assert!(certify_generation(1, 4).complete());
        assert!(!certify_generation(1, 3).complete());
    }
}
