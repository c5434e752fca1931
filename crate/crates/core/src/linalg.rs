//! Exact incremental row reduction of sparse vectors over [`Scalar`].

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use crate::scalar::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Echelon basis of a subspace; each row has coefficient 1 at its smallest key.
#[derive(Clone, Debug)]
pub struct Span<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Span<K> {
    fn default() -> Self {
        Span {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v.range((Excluded(c.clone()), Unbounded)).next().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(&r) = self.pivots.get(&k) {
                let c = v[&k].clone();
                for (kk, x) in &self.rows[r] {
                    let entry = v.entry(kk.clone()).or_default();
                    *entry -= &(&c * x);
                    if entry.is_zero() {
                        v.remove(kk);
                    }
                }
            }
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(v);
        let Some((pk, pc)) = r.iter().next() else {
            return false;
        };
        let pk = pk.clone();
        let inv = pc.inv().expect("nonzero pivot");
        let row: SparseVec<K> = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.pivots.insert(pk, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Key tagging the real or imaginary part of a coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Part<K> {
    pub key: K,
    pub imag: bool,
}

/// Rewrites a complex vector as a real one with doubled coordinates.
pub fn realify<K: Ord + Clone>(v: &SparseVec<K>) -> SparseVec<Part<K>> {
    let mut out = BTreeMap::new();
    for (k, x) in v {
        let re = x.re();
        let im = x.im();
        if !re.is_zero() {
            out.insert(
                Part {
                    key: k.clone(),
                    imag: false,
                },
                re,
            );
        }
        if !im.is_zero() {
            out.insert(
                Part {
                    key: k.clone(),
                    imag: true,
                },
                im,
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[(u32, i64)]) -> SparseVec<u32> {
        xs.iter().map(|(k, x)| (*k, Scalar::from_int(*x))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut s = Span::new();
        assert!(s.insert(v(&[(0, 1), (1, 2)])));
        assert!(s.insert(v(&[(1, 1), (2, 1)])));
        assert!(!s.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert!(s.contains(&v(&[(0, 2), (1, 4)])));
        assert!(!s.contains(&v(&[(2, 1)])));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn radical_entries() {
        let mut s = Span::new();
        let r2 = Scalar::sqrt_int(2);
        s.insert([(0u32, r2.clone()), (1, Scalar::one())].into_iter().collect());
        assert!(s.contains(&[(0u32, Scalar::from_int(2)), (1, r2)].into_iter().collect()));
    }
}
