//! Antichains of integer vectors under the componentwise order.
//!
//! A [`Frontier`] holds the minimal elements of some up-closed set. It is a
//! flat, lexicographically sorted `Vec` with linear dominance scans.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub type IntVec = Vec<BigInt>;

/// `a <= b` componentwise. Lengths must agree.
pub fn leq(a: &[BigInt], b: &[BigInt]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Componentwise maximum.
pub fn join(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| if x >= y { x.clone() } else { y.clone() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frontier {
    dim: usize,
    elems: Vec<IntVec>,
}

impl Frontier {
    pub fn new(dim: usize) -> Self {
        Frontier { dim, elems: Vec::new() }
    }

    /// Minimal elements of an arbitrary collection of vectors.
    pub fn from_vectors<I>(dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = IntVec>,
    {
        let mut all: Vec<(BigInt, IntVec)> = Vec::new();
        for v in vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
            all.push((v.iter().sum(), v));
        }
        all.sort_unstable();
        all.dedup_by(|a, b| a.1 == b.1);
        if dim == 0 {
            return Ok(Frontier { dim, elems: all.into_iter().map(|(_, v)| v).collect() });
        }
        // a vector can only be dominated by one with a smaller coordinate sum,
        // so everything accepted so far is final
        let small: Option<Vec<Vec<u64>>> =
            all.iter().map(|(_, v)| v.iter().map(|x| x.to_u64()).collect::<Option<Vec<_>>>()).collect();
        let mut kept: Vec<IntVec> = Vec::new();
        if let Some(small) = small {
            let mut index = SmallTrie::new();
            for ((_, v), sv) in all.into_iter().zip(small) {
                if !index.has_leq(0, &sv) {
                    index.insert(&sv);
                    kept.push(v);
                }
            }
        } else {
            let mut index = Trie::default();
            for (_, v) in all {
                if !index.has_leq(&v) {
                    index.insert(&v);
                    kept.push(v);
                }
            }
        }
        kept.sort_unstable();
        Ok(Frontier { dim, elems: kept })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVec> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[IntVec] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<IntVec> {
        self.elems
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.elems.binary_search_by(|e| e.as_slice().cmp(v)).is_ok()
    }

    fn check(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// True iff some element is `<= v`.
    pub fn dominates_some(&self, v: &[BigInt]) -> Result<bool> {
        self.check(v)?;
        Ok(self.elems.iter().any(|u| leq(u, v)))
    }

    /// Insert `v` unless it is already dominated; drops every element `>= v`.
    /// Returns whether `v` was inserted.
    pub fn insert_min(&mut self, v: IntVec) -> Result<bool> {
        self.check(&v)?;
        if self.elems.iter().any(|u| leq(u, &v)) {
            return Ok(false);
        }
        self.elems.retain(|u| !leq(&v, u));
        let pos = self.elems.binary_search(&v).unwrap_err();
        self.elems.insert(pos, v);
        Ok(true)
    }

    /// Minimal elements of the union.
    pub fn merge(&self, other: &Frontier) -> Result<Frontier> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Frontier::from_vectors(self.dim, self.elems.iter().chain(&other.elems).cloned())
    }

    /// Minimal elements of `{join(a, b) : a in self, b in other}`, i.e. the
    /// generators of the intersection of the two up-sets.
    pub fn meet_upsets(&self, other: &Frontier) -> Result<Frontier> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in &self.elems {
            for b in &other.elems {
                out.push(join(a, b));
            }
        }
        Frontier::from_vectors(self.dim, out)
    }

    /// Retain elements satisfying `keep`. The result is still an antichain.
    pub fn filter<F: FnMut(&IntVec) -> bool>(&self, mut keep: F) -> Frontier {
        Frontier { dim: self.dim, elems: self.elems.iter().filter(|v| keep(v)).cloned().collect() }
    }

    pub fn is_antichain(&self) -> bool {
        self.elems.iter().enumerate().all(|(i, a)| {
            self.elems.iter().enumerate().all(|(j, b)| i == j || !leq(a, b))
        })
    }
}

/// Prefix tree over coordinates answering "is some stored vector <= v".
#[derive(Default)]
struct Trie {
    children: BTreeMap<BigInt, Trie>,
}

impl Trie {
    fn insert(&mut self, v: &[BigInt]) {
        let mut node = self;
        for x in v {
            node = node.children.entry(x.clone()).or_default();
        }
    }

    fn has_leq(&self, v: &[BigInt]) -> bool {
        match v.split_first() {
            None => true,
            Some((x, rest)) => self.children.range(..=x).any(|(_, child)| child.has_leq(rest)),
        }
    }
}

/// Arena version of [`Trie`] for vectors that fit in `u64`.
struct SmallTrie {
    /// children of each node, sorted by key
    nodes: Vec<Vec<(u64, u32)>>,
}

impl SmallTrie {
    fn new() -> Self {
        SmallTrie { nodes: vec![Vec::new()] }
    }

    fn insert(&mut self, v: &[u64]) {
        let mut node = 0usize;
        for &x in v {
            let kids = &self.nodes[node];
            node = match kids.binary_search_by_key(&x, |&(k, _)| k) {
                Ok(i) => kids[i].1 as usize,
                Err(i) => {
                    let id = self.nodes.len();
                    self.nodes[node].insert(i, (x, id as u32));
                    self.nodes.push(Vec::new());
                    id
                }
            };
        }
    }

    fn has_leq(&self, node: usize, v: &[u64]) -> bool {
        match v.split_first() {
            None => true,
            Some((&x, rest)) => self.nodes[node]
                .iter()
                .take_while(|&&(k, _)| k <= x)
                .any(|&(_, child)| self.has_leq(child as usize, rest)),
        }
    }
}

impl<'a> IntoIterator for &'a Frontier {
    type Item = &'a IntVec;
    type IntoIter = std::slice::Iter<'a, IntVec>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}
