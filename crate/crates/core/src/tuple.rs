//! Finite subsets of a direct power `S^n`, the finite shadows of subdirect powers.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::semigroup::{tuple_literal, Elem, FiniteSemigroup};
use crate::{Error, Result};

pub type Tuple = Vec<Elem>;

/// A set of n-tuples over a base semigroup, with its closure and
/// per-coordinate surjectivity recorded at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TupleAlgebra {
    base: FiniteSemigroup,
    arity: usize,
    members: BTreeSet<Tuple>,
    closed: bool,
    subdirect_coords: Vec<bool>,
}

/// Componentwise product.
pub fn tuple_mul(base: &FiniteSemigroup, a: &[Elem], b: &[Elem]) -> Tuple {
    a.iter().zip(b).map(|(&x, &y)| base.mul(x, y)).collect()
}

impl TupleAlgebra {
    pub fn new(base: FiniteSemigroup, arity: usize, members: impl IntoIterator<Item = Tuple>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Precondition("arity must be positive".into()));
        }
        let members: BTreeSet<Tuple> = members.into_iter().collect();
        for t in &members {
            if t.len() != arity {
                return Err(Error::ArityMismatch { arity, got: t.len() });
            }
            if let Some(&bad) = t.iter().find(|&&x| x >= base.order()) {
                return Err(Error::ElementOutOfRange { index: bad, order: base.order() });
            }
        }
        let closed = members.iter().all(|a| members.iter().all(|b| members.contains(&tuple_mul(&base, a, b))));
        let subdirect_coords = (0..arity)
            .map(|c| {
                let mut seen = alloc::vec![false; base.order()];
                for t in &members {
                    seen[t[c]] = true;
                }
                seen.iter().all(|&s| s)
            })
            .collect();
        Ok(TupleAlgebra { base, arity, members, closed, subdirect_coords })
    }

    /// The diagonal `{(s,…,s)}`.
    pub fn diagonal(base: FiniteSemigroup, arity: usize) -> Result<Self> {
        let members: Vec<Tuple> = base.elements().map(|s| alloc::vec![s; arity]).collect();
        Self::new(base, arity, members)
    }

    /// Closure of a set of generators under the componentwise product.
    pub fn generated(base: FiniteSemigroup, arity: usize, generators: impl IntoIterator<Item = Tuple>) -> Result<Self> {
        let mut members: Vec<Tuple> = Vec::new();
        let mut seen = BTreeSet::new();
        for g in generators {
            if seen.insert(g.clone()) {
                members.push(g);
            }
        }
        let mut next = 0;
        while next < members.len() {
            let mut i = 0;
            while i < members.len() {
                for p in [tuple_mul(&base, &members[next], &members[i]), tuple_mul(&base, &members[i], &members[next])]
                {
                    if seen.insert(p.clone()) {
                        members.push(p);
                    }
                }
                i += 1;
            }
            next += 1;
        }
        Self::new(base, arity, members)
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl ExactSizeIterator<Item = &Tuple> + '_ {
        self.members.iter()
    }

    pub fn contains(&self, t: &[Elem]) -> bool {
        self.members.contains(t)
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn subdirect_coords(&self) -> &[bool] {
        &self.subdirect_coords
    }

    /// Whether every coordinate projection is onto; only meaningful for closed algebras.
    pub fn is_subdirect(&self) -> Result<bool> {
        if !self.closed {
            return Err(Error::NotClosed);
        }
        Ok(self.subdirect_coords.iter().all(|&c| c))
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Tuple {
        tuple_mul(&self.base, a, b)
    }

    /// `t^k`, `k ≥ 1`.
    pub fn pow(&self, t: &[Elem], k: usize) -> Tuple {
        t.iter().map(|&x| self.base.pow(x, k)).collect()
    }

    /// Position of a member in the sorted member list.
    pub fn position(&self, t: &[Elem]) -> Option<usize> {
        self.members.contains(t).then(|| self.members.iter().take_while(|m| m.as_slice() < t).count())
    }

    pub fn union(&self, other: &TupleAlgebra) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::CrossBase);
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { arity: self.arity, got: other.arity });
        }
        Self::new(self.base.clone(), self.arity, self.members.iter().chain(other.members.iter()).cloned())
    }

    /// Sub-collection of members satisfying a predicate.
    pub fn filter(&self, keep: impl Fn(&Tuple) -> bool) -> Result<Self> {
        Self::new(self.base.clone(), self.arity, self.members.iter().filter(|t| keep(t)).cloned())
    }

    /// The abstract semigroup on the members, indexed in sorted member order,
    /// with tuple literals as element names.
    pub fn to_semigroup(&self) -> Result<FiniteSemigroup> {
        if !self.closed {
            return Err(Error::NotClosed);
        }
        if self.members.is_empty() {
            return Err(Error::Empty);
        }
        let list: Vec<&Tuple> = self.members.iter().collect();
        let names = list.iter().map(|t| tuple_literal(&self.base, t)).collect();
        let index = |t: &Tuple| list.binary_search(&t).expect("closed algebra");
        let rows = list.iter().map(|a| list.iter().map(|b| index(&self.mul(a, b))).collect()).collect();
        Ok(FiniteSemigroup::new_unchecked(names, rows))
    }

    /// Same algebra with coordinates permuted: coordinate `c` moves to `perm[c]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.arity {
            return Err(Error::ArityMismatch { arity: self.arity, got: perm.len() });
        }
        let members = self.members.iter().map(|t| {
            let mut out = alloc::vec![0; t.len()];
            for (c, &x) in t.iter().enumerate() {
                out[perm[c]] = x;
            }
            out
        });
        Self::new(self.base.clone(), self.arity, members)
    }

    /// Image of the algebra under a base automorphism applied in every coordinate.
    pub fn map_base(&self, target: FiniteSemigroup, map: &[Elem]) -> Result<Self> {
        if !self.base.is_homomorphism(&target, map) {
            return Err(Error::Precondition("map is not a homomorphism of the base".into()));
        }
        let members = self.members.iter().map(|t| t.iter().map(|&x| map[x]).collect());
        Self::new(target, self.arity, members)
    }
}
