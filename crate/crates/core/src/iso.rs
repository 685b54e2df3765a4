//! Isomorphism invariants and a backtracking isomorphism oracle.
//!
//! The oracle maps elements of `A` to elements of `B` one at a time. Every
//! assignment is propagated through products: once `x ↦ y` and `z ↦ w` are
//! fixed, `xz ↦ yw` and `zx ↦ wy` are forced, and a clash ends the branch.
//! Candidates are restricted to elements with equal [`ElementProfile`], tried
//! in ascending index order so that the result is reproducible.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::{Elem, FiniteSemigroup, Monogenic};
use crate::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Local invariants of one element.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ElementProfile {
    pub idempotent: bool,
    pub monogenic: Monogenic,
    /// `|Div_S(s)|`, the number of left divisors.
    pub divisors: usize,
    /// `|sS|`, the number of elements `s` left-divides.
    pub divides: usize,
}

/// Isomorphism-invariant summary of a semigroup.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Fingerprint {
    pub order: usize,
    pub idempotents: usize,
    /// Sorted multiset of element profiles.
    pub profiles: Vec<ElementProfile>,
}

pub fn element_profiles(s: &FiniteSemigroup) -> Vec<ElementProfile> {
    let n = s.order();
    let mut divisors = vec![0usize; n];
    let mut divides = vec![0usize; n];
    let mut seen = vec![usize::MAX; n];
    for t in s.elements() {
        for &p in s.row(t) {
            if seen[p] != t {
                seen[p] = t;
                divisors[p] += 1;
                divides[t] += 1;
            }
        }
    }
    s.elements()
        .map(|x| ElementProfile {
            idempotent: s.is_idempotent(x),
            monogenic: s.monogenic(x),
            divisors: divisors[x],
            divides: divides[x],
        })
        .collect()
}

impl Fingerprint {
    pub fn of(s: &FiniteSemigroup) -> Self {
        let mut profiles = element_profiles(s);
        profiles.sort_unstable();
        Fingerprint { order: s.order(), idempotents: profiles.iter().filter(|p| p.idempotent).count(), profiles }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    pub node_budget: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// Searches for an isomorphism `A → B` with the default node budget.
///
/// Returns `Ok(Some(map))` with `map[a]` the image of `a`, `Ok(None)` when no
/// isomorphism exists, and [`Error::BudgetExceeded`] when the search gave up.
pub fn are_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Result<Option<Vec<Elem>>> {
    find_isomorphism(a, b, IsoOptions::default())
}

pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, options: IsoOptions) -> Result<Option<Vec<Elem>>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let pa = element_profiles(a);
    let pb = element_profiles(b);
    let mut sorted_a = pa.clone();
    let mut sorted_b = pb.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let mut class_ids = BTreeMap::new();
    for p in &sorted_a {
        let next = class_ids.len();
        class_ids.entry(*p).or_insert(next);
    }
    let class_a: Vec<usize> = pa.iter().map(|p| class_ids[p]).collect();
    let class_b: Vec<usize> = pb.iter().map(|p| class_ids[p]).collect();
    let mut class_size = vec![0usize; class_ids.len()];
    for &c in &class_a {
        class_size[c] += 1;
    }
    let n = a.order();
    let mut search = Search {
        a,
        b,
        class_a,
        class_b,
        class_size,
        map: vec![UNSET; n],
        inv: vec![UNSET; n],
        trail: Vec::with_capacity(n),
        nodes: 0,
        budget: options.node_budget,
    };
    if search.extend()? {
        debug_assert!(a.is_homomorphism(b, &search.map));
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    a: &'a FiniteSemigroup,
    b: &'a FiniteSemigroup,
    class_a: Vec<usize>,
    class_b: Vec<usize>,
    class_size: Vec<usize>,
    map: Vec<Elem>,
    inv: Vec<Elem>,
    trail: Vec<Elem>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self) -> Result<bool> {
        let Some(x) = self.next_unassigned() else {
            return Ok(true);
        };
        let class = self.class_a[x];
        for y in 0..self.b.order() {
            if self.class_b[y] != class || self.inv[y] != UNSET {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let mark = self.trail.len();
            if self.assign(x, y) && self.extend()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }

    /// Unassigned element of A in the smallest profile class, lowest index first.
    fn next_unassigned(&self) -> Option<Elem> {
        (0..self.a.order()).filter(|&x| self.map[x] == UNSET).min_by_key(|&x| (self.class_size[self.class_a[x]], x))
    }

    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((p, q)) = pending.pop() {
            if self.map[p] == q {
                continue;
            }
            if self.map[p] != UNSET || self.inv[q] != UNSET || self.class_a[p] != self.class_b[q] {
                return false;
            }
            self.map[p] = q;
            self.inv[q] = p;
            self.trail.push(p);
            for &z in &self.trail {
                let w = self.map[z];
                pending.push((self.a.mul(p, z), self.b.mul(q, w)));
                pending.push((self.a.mul(z, p), self.b.mul(w, q)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().unwrap();
            self.inv[self.map[p]] = UNSET;
            self.map[p] = UNSET;
        }
    }
}
