//! Census of all subdirect subsemigroups of a small direct power.
//!
//! Closed subsets of `S^n` are generated by closing `C ∪ {x}` for every
//! closed `C` already found, starting from the empty set, with subsets held
//! as bitmasks. Subdirectness is checked last, then the survivors are sorted
//! into isomorphism classes by fingerprint and the oracle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::iso::{find_isomorphism, Fingerprint, IsoOptions};
use crate::tuple::{Tuple, TupleAlgebra};
use crate::{Error, FiniteSemigroup, Result};

pub const DEFAULT_CENSUS_CAP: usize = 16;
const MASK_BITS: usize = 64;

#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CensusResult {
    pub base: FiniteSemigroup,
    pub arity: usize,
    /// Number of closed subsets of `S^n` projecting onto every coordinate.
    pub total: usize,
    /// One representative per isomorphism class, smallest first.
    pub representatives: Vec<TupleAlgebra>,
    /// Size of the class of each representative.
    pub class_sizes: Vec<usize>,
}

impl CensusResult {
    pub fn classes(&self) -> usize {
        self.representatives.len()
    }
}

struct Universe {
    tuples: Vec<Tuple>,
    product: Vec<u8>,
}

impl Universe {
    fn new(s: &FiniteSemigroup, arity: usize) -> Self {
        let mut tuples: Vec<Tuple> = alloc::vec![Vec::new()];
        for _ in 0..arity {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    s.elements().map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        let n = tuples.len();
        let index: BTreeMap<&Tuple, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut product = alloc::vec![0u8; n * n];
        for (i, a) in tuples.iter().enumerate() {
            for (j, b) in tuples.iter().enumerate() {
                product[i * n + j] = index[&crate::tuple::tuple_mul(s, a, b)] as u8;
            }
        }
        Universe { tuples, product }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.tuples.len() + b] as usize
    }

    /// Closure of `closed ∪ {x}` where `closed` is already product-closed.
    fn add(&self, closed: u64, x: usize) -> u64 {
        let mut set = closed;
        let mut work = alloc::vec![x];
        set |= 1 << x;
        while let Some(p) = work.pop() {
            let mut q_bits = set;
            while q_bits != 0 {
                let q = q_bits.trailing_zeros() as usize;
                q_bits &= q_bits - 1;
                for r in [self.mul(p, q), self.mul(q, p)] {
                    if set & (1 << r) == 0 {
                        set |= 1 << r;
                        work.push(r);
                    }
                }
            }
        }
        set
    }
}

/// All closed subsets of `S^n`, as bitmasks over the lexicographic tuple order.
fn closed_subsets(u: &Universe) -> BTreeSet<u64> {
    let n = u.tuples.len();
    let mut found = BTreeSet::new();
    let mut frontier = alloc::vec![0u64];
    while let Some(c) = frontier.pop() {
        for x in (0..n).filter(|&x| c & (1 << x) == 0) {
            let d = u.add(c, x);
            if found.insert(d) {
                frontier.push(d);
            }
        }
    }
    found
}

pub fn enumerate_subdirect(s: &FiniteSemigroup, arity: usize, cap: usize) -> Result<CensusResult> {
    let size = u32::try_from(arity)
        .ok()
        .and_then(|a| s.order().checked_pow(a))
        .filter(|&size| size <= cap.min(MASK_BITS))
        .ok_or(Error::SizeCap { size: s.order().saturating_pow(arity as u32), cap: cap.min(MASK_BITS) })?;
    if arity == 0 {
        return Err(Error::InvalidParams("arity must be positive".into()));
    }
    let u = Universe::new(s, arity);
    debug_assert_eq!(u.tuples.len(), size);
    let onto = |mask: u64| {
        (0..arity).all(|c| {
            let mut seen = alloc::vec![false; s.order()];
            (0..size).filter(|&i| mask & (1 << i) != 0).for_each(|i| seen[u.tuples[i][c]] = true);
            seen.iter().all(|&b| b)
        })
    };
    let mut subdirect: Vec<u64> = closed_subsets(&u).into_iter().filter(|&m| onto(m)).collect();
    subdirect.sort_by_key(|&m| (m.count_ones(), m));
    let total = subdirect.len();

    let mut buckets: BTreeMap<Fingerprint, Vec<(FiniteSemigroup, usize)>> = BTreeMap::new();
    let mut representatives: Vec<TupleAlgebra> = Vec::new();
    let mut class_sizes: Vec<usize> = Vec::new();
    for mask in subdirect {
        let members = (0..size).filter(|&i| mask & (1 << i) != 0).map(|i| u.tuples[i].clone());
        let algebra = TupleAlgebra::new(s.clone(), arity, members)?;
        let abstract_ = algebra.to_semigroup()?;
        let bucket = buckets.entry(Fingerprint::of(&abstract_)).or_default();
        let mut class = None;
        for (rep, id) in bucket.iter() {
            if find_isomorphism(rep, &abstract_, IsoOptions::default())?.is_some() {
                class = Some(*id);
                break;
            }
        }
        match class {
            Some(id) => class_sizes[id] += 1,
            None => {
                bucket.push((abstract_, representatives.len()));
                representatives.push(algebra);
                class_sizes.push(1);
            }
        }
    }
    Ok(CensusResult { base: s.clone(), arity, total, representatives, class_sizes })
}
