//! Recurring elements of `L₂^ℕ` and finite chains of them.

use alloc::vec::Vec;

use crate::seq::{lcm, EpSeq};
use crate::tuple::TupleAlgebra;
use crate::{Elem, Error, FiniteSemigroup, Result};

fn l2_word(s: &EpSeq) -> Result<&[Elem]> {
    if !s.is_recurring() {
        return Err(Error::Precondition("expected a recurring element".into()));
    }
    if let Some(&bad) = s.per().iter().find(|&&x| x > 1) {
        return Err(Error::ElementOutOfRange { index: bad, order: 2 });
    }
    Ok(s.per())
}

/// A recurring `γ̄` with `ᾱ < γ̄ < β̄`.
///
/// Both words are repeated to a common length `k`; with `j` the first
/// position where `α` has 0 and `β` has 1, `γ` is `α` followed by `α` with
/// position `j` raised to 1.
pub fn between(alpha: &EpSeq, beta: &EpSeq) -> Result<EpSeq> {
    let (a, b) = (l2_word(alpha)?, l2_word(beta)?);
    let k = lcm(a.len(), b.len()).ok_or(Error::NotStrictlyComparable)?;
    let a: Vec<Elem> = (0..k).map(|i| a[i % a.len()]).collect();
    let b: Vec<Elem> = (0..k).map(|i| b[i % b.len()]).collect();
    if a.iter().zip(&b).any(|(&x, &y)| x > y) {
        return Err(Error::NotStrictlyComparable);
    }
    let j = a.iter().zip(&b).position(|(&x, &y)| x < y).ok_or(Error::NotStrictlyComparable)?;
    let mut gamma = a.clone();
    gamma.extend_from_slice(&a);
    gamma[k + j] = 1;
    EpSeq::recurring(gamma)
}

/// A chain `0̄ = c₁ < … < c_k = 1̄` of recurring elements.
///
/// Each step splits the shallowest gap, leftmost first, so the chain is the
/// first `k` points of a dyadic subdivision.
pub fn build_chain(k: usize) -> Result<Vec<EpSeq>> {
    if k < 2 {
        return Err(Error::InvalidParams("a chain needs at least two points".into()));
    }
    let mut chain = alloc::vec![EpSeq::constant(0), EpSeq::constant(1)];
    // depth[i] belongs to the gap between chain[i] and chain[i + 1]
    let mut depth = alloc::vec![0usize];
    while chain.len() < k {
        let i = (0..depth.len()).min_by_key(|&i| (depth[i], i)).unwrap();
        let gamma = between(&chain[i], &chain[i + 1])?;
        chain.insert(i + 1, gamma);
        let d = depth[i] + 1;
        depth[i] = d;
        depth.insert(i + 1, d);
    }
    Ok(chain)
}

/// Truncation of a family of recurring `{0,1}`-words to the least common
/// multiple of their periods, written over `base` with `0 ↦ zero`, `1 ↦ one`.
pub fn chain_algebra(base: &FiniteSemigroup, elements: &[EpSeq], zero: Elem, one: Elem) -> Result<TupleAlgebra> {
    let mut arity = 1;
    for s in elements {
        l2_word(s)?;
        arity = lcm(arity, s.per().len()).ok_or(Error::InvalidParams("period overflow".into()))?;
    }
    let members =
        elements.iter().map(|s| s.truncate(arity).into_iter().map(|x| if x == 0 { zero } else { one }).collect());
    TupleAlgebra::new(base.clone(), arity, members)
}
