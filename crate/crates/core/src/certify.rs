//! Isomorphism invariants of truncations and non-isomorphism certificates.
//!
//! All invariants are computed on the abstract semigroup of a truncation, so
//! they do not depend on how its members happen to be written as tuples.
//! [`distinguish`] tries them from cheapest to most expensive and falls back
//! to the isomorphism oracle.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::iso::{find_isomorphism, Fingerprint, IsoOptions, DEFAULT_NODE_BUDGET};
use crate::structure::minimal_ideal;
use crate::tuple::{Tuple, TupleAlgebra};
use crate::{Elem, Error, FiniteSemigroup, Result, Semilattice};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "kebab-case"))]
pub enum CertificateKind {
    DivisorSpectrum,
    RootSpectrum,
    IdempotentSemilattice,
    PrincipalIdealFilter,
    Exhaustive,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "kebab-case"))]
pub enum Verdict {
    Distinguished,
    Equivalent,
    /// The oracle ran out of budget.
    Unknown,
}

/// Divisor counts `|Div_T(t)| = |{u ∈ T : t ∈ uT}|`, the zero kept apart.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DivisorSpectrum {
    pub order: usize,
    /// Sorted counts over all elements except the zero.
    pub nonzero: Vec<usize>,
    /// Count of the zero, if there is one.
    pub zero: Option<usize>,
}

/// Counts of `(m+1)`-st roots outside the kernel, per kernel element.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RootSpectrum {
    pub exponent: usize,
    /// Kernel members of the truncation and their root counts.
    pub counts: BTreeMap<Tuple, usize>,
}

impl RootSpectrum {
    /// The sorted multiset of counts.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.counts.values().copied().collect();
        v.sort_unstable();
        v
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Evidence {
    Divisors(DivisorSpectrum),
    Roots {
        exponent: usize,
        counts: Vec<usize>,
    },
    /// Fingerprint of the idempotents, absent when they are not closed.
    Idempotents(Option<Fingerprint>),
    /// Sorted `(|e↓|, |e↑|)` over idempotents `e`.
    IdealFilter(Vec<(usize, usize)>),
    Exhaustive {
        order: usize,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub kind: CertificateKind,
    pub verdict: Verdict,
    pub left: Evidence,
    pub right: Evidence,
    /// The isomorphism found by the oracle, left members to right members.
    pub isomorphism: Option<Vec<Elem>>,
}

#[derive(Clone, Copy, Debug)]
pub struct DistinguishOptions {
    pub allow_cross_base: bool,
    pub node_budget: u64,
}

impl Default for DistinguishOptions {
    fn default() -> Self {
        DistinguishOptions { allow_cross_base: false, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// `counts[t] = |Div(t)|` for every element of `s`.
pub fn divisor_counts_of(s: &FiniteSemigroup) -> Vec<usize> {
    let mut counts = alloc::vec![0usize; s.order()];
    let mut seen = alloc::vec![usize::MAX; s.order()];
    for u in s.elements() {
        for &t in s.row(u) {
            if seen[t] != u {
                seen[t] = u;
                counts[t] += 1;
            }
        }
    }
    counts
}

pub fn divisor_spectrum_of(s: &FiniteSemigroup) -> DivisorSpectrum {
    let counts = divisor_counts_of(s);
    let zero = s.zero();
    let mut nonzero: Vec<usize> = s.elements().filter(|&t| Some(t) != zero).map(|t| counts[t]).collect();
    nonzero.sort_unstable();
    DivisorSpectrum { order: s.order(), nonzero, zero: zero.map(|z| counts[z]) }
}

/// Divisor count of every member, divisors ranging over the truncation itself.
pub fn divisor_counts(t: &TupleAlgebra) -> Result<BTreeMap<Tuple, usize>> {
    let s = t.to_semigroup()?;
    Ok(t.members().cloned().zip(divisor_counts_of(&s)).collect())
}

pub fn divisor_spectrum(t: &TupleAlgebra) -> Result<DivisorSpectrum> {
    Ok(divisor_spectrum_of(&t.to_semigroup()?))
}

/// Exponent `|G| + 1` for a base whose kernel is a group `G`.
pub fn root_exponent(base: &FiniteSemigroup) -> Option<usize> {
    let k = minimal_ideal(base);
    k.is_group.then_some(k.elements.len() + 1)
}

fn root_counts_of(s: &FiniteSemigroup, exponent: usize) -> BTreeMap<Elem, usize> {
    let kernel = minimal_ideal(s).elements;
    let mut counts: BTreeMap<Elem, usize> = kernel.iter().map(|&k| (k, 0)).collect();
    for tau in s.elements().filter(|t| kernel.binary_search(t).is_err()) {
        if let Some(c) = counts.get_mut(&s.pow(tau, exponent)) {
            *c += 1;
        }
    }
    counts
}

/// For each member `σ` of the kernel of `T`, the number of `τ` outside the
/// kernel with `τ^exponent = σ`.
pub fn root_spectrum(t: &TupleAlgebra, exponent: usize) -> Result<RootSpectrum> {
    let expected =
        root_exponent(t.base()).ok_or_else(|| Error::Precondition("the kernel of the base is not a group".into()))?;
    if exponent != expected {
        return Err(Error::ExponentMismatch { expected, given: exponent });
    }
    let s = t.to_semigroup()?;
    let members: Vec<&Tuple> = t.members().collect();
    let counts = root_counts_of(&s, exponent).into_iter().map(|(k, c)| (members[k].clone(), c)).collect();
    Ok(RootSpectrum { exponent, counts })
}

/// The idempotent members of a truncation, as a semilattice.
pub struct IdempotentPart {
    pub members: TupleAlgebra,
    pub order: Semilattice,
}

pub fn idempotent_semilattice_of(t: &TupleAlgebra) -> Result<IdempotentPart> {
    let members = t.filter(|m| t.mul(m, m) == *m)?;
    if !members.is_closed() {
        return Err(Error::NotClosed);
    }
    let order = Semilattice::new(members.to_semigroup()?)?;
    Ok(IdempotentPart { members, order })
}

fn idempotent_fingerprint(s: &FiniteSemigroup) -> Option<Fingerprint> {
    let ids: Vec<Elem> = s.elements().filter(|&x| s.is_idempotent(x)).collect();
    if !s.is_closed(&ids) {
        return None;
    }
    let (sub, _) = s.subsemigroup(&ids).ok()?;
    Some(Fingerprint::of(&sub))
}

/// Sizes of principal ideals and filters of idempotents under
/// `f ≤ e ⇔ ef = fe = f`.
pub fn ideal_filter_profile(s: &FiniteSemigroup) -> Vec<(usize, usize)> {
    let ids: Vec<Elem> = s.elements().filter(|&x| s.is_idempotent(x)).collect();
    let leq = |f: Elem, e: Elem| s.mul(e, f) == f && s.mul(f, e) == f;
    let mut profile: Vec<(usize, usize)> = ids
        .iter()
        .map(|&e| (ids.iter().filter(|&&f| leq(f, e)).count(), ids.iter().filter(|&&f| leq(e, f)).count()))
        .collect();
    profile.sort_unstable();
    profile
}

fn distinguished(kind: CertificateKind, left: Evidence, right: Evidence) -> Certificate {
    Certificate { kind, verdict: Verdict::Distinguished, left, right, isomorphism: None }
}

/// Tries, in order, the divisor spectrum (which already separates different
/// sizes), root spectra when both bases have a group kernel, the idempotent
/// semilattice, the ideal/filter profile, and finally the isomorphism oracle.
pub fn distinguish(t1: &TupleAlgebra, t2: &TupleAlgebra, options: DistinguishOptions) -> Result<Certificate> {
    if t1.base() != t2.base() && !options.allow_cross_base {
        return Err(Error::CrossBase);
    }
    let a = t1.to_semigroup()?;
    let b = t2.to_semigroup()?;
    let exponents = root_exponent(t1.base()).zip(root_exponent(t2.base()));
    distinguish_semigroups(&a, &b, exponents, options.node_budget)
}

/// [`distinguish`] for abstract semigroups; `root_exponents` enables the root
/// spectrum with the given exponent on each side.
pub fn distinguish_semigroups(
    a: &FiniteSemigroup,
    b: &FiniteSemigroup,
    root_exponents: Option<(usize, usize)>,
    node_budget: u64,
) -> Result<Certificate> {
    use CertificateKind as K;

    let (da, db) = (divisor_spectrum_of(a), divisor_spectrum_of(b));
    if da != db {
        return Ok(distinguished(K::DivisorSpectrum, Evidence::Divisors(da), Evidence::Divisors(db)));
    }
    if let Some((ea, eb)) = root_exponents {
        let multiset = |s: &FiniteSemigroup, e: usize| {
            let mut v: Vec<usize> = root_counts_of(s, e).into_values().collect();
            v.sort_unstable();
            v
        };
        let (ra, rb) = (multiset(a, ea), multiset(b, eb));
        if ra != rb {
            return Ok(distinguished(
                K::RootSpectrum,
                Evidence::Roots { exponent: ea, counts: ra },
                Evidence::Roots { exponent: eb, counts: rb },
            ));
        }
    }
    let (ia, ib) = (idempotent_fingerprint(a), idempotent_fingerprint(b));
    if ia != ib {
        return Ok(distinguished(K::IdempotentSemilattice, Evidence::Idempotents(ia), Evidence::Idempotents(ib)));
    }
    let (pa, pb) = (ideal_filter_profile(a), ideal_filter_profile(b));
    if pa != pb {
        return Ok(distinguished(K::PrincipalIdealFilter, Evidence::IdealFilter(pa), Evidence::IdealFilter(pb)));
    }
    let exhaustive = |verdict, isomorphism| Certificate {
        kind: K::Exhaustive,
        verdict,
        left: Evidence::Exhaustive { order: a.order() },
        right: Evidence::Exhaustive { order: b.order() },
        isomorphism,
    };
    if a.rows() == b.rows() {
        return Ok(exhaustive(Verdict::Equivalent, Some(a.elements().collect())));
    }
    Ok(match find_isomorphism(a, b, IsoOptions { node_budget }) {
        Ok(Some(map)) => exhaustive(Verdict::Equivalent, Some(map)),
        Ok(None) => exhaustive(Verdict::Distinguished, None),
        Err(Error::BudgetExceeded { .. }) => exhaustive(Verdict::Unknown, None),
        Err(e) => return Err(e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructions::{t_m, w_m};
    use crate::semigroup::DEFAULT_SIZE_CAP;

    fn l2_square(members: &[[usize; 2]]) -> TupleAlgebra {
        let l2 = catalog::get("L2").unwrap();
        TupleAlgebra::new(l2, 2, members.iter().map(|m| m.to_vec())).unwrap()
    }

    #[test]
    fn nil3_divisor_spectrum() {
        let nil3 = catalog::get("NIL3").unwrap();
        let f = t_m(&nil3, &"3k".parse().unwrap(), 1, 4).unwrap();
        let spec = divisor_spectrum(&f.truncation).unwrap();
        assert_eq!(spec.nonzero.iter().filter(|&&c| c == 4).count(), 1);
        assert_eq!(spec.nonzero.iter().filter(|&&c| c == 0).count(), 3 + 4);
    }

    #[test]
    fn three_chain_spectrum() {
        let sl3 = catalog::get("SL3").unwrap();
        let t = TupleAlgebra::diagonal(sl3, 1).unwrap();
        let spec = divisor_spectrum(&t).unwrap();
        // in a chain, u divides t iff u ≥ t
        assert_eq!(spec, DivisorSpectrum { order: 3, nonzero: vec![1, 2], zero: Some(3) });
    }

    #[test]
    fn chain_versus_v() {
        let chain = l2_square(&[[0, 0], [0, 1], [1, 1]]);
        let v = l2_square(&[[0, 0], [0, 1], [1, 0]]);
        let c = distinguish(&chain, &v, DistinguishOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Distinguished);
        assert_eq!(c.kind, CertificateKind::DivisorSpectrum);
        let same = distinguish(&chain, &chain, DistinguishOptions::default()).unwrap();
        assert_eq!(same.verdict, Verdict::Equivalent);
        assert_eq!(same.isomorphism, Some(vec![0, 1, 2]));
        let other = l2_square(&[[0, 0], [1, 0], [1, 1]]);
        let c = distinguish(&chain, &other, DistinguishOptions::default()).unwrap();
        assert_eq!((c.kind, c.verdict), (CertificateKind::Exhaustive, Verdict::Equivalent));
    }

    #[test]
    fn cross_base_needs_the_flag() {
        let t1 = TupleAlgebra::diagonal(catalog::get("L2").unwrap(), 1).unwrap();
        let t2 = TupleAlgebra::diagonal(catalog::get("Z2").unwrap(), 1).unwrap();
        assert_eq!(distinguish(&t1, &t2, DistinguishOptions::default()), Err(Error::CrossBase));
        let opts = DistinguishOptions { allow_cross_base: true, ..Default::default() };
        assert_eq!(distinguish(&t1, &t2, opts).unwrap().verdict, Verdict::Distinguished);
    }

    #[test]
    fn gn3_roots() {
        let gn3 = catalog::get("GN3").unwrap();
        let f = w_m(&gn3, &">=4".parse().unwrap(), 1, 5, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(root_exponent(&gn3), Some(3));
        assert_eq!(root_spectrum(&f.truncation, 4), Err(Error::ExponentMismatch { expected: 3, given: 4 }));
        let r = root_spectrum(&f.truncation, 3).unwrap();
        let (g, e) = (1, 0);
        assert_eq!(r.counts[&vec![g, e, e, e, e]], 4);
        assert_eq!(r.counts[&vec![e; 5]], 1);
        let big: Vec<usize> = r.multiset().into_iter().filter(|&c| c > 3).collect();
        assert_eq!(big, [4]);
    }

    #[test]
    fn idempotent_part() {
        let v = l2_square(&[[0, 0], [0, 1], [1, 0]]);
        let part = idempotent_semilattice_of(&v).unwrap();
        assert_eq!(part.members, v);
        let nil3 = catalog::get("NIL3").unwrap();
        let f = t_m(&nil3, &"3k".parse().unwrap(), 1, 4).unwrap();
        assert_eq!(idempotent_semilattice_of(&f.truncation).unwrap().members.len(), 1);
    }
}
