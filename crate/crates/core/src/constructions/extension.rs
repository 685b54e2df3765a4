//! Ideal extensions of a non-trivial group by a non-trivial nilpotent
//! semigroup: the families `G^∞ ∪ Δ_S ∪ U_M`, told apart by counting roots.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::certify::CertificateKind;
use crate::seq::EpSeq;
use crate::structure::group_by_nilpotent;
use crate::tuple::{Tuple, TupleAlgebra};
use crate::{Elem, Error, FiniteSemigroup, Result};

use super::{require_subdirect, MSpec, WitnessFamily};

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct XgChoice {
    /// The kernel group `G`, in index order.
    pub kernel: Vec<Elem>,
    /// Identity of `G`, the only idempotent of `S`.
    pub e: Elem,
    /// Class of the nilpotent quotient `S/G`.
    pub class: usize,
    /// `s'₁, …, s'_{k−1}` with product outside `G`.
    pub witness: Vec<Elem>,
    pub x: Elem,
    /// `x̲ = ex`.
    pub x_under: Elem,
    /// Least element of `G` other than `x̲`.
    pub g: Elem,
}

impl XgChoice {
    /// `m = |G|`; every `h ∈ G` satisfies `h^{m+1} = h`.
    pub fn group_order(&self) -> usize {
        self.kernel.len()
    }
}

pub fn choose_xg(s: &FiniteSemigroup) -> Result<XgChoice> {
    let d = group_by_nilpotent(s)?;
    if d.group_trivial() {
        return Err(Error::Precondition("the kernel group is trivial".into()));
    }
    if d.quotient_trivial() {
        return Err(Error::Precondition("the nilpotent quotient is trivial".into()));
    }
    let k = d.quotient_class;
    let in_g = |v: Elem| d.kernel.binary_search(&v).is_ok();
    let n = s.order();
    let mut word = alloc::vec![0; k - 1];
    let (witness, x) = loop {
        let x = s.product(&word).unwrap();
        if !in_g(x) {
            break (word, x);
        }
        let c = (0..k - 1).rev().find(|&c| word[c] + 1 < n).expect("witness exists");
        word[c] += 1;
        word[c + 1..].fill(0);
    };
    let e = *d.kernel.iter().find(|&&v| s.is_idempotent(v)).unwrap();
    let x_under = s.mul(e, x);
    let g = *d.kernel.iter().find(|&&v| v != x_under).unwrap();
    Ok(XgChoice { kernel: d.kernel, e, class: k, witness, x, x_under, g })
}

/// The four closure facts behind subdirectness of `G^n ∪ Δ_S ∪ U`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ClosureBullets {
    /// `G^n` is a subsemigroup.
    pub group_part_closed: bool,
    /// `Δ_S` is a subsemigroup projecting onto every coordinate.
    pub diagonal_subdirect: bool,
    /// `G^n ∪ Δ_S` is a subsemigroup.
    pub group_and_diagonal_closed: bool,
    /// `W·U ∪ U·W ⊆ G^n`.
    pub u_products_in_group_part: bool,
}

impl ClosureBullets {
    pub fn all(&self) -> bool {
        self.group_part_closed
            && self.diagonal_subdirect
            && self.group_and_diagonal_closed
            && self.u_products_in_group_part
    }
}

fn all_tuples(letters: &[Elem], n: usize) -> Vec<Tuple> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t: Tuple| {
                letters.iter().map(move |&l| {
                    let mut t = t.clone();
                    t.push(l);
                    t
                })
            })
            .collect();
    }
    out
}

fn closed(s: &FiniteSemigroup, set: &BTreeSet<Tuple>) -> bool {
    set.iter().all(|a| set.iter().all(|b| set.contains(&crate::tuple::tuple_mul(s, a, b))))
}

/// Checks the four facts by exhaustive products over the truncation.
pub fn closure_bullets(s: &FiniteSemigroup, xg: &XgChoice, w: &TupleAlgebra) -> ClosureBullets {
    let n = w.arity();
    let in_g = |t: &Tuple| t.iter().all(|v| xg.kernel.binary_search(v).is_ok());
    let group: BTreeSet<Tuple> = w.members().filter(|t| in_g(t)).cloned().collect();
    let diagonal: BTreeSet<Tuple> = s.elements().map(|v| alloc::vec![v; n]).collect();
    let both: BTreeSet<Tuple> = group.union(&diagonal).cloned().collect();
    let u: Vec<&Tuple> = w.members().filter(|t| !both.contains(*t)).collect();
    let diagonal_alg = TupleAlgebra::new(s.clone(), n, diagonal.iter().cloned());
    ClosureBullets {
        group_part_closed: group.len() == xg.kernel.len().pow(n as u32) && closed(s, &group),
        diagonal_subdirect: diagonal_alg.and_then(|d| d.is_subdirect()).unwrap_or(false),
        group_and_diagonal_closed: closed(s, &both),
        u_products_in_group_part: u.iter().all(|a| w.members().all(|b| in_g(&w.mul(a, b)) && in_g(&w.mul(b, a)))),
    }
}

/// Truncation to `arity` coordinates of `W_M = G^∞ ∪ Δ_S ∪ U_M`, with `U_M`
/// cut down to `p ≤ p_count`.
pub fn w_m(s: &FiniteSemigroup, m: &MSpec, p_count: usize, arity: usize, cap: usize) -> Result<WitnessFamily> {
    let xg = choose_xg(s)?;
    if p_count == 0 {
        return Err(Error::InvalidParams("P count must be positive".into()));
    }
    let order = s.order();
    let m_values = m.values(p_count);
    if let Some(&bad) = m_values.iter().find(|&&v| v <= order) {
        return Err(Error::InadmissibleM { value: bad, reason: alloc::format!("must exceed |S| = {order}") });
    }
    let required = m_values.iter().enumerate().map(|(p, &mp)| p + 1 + mp).max().unwrap();
    if arity < required {
        return Err(Error::ArityTooSmall { required, given: arity });
    }
    let group_size = u32::try_from(arity)
        .ok()
        .and_then(|a| xg.group_order().checked_pow(a))
        .filter(|&size| size <= cap)
        .ok_or(Error::SizeCap { size: xg.group_order().saturating_pow(arity as u32), cap })?;
    let mg = xg.group_order();
    if s.pow(xg.x, mg + 1) != s.pow(xg.x_under, mg + 1) {
        return Err(Error::Precondition("x^(m+1) differs from (ex)^(m+1)".into()));
    }

    let mut generators: Vec<EpSeq> = s.elements().map(EpSeq::constant).collect();
    for (p, &mp) in m_values.iter().enumerate() {
        for q in 1..=mp {
            let mut pre = alloc::vec![xg.e; p];
            pre.push(xg.g);
            pre.extend(core::iter::repeat_n(xg.x, q));
            generators.push(EpSeq::new(pre, alloc::vec![xg.x_under])?);
        }
    }
    let mut members = all_tuples(&xg.kernel, arity);
    debug_assert_eq!(members.len(), group_size);
    members.extend(generators.iter().map(|g| g.truncate(arity)));
    let truncation = TupleAlgebra::new(s.clone(), arity, members)?;
    if !closure_bullets(s, &xg, &truncation).all() || !truncation.is_closed() {
        return Err(Error::NotClosed);
    }
    require_subdirect(&truncation)?;
    Ok(WitnessFamily {
        label: alloc::format!("W_M M={m} P={p_count} n={arity}"),
        generators,
        truncation,
        hook: CertificateKind::RootSpectrum,
        m_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::semigroup::DEFAULT_SIZE_CAP;

    #[test]
    fn xg_choices() {
        let gn3 = catalog::get("GN3").unwrap();
        let c = choose_xg(&gn3).unwrap();
        let name = |v| gn3.name(v);
        assert_eq!((name(c.x), name(c.x_under), name(c.g)), ("a", "e", "g"));
        assert_eq!(c.group_order(), 2);
        // x^(m+1) = x̲^(m+1)
        assert_eq!(gn3.pow(c.x, 3), gn3.pow(c.x_under, 3));

        let zn = catalog::get("Z2xN2").unwrap();
        let c = choose_xg(&zn).unwrap();
        assert!(!c.kernel.contains(&c.x));
        assert_eq!(c.x_under, zn.mul(c.e, c.x));
        assert!(c.kernel.contains(&c.g) && c.g != c.x_under);

        assert!(choose_xg(&catalog::get("Z3").unwrap()).is_err());
        assert!(choose_xg(&catalog::get("NIL3").unwrap()).is_err());
    }

    #[test]
    fn gn3_family() {
        let gn3 = catalog::get("GN3").unwrap();
        let f = w_m(&gn3, &">=4".parse().unwrap(), 1, 5, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(f.m_values, [4]);
        // G^5, the non-group diagonal point, and four U-tuples
        assert_eq!(f.truncation.len(), 32 + 1 + 4);
        let c = choose_xg(&gn3).unwrap();
        let bullets = closure_bullets(&gn3, &c, &f.truncation);
        assert!(bullets.all());
        let u = EpSeq::new(vec![c.g, c.x], vec![c.x_under]).unwrap().truncate(5);
        let cube = f.truncation.pow(&u, 3);
        assert_eq!(cube, [c.g, c.x_under, c.x_under, c.x_under, c.x_under]);
    }

    #[test]
    fn admissibility() {
        let gn3 = catalog::get("GN3").unwrap();
        assert!(matches!(
            w_m(&gn3, &">=3".parse().unwrap(), 1, 9, DEFAULT_SIZE_CAP),
            Err(Error::InadmissibleM { value: 3, .. })
        ));
        assert_eq!(
            w_m(&gn3, &"[4,5;+1]".parse().unwrap(), 2, 6, DEFAULT_SIZE_CAP).unwrap_err(),
            Error::ArityTooSmall { required: 7, given: 6 }
        );
        assert!(matches!(w_m(&gn3, &">=4".parse().unwrap(), 1, 13, DEFAULT_SIZE_CAP), Err(Error::SizeCap { .. })));
    }
}
