//! Blowing a subsemilattice of `E(S)^n` up to its full `φ`-preimage in `S^n`.

use alloc::vec::Vec;

use crate::structure::{archimedean, idempotent_semilattice, ArchimedeanDecomposition};
use crate::tuple::{Tuple, TupleAlgebra};
use crate::{Error, FiniteSemigroup, Result};

/// Rewrites `U` with entries as elements of `S`, accepting either `E(S)`
/// itself or `S` as the base of `U`.
fn members_in_s(s: &FiniteSemigroup, u: &TupleAlgebra) -> Result<Vec<Tuple>> {
    let e = idempotent_semilattice(s)?;
    if u.base() == e.order.semigroup() {
        Ok(u.members().map(|t| t.iter().map(|&x| e.elements[x]).collect()).collect())
    } else if u.base() == s {
        if u.members().flatten().any(|&x| !s.is_idempotent(x)) {
            return Err(Error::Precondition("U must consist of idempotent tuples".into()));
        }
        Ok(u.members().cloned().collect())
    } else {
        Err(Error::CrossBase)
    }
}

/// `|Û| = Σ_{u∈U} Π_c |A_{u_c}|`.
pub fn hat_size(decomposition: &ArchimedeanDecomposition, members: &[Tuple]) -> usize {
    members.iter().map(|t| t.iter().map(|&e| decomposition.component_size_of_idempotent(e)).product::<usize>()).sum()
}

/// `Û = {σ ∈ S^n : φ(σ) ∈ U}` for a closed `U ⊆ E(S)^n`.
pub fn hat(s: &FiniteSemigroup, u: &TupleAlgebra, cap: usize) -> Result<TupleAlgebra> {
    if !u.is_closed() {
        return Err(Error::NotClosed);
    }
    let decomposition = archimedean(s)?;
    let members = members_in_s(s, u)?;
    let size = hat_size(&decomposition, &members);
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    let mut out = Vec::with_capacity(size);
    for t in &members {
        let choices: Vec<&[usize]> =
            t.iter().map(|&e| decomposition.components[decomposition.component_of[e]].as_slice()).collect();
        let mut odometer = alloc::vec![0usize; t.len()];
        loop {
            out.push(odometer.iter().zip(&choices).map(|(&i, c)| c[i]).collect());
            let Some(c) = (0..t.len()).rev().find(|&c| odometer[c] + 1 < choices[c].len()) else {
                break;
            };
            odometer[c] += 1;
            odometer[c + 1..].fill(0);
        }
    }
    TupleAlgebra::new(s.clone(), u.arity(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::semigroup::DEFAULT_SIZE_CAP;
    use crate::structure::idempotents;

    fn idempotent_tuples(t: &TupleAlgebra) -> Vec<Tuple> {
        t.members().filter(|m| t.mul(m, m) == **m).cloned().collect()
    }

    #[test]
    fn singleton_components_change_nothing() {
        let l2 = catalog::get("L2").unwrap();
        let u = TupleAlgebra::new(l2.clone(), 2, [vec![0, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(hat(&l2, &u, DEFAULT_SIZE_CAP).unwrap(), u);
    }

    #[test]
    fn two_idempotent_example() {
        let s = catalog::get("SL2N").unwrap();
        let e = idempotent_semilattice(&s).unwrap();
        let whole = TupleAlgebra::diagonal(e.order.semigroup().clone(), 1).unwrap();
        let h = hat(&s, &whole, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(h.len(), s.order());

        let (zero, one) = (s.index_of("0").unwrap(), s.index_of("1").unwrap());
        let u = TupleAlgebra::new(s.clone(), 2, [vec![zero, zero], vec![zero, one], vec![one, one]]).unwrap();
        let h = hat(&s, &u, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(h.len(), 7);
        assert!(h.is_closed());
        assert!(h.is_subdirect().unwrap());
        assert_eq!(idempotent_tuples(&h), u.members().cloned().collect::<Vec<_>>());
        assert_eq!(idempotents(&s).len(), 2);
    }

    #[test]
    fn rejects_open_or_foreign_inputs() {
        let s = catalog::get("SL2N").unwrap();
        let a = s.index_of("a").unwrap();
        let u = TupleAlgebra::new(s.clone(), 1, [vec![a]]).unwrap();
        assert!(hat(&s, &u, DEFAULT_SIZE_CAP).is_err());
        let z3 = catalog::get("Z3").unwrap();
        let foreign = TupleAlgebra::diagonal(z3, 1).unwrap();
        assert!(hat(&s, &foreign, DEFAULT_SIZE_CAP).is_err());
        let l2 = catalog::get("L2").unwrap();
        let full = TupleAlgebra::new(l2.clone(), 3, (0..8).map(|i| vec![i >> 2 & 1, i >> 1 & 1, i & 1])).unwrap();
        assert_eq!(hat(&l2, &full, 4), Err(Error::SizeCap { size: 8, cap: 4 }));
    }
}
