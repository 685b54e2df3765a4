//! Inserting a subsemilattice of `{0,e}^n` into the diagonal of a semilattice.

use alloc::vec::Vec;

use crate::tuple::{Tuple, TupleAlgebra};
use crate::{Error, Result, Semilattice};

use super::require_subdirect;

/// `P̃ = P ∪ Δ_S` for `P ⊆ {0,e}^n` closed and containing `0̄` and `ē`,
/// where `e` is the minimal non-zero element of `S` of least index.
pub fn tilde(s: &Semilattice, p: &TupleAlgebra) -> Result<TupleAlgebra> {
    let zero = s.zero();
    let e = s.minimal_nonzero()?;
    if p.base() != s.semigroup() {
        return Err(Error::CrossBase);
    }
    if !p.is_closed() {
        return Err(Error::NotClosed);
    }
    let n = p.arity();
    if p.members().flatten().any(|&x| x != zero && x != e) {
        return Err(Error::Precondition("P must have entries in {0, e} only".into()));
    }
    if !p.contains(&alloc::vec![zero; n]) || !p.contains(&alloc::vec![e; n]) {
        return Err(Error::Precondition("P must contain both constant tuples".into()));
    }
    let diagonal = s.semigroup().elements().map(|x| alloc::vec![x; n]);
    let out = TupleAlgebra::new(s.semigroup().clone(), n, p.members().cloned().chain(diagonal))?;
    if !out.is_closed() {
        return Err(Error::NotClosed);
    }
    require_subdirect(&out)?;
    Ok(out)
}

/// Members of `P̃` whose principal ideal is exactly `P` and whose principal
/// filter has as many elements as `{s ∈ S : s ≥ e}`; this singles out `ē`.
pub fn tilde_discriminator(s: &Semilattice, tilde: &TupleAlgebra, p: &TupleAlgebra) -> Result<Vec<Tuple>> {
    let e = s.minimal_nonzero()?;
    let filter_size = s.principal_filter(e).len();
    let leq = |a: &Tuple, b: &Tuple| tilde.mul(a, b) == *a;
    let p_set: Vec<&Tuple> = p.members().collect();
    Ok(tilde
        .members()
        .filter(|t| {
            let ideal: Vec<&Tuple> = tilde.members().filter(|u| leq(u, t)).collect();
            let filter = tilde.members().filter(|u| leq(t, u)).count();
            ideal == p_set && filter == filter_size
        })
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructions::{build_chain, chain_algebra};

    fn semilattice(name: &str) -> Semilattice {
        Semilattice::new(catalog::get(name).unwrap()).unwrap()
    }

    fn chain_over(s: &Semilattice, k: usize) -> TupleAlgebra {
        let e = s.minimal_nonzero().unwrap();
        chain_algebra(s.semigroup(), &build_chain(k).unwrap(), s.zero(), e).unwrap()
    }

    #[test]
    fn over_l2_nothing_is_added() {
        let l2 = semilattice("L2");
        let p = chain_over(&l2, 4);
        let t = tilde(&l2, &p).unwrap();
        assert_eq!(t, p);
    }

    #[test]
    fn boolean_square_adds_two_diagonal_points() {
        let b = semilattice("L2xL2");
        let p = chain_over(&b, 3);
        assert_eq!(p.arity(), 2);
        let t = tilde(&b, &p).unwrap();
        assert_eq!(t.len(), 5);
        assert!(t.is_subdirect().unwrap());
        let e = b.minimal_nonzero().unwrap();
        assert_eq!(tilde_discriminator(&b, &t, &p).unwrap(), [vec![e, e]]);
    }

    #[test]
    fn degenerate_p_gives_the_diagonal() {
        let c = semilattice("SL3");
        let p = chain_over(&c, 2);
        let t = tilde(&c, &p).unwrap();
        assert_eq!(t, TupleAlgebra::diagonal(c.semigroup().clone(), 1).unwrap());
        assert!(crate::iso::are_isomorphic(&t.to_semigroup().unwrap(), c.semigroup()).unwrap().is_some());
    }

    #[test]
    fn preconditions() {
        let c = semilattice("SL3");
        let top = c.top().unwrap();
        let bad = TupleAlgebra::new(c.semigroup().clone(), 1, [vec![0], vec![top]]).unwrap();
        assert!(matches!(tilde(&c, &bad), Err(Error::Precondition(_))));
        let e = c.minimal_nonzero().unwrap();
        let no_zero = TupleAlgebra::new(c.semigroup().clone(), 1, [vec![e]]).unwrap();
        assert!(matches!(tilde(&c, &no_zero), Err(Error::Precondition(_))));
        assert_eq!(tilde(&semilattice("T1"), &no_zero), Err(Error::TrivialSemilattice));
    }
}
